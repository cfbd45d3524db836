//! Error type shared by every module.

use alloc::string::String;
use core::fmt;

/// What a kernel registration check found wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegistrationFault {
    /// Declared monotonicity fails at the witness prime.
    Monotonicity,
    /// Declared positivity class fails at the witness prime.
    Positivity,
    /// The declared domain threshold is not prime.
    PMinNotPrime,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Sieve limit below the smallest prime.
    LimitTooSmall { limit: u64 },
    /// `n` outside `[1, table.limit]`.
    OutOfRange { n: u64, limit: u64 },
    /// Theta query outside `[0, table.limit]`.
    ThetaRange { x: f64, limit: u64 },
    /// Prime index outside the stored prime list (1-indexed).
    PrimeIndex { k: u64, count: u64 },
    /// A prime divisor lies outside the kernel's domain.
    KernelDomain { p: u64 },
    /// Kernel value not positive where positivity is required.
    Nonpositive { p: u64 },
    /// Prime-power vs prime comparison has both signs within one `n`.
    MixedSigns,
    /// Integer overflow in exact arithmetic.
    Overflow,
    /// Forward-only state asked to move backwards.
    NotAscending { current: u64, requested: u64 },
    /// Kernel metadata failed numeric validation; `witness` is the first
    /// violating prime.
    Registration { witness: u64, fault: RegistrationFault },
    /// Assertion applied to a kernel that does not satisfy its hypotheses.
    Misuse(&'static str),
    /// Unknown kernel or assertion id.
    UnknownId(String),
}

impl Error {
    /// Skip-reason label when the error marks one `n` as inapplicable
    /// during a sweep rather than a configuration problem.
    pub fn skip_reason(&self) -> Option<&'static str> {
        match self {
            Error::KernelDomain { .. } => Some("kernel_domain"),
            Error::Nonpositive { .. } => Some("nonpositive_value"),
            Error::MixedSigns => Some("mixed_signs"),
            Error::Overflow => Some("overflow"),
            _ => None,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LimitTooSmall { limit } => {
                write!(f, "sieve limit {limit} is below 2")
            }
            Error::OutOfRange { n, limit } => {
                write!(f, "n = {n} outside table range [1, {limit}]")
            }
            Error::ThetaRange { x, limit } => {
                write!(f, "theta argument {x} outside [0, {limit}]")
            }
            Error::PrimeIndex { k, count } => {
                write!(f, "prime index {k} outside stored range (have {count} primes)")
            }
            Error::KernelDomain { p } => {
                write!(f, "prime {p} outside kernel domain")
            }
            Error::Nonpositive { p } => {
                write!(f, "kernel value at p = {p} is not positive")
            }
            Error::MixedSigns => {
                write!(f, "prime-power comparison signs are mixed within one n")
            }
            Error::Overflow => write!(f, "integer overflow in exact arithmetic"),
            Error::NotAscending { current, requested } => {
                write!(f, "tracker at n = {current} cannot move back to {requested}")
            }
            Error::Registration { witness, fault } => {
                let what = match fault {
                    RegistrationFault::Monotonicity => "monotonicity",
                    RegistrationFault::Positivity => "positivity",
                    RegistrationFault::PMinNotPrime => "domain threshold",
                };
                write!(f, "kernel {what} declaration fails at p = {witness}")
            }
            Error::Misuse(msg) => write!(f, "{msg}"),
            Error::UnknownId(id) => write!(f, "unknown id: {id}"),
        }
    }
}

impl core::error::Error for Error {}
