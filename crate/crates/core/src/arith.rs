//! Classical arithmetic functions and the generic evaluators for
//! additive / multiplicative / strongly additive / strongly multiplicative
//! functions built from prime(-power) kernels.

use alloc::string::String;
use core::cmp::Ordering;

use crate::error::Error;
use crate::math;
use crate::primes::Factorization;
use crate::Result;

/// Number of distinct prime divisors; 0 for `n = 1`.
pub fn omega(f: &Factorization) -> u32 {
    f.factors.len() as u32
}

/// Sum of prime-power exponents; 0 for `n = 1`.
pub fn big_omega(f: &Factorization) -> u32 {
    f.factors.iter().map(|&(_, a)| a).sum()
}

/// Euler totient, exact: `φ(n) = Π p^(α-1) (p-1)`, with `φ(1) = 1`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, a)| p.pow(a - 1) * (p - 1))
        .product()
}

/// Totient of a single prime power.
pub fn phi_prime_power(p: u64, alpha: u32) -> Result<u64> {
    p.checked_pow(alpha - 1)
        .and_then(|q| q.checked_mul(p - 1))
        .ok_or(Error::Overflow)
}

/// `σ_k(p^α) = 1 + p^k + … + p^(αk)`, exact with overflow detection.
///
/// The geometric sum is accumulated term by term instead of through the
/// closed-form quotient so it only overflows when the value itself does.
pub fn sigma_k_prime_power(p: u64, alpha: u32, k: u32) -> Result<u64> {
    if k == 0 {
        return Ok(alpha as u64 + 1);
    }
    let step = checked_pow(p, k)?;
    let mut term = 1u64;
    let mut sum = 1u64;
    for _ in 0..alpha {
        term = term.checked_mul(step).ok_or(Error::Overflow)?;
        sum = sum.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

/// Sum of k-th powers of the divisors of `n`, exact. `k = 0` gives the
/// divisor count `τ(n)`.
pub fn sigma_k(f: &Factorization, k: u32) -> Result<u64> {
    let mut acc = 1u64;
    for &(p, a) in &f.factors {
        let part = sigma_k_prime_power(p, a, k)?;
        acc = acc.checked_mul(part).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Divisor count `τ(n) = Π (α + 1)`, exact.
pub fn tau(f: &Factorization) -> u64 {
    f.factors.iter().map(|&(_, a)| a as u64 + 1).product()
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// A named real-valued function of a prime power `(p, α)`.
///
/// These drive the additive/multiplicative sandwich bounds, where the
/// function's value at `p^α` is compared against its value at `p`. The
/// integer-valued members also evaluate exactly for integer-mode checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerKernel {
    /// `ln φ(p^α)`
    LnPhi,
    /// `ln(τ(p^α) / p^α)`
    LnTauOverId,
    /// `σ_k(p^α)` for a fixed `k`
    SigmaK(u32),
    /// `τ(p^α) = α + 1`
    Tau,
    /// `φ(p^α)`
    Phi,
    /// exponent kernel `(p, α) ↦ α`, summing to `Ω(n)`
    BigOmega,
}

impl PowerKernel {
    pub fn id(&self) -> String {
        use alloc::string::ToString;
        match self {
            PowerKernel::LnPhi => "ln_phi".to_string(),
            PowerKernel::LnTauOverId => "ln_tau_over_p".to_string(),
            PowerKernel::SigmaK(k) => alloc::format!("sigma_k:{k}"),
            PowerKernel::Tau => "tau".to_string(),
            PowerKernel::Phi => "phi".to_string(),
            PowerKernel::BigOmega => "big_omega".to_string(),
        }
    }

    pub fn eval(&self, p: u64, alpha: u32) -> Result<f64> {
        match self {
            PowerKernel::LnPhi => Ok(math::ln(phi_prime_power(p, alpha)? as f64)),
            PowerKernel::LnTauOverId => {
                Ok(math::ln((alpha as f64) + 1.0) - alpha as f64 * math::ln(p as f64))
            }
            PowerKernel::SigmaK(k) => Ok(sigma_k_prime_power(p, alpha, *k)? as f64),
            PowerKernel::Tau => Ok(alpha as f64 + 1.0),
            PowerKernel::Phi => Ok(phi_prime_power(p, alpha)? as f64),
            PowerKernel::BigOmega => Ok(alpha as f64),
        }
    }

    /// Exact integer value for the integer-valued kernels, `None` for the
    /// logarithmic ones.
    pub fn eval_exact(&self, p: u64, alpha: u32) -> Option<Result<u64>> {
        match self {
            PowerKernel::SigmaK(k) => Some(sigma_k_prime_power(p, alpha, *k)),
            PowerKernel::Tau => Some(Ok(alpha as u64 + 1)),
            PowerKernel::Phi => Some(phi_prime_power(p, alpha)),
            PowerKernel::BigOmega => Some(Ok(alpha as u64)),
            _ => None,
        }
    }

    /// Orders `k(p, α)` against `k(p, 1)` without float round-off: every
    /// variant reduces to an integer comparison.
    pub fn compare_power_vs_prime(&self, p: u64, alpha: u32) -> Result<Ordering> {
        if alpha == 1 {
            return Ok(Ordering::Equal);
        }
        match self {
            PowerKernel::LnPhi | PowerKernel::Phi => {
                Ok(phi_prime_power(p, alpha)?.cmp(&(p - 1)))
            }
            PowerKernel::LnTauOverId => {
                // (α+1)/p^α vs 2/p, cross-multiplied in u128.
                let lhs = (alpha as u128 + 1) * p as u128;
                let rhs = 2u128 * (p as u128).pow(alpha);
                Ok(lhs.cmp(&rhs))
            }
            PowerKernel::SigmaK(k) => {
                Ok(sigma_k_prime_power(p, alpha, *k)?.cmp(&sigma_k_prime_power(p, 1, *k)?))
            }
            PowerKernel::Tau => Ok((alpha as u64 + 1).cmp(&2)),
            PowerKernel::BigOmega => Ok((alpha as u64).cmp(&1)),
        }
    }
}

/// `Σ_{p^α || n} k(p, α)`; 0 for the empty factorization.
pub fn additive_eval(kernel: &PowerKernel, f: &Factorization) -> Result<f64> {
    let mut sum = 0.0;
    for &(p, a) in &f.factors {
        sum += kernel.eval(p, a)?;
    }
    Ok(sum)
}

/// `Π_{p^α || n} k(p, α)`; 1 for the empty factorization.
pub fn multiplicative_eval(kernel: &PowerKernel, f: &Factorization) -> Result<f64> {
    let mut prod = 1.0;
    for &(p, a) in &f.factors {
        prod *= kernel.eval(p, a)?;
    }
    Ok(prod)
}

/// `Σ_{p|n} k(p)` for a prime kernel; 0 for `n = 1`.
pub fn strongly_additive_eval(
    kernel: &crate::kernels::PrimeKernel,
    f: &Factorization,
) -> Result<f64> {
    let mut sum = 0.0;
    for p in f.primes() {
        sum += kernel.eval_checked(p)?;
    }
    Ok(sum)
}

/// `Π_{p|n} k(p)` for a prime kernel; 1 for `n = 1`.
pub fn strongly_multiplicative_eval(
    kernel: &crate::kernels::PrimeKernel,
    f: &Factorization,
) -> Result<f64> {
    let mut prod = 1.0;
    for p in f.primes() {
        prod *= kernel.eval_checked(p)?;
    }
    Ok(prod)
}
