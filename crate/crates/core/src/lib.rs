//! Extremal bounds for strongly additive and strongly multiplicative
//! arithmetic functions, with an exhaustive range-verification harness.
//!
//! A strongly additive function sums a kernel over the distinct prime
//! divisors of `n` (`f*(n) = Σ_{p|n} f(p)`); a strongly multiplicative
//! function is the product analogue (`g*(n) = Π_{p|n} g(p)`). This crate
//! evaluates both families from prime kernels with declared analytic
//! metadata, computes the classical extremal bounds on them (upper bounds
//! through `ω(n)` and the k-th prime, lower bounds through the kernel's
//! monotonicity threshold, and the additive/multiplicative sandwich
//! bounds), and sweeps each inequality over ranges of `n`, reporting
//! violations, slack, and equality witnesses.
//!
//! The crate is `no_std` (with `alloc`); all floating-point math goes
//! through `libm` so results are reproducible across platforms. IO, CLI,
//! and report file formats live in the companion `extremal-arith-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod error;
pub mod kernels;
pub mod primes;
pub mod verify;

mod math;

pub use error::Error;
pub use primes::{Factorization, PrimeTable};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
