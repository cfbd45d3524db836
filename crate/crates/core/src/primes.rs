//! Prime infrastructure shared read-only by every other module: a
//! smallest-prime-factor sieve, factorization, nth-prime lookup, and the
//! Chebyshev theta function served from prefix sums.

use alloc::vec::Vec;

use crate::error::Error;
use crate::math;
use crate::Result;

/// Canonical decomposition of `n` into `(prime, exponent)` pairs with
/// strictly increasing primes. `n = 1` has the empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Distinct prime divisors in ascending order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Sieve-backed store answering primality, factorization, nth-prime, and
/// theta queries for all integers up to `limit`.
///
/// Construction is a single linear sieve pass; every query afterwards is a
/// pure read, so a table can be shared freely across threads.
pub struct PrimeTable {
    limit: u64,
    /// `spf[m]` is the smallest prime factor of `m` for `2 <= m <= limit`;
    /// entries 0 and 1 are unused.
    spf: Vec<u32>,
    primes: Vec<u64>,
    /// `theta_prefix[i]` = sum of `ln primes[j]` for `j <= i`, accumulated
    /// with compensated summation.
    theta_prefix: Vec<f64>,
}

impl PrimeTable {
    /// Builds the table for all `n <= limit`. Errors when `limit < 2`.
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::LimitTooSmall { limit });
        }
        if limit > u32::MAX as u64 {
            // The sieve stores smallest prime factors as u32.
            return Err(Error::OutOfRange { n: limit, limit: u32::MAX as u64 });
        }
        let size = limit as usize + 1;
        let mut spf = alloc::vec![0u32; size];
        let mut primes: Vec<u64> = Vec::new();
        for i in 2..size {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            let lead = spf[i];
            for &p in &primes {
                let p32 = p as u32;
                if p32 > lead {
                    break;
                }
                let m = match (i as u64).checked_mul(p) {
                    Some(m) if m <= limit => m as usize,
                    _ => break,
                };
                spf[m] = p32;
            }
        }

        // Compensated running sums of ln p keep the whole prefix within a
        // couple of ulps of the true value.
        let mut theta_prefix = Vec::with_capacity(primes.len());
        let mut sum = 0.0f64;
        let mut carry = 0.0f64;
        for &p in &primes {
            let term = math::ln(p as f64) - carry;
            let next = sum + term;
            carry = (next - sum) - term;
            sum = next;
            theta_prefix.push(sum);
        }

        Ok(PrimeTable { limit, spf, primes, theta_prefix })
    }

    /// Largest `n` the table can answer questions about.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Ascending list of all primes `<= limit`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of primes `<= limit`.
    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] as u64 == n
    }

    /// Smallest prime factor of `n` for `2 <= n <= limit`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        if n < 2 || n > self.limit {
            return Err(Error::OutOfRange { n, limit: self.limit });
        }
        Ok(self.spf[n as usize] as u64)
    }

    /// Canonical decomposition of `n`, `1 <= n <= limit`.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        let mut f = Factorization { n: 0, factors: Vec::new() };
        self.factorize_into(n, &mut f)?;
        Ok(f)
    }

    /// Factorizes into an existing buffer; sweep loops reuse one
    /// allocation for millions of calls.
    pub fn factorize_into(&self, n: u64, out: &mut Factorization) -> Result<()> {
        if n < 1 || n > self.limit {
            return Err(Error::OutOfRange { n, limit: self.limit });
        }
        out.n = n;
        out.factors.clear();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut alpha = 0u32;
            while m % p == 0 {
                m /= p;
                alpha += 1;
            }
            out.factors.push((p, alpha));
        }
        Ok(())
    }

    /// The k-th prime, 1-indexed: `nth_prime(1) = 2`.
    pub fn nth_prime(&self, k: u64) -> Result<u64> {
        if k == 0 || k > self.primes.len() as u64 {
            return Err(Error::PrimeIndex { k, count: self.primes.len() as u64 });
        }
        Ok(self.primes[k as usize - 1])
    }

    /// Chebyshev theta: `Σ_{p <= x} ln p`, zero below 2.
    pub fn chebyshev_theta(&self, x: f64) -> Result<f64> {
        if !(0.0..=self.limit as f64).contains(&x) {
            return Err(Error::ThetaRange { x, limit: self.limit });
        }
        if x < 2.0 {
            return Ok(0.0);
        }
        Ok(self.theta_of_nth(self.primes.partition_point(|&p| p as f64 <= x) as u64))
    }

    /// `θ(p_k)` read straight from the prefix array (`θ(p_0) = 0`).
    ///
    /// Sweeps query this once per `n` with `k = ω(n)`, so it skips the
    /// binary search `chebyshev_theta` needs for arbitrary real `x`.
    pub fn theta_of_nth(&self, k: u64) -> f64 {
        if k == 0 {
            0.0
        } else {
            self.theta_prefix[k as usize - 1]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_prime_lists() {
        let t = PrimeTable::new(10).unwrap();
        assert_eq!(t.primes(), &[2, 3, 5, 7]);
        let t = PrimeTable::new(2).unwrap();
        assert_eq!(t.primes(), &[2]);
    }

    #[test]
    fn limit_below_two_rejected() {
        assert!(matches!(PrimeTable::new(1), Err(Error::LimitTooSmall { limit: 1 })));
        assert!(matches!(PrimeTable::new(0), Err(Error::LimitTooSmall { .. })));
    }

    #[test]
    fn smallest_prime_factor_of_even() {
        let t = PrimeTable::new(30).unwrap();
        assert_eq!(t.smallest_prime_factor(30).unwrap(), 2);
    }

    #[test]
    fn spf_entries_divide_and_are_prime() {
        let t = PrimeTable::new(2000).unwrap();
        for m in 2..=2000u64 {
            let p = t.smallest_prime_factor(m).unwrap();
            assert_eq!(m % p, 0, "spf({m}) = {p} does not divide");
            assert!(t.is_prime(p), "spf({m}) = {p} not prime");
            // No smaller prime divides m.
            for q in t.primes().iter().take_while(|&&q| q < p) {
                assert_ne!(m % q, 0, "{q} < spf({m}) = {p} divides m");
            }
        }
    }

    #[test]
    fn factorize_examples() {
        let t = PrimeTable::new(100).unwrap();
        assert_eq!(t.factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(t.factorize(1).unwrap().factors, vec![]);
        // 97 is prime: trial division up to sqrt(97) finds no divisor.
        assert!((2..10).all(|d| 97 % d != 0));
        assert_eq!(t.factorize(97).unwrap().factors, vec![(97, 1)]);
    }

    #[test]
    fn factorize_out_of_range() {
        let t = PrimeTable::new(100).unwrap();
        assert!(t.factorize(0).is_err());
        assert!(t.factorize(101).is_err());
    }

    #[test]
    fn factorization_reconstructs_n() {
        let t = PrimeTable::new(5000).unwrap();
        for n in 2..=5000u64 {
            let f = t.factorize(n).unwrap();
            let back: u64 = f.factors.iter().map(|&(p, a)| p.pow(a)).product();
            assert_eq!(back, n);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn nth_prime_examples() {
        let t = PrimeTable::new(100).unwrap();
        assert_eq!(t.nth_prime(1).unwrap(), 2);
        // Enumerate by trial division as the oracle.
        let mut slow = Vec::new();
        for m in 2u64..=100 {
            if (2..m).all(|d| m % d != 0) {
                slow.push(m);
            }
        }
        assert_eq!(t.nth_prime(5).unwrap(), slow[4]);
        assert_eq!(slow[4], 11);
        assert_eq!(t.nth_prime(25).unwrap(), slow[24]);
        assert_eq!(slow[24], 97);
        assert!(t.nth_prime(0).is_err());
        assert!(t.nth_prime(26).is_err());
    }

    #[test]
    fn theta_examples() {
        let t = PrimeTable::new(100).unwrap();
        assert_eq!(t.chebyshev_theta(1.5).unwrap(), 0.0);
        let expected = 2.0f64.ln() + 3.0f64.ln() + 5.0f64.ln() + 7.0f64.ln();
        let got = t.chebyshev_theta(10.0).unwrap();
        assert!((got - expected).abs() <= 1e-12 * expected);
        assert!((got - 5.347107530717468).abs() <= 1e-12);
        assert!((t.chebyshev_theta(2.0).unwrap() - 2.0f64.ln()).abs() <= 1e-15);
        assert!(t.chebyshev_theta(101.0).is_err());
        assert!(t.chebyshev_theta(-1.0).is_err());
    }

    #[test]
    fn theta_prefix_matches_compensated_oracle() {
        let t = PrimeTable::new(100_000).unwrap();
        // Independent compensated accumulation in the opposite style
        // (Neumaier) as the reference.
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (i, &p) in t.primes().iter().enumerate() {
            let term = (p as f64).ln();
            let next = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - next) + term;
            } else {
                comp += (term - next) + sum;
            }
            sum = next;
            let reference = sum + comp;
            let got = t.theta_of_nth(i as u64 + 1);
            assert!(
                (got - reference).abs() <= 1e-12 * reference.max(1.0),
                "prefix {i}: {got} vs {reference}"
            );
        }
    }

    #[test]
    fn theta_is_nondecreasing_with_prime_steps() {
        let t = PrimeTable::new(10_000).unwrap();
        for k in 1..t.prime_count() as u64 {
            let prev = t.theta_of_nth(k - 1);
            let cur = t.theta_of_nth(k);
            assert!(cur >= prev);
            let p = t.nth_prime(k).unwrap();
            assert!((cur - prev - (p as f64).ln()).abs() <= 1e-9);
        }
    }

    #[test]
    fn theta_of_omega_bounded_by_ln_n() {
        // The primorial of omega(n) primes divides into n, so
        // theta(p_omega(n)) <= ln n.
        let t = PrimeTable::new(50_000).unwrap();
        let mut f = t.factorize(1).unwrap();
        for n in 2..=50_000u64 {
            t.factorize_into(n, &mut f).unwrap();
            let omega = f.factors.len() as u64;
            assert!(t.theta_of_nth(omega) <= (n as f64).ln() + 1e-9, "n = {n}");
        }
    }
}
