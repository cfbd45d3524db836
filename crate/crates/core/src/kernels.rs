//! Registry of prime kernels with declared analytic metadata (domain
//! threshold, monotonicity direction, positivity class), the concrete
//! kernels used by the bound calculators, and a forward-only running-sup
//! tracker over each kernel's integer extension.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, RegistrationFault};
use crate::math;
use crate::primes::{Factorization, PrimeTable};
use crate::Result;

/// Declared monotonicity of a kernel over primes in its domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// Nondecreasing on primes `p >= a` for the threshold prime `a`.
    IncreasingFrom(u64),
    /// Nonincreasing on all primes in the domain.
    Decreasing,
    None,
}

/// Declared positivity class, validated numerically at registration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// `f(p) > 0`
    Positive,
    /// `f(p) >= 0`
    NonNegative,
    /// `g(p) > 1`
    AboveOne,
    /// `g(p) >= 1`
    AtLeastOne,
    Unrestricted,
}

impl Positivity {
    fn admits(self, value: f64) -> bool {
        match self {
            Positivity::Positive => value > 0.0,
            Positivity::NonNegative => value >= 0.0,
            Positivity::AboveOne => value > 1.0,
            Positivity::AtLeastOne => value >= 1.0,
            Positivity::Unrestricted => true,
        }
    }

    /// Whether the class guarantees `f >= 0` (usable as an additive lower
    /// bound hypothesis).
    pub fn implies_nonnegative(self) -> bool {
        !matches!(self, Positivity::Unrestricted)
    }

    /// Whether the class guarantees `g >= 1` (usable as a multiplicative
    /// lower bound hypothesis).
    pub fn implies_at_least_one(self) -> bool {
        matches!(self, Positivity::AboveOne | Positivity::AtLeastOne)
    }
}

/// Closed-form body of a prime kernel and of its integer extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelForm {
    /// `ln(p-1)`, extending to `ln φ(x)`
    LnPhi,
    /// `ln(p+1)`, extending to `ln σ(x)`
    LnSigma,
    /// `p/(p-1)`, extending to `x/φ(x)`
    NOverPhi,
    /// `ln(2/p)`, extending to `ln(τ(x)/x)`
    LnTauOverP,
    /// `p^k + 1`, extending to `σ_k(x)`
    SigmaK(u32),
    /// `p - 1`, extending to `φ(x)`
    Phi,
    /// `p² + 1`, extending to `σ₂(x)`
    Sigma2,
    /// `(p² + p + 1)/(p - 1)`, same formula over integers
    Ratio1,
    /// `(p² + p + 1)/(p - 2)`, same formula over integers; pole at 2
    Ratio2,
    /// `1/(p-1)`, same formula over integers
    InvPMinus1,
}

/// A named real-valued function of a prime with declared domain threshold,
/// monotonicity, and positivity class. Kernel ids are the stable strings
/// the CLI accepts (`ln_phi`, `n_over_phi`, `sigma_k:2`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeKernel {
    id: String,
    form: KernelForm,
    p_min: u64,
    monotonicity: Monotonicity,
    positivity: Positivity,
}

impl PrimeKernel {
    pub fn new(
        id: &str,
        form: KernelForm,
        p_min: u64,
        monotonicity: Monotonicity,
        positivity: Positivity,
    ) -> Self {
        PrimeKernel { id: id.to_string(), form, p_min, monotonicity, positivity }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn p_min(&self) -> u64 {
        self.p_min
    }

    pub fn monotonicity(&self) -> Monotonicity {
        self.monotonicity
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    /// The threshold prime when the kernel is declared increasing.
    pub fn increase_threshold(&self) -> Option<u64> {
        match self.monotonicity {
            Monotonicity::IncreasingFrom(a) => Some(a),
            _ => None,
        }
    }

    /// Kernel value at a prime assumed to be in domain.
    pub fn eval(&self, p: u64) -> f64 {
        let pf = p as f64;
        match self.form {
            KernelForm::LnPhi => math::ln(pf - 1.0),
            KernelForm::LnSigma => math::ln(pf + 1.0),
            KernelForm::NOverPhi => pf / (pf - 1.0),
            KernelForm::LnTauOverP => math::ln(2.0 / pf),
            KernelForm::SigmaK(k) => math::powf(pf, k as f64) + 1.0,
            KernelForm::Phi => pf - 1.0,
            KernelForm::Sigma2 => pf * pf + 1.0,
            KernelForm::Ratio1 => (pf * pf + pf + 1.0) / (pf - 1.0),
            KernelForm::Ratio2 => (pf * pf + pf + 1.0) / (pf - 2.0),
            KernelForm::InvPMinus1 => 1.0 / (pf - 1.0),
        }
    }

    /// Kernel value with the domain threshold enforced.
    pub fn eval_checked(&self, p: u64) -> Result<f64> {
        if p < self.p_min {
            return Err(Error::KernelDomain { p });
        }
        Ok(self.eval(p))
    }

    /// The kernel's arithmetic-function extension to integer arguments
    /// `x >= 2`, the set the running sup in the `ω(n)·sup` bounds ranges
    /// over.
    pub fn eval_integer(&self, x: u64, table: &PrimeTable) -> Result<f64> {
        let xf = x as f64;
        match self.form {
            KernelForm::LnPhi => {
                Ok(math::ln(arith::euler_phi(&table.factorize(x)?) as f64))
            }
            KernelForm::LnSigma => {
                Ok(math::ln(arith::sigma_k(&table.factorize(x)?, 1)? as f64))
            }
            KernelForm::NOverPhi => {
                Ok(xf / arith::euler_phi(&table.factorize(x)?) as f64)
            }
            KernelForm::LnTauOverP => {
                Ok(math::ln(arith::tau(&table.factorize(x)?) as f64 / xf))
            }
            KernelForm::SigmaK(k) => Ok(arith::sigma_k(&table.factorize(x)?, k)? as f64),
            KernelForm::Phi => Ok(arith::euler_phi(&table.factorize(x)?) as f64),
            KernelForm::Sigma2 => Ok(arith::sigma_k(&table.factorize(x)?, 2)? as f64),
            KernelForm::Ratio1 => Ok((xf * xf + xf + 1.0) / (xf - 1.0)),
            KernelForm::Ratio2 => {
                if x == 2 {
                    return Err(Error::KernelDomain { p: 2 });
                }
                Ok((xf * xf + xf + 1.0) / (xf - 2.0))
            }
            KernelForm::InvPMinus1 => Ok(1.0 / (xf - 1.0)),
        }
    }

    /// Builds a kernel from its stable id. `sigma_k:<k>` takes any
    /// exponent `k >= 0`.
    pub fn by_id(id: &str) -> Result<Self> {
        if let Some(rest) = id.strip_prefix("sigma_k:") {
            let k: u32 = rest.parse().map_err(|_| Error::UnknownId(id.to_string()))?;
            return Ok(Self::sigma_k(k));
        }
        let kernel = match id {
            "ln_phi" => Self::new(
                "ln_phi",
                KernelForm::LnPhi,
                2,
                Monotonicity::IncreasingFrom(2),
                Positivity::NonNegative,
            ),
            "ln_sigma" => Self::new(
                "ln_sigma",
                KernelForm::LnSigma,
                2,
                Monotonicity::IncreasingFrom(2),
                Positivity::Positive,
            ),
            "n_over_phi" => Self::new(
                "n_over_phi",
                KernelForm::NOverPhi,
                2,
                Monotonicity::Decreasing,
                Positivity::AboveOne,
            ),
            "ln_tau_over_p" => Self::new(
                "ln_tau_over_p",
                KernelForm::LnTauOverP,
                2,
                Monotonicity::Decreasing,
                Positivity::Unrestricted,
            ),
            "phi" => Self::new(
                "phi",
                KernelForm::Phi,
                2,
                Monotonicity::IncreasingFrom(2),
                Positivity::AtLeastOne,
            ),
            "sigma2" => Self::new(
                "sigma2",
                KernelForm::Sigma2,
                2,
                Monotonicity::IncreasingFrom(2),
                Positivity::AboveOne,
            ),
            "ratio1" => Self::new(
                "ratio1",
                KernelForm::Ratio1,
                2,
                Monotonicity::IncreasingFrom(3),
                Positivity::Positive,
            ),
            "ratio2" => Self::new(
                "ratio2",
                KernelForm::Ratio2,
                3,
                Monotonicity::IncreasingFrom(5),
                Positivity::AboveOne,
            ),
            "inv_pm1" => Self::new(
                "inv_pm1",
                KernelForm::InvPMinus1,
                2,
                Monotonicity::Decreasing,
                Positivity::Positive,
            ),
            _ => return Err(Error::UnknownId(id.to_string())),
        };
        Ok(kernel)
    }

    /// `p ↦ p^k + 1`. Constant for `k = 0`, so the increasing declaration
    /// is the nonstrict one every `k` satisfies.
    pub fn sigma_k(k: u32) -> Self {
        Self::new(
            &alloc::format!("sigma_k:{k}"),
            KernelForm::SigmaK(k),
            2,
            Monotonicity::IncreasingFrom(2),
            Positivity::AboveOne,
        )
    }
}

/// Checks a kernel's declared metadata at every prime of
/// `[p_min, validation_limit]`, returning the first violating prime.
pub fn validate_kernel(
    kernel: &PrimeKernel,
    table: &PrimeTable,
    validation_limit: u64,
) -> Result<()> {
    if !table.is_prime(kernel.p_min) {
        return Err(Error::Registration {
            witness: kernel.p_min,
            fault: RegistrationFault::PMinNotPrime,
        });
    }
    let limit = validation_limit.min(table.limit());
    let start = table.primes().partition_point(|&p| p < kernel.p_min);
    let primes = &table.primes()[start..];
    let mut prev: Option<(u64, f64)> = None;
    for &p in primes.iter().take_while(|&&p| p <= limit) {
        let value = kernel.eval(p);
        if !kernel.positivity.admits(value) {
            return Err(Error::Registration {
                witness: p,
                fault: RegistrationFault::Positivity,
            });
        }
        if let Some((_, prev_value)) = prev {
            let ok = match kernel.monotonicity {
                Monotonicity::IncreasingFrom(a) => {
                    // Only pairs fully at or above the threshold constrain.
                    let prev_p = prev.unwrap().0;
                    prev_p < a || value >= prev_value
                }
                Monotonicity::Decreasing => value <= prev_value,
                Monotonicity::None => true,
            };
            if !ok {
                return Err(Error::Registration {
                    witness: p,
                    fault: RegistrationFault::Monotonicity,
                });
            }
        }
        prev = Some((p, value));
    }
    Ok(())
}

/// Immutable kernel registry; kernels are admitted only after their
/// metadata validates numerically.
pub struct Registry {
    kernels: BTreeMap<String, PrimeKernel>,
}

impl Registry {
    pub fn new() -> Self {
        Registry { kernels: BTreeMap::new() }
    }

    /// Registers the standard kernel set, validated against `table` up to
    /// `validation_limit`.
    pub fn with_builtins(table: &PrimeTable, validation_limit: u64) -> Result<Self> {
        let mut reg = Registry::new();
        for kernel in builtin_kernels() {
            reg.register(kernel, table, validation_limit)?;
        }
        Ok(reg)
    }

    pub fn register(
        &mut self,
        kernel: PrimeKernel,
        table: &PrimeTable,
        validation_limit: u64,
    ) -> Result<()> {
        validate_kernel(&kernel, table, validation_limit)?;
        self.kernels.insert(kernel.id.clone(), kernel);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<&PrimeKernel> {
        self.kernels.get(id).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.kernels.keys().map(|s| s.as_str())
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::new()
    }
}

/// The kernels every bound calculator knows about, including `σ_k` at
/// `k = 0..=3`.
pub fn builtin_kernels() -> Vec<PrimeKernel> {
    let mut out: Vec<PrimeKernel> = [
        "ln_phi",
        "ln_sigma",
        "n_over_phi",
        "ln_tau_over_p",
        "phi",
        "sigma2",
        "ratio1",
        "ratio2",
        "inv_pm1",
    ]
    .iter()
    .map(|id| PrimeKernel::by_id(id).unwrap())
    .collect();
    for k in 0..=3 {
        out.push(PrimeKernel::sigma_k(k));
    }
    out
}

/// Forward-only running supremum of `h(x)` for integer `x ∈ [2, n]`,
/// where `h` is a kernel's integer extension, optionally through `ln`.
///
/// Advancing from `n` to `n'` costs `n' - n` evaluations, so an ascending
/// sweep pays O(1) amortized per step. Integer points outside the
/// kernel's domain (or where `ln` is undefined in log mode) do not
/// contribute to the sup.
pub struct SupTracker<'a> {
    kernel: &'a PrimeKernel,
    table: &'a PrimeTable,
    log_mode: bool,
    current_n: u64,
    current_sup: f64,
}

impl<'a> SupTracker<'a> {
    /// Tracks `sup f(x)` over the kernel's integer extension.
    pub fn new(kernel: &'a PrimeKernel, table: &'a PrimeTable) -> Self {
        SupTracker { kernel, table, log_mode: false, current_n: 1, current_sup: f64::NEG_INFINITY }
    }

    /// Tracks `sup ln g(x)`; points with `g(x) <= 0` are outside the
    /// logarithm's domain and are ignored.
    pub fn new_log(kernel: &'a PrimeKernel, table: &'a PrimeTable) -> Self {
        SupTracker { kernel, table, log_mode: true, current_n: 1, current_sup: f64::NEG_INFINITY }
    }

    pub fn current_n(&self) -> u64 {
        self.current_n
    }

    /// Advances to `n >= current_n` and returns `sup_{2 <= x <= n}`.
    pub fn advance(&mut self, n: u64) -> Result<f64> {
        if n < self.current_n {
            return Err(Error::NotAscending { current: self.current_n, requested: n });
        }
        for x in (self.current_n + 1)..=n {
            match self.kernel.eval_integer(x, self.table) {
                Ok(v) => {
                    let candidate = if self.log_mode {
                        if v <= 0.0 {
                            continue;
                        }
                        math::ln(v)
                    } else {
                        v
                    };
                    if candidate > self.current_sup {
                        self.current_sup = candidate;
                    }
                }
                Err(Error::KernelDomain { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        self.current_n = n;
        Ok(self.current_sup)
    }
}

/// Convenience wrapper matching the harness call shape.
pub fn sup_advance(tracker: &mut SupTracker<'_>, n: u64) -> Result<f64> {
    tracker.advance(n)
}

/// Strongly additive/multiplicative evaluation helpers re-exported where
/// the kernel lives.
pub fn strongly_additive(kernel: &PrimeKernel, f: &Factorization) -> Result<f64> {
    arith::strongly_additive_eval(kernel, f)
}

pub fn strongly_multiplicative(kernel: &PrimeKernel, f: &Factorization) -> Result<f64> {
    arith::strongly_multiplicative_eval(kernel, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> PrimeTable {
        PrimeTable::new(100_000).unwrap()
    }

    #[test]
    fn builtin_values_match_formulas() {
        let ln_phi = PrimeKernel::by_id("ln_phi").unwrap();
        assert_eq!(ln_phi.eval(2), 0.0);
        let ratio1 = PrimeKernel::by_id("ratio1").unwrap();
        assert_eq!(ratio1.eval(3), 6.5);
        assert_eq!(ratio1.eval(2), 7.0);
        let ratio2 = PrimeKernel::by_id("ratio2").unwrap();
        assert!((ratio2.eval(5) - 31.0 / 3.0).abs() <= 1e-15);
        assert_eq!(ratio2.eval(3), 13.0);
    }

    #[test]
    fn builtins_all_validate_to_one_million() {
        let t = PrimeTable::new(1_000_000).unwrap();
        for kernel in builtin_kernels() {
            validate_kernel(&kernel, &t, 1_000_000)
                .unwrap_or_else(|e| panic!("{} failed: {e}", kernel.id()));
        }
    }

    #[test]
    fn ratio1_consistent_with_increase_only_from_3() {
        // f(2) = 7 > f(3) = 6.5 must not fail an increasing-from-3 claim.
        let t = table();
        let ratio1 = PrimeKernel::by_id("ratio1").unwrap();
        assert!(validate_kernel(&ratio1, &t, 100_000).is_ok());
    }

    #[test]
    fn decreasing_kernel_declared_increasing_is_rejected() {
        let t = table();
        let wrong = PrimeKernel::new(
            "n_over_phi_wrong",
            KernelForm::NOverPhi,
            2,
            Monotonicity::IncreasingFrom(2),
            Positivity::AboveOne,
        );
        let err = validate_kernel(&wrong, &t, 100_000).unwrap_err();
        assert_eq!(
            err,
            Error::Registration { witness: 3, fault: RegistrationFault::Monotonicity }
        );
    }

    #[test]
    fn phi_declared_above_one_is_rejected_at_2() {
        let t = table();
        let wrong = PrimeKernel::new(
            "phi_strict",
            KernelForm::Phi,
            2,
            Monotonicity::IncreasingFrom(2),
            Positivity::AboveOne,
        );
        let err = validate_kernel(&wrong, &t, 100).unwrap_err();
        assert_eq!(err, Error::Registration { witness: 2, fault: RegistrationFault::Positivity });
    }

    #[test]
    fn composite_p_min_is_rejected() {
        let t = table();
        let wrong = PrimeKernel::new(
            "bad_pmin",
            KernelForm::Phi,
            4,
            Monotonicity::None,
            Positivity::Unrestricted,
        );
        let err = validate_kernel(&wrong, &t, 100).unwrap_err();
        assert_eq!(err, Error::Registration { witness: 4, fault: RegistrationFault::PMinNotPrime });
    }

    #[test]
    fn registry_round_trip() {
        let t = table();
        let reg = Registry::with_builtins(&t, 10_000).unwrap();
        assert_eq!(reg.get("ln_phi").unwrap().id(), "ln_phi");
        assert!(reg.get("sigma_k:2").is_ok());
        assert!(matches!(reg.get("nope"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn ratio2_domain_excludes_2() {
        let ratio2 = PrimeKernel::by_id("ratio2").unwrap();
        assert_eq!(ratio2.eval_checked(2), Err(Error::KernelDomain { p: 2 }));
        assert!(ratio2.eval_checked(3).is_ok());
    }

    #[test]
    fn sup_tracker_matches_fresh_scan() {
        let t = table();
        let ln_phi = PrimeKernel::by_id("ln_phi").unwrap();
        let mut tracker = SupTracker::new(&ln_phi, &t);
        // sup of ln φ(x) over [2, 12] is ln φ(11) = ln 10.
        let sup12 = tracker.advance(12).unwrap();
        assert!((sup12 - 10.0f64.ln()).abs() <= 1e-12);
        for n in [50u64, 333, 1000, 7919] {
            let inc = tracker.advance(n).unwrap();
            let mut fresh = f64::NEG_INFINITY;
            for x in 2..=n {
                fresh = fresh.max(ln_phi.eval_integer(x, &t).unwrap());
            }
            assert_eq!(inc, fresh, "n = {n}");
        }
    }

    #[test]
    fn sup_tracker_is_forward_only() {
        let t = table();
        let phi = PrimeKernel::by_id("phi").unwrap();
        let mut tracker = SupTracker::new(&phi, &t);
        tracker.advance(100).unwrap();
        assert!(matches!(tracker.advance(50), Err(Error::NotAscending { .. })));
    }

    #[test]
    fn sup_tracker_monotone_kernel() {
        let t = table();
        // x/φ(x) maxes at highly composite x; ln σ(x) is effectively
        // monotone along x = primorials. Use the simple monotone check:
        // sup of σ(x) at n is σ at the argmax <= n, and never decreases.
        let sigma = PrimeKernel::by_id("ln_sigma").unwrap();
        let mut tracker = SupTracker::new(&sigma, &t);
        let mut last = f64::NEG_INFINITY;
        for n in 2..500 {
            let s = tracker.advance(n).unwrap();
            assert!(s >= last);
            last = s;
        }
    }
}
