//! The herd-inspection loss model: exact probability kernels and loss
//! functions, computed in log-space for stability at herd sizes like n = 250.
//!
//! Every operation is a pure function of its arguments; there is no shared
//! mutable state, so everything here is safe to call concurrently.

use std::fmt;
use std::sync::Arc;

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::numeric::{dot, ln_choose, xlogy, KahanSum};

/// Outbreak cost `a(d)` as a function of the number of undetected diseased
/// animals.
#[derive(Clone)]
pub enum OutbreakCost {
    /// 0 utiles when d = 0, a flat `a` otherwise.
    Step(f64),
    /// Arbitrary d-dependent cost; must be non-negative over `0..=n`.
    Custom(Arc<dyn Fn(u32) -> f64 + Send + Sync>),
}

impl OutbreakCost {
    fn cost(&self, d: u32) -> f64 {
        match self {
            OutbreakCost::Step(a) => {
                if d == 0 {
                    0.0
                } else {
                    *a
                }
            }
            OutbreakCost::Custom(f) => f(d),
        }
    }
}

impl fmt::Debug for OutbreakCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutbreakCost::Step(a) => f.debug_tuple("Step").field(a).finish(),
            OutbreakCost::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Fixed parameters of the inspection problem: herd size, test quality, and
/// all cost functions.
#[derive(Clone, Debug)]
pub struct ProblemConfig {
    n: u32,
    p: f64,
    q: f64,
    cost_coeffs: [f64; 3],
    outbreak: OutbreakCost,
    t_per_animal: f64,
}

impl Default for ProblemConfig {
    /// The reference parameter set: n = 250, p = 0.9999, q = 0.999,
    /// c(m) = 1000 - 2000 m + 1000 m^2, a = 10_000_000, t(n) = 400 n.
    fn default() -> Self {
        ProblemConfig::new(250, 0.9999, 0.999, [1000.0, -2000.0, 1000.0], 10_000_000.0, 400.0)
            .expect("reference configuration is valid")
    }
}

impl ProblemConfig {
    /// Validates and builds a configuration.
    ///
    /// `cost_coeffs` are the coefficients `(c0, c1, c2)` of the quadratic
    /// testing cost `c(m) = c0 + c1 m + c2 m^2`, which must be non-negative
    /// at every integer `m` in `0..=n`. `a` is the flat outbreak cost for
    /// `d >= 1`; the termination cost is `t(n) = t_per_animal * n`.
    pub fn new(
        n: u32,
        p: f64,
        q: f64,
        cost_coeffs: [f64; 3],
        a: f64,
        t_per_animal: f64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("herd size n must be at least 1".into()));
        }
        for (name, value) in [("p", p), ("q", q)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ProbabilityOutOfRange { name, value });
            }
        }
        if !(a.is_finite() && a >= 0.0) {
            return Err(Error::InvalidConfig(format!("outbreak cost a = {a} must be finite and >= 0")));
        }
        if !(t_per_animal.is_finite() && t_per_animal >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "termination cost per animal = {t_per_animal} must be finite and >= 0"
            )));
        }
        if cost_coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidConfig("testing cost coefficients must be finite".into()));
        }
        let config = ProblemConfig {
            n,
            p,
            q,
            cost_coeffs,
            outbreak: OutbreakCost::Step(a),
            t_per_animal,
        };
        for m in 0..=n {
            let c = config.test_cost_unchecked(m);
            if c < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "testing cost c({m}) = {c} is negative"
                )));
            }
        }
        Ok(config)
    }

    /// Replaces the step outbreak cost with a d-dependent one. The default
    /// step function matches the reference model; this hook admits the more
    /// detailed outbreak costings discussed during elicitation.
    pub fn with_outbreak_cost(
        mut self,
        f: impl Fn(u32) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        for d in 0..=self.n {
            let a = f(d);
            if !(a.is_finite() && a >= 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "outbreak cost a({d}) = {a} must be finite and >= 0"
                )));
            }
        }
        self.outbreak = OutbreakCost::Custom(Arc::new(f));
        Ok(self)
    }

    pub fn herd_size(&self) -> u32 {
        self.n
    }

    /// Test sensitivity: probability a diseased animal tests positive.
    pub fn sensitivity(&self) -> f64 {
        self.p
    }

    /// Test specificity: probability a healthy animal tests negative.
    pub fn specificity(&self) -> f64 {
        self.q
    }

    pub fn cost_coeffs(&self) -> [f64; 3] {
        self.cost_coeffs
    }

    /// Cost of terminating the whole herd, `t(n) = t_per_animal * n`.
    pub fn termination_cost(&self) -> f64 {
        self.t_per_animal * f64::from(self.n)
    }

    /// Outbreak cost `a(d)` for `d` undetected diseased animals.
    pub fn outbreak_cost(&self, d: u32) -> f64 {
        self.outbreak.cost(d)
    }

    fn test_cost_unchecked(&self, m: u32) -> f64 {
        let mf = f64::from(m);
        self.cost_coeffs[0] + self.cost_coeffs[1] * mf + self.cost_coeffs[2] * mf * mf
    }

    /// Cost of testing `m` animals, `c(m) = c0 + c1 m + c2 m^2`.
    pub fn test_cost(&self, m: u32) -> Result<f64> {
        self.check_count("m", m)?;
        Ok(self.test_cost_unchecked(m))
    }

    fn check_count(&self, name: &'static str, value: u32) -> Result<()> {
        if value > self.n {
            Err(Error::CountOutOfRange { name, value, bound: self.n })
        } else {
            Ok(())
        }
    }

    /// Probability that the herd passes inspection (no positive test) when
    /// `m` of `n` animals are tested and `d` of them are diseased.
    ///
    /// Sums `(1-p)^z q^(m-z)` over the hypergeometric distribution of the
    /// number `z` of diseased animals in the sample. For `d = 0` this is
    /// `q^m`.
    pub fn prob_pass(&self, m: u32, d: u32) -> Result<f64> {
        self.check_count("m", m)?;
        self.check_count("d", d)?;
        Ok(prob_pass_impl(&DirectLnFact, self.n, self.p, self.q, m, d))
    }

    /// Expected loss conditional on exactly `d` diseased animals:
    /// `c(m) + t(n) + (a(d) - t(n)) * Pr(pass | d)`.
    pub fn conditional_loss(&self, m: u32, d: u32) -> Result<LossBreakdown> {
        let pass = self.prob_pass(m, d)?;
        let c = self.test_cost_unchecked(m);
        Ok(self.breakdown(c, d, pass))
    }

    fn breakdown(&self, test_cost: f64, d: u32, prob_pass: f64) -> LossBreakdown {
        let t = self.termination_cost();
        let a = self.outbreak_cost(d);
        LossBreakdown {
            expected_loss: test_cost + t + (a - t) * prob_pass,
            prob_termination: 1.0 - prob_pass,
            prob_pass,
        }
    }

    /// Expected loss `L(m | r)` when each animal is independently infected
    /// with probability `r`: the full sum over `d = 0..=n` of the
    /// conditional loss weighted by the binomial mass.
    ///
    /// Summed in ascending `d` with compensated accumulation; the terms span
    /// many orders of magnitude.
    pub fn expected_loss_given_r(&self, m: u32, r: f64) -> Result<f64> {
        self.check_count("m", m)?;
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::ProbabilityOutOfRange { name: "r", value: r });
        }
        let mut acc = KahanSum::default();
        for d in 0..=self.n {
            let w = binomial_pmf(self.n, d, r)?;
            if w == 0.0 {
                continue;
            }
            acc.add(self.conditional_loss(m, d)?.expected_loss * w);
        }
        Ok(acc.value())
    }
}

/// Expected loss for one `(m, d)` pair, with the underlying pass/terminate
/// probabilities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LossBreakdown {
    /// `c(m) + t(n) + (a(d) - t(n)) * Pr(pass | d)` in utiles.
    pub expected_loss: f64,
    /// Probability that at least one animal tests positive.
    pub prob_termination: f64,
    /// Probability that the herd passes inspection, `Pr(pass | d)`.
    pub prob_pass: f64,
}

/// Probability of drawing exactly `z` diseased animals when sampling `m`
/// from a herd of `n` containing `d` diseased, without replacement:
/// `C(d, z) C(n-d, m-z) / C(n, m)`.
///
/// Returns 0 for the impossible configuration `m - z > n - d`.
pub fn hypergeometric_pmf(n: u32, m: u32, d: u32, z: u32) -> Result<f64> {
    if m > n {
        return Err(Error::CountOutOfRange { name: "m", value: m, bound: n });
    }
    if d > n {
        return Err(Error::CountOutOfRange { name: "d", value: d, bound: n });
    }
    if z > m.min(d) {
        return Err(Error::CountOutOfRange { name: "z", value: z, bound: m.min(d) });
    }
    if m - z > n - d {
        return Ok(0.0);
    }
    let ln = ln_choose(d, z) + ln_choose(n - d, m - z) - ln_choose(n, m);
    Ok(ln.exp().min(1.0))
}

/// Binomial mass `C(n, d) r^d (1-r)^(n-d)`, with `0^0 = 1` at the
/// boundaries so that `r = 0` and `r = 1` behave as point masses.
pub fn binomial_pmf(n: u32, d: u32, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::ProbabilityOutOfRange { name: "r", value: r });
    }
    if d > n {
        return Err(Error::CountOutOfRange { name: "d", value: d, bound: n });
    }
    let ln = ln_choose(n, d) + xlogy(f64::from(d), r) + xlogy(f64::from(n - d), 1.0 - r);
    Ok(ln.exp().min(1.0))
}

// --------------------------------------------------------------------------
// Shared kernel for Pr(pass | d), generic over how ln(k!) is obtained so the
// tabulated fast path and the one-shot public path run identical arithmetic.
// --------------------------------------------------------------------------

trait LnFact {
    fn ln_fact(&self, k: u32) -> f64;
}

struct DirectLnFact;

impl LnFact for DirectLnFact {
    fn ln_fact(&self, k: u32) -> f64 {
        ln_gamma(f64::from(k) + 1.0)
    }
}

struct CachedLnFact(Vec<f64>);

impl CachedLnFact {
    fn up_to(n: u32) -> Self {
        CachedLnFact((0..=n).map(|k| ln_gamma(f64::from(k) + 1.0)).collect())
    }
}

impl LnFact for CachedLnFact {
    fn ln_fact(&self, k: u32) -> f64 {
        self.0[k as usize]
    }
}

fn ln_choose_with(lf: &impl LnFact, n: u32, k: u32) -> f64 {
    debug_assert!(k <= n);
    lf.ln_fact(n) - lf.ln_fact(k) - lf.ln_fact(n - k)
}

fn prob_pass_impl(lf: &impl LnFact, n: u32, p: f64, q: f64, m: u32, d: u32) -> f64 {
    let ln_denom = ln_choose_with(lf, n, m);
    let z_lo = m.saturating_sub(n - d);
    let z_hi = m.min(d);
    let ln_miss = 1.0 - p; // probability a diseased animal tests negative
    let mut acc = KahanSum::default();
    for z in z_lo..=z_hi {
        let ln_hyper = ln_choose_with(lf, d, z) + ln_choose_with(lf, n - d, m - z) - ln_denom;
        let ln_term = ln_hyper + xlogy(f64::from(z), ln_miss) + xlogy(f64::from(m - z), q);
        acc.add(ln_term.exp());
    }
    acc.value().min(1.0)
}

// --------------------------------------------------------------------------
// Tabulated losses for fast evaluation of L(m | r) over many r values.
// --------------------------------------------------------------------------

/// Conditional losses `L(m, d)` tabulated for every decision `m = 0..=m_max`
/// and every `d = 0..=n`, so that `L(m | r)` reduces to a dot product with
/// the binomial weight vector of `r`.
///
/// Immutable after construction; shared freely across threads.
#[derive(Clone, Debug)]
pub struct LossTable {
    config: ProblemConfig,
    rows: Vec<Vec<f64>>,
}

impl LossTable {
    pub fn new(config: &ProblemConfig, m_max: u32) -> Result<Self> {
        if m_max > config.herd_size() {
            return Err(Error::CountOutOfRange {
                name: "m_max",
                value: m_max,
                bound: config.herd_size(),
            });
        }
        let lf = CachedLnFact::up_to(config.herd_size());
        let rows = (0..=m_max)
            .map(|m| conditional_loss_row_with(&lf, config, m))
            .collect();
        Ok(LossTable { config: config.clone(), rows })
    }

    pub fn config(&self) -> &ProblemConfig {
        &self.config
    }

    pub fn m_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    /// The tabulated conditional losses `L(m, d)` for `d = 0..=n`.
    pub fn row(&self, m: u32) -> &[f64] {
        &self.rows[m as usize]
    }

    /// `L(m | r)` as a weighted sum of the tabulated row.
    pub fn expected_loss(&self, m: u32, r: f64) -> f64 {
        let mut weights = Vec::new();
        binomial_weights(self.config.herd_size(), r, &mut weights);
        dot(self.row(m), &weights)
    }

    /// `L(m | r)` for every tabulated `m` at once, sharing one weight vector.
    pub fn expected_losses(&self, r: f64) -> Vec<f64> {
        let mut weights = Vec::new();
        binomial_weights(self.config.herd_size(), r, &mut weights);
        self.rows.iter().map(|row| dot(row, &weights)).collect()
    }
}

/// One row of the loss table: `L(m, d)` for `d = 0..=n`.
fn conditional_loss_row_with(lf: &CachedLnFact, config: &ProblemConfig, m: u32) -> Vec<f64> {
    let c = config.test_cost_unchecked(m);
    (0..=config.n)
        .map(|d| {
            let pass = prob_pass_impl(lf, config.n, config.p, config.q, m, d);
            config.breakdown(c, d, pass).expected_loss
        })
        .collect()
}

pub(crate) fn conditional_loss_row(config: &ProblemConfig, m: u32) -> Result<Vec<f64>> {
    config.check_count("m", m)?;
    let lf = CachedLnFact::up_to(config.herd_size());
    Ok(conditional_loss_row_with(&lf, config, m))
}

/// Fills `out` with the binomial masses `Pr(d | r)` for `d = 0..=n`.
///
/// Uses the ratio recurrence when the starting mass `(1-r)^n` is
/// representable, and falls back to per-term log-space evaluation when it
/// would underflow (r very close to 1 at large n).
pub(crate) fn binomial_weights(n: u32, r: f64, out: &mut Vec<f64>) {
    out.clear();
    out.reserve(n as usize + 1);
    if r <= 0.0 {
        out.push(1.0);
        out.resize(n as usize + 1, 0.0);
        return;
    }
    if r >= 1.0 {
        out.resize(n as usize, 0.0);
        out.push(1.0);
        return;
    }
    let ln_w0 = f64::from(n) * (-r).ln_1p();
    if ln_w0 > -700.0 {
        let ratio = r / (1.0 - r);
        let mut w = ln_w0.exp();
        for d in 0..=n {
            out.push(w);
            if d < n {
                w *= ratio * f64::from(n - d) / f64::from(d + 1);
            }
        }
    } else {
        for d in 0..=n {
            let ln = ln_choose(n, d) + f64::from(d) * r.ln() + f64::from(n - d) * (-r).ln_1p();
            out.push(ln.exp());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults() -> ProblemConfig {
        ProblemConfig::default()
    }

    #[test]
    fn test_cost_matches_reference_quadratic() {
        let config = defaults();
        assert_eq!(config.test_cost(0).unwrap(), 1000.0);
        assert_eq!(config.test_cost(1).unwrap(), 0.0);
        assert_eq!(config.test_cost(10).unwrap(), 81_000.0);
        assert!(matches!(
            config.test_cost(251),
            Err(Error::CountOutOfRange { name: "m", .. })
        ));
    }

    #[test]
    fn config_rejects_bad_parameters() {
        assert!(ProblemConfig::new(0, 0.5, 0.5, [1.0, 0.0, 0.0], 1.0, 1.0).is_err());
        assert!(ProblemConfig::new(10, 1.5, 0.5, [1.0, 0.0, 0.0], 1.0, 1.0).is_err());
        assert!(ProblemConfig::new(10, 0.5, -0.1, [1.0, 0.0, 0.0], 1.0, 1.0).is_err());
        assert!(ProblemConfig::new(10, 0.5, 0.5, [1.0, 0.0, 0.0], -1.0, 1.0).is_err());
        // c(m) dips negative inside the integer range
        assert!(ProblemConfig::new(10, 0.5, 0.5, [0.0, -10.0, 1.0], 1.0, 1.0).is_err());
        // ... but the reference coefficients are fine (c(1) = 0 exactly)
        assert!(ProblemConfig::new(10, 0.5, 0.5, [1000.0, -2000.0, 1000.0], 1.0, 1.0).is_ok());
    }

    #[test]
    fn custom_outbreak_cost_hook() {
        let config = defaults()
            .with_outbreak_cost(|d| f64::from(d) * 50_000.0)
            .unwrap();
        assert_eq!(config.outbreak_cost(0), 0.0);
        assert_eq!(config.outbreak_cost(3), 150_000.0);
        assert!(defaults().with_outbreak_cost(|_| -1.0).is_err());
    }

    #[test]
    fn hypergeometric_no_diseased_is_certain_zero() {
        for (n, m) in [(10, 3), (250, 30), (5, 5)] {
            assert_eq!(hypergeometric_pmf(n, m, 0, 0).unwrap(), 1.0);
        }
    }

    #[test]
    fn hypergeometric_enumerated_case() {
        // n=5, m=2, d=2: of the C(5,2)=10 equally likely samples, 6 contain
        // exactly one of the two diseased animals.
        assert_relative_eq!(
            hypergeometric_pmf(5, 2, 2, 1).unwrap(),
            0.6,
            max_relative = 1e-12
        );
    }

    #[test]
    fn hypergeometric_normalizes() {
        let mut total = KahanSum::default();
        for z in 0..=10 {
            total.add(hypergeometric_pmf(250, 10, 30, z).unwrap());
        }
        assert!((total.value() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hypergeometric_impossible_configuration_is_zero() {
        // d = 248, m = 5: at most 2 healthy animals exist, so z <= 2 is
        // impossible... m - z = 5 - 2 = 3 > n - d = 2.
        assert_eq!(hypergeometric_pmf(250, 5, 248, 2).unwrap(), 0.0);
    }

    #[test]
    fn hypergeometric_rejects_bad_arguments() {
        assert!(hypergeometric_pmf(5, 6, 2, 1).is_err());
        assert!(hypergeometric_pmf(5, 2, 6, 1).is_err());
        assert!(hypergeometric_pmf(5, 2, 2, 3).is_err());
    }

    #[test]
    fn prob_pass_healthy_herd_is_q_to_the_m() {
        let config = defaults();
        let full = config.prob_pass(250, 0).unwrap();
        assert_relative_eq!(full, 0.999f64.powi(250), max_relative = 1e-12);
        // reference scalar: q^n = 0.78
        assert!((full - 0.78).abs() < 0.005);
    }

    #[test]
    fn prob_pass_perfect_sensitivity_full_sample() {
        let config = ProblemConfig::new(250, 1.0, 0.999, [0.0, 0.0, 0.0], 1.0, 0.0).unwrap();
        for d in 1..=5 {
            assert_eq!(config.prob_pass(250, d).unwrap(), 0.0);
        }
    }

    #[test]
    fn prob_pass_hand_sum() {
        // n=5, m=2, d=1, p=q=0.5: 0.6 * 0.25 + 0.4 * 0.25 = 0.25
        let config = ProblemConfig::new(5, 0.5, 0.5, [0.0, 0.0, 0.0], 1.0, 0.0).unwrap();
        assert_relative_eq!(config.prob_pass(2, 1).unwrap(), 0.25, max_relative = 1e-12);
    }

    #[test]
    fn prob_pass_no_testing_passes_surely() {
        let config = defaults();
        for d in [0, 1, 100, 250] {
            assert_eq!(config.prob_pass(0, d).unwrap(), 1.0);
        }
    }

    #[test]
    fn conditional_loss_no_testing_healthy_herd() {
        let breakdown = defaults().conditional_loss(0, 0).unwrap();
        assert_eq!(breakdown.expected_loss, 1000.0);
        assert_eq!(breakdown.prob_pass, 1.0);
        assert_eq!(breakdown.prob_termination, 0.0);
    }

    #[test]
    fn conditional_loss_breakdown_is_consistent() {
        let config = defaults();
        for (m, d) in [(10u32, 1u32), (10, 20), (20, 20), (0, 250), (250, 3)] {
            let b = config.conditional_loss(m, d).unwrap();
            assert!((b.prob_termination + b.prob_pass - 1.0).abs() < 1e-12);
            assert!(b.expected_loss >= config.test_cost(m).unwrap());
            assert!(b.expected_loss.is_finite());
        }
    }

    #[test]
    fn conditional_loss_more_testing_helps_when_diseased() {
        let config = defaults();
        let few = config.conditional_loss(10, 20).unwrap().expected_loss;
        let many = config.conditional_loss(20, 20).unwrap().expected_loss;
        assert!(few > many);
    }

    #[test]
    fn binomial_pmf_boundaries_and_hand_value() {
        assert_eq!(binomial_pmf(10, 0, 0.0).unwrap(), 1.0);
        assert_eq!(binomial_pmf(10, 10, 1.0).unwrap(), 1.0);
        assert_eq!(binomial_pmf(10, 3, 0.0).unwrap(), 0.0);
        assert_relative_eq!(binomial_pmf(2, 1, 0.25).unwrap(), 0.375, max_relative = 1e-12);
        assert!(binomial_pmf(10, 3, 1.5).is_err());
        assert!(binomial_pmf(10, 3, f64::NAN).is_err());
        assert!(binomial_pmf(10, 11, 0.5).is_err());
    }

    #[test]
    fn binomial_pmf_normalizes_at_n_250() {
        for r in [1e-4, 0.001479, 0.03, 0.5, 0.9999] {
            let mut total = KahanSum::default();
            for d in 0..=250 {
                total.add(binomial_pmf(250, d, r).unwrap());
            }
            assert!(
                (total.value() - 1.0).abs() < 1e-12,
                "binomial pmf sums to {} at r = {r}",
                total.value()
            );
        }
    }

    #[test]
    fn expected_loss_at_r_zero_reduces_to_conditional() {
        let config = defaults();
        let el = config.expected_loss_given_r(0, 0.0).unwrap();
        assert_eq!(el, config.conditional_loss(0, 0).unwrap().expected_loss);
    }

    #[test]
    fn expected_loss_nondecreasing_in_r_small_range() {
        let config = defaults();
        for m in [0u32, 1, 10, 30] {
            let mut prev = f64::NEG_INFINITY;
            for i in 0..200 {
                let r = 0.01 * f64::from(i) / 199.0;
                let loss = config.expected_loss_given_r(m, r).unwrap();
                assert!(
                    loss >= prev - 1e-9,
                    "L({m}|r) decreased at r = {r}: {loss} < {prev}"
                );
                prev = loss;
            }
        }
    }

    #[test]
    fn moffitt_special_case_perfect_test_no_termination_cost() {
        // p = q = 1, t = 0: loss reduces to c(m) + a [d >= 1] Pr(z = 0 | d).
        let config = ProblemConfig::new(
            250,
            1.0,
            1.0,
            [1000.0, -2000.0, 1000.0],
            10_000_000.0,
            0.0,
        )
        .unwrap();
        for (m, d) in [(10u32, 1u32), (10, 30), (25, 2), (3, 0)] {
            let b = config.conditional_loss(m, d).unwrap();
            let zero_draw = hypergeometric_pmf(250, m, d, 0).unwrap();
            let a = if d >= 1 { 10_000_000.0 } else { 0.0 };
            let expected = config.test_cost(m).unwrap() + a * zero_draw;
            assert_relative_eq!(b.expected_loss, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn loss_table_agrees_with_direct_evaluation() {
        let config = defaults();
        let table = LossTable::new(&config, 12).unwrap();
        for m in [0u32, 5, 12] {
            for r in [0.0, 1e-4, 0.001479, 0.01] {
                assert_relative_eq!(
                    table.expected_loss(m, r),
                    config.expected_loss_given_r(m, r).unwrap(),
                    max_relative = 1e-10
                );
            }
        }
        let all = table.expected_losses(0.001);
        assert_eq!(all.len(), 13);
        assert_relative_eq!(all[7], table.expected_loss(7, 0.001), max_relative = 1e-14);
    }

    #[test]
    fn binomial_weights_match_pmf() {
        let mut weights = Vec::new();
        for r in [0.0, 1e-5, 0.001, 0.05, 0.4, 0.97, 1.0] {
            binomial_weights(250, r, &mut weights);
            assert_eq!(weights.len(), 251);
            for (d, &w) in weights.iter().enumerate() {
                let reference = binomial_pmf(250, d as u32, r).unwrap();
                let scale = reference.max(1e-300);
                assert!(
                    (w - reference).abs() / scale < 1e-9 || (w - reference).abs() < 1e-300,
                    "weight mismatch at r = {r}, d = {d}: {w} vs {reference}"
                );
            }
        }
    }
}
