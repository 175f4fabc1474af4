//! Worst-case regret of surrogate rules with respect to the F-measure.
//!
//! Closed forms:
//!
//! | rule | worst-case regret |
//! |------|-------------------|
//! | Hamming minimizer (marginal modes) | `1/2` for `m > 2` |
//! | subset 0/1 minimizer (joint mode) | `(2m² - m - 2) m / ((2m - 1)(m² + m + 4))` for `m > 2` |
//! | independence-based maximizer | at least `2q - 1` whenever `δ_m(q) > 0` |
//! | thresholding of marginals | at least `max(0, 1/6 - 2/(m + 4))` |
//!
//! and the Jaccard regret of the F-maximizer is at most `1 - δ/2`, where `δ`
//! is the optimal expected F-measure.
//!
//! Each closed form comes with an explicit witness distribution
//! ([`build_witness`]); [`verify_witness`] runs the rule on it and measures
//! the regret against the brute-force optimum.

use std::fmt;
use std::str::FromStr;

use crate::classic::{fm_maximize, threshold_maximize};
use crate::distributions::{Enumerable, ProductBernoulli, SparseJoint};
use crate::error::{Error, Result};
use crate::format::sig12;
use crate::gfm::{delta_from_joint, gfm_maximize};
use crate::label::LabelVector;
use crate::metrics::MetricKind;
use crate::oracle::{expected_metric, Oracle};

pub const DEFAULT_EPS: f64 = 1e-4;
pub const DEFAULT_Q: f64 = 0.9;

fn require_m_above_two(m: usize) -> Result<()> {
    if m > 2 {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "m",
            value: m.to_string(),
            range: "m > 2".into(),
        })
    }
}

/// Worst-case F-measure regret of the Hamming-loss minimizer.
pub fn worst_case_hamming(m: usize) -> Result<f64> {
    require_m_above_two(m)?;
    Ok(0.5)
}

/// Worst-case F-measure regret of the subset 0/1 minimizer.
pub fn worst_case_subset01(m: usize) -> Result<f64> {
    require_m_above_two(m)?;
    let m = m as f64;
    Ok((2.0 * m * m - m - 2.0) * m / ((2.0 * m - 1.0) * (m * m + m + 4.0)))
}

fn x_ln(exponent: f64, base: f64) -> f64 {
    if exponent == 0.0 {
        0.0
    } else {
        exponent * base.ln()
    }
}

/// `δ_m(q) = E[F(Y, 1)] - E[F(Y, 0)]` for `m` independent labels that are
/// each zero with probability `q`:
///
/// ```text
/// Σ_{s=1}^m C(m-1, s-1) · 2m/(m+s) · q^{m-s} (1-q)^s  -  q^m
/// ```
///
/// Binomial coefficients are accumulated in log space.
pub fn independence_delta(q: f64, m: usize) -> f64 {
    let mf = m as f64;
    let mut ln_binom = 0.0; // ln C(m-1, 0)
    let mut sum = 0.0;
    for s in 1..=m {
        if s > 1 {
            ln_binom += ((m - s + 1) as f64).ln() - ((s - 1) as f64).ln();
        }
        let sf = s as f64;
        let ln_term = ln_binom + (2.0 * mf / (mf + sf)).ln() + x_ln(mf - sf, q) + x_ln(sf, 1.0 - q);
        sum += ln_term.exp();
    }
    sum - q.powi(m as i32)
}

/// Lower bound `2q - 1` on the regret of independence-based F maximization.
/// The bound is only established when `independence_delta(q, m) > 0`; a
/// warning is logged otherwise.
pub fn independence_regret_bound(q: f64, m: usize) -> f64 {
    let delta = independence_delta(q, m);
    if delta <= 0.0 {
        log::warn!("independence bound 2q-1 not established: delta_{m}({q}) = {delta} <= 0");
    }
    2.0 * q - 1.0
}

/// Lower bound `max(0, 1/6 - 2/(m+4))` on the regret of thresholding.
pub fn threshold_regret_bound(m: usize) -> f64 {
    (1.0 / 6.0 - 2.0 / (m as f64 + 4.0)).max(0.0)
}

/// Upper bound `1 - δ/2` on the Jaccard regret of the F-maximizer, with `δ`
/// the optimal expected F-measure.
pub fn jaccard_regret_bound(dist: &dyn Enumerable) -> f64 {
    1.0 - gfm_maximize(&delta_from_joint(dist)).expected_f / 2.0
}

/// One point of the sequence `q_m = 1 - 1/m` used to track the independence
/// bound as `m` grows.
#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceTrendPoint {
    pub m: usize,
    pub q: f64,
    pub delta: f64,
    pub bound: f64,
}

pub fn independence_trend(ms: &[usize]) -> Vec<IndependenceTrendPoint> {
    ms.iter()
        .map(|&m| {
            let q = 1.0 - 1.0 / m as f64;
            IndependenceTrendPoint {
                m,
                q,
                delta: independence_delta(q, m),
                bound: 2.0 * q - 1.0,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Hamming-loss minimizer.
    T3_1,
    /// Subset 0/1 minimizer.
    T3_2,
    /// Independence-based F maximization.
    T4_2,
    /// Thresholding of marginals.
    T4_5,
}

impl Theorem {
    pub fn label(self) -> &'static str {
        match self {
            Theorem::T3_1 => "3.1",
            Theorem::T3_2 => "3.2",
            Theorem::T4_2 => "4.2",
            Theorem::T4_5 => "4.5",
        }
    }

    fn method(self) -> &'static str {
        match self {
            Theorem::T3_1 => "marginal_modes",
            Theorem::T3_2 => "subset_minimizer",
            Theorem::T4_2 => "fm_independent",
            Theorem::T4_5 => "threshold",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches(['T', 't']).replace('_', ".").as_str() {
            "3.1" => Ok(Theorem::T3_1),
            "3.2" => Ok(Theorem::T3_2),
            "4.2" => Ok(Theorem::T4_2),
            "4.5" => Ok(Theorem::T4_5),
            _ => Err(Error::InvalidWitness(format!("unknown theorem {s:?}"))),
        }
    }
}

/// Parameters of a witness construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessSpec {
    pub theorem: Theorem,
    pub m: usize,
    /// `Pr(Y_i = 0)`; used by [`Theorem::T4_2`] only.
    pub q: f64,
    /// Slack that makes the optimum unique; used by [`Theorem::T3_1`] and
    /// [`Theorem::T4_5`].
    pub eps: f64,
}

impl WitnessSpec {
    pub fn new(theorem: Theorem, m: usize) -> Self {
        Self {
            theorem,
            m,
            q: DEFAULT_Q,
            eps: DEFAULT_EPS,
        }
    }

    pub fn with_q(mut self, q: f64) -> Self {
        self.q = q;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    fn uses_q(&self) -> bool {
        self.theorem == Theorem::T4_2
    }

    fn uses_eps(&self) -> bool {
        matches!(self.theorem, Theorem::T3_1 | Theorem::T4_5)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        match self.theorem {
            Theorem::T3_1 | Theorem::T3_2 if m <= 2 => {
                return Err(Error::InvalidWitness(format!(
                    "theorem {} needs m > 2",
                    self.theorem
                )))
            }
            Theorem::T4_5 if m < 6 || m % 2 == 1 => {
                return Err(Error::InvalidWitness(
                    "theorem 4.5 needs even m >= 6".into(),
                ))
            }
            Theorem::T4_2 if m == 0 => {
                return Err(Error::InvalidWitness("m must be positive".into()))
            }
            Theorem::T4_2 if !(0.5..=1.0).contains(&self.q) => {
                return Err(Error::InvalidWitness(format!(
                    "q = {} outside [1/2, 1]",
                    self.q
                )))
            }
            _ => {}
        }
        if self.uses_eps() && !(self.eps > 0.0 && self.eps < 1.0 / (4.0 * m as f64)) {
            return Err(Error::InvalidWitness(format!(
                "eps = {} outside (0, 1/(4m))",
                self.eps
            )));
        }
        Ok(())
    }
}

/// A witness distribution; the independence construction is a pair sharing
/// the same marginals.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Single(SparseJoint),
    Pair {
        independent: ProductBernoulli,
        dependent: SparseJoint,
    },
}

impl Witness {
    /// The distribution under which the regret is measured.
    pub fn target(&self) -> &SparseJoint {
        match self {
            Witness::Single(d) => d,
            Witness::Pair { dependent, .. } => dependent,
        }
    }
}

pub fn build_witness(spec: &WitnessSpec) -> Result<Witness> {
    spec.validate()?;
    let m = spec.m;
    let eps = spec.eps;
    match spec.theorem {
        Theorem::T3_1 => {
            // h_F = e_1, h_H = 0: the complement of e_1 and its m-1
            // single-bit reductions keep every marginal just below 1/2
            let mut entries = vec![
                (LabelVector::unit(m, 0), 0.5 - eps),
                (
                    LabelVector::from_indices(m, 1..m),
                    0.5 - (2.0 * m as f64 - 3.0) * eps,
                ),
            ];
            for off in 1..m {
                entries.push((
                    LabelVector::from_indices(m, (1..m).filter(|&j| j != off)),
                    2.0 * eps,
                ));
            }
            Ok(Witness::Single(SparseJoint::new(m, entries)?))
        }
        Theorem::T3_2 => {
            let mass = 2.0 / (m * m + m + 4) as f64;
            let entries = (0..1u64 << m)
                .map(|idx| LabelVector::from_index(m, idx))
                .filter(|y| y.is_zero() || y.ones_count() + 2 >= m)
                .map(|y| (y, mass));
            Ok(Witness::Single(SparseJoint::new(m, entries)?))
        }
        Theorem::T4_2 => {
            let q = spec.q;
            let independent = ProductBernoulli::new(vec![1.0 - q; m])?;
            let dependent = SparseJoint::new(
                m,
                [(LabelVector::zeros(m), q), (LabelVector::ones(m), 1.0 - q)],
            )?;
            Ok(Witness::Pair {
                independent,
                dependent,
            })
        }
        Theorem::T4_5 => {
            // label 2 plus one of the two halves of labels 3..m, m/2 ones each
            let half = (m - 2) / 2;
            let first = LabelVector::from_indices(m, std::iter::once(1).chain(2..2 + half));
            let second = LabelVector::from_indices(m, std::iter::once(1).chain(2 + half..m));
            let side = (0.5 + eps) / 2.0;
            Ok(Witness::Single(SparseJoint::new(
                m,
                [
                    (LabelVector::unit(m, 0), 0.5 - eps),
                    (first, side),
                    (second, side),
                ],
            )?))
        }
    }
}

/// Regret of one rule on one distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretReport {
    pub method: String,
    pub h_method: LabelVector,
    pub h_oracle: LabelVector,
    pub value_method: f64,
    pub value_oracle: f64,
    pub regret: f64,
    pub closed_form: Option<f64>,
}

impl RegretReport {
    /// Builds a report for `h_method` against the exhaustive optimum of `metric`.
    pub fn measure(
        oracle: &Oracle,
        dist: &dyn Enumerable,
        method: impl Into<String>,
        h_method: LabelVector,
        metric: MetricKind,
    ) -> Result<Self> {
        let best = oracle.maximize(dist, metric)?;
        let value_method = expected_metric(dist, &h_method, metric)?;
        let regret = if metric.is_utility() {
            best.value - value_method
        } else {
            value_method - best.value
        };
        Ok(Self {
            method: method.into(),
            h_method,
            h_oracle: best.best,
            value_method,
            value_oracle: best.value,
            regret,
            closed_form: None,
        })
    }
}

/// Outcome of [`verify_witness`], serializable as one CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessVerification {
    pub spec: WitnessSpec,
    pub report: RegretReport,
}

impl WitnessVerification {
    pub const CSV_HEADER: &'static str = "theorem,m,q,eps,regret_numeric,closed_form,abs_gap";

    pub fn abs_gap(&self) -> Option<f64> {
        self.report
            .closed_form
            .map(|c| (self.report.regret - c).abs())
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(sig12).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.spec.theorem,
            self.spec.m,
            opt(self.spec.uses_q().then_some(self.spec.q)),
            opt(self.spec.uses_eps().then_some(self.spec.eps)),
            sig12(self.report.regret),
            opt(self.report.closed_form),
            opt(self.abs_gap()),
        )
    }
}

/// Builds the witness, runs the rule the theorem is about, and measures its
/// F-measure regret against the exhaustive optimum.
///
/// The subset 0/1 witness has a tied mode (all support masses are equal); the
/// all-zero vector is the minimizer the construction intends and is used
/// directly.
pub fn verify_witness_with(spec: &WitnessSpec, oracle: &Oracle) -> Result<WitnessVerification> {
    let witness = build_witness(spec)?;
    let m = spec.m;
    let (h_method, closed_form) = match (&witness, spec.theorem) {
        (Witness::Single(d), Theorem::T3_1) => (d.marginal_modes(), worst_case_hamming(m)?),
        (Witness::Single(_), Theorem::T3_2) => (LabelVector::zeros(m), worst_case_subset01(m)?),
        (Witness::Pair { independent, .. }, Theorem::T4_2) => (
            fm_maximize(independent.probabilities())?.h,
            independence_regret_bound(spec.q, m),
        ),
        (Witness::Single(d), Theorem::T4_5) => (threshold_maximize(d).h, threshold_regret_bound(m)),
        _ => unreachable!("witness shape follows the theorem"),
    };
    let mut report = RegretReport::measure(
        oracle,
        witness.target(),
        spec.theorem.method(),
        h_method,
        MetricKind::FMeasure,
    )?;
    report.closed_form = Some(closed_form);
    Ok(WitnessVerification {
        spec: *spec,
        report,
    })
}

pub fn verify_witness(spec: &WitnessSpec) -> Result<WitnessVerification> {
    verify_witness_with(spec, &Oracle::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::twin_a;

    /// Direct binomial sum, no logs.
    fn delta_by_binomials(q: f64, m: usize) -> f64 {
        let binom = |n: usize, k: usize| -> f64 {
            (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
        };
        (1..=m)
            .map(|s| {
                binom(m - 1, s - 1) * 2.0 * m as f64 / (m + s) as f64
                    * q.powi((m - s) as i32)
                    * (1.0 - q).powi(s as i32)
            })
            .sum::<f64>()
            - q.powi(m as i32)
    }

    /// Brute force over all outcomes of the product joint.
    fn delta_by_enumeration(q: f64, m: usize) -> f64 {
        let d = ProductBernoulli::new(vec![1.0 - q; m]).unwrap();
        expected_metric(&d, &LabelVector::ones(m), MetricKind::FMeasure).unwrap()
            - expected_metric(&d, &LabelVector::zeros(m), MetricKind::FMeasure).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(worst_case_hamming(3).unwrap(), 0.5);
        assert_eq!(worst_case_hamming(25).unwrap(), 0.5);
        assert!(worst_case_hamming(2).is_err());

        assert!((worst_case_subset01(3).unwrap() - 39.0 / 80.0).abs() < 1e-15);
        assert!((worst_case_subset01(100).unwrap() - 0.98961).abs() < 1e-5);
        assert!(worst_case_subset01(2).is_err());
        let mut prev = 0.0;
        for m in 3..200 {
            let v = worst_case_subset01(m).unwrap();
            assert!(v > prev && v < 1.0);
            prev = v;
        }

        assert!((independence_regret_bound(0.9, 30) - 0.8).abs() < 1e-15);
        assert!((threshold_regret_bound(12) - 1.0 / 24.0).abs() < 1e-15);
        assert_eq!(threshold_regret_bound(8), 0.0);
        assert_eq!(threshold_regret_bound(6), 0.0);
    }

    #[test]
    fn independence_delta_against_two_oracles() {
        for (q, m) in [(0.5, 4), (0.9, 6), (0.7, 9), (0.95, 12), (0.9, 17)] {
            let d = independence_delta(q, m);
            assert!((d - delta_by_binomials(q, m)).abs() < 1e-12, "q={q} m={m}");
            assert!(
                (d - delta_by_enumeration(q, m)).abs() < 1e-12,
                "q={q} m={m}"
            );
        }
        assert!(independence_delta(0.5, 4) > 0.0);
        assert!(independence_delta(0.95, 100) > 0.0);
        assert!((independence_delta(0.95, 100) - delta_by_binomials(0.95, 100)).abs() < 1e-10);
        for m in [1, 5, 50, 200] {
            assert_eq!(independence_delta(1.0, m), -1.0);
        }
        assert!(independence_delta(0.9, 200).is_finite());
    }

    #[test]
    fn jaccard_bound_values() {
        assert_eq!(
            jaccard_regret_bound(&SparseJoint::point_mass(
                LabelVector::parse("0110").unwrap()
            )),
            0.5
        );
        assert!((jaccard_regret_bound(&twin_a()) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn witnesses_are_distributions() {
        let specs = [
            WitnessSpec::new(Theorem::T3_1, 5).with_eps(1e-3),
            WitnessSpec::new(Theorem::T3_2, 6),
            WitnessSpec::new(Theorem::T4_2, 4),
            WitnessSpec::new(Theorem::T4_5, 12),
        ];
        for spec in specs {
            let w = build_witness(&spec).unwrap();
            let total: f64 = w.target().iter().map(|(_, p)| p).sum();
            assert!((total - 1.0).abs() < 1e-12);
            assert!(w.target().iter().all(|(_, p)| p >= 0.0));
        }
    }

    #[test]
    fn subset_witness_shape() {
        let w = build_witness(&WitnessSpec::new(Theorem::T3_2, 3)).unwrap();
        let d = w.target();
        assert_eq!(d.support_size(), 8);
        assert!(d.iter().all(|(_, p)| (p - 0.125).abs() < 1e-15));
    }

    #[test]
    fn hamming_witness_marginals_sit_below_half() {
        let spec = WitnessSpec::new(Theorem::T3_1, 6).with_eps(1e-3);
        let d = build_witness(&spec).unwrap().target().clone();
        for p in d.marginals() {
            assert!((p - (0.5 - 1e-3)).abs() < 1e-12);
        }
    }

    #[test]
    fn independence_pair_shares_marginals() {
        let w = build_witness(&WitnessSpec::new(Theorem::T4_2, 4).with_q(0.9)).unwrap();
        let Witness::Pair {
            independent,
            dependent,
        } = w
        else {
            panic!("pair expected")
        };
        for (a, b) in Enumerable::marginals(&independent)
            .iter()
            .zip(dependent.marginals())
        {
            assert!((a - 0.1).abs() < 1e-15);
            assert!((b - 0.1).abs() < 1e-15);
        }
    }

    #[test]
    fn threshold_witness_matches_the_twelve_label_pattern() {
        let w = build_witness(&WitnessSpec::new(Theorem::T4_5, 12).with_eps(1e-4)).unwrap();
        let d = w.target();
        let support: Vec<String> = d.iter().map(|(y, _)| y.to_string()).collect();
        assert_eq!(
            support,
            vec!["010000011111", "011111100000", "100000000000"]
        );
        assert!((d.mass(&LabelVector::unit(12, 0)) - (0.5 - 1e-4)).abs() < 1e-15);
    }

    #[test]
    fn spec_validation() {
        assert!(build_witness(&WitnessSpec::new(Theorem::T3_1, 2)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T3_2, 2)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T4_5, 7)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T4_5, 4)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T4_2, 4).with_q(0.3)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T3_1, 5).with_eps(0.06)).is_err());
        assert!(build_witness(&WitnessSpec::new(Theorem::T3_1, 5).with_eps(0.0)).is_err());
    }

    #[test]
    fn subset_witness_regret_at_m3() {
        let v = verify_witness(&WitnessSpec::new(Theorem::T3_2, 3)).unwrap();
        assert!((v.report.value_oracle - 0.6125).abs() < 1e-12);
        assert!((v.report.value_method - 0.125).abs() < 1e-15);
        assert!((v.report.regret - 0.4875).abs() < 1e-12);
        assert_eq!(v.report.h_oracle, LabelVector::ones(3));
    }

    #[test]
    fn subset_witness_matches_closed_form() {
        for m in 3..=8 {
            let v = verify_witness(&WitnessSpec::new(Theorem::T3_2, m)).unwrap();
            assert!(v.abs_gap().unwrap() < 1e-9, "m={m}: {:?}", v.report);
        }
    }

    #[test]
    fn hamming_witness_against_the_fixed_prediction() {
        // e_1 against the all-zero minimizer gains exactly 1/2 - eps; the
        // exhaustive optimum (all ones for small m) gains more
        let eps = 1e-4;
        for m in [3, 5, 8] {
            let spec = WitnessSpec::new(Theorem::T3_1, m).with_eps(eps);
            let d = build_witness(&spec).unwrap().target().clone();
            let e1 = expected_metric(&d, &LabelVector::unit(m, 0), MetricKind::FMeasure).unwrap();
            assert!((e1 - (0.5 - eps)).abs() < 1e-12);
            let v = verify_witness(&spec).unwrap();
            assert!(v.report.h_method.is_zero());
            assert_eq!(v.report.value_method, 0.0);
            assert!(v.report.regret >= 0.5 - eps);
            let mf = m as f64;
            let ones = (0.5 - eps) * 2.0 / (mf + 1.0)
                + (0.5 - (2.0 * mf - 3.0) * eps) * 2.0 * (mf - 1.0) / (2.0 * mf - 1.0)
                + (mf - 1.0) * 2.0 * eps * 2.0 * (mf - 2.0) / (2.0 * mf - 2.0);
            assert!((v.report.value_oracle - ones).abs() < 1e-12, "m={m}");
        }
    }

    #[test]
    fn threshold_witness_meets_bound() {
        let eps = 1e-4;
        for m in (6..=14).step_by(2) {
            let v = verify_witness(&WitnessSpec::new(Theorem::T4_5, m).with_eps(eps)).unwrap();
            assert!(
                v.report.regret >= threshold_regret_bound(m) - 3.0 * eps,
                "m={m}"
            );
        }
        let v = verify_witness(&WitnessSpec::new(Theorem::T4_5, 12).with_eps(eps)).unwrap();
        assert!((v.report.regret - 1.0 / 24.0).abs() < 1e-3);
        assert_eq!(v.report.h_oracle, LabelVector::unit(12, 0));
    }

    #[test]
    fn independence_witness_where_delta_is_positive() {
        // delta_m(0.9) turns positive at m = 17
        assert!(independence_delta(0.9, 16) <= 0.0);
        let oracle = Oracle::with_cap(20);
        for m in [17, 18] {
            assert!(independence_delta(0.9, m) > 0.0);
            let v = verify_witness_with(&WitnessSpec::new(Theorem::T4_2, m).with_q(0.9), &oracle)
                .unwrap();
            assert_eq!(v.report.h_method, LabelVector::ones(m));
            assert!(v.report.h_oracle.is_zero());
            assert!((v.report.regret - 0.8).abs() < 1e-12, "m={m}");
        }
    }

    #[test]
    fn independence_witness_where_delta_is_negative() {
        let v = verify_witness(&WitnessSpec::new(Theorem::T4_2, 6).with_q(0.9)).unwrap();
        assert!(v.report.h_method.is_zero());
        assert_eq!(v.report.regret, 0.0);
    }

    #[test]
    fn cap_applies_to_verification() {
        let spec = WitnessSpec::new(Theorem::T4_2, 18);
        assert!(matches!(
            verify_witness(&spec),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn theorem_parsing_and_csv() {
        assert_eq!("3.1".parse::<Theorem>().unwrap(), Theorem::T3_1);
        assert_eq!("T4_5".parse::<Theorem>().unwrap(), Theorem::T4_5);
        assert!("5.1".parse::<Theorem>().is_err());

        let v = verify_witness(&WitnessSpec::new(Theorem::T3_2, 3)).unwrap();
        let row = v.csv_row();
        assert!(row.starts_with("3.2,3,,,0.4875,0.4875,"), "{row}");
        assert_eq!(
            WitnessVerification::CSV_HEADER.split(',').count(),
            row.split(',').count()
        );
    }

    #[test]
    fn trend_points_use_q_one_minus_inverse_m() {
        let pts = independence_trend(&[20, 50]);
        assert!((pts[0].q - 0.95).abs() < 1e-15);
        assert!((pts[1].bound - 0.96).abs() < 1e-15);
    }
}
