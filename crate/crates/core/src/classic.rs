//! Rival inference rules: marginal modes (MM), joint mode (JM), F-measure
//! maximization under label independence (FM), the Lewis approximation,
//! the closed-form rule for categorical joints, and thresholding of
//! marginal probabilities.

use crate::distributions::{Enumerable, SparseJoint};
use crate::error::{check_dims, Error, Result};
use crate::gfm::{delta_from_joint, expected_f_via_delta};
use crate::label::LabelVector;

/// Tolerance on the total mass of categorical marginals.
pub const CATEGORICAL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct IndepFResult {
    pub h: LabelVector,
    /// Expected F-measure of `h` when the labels are independent.
    pub expected_f_under_independence: f64,
    /// Expected F-measure of the top-`k` prediction for `k = 0..=m`.
    pub per_k: Vec<f64>,
    /// Label indices sorted by marginal, largest first.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdResult {
    pub h: LabelVector,
    /// Threshold that produced `h` (`h_i = 1` iff `p_i >= theta`). The empty
    /// prediction, when no marginal reaches 1, is reported with `+inf`.
    pub theta: f64,
    /// Expected F-measure of `h` under the true joint.
    pub expected_f: f64,
}

fn check_probabilities(p: &[f64]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::EmptyLabelSpace);
    }
    match p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        Some(bad) => Err(Error::OutOfRange {
            what: "marginal",
            value: bad.to_string(),
            range: "[0, 1]".into(),
        }),
        None => Ok(()),
    }
}

/// Distribution of the number of successes among independent Bernoulli trials.
pub(crate) fn count_pmf(p: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut pmf = vec![1.0];
    for pi in p {
        let mut next = vec![0.0; pmf.len() + 1];
        for (c, &mass) in pmf.iter().enumerate() {
            next[c] += mass * (1.0 - pi);
            next[c + 1] += mass * pi;
        }
        pmf = next;
    }
    pmf
}

/// `E[F(Y, h)]` for independent labels with marginals `p` and any `h`.
pub fn expected_f_independent(p: &[f64], h: &LabelVector) -> Result<f64> {
    check_dims(p.len(), h.m())?;
    check_probabilities(p)?;
    let k = h.ones_count();
    if k == 0 {
        return Ok(p.iter().map(|pi| 1.0 - pi).product());
    }
    let selected = count_pmf(h.iter_ones().map(|i| p[i]));
    let rest = count_pmf((0..p.len()).filter(|&i| !h.get(i)).map(|i| p[i]));
    let mut acc = 0.0;
    for (a, &pa) in selected.iter().enumerate().skip(1) {
        for (b, &pb) in rest.iter().enumerate() {
            acc += 2.0 * a as f64 / (a + b + k) as f64 * pa * pb;
        }
    }
    Ok(acc)
}

/// Expected F-measure of predicting the first `k` labels when `p` is sorted
/// in descending order and the labels are independent.
pub fn fm_expected_f_independent(p: &[f64], k: usize) -> Result<f64> {
    check_probabilities(p)?;
    if p.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Unsorted);
    }
    if !(1..=p.len()).contains(&k) {
        return Err(Error::OutOfRange {
            what: "k",
            value: k.to_string(),
            range: format!("1..={}", p.len()),
        });
    }
    expected_f_independent(p, &LabelVector::from_indices(p.len(), 0..k))
}

/// Labels sorted by marginal descending, lower index first among equals.
fn descending_order(p: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p[b].total_cmp(&p[a]).then(a.cmp(&b)));
    order
}

/// F-measure maximizer under label independence.
///
/// Only the empty prediction and the top-`k` marginal sets can be optimal,
/// so `m + 1` candidates are scored exactly.
pub fn fm_maximize(p: &[f64]) -> Result<IndepFResult> {
    check_probabilities(p)?;
    let m = p.len();
    let order = descending_order(p);
    let mut per_k = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let h = LabelVector::from_indices(m, order[..k].iter().copied());
        per_k.push(expected_f_independent(p, &h)?);
    }
    let mut best = 0;
    for k in 1..=m {
        if per_k[k] > per_k[best] {
            best = k;
        }
    }
    Ok(IndepFResult {
        h: LabelVector::from_indices(m, order[..best].iter().copied()),
        expected_f_under_independence: per_k[best],
        per_k,
        order,
    })
}

/// `Π (1 - p_i)` for the empty prediction, else `2 Σ p_i h_i / (Σ p_i + Σ h_i)`.
pub fn lewis_approximation(p: &[f64], h: &LabelVector) -> Result<f64> {
    check_dims(p.len(), h.m())?;
    if h.is_zero() {
        return Ok(p.iter().map(|pi| 1.0 - pi).product());
    }
    let hit: f64 = h.iter_ones().map(|i| p[i]).sum();
    let total: f64 = p.iter().sum();
    Ok(2.0 * hit / (total + h.ones_count() as f64))
}

fn normalized_categorical(p: &[f64]) -> Result<Vec<f64>> {
    check_probabilities(p)?;
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > CATEGORICAL_TOL {
        return Err(Error::InvalidDistribution(format!(
            "categorical marginals sum to {total}, not 1"
        )));
    }
    Ok(p.iter().map(|x| x / total).collect())
}

/// The categorical joint with mass `p_i` on the `i`-th unit vector.
pub fn categorical_joint(p: &[f64]) -> Result<SparseJoint> {
    let p = normalized_categorical(p)?;
    let m = p.len();
    SparseJoint::new(
        m,
        p.iter()
            .enumerate()
            .map(|(i, &pi)| (LabelVector::unit(m, i), pi)),
    )
}

/// F-maximizer for a categorical joint: the top-`k` labels for the smallest
/// `k` with `Σ_{j<=k} p_j >= (1 + k) p_{k+1}`, or all labels if none qualifies.
pub fn categorical_maximize(p: &[f64]) -> Result<LabelVector> {
    let p = normalized_categorical(p)?;
    let m = p.len();
    let order = descending_order(&p);
    let mut prefix = 0.0;
    for k in 1..m {
        prefix += p[order[k - 1]];
        if prefix >= (1 + k) as f64 * p[order[k]] {
            return Ok(LabelVector::from_indices(m, order[..k].iter().copied()));
        }
    }
    Ok(LabelVector::ones(m))
}

/// Predictions reachable by thresholding the marginals, largest threshold first.
///
/// Thresholds are `1` and every distinct marginal; the empty prediction is
/// included even when some marginal equals 1.
pub fn threshold_candidates(p: &[f64]) -> Vec<(f64, LabelVector)> {
    let m = p.len();
    let mut thetas: Vec<f64> = p.iter().copied().chain(std::iter::once(1.0)).collect();
    thetas.sort_by(|a, b| b.total_cmp(a));
    thetas.dedup();
    let mut out: Vec<(f64, LabelVector)> = Vec::with_capacity(thetas.len() + 1);
    let at = |theta: f64| {
        LabelVector::from_indices(
            m,
            p.iter()
                .enumerate()
                .filter(|(_, &pi)| pi >= theta)
                .map(|(i, _)| i),
        )
    };
    if !at(1.0).is_zero() {
        out.push((f64::INFINITY, LabelVector::zeros(m)));
    }
    for theta in thetas {
        out.push((theta, at(theta)));
    }
    out
}

/// Best thresholded prediction, scored with the true joint. Ties keep the
/// larger threshold, i.e. fewer predicted labels.
pub fn threshold_maximize(dist: &dyn Enumerable) -> ThresholdResult {
    let delta = delta_from_joint(dist);
    let p = dist.marginals();
    let mut best: Option<ThresholdResult> = None;
    for (theta, h) in threshold_candidates(&p) {
        let value = expected_f_via_delta(&delta, &h).expect("dimensions agree");
        if best.as_ref().is_none_or(|b| value > b.expected_f) {
            best = Some(ThresholdResult {
                h,
                theta,
                expected_f: value,
            });
        }
    }
    best.expect("at least one candidate")
}

/// Marginal modes of the distribution (MM).
pub fn mm_predict(dist: &dyn Enumerable) -> LabelVector {
    dist.marginal_modes()
}

/// Joint mode of the distribution (JM).
pub fn jm_predict(dist: &dyn Enumerable) -> LabelVector {
    dist.joint_mode()
}
