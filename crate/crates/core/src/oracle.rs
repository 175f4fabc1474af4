//! Brute-force ground truth.
//!
//! Expected utilities are summed over the support of the distribution only,
//! and the exhaustive optimizer scans all `2^m` candidate predictions, so the
//! cost is `O(2^m · |support|)`. The scan runs in parallel; the reduction picks
//! the best value and, on exact ties, the lexicographically smallest
//! candidate, so the result does not depend on scheduling.

use rayon::prelude::*;

use crate::distributions::Enumerable;
use crate::error::{check_dims, Error, Result};
use crate::label::LabelVector;
use crate::metrics::MetricKind;

/// Default limit on `m` for exhaustive search.
pub const DEFAULT_CAP: usize = 14;

/// Hard limit regardless of configuration: candidates are indexed by `u64`.
const HARD_CAP: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Optimal prediction (risk minimizer for losses, maximizer for utilities).
    pub best: LabelVector,
    /// Expected metric value of `best`.
    pub value: f64,
    /// Number of candidate predictions examined.
    pub evaluated: u64,
}

/// `E[metric(Y, h)]` under `dist`.
pub fn expected_metric(dist: &dyn Enumerable, h: &LabelVector, metric: MetricKind) -> Result<f64> {
    check_dims(dist.m(), h.m())?;
    let mut acc = 0.0;
    dist.for_each_outcome(&mut |y, p| acc += p * metric.eval(y, h));
    Ok(acc)
}

/// Exhaustive optimizer with a configurable size cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap: cap.min(HARD_CAP),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, m: usize) -> Result<()> {
        if m > self.cap {
            Err(Error::CapExceeded { m, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn maximize(&self, dist: &dyn Enumerable, metric: MetricKind) -> Result<OracleResult> {
        let m = dist.m();
        self.check(m)?;
        let outcomes = dist.outcomes();
        let sign = if metric.is_utility() { 1.0 } else { -1.0 };
        let score = |idx: u64| {
            let h = LabelVector::from_index(m, idx);
            outcomes
                .iter()
                .map(|(y, p)| p * metric.eval(y, &h))
                .sum::<f64>()
        };
        let total = 1u64 << m;
        let (value, idx) = (0..total)
            .into_par_iter()
            .map(|idx| (score(idx), idx))
            .reduce(
                || (f64::NAN, u64::MAX),
                |a, b| {
                    if a.1 == u64::MAX {
                        return b;
                    }
                    if b.1 == u64::MAX {
                        return a;
                    }
                    let (sa, sb) = (sign * a.0, sign * b.0);
                    if sb > sa || (sb == sa && b.1 < a.1) {
                        b
                    } else {
                        a
                    }
                },
            );
        Ok(OracleResult {
            best: LabelVector::from_index(m, idx),
            value,
            evaluated: total,
        })
    }

    /// Regret of `h`: the expected-metric gap to the optimum, oriented so that
    /// it is nonnegative for both utilities and losses.
    pub fn regret(
        &self,
        dist: &dyn Enumerable,
        h: &LabelVector,
        metric: MetricKind,
    ) -> Result<f64> {
        check_dims(dist.m(), h.m())?;
        let best = self.maximize(dist, metric)?;
        let value = expected_metric(dist, h, metric)?;
        Ok(if metric.is_utility() {
            best.value - value
        } else {
            value - best.value
        })
    }
}

pub fn maximize_exhaustive(dist: &dyn Enumerable, metric: MetricKind) -> Result<OracleResult> {
    Oracle::default().maximize(dist, metric)
}

pub fn regret(dist: &dyn Enumerable, h: &LabelVector, metric: MetricKind) -> Result<f64> {
    Oracle::default().regret(dist, h, metric)
}

/// Hamming-loss minimizer: the vector of marginal modes.
pub fn hamming_minimizer(dist: &dyn Enumerable) -> LabelVector {
    dist.marginal_modes()
}

/// Subset 0/1 minimizer: the joint mode.
pub fn subset_minimizer(dist: &dyn Enumerable) -> LabelVector {
    dist.joint_mode()
}
