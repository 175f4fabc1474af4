use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{LabelSpace, Sampler};
use crate::error::{Error, Result};
use crate::label::LabelVector;

/// Label-dependence model built with the chain rule:
///
/// ```text
/// Pr(y_i = 1 | y_1..y_{i-1}) = 1 / (1 + exp(-Σ_{j<i} 2 w_ij (y_j - 1/2) - w_i0))
/// ```
///
/// Only sampling is supported; the support is never materialized.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainLogistic {
    intercepts: Vec<f64>,
    /// `weights[i][j]` for `j < i`; row `i` has exactly `i` entries.
    weights: Vec<Vec<f64>>,
}

impl ChainLogistic {
    pub fn new(intercepts: Vec<f64>, weights: Vec<Vec<f64>>) -> Result<Self> {
        if intercepts.is_empty() {
            return Err(Error::EmptyLabelSpace);
        }
        if weights.len() != intercepts.len() {
            return Err(Error::DimensionMismatch {
                expected: intercepts.len(),
                found: weights.len(),
            });
        }
        for (i, row) in weights.iter().enumerate() {
            if row.len() != i {
                return Err(Error::InvalidDistribution(format!(
                    "weight row {} must have {i} entries, found {}",
                    i + 1,
                    row.len()
                )));
            }
        }
        if intercepts
            .iter()
            .chain(weights.iter().flatten())
            .any(|w| !w.is_finite())
        {
            return Err(Error::InvalidDistribution("weights must be finite".into()));
        }
        Ok(Self {
            intercepts,
            weights,
        })
    }

    pub fn intercepts(&self) -> &[f64] {
        &self.intercepts
    }

    pub fn weights(&self) -> &[Vec<f64>] {
        &self.weights
    }

    /// `Pr(y_i = 1 | prefix)` where `prefix` holds at least the first `i` labels.
    pub fn conditional(&self, i: usize, prefix: &LabelVector) -> f64 {
        let z = self.weights[i]
            .iter()
            .enumerate()
            .map(|(j, w)| 2.0 * w * (if prefix.get(j) { 0.5 } else { -0.5 }))
            .sum::<f64>()
            + self.intercepts[i];
        logistic(z)
    }
}

pub(crate) fn logistic(z: f64) -> f64 {
    1.0 / (1.0 + (-z).exp())
}

impl LabelSpace for ChainLogistic {
    fn m(&self) -> usize {
        self.intercepts.len()
    }
}

impl Sampler for ChainLogistic {
    /// Ancestral sampling, label by label.
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        let m = self.m();
        let mut y = LabelVector::zeros(m);
        for i in 0..m {
            if rng.random::<f64>() < self.conditional(i, &y) {
                y.set(i, true);
            }
        }
        y
    }
}
