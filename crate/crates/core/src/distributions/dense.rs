use rand_chacha::ChaCha8Rng;

use super::{EmpiricalSample, Enumerable, InversionTable, LabelSpace, Sampler, NORMALIZATION_TOL};
use crate::error::{Error, Result};
use crate::label::LabelVector;

/// Largest label count a dense table accepts.
pub const DENSE_MAX_M: usize = 20;

/// Full probability table of length `2^m`, indexed by
/// [`LabelVector::to_index`] (label 1 is the most significant bit).
#[derive(Debug, Clone, PartialEq)]
pub struct DenseJoint {
    m: usize,
    probs: Vec<f64>,
}

impl DenseJoint {
    pub fn new(m: usize, probs: Vec<f64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyLabelSpace);
        }
        if m > DENSE_MAX_M {
            return Err(Error::OutOfRange {
                what: "m",
                value: m.to_string(),
                range: format!("1..={DENSE_MAX_M}"),
            });
        }
        if probs.len() != 1 << m {
            return Err(Error::InvalidDistribution(format!(
                "dense table for m = {m} needs {} entries, got {}",
                1u64 << m,
                probs.len()
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidDistribution(
                "masses must be finite and nonnegative".into(),
            ));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "masses sum to {total}, not 1"
            )));
        }
        Ok(Self {
            m,
            probs: probs.into_iter().map(|p| p / total).collect(),
        })
    }

    pub fn from_enumerable(dist: &dyn Enumerable) -> Result<Self> {
        let m = dist.m();
        if m > DENSE_MAX_M {
            return Err(Error::OutOfRange {
                what: "m",
                value: m.to_string(),
                range: format!("1..={DENSE_MAX_M}"),
            });
        }
        let mut probs = vec![0.0; 1 << m];
        dist.for_each_outcome(&mut |y, p| probs[y.to_index() as usize] += p);
        Self::new(m, probs)
    }

    pub fn mass(&self, y: &LabelVector) -> f64 {
        self.probs[y.to_index() as usize]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

impl LabelSpace for DenseJoint {
    fn m(&self) -> usize {
        self.m
    }
}

impl Enumerable for DenseJoint {
    fn for_each_outcome(&self, f: &mut dyn FnMut(&LabelVector, f64)) {
        for (idx, &p) in self.probs.iter().enumerate() {
            if p > 0.0 {
                f(&LabelVector::from_index(self.m, idx as u64), p);
            }
        }
    }
}

impl Sampler for DenseJoint {
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        InversionTable::new(self).draw(rng)
    }

    fn sample(&self, n: usize, seed: u64) -> Result<EmpiricalSample> {
        super::sparse::sample_by_inversion(self, n, seed)
    }
}
