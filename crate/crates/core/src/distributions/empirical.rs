use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;

use super::{Enumerable, LabelSpace, Sampler, SparseJoint};
use crate::error::{check_dims, Error, Result};
use crate::label::LabelVector;

/// Multiset of observed label vectors. As a distribution it puts mass
/// `count / n` on every observed vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalSample {
    m: usize,
    counts: BTreeMap<LabelVector, u64>,
    n: u64,
}

impl EmpiricalSample {
    pub fn from_vectors(m: usize, vectors: impl IntoIterator<Item = LabelVector>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut n = 0u64;
        for y in vectors {
            check_dims(m, y.m())?;
            *counts.entry(y).or_insert(0) += 1;
            n += 1;
        }
        if n == 0 {
            return Err(Error::EmptySample);
        }
        Ok(Self { m, counts, n })
    }

    pub fn from_counts(
        m: usize,
        entries: impl IntoIterator<Item = (LabelVector, u64)>,
    ) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut n = 0u64;
        for (y, c) in entries {
            check_dims(m, y.m())?;
            if c > 0 {
                *counts.entry(y).or_insert(0) += c;
                n += c;
            }
        }
        if n == 0 {
            return Err(Error::EmptySample);
        }
        Ok(Self { m, counts, n })
    }

    pub fn from_strs(entries: &[(&str, u64)]) -> Result<Self> {
        let parsed = entries
            .iter()
            .map(|(s, c)| Ok((LabelVector::parse(s)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        let m = parsed
            .first()
            .map(|(y, _)| y.m())
            .ok_or(Error::EmptySample)?;
        Self::from_counts(m, parsed)
    }

    /// Total number of observations.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, y: &LabelVector) -> u64 {
        self.counts.get(y).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn iter_counts(&self) -> impl Iterator<Item = (&LabelVector, u64)> {
        self.counts.iter().map(|(y, &c)| (y, c))
    }

    /// Observations in lexicographic order, repeated by count.
    pub fn iter_observations(&self) -> impl Iterator<Item = &LabelVector> {
        self.counts
            .iter()
            .flat_map(|(y, &c)| std::iter::repeat_n(y, c as usize))
    }
}

impl LabelSpace for EmpiricalSample {
    fn m(&self) -> usize {
        self.m
    }
}

impl Enumerable for EmpiricalSample {
    fn for_each_outcome(&self, f: &mut dyn FnMut(&LabelVector, f64)) {
        let n = self.n as f64;
        for (y, &c) in &self.counts {
            f(y, c as f64 / n);
        }
    }

    fn marginals(&self) -> Vec<f64> {
        let mut hits = vec![0u64; self.m];
        for (y, &c) in &self.counts {
            for i in y.iter_ones() {
                hits[i] += c;
            }
        }
        hits.into_iter().map(|h| h as f64 / self.n as f64).collect()
    }

    /// Most frequent vector; ties go to the lexicographically smallest.
    fn joint_mode(&self) -> LabelVector {
        let mut best: Option<(&LabelVector, u64)> = None;
        for (y, &c) in &self.counts {
            // BTreeMap order is lexicographic, so strict > keeps the smallest tie
            if best.is_none_or(|(_, bc)| c > bc) {
                best = Some((y, c));
            }
        }
        best.map(|(y, _)| y.clone()).expect("non-empty sample")
    }

    fn to_sparse(&self) -> SparseJoint {
        SparseJoint::from_normalized(self.m, self.outcomes())
    }
}

impl Sampler for EmpiricalSample {
    /// Bootstrap draw from the observed frequencies.
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        super::InversionTable::new(self).draw(rng)
    }

    fn sample(&self, n: usize, seed: u64) -> Result<EmpiricalSample> {
        super::sparse::sample_by_inversion(self, n, seed)
    }
}
