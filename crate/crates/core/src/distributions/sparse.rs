use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;

use super::{Enumerable, InversionTable, LabelSpace, Sampler, NORMALIZATION_TOL};
use crate::error::{check_dims, Error, Result};
use crate::label::LabelVector;

/// Explicit support listing: each stored outcome carries positive mass.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseJoint {
    m: usize,
    support: BTreeMap<LabelVector, f64>,
}

impl SparseJoint {
    /// Builds a distribution from `(outcome, mass)` pairs.
    ///
    /// Masses must be finite and nonnegative and sum to 1 within
    /// [`NORMALIZATION_TOL`]; they are renormalized afterwards. Zero masses are
    /// dropped and duplicate outcomes are rejected.
    pub fn new(m: usize, entries: impl IntoIterator<Item = (LabelVector, f64)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyLabelSpace);
        }
        let mut support = BTreeMap::new();
        let mut total = 0.0;
        for (y, p) in entries {
            check_dims(m, y.m())?;
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "mass {p} for {y} is not a finite nonnegative number"
                )));
            }
            if support.contains_key(&y) {
                return Err(Error::InvalidDistribution(format!("duplicate outcome {y}")));
            }
            total += p;
            if p > 0.0 {
                support.insert(y, p);
            }
        }
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "masses sum to {total}, not 1"
            )));
        }
        for p in support.values_mut() {
            *p /= total;
        }
        Ok(Self { m, support })
    }

    /// Convenience constructor from bitstrings.
    pub fn from_strs(entries: &[(&str, f64)]) -> Result<Self> {
        let parsed = entries
            .iter()
            .map(|(s, p)| Ok((LabelVector::parse(s)?, *p)))
            .collect::<Result<Vec<_>>>()?;
        let m = parsed
            .first()
            .map(|(y, _)| y.m())
            .ok_or_else(|| Error::InvalidDistribution("empty support".into()))?;
        Self::new(m, parsed)
    }

    /// Point mass on `y`.
    pub fn point_mass(y: LabelVector) -> Self {
        let m = y.m();
        Self {
            m,
            support: BTreeMap::from([(y, 1.0)]),
        }
    }

    /// Used for outcomes that already come from a normalized source.
    pub(crate) fn from_normalized(m: usize, entries: Vec<(LabelVector, f64)>) -> Self {
        Self {
            m,
            support: entries.into_iter().filter(|(_, p)| *p > 0.0).collect(),
        }
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    pub fn mass(&self, y: &LabelVector) -> f64 {
        self.support.get(y).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LabelVector, f64)> {
        self.support.iter().map(|(y, &p)| (y, p))
    }
}

impl LabelSpace for SparseJoint {
    fn m(&self) -> usize {
        self.m
    }
}

impl Enumerable for SparseJoint {
    fn for_each_outcome(&self, f: &mut dyn FnMut(&LabelVector, f64)) {
        for (y, &p) in &self.support {
            f(y, p);
        }
    }

    fn to_sparse(&self) -> SparseJoint {
        self.clone()
    }
}

impl Sampler for SparseJoint {
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        InversionTable::new(self).draw(rng)
    }

    fn sample(&self, n: usize, seed: u64) -> Result<super::EmpiricalSample> {
        sample_by_inversion(self, n, seed)
    }
}

/// Builds the inversion table once and reuses it for all draws.
pub(crate) fn sample_by_inversion(
    dist: &dyn Enumerable,
    n: usize,
    seed: u64,
) -> Result<super::EmpiricalSample> {
    use rand::SeedableRng;
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let table = InversionTable::new(dist);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    super::EmpiricalSample::from_vectors(dist.m(), (0..n).map(|_| table.draw(&mut rng)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_mass() {
        assert!(SparseJoint::from_strs(&[("10", 0.5), ("01", 0.4)]).is_err());
        assert!(SparseJoint::from_strs(&[("10", 1.5), ("01", -0.5)]).is_err());
        assert!(SparseJoint::from_strs(&[("10", 0.5), ("10", 0.5)]).is_err());
        assert!(matches!(
            SparseJoint::from_strs(&[("10", 0.5), ("011", 0.5)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn drops_zero_mass_and_renormalizes() {
        let d = SparseJoint::from_strs(&[("10", 0.5 + 4e-10), ("01", 0.5), ("11", 0.0)]).unwrap();
        assert_eq!(d.support_size(), 2);
        let total: f64 = d.iter().map(|(_, p)| p).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }
}
