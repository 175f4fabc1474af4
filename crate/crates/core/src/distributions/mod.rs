//! Joint distributions over `{0,1}^m`.
//!
//! Every representation can be sampled ([`Sampler`]). All of them except
//! [`ChainLogistic`] can also be enumerated ([`Enumerable`]), which is what
//! the exact inference routines and the oracle consume. Enumeration always
//! yields outcomes in lexicographic order of their bitstrings and skips
//! zero-mass outcomes.

mod chain;
mod dense;
mod empirical;
pub mod io;
mod product;
mod sparse;

pub use chain::ChainLogistic;
pub use dense::DenseJoint;
pub use empirical::EmpiricalSample;
pub use product::ProductBernoulli;
pub use sparse::SparseJoint;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::label::LabelVector;

/// Tolerance on the total mass of a user-supplied distribution.
pub const NORMALIZATION_TOL: f64 = 1e-9;

/// Anything defined over a fixed number of labels.
pub trait LabelSpace {
    fn m(&self) -> usize;
}

/// A distribution whose support can be listed explicitly.
pub trait Enumerable: LabelSpace {
    /// Calls `f` once per outcome with positive mass, in lexicographic order.
    fn for_each_outcome(&self, f: &mut dyn FnMut(&LabelVector, f64));

    fn outcomes(&self) -> Vec<(LabelVector, f64)> {
        let mut out = Vec::new();
        self.for_each_outcome(&mut |y, p| out.push((y.clone(), p)));
        out
    }

    /// `p_i = Pr(Y_i = 1)`.
    fn marginals(&self) -> Vec<f64> {
        let mut p = vec![0.0; self.m()];
        self.for_each_outcome(&mut |y, mass| {
            for i in y.iter_ones() {
                p[i] += mass;
            }
        });
        // rounding in the sum can overshoot 1 by an ulp
        p.iter_mut().for_each(|x| *x = x.min(1.0));
        p
    }

    fn prob_all_zero(&self) -> f64 {
        let mut p0 = 0.0;
        self.for_each_outcome(&mut |y, mass| {
            if y.is_zero() {
                p0 += mass;
            }
        });
        p0
    }

    /// Most probable outcome; ties go to the lexicographically smallest.
    fn joint_mode(&self) -> LabelVector {
        let mut best: Option<(LabelVector, f64)> = None;
        self.for_each_outcome(&mut |y, mass| {
            let better = match &best {
                None => true,
                Some((by, bp)) => mass > *bp || (mass == *bp && y < by),
            };
            if better {
                best = Some((y.clone(), mass));
            }
        });
        best.map(|(y, _)| y)
            .unwrap_or_else(|| LabelVector::zeros(self.m()))
    }

    /// Per-label modes: `h_i = 1` iff `p_i > 0.5`.
    fn marginal_modes(&self) -> LabelVector {
        marginal_modes_of(&self.marginals())
    }

    fn to_sparse(&self) -> SparseJoint {
        SparseJoint::from_normalized(self.m(), self.outcomes())
    }
}

/// A distribution that can produce seeded i.i.d. draws.
pub trait Sampler: LabelSpace {
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector;

    /// `n` i.i.d. draws; the same `(seed, n)` always yields the same sample.
    fn sample(&self, n: usize, seed: u64) -> Result<EmpiricalSample> {
        if n == 0 {
            return Err(Error::EmptySample);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        EmpiricalSample::from_vectors(self.m(), (0..n).map(|_| self.draw(&mut rng)))
    }
}

/// `h_i = 1` iff `p_i > 0.5`; an exact tie at one half maps to 0.
pub fn marginal_modes_of(p: &[f64]) -> LabelVector {
    LabelVector::from_indices(
        p.len(),
        p.iter()
            .enumerate()
            .filter(|(_, &pi)| pi > 0.5)
            .map(|(i, _)| i),
    )
}

/// Cumulative-mass inversion table over an enumerable support.
#[derive(Debug, Clone)]
pub(crate) struct InversionTable {
    outcomes: Vec<LabelVector>,
    cumulative: Vec<f64>,
}

impl InversionTable {
    pub(crate) fn new(dist: &dyn Enumerable) -> Self {
        let mut outcomes = Vec::new();
        let mut cumulative = Vec::new();
        let mut acc = 0.0;
        dist.for_each_outcome(&mut |y, p| {
            acc += p;
            outcomes.push(y.clone());
            cumulative.push(acc);
        });
        Self {
            outcomes,
            cumulative,
        }
    }

    pub(crate) fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        let total = *self.cumulative.last().expect("non-empty support");
        let u: f64 = rng.random::<f64>() * total;
        let idx = self.cumulative.partition_point(|&c| c <= u);
        self.outcomes[idx.min(self.outcomes.len() - 1)].clone()
    }
}

/// Any of the supported representations, for callers that pick one at run time.
#[derive(Debug, Clone)]
pub enum AnyJoint {
    Sparse(SparseJoint),
    Dense(DenseJoint),
    Product(ProductBernoulli),
    Chain(ChainLogistic),
    Empirical(EmpiricalSample),
}

impl AnyJoint {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyJoint::Sparse(_) => "SparseJoint",
            AnyJoint::Dense(_) => "DenseJoint",
            AnyJoint::Product(_) => "ProductBernoulli",
            AnyJoint::Chain(_) => "ChainLogistic",
            AnyJoint::Empirical(_) => "EmpiricalSample",
        }
    }

    pub fn m(&self) -> usize {
        self.as_sampler().m()
    }

    pub fn as_enumerable(&self) -> Result<&dyn Enumerable> {
        match self {
            AnyJoint::Sparse(d) => Ok(d),
            AnyJoint::Dense(d) => Ok(d),
            AnyJoint::Product(d) => Ok(d),
            AnyJoint::Empirical(d) => Ok(d),
            AnyJoint::Chain(_) => Err(Error::NotEnumerable("ChainLogistic")),
        }
    }

    pub fn as_sampler(&self) -> &dyn Sampler {
        match self {
            AnyJoint::Sparse(d) => d,
            AnyJoint::Dense(d) => d,
            AnyJoint::Product(d) => d,
            AnyJoint::Chain(d) => d,
            AnyJoint::Empirical(d) => d,
        }
    }

    pub fn marginals(&self) -> Result<Vec<f64>> {
        Ok(self.as_enumerable()?.marginals())
    }

    pub fn prob_all_zero(&self) -> Result<f64> {
        Ok(self.as_enumerable()?.prob_all_zero())
    }

    pub fn joint_mode(&self) -> Result<LabelVector> {
        Ok(self.as_enumerable()?.joint_mode())
    }

    pub fn marginal_modes(&self) -> Result<LabelVector> {
        Ok(self.as_enumerable()?.marginal_modes())
    }

    pub fn sample(&self, n: usize, seed: u64) -> Result<EmpiricalSample> {
        self.as_sampler().sample(n, seed)
    }
}

macro_rules! impl_from_any {
    ($($variant:ident($ty:ty)),*) => {
        $(impl From<$ty> for AnyJoint {
            fn from(d: $ty) -> Self {
                AnyJoint::$variant(d)
            }
        })*
    };
}

impl_from_any!(
    Sparse(SparseJoint),
    Dense(DenseJoint),
    Product(ProductBernoulli),
    Chain(ChainLogistic),
    Empirical(EmpiricalSample)
);
