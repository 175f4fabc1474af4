use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{marginal_modes_of, Enumerable, LabelSpace, Sampler};
use crate::error::{Error, Result};
use crate::label::LabelVector;

/// Enumeration of a product distribution is refused beyond this many labels.
pub const PRODUCT_ENUMERATION_MAX_M: usize = 24;

/// Independent labels: `Pr(y) = Π p_i^{y_i} (1 - p_i)^{1 - y_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductBernoulli {
    p: Vec<f64>,
}

impl ProductBernoulli {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::EmptyLabelSpace);
        }
        if let Some(bad) = p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(Error::OutOfRange {
                what: "marginal",
                value: bad.to_string(),
                range: "[0, 1]".into(),
            });
        }
        Ok(Self { p })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    /// Mass of a single outcome.
    pub fn mass(&self, y: &LabelVector) -> f64 {
        self.p
            .iter()
            .enumerate()
            .map(|(i, &pi)| if y.get(i) { pi } else { 1.0 - pi })
            .product()
    }
}

impl LabelSpace for ProductBernoulli {
    fn m(&self) -> usize {
        self.p.len()
    }
}

impl Enumerable for ProductBernoulli {
    /// # Panics
    ///
    /// If `m` exceeds [`PRODUCT_ENUMERATION_MAX_M`].
    fn for_each_outcome(&self, f: &mut dyn FnMut(&LabelVector, f64)) {
        let m = self.p.len();
        assert!(
            m <= PRODUCT_ENUMERATION_MAX_M,
            "refusing to enumerate 2^{m} outcomes"
        );
        for idx in 0..(1u64 << m) {
            let y = LabelVector::from_index(m, idx);
            let mass = self.mass(&y);
            if mass > 0.0 {
                f(&y, mass);
            }
        }
    }

    fn marginals(&self) -> Vec<f64> {
        self.p.clone()
    }

    fn prob_all_zero(&self) -> f64 {
        self.p.iter().map(|pi| 1.0 - pi).product()
    }

    fn joint_mode(&self) -> LabelVector {
        // independence: the mode factorizes, and a tie at 0.5 favours 0
        marginal_modes_of(&self.p)
    }
}

impl Sampler for ProductBernoulli {
    fn draw(&self, rng: &mut ChaCha8Rng) -> LabelVector {
        let mut y = LabelVector::zeros(self.p.len());
        for (i, &pi) in self.p.iter().enumerate() {
            if rng.random::<f64>() < pi {
                y.set(i, true);
            }
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::SparseJoint;
    use proptest::prelude::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(ProductBernoulli::new(vec![0.2, 1.2]).is_err());
        assert!(ProductBernoulli::new(vec![]).is_err());
    }

    proptest! {
        #[test]
        fn enumeration_reproduces_product_masses(p in proptest::collection::vec(0.0f64..=1.0, 1..=8)) {
            let d = ProductBernoulli::new(p.clone()).unwrap();
            let mut total = 0.0;
            d.for_each_outcome(&mut |y, mass| {
                let expected: f64 = (0..p.len())
                    .map(|i| if y.get(i) { p[i] } else { 1.0 - p[i] })
                    .product();
                assert!((mass - expected).abs() <= 1e-12);
                total += mass;
            });
            prop_assert!((total - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn joint_mode_equals_marginal_modes(p in proptest::collection::vec(0.0f64..=1.0, 1..=8)) {
            prop_assume!(p.iter().all(|&x| x != 0.5));
            let d = ProductBernoulli::new(p).unwrap();
            let sparse: SparseJoint = d.to_sparse();
            prop_assert_eq!(sparse.joint_mode(), d.marginal_modes());
            prop_assert_eq!(Enumerable::joint_mode(&d), d.marginal_modes());
        }
    }
}
