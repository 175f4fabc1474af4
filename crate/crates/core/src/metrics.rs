//! Instance-wise performance measures on a pair of label vectors.
//!
//! Degenerate cases: the F-measure (and precision/recall) of two all-zero
//! vectors is 1, while the Jaccard index of two all-zero vectors is 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_dims, Error, Result};
use crate::label::LabelVector;

/// The measures supported by the oracle and the simulation harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricKind {
    FMeasure,
    Hamming,
    SubsetZeroOne,
    Jaccard,
    Precision,
    Recall,
}

impl MetricKind {
    pub const ALL: [MetricKind; 6] = [
        MetricKind::FMeasure,
        MetricKind::Hamming,
        MetricKind::SubsetZeroOne,
        MetricKind::Jaccard,
        MetricKind::Precision,
        MetricKind::Recall,
    ];

    /// Utilities are maximized; losses are minimized.
    pub fn is_utility(self) -> bool {
        !matches!(self, MetricKind::Hamming | MetricKind::SubsetZeroOne)
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::FMeasure => "FMeasure",
            MetricKind::Hamming => "Hamming",
            MetricKind::SubsetZeroOne => "Subset01",
            MetricKind::Jaccard => "Jaccard",
            MetricKind::Precision => "Precision",
            MetricKind::Recall => "Recall",
        }
    }

    /// Evaluates the metric. Panics if the lengths differ.
    pub(crate) fn eval(self, y: &LabelVector, h: &LabelVector) -> f64 {
        let tp = y.intersection_count(h);
        let sy = y.ones_count();
        let sh = h.ones_count();
        match self {
            MetricKind::FMeasure => ratio_or(2 * tp, sy + sh, 1.0),
            MetricKind::Hamming => y.hamming_distance(h) as f64 / y.m() as f64,
            MetricKind::SubsetZeroOne => {
                if y == h {
                    0.0
                } else {
                    1.0
                }
            }
            MetricKind::Jaccard => ratio_or(tp, sy + sh - tp, 0.0),
            MetricKind::Precision => ratio_or(tp, sh, 1.0),
            MetricKind::Recall => ratio_or(tp, sy, 1.0),
        }
    }

    pub fn evaluate(self, y: &LabelVector, h: &LabelVector) -> Result<f64> {
        check_dims(y.m(), h.m())?;
        Ok(self.eval(y, h))
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "fmeasure" | "f1" => Ok(MetricKind::FMeasure),
            "hamming" => Ok(MetricKind::Hamming),
            "subset01" | "subset" | "subsetzeroone" => Ok(MetricKind::SubsetZeroOne),
            "jaccard" => Ok(MetricKind::Jaccard),
            "precision" => Ok(MetricKind::Precision),
            "recall" => Ok(MetricKind::Recall),
            other => Err(Error::InvalidConfig(format!("unknown metric {other:?}"))),
        }
    }
}

fn ratio_or(num: usize, den: usize, zero_over_zero: f64) -> f64 {
    if den == 0 {
        zero_over_zero
    } else {
        num as f64 / den as f64
    }
}

/// `2 Σ y_i h_i / (Σ y_i + Σ h_i)`, with `0/0 = 1`.
pub fn f_measure(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::FMeasure.evaluate(y, h)
}

/// Fraction of labels on which `y` and `h` disagree.
pub fn hamming_loss(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::Hamming.evaluate(y, h)
}

/// 0 if the vectors are identical, 1 otherwise.
pub fn subset_zero_one(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::SubsetZeroOne.evaluate(y, h)
}

/// Intersection over union, with the all-zero pair scoring 0.
pub fn jaccard(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::Jaccard.evaluate(y, h)
}

pub fn precision(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::Precision.evaluate(y, h)
}

pub fn recall(y: &LabelVector, h: &LabelVector) -> Result<f64> {
    MetricKind::Recall.evaluate(y, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lv(s: &str) -> LabelVector {
        LabelVector::parse(s).unwrap()
    }

    #[test]
    fn f_measure_cases() {
        assert_eq!(f_measure(&lv("0000"), &lv("0000")).unwrap(), 1.0);
        assert_eq!(f_measure(&lv("1000"), &lv("1000")).unwrap(), 1.0);
        assert!((f_measure(&lv("1100"), &lv("1000")).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn hamming_cases() {
        assert_eq!(hamming_loss(&lv("1010"), &lv("1001")).unwrap(), 0.5);
        assert_eq!(hamming_loss(&lv("111"), &lv("111")).unwrap(), 0.0);
        assert_eq!(hamming_loss(&lv("000"), &lv("111")).unwrap(), 1.0);
    }

    #[test]
    fn subset_cases() {
        assert_eq!(subset_zero_one(&lv("0101"), &lv("0101")).unwrap(), 0.0);
        assert_eq!(subset_zero_one(&lv("0101"), &lv("0100")).unwrap(), 1.0);
        assert_eq!(subset_zero_one(&lv("0000"), &lv("1111")).unwrap(), 1.0);
    }

    #[test]
    fn jaccard_cases() {
        assert_eq!(jaccard(&lv("0000"), &lv("0000")).unwrap(), 0.0);
        assert_eq!(jaccard(&lv("1100"), &lv("1000")).unwrap(), 0.5);
        assert_eq!(jaccard(&lv("1111"), &lv("1111")).unwrap(), 1.0);
    }

    #[test]
    fn precision_recall_cases() {
        assert_eq!(precision(&lv("1100"), &lv("1000")).unwrap(), 1.0);
        assert_eq!(recall(&lv("1100"), &lv("1000")).unwrap(), 0.5);
        assert_eq!(precision(&lv("0000"), &lv("0000")).unwrap(), 1.0);
        assert_eq!(recall(&lv("0000"), &lv("0000")).unwrap(), 1.0);
        assert_eq!(precision(&lv("1010"), &lv("0101")).unwrap(), 0.0);
        assert_eq!(recall(&lv("1010"), &lv("0101")).unwrap(), 0.0);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        for kind in MetricKind::ALL {
            assert!(matches!(
                kind.evaluate(&lv("10"), &lv("100")),
                Err(Error::DimensionMismatch {
                    expected: 2,
                    found: 3
                })
            ));
        }
    }

    #[test]
    fn metric_names_round_trip() {
        for kind in MetricKind::ALL {
            assert_eq!(kind.name().parse::<MetricKind>().unwrap(), kind);
        }
    }

    fn pair() -> impl Strategy<Value = (LabelVector, LabelVector)> {
        (1usize..=12).prop_flat_map(|m| {
            (
                proptest::collection::vec(any::<bool>(), m),
                proptest::collection::vec(any::<bool>(), m),
            )
                .prop_map(|(a, b)| (LabelVector::from_bools(&a), LabelVector::from_bools(&b)))
        })
    }

    proptest! {
        #[test]
        fn f_is_harmonic_mean_of_precision_and_recall((y, h) in pair()) {
            let p = precision(&y, &h).unwrap();
            let r = recall(&y, &h).unwrap();
            if p + r > 0.0 {
                let f = f_measure(&y, &h).unwrap();
                prop_assert!((f - 2.0 * p * r / (p + r)).abs() < 1e-12);
            }
        }

        #[test]
        fn symmetric_measures((y, h) in pair()) {
            prop_assert_eq!(f_measure(&y, &h).unwrap(), f_measure(&h, &y).unwrap());
            prop_assert_eq!(jaccard(&y, &h).unwrap(), jaccard(&h, &y).unwrap());
        }

        #[test]
        fn jaccard_sandwiched_by_f((y, h) in pair()) {
            prop_assume!(!(y.is_zero() && h.is_zero()));
            let f = f_measure(&y, &h).unwrap();
            let j = jaccard(&y, &h).unwrap();
            prop_assert!(f / 2.0 <= j + 1e-15);
            prop_assert!(j <= f + 1e-15);
        }

        #[test]
        fn hamming_zero_iff_subset_zero((y, h) in pair()) {
            let hl = hamming_loss(&y, &h).unwrap();
            let s = subset_zero_one(&y, &h).unwrap();
            prop_assert_eq!(hl == 0.0, s == 0.0);
        }
    }
}
