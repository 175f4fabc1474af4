//! # fmax
//!
//! Bayes-optimal prediction of binary label vectors under the F-measure.
//!
//! Given a joint distribution over `{0,1}^m` (an explicit table, a product of
//! Bernoullis, a logistic chain, or an empirical sample) the crate computes
//!
//! * the exact F-measure maximizer through the `Δ` matrix ([`gfm`]),
//! * the predictions of rival rules: marginal modes, joint mode,
//!   independence-based F maximization, thresholding ([`classic`]),
//! * brute-force ground truth over all `2^m` predictions ([`oracle`]),
//! * closed-form worst-case regrets and the distributions that attain them
//!   ([`regret`]),
//! * seeded synthetic experiments comparing the rules ([`simulate`]).
//!
//! ```
//! use fmax::distributions::SparseJoint;
//! use fmax::gfm::{delta_from_joint, gfm_maximize};
//!
//! let dist = SparseJoint::from_strs(&[("0000", 0.5), ("1001", 0.1), ("1010", 0.2), ("1100", 0.2)])?;
//! let best = gfm_maximize(&delta_from_joint(&dist));
//! assert_eq!(best.h.to_string(), "0000");
//! assert_eq!(best.expected_f, 0.5);
//! # Ok::<(), fmax::Error>(())
//! ```

pub mod bench;
pub mod classic;
pub mod distributions;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gfm;
pub mod label;
pub mod metrics;
pub mod oracle;
pub mod regret;
pub mod simulate;

pub use distributions::{
    AnyJoint, ChainLogistic, DenseJoint, EmpiricalSample, Enumerable, LabelSpace, ProductBernoulli,
    Sampler, SparseJoint,
};
pub use error::{Error, Result};
pub use label::LabelVector;
pub use metrics::MetricKind;
