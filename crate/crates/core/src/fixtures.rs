//! Small hand-built distributions used by tests, examples and the CLI docs.

use crate::distributions::SparseJoint;

/// Four labels, mass only on single-positive vectors; marginals
/// `(0.5, 0.2, 0.2, 0.1)`. The F-maximizer is `1000`.
pub fn twin_a() -> SparseJoint {
    SparseJoint::from_strs(&[("0001", 0.1), ("0010", 0.2), ("0100", 0.2), ("1000", 0.5)])
        .expect("valid table")
}

/// Same marginals as [`twin_a`] but half the mass on the empty vector.
/// The F-maximizer is `0000`.
pub fn twin_b() -> SparseJoint {
    SparseJoint::from_strs(&[("0000", 0.5), ("1001", 0.1), ("1010", 0.2), ("1100", 0.2)])
        .expect("valid table")
}

/// Twelve labels where label 2 has the largest marginal but the F-maximizer
/// is `100000000000`, so no threshold on marginals can find it.
pub fn threshold_counterexample() -> SparseJoint {
    SparseJoint::from_strs(&[
        ("000000000000", 0.21),
        ("100000000000", 0.39),
        ("011111100000", 0.2),
        ("010000011111", 0.2),
    ])
    .expect("valid table")
}
