//! General F-measure Maximizer.
//!
//! The expected F-measure of a prediction `h` with `k = Σ h_i > 0` positives
//! depends on the joint distribution only through
//!
//! ```text
//! Δ_ik = Σ_{y : y_i = 1} 2 Pr(y) / (s_y + k)        s_y = Σ_j y_j
//! ```
//!
//! as `E[F(Y, h)] = Σ_i h_i Δ_ik`, while `E[F(Y, 0)] = Pr(y = 0)`. For each
//! size `k` the best prediction therefore switches on the `k` labels with the
//! largest entries in column `k`, and the overall maximizer is the best of
//! these `m + 1` candidates. Given `Δ` this takes `O(m² log m)` time here
//! (a full sort per column).
//!
//! `Δ` can also be reached through `P`, with `p_is = Pr(y_i = 1, s_y = s)`:
//! `Δ = P · W` where `w_sk = 2 / (s + k)`.

use crate::distributions::{EmpiricalSample, Enumerable};
use crate::error::{check_dims, Result};
use crate::format::sig12;
use crate::label::LabelVector;

/// Square `m × m` matrix with 1-based accessors matching the usual `(i, k)`
/// or `(i, s)` indexing.
#[derive(Debug, Clone, PartialEq)]
struct Square {
    m: usize,
    data: Vec<f64>,
}

impl Square {
    fn zeros(m: usize) -> Self {
        Self {
            m,
            data: vec![0.0; m * m],
        }
    }

    fn get(&self, i: usize, k: usize) -> f64 {
        assert!((1..=self.m).contains(&i) && (1..=self.m).contains(&k));
        self.data[(i - 1) * self.m + (k - 1)]
    }

    fn add(&mut self, i: usize, k: usize, v: f64) {
        self.data[(i - 1) * self.m + (k - 1)] += v;
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("i,k,value\n");
        for i in 1..=self.m {
            for k in 1..=self.m {
                out.push_str(&format!("{i},{k},{}\n", sig12(self.get(i, k))));
            }
        }
        out
    }
}

/// `Δ_ik` for `u = 1` plus the scalar `Pr(y = 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaMatrix {
    delta: Square,
    p0: f64,
}

impl DeltaMatrix {
    pub fn m(&self) -> usize {
        self.delta.m
    }

    /// Entry for 1-based label `i` and prediction size `k`.
    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.delta.get(i, k)
    }

    /// `Pr(y = 0)`.
    pub fn p0(&self) -> f64 {
        self.p0
    }

    /// Column `k` (1-based) as a vector over labels.
    pub fn column(&self, k: usize) -> Vec<f64> {
        (1..=self.m()).map(|i| self.get(i, k)).collect()
    }

    /// CSV dump with header `i,k,value`.
    pub fn to_csv(&self) -> String {
        self.delta.to_csv()
    }
}

/// `p_is = Pr(y_i = 1, s_y = s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PMatrix {
    p: Square,
}

impl PMatrix {
    /// Builds a matrix from row-major entries `rows[i-1][s-1]`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        let mut p = Square::zeros(m);
        for (i, row) in rows.iter().enumerate() {
            check_dims(m, row.len())?;
            for (s, &v) in row.iter().enumerate() {
                p.add(i + 1, s + 1, v);
            }
        }
        Ok(Self { p })
    }

    pub fn m(&self) -> usize {
        self.p.m
    }

    pub fn get(&self, i: usize, s: usize) -> f64 {
        self.p.get(i, s)
    }

    /// CSV dump with header `i,k,value` (here `k` is the count `s`).
    pub fn to_csv(&self) -> String {
        self.p.to_csv()
    }
}

/// Outcome of [`gfm_maximize`].
#[derive(Debug, Clone, PartialEq)]
pub struct GfmResult {
    pub h: LabelVector,
    pub expected_f: f64,
    /// Best prediction of each size `k = 0..=m` with its expected F-measure.
    pub per_k: Vec<(LabelVector, f64)>,
}

/// Exact `Δ` from an enumerable distribution.
pub fn delta_from_joint(dist: &dyn Enumerable) -> DeltaMatrix {
    let m = dist.m();
    let mut delta = Square::zeros(m);
    let mut p0 = 0.0;
    dist.for_each_outcome(&mut |y, p| {
        let s = y.ones_count();
        if s == 0 {
            p0 += p;
            return;
        }
        for i in y.iter_ones() {
            for k in 1..=m {
                delta.add(i + 1, k, 2.0 * p / (s + k) as f64);
            }
        }
    });
    DeltaMatrix { delta, p0 }
}

/// Plug-in estimate of `Δ` and `Pr(y = 0)` from observed frequencies.
pub fn delta_from_sample(sample: &EmpiricalSample) -> DeltaMatrix {
    delta_from_joint(sample)
}

pub fn p_matrix_from_joint(dist: &dyn Enumerable) -> PMatrix {
    let mut p = Square::zeros(dist.m());
    dist.for_each_outcome(&mut |y, mass| {
        let s = y.ones_count();
        for i in y.iter_ones() {
            p.add(i + 1, s, mass);
        }
    });
    PMatrix { p }
}

pub fn p_matrix_from_sample(sample: &EmpiricalSample) -> PMatrix {
    p_matrix_from_joint(sample)
}

/// `Δ = P · W` with `w_sk = 2 / (s + k)`; `p0` is passed through.
pub fn delta_from_p(p: &PMatrix, p0: f64) -> DeltaMatrix {
    let m = p.m();
    let mut delta = Square::zeros(m);
    for i in 1..=m {
        for k in 1..=m {
            let v: f64 = (1..=m).map(|s| p.get(i, s) * 2.0 / (s + k) as f64).sum();
            delta.add(i, k, v);
        }
    }
    DeltaMatrix { delta, p0 }
}

/// Labels ordered by column `k` descending; equal entries keep the lower index first.
fn column_order(delta: &DeltaMatrix, k: usize) -> Vec<usize> {
    let col = delta.column(k);
    let mut order: Vec<usize> = (0..delta.m()).collect();
    order.sort_by(|&a, &b| col[b].total_cmp(&col[a]).then(a.cmp(&b)));
    order
}

/// Exact F-measure maximizer given `Δ` and `Pr(y = 0)`.
pub fn gfm_maximize(delta: &DeltaMatrix) -> GfmResult {
    let m = delta.m();
    let mut per_k = Vec::with_capacity(m + 1);
    per_k.push((LabelVector::zeros(m), delta.p0));
    for k in 1..=m {
        let top = &column_order(delta, k)[..k];
        let value: f64 = top.iter().map(|&i| delta.get(i + 1, k)).sum();
        per_k.push((LabelVector::from_indices(m, top.iter().copied()), value));
    }
    let mut best = 0;
    for (k, (_, v)) in per_k.iter().enumerate().skip(1) {
        if *v > per_k[best].1 {
            best = k;
        }
    }
    GfmResult {
        h: per_k[best].0.clone(),
        expected_f: per_k[best].1,
        per_k,
    }
}

/// `E[F(Y, h)]` from `Δ`: `Σ_i h_i Δ_ik` with `k = Σ h_i`, or `Pr(y = 0)` for `h = 0`.
pub fn expected_f_via_delta(delta: &DeltaMatrix, h: &LabelVector) -> Result<f64> {
    check_dims(delta.m(), h.m())?;
    let k = h.ones_count();
    if k == 0 {
        return Ok(delta.p0);
    }
    Ok(h.iter_ones().map(|i| delta.get(i + 1, k)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{LabelSpace, ProductBernoulli, Sampler, SparseJoint};
    use crate::fixtures::{threshold_counterexample, twin_a, twin_b};
    use crate::metrics::MetricKind;
    use crate::oracle;
    use proptest::prelude::*;

    fn lv(s: &str) -> LabelVector {
        LabelVector::parse(s).unwrap()
    }

    #[test]
    fn delta_hand_values() {
        let d = delta_from_joint(&twin_a());
        assert!((d.get(1, 1) - 0.5).abs() < 1e-15);

        let d = delta_from_joint(&SparseJoint::from_strs(&[("11", 1.0)]).unwrap());
        for k in 1..=2 {
            assert!((d.get(1, k) - 2.0 / (2 + k) as f64).abs() < 1e-15);
        }
        assert_eq!(d.p0(), 0.0);

        let d = delta_from_joint(&SparseJoint::point_mass(LabelVector::zeros(3)));
        assert_eq!(d.p0(), 1.0);
        assert!(d.delta.data.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn delta_from_sample_hand_values() {
        let s = EmpiricalSample::from_strs(&[("1111", 7)]).unwrap();
        let d = delta_from_sample(&s);
        for i in 1..=4 {
            for k in 1..=4 {
                assert!((d.get(i, k) - 2.0 / (4 + k) as f64).abs() < 1e-15);
            }
        }
        let s = EmpiricalSample::from_strs(&[("10", 3), ("01", 3)]).unwrap();
        assert!((delta_from_sample(&s).get(1, 1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn delta_from_sample_matches_counting_formula() {
        let s = twin_b().sample(1000, 5).unwrap();
        let d = delta_from_sample(&s);
        let n = s.n() as f64;
        for i in 0..4 {
            for k in 1..=4 {
                let by_count: f64 = s
                    .iter_observations()
                    .filter(|y| y.get(i))
                    .map(|y| 2.0 / (y.ones_count() + k) as f64)
                    .sum::<f64>()
                    / n;
                assert!((d.get(i + 1, k) - by_count).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn p_matrix_hand_values() {
        let p = p_matrix_from_joint(&SparseJoint::from_strs(&[("11", 1.0)]).unwrap());
        assert_eq!(p.get(1, 2), 1.0);
        assert_eq!(p.get(2, 2), 1.0);
        assert_eq!(p.get(1, 1), 0.0);
        assert_eq!(p.get(2, 1), 0.0);

        let p = p_matrix_from_joint(&twin_a());
        assert_eq!(p.get(1, 1), 0.5);
        assert_eq!(p.get(2, 1), 0.2);

        let p = p_matrix_from_joint(&ProductBernoulli::new(vec![0.5, 0.5]).unwrap());
        assert_eq!(p.get(1, 1), 0.25);
        assert_eq!(p.get(1, 2), 0.25);
    }

    #[test]
    fn delta_from_p_edge_cases() {
        let zero = PMatrix::from_rows(vec![vec![0.0; 3]; 3]).unwrap();
        let d = delta_from_p(&zero, 0.4);
        assert!(d.delta.data.iter().all(|&v| v == 0.0));
        assert_eq!(d.p0(), 0.4);

        let mut rows = vec![vec![0.0; 3]; 3];
        rows[1][2] = 1.0;
        let d = delta_from_p(&PMatrix::from_rows(rows).unwrap(), 0.0);
        for k in 1..=3 {
            assert!((d.get(2, k) - 2.0 / (3 + k) as f64).abs() < 1e-15);
        }
        assert!(PMatrix::from_rows(vec![vec![0.0; 2]; 3]).is_err());
    }

    #[test]
    fn factorization_on_hand_tables() {
        for d in [twin_a(), twin_b(), threshold_counterexample()] {
            let direct = delta_from_joint(&d);
            let via_p = delta_from_p(&p_matrix_from_joint(&d), d.prob_all_zero());
            for (a, b) in direct.delta.data.iter().zip(&via_p.delta.data) {
                assert!((a - b).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn maximizer_on_hand_tables() {
        let r = gfm_maximize(&delta_from_joint(&twin_a()));
        assert_eq!(r.h.to_string(), "1000");
        assert!((r.expected_f - 0.5).abs() < 1e-15);

        let r = gfm_maximize(&delta_from_joint(&twin_b()));
        assert_eq!(r.h.to_string(), "0000");
        assert!((r.expected_f - 0.5).abs() < 1e-15);

        let r = gfm_maximize(&delta_from_joint(&threshold_counterexample()));
        assert_eq!(r.h.to_string(), "100000000000");
        assert!((r.expected_f - 0.39).abs() < 1e-12);
        assert_eq!(r.per_k.len(), 13);
    }

    #[test]
    fn expected_f_from_delta() {
        let d = delta_from_joint(&twin_a());
        assert_eq!(expected_f_via_delta(&d, &lv("0000")).unwrap(), 0.0);
        let v = expected_f_via_delta(&d, &lv("1100")).unwrap();
        assert!((v - 7.0 / 15.0).abs() < 1e-15);
        assert!(expected_f_via_delta(&d, &lv("110")).is_err());

        let d = delta_from_joint(&twin_b());
        assert_eq!(expected_f_via_delta(&d, &lv("0000")).unwrap(), 0.5);
    }

    #[test]
    fn csv_dump_has_header_and_m_squared_rows() {
        let csv = delta_from_joint(&twin_a()).to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("i,k,value"));
        assert_eq!(lines.next(), Some("1,1,0.5"));
        assert_eq!(csv.lines().count(), 17);
        assert!(p_matrix_from_joint(&twin_a())
            .to_csv()
            .starts_with("i,k,value\n"));
    }

    fn sparse_joint(max_m: usize, max_support: usize) -> impl Strategy<Value = SparseJoint> {
        (1..=max_m).prop_flat_map(move |m| {
            proptest::collection::btree_map(0u64..(1u64 << m), 0.01f64..1.0, 1..=max_support)
                .prop_map(move |entries| {
                    let total: f64 = entries.values().sum();
                    SparseJoint::new(
                        m,
                        entries
                            .into_iter()
                            .map(|(idx, w)| (LabelVector::from_index(m, idx), w / total)),
                    )
                    .unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn delta_invariants(d in sparse_joint(8, 24)) {
            let delta = delta_from_joint(&d);
            let p = p_matrix_from_joint(&d);
            let marg = d.marginals();
            for i in 1..=d.m() {
                for k in 1..=d.m() {
                    let v = delta.get(i, k);
                    prop_assert!((0.0..=1.0).contains(&v));
                    if k > 1 {
                        prop_assert!(v <= delta.get(i, k - 1) + 1e-15);
                    }
                }
                let row: f64 = (1..=d.m()).map(|s| p.get(i, s)).sum();
                prop_assert!((row - marg[i - 1]).abs() < 1e-12);
                prop_assert_eq!(p.get(i, d.m()), p.get(1, d.m()));
            }
        }

        #[test]
        fn expected_f_via_delta_matches_oracle(d in sparse_joint(8, 24), bits in any::<u64>()) {
            let h = LabelVector::from_index(d.m(), bits & ((1u64 << d.m()) - 1));
            let via = expected_f_via_delta(&delta_from_joint(&d), &h).unwrap();
            let direct = oracle::expected_metric(&d, &h, MetricKind::FMeasure).unwrap();
            prop_assert!((via - direct).abs() < 1e-12);
        }

        #[test]
        fn per_k_values_are_top_k_column_sums(d in sparse_joint(8, 24)) {
            let delta = delta_from_joint(&d);
            let r = gfm_maximize(&delta);
            prop_assert_eq!(r.per_k[0].1, d.prob_all_zero());
            for k in 1..=d.m() {
                let mut col = delta.column(k);
                col.sort_by(|a, b| b.partial_cmp(a).unwrap());
                let top: f64 = col[..k].iter().sum();
                prop_assert!((r.per_k[k].1 - top).abs() < 1e-12);
                prop_assert_eq!(r.per_k[k].0.ones_count(), k);
            }
            let best = r.per_k.iter().map(|(_, v)| *v).fold(f64::NEG_INFINITY, f64::max);
            prop_assert_eq!(r.expected_f, best);
        }
    }
}
