//! The Δ matrix, its P·W factorization, and the exact F maximizer.
use fmax::fixtures::twin_b;
use fmax::gfm::{delta_from_joint, delta_from_p, gfm_maximize, p_matrix_from_joint};
use fmax::Enumerable;

fn main() {
    let dist = twin_b();
    let delta = delta_from_joint(&dist);
    print!("Δ as CSV:\n{}", delta.to_csv());

    let via_p = delta_from_p(&p_matrix_from_joint(&dist), dist.prob_all_zero());
    let m = delta.m();
    let gap = (1..=m)
        .flat_map(|i| (1..=m).map(move |k| (i, k)))
        .map(|(i, k)| (delta.get(i, k) - via_p.get(i, k)).abs())
        .fold(0.0, f64::max);
    println!("max |Δ - P·W| = {gap:e}");

    let best = gfm_maximize(&delta);
    for (k, (h, v)) in best.per_k.iter().enumerate() {
        println!("k={k}: {h} E[F] = {v:.4}");
    }
    println!("maximizer {} with E[F] = {}", best.h, best.expected_f);
}
