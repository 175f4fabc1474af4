//! Independence-based, categorical and threshold rules next to the exact maximizer.
use fmax::classic::{categorical_maximize, fm_maximize, threshold_candidates, threshold_maximize};
use fmax::fixtures::threshold_counterexample;
use fmax::gfm::{delta_from_joint, gfm_maximize};
use fmax::Enumerable;

fn main() -> fmax::Result<()> {
    let p = [0.9, 0.6, 0.3, 0.05];
    let fm = fm_maximize(&p)?;
    println!(
        "FM on {p:?}: {} (E[F] under independence {:.4})",
        fm.h, fm.expected_f_under_independence
    );

    let cat = [0.4, 0.3, 0.2, 0.1];
    println!("categorical on {cat:?}: {}", categorical_maximize(&cat)?);

    let dist = threshold_counterexample();
    for (theta, h) in threshold_candidates(&dist.marginals()) {
        println!("threshold {theta:<5} -> {h}");
    }
    let t = threshold_maximize(&dist);
    let g = gfm_maximize(&delta_from_joint(&dist));
    println!(
        "best threshold {} ({:.4}) vs exact {} ({:.4})",
        t.h, t.expected_f, g.h, g.expected_f
    );
    Ok(())
}
