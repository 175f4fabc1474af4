//! Fitted growth exponents of Δ construction and maximization.
use fmax::bench::{run_bench, DEFAULT_SIZES, GFM_EXPONENT_LIMIT};

fn main() -> fmax::Result<()> {
    let r = run_bench(&DEFAULT_SIZES, 1)?;
    for p in &r.points {
        println!(
            "m={:<4} delta {:.3e}s  gfm {:.3e}s",
            p.m, p.delta_secs, p.gfm_secs
        );
    }
    println!("delta exponent {:.2}", r.delta_exponent);
    println!(
        "gfm exponent {:.2} (limit {GFM_EXPONENT_LIMIT})",
        r.gfm_exponent
    );
    Ok(())
}
