//! Builds each worst-case witness and compares the measured regret with the closed form.
use fmax::oracle::Oracle;
use fmax::regret::{
    independence_delta, verify_witness_with, Theorem, WitnessSpec, WitnessVerification,
};

fn main() -> fmax::Result<()> {
    let oracle = Oracle::with_cap(18);
    let specs = [
        WitnessSpec::new(Theorem::T3_1, 5),
        WitnessSpec::new(Theorem::T3_2, 6),
        WitnessSpec::new(Theorem::T4_2, 6).with_q(0.9),
        WitnessSpec::new(Theorem::T4_2, 18).with_q(0.9),
        WitnessSpec::new(Theorem::T4_5, 12),
    ];
    println!("{}", WitnessVerification::CSV_HEADER);
    for spec in specs {
        println!("{}", verify_witness_with(&spec, &oracle)?.csv_row());
    }
    for m in [6, 16, 17, 50] {
        println!("delta_{m}(0.9) = {:.5}", independence_delta(0.9, m));
    }
    Ok(())
}
