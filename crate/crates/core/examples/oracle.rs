//! Exhaustive optima under each metric, and the regret of a fixed prediction.
use fmax::fixtures::twin_a;
use fmax::oracle::Oracle;
use fmax::{LabelVector, MetricKind};

fn main() -> fmax::Result<()> {
    let dist = twin_a();
    let oracle = Oracle::default();
    for metric in MetricKind::ALL {
        let r = oracle.maximize(&dist, metric)?;
        println!(
            "{:<10} best {} value {:.4} ({} candidates)",
            metric.name(),
            r.best,
            r.value,
            r.evaluated
        );
    }
    let h = LabelVector::parse("1100")?;
    println!(
        "F regret of {h}: {:.4}",
        oracle.regret(&dist, &h, MetricKind::FMeasure)?
    );
    Ok(())
}
