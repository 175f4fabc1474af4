//! A small synthetic experiment, summarized per training size.
use fmax::simulate::{run_experiment, summarize, write_summary_csv, Scenario, ScenarioConfig};

fn main() -> fmax::Result<()> {
    let mut cfg = ScenarioConfig::desk(Scenario::Chain);
    cfg.train_sizes = vec![10, 100, 2000];
    cfg.test_size = 5000;
    let rows = run_experiment(&cfg)?;
    let summary = summarize(&rows)?;
    write_summary_csv(&summary, std::io::stdout().lock())?;
    Ok(())
}
