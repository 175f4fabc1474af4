//! Seeded synthetic experiments comparing plug-in inference rules.
//!
//! For every model, training size and replicate a training sample is drawn,
//! each rule turns it into a single prediction, and the prediction is scored
//! against a large test sample drawn once per model:
//!
//! | method | prediction from the training sample |
//! |--------|-------------------------------------|
//! | MM  | empirical marginal modes |
//! | JM  | empirical joint mode |
//! | FM  | independence-based F maximizer on empirical marginals |
//! | GFM | exact F maximizer on the empirical `Δ` |
//!
//! Gaussian weights use `N(μ, 3)` with 3 read as the variance.
//!
//! Every random stream is seeded from a hash of the master seed and the
//! coordinates of the cell, and results are collected in a fixed order, so
//! the output does not depend on how work is scheduled.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;
use rayon::prelude::*;

use crate::classic::fm_maximize;
use crate::distributions::{
    AnyJoint, ChainLogistic, EmpiricalSample, Enumerable, ProductBernoulli,
};
use crate::error::{Error, Result};
use crate::format::sig12;
use crate::gfm::{delta_from_sample, gfm_maximize};
use crate::label::LabelVector;
use crate::metrics::MetricKind;
use crate::oracle::expected_metric;

const WEIGHT_VARIANCE: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scenario {
    Independent,
    Chain,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Independent => "independent",
            Scenario::Chain => "chain",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "independent" | "indep" => Ok(Scenario::Independent),
            "chain" | "dependent" => Ok(Scenario::Chain),
            _ => Err(Error::InvalidConfig(format!("unknown scenario {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    MM,
    JM,
    FM,
    GFM,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::MM, Method::JM, Method::FM, Method::GFM];

    pub fn name(self) -> &'static str {
        match self {
            Method::MM => "MM",
            Method::JM => "JM",
            Method::FM => "FM",
            Method::GFM => "GFM",
        }
    }

    /// The method's prediction from a training sample.
    pub fn predict(self, train: &EmpiricalSample) -> Result<LabelVector> {
        Ok(match self {
            Method::MM => train.marginal_modes(),
            Method::JM => train.joint_mode(),
            Method::FM => fm_maximize(&train.marginals())?.h,
            Method::GFM => gfm_maximize(&delta_from_sample(train)).h,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Metrics recorded per prediction.
pub const SCORED_METRICS: [MetricKind; 4] = [
    MetricKind::Hamming,
    MetricKind::SubsetZeroOne,
    MetricKind::FMeasure,
    MetricKind::Jaccard,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub m: usize,
    pub train_sizes: Vec<usize>,
    pub n_models: usize,
    pub n_replicates: usize,
    pub test_size: usize,
    pub seed: u64,
}

impl ScenarioConfig {
    /// Defaults sized to finish in seconds.
    pub fn desk(scenario: Scenario) -> Self {
        Self {
            scenario,
            m: 10,
            train_sizes: vec![10, 50, 100, 500, 2000],
            n_models: 5,
            n_replicates: 5,
            test_size: 20_000,
            seed: 20120,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if self.m == 0 {
            return bad("m must be at least 1");
        }
        if self.n_models == 0 || self.n_replicates == 0 || self.test_size == 0 {
            return bad("models, replicates and test size must be at least 1");
        }
        if self.train_sizes.is_empty() || self.train_sizes[0] == 0 {
            return bad("train sizes must be nonempty and positive");
        }
        if self.train_sizes.windows(2).any(|w| w[0] >= w[1]) {
            return bad("train sizes must be strictly increasing");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub scenario: Scenario,
    pub model_id: usize,
    pub train_size: usize,
    pub replicate: usize,
    pub method: Method,
    pub metric: MetricKind,
    pub value: f64,
}

impl ExperimentRow {
    pub const CSV_HEADER: &'static str =
        "scenario,model_id,train_size,replicate,method,metric,value";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.scenario,
            self.model_id,
            self.train_size,
            self.replicate,
            self.method,
            self.metric,
            sig12(self.value)
        )
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Order-sensitive hash of a tuple of integers.
pub fn derive_seed(parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(0x6a09_e667_f3bc_c908, |h, &p| splitmix64(h ^ splitmix64(p)))
}

const STREAM_MODEL: u64 = 1;
const STREAM_TEST: u64 = 2;
const STREAM_TRAIN: u64 = 3;

fn gaussian(mean: f64) -> Normal<f64> {
    Normal::new(mean, WEIGHT_VARIANCE.sqrt()).expect("finite parameters")
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::EmptyLabelSpace)
    } else {
        Ok(())
    }
}

/// `p_i = logistic(w_i)` with `w_i ~ N(0, 3)`.
pub fn make_independent_model(m: usize, seed: u64) -> Result<ProductBernoulli> {
    check_m(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = gaussian(0.0);
    let p = (0..m)
        .map(|_| 1.0 / (1.0 + (-rng.sample(normal)).exp()))
        .collect();
    ProductBernoulli::new(p)
}

/// Chain-rule model with all weights and intercepts drawn from `N(1, 3)`.
pub fn make_chain_model(m: usize, seed: u64) -> Result<ChainLogistic> {
    check_m(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = gaussian(1.0);
    let mut intercepts = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for i in 0..m {
        intercepts.push(rng.sample(normal));
        weights.push((0..i).map(|_| rng.sample(normal)).collect());
    }
    ChainLogistic::new(intercepts, weights)
}

pub fn make_model(scenario: Scenario, m: usize, seed: u64) -> Result<AnyJoint> {
    Ok(match scenario {
        Scenario::Independent => make_independent_model(m, seed)?.into(),
        Scenario::Chain => make_chain_model(m, seed)?.into(),
    })
}

/// Scores one prediction under all [`SCORED_METRICS`].
pub fn score(test: &dyn Enumerable, h: &LabelVector) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for (slot, metric) in out.iter_mut().zip(SCORED_METRICS) {
        *slot = expected_metric(test, h, metric)?;
    }
    Ok(out)
}

pub fn run_experiment(cfg: &ScenarioConfig) -> Result<Vec<ExperimentRow>> {
    cfg.validate()?;
    let seed = cfg.seed;

    let models: Vec<(AnyJoint, EmpiricalSample)> = (0..cfg.n_models)
        .into_par_iter()
        .map(|model_id| {
            let id = model_id as u64;
            let model = make_model(cfg.scenario, cfg.m, derive_seed(&[seed, STREAM_MODEL, id]))?;
            let test = model.sample(cfg.test_size, derive_seed(&[seed, STREAM_TEST, id]))?;
            Ok((model, test))
        })
        .collect::<Result<_>>()?;

    let cells: Vec<(usize, usize, usize)> = (0..cfg.n_models)
        .flat_map(|model| {
            cfg.train_sizes
                .iter()
                .flat_map(move |&n| (0..cfg.n_replicates).map(move |r| (model, n, r)))
        })
        .collect();

    // indexed collect keeps the canonical (model, size, replicate) order
    let per_cell: Vec<Vec<ExperimentRow>> = cells
        .par_iter()
        .map(|&(model_id, train_size, replicate)| {
            let (model, test) = &models[model_id];
            let train_seed = derive_seed(&[
                seed,
                STREAM_TRAIN,
                model_id as u64,
                replicate as u64,
                train_size as u64,
            ]);
            let train = model.sample(train_size, train_seed)?;
            let mut rows = Vec::with_capacity(16);
            for method in Method::ALL {
                let h = method.predict(&train)?;
                for (metric, value) in SCORED_METRICS.into_iter().zip(score(test, &h)?) {
                    rows.push(ExperimentRow {
                        scenario: cfg.scenario,
                        model_id,
                        train_size,
                        replicate,
                        method,
                        metric,
                        value,
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;

    Ok(per_cell.into_iter().flatten().collect())
}

/// Sample mean and standard error (`sd / √n`, with the `n - 1` sample
/// standard deviation; zero for a single value).
pub fn mean_stderr(values: &[f64]) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() == 1 {
        return Ok((mean, 0.0));
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok((mean, (var / n).sqrt()))
}

/// One aggregated cell: all models and replicates for a training size,
/// method and metric.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub scenario: Scenario,
    pub train_size: usize,
    pub method: Method,
    pub metric: MetricKind,
    pub mean: f64,
    pub stderr: f64,
    pub n: usize,
}

impl SummaryRow {
    pub const CSV_HEADER: &'static str = "scenario,train_size,method,metric,mean,stderr,n";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.scenario,
            self.train_size,
            self.method,
            self.metric,
            sig12(self.mean),
            sig12(self.stderr),
            self.n
        )
    }
}

pub fn summarize(rows: &[ExperimentRow]) -> Result<Vec<SummaryRow>> {
    if rows.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut groups: std::collections::BTreeMap<_, Vec<f64>> = Default::default();
    for r in rows {
        groups
            .entry((r.scenario, r.train_size, r.method, r.metric))
            .or_default()
            .push(r.value);
    }
    groups
        .into_iter()
        .map(|((scenario, train_size, method, metric), values)| {
            let (mean, stderr) = mean_stderr(&values)?;
            Ok(SummaryRow {
                scenario,
                train_size,
                method,
                metric,
                mean,
                stderr,
                n: values.len(),
            })
        })
        .collect()
}

/// Looks up one cell of a summary.
pub fn find_cell(
    summary: &[SummaryRow],
    train_size: usize,
    method: Method,
    metric: MetricKind,
) -> Option<&SummaryRow> {
    summary
        .iter()
        .find(|r| r.train_size == train_size && r.method == method && r.metric == metric)
}

pub fn write_rows_csv(rows: &[ExperimentRow], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{}", ExperimentRow::CSV_HEADER)?;
    for r in rows {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

pub fn write_summary_csv(summary: &[SummaryRow], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{}", SummaryRow::CSV_HEADER)?;
    for r in summary {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut buf = Vec::new();
    write_rows_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
