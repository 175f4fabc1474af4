use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use fmax::bench::{run_bench, DEFAULT_SIZES, GFM_EXPONENT_LIMIT};
use fmax::classic::{
    categorical_joint, categorical_maximize, expected_f_independent, fm_maximize,
    threshold_maximize,
};
use fmax::distributions::io::{
    read_distribution, read_marginals, read_samples, write_distribution,
};
use fmax::distributions::{marginal_modes_of, Enumerable};
use fmax::format::sig12;
use fmax::gfm::{delta_from_joint, gfm_maximize};
use fmax::oracle::{expected_metric, Oracle, DEFAULT_CAP};
use fmax::regret::{
    build_witness, verify_witness_with, RegretReport, Theorem, Witness, WitnessSpec,
    WitnessVerification, DEFAULT_EPS, DEFAULT_Q,
};
use fmax::simulate::{
    run_experiment, summarize, write_rows_csv, write_summary_csv, Scenario, ScenarioConfig,
};
use fmax::{EmpiricalSample, Error, LabelVector, MetricKind, SparseJoint};

#[derive(Parser)]
#[command(
    name = "fmax",
    version,
    about = "Exact F-measure maximization for multi-label prediction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predict a label vector from a distribution, a sample or marginals.
    Infer(InferArgs),
    /// Exhaustive optimum of a metric.
    Oracle(OracleArgs),
    /// Regret of a method against the exhaustive optimum.
    Regret(RegretArgs),
    /// Build, and optionally verify, a worst-case regret witness.
    Witness(WitnessArgs),
    /// Run a seeded synthetic experiment and write CSV.
    Simulate(SimulateArgs),
    /// Measure growth of Δ construction and maximization with m.
    Bench(BenchArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["dist", "samples", "marginals"])))]
struct InferArgs {
    #[arg(long)]
    dist: Option<PathBuf>,
    #[arg(long)]
    samples: Option<PathBuf>,
    #[arg(long)]
    marginals: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "gfm")]
    method: MethodArg,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["dist", "samples"])))]
struct JointInput {
    #[arg(long)]
    dist: Option<PathBuf>,
    #[arg(long)]
    samples: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: JointInput,
    #[arg(long, value_enum, default_value = "f")]
    metric: TargetArg,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct RegretArgs {
    #[command(flatten)]
    input: JointInput,
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "f")]
    target: TargetArg,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct WitnessArgs {
    /// One of 3.1, 3.2, 4.2, 4.5.
    #[arg(long)]
    theorem: Theorem,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = DEFAULT_Q)]
    q: f64,
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
    /// Measure the regret and print a CSV row instead of the distribution.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    scenario: Scenario,
    #[arg(long, default_value_t = 10)]
    m: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [10usize, 50, 100, 500, 2000])]
    train_sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    models: usize,
    #[arg(long, default_value_t = 5)]
    replicates: usize,
    #[arg(long, default_value_t = 20_000)]
    test_size: usize,
    #[arg(long, default_value_t = 20120)]
    seed: u64,
    /// Raw rows; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-cell means and standard errors.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SIZES)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Gfm,
    Fm,
    Mm,
    Jm,
    Threshold,
    Categorical,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Gfm => "gfm",
            MethodArg::Fm => "fm",
            MethodArg::Mm => "mm",
            MethodArg::Jm => "jm",
            MethodArg::Threshold => "threshold",
            MethodArg::Categorical => "categorical",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    F,
    Hamming,
    Subset01,
    Jaccard,
}

impl From<TargetArg> for MetricKind {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::F => MetricKind::FMeasure,
            TargetArg::Hamming => MetricKind::Hamming,
            TargetArg::Subset01 => MetricKind::SubsetZeroOne,
            TargetArg::Jaccard => MetricKind::Jaccard,
        }
    }
}

enum CliError {
    Usage(String),
    Lib(Error),
    CheckFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_) => 3,
            CliError::Lib(Error::CapExceeded { .. }) => 4,
            CliError::Lib(Error::InvalidWitness(_) | Error::InvalidConfig(_)) => 3,
            CliError::Lib(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::CheckFailed(s) => f.write_str(s),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

enum Input {
    Joint(SparseJoint),
    Samples(EmpiricalSample),
    Marginals(Vec<f64>),
}

impl Input {
    fn load(
        dist: &Option<PathBuf>,
        samples: &Option<PathBuf>,
        marginals: &Option<PathBuf>,
    ) -> CliResult<Self> {
        Ok(match (dist, samples, marginals) {
            (Some(p), _, _) => Input::Joint(read_distribution(p)?),
            (_, Some(p), _) => Input::Samples(read_samples(p)?),
            (_, _, Some(p)) => Input::Marginals(read_marginals(p)?),
            _ => return Err(CliError::Usage("one input source is required".into())),
        })
    }

    fn joint(&self) -> Option<&dyn Enumerable> {
        match self {
            Input::Joint(d) => Some(d),
            Input::Samples(s) => Some(s),
            Input::Marginals(_) => None,
        }
    }

    fn model_name(&self) -> &'static str {
        match self {
            Input::Joint(_) => "joint",
            Input::Samples(_) => "empirical",
            Input::Marginals(_) => "independent",
        }
    }
}

struct Prediction {
    h: LabelVector,
    expected_f: f64,
    model: &'static str,
}

fn predict(method: MethodArg, input: &Input) -> CliResult<Prediction> {
    if let Some(dist) = input.joint() {
        let h = match method {
            MethodArg::Gfm => gfm_maximize(&delta_from_joint(dist)).h,
            MethodArg::Fm => fm_maximize(&dist.marginals())?.h,
            MethodArg::Mm => dist.marginal_modes(),
            MethodArg::Jm => dist.joint_mode(),
            MethodArg::Threshold => threshold_maximize(dist).h,
            MethodArg::Categorical => categorical_maximize(&dist.marginals())?,
        };
        let expected_f = expected_metric(dist, &h, MetricKind::FMeasure)?;
        return Ok(Prediction {
            h,
            expected_f,
            model: input.model_name(),
        });
    }
    let Input::Marginals(p) = input else {
        unreachable!()
    };
    match method {
        MethodArg::Fm => {
            let r = fm_maximize(p)?;
            Ok(Prediction {
                h: r.h,
                expected_f: r.expected_f_under_independence,
                model: "independent",
            })
        }
        MethodArg::Mm => {
            let h = marginal_modes_of(p);
            let expected_f = expected_f_independent(p, &h)?;
            Ok(Prediction {
                h,
                expected_f,
                model: "independent",
            })
        }
        MethodArg::Categorical => {
            let h = categorical_maximize(p)?;
            let expected_f = expected_metric(&categorical_joint(p)?, &h, MetricKind::FMeasure)?;
            Ok(Prediction {
                h,
                expected_f,
                model: "categorical",
            })
        }
        MethodArg::Gfm | MethodArg::Jm | MethodArg::Threshold => Err(CliError::Usage(format!(
            "method {} needs --dist or --samples",
            method.name()
        ))),
    }
}

fn infer(args: &InferArgs) -> CliResult {
    let input = Input::load(&args.dist, &args.samples, &args.marginals)?;
    let p = predict(args.method, &input)?;
    println!("prediction: {}", p.h);
    println!("expected_f: {}", sig12(p.expected_f));
    println!("method: {}", args.method.name());
    println!("model: {}", p.model);
    Ok(())
}

fn load_joint(input: &JointInput) -> CliResult<Input> {
    Input::load(&input.dist, &input.samples, &None)
}

fn oracle(args: &OracleArgs) -> CliResult {
    let input = load_joint(&args.input)?;
    let dist = input.joint().expect("joint input");
    let r = Oracle::with_cap(args.cap).maximize(dist, args.metric.into())?;
    println!("best: {}", r.best);
    println!("value: {}", sig12(r.value));
    println!("metric: {}", MetricKind::from(args.metric));
    println!("evaluated: {}", r.evaluated);
    Ok(())
}

fn regret(args: &RegretArgs) -> CliResult {
    let input = load_joint(&args.input)?;
    let dist = input.joint().expect("joint input");
    let oracle = Oracle::with_cap(args.cap);
    // fail on the cap before running the method
    if dist.m() > oracle.cap() {
        return Err(Error::CapExceeded {
            m: dist.m(),
            cap: oracle.cap(),
        }
        .into());
    }
    let h = predict(args.method, &input)?.h;
    let metric = MetricKind::from(args.target);
    let r = RegretReport::measure(&oracle, dist, args.method.name(), h, metric)?;
    println!("method,target,h_method,h_oracle,value_method,value_oracle,regret");
    println!(
        "{},{},{},{},{},{},{}",
        r.method,
        metric,
        r.h_method,
        r.h_oracle,
        sig12(r.value_method),
        sig12(r.value_oracle),
        sig12(r.regret)
    );
    Ok(())
}

fn witness(args: &WitnessArgs) -> CliResult {
    let spec = WitnessSpec::new(args.theorem, args.m)
        .with_q(args.q)
        .with_eps(args.eps);
    if args.verify {
        let v = verify_witness_with(&spec, &Oracle::with_cap(args.cap))?;
        println!("{}", WitnessVerification::CSV_HEADER);
        println!("{}", v.csv_row());
        return Ok(());
    }
    match build_witness(&spec)? {
        Witness::Single(d) => print!("{}", write_distribution(&d)),
        Witness::Pair {
            independent,
            dependent,
        } => {
            let p: Vec<String> = independent
                .probabilities()
                .iter()
                .map(|&x| sig12(x))
                .collect();
            println!("# independent twin: product of marginals {}", p.join(" "));
            print!("{}", write_distribution(&dependent));
        }
    }
    Ok(())
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomically(
    path: &Path,
    fill: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> CliResult {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = std::io::BufWriter::new(tmp.as_file_mut());
        fill(&mut w)?;
        w.flush()?;
    }
    tmp.persist(path).map_err(|e| CliError::from(e.error))?;
    Ok(())
}

fn simulate(args: &SimulateArgs) -> CliResult {
    let cfg = ScenarioConfig {
        scenario: args.scenario,
        m: args.m,
        train_sizes: args.train_sizes.clone(),
        n_models: args.models,
        n_replicates: args.replicates,
        test_size: args.test_size,
        seed: args.seed,
    };
    let rows = run_experiment(&cfg)?;
    match &args.out {
        Some(path) => write_atomically(path, |w| write_rows_csv(&rows, w))?,
        None => write_rows_csv(&rows, std::io::stdout().lock())?,
    }
    if let Some(path) = &args.summary {
        let summary = summarize(&rows)?;
        write_atomically(path, |w| write_summary_csv(&summary, w))?;
    }
    Ok(())
}

fn bench(args: &BenchArgs) -> CliResult {
    if args.sizes.len() < 2 || args.sizes.contains(&0) {
        return Err(CliError::Usage(
            "bench needs at least two positive sizes".into(),
        ));
    }
    let r = run_bench(&args.sizes, args.seed)?;
    println!("m,delta_secs,gfm_secs");
    for p in &r.points {
        println!("{},{},{}", p.m, sig12(p.delta_secs), sig12(p.gfm_secs));
    }
    println!("delta_exponent: {}", sig12(r.delta_exponent));
    println!("gfm_exponent: {}", sig12(r.gfm_exponent));
    if !r.within_limit() {
        return Err(CliError::CheckFailed(format!(
            "gfm exponent {} is not below {GFM_EXPONENT_LIMIT}",
            sig12(r.gfm_exponent)
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Infer(a) => infer(a),
        Command::Oracle(a) => oracle(a),
        Command::Regret(a) => regret(a),
        Command::Witness(a) => witness(a),
        Command::Simulate(a) => simulate(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
