//! `wovl`: exact overlap coefficients, Weibull fits, Δ estimates and Monte
//! Carlo studies from the command line.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weibull_overlap::simulation::{
    fixed6, parse_config, read_csv, render_markdown, rows_from_reports, run_scenario_with, write_csv, Execution,
    ScenarioReport,
};
use weibull_overlap::*;

#[derive(Parser)]
#[command(name = "wovl", version, about = "Overlap of two Weibull populations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact overlap coefficients of two Weibull densities.
    Exact(ExactArgs),
    /// Maximum-likelihood Weibull fit of one or two samples.
    Fit(FitArgs),
    /// Estimate Δ from two samples.
    Estimate(EstimateArgs),
    /// Run the scenarios of a JSON config and write a CSV report.
    Simulate(SimulateArgs),
    /// Render a report CSV.
    Report(ReportArgs),
    /// Draw a seeded Weibull sample as CSV.
    Sample(SampleArgs),
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    scale1: f64,
    #[arg(long)]
    shape1: f64,
    #[arg(long)]
    scale2: f64,
    #[arg(long)]
    shape2: f64,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct ExactArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Comma-separated subset of delta, rho, lambda, pianka, kl.
    #[arg(long, value_delimiter = ',', default_value = "delta,rho,lambda,pianka,kl")]
    coefficients: Vec<Coefficient>,
    #[arg(long, default_value_t = 1e-9)]
    abs_tol: f64,
    #[arg(long, default_value_t = 1e-9)]
    rel_tol: f64,
    /// Probability cut from each tail of each density.
    #[arg(long, default_value_t = 1e-12)]
    tail_mass: f64,
}

#[derive(Args)]
struct FitArgs {
    /// One or two sample CSV files.
    #[arg(required = true, num_args = 1..=2)]
    inputs: Vec<PathBuf>,
    /// Fit both samples with one shared shape.
    #[arg(long)]
    equal_shape: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Parametric,
    Kernel,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    X,
    Y,
    Avg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FitModeArg {
    Unrestricted,
    EqualShape,
}

#[derive(Args)]
struct EstimateArgs {
    x: PathBuf,
    y: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Parametric)]
    method: Method,
    #[arg(long, value_enum, default_value_t = VariantArg::Avg)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = FitModeArg::Unrestricted)]
    fit_mode: FitModeArg,
}

#[derive(Args)]
struct SimulateArgs {
    config: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "WOVL_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Report CSV path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the Markdown tables here.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
}

#[derive(Args)]
struct ReportArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SampleArgs {
    #[arg(long)]
    scale: f64,
    #[arg(long)]
    shape: f64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter { .. }
        | Error::Domain { .. }
        | Error::InvalidObservation { .. }
        | Error::Parse { .. }
        | Error::Config(_)
        | Error::Report(_)
        | Error::InvalidScenario(_)
        | Error::Io(_) => 2,
        Error::DivergentIntegral { .. } => 3,
        Error::DegenerateSample(_) | Error::SampleTooSmall { .. } => 4,
        Error::NonConvergence { .. } => 5,
        Error::Accuracy { .. } | Error::NoEstimates | Error::TooManyFailures { .. } => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Exact(args) => exact(args),
        Command::Fit(args) => fit(args),
        Command::Estimate(args) => estimate(args),
        Command::Simulate(args) => simulate(args),
        Command::Report(args) => report(args),
        Command::Sample(args) => sample(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("wovl: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn read_sample(path: &Path) -> Result<Sample> {
    Sample::read_csv(path).map_err(|e| match e {
        Error::Io(msg) => Error::Io(format!("{}: {msg}", path.display())),
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn exact(args: ExactArgs) -> Result<()> {
    let p = args.pair;
    let pair = DistributionPair::from_params(p.scale1, p.shape1, p.scale2, p.shape2)?;
    let spec = QuadratureSpec::new(args.abs_tol, args.rel_tol, args.tail_mass)?;
    let mut text = String::new();
    for kind in args.coefficients {
        let value = coefficient_exact(kind, &pair, &spec)?;
        text.push_str(&format!("{kind},{}\n", fixed6(value)));
    }
    write_output(None, &text)
}

fn fit(args: FitArgs) -> Result<()> {
    let samples = args.inputs.iter().map(|p| read_sample(p)).collect::<Result<Vec<_>>>()?;
    let not_converged = |iterations, shape: f64, score| Error::NonConvergence {
        iterations,
        last_shape: shape,
        last_score: score,
    };
    let mut text = String::new();
    if args.equal_shape {
        if samples.len() != 2 {
            return Err(Error::Config("--equal-shape needs two input files".into()));
        }
        let f = fit_mle_equal_shape(&samples[0], &samples[1])?;
        if !f.converged {
            return Err(not_converged(f.iterations, f.shape(), f.score_residual));
        }
        text.push_str("scale1,scale2,shape,log_likelihood,iterations,converged\n");
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fixed6(f.first.scale()),
            fixed6(f.second.scale()),
            fixed6(f.shape()),
            fixed6(f.log_likelihood),
            f.iterations,
            f.converged
        ));
    } else {
        text.push_str("sample,scale,shape,log_likelihood,iterations,converged\n");
        for (i, s) in samples.iter().enumerate() {
            let f = fit_mle(s)?;
            if !f.converged {
                return Err(not_converged(f.iterations, f.params.shape(), f.score_residual));
            }
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                i + 1,
                fixed6(f.params.scale()),
                fixed6(f.params.shape()),
                fixed6(f.log_likelihood),
                f.iterations,
                f.converged
            ));
        }
    }
    write_output(None, &text)
}

fn estimate(args: EstimateArgs) -> Result<()> {
    let x = read_sample(&args.x)?;
    let y = read_sample(&args.y)?;
    let (method, variant, est) = match args.method {
        Method::Kernel => ("kernel", Variant::Avg, delta_kernel(&x, &y)?),
        Method::Parametric => {
            let mode = match args.fit_mode {
                FitModeArg::Unrestricted => FitMode::Unrestricted,
                FitModeArg::EqualShape => FitMode::EqualShape,
            };
            let variant = match args.variant {
                VariantArg::X => Variant::X,
                VariantArg::Y => Variant::Y,
                VariantArg::Avg => Variant::Avg,
            };
            let fitted = fit_pair(&x, &y, mode)?;
            ("parametric", variant, delta_parametric(variant, &fitted, &x, &y))
        }
    };
    let text = format!(
        "method,variant,fit_mode,value\n{method},{},{},{}\n",
        variant.name(),
        est.fit_mode,
        fixed6(est.value)
    );
    write_output(None, &text)
}

fn simulate(args: SimulateArgs) -> Result<()> {
    let text = fs::read_to_string(&args.config).map_err(|e| Error::Io(format!("{}: {e}", args.config.display())))?;
    let scenarios = parse_config(&text)?;
    let mut reports: Vec<ScenarioReport> = Vec::with_capacity(scenarios.len());
    let mut failure = None;
    for scenario in &scenarios {
        match run_scenario_with(scenario, Execution::Parallel(args.workers)) {
            Ok(r) => reports.push(r),
            Err(err) => {
                failure = Some((scenario.id.clone(), err));
                break;
            }
        }
    }
    let rows = rows_from_reports(&reports);
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            write_csv(&rows, BufWriter::new(file))?;
        }
        None => write_csv(&rows, io::stdout().lock())?,
    }
    if let Some(path) = &args.markdown {
        write_output(Some(path), &render_markdown(&rows))?;
    }
    match failure {
        None => Ok(()),
        Some((id, err)) => {
            eprintln!(
                "wovl: partial results: {} of {} scenarios written; scenario {id} aborted",
                reports.len(),
                scenarios.len()
            );
            Err(err)
        }
    }
}

fn report(args: ReportArgs) -> Result<()> {
    let file = File::open(&args.input).map_err(|e| Error::Io(format!("{}: {e}", args.input.display())))?;
    let rows = read_csv(file)?;
    match args.format {
        Format::Markdown => write_output(None, &render_markdown(&rows)),
    }
}

fn sample(args: SampleArgs) -> Result<()> {
    let params = WeibullParams::new(args.scale, args.shape)?;
    let s = params.sample(args.n, &mut RandomStream::new(args.seed))?;
    write_output(args.out.as_deref(), &s.to_csv_string())
}
