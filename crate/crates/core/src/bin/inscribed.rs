//! `inscribed`: evaluate, tabulate, simulate and verify.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad usage or an
//! argument out of range.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use inscribed::closed_forms::{chord_cdf, p_contain, three_circle_probability};
use inscribed::dilog::li2;
use inscribed::fmt::real;
use inscribed::montecarlo::{McEstimate, Simulator};
use inscribed::verify::{self, Suite, VerifyOptions};

#[derive(Parser)]
#[command(name = "inscribed", version, about = "Random inscribed triangles, chords and the dilogarithm")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed form.
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Write `r,value` rows of a closed form as CSV.
    Table {
        #[arg(value_enum)]
        what: TableTarget,
        #[arg(long, default_value_t = 0.0)]
        r_min: f64,
        #[arg(long, default_value_t = 1.0)]
        r_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a Monte Carlo experiment; prints one JSON object per estimate.
    Simulate {
        #[command(subcommand)]
        experiment: Experiment,
    },
    /// Run the cross-verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Emit a single JSON document instead of a table.
        #[arg(long)]
        json: bool,
        /// Tolerance override: `VALUE` for every selected suite, or
        /// `SUITE=VALUE` for one suite. Repeatable.
        #[arg(long = "tol", value_name = "[SUITE=]VALUE")]
        tol: Vec<String>,
        #[command(flatten)]
        mc: McArgs,
    },
}

#[derive(Subcommand)]
enum EvalTarget {
    /// Probability that a random inscribed triangle contains (r, 0).
    PContain {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
    },
    /// Real dilogarithm.
    Li2 {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Radial CDF of the crossing point of two intersecting random chords.
    ChordCdf {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
    },
    /// Line-hitting probability for three tangent unit circles.
    ThreeCircles,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableTarget {
    PContain,
    ChordCdf,
}

#[derive(Subcommand)]
enum Experiment {
    Triangle {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[command(flatten)]
        mc: McArgs,
    },
    Chords {
        /// Radii at which to evaluate the empirical CDF.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        r: Vec<f64>,
        #[command(flatten)]
        mc: McArgs,
    },
    ThreeCircles {
        #[command(flatten)]
        mc: McArgs,
    },
}

#[derive(clap::Args)]
struct McArgs {
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Predicates,
    Dilog,
    ClosedForms,
    Quadrature,
    Montecarlo,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::ALL.to_vec(),
            SuiteArg::Predicates => vec![Suite::Predicates],
            SuiteArg::Dilog => vec![Suite::Dilog],
            SuiteArg::ClosedForms => vec![Suite::ClosedForms],
            SuiteArg::Quadrature => vec![Suite::Quadrature],
            SuiteArg::Montecarlo => vec![Suite::Montecarlo],
        }
    }
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("inscribed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { target } => {
            let value = match target {
                EvalTarget::PContain { r } => p_contain(r)?,
                EvalTarget::Li2 { x } => li2(x)?,
                EvalTarget::ChordCdf { r } => chord_cdf(r)?,
                EvalTarget::ThreeCircles => three_circle_probability(),
            };
            println!("{}", real(value));
            Ok(())
        }
        Command::Table {
            what,
            r_min,
            r_max,
            steps,
            out,
        } => table(what, r_min, r_max, steps, out),
        Command::Simulate { experiment } => simulate(experiment),
        Command::Verify {
            suite,
            json,
            tol,
            mc,
        } => run_verify(suite, json, &tol, mc),
    }
}

fn table(what: TableTarget, r_min: f64, r_max: f64, steps: usize, out: Option<PathBuf>) -> Result<(), Failure> {
    if !(0.0 <= r_min && r_min <= r_max && r_max <= 1.0) {
        return Err(Failure::Usage(format!(
            "need 0 <= r-min <= r-max <= 1, got r-min={r_min}, r-max={r_max}"
        )));
    }
    if steps < 2 {
        return Err(Failure::Usage(format!("need at least 2 steps, got {steps}")));
    }
    let f = match what {
        TableTarget::PContain => p_contain,
        TableTarget::ChordCdf => chord_cdf,
    };
    let mut sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let last = steps - 1;
    writeln!(sink, "r,value")?;
    for k in 0..steps {
        let r = if k == last {
            r_max
        } else {
            r_min + (r_max - r_min) * k as f64 / last as f64
        };
        writeln!(sink, "{},{}", real(r), real(f(r)?))?;
    }
    sink.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct SimulationRecord {
    experiment: &'static str,
    params: Value,
    trials: u64,
    seed: u64,
    p_hat: f64,
    std_err: f64,
    closed_form: f64,
    z_score: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    acceptance_rate: Option<f64>,
}

impl SimulationRecord {
    fn new(e: &McEstimate, params: Value, closed_form: f64) -> Self {
        Self {
            experiment: e.experiment,
            params,
            trials: e.trials,
            seed: e.seed,
            p_hat: e.p_hat,
            std_err: e.std_err,
            closed_form,
            z_score: e.z_score(closed_form),
            acceptance_rate: None,
        }
    }
}

fn simulate(experiment: Experiment) -> Result<(), Failure> {
    let records = match experiment {
        Experiment::Triangle { r, mc } => {
            let e = Simulator::new(mc.workers)?.triangle(r, mc.trials, mc.seed)?;
            vec![SimulationRecord::new(&e, json!({ "r": r }), p_contain(r)?)]
        }
        Experiment::Chords { r, mc } => {
            let run = Simulator::new(mc.workers)?.chords(&r, mc.trials, mc.seed)?;
            let rate = run.acceptance_rate();
            run.radii
                .iter()
                .zip(&run.estimates)
                .map(|(&r, e)| {
                    Ok(SimulationRecord {
                        acceptance_rate: Some(rate),
                        ..SimulationRecord::new(e, json!({ "r": r }), chord_cdf(r)?)
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?
        }
        Experiment::ThreeCircles { mc } => {
            let (ab, bc) = Simulator::new(mc.workers)?.three_circles(mc.trials, mc.seed)?;
            let p = three_circle_probability();
            vec![
                SimulationRecord::new(&ab, json!({ "line": "AB" }), p),
                SimulationRecord::new(&bc, json!({ "line": "BC" }), p),
            ]
        }
    };
    let mut stdout = io::stdout().lock();
    for record in records {
        writeln!(stdout, "{}", serde_json::to_string(&record)?)?;
    }
    Ok(())
}

fn parse_tolerances(specs: &[String], selected: &[Suite]) -> Result<BTreeMap<Suite, f64>, Failure> {
    let mut overrides = BTreeMap::new();
    for spec in specs {
        let parse_value = |v: &str| -> Result<f64, Failure> {
            match v.parse::<f64>() {
                Ok(t) if t >= 0.0 => Ok(t),
                _ => Err(Failure::Usage(format!("invalid tolerance `{v}`"))),
            }
        };
        match spec.split_once('=') {
            Some((suite, value)) => {
                overrides.insert(suite.parse::<Suite>()?, parse_value(value)?);
            }
            None => {
                let t = parse_value(spec)?;
                for &s in selected {
                    overrides.insert(s, t);
                }
            }
        }
    }
    Ok(overrides)
}

fn run_verify(suite: SuiteArg, json: bool, tol: &[String], mc: McArgs) -> Result<(), Failure> {
    let suites = suite.suites();
    let options = VerifyOptions {
        trials: mc.trials,
        seed: mc.seed,
        workers: mc.workers,
        tolerance_overrides: parse_tolerances(tol, &suites)?,
        ..VerifyOptions::default()
    };
    let report = verify::run(&suites, &options)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    if report.overall_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
