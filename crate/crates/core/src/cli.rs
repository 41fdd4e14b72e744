//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                                          |
//! |------|--------------------------------------------------|
//! | 0    | success                                          |
//! | 1    | usage or flag error                              |
//! | 2    | file-system, parse or schema error               |
//! | 3    | constraint violation (including calibration)     |
//!
//! Documents go to standard output (or `--out`); diagnostics go to standard
//! error only.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cooperation::{compare, recommend};
use crate::io::{
    emit_plot, emit_points, load_scenario, write_gain_statistics, write_results, write_scenario,
    write_solution, write_sweep_csv, LoadError,
};
use crate::model::{ExternalityScenario, Mode, Regime};
use crate::sweep::{aggregate, sample, sweep_grid, Parameter, ParameterRegion, SweepError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_CONSTRAINT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "externality",
    version,
    about = "Equilibria, Pigouvian taxes and deadweight loss for linear externality markets",
    after_help = "Exit codes: 0 success, 1 usage error, 2 file/parse/schema error, 3 constraint violation."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Published closed forms, verbatim
    Paper,
    /// Textbook definitions (tax at the social optimum, triangle integral)
    Standard,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Standard => Mode::Standard,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RegimeArg {
    Noncooperative,
    Cooperative,
}

#[derive(Debug, Args)]
struct Common {
    /// Scenario file (TOML)
    scenario: PathBuf,
    /// Welfare convention
    #[arg(long, value_enum, default_value = "paper")]
    mode: ModeArg,
    /// Write the document here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Equilibria, tax and deadweight loss for one or both regimes (JSON)
    Solve {
        #[command(flatten)]
        common: Common,
        /// Only this regime; both when omitted
        #[arg(long, value_enum)]
        regime: Option<RegimeArg>,
    },
    /// Non-cooperative vs cooperative comparison (JSON results document)
    Compare {
        #[command(flatten)]
        common: Common,
        /// Emit the plain-text policy recommendation instead of JSON
        #[arg(long)]
        recommend: bool,
    },
    /// One-parameter grid sweep (CSV), or seeded Monte Carlo gain statistics (JSON)
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Parameter to sweep: a, b, c or y1
        #[arg(long, value_name = "NAME", requires_all = ["from", "to", "steps"], conflicts_with = "samples")]
        param: Option<String>,
        /// First grid value
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        /// Last grid value
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        /// Number of grid points, endpoints included (at least 2)
        #[arg(long)]
        steps: Option<usize>,
        /// Monte Carlo: number of scenarios to draw around the base scenario
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
        /// Monte Carlo: generator seed
        #[arg(long, default_value_t = 0, requires = "samples")]
        seed: u64,
        /// Monte Carlo: each parameter is drawn from [p(1-spread), p(1+spread)]
        #[arg(long, default_value_t = 0.5, requires = "samples")]
        spread: f64,
    },
    /// Two-panel SVG of the curves, optionally with the sampled points (CSV)
    Plot {
        /// Scenario file (TOML)
        scenario: PathBuf,
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
        /// SVG output path; standard output when omitted
        #[arg(long, value_name = "PATH")]
        svg_out: Option<PathBuf>,
        /// CSV output path for the sampled curve values
        #[arg(long, value_name = "PATH")]
        csv_out: Option<PathBuf>,
        /// Number of CSV sample points (at least 2)
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
    /// Check a scenario file and print it in canonical form
    Validate {
        /// Scenario file (TOML)
        scenario: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    fn load(path: &Path, err: LoadError) -> Self {
        let code = match err {
            LoadError::Constraint(_) | LoadError::Calibration(_) => EXIT_CONSTRAINT,
            _ => EXIT_IO,
        };
        Self {
            code,
            message: format!("{}: {err}", path.display()),
        }
    }
}

/// A rendered document and where it goes.
struct Output {
    text: String,
    path: Option<PathBuf>,
}

type Outcome = Result<Vec<Output>, Failure>;

fn read_scenario(path: &Path) -> Result<ExternalityScenario, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
    load_scenario(&text).map_err(|e| Failure::load(path, e))
}

fn to_stdout_or(text: String, path: Option<PathBuf>) -> Outcome {
    Ok(vec![Output { text, path }])
}

fn solve(common: Common, regime: Option<RegimeArg>) -> Outcome {
    let scenario = read_scenario(&common.scenario)?;
    let regimes: &[Regime] = match regime {
        None => &Regime::BOTH,
        Some(RegimeArg::Noncooperative) => &[Regime::NonCooperative],
        Some(RegimeArg::Cooperative) => &[Regime::Cooperative],
    };
    to_stdout_or(
        write_solution(&scenario, common.mode.into(), regimes),
        common.out,
    )
}

fn compare_cmd(common: Common, want_recommendation: bool) -> Outcome {
    let scenario = read_scenario(&common.scenario)?;
    let report = compare(&scenario, common.mode.into());
    let text = if want_recommendation {
        recommend(&report)
            .map_err(|e| Failure {
                code: EXIT_CONSTRAINT,
                message: e.to_string(),
            })?
            .narrative
    } else {
        write_results(&report)
    };
    to_stdout_or(text, common.out)
}

#[allow(clippy::too_many_arguments)]
fn sweep_cmd(
    common: Common,
    param: Option<String>,
    from: Option<f64>,
    to: Option<f64>,
    steps: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    spread: f64,
) -> Outcome {
    let mode: Mode = common.mode.into();
    match (param, samples) {
        (Some(name), None) => {
            let parameter: Parameter = name
                .parse()
                .map_err(|e: SweepError| Failure::usage(format!("--param: {e}")))?;
            let (from, to, steps) = (
                from.unwrap_or(f64::NAN),
                to.unwrap_or(f64::NAN),
                steps.unwrap_or(0),
            );
            if !(from.is_finite() && to.is_finite() && from < to) {
                return Err(Failure::usage("--from must be below --to and both finite"));
            }
            if steps < 2 {
                return Err(Failure::usage("--steps must be at least 2"));
            }
            let base = read_scenario(&common.scenario)?;
            let series = sweep_grid(&base, parameter.as_str(), from, to, steps, mode)
                .map_err(|e| Failure::usage(e.to_string()))?;
            to_stdout_or(write_sweep_csv(&series), common.out)
        }
        (None, Some(n)) => {
            if n == 0 {
                return Err(Failure::usage("--samples must be at least 1"));
            }
            if !(spread.is_finite() && spread > 0.0 && spread < 1.0) {
                return Err(Failure::usage("--spread must lie strictly between 0 and 1"));
            }
            let base = read_scenario(&common.scenario)?;
            let region = ParameterRegion::around(base.parameters(), spread);
            let drawn = sample(&region, n, seed).map_err(|e| Failure {
                code: match e {
                    SweepError::RegionInfeasible { .. } => EXIT_CONSTRAINT,
                    _ => EXIT_USAGE,
                },
                message: e.to_string(),
            })?;
            to_stdout_or(
                write_gain_statistics(&aggregate(&drawn, mode), seed),
                common.out,
            )
        }
        _ => Err(Failure::usage(
            "sweep needs either --param NAME --from X --to Y --steps N, or --samples N \
             (valid parameters: a, b, c, y1)",
        )),
    }
}

fn plot_cmd(
    scenario: PathBuf,
    mode: ModeArg,
    svg_out: Option<PathBuf>,
    csv_out: Option<PathBuf>,
    samples: usize,
) -> Outcome {
    if samples < 2 {
        return Err(Failure::usage("--samples must be at least 2"));
    }
    let scenario = read_scenario(&scenario)?;
    let report = compare(&scenario, mode.into());
    let mut outputs = vec![Output {
        text: emit_plot(&report),
        path: svg_out,
    }];
    if let Some(path) = csv_out {
        outputs.push(Output {
            text: emit_points(&report, samples),
            path: Some(path),
        });
    }
    Ok(outputs)
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Solve { common, regime } => solve(common, regime),
        Command::Compare { common, recommend } => compare_cmd(common, recommend),
        Command::Sweep {
            common,
            param,
            from,
            to,
            steps,
            samples,
            seed,
            spread,
        } => sweep_cmd(common, param, from, to, steps, samples, seed, spread),
        Command::Plot {
            scenario,
            mode,
            svg_out,
            csv_out,
            samples,
        } => plot_cmd(scenario, mode, svg_out, csv_out, samples),
        Command::Validate { scenario, out } => {
            let s = read_scenario(&scenario)?;
            to_stdout_or(write_scenario(&s), out)
        }
    }
}

/// Run the CLI with `args` (including the program name). Returns the exit
/// code; never panics on user input.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let outputs = match dispatch(cli.command) {
        Ok(outputs) => outputs,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            return failure.code;
        }
    };
    for output in outputs {
        let written = match &output.path {
            Some(path) => fs::write(path, &output.text)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => stdout
                .write_all(output.text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| format!("cannot write to standard output: {e}")),
        };
        if let Err(message) = written {
            let _ = writeln!(stderr, "error: {message}");
            return EXIT_IO;
        }
    }
    EXIT_OK
}
