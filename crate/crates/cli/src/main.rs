//! Batch front-end: point evaluation, grid sweeps, identity-verification
//! suites, and Bernoulli tables.
//!
//! Exit codes: 0 all-pass, 1 identity failure, 2 usage/domain error,
//! 3 non-convergence.

// Negated float comparisons are deliberate NaN rejection; reference
// constants keep their full oracle digits.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

mod grid;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use muzeta::gamma::{alpha, snap_integer};
use muzeta::mu::{beta_exact, lambda, mu, mu_dirichlet, mu_direct, mu_functional_check};
use muzeta::zeta::zeta;
use muzeta::{BigRational, Complex64, Error, EvalConfig, SeriesEvaluation};
use num_traits::ToPrimitive;

use grid::GridSpec;
use output::{format_complex, verify_report_json, write_sweep_csv, write_sweep_json, SweepRow};
use suites::{run_suite, Suite, SuiteFailure};

#[derive(Parser)]
#[command(
    name = "muzeta",
    version,
    about = "Evaluate and verify the analytic continuation of the monomial integral and its zeta-function bridge"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point and print value, terms, and tail.
    Eval {
        #[arg(value_enum)]
        function: EvalFunction,
        /// Evaluation point as re,im (comma, no spaces), e.g. -1,0
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Run an identity-verification suite and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Grid as re_min:re_max,im_min:im_max,RxI (generic-series suites);
        /// default -5:5,-5:5,21x21.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Report file path; omit to print the summary only.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record the wall-clock start time in the report. Off by default
        /// so repeated runs produce byte-identical files.
        #[arg(long)]
        stamp: bool,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Evaluate a function over a grid and write one row per point.
    Sweep {
        #[arg(value_enum)]
        function: SweepFunction,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Print B_0..B_n with the zeta(-q) column.
    Bernoulli {
        #[arg(long = "n-max")]
        n_max: u32,
        /// Exact fractions instead of floats.
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Args)]
struct TolArgs {
    /// Relative tolerance for series (EvalConfig.rel_tol).
    #[arg(long)]
    tol: Option<f64>,
    /// Series term budget (EvalConfig.max_terms).
    #[arg(long)]
    max_terms: Option<usize>,
    /// Quadrature tolerance (EvalConfig.quad_tol).
    #[arg(long)]
    quad_tol: Option<f64>,
    /// Integer snap radius (EvalConfig.integer_snap_radius).
    #[arg(long)]
    snap_radius: Option<f64>,
}

impl TolArgs {
    fn config(&self) -> Result<EvalConfig, String> {
        let mut cfg = EvalConfig::default();
        if let Some(t) = self.tol {
            cfg.rel_tol = t;
        }
        if let Some(m) = self.max_terms {
            cfg.max_terms = m;
        }
        if let Some(q) = self.quad_tol {
            cfg.quad_tol = q;
        }
        if let Some(r) = self.snap_radius {
            cfg.integer_snap_radius = r;
        }
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum EvalFunction {
    Mu,
    MuDirichlet,
    MuDirect,
    Lambda,
    Beta,
    Zeta,
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum SweepFunction {
    Mu,
    MuDirichlet,
    MuDirect,
    Lambda,
    Zeta,
    MuFunctional,
}

impl SweepFunction {
    fn name(&self) -> &'static str {
        match self {
            Self::Mu => "mu",
            Self::MuDirichlet => "mu_dirichlet",
            Self::MuDirect => "mu_direct",
            Self::Lambda => "lambda",
            Self::Zeta => "zeta",
            Self::MuFunctional => "mu_functional",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Lambda,
    Beta,
    AbelPlana,
    Binomial,
    Bernoulli,
    Functional,
}

impl SuiteArg {
    fn suite(&self) -> Suite {
        match self {
            Self::All => Suite::All,
            Self::Lambda => Suite::Lambda,
            Self::Beta => Suite::Beta,
            Self::AbelPlana => Suite::AbelPlana,
            Self::Binomial => Suite::Binomial,
            Self::Bernoulli => Suite::Bernoulli,
            Self::Functional => Suite::Functional,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Lambda => "lambda",
            Self::Beta => "beta",
            Self::AbelPlana => "abel_plana",
            Self::Binomial => "binomial",
            Self::Bernoulli => "bernoulli",
            Self::Functional => "functional",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part {re:?}: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part {im:?}: {e}"))?;
    Ok(Complex64::new(re, im))
}

/// Exit-code classification for evaluation errors.
fn code_for(err: &Error) -> u8 {
    match err {
        Error::NonConvergence { .. } => 3,
        Error::Pole { .. } | Error::Domain(_) | Error::Overflow(_) => 2,
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(code_for(err))
}

fn print_series(name: &str, s: Complex64, eval: &SeriesEvaluation, reference: Option<String>) {
    match reference {
        Some(r) => println!(
            "{name}({}) = {} (expected {r})",
            format_complex(s),
            format_complex(eval.value)
        ),
        None => println!("{name}({}) = {}", format_complex(s), format_complex(eval.value)),
    }
    println!("terms_used = {}", eval.terms_used);
    println!("tail_estimate = {:e}", eval.tail_estimate);
    println!("converged = {}", eval.converged);
}

fn snapped_nonpositive(s: Complex64, cfg: &EvalConfig) -> Result<i64, Error> {
    match snap_integer(s, cfg.integer_snap_radius) {
        Some(m) if m <= 0 => Ok(m),
        _ => Err(Error::Domain(format!(
            "{} does not snap to a non-positive integer",
            format_complex(s)
        ))),
    }
}

fn cmd_eval(function: EvalFunction, s: Complex64, cfg: &EvalConfig) -> Result<(), Error> {
    match function {
        EvalFunction::Mu => {
            let v = mu(s)?;
            println!("mu({}) = {}", format_complex(s), format_complex(v));
            println!("reference 1/(s-1) = {}", format_complex(v));
        }
        EvalFunction::MuDirichlet => {
            let eval = mu_dirichlet(s, cfg)?;
            let reference = mu(s)?;
            print_series("mu_dirichlet", s, &eval, Some(format_complex(reference)));
        }
        EvalFunction::MuDirect => {
            let eval = mu_direct(s, cfg)?;
            let reference = mu(s)?;
            print_series("mu_direct", s, &eval, Some(format_complex(reference)));
        }
        EvalFunction::Lambda => {
            let eval = lambda(s, cfg)?;
            print_series("lambda", s, &eval, Some("1".into()));
        }
        EvalFunction::Beta => {
            let m = snapped_nonpositive(s, cfg)?;
            let v = beta_exact(m);
            println!("beta({m}) = {v} (exact)");
            println!("float = {}", v.to_f64().unwrap());
        }
        EvalFunction::Zeta => {
            let eval = zeta(s, cfg)?;
            let reference = snap_integer(s, cfg.integer_snap_radius).and_then(|m| {
                if m <= 0 {
                    let exact = muzeta::bernoulli::zeta_neg_int((-m) as u32);
                    Some(format!("{exact}"))
                } else {
                    None
                }
            });
            print_series("zeta", s, &eval, reference);
        }
        EvalFunction::Alpha => {
            let p = match snap_integer(s, cfg.integer_snap_radius) {
                Some(p) if p >= 1 => p as u32,
                _ => {
                    return Err(Error::Domain(format!(
                        "alpha requires a positive integer p, got {}",
                        format_complex(s)
                    )))
                }
            };
            let v = alpha(p);
            println!("alpha({p}) = {v} (exact)");
            println!("float = {}", v.to_f64().unwrap());
        }
    }
    Ok(())
}

fn cmd_verify(
    suite_arg: SuiteArg,
    grid_text: Option<&str>,
    out: Option<&PathBuf>,
    stamp: bool,
    cfg: &EvalConfig,
) -> Result<ExitCode, String> {
    let grid = match grid_text {
        Some(text) => GridSpec::parse(text)?,
        None => GridSpec::parse("-5:5,-5:5,21x21")?,
    }
    .with_default_guards();

    let rows = match run_suite(suite_arg.suite(), &grid, cfg) {
        Ok(rows) => rows,
        Err(SuiteFailure { point, error }) => {
            eprintln!("error at point {}: {error}", format_complex(point));
            return Ok(ExitCode::from(code_for(&error)));
        }
    };

    let passed = rows.iter().filter(|r| r.passed).count();
    let failed = rows.len() - passed;
    println!(
        "suite {}: {} identities, {} passed, {} failed",
        suite_arg.name(),
        rows.len(),
        passed,
        failed
    );
    for row in rows.iter().filter(|r| !r.passed).take(10) {
        println!(
            "  FAIL {} at {}: lhs {}, rhs {}, rel_error {:e}",
            row.identity_id,
            format_complex(row.point),
            format_complex(row.lhs),
            format_complex(row.rhs),
            row.rel_error
        );
    }

    if let Some(path) = out {
        let started_at = if stamp {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        } else {
            0
        };
        let text = verify_report_json(suite_arg.name(), cfg, started_at, &rows);
        std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
        println!("report written to {}", path.display());
    }

    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn sweep_eval(
    function: SweepFunction,
    s: Complex64,
    cfg: &EvalConfig,
) -> Result<(Complex64, usize, bool), Error> {
    match function {
        SweepFunction::Mu => mu(s).map(|v| (v, 0, true)),
        SweepFunction::MuDirichlet => {
            mu_dirichlet(s, cfg).map(|e| (e.value, e.terms_used, e.converged))
        }
        SweepFunction::MuDirect => mu_direct(s, cfg).map(|e| (e.value, e.terms_used, e.converged)),
        SweepFunction::Lambda => lambda(s, cfg).map(|e| (e.value, e.terms_used, e.converged)),
        SweepFunction::Zeta => zeta(s, cfg).map(|e| (e.value, e.terms_used, e.converged)),
        SweepFunction::MuFunctional => {
            mu_functional_check(s).map(|r| (r.lhs - r.rhs, 0, true))
        }
    }
}

fn cmd_sweep(
    function: SweepFunction,
    grid_text: &str,
    out: &std::path::Path,
    format: OutputFormat,
    cfg: &EvalConfig,
) -> Result<ExitCode, String> {
    let mut grid = GridSpec::parse(grid_text)?;
    grid.exclusions.push((Complex64::new(1.0, 0.0), 0.05));

    let mut rows = Vec::new();
    for (s, excluded) in grid.points() {
        if excluded {
            rows.push(SweepRow {
                s,
                value: None,
                terms_used: 0,
                converged: false,
                status: "excluded".into(),
            });
            continue;
        }
        match sweep_eval(function, s, cfg) {
            Ok((value, terms_used, converged)) => rows.push(SweepRow {
                s,
                value: Some(value),
                terms_used,
                converged,
                status: "ok".into(),
            }),
            Err(err) => rows.push(SweepRow {
                s,
                value: None,
                terms_used: 0,
                converged: false,
                status: match err {
                    Error::Pole { .. } => "pole".into(),
                    Error::Domain(_) => "domain".into(),
                    Error::NonConvergence { .. } => "nonconvergence".into(),
                    Error::Overflow(_) => "overflow".into(),
                },
            }),
        }
    }

    match format {
        OutputFormat::Csv => write_sweep_csv(out, &rows),
        OutputFormat::Json => write_sweep_json(out, function.name(), &rows),
    }
    .map_err(|e| format!("writing {}: {e}", out.display()))?;
    println!("{} rows written to {}", rows.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_bernoulli(n_max: u32, exact: bool) -> Result<ExitCode, String> {
    if n_max > muzeta::bernoulli::TABLE_MAX {
        return Err(format!(
            "n_max must be at most {}, got {n_max}",
            muzeta::bernoulli::TABLE_MAX
        ));
    }
    println!("q\tB_q\tzeta(-q)");
    for q in 0..=n_max {
        let b: BigRational = muzeta::bernoulli::bernoulli_exact(q);
        let z: BigRational = muzeta::bernoulli::zeta_neg_int(q);
        if exact {
            println!("{q}\t{b}\t{z}");
        } else {
            println!("{q}\t{}\t{}", b.to_f64().unwrap(), z.to_f64().unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // Die on closed pipes the Unix way instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();

    let usage = |msg: String| -> ExitCode {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };

    match cli.command {
        Command::Eval { function, s, tols } => {
            let cfg = match tols.config() {
                Ok(c) => c,
                Err(m) => return usage(m),
            };
            match cmd_eval(function, s, &cfg) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&e),
            }
        }
        Command::Verify {
            suite,
            grid,
            out,
            stamp,
            tols,
        } => {
            let cfg = match tols.config() {
                Ok(c) => c,
                Err(m) => return usage(m),
            };
            match cmd_verify(suite, grid.as_deref(), out.as_ref(), stamp, &cfg) {
                Ok(code) => code,
                Err(m) => usage(m),
            }
        }
        Command::Sweep {
            function,
            grid,
            out,
            format,
            tols,
        } => {
            let cfg = match tols.config() {
                Ok(c) => c,
                Err(m) => return usage(m),
            };
            match cmd_sweep(function, &grid, &out, format, &cfg) {
                Ok(code) => code,
                Err(m) => usage(m),
            }
        }
        Command::Bernoulli { n_max, exact } => match cmd_bernoulli(n_max, exact) {
            Ok(code) => code,
            Err(m) => usage(m),
        },
    }
}
