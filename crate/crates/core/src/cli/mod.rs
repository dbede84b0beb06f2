//! The `wigner-kit` command line.
//!
//! Spins are passed as twice-values (`--l-x2 3` is `l = 3/2`). Results are
//! written as a JSON [`OutputRecord`]; `dmat` can also emit CSV.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
//! domain error.

mod output;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use output::{complex_json, matrix_csv, matrix_json, ErrorPayload, OutputRecord, SCHEMA_VERSION};
pub use verify::{run_suite, Check, GridOverride, Suite, VerifyConfig};

use crate::error::Error;
use crate::exactcomb::HalfInt;
use crate::group::{EulerAngles, Mat2C};
use crate::specfun::{jacobi_eval, krawtchouk, legendre, JacobiParams};
use crate::wigner::{matrix_via, matrix_via_angles, Route, WignerMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wigner-kit", version, about = "SU(2) matrix elements, their polynomials and property checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the matrix t^l(g).
    Dmat(DmatArgs),
    /// Evaluate a Jacobi, Krawtchouk or Legendre polynomial.
    Poly(PolyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Auto,
    Oracle,
    Sum,
    Hyp,
    Jacobi,
    Euler,
    Rodrigues,
    Krawtchouk,
}

impl RouteArg {
    fn route(self) -> Route {
        match self {
            RouteArg::Auto | RouteArg::Oracle => Route::Oracle,
            RouteArg::Sum => Route::Sum,
            RouteArg::Hyp => Route::Hyp,
            RouteArg::Jacobi => Route::Jacobi,
            RouteArg::Euler => Route::Euler,
            RouteArg::Rodrigues => Route::Rodrigues,
            RouteArg::Krawtchouk => Route::Krawtchouk,
        }
    }

    fn name(self) -> &'static str {
        if self == RouteArg::Auto { "auto" } else { self.route().name() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct DmatArgs {
    /// Twice the spin.
    #[arg(long = "l-x2", allow_negative_numbers = true)]
    pub l_x2: i64,
    #[arg(long, allow_negative_numbers = true, conflicts_with = "matrix")]
    pub theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub phi: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub psi: f64,
    /// Entries "a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im".
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
    pub route: RouteArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Jacobi,
    Krawtchouk,
    Legendre,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Degree (Jacobi, Krawtchouk).
    #[arg(long)]
    pub n: Option<u64>,
    /// Degree (Legendre).
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    /// Krawtchouk grid size N.
    #[arg(long = "big-n")]
    pub big_n: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Twice the largest spin, at most 12.
    #[arg(long = "max-l-x2", default_value_t = 2, allow_negative_numbers = true)]
    pub max_l_x2: i64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long = "grid-ntheta")]
    pub grid_ntheta: Option<usize>,
    #[arg(long = "grid-nphi")]
    pub grid_nphi: Option<usize>,
    #[arg(long = "grid-npsi")]
    pub grid_npsi: Option<usize>,
}

/// What a command produced: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let (command, inputs, result) = match &cli.command {
        Command::Dmat(a) => ("dmat", dmat_inputs(a), cmd_dmat(a)),
        Command::Poly(a) => ("poly", poly_inputs(a), cmd_poly(a).map(|r| (r, true))),
        Command::Verify(a) => ("verify", verify_inputs(a), cmd_verify(a)),
    };
    match result {
        Ok((record, passed)) => {
            let stdout = match (&cli.command, &record.result["csv"]) {
                (Command::Dmat(_), Value::String(csv)) => csv.clone(),
                _ => record.to_json() + "\n",
            };
            let code = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let stderr = record.warning.clone().map(|w| w + "\n").unwrap_or_default();
            Outcome { stdout, stderr, code }
        }
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        },
        Err(Failure::Numeric(e)) => {
            let kind = match e {
                Error::Domain(_) => "domain",
                Error::RouteUnavailable { .. } => "route-unavailable",
                Error::NonFinite { .. } => "non-finite",
            };
            let record = OutputRecord::failure(command, inputs, kind, e.to_string());
            Outcome { stdout: record.to_json() + "\n", stderr: String::new(), code: EXIT_DOMAIN }
        }
    }
}

fn dmat_inputs(a: &DmatArgs) -> Value {
    json!({
        "l_x2": a.l_x2,
        "theta": a.theta,
        "phi": a.phi,
        "psi": a.psi,
        "matrix": a.matrix,
        "route": a.route.name(),
    })
}

fn parse_matrix(text: &str) -> Result<Mat2C, Failure> {
    let vals: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("--matrix: {e}")))?;
    if vals.len() != 8 {
        return Err(Failure::Usage(format!("--matrix needs 8 reals, got {}", vals.len())));
    }
    let z = |k: usize| num_complex::Complex64::new(vals[2 * k], vals[2 * k + 1]);
    Ok(Mat2C::new(z(0), z(1), z(2), z(3)))
}

/// `dmat`: the full matrix by the requested route. Unavailable routes fall
/// back to the oracle and say so in `warning`.
fn cmd_dmat(a: &DmatArgs) -> Result<(OutputRecord, bool), Failure> {
    let l = HalfInt::from_twice(a.l_x2);
    if a.l_x2 < 0 {
        return Err(Failure::Usage(format!("--l-x2 must be nonnegative, got {}", a.l_x2)));
    }
    let route = a.route.route();
    enum Source {
        Angles(EulerAngles),
        Matrix(Mat2C),
    }
    let source = match (&a.matrix, a.theta) {
        (Some(text), _) => {
            if route.needs_angles() {
                return Err(Failure::Usage(format!(
                    "route `{}` needs --theta/--phi/--psi input",
                    route.name()
                )));
            }
            Source::Matrix(parse_matrix(text)?)
        }
        (None, Some(theta)) => Source::Angles(EulerAngles::new(theta, a.phi, a.psi)?),
        (None, None) => return Err(Failure::Usage("give either --theta or --matrix".into())),
    };
    let compute = |r: Route| -> crate::Result<WignerMatrix> {
        match &source {
            Source::Angles(angles) => matrix_via_angles(r, l, angles),
            Source::Matrix(g) => matrix_via(r, l, g),
        }
    };
    let mut warning = None;
    let mut used = route;
    let t = match compute(route) {
        Ok(t) => t,
        Err(e @ Error::RouteUnavailable { .. }) => {
            warning = Some(format!("{e}; fell back to oracle"));
            used = Route::Oracle;
            compute(Route::Oracle)?
        }
        Err(e) => return Err(e.into()),
    };
    let mut result = json!({
        "route": used.name(),
        "dim": t.dim(),
        "matrix": matrix_json(&t),
    });
    if a.format == Format::Csv {
        result["csv"] = Value::String(matrix_csv(&t));
    }
    let mut record = OutputRecord::new("dmat", dmat_inputs(a), result);
    record.warning = warning;
    Ok((record, true))
}

fn poly_inputs(a: &PolyArgs) -> Value {
    json!({
        "family": format!("{:?}", a.family).to_lowercase(),
        "n": a.n,
        "l": a.l,
        "alpha": a.alpha,
        "beta": a.beta,
        "p": a.p,
        "big_n": a.big_n,
        "x": a.x,
    })
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

/// `poly`: one polynomial value and the evaluation route.
fn cmd_poly(a: &PolyArgs) -> Result<OutputRecord, Failure> {
    let (value, route) = match a.family {
        Family::Jacobi => {
            let n = need(a.n, "n")?;
            let n = u32::try_from(n).map_err(|_| Failure::Usage("--n too large".into()))?;
            let p = JacobiParams::new(need(a.alpha, "alpha")?, need(a.beta, "beta")?, n)?;
            (jacobi_eval(&p, a.x), "expansion")
        }
        Family::Legendre => (legendre(need(a.l.or(a.n.map(|n| n as u32)), "l")?, a.x), "jacobi(0,0)"),
        Family::Krawtchouk => (
            krawtchouk(need(a.n, "n")?, a.x, need(a.p, "p")?, need(a.big_n, "big-n")?)?,
            "2F1",
        ),
    };
    Ok(OutputRecord::new("poly", poly_inputs(a), json!({ "value": value, "route": route })))
}

fn verify_inputs(a: &VerifyArgs) -> Value {
    json!({
        "suite": a.suite.name(),
        "max_l_x2": a.max_l_x2,
        "seed": a.seed,
        "grid_ntheta": a.grid_ntheta,
        "grid_nphi": a.grid_nphi,
        "grid_npsi": a.grid_npsi,
    })
}

/// `verify`: runs a suite; the bool is whether every check passed.
fn cmd_verify(a: &VerifyArgs) -> Result<(OutputRecord, bool), Failure> {
    let max_l = verify::check_max_l(a.max_l_x2).map_err(Failure::Usage)?;
    let cfg = VerifyConfig {
        max_l,
        seed: a.seed,
        grid: GridOverride { n_theta: a.grid_ntheta, n_phi: a.grid_nphi, n_psi: a.grid_npsi },
    };
    let checks = run_suite(a.suite, &cfg)?;
    let passed = checks.iter().all(|c| c.passed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let result = json!({
        "passed": passed,
        "failed": failed,
        "checks": checks,
    });
    Ok((OutputRecord::new("verify", verify_inputs(a), result), passed))
}
