//! Command-line front end.
//!
//! Every run resolves its arguments into a [`RunConfig`], which is echoed in
//! CSV and JSON output so a result can be reproduced from its own header.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{convergence_table, mp_density, Edge, Method, ScalingPlan};
use crate::contour::{contour_correlation, ContourSpec, ETA_BULK};
use crate::ensembles::{mc_correlation, Beta, BuiltinEnsemble, EnsembleSpec};
use crate::error::{Error, Result};
use crate::genfun::{
    cauchy_default_radius, gf_coefficient_cauchy, gf_coefficient_cauchy_auto, gf_coefficient_series,
    gf_coefficient_series_auto, GfParams,
};
use crate::kernels::{kernel_eval, KernelId};
use crate::logcomplex::LogComplex;
use crate::specfun::{i_uniform_rel_err, j_bound_scan, log_grid, ln_factorial};

pub use output::{Cell, OutputFormat, Table};

/// Environment variable overriding the default series precision.
pub const PRECISION_ENV: &str = "COVKERNEL_PRECISION_BITS";

const CAUCHY_TOL: f64 = 1e-10;

#[derive(Parser, Debug)]
#[command(name = "covkernel", version, about = "Correlations of characteristic polynomials of sample covariance matrices")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug, Clone)]
struct EnsembleArgs {
    /// Symmetry class: 1 for real, 2 for complex entries.
    #[arg(long, default_value_t = 2)]
    beta: u8,
    /// Fourth moment E|Q|⁴ of one entry component; b* is derived from it.
    #[arg(long, conflicts_with = "dist")]
    b: Option<f64>,
    /// Built-in entry distribution (real-rademacher, real-gaussian, real-uniform, complex-sign, complex-gaussian).
    #[arg(long)]
    dist: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct FormatArgs {
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ExactMethod {
    Series,
    Cauchy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Series,
    Cauchy,
    Contour,
    Mc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum EdgeArg {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BesselCheckKind {
    /// `sup_x |J_α(αx)| (αx)^{1/3}` over a log grid.
    Bound,
    /// Relative error of the leading uniform approximation of `I_α(αz)`.
    Uniform,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate a limit kernel at (x, y).
    Kernel {
        #[arg(long)]
        id: KernelId,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: f64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Monte Carlo estimate of E[det(Z−μ)det(Z−ν)].
    Mc {
        #[command(flatten)]
        ens: EnsembleArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 100_000)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Exact correlation from the generating function.
    Exact {
        #[command(flatten)]
        ens: EnsembleArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, value_enum, default_value_t = ExactMethod::Series)]
        method: ExactMethod,
        /// Working precision for the series method (default: automatic).
        #[arg(long)]
        bits: Option<usize>,
        /// Cauchy circle radius (default: automatic).
        #[arg(long)]
        radius: Option<f64>,
        /// Cauchy node count (default: automatic).
        #[arg(long)]
        nodes: Option<usize>,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Correlation from the pinched contour integral.
    Contour {
        #[command(flatten)]
        ens: EnsembleArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        /// Pinch exponent: 1 for bulk scaling, 1/3 for edge scaling.
        #[arg(long, default_value_t = ETA_BULK)]
        eta: f64,
        /// Opening parameter of the contour (default: max(2, N^η / 2)).
        #[arg(long)]
        a: Option<f64>,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Convergence table for the bulk limit.
    VerifyBulk {
        #[command(flatten)]
        ens: EnsembleArgs,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Convergence table for the soft-edge limit.
    VerifyEdge {
        #[command(flatten)]
        ens: EnsembleArgs,
        #[arg(long, value_enum, default_value_t = EdgeArg::Upper)]
        edge: EdgeArg,
        #[arg(long)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Large-order Bessel checks.
    BesselCheck {
        #[arg(long, value_enum, default_value_t = BesselCheckKind::Bound)]
        kind: BesselCheckKind,
        /// Orders to scan (default 50,100,200 for bound, 10,20,40 for uniform).
        #[arg(long = "alpha", value_delimiter = ',')]
        alphas: Vec<u32>,
        /// Grid size for the bound scan.
        #[arg(long, default_value_t = 4000)]
        points: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Marchenko–Pastur density g(ξ).
    Mp {
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        xi: f64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct MethodArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Contour)]
    method: MethodArg,
    /// Monte Carlo replicates.
    #[arg(long, default_value_t = 100_000)]
    reps: usize,
    /// Monte Carlo seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl MethodArgs {
    fn resolve(&self) -> Method {
        match self.method {
            MethodArg::Series => Method::Series,
            MethodArg::Cauchy => Method::Cauchy,
            MethodArg::Contour => Method::Contour,
            MethodArg::Mc => Method::Mc { reps: self.reps, seed: self.seed },
        }
    }
}

/// Resolved ensemble: `dist` is set when the moment data match a built-in
/// distribution, which is then used for sampling.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub beta: u8,
    pub dist: Option<BuiltinEnsemble>,
    pub b: f64,
    pub b_star: f64,
}

impl EnsembleConfig {
    fn resolve(args: &EnsembleArgs) -> Result<Self> {
        let beta = Beta::from_index(args.beta)?;
        let dist = match (&args.dist, args.b) {
            (Some(name), _) => {
                let d = BuiltinEnsemble::from_name(name)?;
                if d.spec().beta != beta {
                    return Err(Error::validation(format!("distribution {name} does not match --beta {}", args.beta)));
                }
                Some(d)
            }
            (None, Some(b)) => {
                BuiltinEnsemble::ALL.into_iter().find(|d| d.spec().beta == beta && d.fourth_moment() == b)
            }
            (None, None) => Some(match beta {
                Beta::Real => BuiltinEnsemble::RealGaussian,
                Beta::Complex => BuiltinEnsemble::ComplexGaussian,
            }),
        };
        let spec = match dist {
            Some(d) => d.spec(),
            None => EnsembleSpec::from_fourth_moment(beta, args.b.unwrap_or(f64::NAN))?,
        };
        Ok(EnsembleConfig { beta: args.beta, dist, b: spec.b, b_star: spec.b_star })
    }

    pub fn spec(&self) -> Result<EnsembleSpec> {
        match self.dist {
            Some(d) => Ok(d.spec()),
            None => EnsembleSpec::from_fourth_moment(Beta::from_index(self.beta)?, self.b),
        }
    }
}

/// The effective parameters of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum CommandConfig {
    Kernel { id: KernelId, x: f64, y: f64 },
    Mc { ensemble: EnsembleConfig, n: usize, m: usize, mu: f64, nu: f64, reps: usize, seed: u64 },
    Exact {
        ensemble: EnsembleConfig,
        n: usize,
        m: usize,
        mu: f64,
        nu: f64,
        method: ExactMethod,
        radius: Option<f64>,
        nodes: Option<usize>,
    },
    Contour { ensemble: EnsembleConfig, n: usize, m: usize, mu: f64, nu: f64, eta: f64, a: f64 },
    VerifyBulk { ensemble: EnsembleConfig, gamma: f64, xi: f64, mu: f64, nu: f64, n_list: Vec<usize>, method: Method },
    VerifyEdge { ensemble: EnsembleConfig, edge: EdgeArg, gamma: f64, mu: f64, nu: f64, n_list: Vec<usize>, method: Method },
    BesselCheck { kind: BesselCheckKind, alphas: Vec<u32>, points: usize },
    Mp { gamma: f64, xi: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub run: CommandConfig,
    pub format: OutputFormat,
    /// Fixed series precision; `None` selects it automatically.
    pub precision_bits: Option<usize>,
}

fn parse_bits(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .ok()
        .filter(|b| *b >= 64)
        .ok_or_else(|| Error::validation(format!("{PRECISION_ENV} must be an integer >= 64, got '{s}'")))
}

impl RunConfig {
    fn resolve(cli: Cli, precision_env: Option<&str>) -> Result<Self> {
        let env_bits = precision_env.map(parse_bits).transpose()?;
        let scalar = |f: &FormatArgs| f.format.unwrap_or(OutputFormat::Plain);
        let table = |f: &FormatArgs| f.format.unwrap_or(OutputFormat::Csv);
        let mut precision_bits = env_bits;
        let (run, format) = match cli.command {
            Cmd::Kernel { id, x, y, fmt } => (CommandConfig::Kernel { id, x, y }, scalar(&fmt)),
            Cmd::Mp { gamma, xi, fmt } => (CommandConfig::Mp { gamma, xi }, scalar(&fmt)),
            Cmd::Mc { ens, n, m, mu, nu, reps, seed, fmt } => {
                let ensemble = EnsembleConfig::resolve(&ens)?;
                (CommandConfig::Mc { ensemble, n, m, mu, nu, reps, seed }, scalar(&fmt))
            }
            Cmd::Exact { ens, n, m, mu, nu, method, bits, radius, nodes, fmt } => {
                if let Some(b) = bits {
                    precision_bits = Some(parse_bits(&b.to_string())?);
                }
                if method == ExactMethod::Cauchy {
                    precision_bits = None;
                }
                let ensemble = EnsembleConfig::resolve(&ens)?;
                (CommandConfig::Exact { ensemble, n, m, mu, nu, method, radius, nodes }, scalar(&fmt))
            }
            Cmd::Contour { ens, n, m, mu, nu, eta, a, fmt } => {
                let ensemble = EnsembleConfig::resolve(&ens)?;
                let a = match a {
                    Some(a) => a,
                    None => ContourSpec::with_default_a(n, eta)?.a,
                };
                (CommandConfig::Contour { ensemble, n, m, mu, nu, eta, a }, scalar(&fmt))
            }
            Cmd::VerifyBulk { ens, gamma, xi, mu, nu, n_list, method, fmt } => {
                let ensemble = EnsembleConfig::resolve(&ens)?;
                let run = CommandConfig::VerifyBulk { ensemble, gamma, xi, mu, nu, n_list, method: method.resolve() };
                (run, table(&fmt))
            }
            Cmd::VerifyEdge { ens, edge, gamma, mu, nu, n_list, method, fmt } => {
                let ensemble = EnsembleConfig::resolve(&ens)?;
                let run = CommandConfig::VerifyEdge { ensemble, edge, gamma, mu, nu, n_list, method: method.resolve() };
                (run, table(&fmt))
            }
            Cmd::BesselCheck { kind, alphas, points, fmt } => {
                let alphas = if alphas.is_empty() {
                    match kind {
                        BesselCheckKind::Bound => vec![50, 100, 200],
                        BesselCheckKind::Uniform => vec![10, 20, 40],
                    }
                } else {
                    alphas
                };
                (CommandConfig::BesselCheck { kind, alphas, points }, table(&fmt))
            }
        };
        if !matches!(run, CommandConfig::Exact { method: ExactMethod::Series, .. }) {
            precision_bits = None;
        }
        Ok(RunConfig { run, format, precision_bits })
    }
}

/// Parses `argv` (including the program name) into the effective config.
pub fn parse_config<I, T>(args: I, precision_env: Option<&str>) -> std::result::Result<RunConfig, String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    RunConfig::resolve(cli, precision_env).map_err(|e| e.to_string())
}

fn correlation_row(n: usize, m: usize, coefficient: LogComplex, rel_err: f64) -> Vec<Cell> {
    let norm = ln_factorial(n as u64) + ln_factorial(m as u64);
    let f = if coefficient.is_zero() {
        coefficient
    } else {
        LogComplex::new(coefficient.log_abs + norm, coefficient.phase)
    };
    vec![
        n.into(),
        m.into(),
        f.to_complex().re.into(),
        coefficient.to_complex().re.into(),
        f.log_abs.into(),
        rel_err.into(),
    ]
}

const CORRELATION_HEADER: [&str; 6] = ["n", "m", "f", "coefficient", "ln_abs_f", "rel_err"];

fn check_nm(n: usize, m: usize) -> Result<u32> {
    if n < m {
        return Err(Error::validation(format!("need n >= m, got n = {n}, m = {m}")));
    }
    u32::try_from(n - m).map_err(|_| Error::validation("n − m too large"))
}

/// Executes a resolved config.
pub fn execute(cfg: &RunConfig) -> Result<Table> {
    match &cfg.run {
        CommandConfig::Kernel { id, x, y } => {
            let v = kernel_eval(*id, *x, *y)?;
            Ok(Table::scalar(vec!["id", "x", "y", "value"], vec![id.to_string().as_str().into(), (*x).into(), (*y).into(), v.into()], 3))
        }
        CommandConfig::Mp { gamma, xi } => {
            let v = mp_density(*xi, *gamma)?;
            Ok(Table::scalar(vec!["gamma", "xi", "density"], vec![(*gamma).into(), (*xi).into(), v.into()], 2))
        }
        CommandConfig::Mc { ensemble, n, m, mu, nu, reps, seed } => {
            let e = mc_correlation(&ensemble.spec()?, *n, *m, *mu, *nu, *reps, *seed)?;
            Ok(Table::scalar(
                vec!["n", "m", "estimate", "stderr"],
                vec![(*n).into(), (*m).into(), e.estimate.into(), e.stderr.into()],
                2,
            ))
        }
        CommandConfig::Exact { ensemble, n, m, mu, nu, method, radius, nodes } => {
            let alpha = check_nm(*n, *m)?;
            let p = GfParams::new(alpha, Beta::from_index(ensemble.beta)?, ensemble.b_star, *mu, *nu)?;
            let c = match method {
                ExactMethod::Series => match cfg.precision_bits {
                    Some(bits) => gf_coefficient_series(&p, *m, bits)?,
                    None => gf_coefficient_series_auto(&p, *m)?,
                },
                ExactMethod::Cauchy => match (radius, nodes) {
                    (None, None) => gf_coefficient_cauchy_auto(&p, *m, CAUCHY_TOL)?.coefficient,
                    _ => {
                        let r = radius.unwrap_or_else(|| cauchy_default_radius(alpha, *m));
                        let k = nodes.unwrap_or_else(|| (2 * (*m + 1)).next_power_of_two().max(64));
                        gf_coefficient_cauchy(&p, *m, r, k)?.coefficient
                    }
                },
            };
            Ok(Table::scalar(CORRELATION_HEADER.to_vec(), correlation_row(*n, *m, c.value, c.rel_err), 2))
        }
        CommandConfig::Contour { ensemble, n, m, mu, nu, eta, a } => {
            let alpha = check_nm(*n, *m)?;
            let p = GfParams::new(alpha, Beta::from_index(ensemble.beta)?, ensemble.b_star, *mu, *nu)?;
            let r = contour_correlation(&p, *m, &ContourSpec::new(*n, *eta, *a)?)?;
            Ok(Table::scalar(CORRELATION_HEADER.to_vec(), correlation_row(*n, *m, r.value, r.rel_err), 2))
        }
        CommandConfig::VerifyBulk { ensemble, gamma, xi, mu, nu, n_list, method } => {
            let first = *n_list.first().ok_or_else(|| Error::validation("--N needs at least one value"))?;
            let plan = ScalingPlan::bulk(first, *gamma, *xi, *mu, *nu)?;
            verify_table(&plan, &ensemble.spec()?, *method, n_list)
        }
        CommandConfig::VerifyEdge { ensemble, edge, gamma, mu, nu, n_list, method } => {
            let first = *n_list.first().ok_or_else(|| Error::validation("--N needs at least one value"))?;
            let edge = match edge {
                EdgeArg::Upper => Edge::Upper,
                EdgeArg::Lower => Edge::Lower,
            };
            let plan = ScalingPlan::edge(edge, first, *gamma, *mu, *nu)?;
            verify_table(&plan, &ensemble.spec()?, *method, n_list)
        }
        CommandConfig::BesselCheck { kind, alphas, points } => match kind {
            BesselCheckKind::Bound => {
                let grid = log_grid(1e-2, 1e2, *points)?;
                let mut t = Table::new(vec!["alpha", "sup", "argmax"]);
                for &a in alphas {
                    let s = j_bound_scan(a, &grid)?;
                    t.push(vec![a.into(), s.sup.into(), s.argmax.into()]);
                }
                Ok(t)
            }
            BesselCheckKind::Uniform => {
                let zs = [
                    Complex64::new(1.0, 0.0),
                    Complex64::new(2.0, 0.0),
                    Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
                ];
                let mut t = Table::new(vec!["alpha", "z_re", "z_im", "rel_err"]);
                for &a in alphas {
                    for z in zs {
                        t.push(vec![a.into(), z.re.into(), z.im.into(), i_uniform_rel_err(a, z)?.into()]);
                    }
                }
                Ok(t)
            }
        },
    }
}

fn verify_table(plan: &ScalingPlan, spec: &EnsembleSpec, method: Method, n_list: &[usize]) -> Result<Table> {
    let rows = convergence_table(plan, spec, method, n_list)?;
    let mut t = Table::new(vec!["N", "lhs", "rhs", "abs_err"]);
    for r in rows {
        t.push(vec![r.n.into(), r.lhs.into(), r.rhs.into(), r.abs_err.into()]);
    }
    Ok(t)
}

/// Runs the CLI with an explicit precision override; returns the exit code.
pub fn run_with<I, T>(args: I, precision_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = RunConfig::resolve(cli, precision_env).and_then(|cfg| execute(&cfg).map(|t| (cfg, t)));
    match result {
        Ok((cfg, table)) => match output::write_table(out, &cfg, &table) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs the CLI, reading the precision override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(PRECISION_ENV).ok();
    run_with(args, env.as_deref(), out, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("covkernel").chain(args.iter().copied()), None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn kernel_plain_value() {
        let (code, out, _) = run_str(&["kernel", "--id", "sine", "--x", "0", "--y", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1.0\n");
    }

    #[test]
    fn mp_plain_value() {
        let (code, out, _) = run_str(&["mp", "--gamma", "1", "--xi", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0.15915494309189535\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["kernel", "--id", "sine", "--bogus"]).0, 2);
        assert_eq!(run_str(&["mp", "--gamma", "2", "--xi", "1"]).0, 2);
        assert_eq!(run_str(&["exact", "--n", "1", "--m", "2"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn b_star_is_derived_and_echoed() {
        let cfg = parse_config(["covkernel", "exact", "--beta", "1", "--b", "2", "--n", "3", "--m", "1"], None).unwrap();
        match cfg.run {
            CommandConfig::Exact { ensemble, .. } => {
                assert_eq!(ensemble.b_star, -1.0);
                assert_eq!(ensemble.dist, None);
            }
            other => panic!("{other:?}"),
        }
        let cfg = parse_config(["covkernel", "mc", "--beta", "2", "--b", "0.25", "--n", "3", "--m", "1"], None).unwrap();
        match cfg.run {
            CommandConfig::Mc { ensemble, .. } => assert_eq!(ensemble.dist, Some(BuiltinEnsemble::ComplexSign)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn precision_override() {
        let args = ["covkernel", "exact", "--n", "3", "--m", "2"];
        assert_eq!(parse_config(args, Some("512")).unwrap().precision_bits, Some(512));
        assert_eq!(parse_config(args, None).unwrap().precision_bits, None);
        assert!(parse_config(args, Some("abc")).is_err());
        let with_flag = ["covkernel", "exact", "--n", "3", "--m", "2", "--bits", "320"];
        assert_eq!(parse_config(with_flag, Some("512")).unwrap().precision_bits, Some(320));
    }

    #[test]
    fn exact_small_value() {
        let (code, out, _) = run_str(&["exact", "--beta", "2", "--dist", "complex-sign", "--n", "2", "--m", "1"]);
        assert_eq!(code, 0);
        let v: f64 = out.trim().parse().unwrap();
        assert!((v - 4.0).abs() < 1e-9, "{out}");
    }
}
