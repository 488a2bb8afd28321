//! `gtdim`: exact Gelfand–Tsetlin dimension computations from the command line.
//!
//! Subcommands: `dim`, `reldim`, `phi`, `verify`, `sweep`.
//! Exit codes: 0 success, 1 input error, 2 verification failure.

mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use gtdim_core::boundary::{self, OmegaPoint, Sampler};
use gtdim_core::exact::{fmt_rat, parse_rat, Rat};
use gtdim_core::gt::{dim_weyl, Signature};
use gtdim_core::reldim;
use gtdim_core::schur::skew_count;
use num::Zero;
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gtdim", version, about = "Exact Gelfand-Tsetlin dimensions, special functions, and boundary kernels")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dp,
    Skew,
    Basis,
    Residue,
    Shifted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SamplerKind {
    Exhaustive,
    Profile,
    Random,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print Dim_N nu.
    Dim {
        /// Signature as a JSON integer array, e.g. "[2,1,0]".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Print the relative dimension Dim_{K,N}(kappa,nu)/Dim_N nu.
    Reldim {
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Which formula to use.
        #[arg(long, value_enum, default_value = "residue")]
        method: Method,
        /// Compute every method and fail (exit 2) on any disagreement.
        #[arg(long)]
        check_all: bool,
        /// Print integers as n/1.
        #[arg(long)]
        strict_rational: bool,
    },
    /// Print Laurent coefficients phi_n, one "n<TAB>value" line per index.
    Phi {
        /// Embedded point omega(nu), exact output.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "omega")]
        nu: Option<String>,
        /// Boundary point as JSON, e.g. '{"beta_minus":["1/2"],"gamma_plus":"0"}'.
        #[arg(long)]
        omega: Option<String>,
        /// Index window "a:b".
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// Quadrature tolerance for non-rational points.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        strict_rational: bool,
    },
    /// Run a named identity suite; exit 2 on any failure.
    Verify {
        #[arg(long)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep the deviation |Lambda^N_K - Lambda^inf_K| over nu families.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        /// Level range "a:b" (inclusive).
        #[arg(long = "N")]
        n_range: String,
        #[arg(long, value_enum)]
        sampler: SamplerKind,
        /// Box half-width for exhaustive/random samplers.
        #[arg(long = "box", default_value_t = 1)]
        box_bound: i64,
        /// Rational profile for the profile sampler, e.g. "[1/2,0]".
        #[arg(long, allow_hyphen_values = true)]
        profile: Option<String>,
        /// Sample count per level for the random sampler.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path.
        #[arg(long)]
        out: String,
        #[arg(long)]
        strict_rational: bool,
    },
}

/// Input problems exit 1; verification failures exit 2.
pub enum CliError {
    Input(String),
    Verify(String),
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn parse_signature(s: &str) -> Result<Signature, CliError> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| CliError::Input(format!("expected a JSON integer array, got {s:?}")))?;
    let mut parts = Vec::new();
    if !inner.trim().is_empty() {
        for piece in inner.split(',') {
            let v: i64 = piece
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("not an integer: {piece:?}")))?;
            parts.push(v);
        }
    }
    if parts.is_empty() {
        return Err(CliError::Input("signature must be nonempty".into()));
    }
    Signature::new(parts).map_err(|_| CliError::Input(format!("not weakly decreasing: {s}")))
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("expected \"a:b\", got {s:?}")))?;
    let lo: i64 = a
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not an integer: {a:?}")))?;
    let hi: i64 = b
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("not an integer: {b:?}")))?;
    if lo > hi {
        return Err(CliError::Input(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

fn parse_rat_list(v: &serde_json::Value, key: &str) -> Result<Vec<Rat>, CliError> {
    match v.get(key) {
        None => Ok(vec![]),
        Some(serde_json::Value::Array(items)) => items
            .iter()
            .map(|item| match item {
                serde_json::Value::String(s) => Ok(parse_rat(s)?),
                serde_json::Value::Number(n) => Ok(parse_rat(&n.to_string())?),
                other => Err(CliError::Input(format!(
                    "{key}: expected \"p/q\" strings, got {other}"
                ))),
            })
            .collect(),
        Some(other) => Err(CliError::Input(format!(
            "{key}: expected an array, got {other}"
        ))),
    }
}

fn parse_rat_field(v: &serde_json::Value, key: &str) -> Result<Rat, CliError> {
    match v.get(key) {
        None => Ok(Rat::zero()),
        Some(serde_json::Value::String(s)) => Ok(parse_rat(s)?),
        Some(serde_json::Value::Number(n)) => Ok(parse_rat(&n.to_string())?),
        Some(other) => Err(CliError::Input(format!(
            "{key}: expected a \"p/q\" string, got {other}"
        ))),
    }
}

fn parse_omega(s: &str) -> Result<OmegaPoint, CliError> {
    let v: serde_json::Value =
        serde_json::from_str(s).map_err(|e| CliError::Input(format!("omega JSON: {e}")))?;
    if !v.is_object() {
        return Err(CliError::Input("omega must be a JSON object".into()));
    }
    Ok(OmegaPoint::new(
        parse_rat_list(&v, "alpha_plus")?,
        parse_rat_list(&v, "beta_plus")?,
        parse_rat_list(&v, "alpha_minus")?,
        parse_rat_list(&v, "beta_minus")?,
        parse_rat_field(&v, "gamma_plus")?,
        parse_rat_field(&v, "gamma_minus")?,
    )?)
}

fn parse_profile(s: &str) -> Result<Vec<Rat>, CliError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| CliError::Input(format!("expected \"[p/q,...]\", got {s:?}")))?;
    inner
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| Ok(parse_rat(p)?))
        .collect()
}

fn cmd_dim(nu: &str) -> CliResult {
    let nu = parse_signature(nu)?;
    println!("{}", dim_weyl(&nu)?);
    Ok(())
}

fn run_method(m: Method, kappa: &Signature, nu: &Signature) -> Result<Rat, CliError> {
    Ok(match m {
        Method::Dp => reldim::reldim_dp(kappa, nu)?,
        Method::Skew => {
            Rat::new(skew_count(kappa, nu)?, dim_weyl(nu)?)
        }
        Method::Basis => reldim::reldim_basis(kappa, nu)?,
        Method::Residue => reldim::reldim_residue(kappa, nu)?,
        Method::Shifted => reldim::reldim_residue_shifted(kappa, nu)?,
    })
}

fn cmd_reldim(
    kappa: &str,
    nu: &str,
    method: Method,
    check_all: bool,
    strict: bool,
) -> CliResult {
    let kappa = parse_signature(kappa)?;
    let nu = parse_signature(nu)?;
    if kappa.len() >= nu.len() {
        return Err(CliError::Input(format!(
            "K must be smaller than N: K={}, N={}",
            kappa.len(),
            nu.len()
        )));
    }
    if check_all {
        let mut results: Vec<(&str, Rat)> = vec![
            ("dp", run_method(Method::Dp, &kappa, &nu)?),
            ("skew", run_method(Method::Skew, &kappa, &nu)?),
            ("basis", run_method(Method::Basis, &kappa, &nu)?),
            ("residue", run_method(Method::Residue, &kappa, &nu)?),
        ];
        // the shifted route may legitimately refuse; a refusal is not a mismatch
        match reldim::reldim_residue_shifted(&kappa, &nu) {
            Ok(v) => results.push(("shifted", v)),
            Err(gtdim_core::Error::Precondition(_)) => {}
            Err(e) => return Err(e.into()),
        }
        let first = results[0].1.clone();
        let disagree: Vec<String> = results
            .iter()
            .filter(|(_, v)| *v != first)
            .map(|(name, v)| format!("{name}={}", fmt_rat(v, strict)))
            .collect();
        if !disagree.is_empty() {
            return Err(CliError::Verify(format!(
                "method disagreement: dp={} vs {}",
                fmt_rat(&first, strict),
                disagree.join(", ")
            )));
        }
        println!("{}", fmt_rat(&first, strict));
    } else {
        let v = run_method(method, &kappa, &nu)?;
        println!("{}", fmt_rat(&v, strict));
    }
    Ok(())
}

fn cmd_phi(
    nu: Option<&str>,
    omega: Option<&str>,
    range: &str,
    tol: f64,
    strict: bool,
) -> CliResult {
    let (n_min, n_max) = parse_range(range)?;
    match (nu, omega) {
        (Some(nu), None) => {
            let nu = parse_signature(nu)?;
            let w = boundary::phi_n_exact(&nu, n_min, n_max)?;
            for n in n_min..=n_max {
                println!("{n}\t{}", fmt_rat(w.get(n), strict));
            }
        }
        (None, Some(omega)) => {
            let om = parse_omega(omega)?;
            if om.is_rational() {
                let w = boundary::phi_window_omega(&om, n_min, n_max)?;
                for n in n_min..=n_max {
                    println!("{n}\t{}", fmt_rat(w.get(n), strict));
                }
            } else {
                for n in n_min..=n_max {
                    let v = boundary::phi_n_numeric(&om, n, tol)?;
                    println!("{n}\t{v:.16e}");
                }
            }
        }
        _ => {
            return Err(CliError::Input(
                "exactly one of --nu or --omega is required".into(),
            ))
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    kappa: &str,
    n_range: &str,
    kind: SamplerKind,
    box_bound: i64,
    profile: Option<&str>,
    count: usize,
    seed: u64,
    out: &str,
    strict: bool,
) -> CliResult {
    let kappa = parse_signature(kappa)?;
    let (lo, hi) = parse_range(n_range)?;
    if lo <= kappa.len() as i64 {
        return Err(CliError::Input(format!(
            "N must exceed K = {}; got range {n_range}",
            kappa.len()
        )));
    }
    let levels: Vec<usize> = (lo..=hi).map(|n| n as usize).collect();
    let sampler = match kind {
        SamplerKind::Exhaustive => {
            if box_bound < 0 {
                return Err(CliError::Input("box must be nonnegative".into()));
            }
            Sampler::Exhaustive { bound: box_bound }
        }
        SamplerKind::Profile => {
            let p = profile.ok_or_else(|| {
                CliError::Input("profile sampler needs --profile \"[p/q,...]\"".into())
            })?;
            Sampler::Profile {
                profile: parse_profile(p)?,
            }
        }
        SamplerKind::Random => Sampler::Random {
            bound: box_bound,
            count,
            seed,
        },
    };
    let rows = boundary::approx_sweep(&kappa, &levels, &sampler)?;
    let mut body = String::from("N,nu,lambda_NK,lambda_inf,deviation\n");
    for row in &rows {
        let _ = writeln!(
            body,
            "{},{},{},{},{}",
            row.n,
            row.nu,
            fmt_rat(&row.lambda_nk, strict),
            fmt_rat(&row.lambda_inf, strict),
            fmt_rat(&row.deviation, strict)
        );
    }
    body.push_str("# summary\n# N,max_deviation\n");
    for (n, m) in boundary::sweep_maxima(&rows) {
        let _ = writeln!(body, "# {},{}", n, fmt_rat(&m, strict));
    }
    std::fs::write(out, body).map_err(|e| CliError::Input(format!("cannot write {out}: {e}")))?;
    Ok(())
}

fn dispatch(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Dim { nu } => cmd_dim(&nu),
        Cmd::Reldim {
            kappa,
            nu,
            method,
            check_all,
            strict_rational,
        } => cmd_reldim(&kappa, &nu, method, check_all, strict_rational),
        Cmd::Phi {
            nu,
            omega,
            range,
            tol,
            strict_rational,
        } => cmd_phi(nu.as_deref(), omega.as_deref(), &range, tol, strict_rational),
        Cmd::Verify { suite, seed } => verify::run_suite(suite, seed),
        Cmd::Sweep {
            kappa,
            n_range,
            sampler,
            box_bound,
            profile,
            count,
            seed,
            out,
            strict_rational,
        } => cmd_sweep(
            &kappa,
            &n_range,
            sampler,
            box_bound,
            profile.as_deref(),
            count,
            seed,
            &out,
            strict_rational,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Verify(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(2)
        }
    }
}
