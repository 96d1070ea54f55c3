//! Command-line front end: `torusq series ...` and `torusq check ...`.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::algebra::{CycloNum, QSeries, XLaurent};
use crate::bailey::NamedPair;
use crate::error::{Error, Result};
use crate::hecke::hecke_u_series;
use crate::io;
use crate::knot::{
    c_product, eval_f_at_root, jones_hyper, jones_left, mirror, theta_phi_sum, theta_scale,
    u_series, u_specialized_at_minus_q_pow, KnotFamilyParams,
};
use crate::verify::{self, CheckReport, CheckSpec, Profile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "torusq", version, about = "Exact q-series for the torus knots T(2,2t+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a series, polynomial or root-of-unity value.
    Series(SeriesArgs),
    /// Run checks; reports go to stdout as JSON lines.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct Family {
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Color, or order of the root of unity.
    #[arg(long = "N")]
    pub big_n: Option<u32>,
    /// Coefficient index.
    #[arg(long)]
    pub n: Option<u32>,
    /// Compute below q^trunc.
    #[arg(long)]
    pub trunc: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write data here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub kind: SeriesKind,
    #[command(flatten)]
    pub family: Family,
    /// symbolic, minus-one, minus-q^N, or a rational such as 1/2.
    #[arg(long, default_value = "symbolic")]
    pub x: XSpec,
    #[arg(long, value_enum, default_value_t = Hand::Left)]
    pub hand: Hand,
    /// Evaluate at zeta_N^-1 instead of zeta_N.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub kind: CheckKind,
    #[command(flatten)]
    pub family: Family,
    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, env = "TORUSQ_PROFILE", default_value = "desk")]
    pub profile: String,
    /// Bailey pair: unit, unit-q, unit-q2, jones, multisum, kernel, star, andrews.
    #[arg(long)]
    pub pair: Option<String>,
    /// Also run the negative controls with this seed (suite only).
    #[arg(long)]
    pub mutate: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "F-root", alias = "f-root")]
    FRoot,
    #[value(name = "C", alias = "c")]
    C,
    Jones,
    Theta,
    Hecke,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Duality,
    JonesAgreement,
    Bernoulli,
    Hecke,
    Cyclotomic,
    Habiro,
    Bailey,
    Suite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Hand {
    /// The family `J_N^{(t,m)}`; for `m = 1` the mirror torus knot.
    Left,
    /// Mirror image of `left`.
    Right,
    /// The hypergeometric formula for `T(2, 2t+1)` (`m = 1` only).
    Hyper,
}

/// Value substituted for `x`.
#[derive(Clone, Debug, PartialEq)]
pub enum XSpec {
    Symbolic,
    Rational(BigRational),
    MinusQPowN,
}

impl FromStr for XSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "symbolic" => Ok(XSpec::Symbolic),
            "minus-one" => Ok(XSpec::Rational(BigRational::from_integer((-1).into()))),
            "minus-q^N" | "minus-q^n" => Ok(XSpec::MinusQPowN),
            other => other
                .parse::<BigRational>()
                .map(XSpec::Rational)
                .map_err(|_| format!("'{other}' is not symbolic, minus-one, minus-q^N or a rational")),
        }
    }
}

enum Output {
    Series(QSeries),
    Laurent(XLaurent),
    Cyclo(CycloNum),
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Series(s) => write!(f, "{s}"),
            Output::Laurent(p) => write!(f, "{}", p.display_in("q")),
            Output::Cyclo(c) => write!(f, "{c}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

impl Family {
    fn params(&self) -> Result<KnotFamilyParams> {
        KnotFamilyParams::new(self.t, self.m)
    }

    fn color(&self) -> Result<u32> {
        match self.big_n {
            Some(0) => Err(usage("--N must be positive")),
            Some(n) => Ok(n),
            None => Err(usage("this command needs --N")),
        }
    }

    fn trunc_or(&self, default: i64) -> Result<i64> {
        match self.trunc.unwrap_or(default) {
            t if t > 0 => Ok(t),
            t => Err(usage(format!("--trunc must be positive, got {t}"))),
        }
    }
}

fn specialize(s: QSeries, x: &XSpec) -> Result<QSeries> {
    match x {
        XSpec::Symbolic => Ok(s),
        XSpec::Rational(v) => s.specialize_x(v),
        XSpec::MinusQPowN => Err(usage("x = -q^N is only available for U")),
    }
}

fn compute_series(a: &SeriesArgs) -> Result<Output> {
    let f = &a.family;
    let p = f.params()?;
    Ok(match a.kind {
        SeriesKind::U => match a.x {
            XSpec::MinusQPowN => Output::Laurent(u_specialized_at_minus_q_pow(p, f.color()?)?),
            _ => Output::Series(specialize(u_series(p, f.trunc_or(10)?), &a.x)?),
        },
        SeriesKind::Hecke => Output::Series(specialize(hecke_u_series(p, f.trunc_or(10)?)?, &a.x)?),
        SeriesKind::Theta => {
            let scale = theta_scale(p) as i64;
            Output::Series(theta_phi_sum(p, f.trunc_or(10)? * scale))
        }
        SeriesKind::C => {
            let n = f.n.ok_or_else(|| usage("series C needs --n"))?;
            Output::Laurent(c_product(p, n))
        }
        SeriesKind::Jones => {
            let n = f.color()?;
            Output::Laurent(match a.hand {
                Hand::Left => jones_left(p, n)?,
                Hand::Right => mirror(&jones_left(p, n)?),
                Hand::Hyper if p.m() == 1 => jones_hyper(p.t(), n)?,
                Hand::Hyper => return Err(usage("--hand hyper needs --m 1")),
            })
        }
        SeriesKind::FRoot => Output::Cyclo(eval_f_at_root(p, f.color()?, a.inverse)?),
    })
}

fn render(out: &Output, format: Format) -> Result<String> {
    Ok(match (out, format) {
        (_, Format::Pretty) => format!("{out}\n"),
        (Output::Series(s), Format::Json) => io::series_to_json(s) + "\n",
        (Output::Laurent(p), Format::Json) => io::laurent_to_json(p) + "\n",
        (Output::Cyclo(c), Format::Json) => io::cyclo_to_json(c) + "\n",
        (Output::Series(s), Format::Csv) => io::series_to_csv(s)?,
        (Output::Laurent(p), Format::Csv) => io::series_to_csv(&QSeries::from_q_laurent(p))?,
        (Output::Cyclo(c), Format::Csv) => io::cyclo_to_csv(c)?,
    })
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
    .map_err(|e| Error::InvalidParams(format!("cannot write output: {e}")))
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write) -> Result<i32> {
    let value = compute_series(a)?;
    let text = render(&value, a.family.format.unwrap_or(Format::Json))?;
    emit(&text, a.family.output.as_ref(), out)?;
    Ok(EXIT_PASS)
}

fn check_specs(a: &CheckArgs) -> Result<Vec<CheckSpec>> {
    let f = &a.family;
    let p = || f.params();
    let n_or = |d: u32| f.n.unwrap_or(d);
    Ok(match a.kind {
        CheckKind::Duality => vec![CheckSpec::Duality { family: p()?, n: f.color()? }],
        CheckKind::JonesAgreement => vec![CheckSpec::JonesAgreement { family: p()?, n: f.color()? }],
        CheckKind::Bernoulli => vec![CheckSpec::Bernoulli { family: p()?, n: f.color()? }],
        CheckKind::Hecke => vec![CheckSpec::Hecke { family: p()?, trunc: f.trunc_or(20)? }],
        CheckKind::Cyclotomic => vec![CheckSpec::Cyclotomic { family: p()?, n_max: n_or(10) }],
        CheckKind::Habiro => {
            vec![CheckSpec::Habiro { family: p()?, n_max: f.big_n.or(f.n).unwrap_or(8) }]
        }
        CheckKind::Bailey => {
            let n_max = i64::from(n_or(8));
            let trunc = f.trunc_or(40)?;
            let family = p()?;
            match &a.pair {
                Some(name) => {
                    let pair = NamedPair::parse(name, f.t, f.m)?;
                    let mut v = vec![
                        CheckSpec::BaileyVerify { pair, n_max, trunc },
                        CheckSpec::BaileyStep { pair, n_max: n_max.min(6), trunc: trunc.min(30) },
                    ];
                    if pair.has_convergent_limit() && pair != NamedPair::Andrews {
                        v.push(CheckSpec::BaileyLimit { pair, trunc: trunc.min(20) });
                    }
                    v
                }
                None => vec![
                    CheckSpec::BaileyPipeline { family, n_max: n_max.min(6), trunc: trunc.min(30) },
                    CheckSpec::BaileyDecomposition { family, n_max },
                    CheckSpec::Conjugate { trunc: trunc.min(20) },
                ],
            }
        }
        CheckKind::Suite => a.profile.parse::<Profile>()?.specs(),
    })
}

fn report_line(r: &CheckReport, format: Format) -> String {
    match format {
        Format::Pretty => format!("{r}\n"),
        _ => r.to_json_line() + "\n",
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let format = a.family.format.unwrap_or(Format::Json);
    if format == Format::Csv {
        return Err(usage("check reports are JSON lines or pretty text"));
    }
    if a.mutate.is_some() && a.kind != CheckKind::Suite {
        return Err(usage("--mutate is only available for the suite"));
    }
    let specs = check_specs(a)?;
    let reports = verify::run_specs(&specs, a.jobs);
    let text: String = reports.iter().map(|r| report_line(r, format)).collect();
    emit(&text, a.family.output.as_ref(), out)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(err, "{} checks, {} failed", reports.len(), failed);
    let mut code = if failed == 0 { EXIT_PASS } else { EXIT_FAIL };
    if let Some(seed) = a.mutate {
        let outcomes = verify::run_mutations(&specs, seed, a.jobs);
        let missed: Vec<_> = outcomes.iter().filter(|o| !o.caught).collect();
        for o in &missed {
            let _ = writeln!(err, "mutation not located: {} {:?}", o.spec, o.mutation);
        }
        let _ = writeln!(err, "{}/{} mutations caught", outcomes.len() - missed.len(), outcomes.len());
        if !missed.is_empty() {
            code = EXIT_FAIL;
        }
    }
    Ok(code)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 pass, 1 failed check, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Series(a) => cmd_series(a, out),
        Command::Check(a) => cmd_check(a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}
