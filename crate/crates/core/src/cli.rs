//! Command-line front end. `main` only calls [`main_with_args`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::delta::{d_gamma, enumerate_battery, enumerate_d_nls, enumerate_sigma, Params};
use crate::error::{Error, Result};
use crate::partition::{parse_partition, Composition};
use crate::poly::DEFAULT_MAX_ALGEBRA_DIM;
use crate::report::{fixture_records, render, Format, GridBounds, RunManifest};
use crate::suites::{run_suite, SuiteConfig, ALL_SUITES};
use crate::symfunc::{frob_battery, frob_rnk, frob_sigma, frob_ungraded, FrobeniusJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const THREADS_ENV: &str = "SPRINGER_LAB_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "springer-lab",
    version,
    about = "Descent bases, Frobenius characters and higher Specht checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List descent words, Σ pairs, battery tableaux or a γ-restricted word set.
    Enumerate(EnumerateArgs),
    /// Schur expansion of the graded Frobenius character.
    Frobenius(FrobeniusArgs),
    /// Run verification suites over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated parts; "" is the empty partition.
    #[arg(long, default_value = "")]
    pub lambda: String,
    #[arg(long)]
    pub s: usize,
}

impl TripleArgs {
    pub fn params(&self) -> Result<Params> {
        Params::new(self.n, parse_partition(&self.lambda)?, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    DescentWords,
    Sigma,
    Battery,
    DGamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    #[arg(long, value_enum)]
    pub what: What,
    /// Composition of n for `d-gamma`, comma-separated.
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sigma,
    Battery,
    Ungraded,
    Rnk,
}

#[derive(Debug, Args)]
pub struct FrobeniusArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    #[arg(long, value_enum, default_value = "sigma")]
    pub method: Method,
    /// Evaluate coefficients at q = 1.
    #[arg(long)]
    pub q_one: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    DescentBasis,
    HigherSpecht,
    FrobeniusEquivalence,
    Antisym,
    IdealOracles,
    All,
}

impl Suite {
    fn names(self) -> Vec<&'static str> {
        match self {
            Suite::DescentBasis => vec![crate::suites::DESCENT_BASIS],
            Suite::HigherSpecht => vec![crate::suites::HIGHER_SPECHT],
            Suite::FrobeniusEquivalence => vec![crate::suites::FROBENIUS_EQUIVALENCE],
            Suite::Antisym => vec![crate::suites::ANTISYM],
            Suite::IdealOracles => vec![crate::suites::IDEAL_ORACLES],
            Suite::All => ALL_SUITES.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_s: usize,
    /// Largest s^n for which the truncated algebra is built.
    #[arg(long, default_value_t = DEFAULT_MAX_ALGEBRA_DIM)]
    pub max_algebra_dim: usize,
    /// Random membership samples per triple (ideal-oracles).
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Directory of golden fixtures to re-evaluate.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    /// Only check fixtures; skip the suites.
    #[arg(long, requires = "fixtures")]
    pub dry_run: bool,
    /// Include per-suite wall times in the report.
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses, runs and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return EXIT_CONFIG;
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Verification(_) => EXIT_FAILED,
        _ => EXIT_CONFIG,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads = match v.trim().parse::<usize>() {
        Ok(t) if t > 0 => t,
        _ => {
            return Err(Error::InvalidParameters(format!(
                "{THREADS_ENV}={v:?} is not a thread count"
            )))
        }
    };
    // A second call in the same process (tests) finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Enumerate(a) => {
            write_output(a.out.as_ref(), &enumerate(a)?)?;
            Ok(EXIT_OK)
        }
        Command::Frobenius(a) => {
            write_output(a.out.as_ref(), &frobenius(a)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => verify(a),
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn digits(w: &[u32]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}

fn json_text<T: serde::Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

pub fn enumerate(a: &EnumerateArgs) -> Result<String> {
    let p = a.triple.params()?;
    if a.gamma.is_some() && a.what != What::DGamma {
        return Err(Error::InvalidParameters(
            "--gamma only applies to d-gamma".into(),
        ));
    }
    match a.what {
        What::DescentWords | What::DGamma => {
            let words = if a.what == What::DGamma {
                let text = a
                    .gamma
                    .as_deref()
                    .ok_or_else(|| Error::InvalidParameters("d-gamma needs --gamma".into()))?;
                d_gamma(&p, &parse_composition(text)?)?
            } else {
                enumerate_d_nls(&p)
            };
            match a.format {
                OutputFormat::Text => Ok(lines(words.iter().map(|w| digits(w)))),
                OutputFormat::Json => json_text(&words),
            }
        }
        What::Sigma => {
            let mut pairs = enumerate_sigma(&p);
            pairs.sort();
            match a.format {
                OutputFormat::Text => Ok(lines(pairs.iter().map(|sp| {
                    let rows: Vec<String> = sp.tableau.rows().iter().map(|r| digits(r)).collect();
                    format!("{} mu={}", rows.join("/"), sp.mu)
                }))),
                OutputFormat::Json => json_text(&pairs),
            }
        }
        What::Battery => {
            let mut tabs = enumerate_battery(&p);
            tabs.sort();
            match a.format {
                OutputFormat::Text => Ok(lines(tabs.iter().map(|t| {
                    let dev: Vec<String> = t.device.rows().iter().map(|r| digits(r)).collect();
                    let bat: Vec<String> = t.battery.rows().iter().map(|r| digits(r)).collect();
                    format!(
                        "device {} battery {} cocharge {}",
                        dev.join("/"),
                        bat.join("/"),
                        t.cocharge()
                    )
                }))),
                OutputFormat::Json => json_text(&tabs),
            }
        }
    }
}

fn parse_composition(text: &str) -> Result<Composition> {
    let parts = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::InvalidParameters(format!("bad part {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

pub fn frobenius(a: &FrobeniusArgs) -> Result<String> {
    let p = a.triple.params()?;
    let (name, mut f) = match a.method {
        Method::Sigma => ("sigma", frob_sigma(&p)),
        Method::Battery => ("battery", frob_battery(&p)?),
        Method::Ungraded => ("ungraded", frob_ungraded(&p)),
        Method::Rnk => {
            if p.lambda.parts().iter().any(|&x| x != 1) || p.s != p.k() {
                return Err(Error::InvalidParameters(
                    "rnk needs λ = (1^k) and s = k".into(),
                ));
            }
            ("rnk", frob_rnk(p.n, p.k()))
        }
    };
    if a.q_one {
        f = f.at_q_one();
    }
    match a.format {
        OutputFormat::Text => Ok(format!("{f}\n")),
        OutputFormat::Json => json_text(&FrobeniusJson::new(&p, name, &f)),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<i32> {
    let cfg = SuiteConfig {
        max_n: a.max_n,
        max_s: a.max_s,
        max_algebra_dim: a.max_algebra_dim,
        samples: a.samples,
        seed: a.seed,
    };
    let mut names = if a.dry_run {
        Vec::new()
    } else {
        a.suite.names()
    };
    if a.fixtures.is_some() {
        names.push("fixtures");
    }
    let mut manifest = RunManifest::new(
        GridBounds {
            max_n: a.max_n,
            max_s: a.max_s,
            max_algebra_dim: a.max_algebra_dim,
        },
        &names,
    );
    if let Some(dir) = &a.fixtures {
        let t = Instant::now();
        manifest.extend(fixture_records(dir)?);
        if a.timings {
            manifest.record_time("fixtures", t.elapsed().as_millis() as u64);
        }
    }
    for name in names.iter().filter(|n| **n != "fixtures") {
        let t = Instant::now();
        manifest.extend(run_suite(name, &cfg)?);
        if a.timings {
            manifest.record_time(name, t.elapsed().as_millis() as u64);
        }
    }
    manifest.validate()?;
    write_output(a.out.as_ref(), &render(&manifest, a.format)?)?;
    let s = &manifest.summary;
    eprintln!(
        "{} checks, {} passed, {} failed; {}",
        s.total,
        s.passed,
        s.failed,
        if manifest.passed() { "ok" } else { "FAILED" }
    );
    Ok(if manifest.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("springer-lab").chain(args.iter().copied())).unwrap()
    }

    fn enumerate_text(args: &[&str]) -> String {
        match parse(args).command {
            Command::Enumerate(a) => enumerate(&a).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn descent_words_for_2_1_2() {
        let out = enumerate_text(&[
            "enumerate",
            "--n",
            "2",
            "--lambda",
            "1",
            "--s",
            "2",
            "--what",
            "descent-words",
        ]);
        assert_eq!(out, "00\n01\n10\n");
    }

    #[test]
    fn battery_and_sigma_counts() {
        let base = [
            "enumerate",
            "--n",
            "4",
            "--lambda",
            "2,1",
            "--s",
            "3",
            "--what",
        ];
        let bat = enumerate_text(&[&base[..], &["battery"]].concat());
        assert_eq!(bat.lines().count(), 10);
        let sig = enumerate_text(&[&base[..], &["sigma"]].concat());
        assert_eq!(sig.lines().count(), 10);
    }

    #[test]
    fn empty_lambda_is_accepted() {
        let out = enumerate_text(&[
            "enumerate",
            "--n",
            "2",
            "--lambda",
            "",
            "--s",
            "2",
            "--what",
            "descent-words",
        ]);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn d_gamma_needs_gamma() {
        let a = parse(&[
            "enumerate",
            "--n",
            "3",
            "--lambda",
            "1",
            "--s",
            "2",
            "--what",
            "d-gamma",
        ]);
        let Command::Enumerate(a) = a.command else {
            unreachable!()
        };
        assert!(matches!(enumerate(&a), Err(Error::InvalidParameters(_))));
        let out = enumerate_text(&[
            "enumerate",
            "--n",
            "3",
            "--lambda",
            "1",
            "--s",
            "2",
            "--what",
            "d-gamma",
            "--gamma",
            "2,1",
        ]);
        assert!(out.lines().all(|w| w.as_bytes()[0] < w.as_bytes()[1]));
    }

    #[test]
    fn methods_agree_and_q_one_collapses() {
        let run_method = |m: &str, extra: &[&str]| {
            let mut args = vec![
                "frobenius",
                "--n",
                "4",
                "--lambda",
                "2,1",
                "--s",
                "3",
                "--method",
                m,
            ];
            args.extend_from_slice(extra);
            let Command::Frobenius(a) = parse(&args).command else {
                unreachable!()
            };
            frobenius(&a).unwrap()
        };
        let sigma = run_method("sigma", &[]);
        assert_eq!(
            sigma.replace("\"sigma\"", "\"battery\""),
            run_method("battery", &[])
        );
        assert_eq!(
            run_method("sigma", &["--q-one"]).replace("\"sigma\"", "\"ungraded\""),
            run_method("ungraded", &[])
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            main_with_args([
                "springer-lab",
                "frobenius",
                "--n",
                "2",
                "--lambda",
                "1,1,1",
                "--s",
                "3"
            ]),
            EXIT_CONFIG
        );
        assert_eq!(
            main_with_args([
                "springer-lab",
                "frobenius",
                "--n",
                "3",
                "--lambda",
                "2,1",
                "--s",
                "1"
            ]),
            EXIT_CONFIG
        );
        assert_eq!(main_with_args(["springer-lab", "bogus"]), EXIT_CONFIG);
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("r.json");
        let out = out.to_str().unwrap();
        let args = [
            "springer-lab",
            "verify",
            "--suite",
            "descent-basis",
            "--max-n",
            "3",
            "--max-s",
            "3",
        ];
        assert_eq!(
            main_with_args(
                args.iter()
                    .copied()
                    .chain(["--max-algebra-dim", "10", "--out", out])
            ),
            EXIT_BUDGET
        );
        assert_eq!(
            main_with_args(args.iter().copied().chain(["--out", out])),
            EXIT_OK
        );
    }
}
