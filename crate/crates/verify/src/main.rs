use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ospkernel::registry::ParamMap;
use ospkernel::report::{self, summarize, IdentityReport};
use ospkernel::roots::RootContext;
use ospkernel::specialization::find_specialization;
use ospkernel::{Config, RunOptions, Specialization, VerifyError, REGISTRY};
use ospkernel_core::algebra::{Algebra, AlgebraElement, Params};
use ospkernel_core::parser::{parse_element, CoeffText};
use ospkernel_core::Field;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "ospkernel", version, about = "Exact PBW arithmetic and identity verification for U_{r,s}(osp(1,2))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW normal form of an expression.
    Normalize {
        expr: String,
        /// Evaluate at a root-of-unity specialization (`ell3`, `24:0:4`).
        #[arg(long)]
        spec: Option<Specialization>,
    },
    /// Multiply two expressions.
    Mul {
        lhs: String,
        rhs: String,
        #[arg(long)]
        spec: Option<Specialization>,
    },
    /// Print the commutator and anticommutator of two expressions.
    Commute {
        lhs: String,
        rhs: String,
        #[arg(long)]
        spec: Option<Specialization>,
    },
    /// Report whether an expression is central or supercentral.
    CenterCheck {
        expr: String,
        #[arg(long)]
        spec: Option<Specialization>,
    },
    /// Verify one identity.
    Verify {
        name: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        /// Extra parameter `key=value`.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        spec: Option<Specialization>,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Print reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Verify the whole registry.
    VerifyAll {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Record per-check wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Specialize an expression at the first assignment with `ord(q) = ell`.
    Specialize {
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value_t = ospkernel::DEFAULT_CONDUCTOR)]
        conductor: u32,
        expr: String,
    },
    /// Run the registry and write a report.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// List registered identities.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

type CliResult = Result<ExitCode, VerifyError>;

fn load_config(path: Option<&PathBuf>) -> Result<Config, VerifyError> {
    path.map_or_else(|| Ok(Config::default()), |p| Config::load(p))
}

fn with_algebra<F>(spec: Option<Specialization>, f: F) -> CliResult
where
    F: AlgebraTask,
{
    match spec {
        Some(s) => f.run(&RootContext::new(s).alg),
        None => f.run(&Algebra::new(Params::generic())),
    }
}

/// Work that is generic over the coefficient field.
trait AlgebraTask {
    fn run<K: Field + CoeffText>(self, alg: &Algebra<K>) -> CliResult;
}

fn parse<K: Field>(src: &str, alg: &Algebra<K>) -> Result<AlgebraElement<K>, VerifyError> {
    Ok(parse_element(src, alg)?)
}

struct Normalize<'a>(&'a str);
impl AlgebraTask for Normalize<'_> {
    fn run<K: Field + CoeffText>(self, alg: &Algebra<K>) -> CliResult {
        println!("{}", parse(self.0, alg)?);
        Ok(ExitCode::SUCCESS)
    }
}

struct Mul<'a>(&'a str, &'a str);
impl AlgebraTask for Mul<'_> {
    fn run<K: Field + CoeffText>(self, alg: &Algebra<K>) -> CliResult {
        let (x, y) = (parse(self.0, alg)?, parse(self.1, alg)?);
        println!("{}", alg.mul(&x, &y));
        Ok(ExitCode::SUCCESS)
    }
}

struct Commute<'a>(&'a str, &'a str);
impl AlgebraTask for Commute<'_> {
    fn run<K: Field + CoeffText>(self, alg: &Algebra<K>) -> CliResult {
        let (x, y) = (parse(self.0, alg)?, parse(self.1, alg)?);
        println!("commutator: {}", alg.commutator(&x, &y));
        println!("anticommutator: {}", alg.anticommutator(&x, &y));
        Ok(ExitCode::SUCCESS)
    }
}

struct CenterCheck<'a>(&'a str);
impl AlgebraTask for CenterCheck<'_> {
    fn run<K: Field + CoeffText>(self, alg: &Algebra<K>) -> CliResult {
        let x = parse(self.0, alg)?;
        let yes = |b: bool| if b { "yes" } else { "no" };
        println!("central: {}", yes(alg.is_central(&x)));
        println!("supercentral: {}", yes(alg.is_supercentral(&x)));
        Ok(ExitCode::SUCCESS)
    }
}

fn parse_param(s: &str) -> Result<(String, Value), VerifyError> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| VerifyError::Config(format!("expected KEY=VALUE, got `{s}`")))?;
    let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
    Ok((k.to_string(), value))
}

/// Prints the summary (to stderr when stdout carries JSON) and maps
/// failures to exit status 1.
fn finish(reports: &[IdentityReport], quiet_stdout: bool) -> ExitCode {
    let s = summarize(reports);
    let line = format!(
        "{} checks: {} pass, {} documented discrepancies, {} fail",
        reports.len(),
        s.pass,
        s.documented_discrepancy,
        s.fail
    );
    if quiet_stdout {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
    if s.fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn render_report(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json => report::to_json(reports),
        Format::Md => report::to_markdown(reports),
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Normalize { expr, spec } => with_algebra(spec, Normalize(&expr)),
        Command::Mul { lhs, rhs, spec } => with_algebra(spec, Mul(&lhs, &rhs)),
        Command::Commute { lhs, rhs, spec } => with_algebra(spec, Commute(&lhs, &rhs)),
        Command::CenterCheck { expr, spec } => with_algebra(spec, CenterCheck(&expr)),
        Command::Verify {
            name,
            m,
            p,
            q,
            params,
            spec,
            config,
            json,
        } => {
            let config = load_config(config.as_ref())?;
            let mut given = ParamMap::new();
            for (k, v) in [("m", m), ("p", p), ("q", q)] {
                if let Some(v) = v {
                    given.insert(k.into(), v.into());
                }
            }
            for s in &params {
                let (k, v) = parse_param(s)?;
                given.insert(k, v);
            }
            let reports = ospkernel::verify_identity(&name, &given, spec, &config, RunOptions::default())?;
            if json {
                print!("{}", report::to_json(&reports));
            } else {
                for r in &reports {
                    println!("{}", r.line());
                }
            }
            Ok(finish(&reports, json))
        }
        Command::VerifyAll {
            config,
            out,
            format,
            timings,
        } => {
            let config = load_config(config.as_ref())?;
            let reports = ospkernel::verify_all(&config, RunOptions { timings })?;
            for r in &reports {
                println!("{}", r.line());
            }
            if let Some(path) = out {
                std::fs::write(path, render_report(&reports, format))?;
            }
            Ok(finish(&reports, false))
        }
        Command::Specialize { ell, conductor, expr } => {
            let spec = find_specialization(ell, conductor)?;
            let generic = Algebra::new(Params::generic());
            let x = parse(&expr, &generic)?;
            let p = spec.params();
            let y = x.specialize(&p.x, &p.y)?;
            println!("{spec}");
            println!("{y}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            format,
            out,
            config,
            timings,
        } => {
            let config = load_config(config.as_ref())?;
            let reports = ospkernel::verify_all(&config, RunOptions { timings })?;
            std::fs::write(&out, render_report(&reports, format))?;
            println!("wrote {}", out.display());
            Ok(finish(&reports, false))
        }
        Command::List => {
            for e in REGISTRY {
                println!("{:<22} {}", e.name, e.summary);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
