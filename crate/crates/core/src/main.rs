//! Command-line front end: single character values, full tables, identity
//! checks for one class-pair instance, exhaustive sweeps, and a look at the
//! value cache. Exit code 0 means success and, for checks, all-pass; 1 means
//! a check found a mismatch; 2 means the invocation itself was unusable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symchar::evaluator::CacheLoadReport;
use symchar::{
    sweep, verify_coincidence, verify_expansion, verify_square_sums, CycleType, Evaluator,
    FamilyInstance, Partition, Report, SweepSummary,
};

#[derive(Parser)]
#[command(name = "symchar", version, about = "Exact symmetric group character calculator")]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Value cache file: read at startup if present, extended on exit.
    #[arg(long, global = true, env = "SYMCHAR_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Expansion,
    Coincidence,
    Squares,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character value chi^lambda(mu).
    Value {
        /// Shape partition, e.g. "3,2" or "3,1^3"; "" is the empty partition.
        #[arg(long)]
        lambda: String,
        /// Cycle type partition, same syntax.
        #[arg(long)]
        mu: String,
    },
    /// Print the character table of the symmetric group on n points.
    Table { n: u64 },
    /// Check the identities for the instance built from (alpha, t).
    Verify {
        /// Partition with odd parts only; "" for the empty partition.
        #[arg(long)]
        alpha: String,
        /// Number of appended powers of two.
        #[arg(long)]
        t: u32,
        /// Which identity to check.
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Check every instance with n up to max-n and t up to max-t.
    Sweep {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        max_t: u32,
    },
    /// Report what the configured cache file holds.
    CacheInfo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> symchar::Result<ExitCode> {
    let ev = Evaluator::new();
    let store = ev.memo().expect("fresh evaluator is memoized");
    let mut cache_report = None;
    if let Some(path) = &cli.cache {
        if path.exists() {
            match store.load_file(path) {
                Ok(report) => cache_report = Some(report),
                Err(err) => eprintln!("warning: cache {} not read: {err}", path.display()),
            }
        }
    }

    let code = match &cli.command {
        Command::Value { lambda, mu } => cmd_value(&ev, cli.format, lambda, mu)?,
        Command::Table { n } => cmd_table(&ev, cli.format, *n)?,
        Command::Verify { alpha, t, which } => cmd_verify(&ev, cli.format, alpha, *t, *which)?,
        Command::Sweep { max_n, max_t } => cmd_sweep(&ev, cli.format, *max_n, *max_t)?,
        Command::CacheInfo => cmd_cache_info(cli.format, cli.cache.as_deref(), cache_report),
    };

    if let Some(path) = &cli.cache {
        if let Err(err) = store.append_new(path) {
            eprintln!("warning: cache {} not updated: {err}", path.display());
        }
    }
    Ok(code)
}

fn cmd_value(ev: &Evaluator, format: Format, lambda: &str, mu: &str) -> symchar::Result<ExitCode> {
    let lambda: Partition = lambda.parse()?;
    let mu: CycleType = mu.parse()?;
    let value = ev.value(&lambda, &mu)?;
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "lambda": lambda.to_string(),
                "mu": mu.to_string(),
                "value": value.to_string(),
            })
        ),
        Format::Csv => {
            println!("lambda,mu,value");
            println!("\"{lambda}\",\"{mu}\",{value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(ev: &Evaluator, format: Format, n: u64) -> symchar::Result<ExitCode> {
    let table = ev.character_table(n)?;
    match format {
        Format::Text => print!("{table}"),
        Format::Json => println!("{}", table.to_json()),
        Format::Csv => print!("{}", table.to_csv()),
    }
    Ok(ExitCode::SUCCESS)
}

fn selected_reports(
    ev: &Evaluator,
    fam: &FamilyInstance,
    which: Which,
) -> symchar::Result<Vec<Report>> {
    let mut reports = Vec::new();
    if matches!(which, Which::Expansion | Which::All) {
        reports.push(verify_expansion(ev, fam)?);
    }
    if matches!(which, Which::Coincidence | Which::All) {
        reports.push(verify_coincidence(ev, fam)?);
    }
    if matches!(which, Which::Squares | Which::All) {
        reports.push(verify_square_sums(ev, fam)?);
    }
    Ok(reports)
}

fn cmd_verify(
    ev: &Evaluator,
    format: Format,
    alpha: &str,
    t: u32,
    which: Which,
) -> symchar::Result<ExitCode> {
    let alpha: Partition = alpha.parse()?;
    let fam = FamilyInstance::new(alpha, t)?;
    let reports = selected_reports(ev, &fam, which)?;
    let pass = reports.iter().all(Report::all_pass);
    match format {
        Format::Text => {
            for report in &reports {
                print!("{report}");
            }
            println!("result: {}", if pass { "pass" } else { "FAIL" });
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "pass": pass,
                "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            })
        ),
        Format::Csv => {
            println!("check,alpha,t,n,j,lhs,rhs,equal");
            for report in &reports {
                for row in &report.rows {
                    let j = row.j.map(|j| j.to_string()).unwrap_or_default();
                    println!(
                        "{},\"{}\",{},{},{},{},{},{}",
                        report.kind.name(),
                        row.alpha,
                        row.t,
                        row.n,
                        j,
                        row.lhs,
                        row.rhs,
                        row.passed()
                    );
                }
            }
        }
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_sweep(ev: &Evaluator, format: Format, max_n: u64, max_t: u32) -> symchar::Result<ExitCode> {
    let summary = sweep(ev, max_n, max_t)?;
    print_sweep(format, &summary);
    Ok(if summary.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_sweep(format: Format, summary: &SweepSummary) {
    match format {
        Format::Text => {
            println!("instances: {}", summary.instances);
            println!("checks: {}", summary.checks);
            println!("failures: {}", summary.failures.len());
            for (kind, row) in &summary.failures {
                let j = row.j.map(|j| format!(" j={j}")).unwrap_or_default();
                println!(
                    "{} alpha=\"{}\" t={} n={}{}: lhs={} rhs={} MISMATCH",
                    kind.name(),
                    row.alpha,
                    row.t,
                    row.n,
                    j,
                    row.lhs,
                    row.rhs
                );
            }
        }
        Format::Json => println!("{}", summary.to_json()),
        Format::Csv => {
            println!("instances,checks,failures");
            println!(
                "{},{},{}",
                summary.instances,
                summary.checks,
                summary.failures.len()
            );
        }
    }
}

fn cmd_cache_info(
    format: Format,
    path: Option<&std::path::Path>,
    report: Option<CacheLoadReport>,
) -> ExitCode {
    match format {
        Format::Text => match (path, report) {
            (None, _) => println!("no cache configured"),
            (Some(path), None) => println!("cache: {} (not created yet)", path.display()),
            (Some(path), Some(report)) => {
                println!("cache: {}", path.display());
                println!("records: {}", report.loaded);
                println!("unreadable lines: {}", report.skipped);
            }
        },
        Format::Json => {
            let value = match (path, report) {
                (None, _) => serde_json::json!({ "path": null }),
                (Some(path), None) => serde_json::json!({
                    "path": path.display().to_string(),
                    "exists": false,
                }),
                (Some(path), Some(report)) => serde_json::json!({
                    "path": path.display().to_string(),
                    "exists": true,
                    "records": report.loaded,
                    "unreadable": report.skipped,
                }),
            };
            println!("{value}");
        }
        Format::Csv => {
            println!("path,records,unreadable");
            match (path, report) {
                (None, _) => println!(",,"),
                (Some(path), None) => println!("\"{}\",0,0", path.display()),
                (Some(path), Some(report)) => println!(
                    "\"{}\",{},{}",
                    path.display(),
                    report.loaded,
                    report.skipped
                ),
            }
        }
    }
    ExitCode::SUCCESS
}
