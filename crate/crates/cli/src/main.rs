mod analyze;
mod construct;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use sylowlab_core::checks::{run_suites, GroupSelection, Suite, SuiteConfig};
use sylowlab_core::groupfile::GroupFile;
use sylowlab_core::{catalog, FiniteGroup, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    name = "sylowlab",
    version,
    about = "Exact p-element, Sylow and subnormalizer computations"
)]
struct Cli {
    /// Enumeration cap: groups larger than this are rejected.
    #[arg(long, global = true, env = "SYLOWLAB_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sylow statistics of one group.
    Analyze(AnalyzeArgs),
    /// Run check suites and report every check.
    Verify(VerifyArgs),
    /// Build a member of the extremal family G_n and write its group file.
    ConstructGn(construct::ConstructArgs),
    /// Run every suite over the catalog and summarize per group and prime.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// `catalog:NAME` or `file:PATH`.
    #[arg(long)]
    group: String,
    /// Only this prime; default is every prime dividing |G|.
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    /// Write the reports as a JSON array.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write a summary CSV (check_id, group, p, status).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable or comma separated).
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    /// Groups to check (`catalog:NAME` or `file:PATH`); default is the catalog.
    #[arg(long)]
    group: Vec<String>,
    #[arg(long)]
    prime: Option<u64>,
    /// Skip groups of larger order.
    #[arg(long)]
    max_order: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    max_order: Option<u64>,
    #[command(flatten)]
    output: Output,
}

/// Exit code for usage and load errors.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.cap == 0 {
        eprintln!("error: --cap must be positive");
        return ExitCode::from(USAGE);
    }
    let outcome = match cli.command {
        Command::Analyze(args) => analyze::run(&args.group, args.prime, args.json.as_deref(), cli.cap),
        Command::Verify(args) => verify(args, cli.cap),
        Command::ConstructGn(args) => construct::run(&args, cli.cap),
        Command::Sweep(args) => sweep(args, cli.cap),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

/// Loads `catalog:NAME` or `file:PATH`; a bare name is a catalog name.
pub fn load_group(source: &str, cap: usize) -> Result<FiniteGroup> {
    if let Some(path) = source.strip_prefix("file:") {
        let file = GroupFile::read(path).with_context(|| format!("load: reading group file {path}"))?;
        return file
            .to_group(cap)
            .with_context(|| format!("load: building group from {path}"));
    }
    let name = source.strip_prefix("catalog:").unwrap_or(source);
    catalog::get_with_cap(name, cap).with_context(|| format!("load: catalog group {name}"))
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>> {
    names
        .iter()
        .map(|n| n.trim().parse::<Suite>().map_err(|_| anyhow!("unknown suite {n:?}")))
        .collect()
}

fn verify(args: VerifyArgs, cap: usize) -> Result<u8> {
    let suites = parse_suites(&args.suite)?;
    let groups = if args.group.is_empty() {
        GroupSelection::Catalog
    } else {
        GroupSelection::Groups(args.group.iter().map(|s| load_group(s, cap)).collect::<Result<_>>()?)
    };
    let config = SuiteConfig {
        groups,
        prime: args.prime,
        max_order: args.max_order,
        cap,
        ..SuiteConfig::default()
    };
    let reports = run_suites(&suites, &config).context("verify")?;
    render::write_outputs(&reports, args.output.json.as_deref(), args.output.csv.as_deref())?;
    print!("{}", render::report_table(&reports));
    Ok(render::exit_code(&reports))
}

fn sweep(args: SweepArgs, cap: usize) -> Result<u8> {
    let config = SuiteConfig {
        prime: args.prime,
        max_order: args.max_order,
        cap,
        ..SuiteConfig::default()
    };
    let reports = run_suites(&[Suite::All], &config).context("sweep")?;
    render::write_outputs(&reports, args.output.json.as_deref(), args.output.csv.as_deref())?;
    print!("{}", render::sweep_table(&reports));
    Ok(render::exit_code(&reports))
}
