use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use playsim::harness::{
    emit_reports, run_experiment, BudgetSpec, Domain, ExperimentConfig, Overrides, Profile, ReportFormat,
    ReportKind, ReportOptions,
};
use playsim::metrics::{Grouping, Projection, DEFAULT_MIN_SUPPORT};
use playsim::trace::{read_traces, write_traces};

#[derive(Parser)]
#[command(name = "playsim", version, about = "Simulated playtesting with budget-limited MCTS agents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Scrabble,
    Cardonomicon,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Full,
    Desk,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Skill,
    Pooled,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProjectionArg {
    Label,
    WordLength,
    Action,
}

#[derive(Subcommand)]
enum Command {
    /// Play agent pairings and write JSONL playtraces.
    Simulate(SimulateArgs),
    /// Compute reports from a trace file.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    domain: Option<DomainArg>,
    /// TOML experiment config.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "traces.jsonl")]
    out: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    games: Option<i64>,
    /// Player 0 budget: weak, moderate, strong or a rollout count.
    #[arg(long)]
    p0: Option<String>,
    /// Player 1 budget: weak, moderate, strong or a rollout count.
    #[arg(long)]
    p1: Option<String>,
    #[arg(long, value_enum)]
    profile: Option<ProfileArg>,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    traces: PathBuf,
    /// Comma-separated: summaries, atoms, chains-combo, chains-counter, action-space, all.
    #[arg(long, default_value = "all")]
    report: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_MIN_SUPPORT)]
    min_support: f64,
    #[arg(long, default_value = "reports")]
    out_dir: PathBuf,
    #[arg(long, value_enum, default_value = "skill")]
    group: GroupArg,
    /// Key for the atoms report.
    #[arg(long, value_enum, default_value = "label")]
    projection: ProjectionArg,
}

fn budget(s: &str) -> BudgetSpec {
    s.parse().expect("budget parsing is infallible")
}

fn simulate(args: SimulateArgs) -> Result<()> {
    let SimulateArgs { domain, config, out, seed, games, p0, p1, profile, threads } = args;
    let pairing = match (p0, p1) {
        (Some(a), Some(b)) => Some((budget(&a), budget(&b))),
        (None, None) => None,
        _ => bail!("give both --p0 and --p1, or neither"),
    };
    let overrides = Overrides {
        domain: domain.map(|d| match d {
            DomainArg::Scrabble => Domain::Scrabble,
            DomainArg::Cardonomicon => Domain::Cardonomicon,
        }),
        profile: profile.map(|p| match p {
            ProfileArg::Full => Profile::Full,
            ProfileArg::Desk => Profile::Desk,
        }),
        master_seed: seed,
        games_per_pairing: games,
        pairing,
    };
    let cfg = match &config {
        Some(path) => ExperimentConfig::load(path, &overrides)?,
        None if overrides.domain.is_some() => ExperimentConfig::defaults(&overrides)?,
        None => bail!("give --domain or --config"),
    };
    if threads == Some(0) {
        bail!("--threads must be at least 1");
    }
    eprintln!(
        "{}: {} pairings x {} games, seed {}",
        cfg.domain,
        cfg.pairings.len(),
        cfg.games_per_pairing,
        cfg.master_seed
    );
    let traces = run_experiment(&cfg, threads)?;
    let file = File::create(&out).with_context(|| format!("cannot create {}", out.display()))?;
    write_traces(&traces, BufWriter::new(file))?;
    eprintln!("wrote {} traces to {}", traces.len(), out.display());
    Ok(())
}

fn analyze(args: AnalyzeArgs) -> Result<()> {
    let AnalyzeArgs { traces, report, format, min_support, out_dir, group, projection } = args;
    let selections = ReportKind::parse_list(&report)?;
    let file = File::open(&traces).with_context(|| format!("cannot open {}", traces.display()))?;
    let traces = read_traces(BufReader::new(file))?;
    let opts = ReportOptions {
        min_support,
        grouping: match group {
            GroupArg::Skill => Grouping::BySkill,
            GroupArg::Pooled => Grouping::Pooled,
        },
        projection: match projection {
            ProjectionArg::Label => Projection::Label,
            ProjectionArg::WordLength => Projection::WordLength,
            ProjectionArg::Action => Projection::Action,
        },
    };
    let format = match format {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    };
    for path in emit_reports(&traces, &selections, format, &out_dir, &opts)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => simulate(args),
        Command::Analyze(args) => analyze(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
