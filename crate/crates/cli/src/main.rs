use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zipfkit_cli::{run_analyze, run_monkey, InputKind, ModelKind, RunConfig, Variant};
use zipfkit_core::corpus::{CorpusConfig, IllegiblePolicy};
use zipfkit_core::fitting::{Method, PoolingPolicy};
use zipfkit_core::nullmodel::MonkeyConfig;

#[derive(Parser)]
#[command(name = "zipfkit", version, about = "Rank-frequency analysis and Zipf fits for small corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit rank-frequency models to corpus files or rank tables.
    Analyze(AnalyzeArgs),
    /// Generate a random-typing text and write its diagnostics.
    Monkey(MonkeyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Corpus,
    RankTable,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Normal,
    Bm,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Truncated,
    Power,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Mle,
    MinChisq,
}

#[derive(Clone, Copy, ValueEnum)]
enum IllegibleArg {
    Distinct,
    Merged,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "input", required = true, num_args = 1..)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "corpus")]
    kind: KindArg,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "normal,bm")]
    variants: Vec<VariantArg>,
    #[arg(long = "model", value_enum, value_delimiter = ',', default_value = "truncated")]
    models: Vec<ModelArg>,
    #[arg(long, value_enum, default_value = "min-chisq")]
    method: MethodArg,
    /// Suffix rule file (pattern<TAB>segments); defaults to the shipped table.
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Spelling normalization file (variant<TAB>canonical).
    #[arg(long)]
    norm: Option<PathBuf>,
    #[arg(long, default_value = ":")]
    separator: String,
    #[arg(long, default_value = "?")]
    illegible_marker: String,
    #[arg(long, value_enum, default_value = "distinct")]
    illegible: IllegibleArg,
    /// Minimum expected count per pooled class.
    #[arg(long, default_value_t = 1.0)]
    pool_min: f64,
    /// Truncation point for the truncated zeta (raised to V when smaller).
    #[arg(long)]
    truncation: Option<usize>,
    /// Decimal places for a, C, X2 and p.
    #[arg(long, default_value_t = 2)]
    precision: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct MonkeyArgs {
    #[arg(long, default_value_t = 26)]
    alphabet: usize,
    #[arg(long, default_value_t = 0.18)]
    space_prob: f64,
    #[arg(long, default_value_t = 1_000_000)]
    chars: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Rank table of a real text to compare against.
    #[arg(long)]
    compare: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

fn analyze_config(args: AnalyzeArgs) -> zipfkit_core::Result<RunConfig> {
    let policy = match args.illegible {
        IllegibleArg::Distinct => IllegiblePolicy::Distinct,
        IllegibleArg::Merged => IllegiblePolicy::Merged,
    };
    let mut cfg = RunConfig::new(args.inputs, args.out);
    cfg.input_kind = match args.kind {
        KindArg::Corpus => InputKind::Corpus,
        KindArg::RankTable => InputKind::RankTable,
    };
    cfg.variants = args
        .variants
        .iter()
        .map(|v| match v {
            VariantArg::Normal => Variant::Normal,
            VariantArg::Bm => Variant::Bm,
        })
        .collect::<BTreeSet<_>>();
    cfg.models = args
        .models
        .iter()
        .map(|m| match m {
            ModelArg::Truncated => ModelKind::TruncatedZeta,
            ModelArg::Power => ModelKind::PowerLaw,
        })
        .collect();
    cfg.method = match args.method {
        MethodArg::Mle => Method::Mle,
        MethodArg::MinChisq => Method::MinChiSq,
    };
    cfg.rule_file = args.rules;
    cfg.norm_file = args.norm;
    cfg.pooling = PoolingPolicy::new(args.pool_min)?;
    cfg.truncation = args.truncation;
    cfg.corpus_cfg = CorpusConfig::new(args.separator, args.illegible_marker, policy)?;
    cfg.precision = args.precision;
    Ok(cfg)
}

fn analyze(args: AnalyzeArgs) -> ExitCode {
    let report = match analyze_config(args).and_then(|cfg| run_analyze(&cfg)) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for (id, variant, model, reason) in &report.skipped_fits {
        eprintln!("warning: {id} ({variant}, {model}) not fitted: {reason}");
    }
    for failure in &report.failures {
        eprintln!("error: {}: {}", failure.input.display(), failure.error);
    }
    ExitCode::from(report.exit_code() as u8)
}

fn monkey(args: MonkeyArgs) -> ExitCode {
    let result = MonkeyConfig::new(args.alphabet, args.space_prob, args.chars, args.seed)
        .and_then(|cfg| run_monkey(&cfg, args.compare.as_deref(), &args.out));
    match result {
        Ok(report) => {
            println!(
                "{} words; rank-frequency slope {:.4} (r² {:.4}); spectrum slope {:.4} (r² {:.4})",
                report.words,
                report.rank_frequency.slope,
                report.rank_frequency.r2,
                report.spectrum.slope,
                report.spectrum.r2
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze(args) => analyze(args),
        Command::Monkey(args) => monkey(args),
    }
}
