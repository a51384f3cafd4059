//! Batch analysis driver behind the `zipfkit` binary.
//!
//! `analyze` turns corpus files or run-length rank tables into a
//! `summary.tsv` with one row per text × variant × model, plus one plot-data
//! file per row. `monkey` generates a random text and writes its rank and
//! spectrum data, optionally side by side with a real text.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use zipfkit_core::corpus::{apply_illegible_policy, load_text, normalize, CorpusConfig, NormalizationTable};
use zipfkit_core::fitting::{fit_power_law, fit_truncated_zeta, FitResult, Method, PoolingPolicy};
use zipfkit_core::morphology::RuleSet;
use zipfkit_core::nullmodel::{
    compare_spectra, generate_monkey_text, loglog_regression, word_length_fit, MonkeyConfig, SpectrumDiagnostics,
};
use zipfkit_core::rankfreq::{count_types, FrequencySpectrum, RankFrequencyTable};
use zipfkit_core::{Error, Result};

pub const SUMMARY_FILE: &str = "summary.tsv";
pub const SUMMARY_HEADER: &str = "text_id\tvariant\tN\tV\tmodel\tmethod\ta\tC\tX2\tdf\tp";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Corpus,
    RankTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Normal,
    Bm,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Normal => "normal",
            Variant::Bm => "bm",
        })
    }
}

/// Summary rows list the plain power law before the right-truncated zeta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelKind {
    PowerLaw,
    TruncatedZeta,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::PowerLaw => "power",
            ModelKind::TruncatedZeta => "truncated",
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub input_kind: InputKind,
    pub variants: BTreeSet<Variant>,
    pub models: BTreeSet<ModelKind>,
    pub method: Method,
    pub rule_file: Option<PathBuf>,
    pub norm_file: Option<PathBuf>,
    pub pooling: PoolingPolicy,
    pub truncation: Option<usize>,
    pub output_dir: PathBuf,
    pub corpus_cfg: CorpusConfig,
    /// Decimal places for a, C, X2 and p in the summary.
    pub precision: usize,
}

impl RunConfig {
    pub fn new(inputs: Vec<PathBuf>, output_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            inputs,
            input_kind: InputKind::Corpus,
            variants: [Variant::Normal, Variant::Bm].into(),
            models: [ModelKind::TruncatedZeta].into(),
            method: Method::MinChiSq,
            rule_file: None,
            norm_file: None,
            pooling: PoolingPolicy::default(),
            truncation: None,
            output_dir: output_dir.into(),
            corpus_cfg: CorpusConfig::default(),
            precision: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub text_id: String,
    pub variant: Variant,
    pub tokens: u64,
    pub types: usize,
    pub model: ModelKind,
    pub method: Method,
    /// `None` when the model could not be fitted (too few types).
    pub fit: Option<FitResult>,
}

impl SummaryRow {
    pub fn to_tsv(&self, precision: usize) -> String {
        let na = || "NA".to_string();
        let num = |x: f64| format!("{x:.precision$}");
        let (a, c, x2, df, p) = match &self.fit {
            Some(fit) => (
                num(fit.model.a()),
                num(fit.model.c()),
                num(fit.x2),
                fit.df.map_or_else(na, |d| d.to_string()),
                fit.p.map_or_else(na, num),
            ),
            None => (na(), na(), na(), na(), na()),
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{a}\t{c}\t{x2}\t{df}\t{p}",
            self.text_id, self.variant, self.tokens, self.types, self.model, self.method
        )
    }
}

#[derive(Debug)]
pub struct InputFailure {
    pub input: PathBuf,
    pub error: Error,
}

#[derive(Debug, Default)]
pub struct AnalyzeReport {
    pub rows: Vec<SummaryRow>,
    pub failures: Vec<InputFailure>,
    /// Models that could not be fitted, as `(text_id, variant, model, reason)`.
    pub skipped_fits: Vec<(String, Variant, ModelKind, String)>,
}

impl AnalyzeReport {
    /// 0 when every input was analyzed, 1 on partial failure.
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

/// Writes `rank<TAB>observed<TAB>expected`, one row per rank.
pub fn emit_plot_data(table: &RankFrequencyTable, fit: Option<&FitResult>, path: &Path) -> Result<()> {
    if table.is_empty() {
        return Err(Error::Degenerate("plot data needs a nonempty table".into()));
    }
    let tokens = table.tokens() as f64;
    let mut out = String::from("rank\tobserved\texpected\n");
    for e in table.entries() {
        let expected = fit.map_or_else(|| "NA".to_string(), |f| format!("{:.6}", f.model.expected(e.rank, tokens)));
        let _ = writeln!(out, "{}\t{}\t{expected}", e.rank, e.frequency);
    }
    write_file(path, &out)
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Splits a rank-table file stem into text id and variant: a trailing `-BM`
/// or `_BM` (any case) marks the bound-morpheme variant.
pub fn rank_table_identity(path: &Path) -> (String, Variant) {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let lower = stem.to_ascii_lowercase();
    for suffix in ["-bm", "_bm"] {
        if lower.ends_with(suffix) && stem.len() > suffix.len() {
            return (stem[..stem.len() - suffix.len()].to_string(), Variant::Bm);
        }
    }
    (stem, Variant::Normal)
}

fn plot_file_name(text_id: &str, variant: Variant, model: ModelKind) -> String {
    let id: String = text_id
        .chars()
        .map(|c| if c.is_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect();
    format!("plot_{id}_{variant}_{model}.tsv")
}

struct Prepared {
    rules: RuleSet,
    norm: Option<NormalizationTable>,
}

fn prepare(cfg: &RunConfig) -> Result<Prepared> {
    if cfg.inputs.is_empty() {
        return Err(Error::Config("no inputs given".into()));
    }
    if cfg.variants.is_empty() {
        return Err(Error::Config("no variants selected".into()));
    }
    if cfg.models.is_empty() {
        return Err(Error::Config("no models selected".into()));
    }
    let rules = match &cfg.rule_file {
        Some(path) => RuleSet::load(path)?,
        None => RuleSet::default_bound_morphemes(),
    };
    let norm = cfg.norm_file.as_ref().map(NormalizationTable::load).transpose()?;
    fs::create_dir_all(&cfg.output_dir).map_err(|source| Error::Io {
        path: cfg.output_dir.clone(),
        source,
    })?;
    Ok(Prepared { rules, norm })
}

/// Rank tables for one input, in output order.
fn tables_for_input(cfg: &RunConfig, prepared: &Prepared, input: &Path) -> Result<Vec<(String, Variant, RankFrequencyTable)>> {
    match cfg.input_kind {
        InputKind::RankTable => {
            let (id, variant) = rank_table_identity(input);
            if !cfg.variants.contains(&variant) {
                return Ok(Vec::new());
            }
            Ok(vec![(id, variant, RankFrequencyTable::load(input)?)])
        }
        InputKind::Corpus => {
            let text = load_text(input, &cfg.corpus_cfg)?;
            let tokens = match &prepared.norm {
                Some(table) => normalize(&text.tokens, table),
                None => text.tokens.clone(),
            };
            let tokens = apply_illegible_policy(&tokens, &cfg.corpus_cfg);
            Ok(cfg
                .variants
                .iter()
                .map(|&variant| {
                    let stream = match variant {
                        Variant::Normal => count_types(&tokens),
                        Variant::Bm => count_types(&prepared.rules.segment_text(&tokens)),
                    };
                    (text.id.clone(), variant, RankFrequencyTable::from_counts(&stream))
                })
                .collect())
        }
    }
}

fn fit_model(cfg: &RunConfig, table: &RankFrequencyTable, model: ModelKind) -> Result<FitResult> {
    match model {
        ModelKind::PowerLaw => fit_power_law(table, cfg.method, cfg.pooling),
        ModelKind::TruncatedZeta => {
            let n = cfg.truncation.map(|n| n.max(table.types()));
            fit_truncated_zeta(table, cfg.method, n, cfg.pooling)
        }
    }
}

/// Runs the full pipeline and writes `summary.tsv` plus plot files into
/// `cfg.output_dir`. Configuration problems (no inputs, bad rule or
/// normalization file, unwritable output directory) are returned as `Err`;
/// unreadable inputs are collected in the report and the rest still run.
pub fn run_analyze(cfg: &RunConfig) -> Result<AnalyzeReport> {
    let prepared = prepare(cfg)?;
    let mut report = AnalyzeReport::default();
    for input in &cfg.inputs {
        let tables = match tables_for_input(cfg, &prepared, input) {
            Ok(t) => t,
            Err(error) => {
                report.failures.push(InputFailure {
                    input: input.clone(),
                    error,
                });
                continue;
            }
        };
        for (text_id, variant, table) in tables {
            for &model in &cfg.models {
                let fit = match fit_model(cfg, &table, model) {
                    Ok(fit) => Some(fit),
                    Err(e) => {
                        report.skipped_fits.push((text_id.clone(), variant, model, e.to_string()));
                        None
                    }
                };
                if !table.is_empty() {
                    let path = cfg.output_dir.join(plot_file_name(&text_id, variant, model));
                    emit_plot_data(&table, fit.as_ref(), &path)?;
                }
                report.rows.push(SummaryRow {
                    text_id: text_id.clone(),
                    variant,
                    tokens: table.tokens(),
                    types: table.types(),
                    model,
                    method: cfg.method,
                    fit,
                });
            }
        }
    }
    let mut summary = String::from(SUMMARY_HEADER);
    summary.push('\n');
    for row in &report.rows {
        summary.push_str(&row.to_tsv(cfg.precision));
        summary.push('\n');
    }
    write_file(&cfg.output_dir.join(SUMMARY_FILE), &summary)?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonkeyReport {
    pub words: usize,
    pub rank_frequency: SpectrumDiagnostics,
    pub spectrum: SpectrumDiagnostics,
    pub files: Vec<PathBuf>,
}

fn diagnostics_row(label: &str, d: &SpectrumDiagnostics) -> String {
    format!(
        "{label}\t{:.6}\t{:.6}\t{:.6}\t{}\n",
        d.slope, d.intercept, d.r2, d.points_used
    )
}

const DIAGNOSTICS_HEADER: &str = "series\tslope\tintercept\tr2\tpoints\n";

/// Generates a monkey text and writes `monkey_rank.tsv`,
/// `monkey_spectrum.tsv`, `monkey_diagnostics.tsv`, `monkey_word_length.tsv`
/// and, with `compare_to`, `comparison.tsv`.
pub fn run_monkey(cfg: &MonkeyConfig, compare_to: Option<&Path>, output_dir: &Path) -> Result<MonkeyReport> {
    // load the comparison first so a bad path fails before any output
    let real = compare_to
        .map(|p| -> Result<_> {
            let table = RankFrequencyTable::load(p)?;
            Ok((rank_table_identity(p).0, FrequencySpectrum::from_table(&table)?))
        })
        .transpose()?;
    fs::create_dir_all(output_dir).map_err(|source| Error::Io {
        path: output_dir.to_path_buf(),
        source,
    })?;

    let words = generate_monkey_text(cfg);
    let table = RankFrequencyTable::from_counts(&count_types(&words));
    let spectrum = FrequencySpectrum::from_table(&table)?;
    let rank_diag = loglog_regression(&table.loglog_points())?;
    let spectrum_diag = loglog_regression(&spectrum.loglog_points())?;
    let lengths = word_length_fit(&words, cfg.space_prob())?;

    let mut files = Vec::new();
    let mut write = |name: &str, content: String| -> Result<()> {
        let path = output_dir.join(name);
        write_file(&path, &content)?;
        files.push(path);
        Ok(())
    };

    let mut rank = String::from("rank\tfrequency\n");
    for e in table.entries() {
        let _ = writeln!(rank, "{}\t{}", e.rank, e.frequency);
    }
    write("monkey_rank.tsv", rank)?;

    let mut spec = String::from("frequency\ttypes\tprobability\n");
    for (f, v) in spectrum.iter() {
        let _ = writeln!(spec, "{f}\t{v}\t{:.9}", spectrum.probability(f));
    }
    write("monkey_spectrum.tsv", spec)?;

    let mut diag = String::from(DIAGNOSTICS_HEADER);
    diag.push_str(&diagnostics_row("rank_frequency", &rank_diag));
    diag.push_str(&diagnostics_row("spectrum", &spectrum_diag));
    write("monkey_diagnostics.tsv", diag)?;

    let mean_len = words.iter().map(|w| w.surface.chars().count()).sum::<usize>() as f64 / words.len() as f64;
    let na = || "NA".to_string();
    write(
        "monkey_word_length.tsv",
        format!(
            "words\tmean_length\tX2\tdf\tp\n{}\t{mean_len:.6}\t{:.6}\t{}\t{}\n",
            words.len(),
            lengths.x2,
            lengths.df.map_or_else(na, |d| d.to_string()),
            lengths.p.map_or_else(na, |p| format!("{p:.6}")),
        ),
    )?;

    if let Some((id, real_spectrum)) = real {
        let cmp = compare_spectra(&real_spectrum, &spectrum)?;
        let mut out = String::from(DIAGNOSTICS_HEADER);
        out.push_str(&diagnostics_row(&format!("real:{id}"), &cmp.real));
        out.push_str(&diagnostics_row("monkey", &cmp.monkey));
        write("comparison.tsv", out)?;
    }

    Ok(MonkeyReport {
        words: words.len(),
        rank_frequency: rank_diag,
        spectrum: spectrum_diag,
        files,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_table_names() {
        assert_eq!(rank_table_identity(Path::new("x/REM1003.tsv")), ("REM1003".into(), Variant::Normal));
        assert_eq!(rank_table_identity(Path::new("REM1003-BM.tsv")), ("REM1003".into(), Variant::Bm));
        assert_eq!(rank_table_identity(Path::new("rem_bm.txt")), ("rem".into(), Variant::Bm));
        assert_eq!(rank_table_identity(Path::new("-BM.tsv")), ("-BM".into(), Variant::Normal));
    }

    #[test]
    fn plot_names_are_filesystem_safe() {
        assert_eq!(
            plot_file_name("REM 1044 (A-D)", Variant::Bm, ModelKind::TruncatedZeta),
            "plot_REM_1044__A-D__bm_truncated.tsv"
        );
    }

    #[test]
    fn unfitted_rows_print_na() {
        let row = SummaryRow {
            text_id: "REM0297".into(),
            variant: Variant::Normal,
            tokens: 2,
            types: 1,
            model: ModelKind::TruncatedZeta,
            method: Method::Mle,
            fit: None,
        };
        assert_eq!(row.to_tsv(2), "REM0297\tnormal\t2\t1\ttruncated\tmle\tNA\tNA\tNA\tNA\tNA");
    }
}
