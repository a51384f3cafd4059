//! Browser bindings for the demo page in `www/`.
//!
//! Three operations are exported: fitting a model to pasted text or a pasted
//! rank table, showing how the bound-morpheme rules split a text, and
//! generating a monkey text. Each has a plain Rust form returning
//! `Result<_, String>` (usable and testable off the browser) and a thin
//! `*_js` wrapper that turns the error into a JavaScript exception.

use wasm_bindgen::prelude::*;
use zipfkit_core::corpus::{tokenize, CorpusConfig};
use zipfkit_core::fitting::{fit_power_law, fit_truncated_zeta, FitResult, Method, PoolingPolicy};
use zipfkit_core::morphology::RuleSet;
use zipfkit_core::nullmodel::{generate_monkey_text, loglog_regression, MonkeyConfig};
use zipfkit_core::rankfreq::{count_types, RankFrequencyTable};

/// A fitted model together with the observed and expected curves.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Analysis {
    table: RankFrequencyTable,
    fit: FitResult,
}

#[wasm_bindgen]
impl Analysis {
    #[wasm_bindgen(getter)]
    pub fn tokens(&self) -> f64 {
        self.table.tokens() as f64
    }

    #[wasm_bindgen(getter)]
    pub fn types(&self) -> usize {
        self.table.types()
    }

    #[wasm_bindgen(getter)]
    pub fn model(&self) -> String {
        self.fit.model.name().to_string()
    }

    #[wasm_bindgen(getter)]
    pub fn a(&self) -> f64 {
        self.fit.model.a()
    }

    #[wasm_bindgen(getter)]
    pub fn c(&self) -> f64 {
        self.fit.model.c()
    }

    #[wasm_bindgen(getter)]
    pub fn x2(&self) -> f64 {
        self.fit.x2
    }

    #[wasm_bindgen(getter)]
    pub fn df(&self) -> Option<u32> {
        self.fit.df
    }

    #[wasm_bindgen(getter)]
    pub fn p(&self) -> Option<f64> {
        self.fit.p
    }

    /// Observed frequency at ranks 1..=V.
    pub fn observed(&self) -> Vec<f64> {
        self.table.frequencies().into_iter().map(|f| f as f64).collect()
    }

    /// Expected frequency at ranks 1..=V under the fitted model.
    pub fn expected(&self) -> Vec<f64> {
        let n = self.table.tokens() as f64;
        (1..=self.table.types()).map(|z| self.fit.model.expected(z, n)).collect()
    }

    /// Surface forms in rank order.
    pub fn surfaces(&self) -> Vec<String> {
        self.table.entries().iter().map(|e| e.surface.clone()).collect()
    }
}

fn parse_method(method: &str) -> Result<Method, String> {
    method.parse().map_err(|e: zipfkit_core::Error| e.to_string())
}

fn corpus_table(text: &str, bound_morphemes: bool) -> RankFrequencyTable {
    let tokens = tokenize(text, &CorpusConfig::default());
    let tokens = if bound_morphemes {
        RuleSet::default_bound_morphemes().segment_text(&tokens)
    } else {
        tokens
    };
    RankFrequencyTable::from_counts(&count_types(&tokens))
}

/// Fits `model` ("truncated" or "power") to `input`.
///
/// `kind` is "corpus" for running text (`:` or whitespace separated) or
/// "rank-table" for run-length lines `rank_start<TAB>rank_end<TAB>frequency`.
/// `bound_morphemes` only applies to corpus input.
pub fn analyze(input: &str, kind: &str, bound_morphemes: bool, model: &str, method: &str) -> Result<Analysis, String> {
    let method = parse_method(method)?;
    let table = match kind {
        "corpus" => corpus_table(input, bound_morphemes),
        "rank-table" => RankFrequencyTable::parse(input).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown input kind '{other}'")),
    };
    let policy = PoolingPolicy::default();
    let fit = match model {
        "truncated" => fit_truncated_zeta(&table, method, None, policy),
        "power" => fit_power_law(&table, method, policy),
        other => return Err(format!("unknown model '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    Ok(Analysis { table, fit })
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(input: &str, kind: &str, bound_morphemes: bool, model: &str, method: &str) -> Result<Analysis, JsError> {
    analyze(input, kind, bound_morphemes, model, method).map_err(|e| JsError::new(&e))
}

/// One line per token: the token, a tab, and its segments joined by " + ".
pub fn segment(text: &str) -> String {
    let rules = RuleSet::default_bound_morphemes();
    tokenize(text, &CorpusConfig::default())
        .iter()
        .map(|t| format!("{}\t{}\n", t.surface, rules.segment_token(t).join(" + ")))
        .collect()
}

#[wasm_bindgen(js_name = segment)]
pub fn segment_js(text: &str) -> String {
    segment(text)
}

/// Rank-frequency curve of a monkey text with its log-log regression.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct MonkeyRun {
    frequencies: Vec<f64>,
    words: usize,
    slope: f64,
    r2: f64,
}

#[wasm_bindgen]
impl MonkeyRun {
    #[wasm_bindgen(getter)]
    pub fn words(&self) -> usize {
        self.words
    }

    #[wasm_bindgen(getter)]
    pub fn types(&self) -> usize {
        self.frequencies.len()
    }

    #[wasm_bindgen(getter)]
    pub fn slope(&self) -> f64 {
        self.slope
    }

    #[wasm_bindgen(getter)]
    pub fn r2(&self) -> f64 {
        self.r2
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.frequencies.clone()
    }
}

pub fn monkey(alphabet: usize, space_prob: f64, chars: usize, seed: u64) -> Result<MonkeyRun, String> {
    let cfg = MonkeyConfig::new(alphabet, space_prob, chars, seed).map_err(|e| e.to_string())?;
    let words = generate_monkey_text(&cfg);
    let table = RankFrequencyTable::from_counts(&count_types(&words));
    let fit = loglog_regression(&table.loglog_points()).map_err(|e| e.to_string())?;
    Ok(MonkeyRun {
        frequencies: table.frequencies().into_iter().map(|f| f as f64).collect(),
        words: words.len(),
        slope: fit.slope,
        r2: fit.r2,
    })
}

#[wasm_bindgen(js_name = monkey)]
pub fn monkey_js(alphabet: usize, space_prob: f64, chars: usize, seed: u64) -> Result<MonkeyRun, JsError> {
    monkey(alphabet, space_prob, chars, seed).map_err(|e| JsError::new(&e))
}
