//! Random "monkey" texts and log-log diagnostics.
//!
//! A monkey text is a stream of independent keystrokes: a space with
//! probability `p_s`, otherwise one of `m` equiprobable letters. Words are the
//! maximal runs of letters, so word lengths are geometric on 1, 2, ... with
//! mean `1/p_s`.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Each keystroke consumes one `random::<f64>()` for the
//! space test and, for letters, one `random_range(0..m)` for the letter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::Token;
use crate::error::{Error, Result};
use crate::fitting::{pearson_statistic, GoodnessOfFit, PoolingPolicy};
use crate::rankfreq::FrequencySpectrum;

const MAX_ALPHABET: usize = 0xD000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonkeyConfig {
    alphabet: usize,
    space_prob: f64,
    length: usize,
    seed: u64,
}

impl Default for MonkeyConfig {
    fn default() -> Self {
        MonkeyConfig {
            alphabet: 26,
            space_prob: 0.18,
            length: 1_000_000,
            seed: 42,
        }
    }
}

impl MonkeyConfig {
    pub fn new(alphabet: usize, space_prob: f64, length: usize, seed: u64) -> Result<Self> {
        if !(space_prob > 0.0 && space_prob < 1.0) {
            return Err(Error::Config(format!(
                "space probability must lie in (0, 1), got {space_prob}"
            )));
        }
        if alphabet == 0 || alphabet > MAX_ALPHABET {
            return Err(Error::Config(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {alphabet}"
            )));
        }
        if length == 0 {
            return Err(Error::Config("text length must be ≥ 1".into()));
        }
        Ok(MonkeyConfig {
            alphabet,
            space_prob,
            length,
            seed,
        })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn space_prob(&self) -> f64 {
        self.space_prob
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Letter `k` of the alphabet: `a`..`z`, then Latin Extended code points.
fn letter(k: usize) -> char {
    let code = if k < 26 { b'a' as usize + k } else { 0x100 + k - 26 };
    char::from_u32(code as u32).expect("alphabet stays below the surrogate range")
}

pub fn generate_monkey_text(cfg: &MonkeyConfig) -> Vec<Token> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tokens = Vec::new();
    let mut word = String::new();
    for _ in 0..cfg.length {
        if rng.random::<f64>() < cfg.space_prob {
            if !word.is_empty() {
                tokens.push(Token::word(std::mem::take(&mut word)));
            }
        } else {
            word.push(letter(rng.random_range(0..cfg.alphabet)));
        }
    }
    if !word.is_empty() {
        tokens.push(Token::word(word));
    }
    tokens
}

/// Pearson test of observed word lengths against geometric(`space_prob`) on
/// 1, 2, .... Length classes are pooled from the tail until each expects at
/// least five words; no parameters are estimated.
pub fn word_length_fit(tokens: &[Token], space_prob: f64) -> Result<GoodnessOfFit> {
    if tokens.is_empty() {
        return Err(Error::Degenerate("no words to test".into()));
    }
    let lengths: Vec<usize> = tokens.iter().map(|t| t.surface.chars().count()).collect();
    let max_len = lengths.iter().copied().max().unwrap_or(1);
    let mut observed = vec![0.0; max_len];
    for len in lengths {
        observed[len - 1] += 1.0;
    }
    let total = tokens.len() as f64;
    let q = 1.0 - space_prob;
    let mut expected: Vec<f64> = (0..max_len)
        .map(|k| total * space_prob * q.powi(k as i32))
        .collect();
    // the last class absorbs the whole tail P(L ≥ max_len) = q^(max_len-1)
    if let Some(last) = expected.last_mut() {
        *last = total * q.powi(max_len as i32 - 1);
    }
    Ok(pearson_statistic(&observed, &expected, 0, PoolingPolicy::new(5.0)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumDiagnostics {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points_used: usize,
}

/// Ordinary least squares of `ln y` on `ln x` over the points with both
/// coordinates positive.
pub fn loglog_regression(points: &[(f64, f64)]) -> Result<SpectrumDiagnostics> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = logs.len();
    if n < 2 {
        return Err(Error::Degenerate(format!(
            "log-log regression needs at least 2 positive points, got {n}"
        )));
    }
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n as f64;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in &logs {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::Degenerate(
            "log-log regression needs at least 2 distinct x values".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    Ok(SpectrumDiagnostics {
        slope,
        intercept,
        r2,
        points_used: n,
    })
}

/// Inverse-Zipf diagnostics of a real and a random text side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumComparison {
    pub real: SpectrumDiagnostics,
    pub monkey: SpectrumDiagnostics,
    pub real_spectrum: FrequencySpectrum,
    pub monkey_spectrum: FrequencySpectrum,
}

pub fn compare_spectra(real: &FrequencySpectrum, monkey: &FrequencySpectrum) -> Result<SpectrumComparison> {
    Ok(SpectrumComparison {
        real: loglog_regression(&real.loglog_points())?,
        monkey: loglog_regression(&monkey.loglog_points())?,
        real_spectrum: real.clone(),
        monkey_spectrum: monkey.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rankfreq::{count_types, RankFrequencyTable};

    #[test]
    fn config_validation() {
        assert!(MonkeyConfig::new(26, 1.2, 100, 1).is_err());
        assert!(MonkeyConfig::new(26, 0.0, 100, 1).is_err());
        assert!(MonkeyConfig::new(0, 0.5, 100, 1).is_err());
        assert!(MonkeyConfig::new(1, 0.5, 8, 7).is_ok());
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = MonkeyConfig::new(1, 0.5, 8, 7).unwrap();
        assert_eq!(generate_monkey_text(&cfg), generate_monkey_text(&cfg));
        let cfg = MonkeyConfig::new(26, 0.18, 10_000, 1).unwrap();
        let other = MonkeyConfig::new(26, 0.18, 10_000, 2).unwrap();
        assert_ne!(generate_monkey_text(&cfg), generate_monkey_text(&other));
    }

    #[test]
    fn words_are_nonempty_letter_runs() {
        let cfg = MonkeyConfig::new(40, 0.3, 20_000, 5).unwrap();
        let words = generate_monkey_text(&cfg);
        assert!(!words.is_empty());
        for w in &words {
            assert!(!w.surface.is_empty());
            assert!(!w.surface.chars().any(char::is_whitespace));
        }
    }

    #[test]
    fn mean_word_length_is_inverse_space_probability() {
        let p_s = 0.18;
        let cfg = MonkeyConfig::new(26, p_s, 1_000_000, 9).unwrap();
        let words = generate_monkey_text(&cfg);
        let n = words.len() as f64;
        let mean = words.iter().map(|w| w.surface.len() as f64).sum::<f64>() / n;
        let sigma = ((1.0 - p_s).sqrt() / p_s) / n.sqrt();
        assert!((mean - 1.0 / p_s).abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn regression_on_exact_power_law() {
        let pts: Vec<(f64, f64)> = (1..=10)
            .map(|x| {
                let x = x as f64;
                (x, (1.0 - 2.0 * x.ln()).exp())
            })
            .collect();
        let d = loglog_regression(&pts).unwrap();
        assert!((d.slope + 2.0).abs() < 1e-12);
        assert!((d.intercept - 1.0).abs() < 1e-12);
        assert!((d.r2 - 1.0).abs() < 1e-12);
        assert_eq!(d.points_used, 10);
        assert!(loglog_regression(&[(1.0, 2.0)]).is_err());
        assert!(loglog_regression(&[(2.0, 2.0), (2.0, 3.0)]).is_err());
    }

    #[test]
    fn identical_spectra_compare_equal() {
        let t = RankFrequencyTable::from_frequencies(&[10, 8, 7, 5, 3, 3, 2, 2, 1, 1, 1]).unwrap();
        let s = FrequencySpectrum::from_table(&t).unwrap();
        let cmp = compare_spectra(&s, &s).unwrap();
        assert_eq!(cmp.real, cmp.monkey);

        let single = RankFrequencyTable::from_counts(&count_types(&[Token::word("a")]));
        let one_point = FrequencySpectrum::from_table(&single).unwrap();
        assert!(compare_spectra(&s, &one_point).is_err());
    }
}
