//! Pearson chi-square goodness of fit with tail pooling.

use statrs::function::gamma::checked_gamma_ur;

use crate::error::{Error, Result};
use crate::rankfreq::RankFrequencyTable;

use super::FittedModel;

/// Minimum expected count per class before the statistic is computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoolingPolicy {
    min_expected: f64,
}

impl Default for PoolingPolicy {
    fn default() -> Self {
        PoolingPolicy { min_expected: 1.0 }
    }
}

impl PoolingPolicy {
    pub fn new(min_expected: f64) -> Result<Self> {
        if !(min_expected > 0.0 && min_expected.is_finite()) {
            return Err(Error::Config(format!(
                "pooling threshold must be positive and finite, got {min_expected}"
            )));
        }
        Ok(PoolingPolicy { min_expected })
    }

    pub fn min_expected(&self) -> f64 {
        self.min_expected
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoodnessOfFit {
    pub x2: f64,
    /// `None` when classes − 1 − free parameters < 1.
    pub df: Option<u32>,
    /// Survival probability; `None` whenever `df` is.
    pub p: Option<f64>,
    pub classes: usize,
}

/// Merges adjacent classes from the tail upward until each pooled class has
/// expected count ≥ the threshold. A short remainder at the head is folded
/// into the neighbouring class. Returns `(observed, expected)` per class in
/// rank order.
pub fn pool_classes(observed: &[f64], expected: &[f64], policy: PoolingPolicy) -> Vec<(f64, f64)> {
    assert_eq!(observed.len(), expected.len(), "observed/expected length mismatch");
    // relative slack so that e.g. 30 * (1/30) counts as 1.0
    let threshold = policy.min_expected * (1.0 - 1e-9);
    let mut classes: Vec<(f64, f64)> = Vec::new();
    let (mut obs, mut exp) = (0.0, 0.0);
    let mut pending = false;
    for (&o, &e) in observed.iter().zip(expected).rev() {
        obs += o;
        exp += e;
        pending = true;
        if exp >= threshold {
            classes.push((obs, exp));
            obs = 0.0;
            exp = 0.0;
            pending = false;
        }
    }
    if pending {
        match classes.last_mut() {
            Some(last) => {
                last.0 += obs;
                last.1 += exp;
            }
            None => classes.push((obs, exp)),
        }
    }
    classes.reverse();
    classes
}

/// Pearson X² over pooled classes with `df = classes − 1 − free_params`.
pub fn pearson_statistic(
    observed: &[f64],
    expected: &[f64],
    free_params: u32,
    policy: PoolingPolicy,
) -> GoodnessOfFit {
    let classes = pool_classes(observed, expected, policy);
    let x2 = classes
        .iter()
        .map(|&(o, e)| if e > 0.0 { (o - e).powi(2) / e } else if o > 0.0 { f64::INFINITY } else { 0.0 })
        .sum::<f64>();
    let df = (classes.len() as i64 - 1 - free_params as i64).max(0) as u32;
    let df = (df >= 1).then_some(df);
    let p = df.map(|k| chi_square_sf(x2, k).expect("x2 is nonnegative"));
    GoodnessOfFit {
        x2,
        df,
        p,
        classes: classes.len(),
    }
}

/// Goodness of fit of `model` to the observed rank frequencies.
///
/// Expected counts cover ranks 1..=max(V, n); ranks past V have observed 0.
pub fn pearson_gof(
    table: &RankFrequencyTable,
    model: &FittedModel,
    free_params: u32,
    policy: PoolingPolicy,
) -> GoodnessOfFit {
    let ranks = match model {
        FittedModel::TruncatedZeta(m) => table.types().max(m.n()),
        FittedModel::PowerLaw(_) => table.types(),
    };
    let n_tokens = table.tokens() as f64;
    let mut observed: Vec<f64> = table.frequencies().into_iter().map(|f| f as f64).collect();
    observed.resize(ranks, 0.0);
    let expected: Vec<f64> = (1..=ranks).map(|z| model.expected(z, n_tokens)).collect();
    pearson_statistic(&observed, &expected, free_params, policy)
}

/// Upper-tail probability of the chi-square distribution, Q(df/2, x/2).
pub fn chi_square_sf(x: f64, df: u32) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!("chi-square statistic must be ≥ 0, got {x}")));
    }
    if df == 0 {
        return Err(Error::Domain("chi-square degrees of freedom must be ≥ 1".into()));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    let q = checked_gamma_ur(df as f64 / 2.0, x / 2.0)
        .map_err(|e| Error::Domain(format!("incomplete gamma: {e}")))?;
    Ok(q.clamp(0.0, 1.0))
}
