//! Right-truncated zeta distribution: `pmf(z) = z^-a / T(n, a)` on `1..=n`.

use crate::error::{Error, Result};
use crate::rankfreq::RankFrequencyTable;

use super::gof::{pearson_gof, PoolingPolicy};
use super::optimize::{golden_section_max, scan_and_refine_min};
use super::{FitResult, FittedModel, Method, A_MAX, A_MIN};

/// `T(n, a) = Σ_{z=1..n} z^-a`, summed from the smallest term up.
pub fn truncated_zeta_normalizer(a: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("truncation rank n must be ≥ 1".into()));
    }
    Ok(normalizer(a, n))
}

fn normalizer(a: f64, n: usize) -> f64 {
    (1..=n).rev().map(|z| (z as f64).powf(-a)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedZetaModel {
    a: f64,
    n: usize,
    c: f64,
}

impl TruncatedZetaModel {
    pub fn new(a: f64, n: usize) -> Result<Self> {
        if !(a >= 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("exponent must be finite and ≥ 0, got {a}")));
        }
        let t = truncated_zeta_normalizer(a, n)?;
        Ok(TruncatedZetaModel { a, n, c: 1.0 / t })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalizing constant `1 / T(n, a)`.
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn pmf(&self, z: usize) -> Result<f64> {
        if z == 0 {
            return Err(Error::Domain("rank must be ≥ 1".into()));
        }
        Ok(self.pmf_unchecked(z))
    }

    pub(crate) fn pmf_unchecked(&self, z: usize) -> f64 {
        if z > self.n {
            0.0
        } else {
            self.c * (z as f64).powf(-self.a)
        }
    }
}

/// Sufficient statistics of the rank-frequency likelihood.
pub(crate) struct ZetaLikelihood {
    tokens: f64,
    /// Σ f_z ln z
    weighted_log_rank: f64,
    n: usize,
}

impl ZetaLikelihood {
    pub(crate) fn new(frequencies: &[u64], n: usize) -> Self {
        ZetaLikelihood {
            tokens: frequencies.iter().sum::<u64>() as f64,
            weighted_log_rank: frequencies
                .iter()
                .enumerate()
                .map(|(i, &f)| f as f64 * ((i + 1) as f64).ln())
                .sum(),
            n,
        }
    }

    /// ℓ(a) = −a Σ f_z ln z − N ln T(n, a)
    pub(crate) fn log_likelihood(&self, a: f64) -> f64 {
        -a * self.weighted_log_rank - self.tokens * normalizer(a, self.n).ln()
    }

    /// dℓ/da = −Σ f_z ln z + N Σ z^-a ln z / T(n, a)
    pub(crate) fn derivative(&self, a: f64) -> f64 {
        let (mut t, mut tl) = (0.0, 0.0);
        for z in (1..=self.n).rev() {
            let w = (z as f64).powf(-a);
            t += w;
            tl += w * (z as f64).ln();
        }
        -self.weighted_log_rank + self.tokens * tl / t
    }

    /// ℓ is concave in `a`, so the constrained maximum is at a boundary when
    /// the slope there points outward and interior otherwise.
    pub(crate) fn maximize(&self, lo: f64, hi: f64) -> f64 {
        if self.derivative(lo) <= 0.0 {
            return lo;
        }
        if self.derivative(hi) >= 0.0 {
            return hi;
        }
        golden_section_max(|a| self.log_likelihood(a), lo, hi, 1e-7)
    }
}

/// Free parameters charged against the degrees of freedom: the exponent, plus
/// the truncation point when it is read off the data as V.
fn zeta_free_params(n_from_data: bool) -> u32 {
    if n_from_data {
        2
    } else {
        1
    }
}

/// Fits the exponent of a right-truncated zeta model to `table`.
///
/// `n_override` replaces the default truncation point `n = V`; it may not be
/// smaller than V.
pub fn fit_truncated_zeta(
    table: &RankFrequencyTable,
    method: Method,
    n_override: Option<usize>,
    policy: PoolingPolicy,
) -> Result<FitResult> {
    let v = table.types();
    if v < 2 {
        return Err(Error::Degenerate(format!(
            "truncated zeta fit needs at least 2 types, got {v}"
        )));
    }
    let n = n_override.unwrap_or(v);
    if n < v {
        return Err(Error::Domain(format!(
            "truncation rank {n} is below the observed vocabulary {v}"
        )));
    }
    let free_params = zeta_free_params(n_override.is_none());
    let frequencies = table.frequencies();

    let a = match method {
        Method::Mle => ZetaLikelihood::new(&frequencies, n).maximize(A_MIN, A_MAX),
        Method::MinChiSq => {
            let x2 = |a: f64| {
                let model = FittedModel::TruncatedZeta(TruncatedZetaModel::new(a, n).expect("a in range"));
                let gof = pearson_gof(table, &model, free_params, policy);
                // a single pooled class matches any normalized model exactly
                if gof.classes < 2 {
                    f64::INFINITY
                } else {
                    gof.x2
                }
            };
            scan_and_refine_min(x2, A_MIN, A_MAX, 0.01, 1e-7).0
        }
    };
    let model = FittedModel::TruncatedZeta(TruncatedZetaModel::new(a, n)?);
    let gof = pearson_gof(table, &model, free_params, policy);
    Ok(FitResult::new(model, gof, method))
}
