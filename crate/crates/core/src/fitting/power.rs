//! Two-parameter power law `E[f_z] = N·C·z^-a` with a free amplitude.

use crate::error::{Error, Result};
use crate::nullmodel::loglog_regression;
use crate::rankfreq::RankFrequencyTable;

use super::gof::{pearson_gof, pool_classes, PoolingPolicy};
use super::optimize::{golden_section_max, scan_and_refine_min};
use super::zeta::ZetaLikelihood;
use super::{FitResult, FittedModel, Method, A_MAX, A_MIN};

const FREE_PARAMS: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawModel {
    a: f64,
    c: f64,
}

impl PowerLawModel {
    pub fn new(a: f64, c: f64) -> Result<Self> {
        if !(a >= 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("exponent must be finite and ≥ 0, got {a}")));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("amplitude must be positive, got {c}")));
        }
        Ok(PowerLawModel { a, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn expected(&self, z: usize, tokens: f64) -> f64 {
        tokens * self.c * (z as f64).powf(-self.a)
    }
}

/// For fixed `a`, the amplitude minimizing pooled X². Within a fixed pooling
/// the optimum is `C² = Σ O_k²/W_k / (N² Σ W_k)`; pooling depends on C, so
/// this alternates until the partition stops changing.
fn profile_amplitude(observed: &[f64], a: f64, tokens: f64, policy: PoolingPolicy) -> (f64, f64) {
    let weights: Vec<f64> = (1..=observed.len()).map(|z| (z as f64).powf(-a)).collect();
    let total_weight: f64 = weights.iter().sum();
    let x2_at = |c: f64| -> (f64, Vec<(f64, f64)>) {
        let expected: Vec<f64> = weights.iter().map(|w| tokens * c * w).collect();
        let classes = pool_classes(observed, &expected, policy);
        // with no more classes than parameters the statistic is trivially zero
        let x2 = if classes.len() as u32 <= FREE_PARAMS {
            f64::INFINITY
        } else {
            classes.iter().map(|&(o, e)| (o - e).powi(2) / e).sum()
        };
        (x2, classes)
    };

    let mut c = observed.iter().sum::<f64>() / (tokens * total_weight);
    let (mut best_x2, mut classes) = x2_at(c);
    let mut best_c = c;
    for _ in 0..50 {
        let scale = tokens * c;
        let ratio: f64 = classes.iter().map(|&(o, e)| o * o / (e / scale)).sum();
        let next = (ratio / total_weight).sqrt() / tokens;
        let (x2, next_classes) = x2_at(next);
        if x2 < best_x2 {
            best_x2 = x2;
            best_c = next;
        }
        let settled = (next - c).abs() <= 1e-13 * c;
        c = next;
        classes = next_classes;
        if settled {
            break;
        }
    }
    (best_c, best_x2)
}

/// Fits `(C, a)` of an unnormalized power law over ranks 1..=V.
///
/// `MinChiSq` minimizes pooled Pearson X², starting from the log-log least
/// squares slope. `Mle` maximizes the Poisson likelihood of the counts; its
/// amplitude profiles out to `1/T(V, a)`, so it shares the exponent with the
/// truncated zeta MLE at `n = V`.
pub fn fit_power_law(table: &RankFrequencyTable, method: Method, policy: PoolingPolicy) -> Result<FitResult> {
    let v = table.types();
    if v < 3 {
        return Err(Error::Degenerate(format!(
            "power-law fit has two free parameters and needs at least 3 types, got {v}"
        )));
    }
    let tokens = table.tokens() as f64;
    let frequencies = table.frequencies();
    let (a, c) = match method {
        Method::Mle => {
            let a = ZetaLikelihood::new(&frequencies, v).maximize(A_MIN, A_MAX);
            let t: f64 = (1..=v).rev().map(|z| (z as f64).powf(-a)).sum();
            (a, 1.0 / t)
        }
        Method::MinChiSq => {
            let observed: Vec<f64> = frequencies.iter().map(|&f| f as f64).collect();
            let objective = |a: f64| profile_amplitude(&observed, a, tokens, policy).1;
            let (mut a, best) = scan_and_refine_min(objective, A_MIN, A_MAX, 0.01, 1e-7);
            // the least-squares slope can sit in a narrow dip between grid points
            let seed = loglog_regression(&table.loglog_points())
                .map(|d| (-d.slope).clamp(A_MIN, A_MAX))
                .unwrap_or(a);
            let local = golden_section_max(
                |x| -objective(x),
                (seed - 0.05).max(A_MIN),
                (seed + 0.05).min(A_MAX),
                1e-7,
            );
            let local_x2 = objective(local);
            if local_x2 < best {
                a = local;
            }
            (a, profile_amplitude(&observed, a, tokens, policy).0)
        }
    };
    let model = FittedModel::PowerLaw(PowerLawModel::new(a, c)?);
    let gof = pearson_gof(table, &model, FREE_PARAMS, policy);
    Ok(FitResult::new(model, gof, method))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_power_law() {
        // 36·z^-2 at z = 1..3
        let t = RankFrequencyTable::from_frequencies(&[36, 9, 4]).unwrap();
        let fit = fit_power_law(&t, Method::MinChiSq, PoolingPolicy::default()).unwrap();
        let FittedModel::PowerLaw(m) = fit.model else { panic!() };
        assert!((m.a() - 2.0).abs() < 1e-6, "a = {}", m.a());
        assert!((m.c() - 36.0 / 49.0).abs() < 1e-6);
        assert!(fit.x2 < 1e-9);
        assert_eq!(fit.df, None);

        // 12·z^-1 at z = 1..4
        let t = RankFrequencyTable::from_frequencies(&[12, 6, 4, 3]).unwrap();
        let fit = fit_power_law(&t, Method::MinChiSq, PoolingPolicy::default()).unwrap();
        assert!((fit.model.a() - 1.0).abs() < 1e-6, "{fit:?}");
        assert_eq!(fit.df, Some(1));
    }

    #[test]
    fn two_types_is_degenerate() {
        let t = RankFrequencyTable::from_frequencies(&[3, 1]).unwrap();
        for method in [Method::Mle, Method::MinChiSq] {
            assert!(matches!(
                fit_power_law(&t, method, PoolingPolicy::default()),
                Err(Error::Degenerate(_))
            ));
        }
    }

    #[test]
    fn profiled_amplitude_beats_neighbours() {
        let observed = [10.0, 8.0, 7.0, 7.0, 5.0, 4.0, 4.0, 3.0, 3.0, 2.0, 1.0, 1.0];
        let tokens: f64 = observed.iter().sum();
        let policy = PoolingPolicy::default();
        let (c, x2) = profile_amplitude(&observed, 0.5, tokens, policy);
        for factor in [0.97, 0.99, 1.01, 1.03] {
            let expected: Vec<f64> = (1..=observed.len())
                .map(|z| tokens * c * factor * (z as f64).powf(-0.5))
                .collect();
            let other: f64 = pool_classes(&observed, &expected, policy)
                .iter()
                .map(|&(o, e)| (o - e).powi(2) / e)
                .sum();
            assert!(x2 <= other + 1e-12);
        }
    }

    #[test]
    fn mle_amplitude_is_the_truncated_normalizer() {
        let t = RankFrequencyTable::from_frequencies(&[9, 8, 4, 2, 2, 2, 1, 1, 1]).unwrap();
        let fit = fit_power_law(&t, Method::Mle, PoolingPolicy::default()).unwrap();
        let FittedModel::PowerLaw(m) = fit.model else { panic!() };
        let t_norm: f64 = (1..=9).map(|z| (z as f64).powf(-m.a())).sum();
        assert!((m.c() * t_norm - 1.0).abs() < 1e-12);
    }
}
