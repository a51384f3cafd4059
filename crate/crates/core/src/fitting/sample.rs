use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rankfreq::{synthetic_surface, TypeCounts};

use super::TruncatedZetaModel;

/// Draws `draws` ranks from `model` by inverting its cumulative pmf.
///
/// The generator is ChaCha8 seeded with `ChaCha8Rng::seed_from_u64(seed)`,
/// and uniforms come from `Rng::random::<f64>()`. Each drawn rank `z` is
/// counted under the surface `⟨r0000z⟩`; ranks never drawn are absent.
pub fn sample_truncated_zeta(model: &TruncatedZetaModel, draws: u64, seed: u64) -> TypeCounts {
    let n = model.n();
    let mut cdf = Vec::with_capacity(n);
    let mut acc = 0.0;
    for z in 1..=n {
        acc += model.pmf_unchecked(z);
        cdf.push(acc);
    }
    if let Some(last) = cdf.last_mut() {
        *last = 1.0;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = vec![0u64; n];
    for _ in 0..draws {
        let u: f64 = rng.random();
        let idx = cdf.partition_point(|&c| c <= u).min(n - 1);
        hits[idx] += 1;
    }
    hits.into_iter()
        .enumerate()
        .map(|(i, h)| (synthetic_surface(i + 1), h))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fitting::chi_square_sf;

    #[test]
    fn uniform_two_ranks() {
        let m = TruncatedZetaModel::new(0.0, 2).unwrap();
        let counts = sample_truncated_zeta(&m, 1_000_000, 11);
        for z in 1..=2 {
            let c = counts.get(&synthetic_surface(z)).unwrap() as f64;
            assert!((c - 500_000.0).abs() < 3.0 * 500.0, "rank {z}: {c}");
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let m = TruncatedZetaModel::new(0.8, 50).unwrap();
        assert_eq!(sample_truncated_zeta(&m, 5000, 3), sample_truncated_zeta(&m, 5000, 3));
        assert_ne!(sample_truncated_zeta(&m, 5000, 3), sample_truncated_zeta(&m, 5000, 4));
        assert!(sample_truncated_zeta(&m, 0, 3).is_empty());
    }

    #[test]
    fn matches_pmf_in_chi_square() {
        let m = TruncatedZetaModel::new(0.8, 200).unwrap();
        let draws = 100_000u64;
        let counts = sample_truncated_zeta(&m, draws, 2024);
        let x2: f64 = (1..=200)
            .map(|z| {
                let e = draws as f64 * m.pmf(z).unwrap();
                let o = counts.get(&synthetic_surface(z)).unwrap_or(0) as f64;
                (o - e).powi(2) / e
            })
            .sum();
        let p = chi_square_sf(x2, 199).unwrap();
        assert!(p > 0.001, "x2 = {x2}, p = {p}");
    }
}
