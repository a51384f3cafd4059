//! Test-only oracles and fixture helpers, independent of the library code
//! they check.
#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/rank_tables")
        .join(name)
}

/// ln Γ(k/2) by the exact recurrence from Γ(1/2) = √π and Γ(1) = 1.
fn ln_gamma_half(k: u32) -> f64 {
    let (mut s, mut acc) = if k % 2 == 0 {
        (1.0, 0.0)
    } else {
        (0.5, 0.5 * std::f64::consts::PI.ln())
    };
    while s < k as f64 / 2.0 {
        acc += s.ln();
        s += 1.0;
    }
    acc
}

fn chi_square_density(t: f64, k: u32) -> f64 {
    let half = k as f64 / 2.0;
    ((half - 1.0) * t.ln() - t / 2.0 - half * 2f64.ln() - ln_gamma_half(k)).exp()
}

#[allow(clippy::too_many_arguments)]
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Upper tail of the chi-square distribution by adaptive Simpson quadrature
/// of the density over [x, x + 60 sd + 100].
pub fn chi_square_sf_quadrature(x: f64, k: u32) -> f64 {
    let sd = (2.0 * k as f64).sqrt();
    let upper = x.max(k as f64) + 60.0 * sd + 100.0;
    let width = sd / 4.0;
    let f = |t: f64| chi_square_density(t, k);
    let mut total = 0.0;
    let mut a = x;
    while a < upper {
        let b = (a + width).min(upper);
        let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson(&f, a, b, fa, fm, fb, whole, 1e-15, 50);
        a = b;
    }
    total
}

/// Truncated-zeta log-likelihood, summed naively.
pub fn log_likelihood(freqs: &[u64], n: usize, a: f64) -> f64 {
    let t: f64 = (1..=n).map(|z| (z as f64).powf(-a)).sum();
    let tokens: u64 = freqs.iter().sum();
    freqs
        .iter()
        .enumerate()
        .map(|(i, &f)| -a * f as f64 * ((i + 1) as f64).ln())
        .sum::<f64>()
        - tokens as f64 * t.ln()
}

/// Exhaustive grid search for the likelihood maximum on [0, 10].
pub fn grid_argmax(freqs: &[u64], n: usize, step: f64) -> f64 {
    let steps = (10.0 / step).round() as usize;
    (0..=steps)
        .map(|i| i as f64 * step)
        .map(|a| (a, log_likelihood(freqs, n, a)))
        .fold((0.0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
        .0
}
