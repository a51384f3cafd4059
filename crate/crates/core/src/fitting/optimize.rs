//! One-dimensional search helpers.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
/// Stops when the bracket is narrower than `tol`.
pub(crate) fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Grid scan with step `step` over `[lo, hi]` followed by golden-section
/// refinement within one step of the best grid point. Returns `(x, f(x))`
/// for the minimum found.
pub(crate) fn scan_and_refine_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64, tol: f64) -> (f64, f64) {
    let steps = ((hi - lo) / step).round() as usize;
    let (mut best_x, mut best_f) = (lo, f(lo));
    for i in 1..=steps {
        let x = (lo + i as f64 * step).min(hi);
        let fx = f(x);
        if fx < best_f {
            best_x = x;
            best_f = fx;
        }
    }
    let a = (best_x - step).max(lo);
    let b = (best_x + step).min(hi);
    let refined = golden_section_max(|x| -f(x), a, b, tol);
    let refined_f = f(refined);
    if refined_f < best_f {
        (refined, refined_f)
    } else {
        (best_x, best_f)
    }
}
