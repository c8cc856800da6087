//! Bounded scalar minimization.

const INV_PHI: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Minimizer of a scalar function on a closed interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search on `[lo, hi]` until the bracket is narrower than `tol`.
///
/// Converges to a local minimizer for unimodal `f`; returns the best point
/// seen, including the endpoints.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Minimum {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut evals = 2;
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        evals += 1;
        // the bracket stops shrinking once it sits between adjacent floats
        if c <= a || d >= b {
            break;
        }
    }
    let mut best = Minimum {
        x: 0.5 * (a + b),
        value: f(0.5 * (a + b)),
        evaluations: evals + 1,
    };
    for (x, v) in [(c, fc), (d, fd), (lo, f(lo)), (hi, f(hi))] {
        best.evaluations += 1;
        if v < best.value {
            best.x = x;
            best.value = v;
        }
    }
    best
}

/// True when the samples decrease and then increase (plateaus allowed).
pub fn is_unimodal(values: &[f64]) -> bool {
    let mut rising = false;
    for w in values.windows(2) {
        if w[1] > w[0] {
            rising = true;
        } else if w[1] < w[0] && rising {
            return false;
        }
    }
    true
}

/// Minimizes `f` on `[lo, hi]`: a coarse pre-scan locates the best sample,
/// then golden-section refines inside its neighbouring bracket. If the scan
/// is not unimodal the scan is repeated on a dense grid before refining.
pub fn minimize_bounded<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Minimum {
    const COARSE: usize = 64;
    const DENSE: usize = 4096;

    let scan = |n: usize| -> (Vec<f64>, Vec<f64>) {
        let xs: Vec<f64> = (0..=n)
            .map(|i| lo + (hi - lo) * i as f64 / n as f64)
            .collect();
        let vs = xs.iter().map(|&x| f(x)).collect();
        (xs, vs)
    };

    let (mut xs, mut vs) = scan(COARSE);
    let mut evals = xs.len();
    if !is_unimodal(&vs) {
        (xs, vs) = scan(DENSE);
        evals += xs.len();
    }
    let best = vs
        .iter()
        .enumerate()
        .fold(0, |acc, (i, v)| if *v < vs[acc] { i } else { acc });
    let a = xs[best.saturating_sub(1)];
    let b = xs[(best + 1).min(xs.len() - 1)];
    let mut m = golden_section(&f, a, b, tol);
    m.evaluations += evals;
    if vs[best] < m.value {
        m.x = xs[best];
        m.value = vs[best];
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quadratic_interior_minimum() {
        let m = golden_section(|x| (x - 0.3) * (x - 0.3) + 1.0, 0.0, 1.0, 1e-12);
        assert_abs_diff_eq!(m.x, 0.3, epsilon = 1e-7);
        assert_abs_diff_eq!(m.value, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn endpoint_minimum() {
        let m = golden_section(|x| x, 1.0, 2.0, 1e-12);
        assert_eq!(m.x, 1.0);
        let m = minimize_bounded(|x| -x, 1.0, 2.0, 1e-12);
        assert_eq!(m.x, 2.0);
    }

    #[test]
    fn unimodality_check() {
        assert!(is_unimodal(&[3.0, 2.0, 1.0, 1.0, 2.0]));
        assert!(is_unimodal(&[1.0, 2.0, 3.0]));
        assert!(!is_unimodal(&[3.0, 1.0, 2.0, 0.5, 4.0]));
    }

    #[test]
    fn bimodal_falls_back_to_dense_scan() {
        // global minimum near 0.79167 (dense-grid oracle), local near 0.2
        let f = |x: f64| ((x - 0.2).powi(2) + 0.01) * ((x - 0.8).powi(2) + 0.005);
        let m = minimize_bounded(f, 0.0, 1.0, 1e-12);
        assert!((m.x - 0.79167).abs() < 1e-4, "x = {}", m.x);
        assert!((m.value - 0.001_825_352).abs() < 1e-9);
    }
}
