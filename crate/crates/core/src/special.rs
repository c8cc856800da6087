//! Special functions: log-Gamma and the Bessel functions `J0`, `J1` near the
//! first zero of `J0`.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
// published coefficients, kept digit for digit
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln |Gamma(x)|` by the Lanczos approximation (g = 7, 9 terms).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        (PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x)
    } else {
        let x = x - 1.0;
        let mut acc = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
    }
}

const SERIES_CUTOFF: f64 = 1e-18;

/// `J0(x)` from its ascending power series. Intended for moderate `|x|`.
pub fn bessel_j0(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0_f64;
    let mut sum = 1.0;
    let mut k = 1.0;
    while term.abs() >= SERIES_CUTOFF {
        term *= q / (k * k);
        sum += term;
        k += 1.0;
    }
    sum
}

/// `J1(x)` from its ascending power series.
pub fn bessel_j1(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    let mut k = 1.0;
    while term.abs() >= SERIES_CUTOFF {
        term *= q / (k * (k + 1.0));
        sum += term;
        k += 1.0;
    }
    sum
}

/// First positive zero of `J0`, by Newton's method from 2.4.
pub fn bessel_j0_first_zero() -> f64 {
    let mut x = 2.4;
    for _ in 0..50 {
        let f = bessel_j0(x);
        // d/dx J0 = -J1
        let step = f / bessel_j1(x);
        x += step;
        if f.abs() < 1e-14 && step.abs() < 1e-15 * x {
            break;
        }
    }
    x
}
