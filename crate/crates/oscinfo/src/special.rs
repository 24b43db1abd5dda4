//! Special functions needed by the information-density formulas: the error
//! function pair and the log-gamma function.
//!
//! `erf` is computed from its Maclaurin series for small arguments and from
//! the classical continued fraction for `erfc` otherwise; both branches are
//! accurate to a few ulp over the ranges used here. `ln_gamma` is the Lanczos
//! approximation (g = 7, 9 coefficients).

use std::f64::consts::PI;

/// Crossover between the Maclaurin series and the continued fraction.
const ERF_SERIES_CUTOFF: f64 = 2.0;

/// Beyond this point `erfc` underflows and `erf` is 1 to machine precision.
const ERF_SATURATION: f64 = 27.0;

/// Error function `erf(x) = (2/√π) ∫₀ˣ e^(−z²) dz`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    if ax <= ERF_SERIES_CUTOFF {
        sign * erf_series(ax)
    } else if ax < ERF_SATURATION {
        sign * (1.0 - erfc_cf(ax))
    } else {
        sign
    }
}

/// Complementary error function `erfc(x) = 1 − erf(x)`.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x <= ERF_SERIES_CUTOFF {
        1.0 - erf_series(x)
    } else if x < ERF_SATURATION {
        erfc_cf(x)
    } else {
        0.0
    }
}

/// Maclaurin series, alternating; cancellation stays below one decimal digit
/// for |x| ≤ 2.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x; // (−1)ⁿ x^(2n+1) / n!
    let mut sum = x;
    for n in 1..200 {
        term *= -x2 / n as f64;
        let contribution = term / (2 * n + 1) as f64;
        sum += contribution;
        if contribution.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum * 2.0 / PI.sqrt()
}

/// Continued fraction `erfc(x) √π e^(x²) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`
/// evaluated by the modified Lentz scheme; rapid for x ≥ 2.
fn erfc_cf(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x / TINY;
    let mut d = 0.0;
    for n in 1..300 {
        let a = n as f64 / 2.0;
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    (-x * x).exp() / (PI.sqrt() * f)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
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

/// Natural log of the gamma function for positive real argument.
pub fn ln_gamma(z: f64) -> f64 {
    assert!(z > 0.0, "ln_gamma requires a positive argument, got {z}");
    if z < 0.5 {
        // reflection: Γ(z) Γ(1−z) = π / sin(πz)
        return (PI / (PI * z).sin()).ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `ln(n!)`, exact zero for n ≤ 1.
pub fn ln_factorial(n: u64) -> f64 {
    if n <= 1 {
        0.0
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}
