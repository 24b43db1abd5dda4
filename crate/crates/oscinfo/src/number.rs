//! Number-state Shannon information of the coherent state.
//!
//! In the occupation-number representation the coherent state has Poisson
//! statistics `P(n) = ⟨n⟩ⁿ e^(−⟨n⟩)/n!` with mean `⟨n⟩ = α²/2`. Its Shannon
//! information
//!
//! `I = ⟨n⟩(1 − ln⟨n⟩) + e^(−⟨n⟩) Σₙ (⟨n⟩ⁿ/n!) ln(n!)`
//!
//! grows with `⟨n⟩` — unlike the spatial total, it is not conserved across
//! the quantum-classical transition — while the density `dI/d⟨n⟩` decreases
//! monotonically and diverges as `−ln⟨n⟩` in the quantum limit `⟨n⟩ ≪ 1`.
//! Series are truncated with a certified geometric tail bound.

use crate::oscillator::OscillatorConfig;
use crate::special::ln_factorial;
use crate::{Error, Result};

/// Number-state information at one mean occupation, with the truncation used
/// and the certified bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumberStateInfo {
    pub mean: f64,
    /// Last summed index of the Poisson series.
    pub truncation: u64,
    /// Shannon information in nats.
    pub information: f64,
    /// `dI/d⟨n⟩`; `None` at `mean = 0` where it diverges logarithmically.
    pub derivative: Option<f64>,
    /// Upper bound on the truncation error of either series.
    pub tail_bound: f64,
}

/// Poisson probability `⟨n⟩ⁿ e^(−⟨n⟩)/n!`, computed in log space.
pub fn poisson_pmf(n: u64, mean: f64) -> Result<f64> {
    if !(mean >= 0.0) || !mean.is_finite() {
        return Err(Error::InvalidInput(format!(
            "Poisson mean must be finite and >= 0, got {mean}"
        )));
    }
    if mean == 0.0 {
        return Ok(if n == 0 { 1.0 } else { 0.0 });
    }
    Ok((n as f64 * mean.ln() - mean - ln_factorial(n)).exp())
}

/// Mean occupation of the coherent state, `(mω²⟨x²⟩ + ⟨p²⟩/m)/2 / ħω` with
/// the time-averaged classical moments `⟨x²⟩ = a²/2`, `⟨p²⟩ = m²ω²a²/2`;
/// reduces to `α²/2`.
pub fn mean_occupation(config: &OscillatorConfig) -> f64 {
    let m = config.mass();
    let w = config.angular_frequency();
    let a = config.amplitude();
    let x2 = a * a / 2.0;
    let p2 = m * m * w * w * a * a / 2.0;
    (m * w * w * x2 + p2 / m) / 2.0 / config.quantum_energy()
}

/// Truncation index: `ceil(mean + 12 √mean + 30)` guarantees a sub-geometric
/// Poisson tail with ratio well below one.
fn truncation_index(mean: f64) -> u64 {
    (mean + 12.0 * mean.sqrt() + 30.0).ceil() as u64
}

/// Certified bound on `Σ_{n>N} pmf(n) g(n)` where `g` grows at most like
/// `x ln x`. Uses `pmf(n) ≤ pmf(N+1) r^(n−N−1)` with `r = mean/(N+2) < 1`
/// and `ln((N+1+j)!) ≤ (N+1+j)(ln(N+1) + j/(N+1))`, which leaves geometric
/// sums with closed forms.
fn tail_bound(mean: f64, last: u64) -> Result<f64> {
    let n1 = last as f64 + 1.0;
    let r = mean / (n1 + 1.0);
    if r >= 0.97 {
        return Err(Error::Numeric(format!(
            "tail ratio {r:.3} too close to 1 at truncation {last}"
        )));
    }
    let head = (n1 * mean.ln() - mean - ln_factorial(last + 1)).exp();
    let s0 = 1.0 / (1.0 - r);
    let s1 = r / (1.0 - r).powi(2);
    let s2 = r * (1.0 + r) / (1.0 - r).powi(3);
    let l = n1.ln();
    // ln((N+1+j)!) ≤ (N+1)L + jL + j + j²/(N+1)
    let factorial_tail = head * (n1 * l * s0 + l * s1 + s1 + s2 / n1);
    // ln(n+2) ≤ ln(N+2) + j/(N+2) for the density series
    let log_tail = head * ((n1 + 1.0).ln() * s0 + s1 / (n1 + 1.0));
    Ok(factorial_tail.max(log_tail))
}

/// Shannon information of the Poisson number distribution, in nats, with the
/// series truncated so that the certified tail bound is below `tol`.
/// `mean = 0` returns the continuity limit 0.
pub fn number_information(mean: f64, tol: f64) -> Result<NumberStateInfo> {
    if !(mean >= 0.0) || !mean.is_finite() {
        return Err(Error::InvalidInput(format!(
            "mean occupation must be finite and >= 0, got {mean}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if mean == 0.0 {
        return Ok(NumberStateInfo {
            mean,
            truncation: 0,
            information: 0.0,
            derivative: None,
            tail_bound: 0.0,
        });
    }

    let mut last = truncation_index(mean);
    let mut bound = tail_bound(mean, last)?;
    let mut grow = 0;
    while bound >= tol {
        last *= 2;
        bound = tail_bound(mean, last)?;
        grow += 1;
        if grow > 40 {
            return Err(Error::Numeric(format!(
                "cannot certify tail below {tol:e} for mean {mean}"
            )));
        }
    }

    let mut factorial_series = 0.0; // Σ pmf(n) ln(n!)
    let mut log_series = 0.0; // Σ pmf(n) ln(n+1)
    for n in 0..=last {
        let p = poisson_pmf(n, mean)?;
        factorial_series += p * ln_factorial(n);
        log_series += p * ((n + 1) as f64).ln();
    }

    let information = mean * (1.0 - mean.ln()) + factorial_series;
    let derivative = log_series - mean.ln();
    Ok(NumberStateInfo {
        mean,
        truncation: last,
        information,
        derivative: Some(derivative),
        tail_bound: bound,
    })
}

/// Information density `dI/d⟨n⟩ = e^(−⟨n⟩) Σₙ (⟨n⟩ⁿ/n!) ln(n+1) − ln⟨n⟩`.
/// Diverges logarithmically as `mean → 0`, so `mean = 0` is a domain error.
pub fn number_info_density(mean: f64, tol: f64) -> Result<f64> {
    if mean == 0.0 {
        return Err(Error::Domain(
            "dI/d<n> diverges as -ln<n> at <n> = 0".into(),
        ));
    }
    let info = number_information(mean, tol)?;
    Ok(info.derivative.expect("mean > 0 always has a derivative"))
}
