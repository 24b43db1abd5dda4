//! Adaptive Simpson quadrature with an absolute tolerance and a certified
//! error estimate. The interval-halving rule accepts a panel when the
//! Richardson estimate `|S₂ − S₁|/15` is below the local tolerance.

use crate::{Error, Result};
use num_complex::Complex64;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    /// Sum of the accepted panels' Richardson error estimates.
    pub abs_error: f64,
    pub evaluations: usize,
}

const DEFAULT_MAX_DEPTH: u32 = 48;

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    adaptive_simpson_depth(f, a, b, abs_tol, DEFAULT_MAX_DEPTH)
}

/// As [`adaptive_simpson`] with an explicit recursion-depth cap.
pub fn adaptive_simpson_depth<F>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_depth: u32,
) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidInput(format!(
            "integration interval [{a}, {b}] must be finite and ordered"
        )));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "quadrature tolerance must be positive, got {abs_tol}"
        )));
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    let mut state = State {
        f: &f,
        requested: abs_tol,
        evaluations: 3,
        abs_error: 0.0,
    };
    let value = state.refine(a, m, b, fa, fm, fb, whole, abs_tol, max_depth)?;
    Ok(Quadrature {
        value,
        abs_error: state.abs_error,
        evaluations: state.evaluations,
    })
}

/// Real and imaginary parts integrated independently to the same tolerance.
pub fn adaptive_simpson_complex<F>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let re = adaptive_simpson(|x| f(x).re, a, b, abs_tol)?;
    let im = adaptive_simpson(|x| f(x).im, a, b, abs_tol)?;
    Ok(Complex64::new(re.value, im.value))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

struct State<'a, F> {
    f: &'a F,
    requested: f64,
    evaluations: usize,
    abs_error: f64,
}

impl<F: Fn(f64) -> f64> State<'_, F> {
    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: f64,
        m: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let (flm, frm) = ((self.f)(lm), (self.f)(rm));
        self.evaluations += 2;
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol || (m - a).abs() < 1e-15 * (b - a).abs().max(1.0) {
            self.abs_error += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::QuadratureNoConverge {
                requested: self.requested,
                achieved: delta.abs() / 15.0,
            });
        }
        let half = 0.5 * tol;
        let l = self.refine(a, lm, m, fa, flm, fm, left, half, depth - 1)?;
        let r = self.refine(m, rm, b, fm, frm, fb, right, half, depth - 1)?;
        Ok(l + r)
    }
}
