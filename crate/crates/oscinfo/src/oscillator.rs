//! Physical parameters, the coherent-state wavefunction, the classical
//! trajectory and the harmonic potential consumed by every other module.
//!
//! Positions are dimensionless throughout: `x̃ = x/a` where `a` is the
//! classical amplitude. The displacement from the classical trajectory is
//! `y = x̃ − cos ωt`; the coherent state is a Gaussian of width `1/α` in `y`
//! with `α = a √(mω/ħ)`.

use crate::{Error, Result};
use num_complex::Complex64;

/// Physical parameters of the oscillator plus the derived dimensionless
/// combinations.
///
/// All four base quantities are strictly positive and finite. In the default
/// natural units `ħ = m = ω = 1` the amplitude `a` doubles as the control
/// parameter `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    mass: f64,
    angular_frequency: f64,
    amplitude: f64,
    planck: f64,
}

impl OscillatorConfig {
    pub fn new(mass: f64, angular_frequency: f64, amplitude: f64, planck: f64) -> Result<Self> {
        for (name, v) in [
            ("mass", mass),
            ("angular_frequency", angular_frequency),
            ("amplitude", amplitude),
            ("planck", planck),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be strictly positive and finite, got {v}"
                )));
            }
        }
        Ok(Self {
            mass,
            angular_frequency,
            amplitude,
            planck,
        })
    }

    /// Natural units `ħ = m = ω = 1`; the amplitude equals `alpha`.
    pub fn with_alpha(alpha: f64) -> Result<Self> {
        Self::new(1.0, 1.0, alpha, 1.0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn angular_frequency(&self) -> f64 {
        self.angular_frequency
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn planck(&self) -> f64 {
        self.planck
    }

    /// `α = a √(mω/ħ)`, the ratio of the amplitude to the quantum length
    /// scale `√(ħ/mω)`. Equivalently `α² = a/λ_db` with `λ_db = ħ/(maω)`.
    pub fn alpha(&self) -> f64 {
        self.amplitude * (self.mass * self.angular_frequency / self.planck).sqrt()
    }

    /// De Broglie wavelength at the peak classical momentum:
    /// `λ_db = ħ/(m a ω)`.
    pub fn de_broglie_wavelength(&self) -> f64 {
        self.planck / (self.mass * self.amplitude * self.angular_frequency)
    }

    /// Energy quantum `ħω`.
    pub fn quantum_energy(&self) -> f64 {
        self.planck * self.angular_frequency
    }

    /// Dimensionless classical trajectory `cos ωt` (multiply by `a` for the
    /// physical position).
    pub fn classical_trajectory(&self, t: f64) -> f64 {
        (self.angular_frequency * t).cos()
    }

    /// Harmonic potential `U(x̃) = ½ m ω² a² x̃²`.
    pub fn harmonic_potential(&self, xt: f64) -> f64 {
        0.5 * self.mass * self.angular_frequency.powi(2) * self.amplitude.powi(2) * xt * xt
    }
}

/// Dimensionless position/time pair. The displacement `y = x̃ − cos ωt`
/// vanishes exactly on the classical trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessCoordinate {
    xt: f64,
    t: f64,
}

impl DimensionlessCoordinate {
    pub fn new(xt: f64, t: f64) -> Self {
        debug_assert!(xt.is_finite() && t.is_finite());
        Self { xt, t }
    }

    /// Coordinate sitting exactly on the classical trajectory at time `t`.
    pub fn on_trajectory(config: &OscillatorConfig, t: f64) -> Self {
        Self::new(config.classical_trajectory(t), t)
    }

    pub fn xt(&self) -> f64 {
        self.xt
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn y(&self, config: &OscillatorConfig) -> f64 {
        self.xt - config.classical_trajectory(self.t)
    }
}

/// Uniform one-dimensional grid in the dimensionless coordinate, with an
/// optional time step for space-time sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    xt_min: f64,
    xt_max: f64,
    n_points: usize,
    dt: Option<f64>,
}

impl Grid1D {
    pub fn new(xt_min: f64, xt_max: f64, n_points: usize) -> Result<Self> {
        if !(xt_min.is_finite() && xt_max.is_finite() && xt_min < xt_max) {
            return Err(Error::InvalidConfig(format!(
                "grid bounds [{xt_min}, {xt_max}] must be finite and ordered"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidConfig(format!(
                "second-order stencils need n_points >= 3, got {n_points}"
            )));
        }
        Ok(Self {
            xt_min,
            xt_max,
            n_points,
            dt: None,
        })
    }

    pub fn with_dt(mut self, dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "time step must be positive, got {dt}"
            )));
        }
        self.dt = Some(dt);
        Ok(self)
    }

    pub fn xt_min(&self) -> f64 {
        self.xt_min
    }

    pub fn xt_max(&self) -> f64 {
        self.xt_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn dt(&self) -> Option<f64> {
        self.dt
    }

    pub fn spacing(&self) -> f64 {
        (self.xt_max - self.xt_min) / (self.n_points - 1) as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        self.xt_min + j as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |j| self.node(j))
    }
}

/// Complex amplitudes sampled on the nodes of a [`Grid1D`] at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledComplexField {
    grid: Grid1D,
    values: Vec<Complex64>,
}

impl SampledComplexField {
    pub fn new(grid: Grid1D, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::InvalidInput(format!(
                "field has {} values for a {}-node grid",
                values.len(),
                grid.n_points()
            )));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidInput(
                "field contains non-finite amplitudes".into(),
            ));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.nodes().map(f).collect();
        Self::new(grid, values)
    }

    /// Sample an analytic field at time `t`.
    pub fn sample(state: &(impl AnalyticField + ?Sized), grid: Grid1D, t: f64) -> Result<Self> {
        Self::from_fn(grid, |xt| state.value(xt, t))
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Discrete norm squared `Σ |Ψ_j|² h`.
    pub fn norm_sqr(&self) -> f64 {
        let h = self.grid.spacing();
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * h
    }

    /// Discrete inner product `Σ conj(Ψ_j) Φ_j h`.
    pub fn overlap(&self, other: &Self) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::InvalidInput(
                "overlap requires fields on the same grid".into(),
            ));
        }
        let h = self.grid.spacing();
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| u.conj() * v)
            .sum::<Complex64>()
            * h)
    }

    /// Position expectation `⟨x̃⟩ = Σ x̃_j |Ψ_j|² h / Σ |Ψ_j|² h`.
    pub fn mean_position(&self) -> f64 {
        let mut weighted = 0.0;
        let mut total = 0.0;
        for (xt, v) in self.grid.nodes().zip(&self.values) {
            let w = v.norm_sqr();
            weighted += xt * w;
            total += w;
        }
        weighted / total
    }
}

/// A complex field with closed-form first and second derivatives, used by the
/// residual and fit machinery where stencil error would mask the algebra
/// being checked.
pub trait AnalyticField {
    fn value(&self, xt: f64, t: f64) -> Complex64;
    /// ∂Ψ/∂t
    fn d_t(&self, xt: f64, t: f64) -> Complex64;
    /// ∂Ψ/∂x̃ (dimensionless derivative; divide by `a` for physical)
    fn d_xt(&self, xt: f64, t: f64) -> Complex64;
    /// ∂²Ψ/∂x̃²
    fn d2_xt(&self, xt: f64, t: f64) -> Complex64;
}

/// Multiplies an analytic field by `e^(−iΩt)`.
pub struct PhaseShifted<F> {
    pub inner: F,
    pub shift: f64,
}

impl<F: AnalyticField> AnalyticField for PhaseShifted<F> {
    fn value(&self, xt: f64, t: f64) -> Complex64 {
        self.inner.value(xt, t) * (-Complex64::i() * self.shift * t).exp()
    }

    fn d_t(&self, xt: f64, t: f64) -> Complex64 {
        let phase = (-Complex64::i() * self.shift * t).exp();
        (self.inner.d_t(xt, t) - Complex64::i() * self.shift * self.inner.value(xt, t)) * phase
    }

    fn d_xt(&self, xt: f64, t: f64) -> Complex64 {
        self.inner.d_xt(xt, t) * (-Complex64::i() * self.shift * t).exp()
    }

    fn d2_xt(&self, xt: f64, t: f64) -> Complex64 {
        self.inner.d2_xt(xt, t) * (-Complex64::i() * self.shift * t).exp()
    }
}

/// The coherent state
///
/// `Ψ(x̃,t) = (α²/π)^(1/4) exp[−½α²y² − i(ωt/2 + α² x̃ sin ωt − ¼α² sin 2ωt)]`
///
/// normalized so that `∫ |Ψ|² dx̃ = 1`. Its center follows `x̃ = cos ωt` and
/// it solves the Schrödinger equation with the harmonic potential exactly.
#[derive(Debug, Clone, Copy)]
pub struct CoherentState {
    config: OscillatorConfig,
}

impl CoherentState {
    pub fn new(config: OscillatorConfig) -> Self {
        Self { config }
    }

    pub fn config(&self) -> &OscillatorConfig {
        &self.config
    }

    /// Exponent `g` with `Ψ = N e^g`.
    fn exponent(&self, xt: f64, t: f64) -> Complex64 {
        let a2 = self.config.alpha().powi(2);
        let w = self.config.angular_frequency();
        let y = xt - (w * t).cos();
        let phase = 0.5 * w * t + a2 * xt * (w * t).sin() - 0.25 * a2 * (2.0 * w * t).sin();
        Complex64::new(-0.5 * a2 * y * y, -phase)
    }

    /// ∂g/∂x̃ = −α²y − iα² sin ωt
    fn exponent_dxt(&self, xt: f64, t: f64) -> Complex64 {
        let a2 = self.config.alpha().powi(2);
        let w = self.config.angular_frequency();
        let y = xt - (w * t).cos();
        Complex64::new(-a2 * y, -a2 * (w * t).sin())
    }

    /// ∂g/∂t = −α²yω sin ωt − i(ω/2 + α²ω x̃ cos ωt − ½α²ω cos 2ωt)
    fn exponent_dt(&self, xt: f64, t: f64) -> Complex64 {
        let a2 = self.config.alpha().powi(2);
        let w = self.config.angular_frequency();
        let y = xt - (w * t).cos();
        Complex64::new(
            -a2 * y * w * (w * t).sin(),
            -(0.5 * w + a2 * w * xt * (w * t).cos() - 0.5 * a2 * w * (2.0 * w * t).cos()),
        )
    }

    fn prefactor(&self) -> f64 {
        (self.config.alpha().powi(2) / std::f64::consts::PI).powf(0.25)
    }
}

impl AnalyticField for CoherentState {
    fn value(&self, xt: f64, t: f64) -> Complex64 {
        self.prefactor() * self.exponent(xt, t).exp()
    }

    fn d_t(&self, xt: f64, t: f64) -> Complex64 {
        self.exponent_dt(xt, t) * self.value(xt, t)
    }

    fn d_xt(&self, xt: f64, t: f64) -> Complex64 {
        self.exponent_dxt(xt, t) * self.value(xt, t)
    }

    fn d2_xt(&self, xt: f64, t: f64) -> Complex64 {
        let g1 = self.exponent_dxt(xt, t);
        let a2 = self.config.alpha().powi(2);
        // g2 = ∂²g/∂x̃² = −α²
        (g1 * g1 - a2) * self.value(xt, t)
    }
}

/// Coherent-state amplitude at a dimensionless coordinate.
pub fn coherent_state(config: &OscillatorConfig, coord: DimensionlessCoordinate) -> Complex64 {
    CoherentState::new(*config).value(coord.xt(), coord.t())
}

/// `|Ψ|² = (α/√π) e^(−α²y²)`, the probability density per unit `x̃`.
pub fn probability_density(config: &OscillatorConfig, coord: DimensionlessCoordinate) -> f64 {
    let alpha = config.alpha();
    let y = coord.y(config);
    alpha / std::f64::consts::PI.sqrt() * (-(alpha * y).powi(2)).exp()
}
