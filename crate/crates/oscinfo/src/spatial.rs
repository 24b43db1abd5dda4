//! Spatial Shannon information of the coherent state: partition-based
//! discrete entropy, the regularized continuum information density, its
//! conserved total, and the standard Gaussian differential entropy as an
//! independent comparator.
//!
//! The continuum density per unit `x̃` is
//!
//! `dI/dx̃ = (α/(2√π)) e^(−(αy)²) [1 + (ln π)/2 + (αy)²]`
//!
//! whose integral over the whole line, `(1 + ln √π)/2 + 1/4`, is independent
//! of both `α` and `t` — the information is redistributed, never lost. A
//! variant with prefactor `α/√π` (exactly twice the density above) appears in
//! the intermediate Riemann-sum form and is exposed separately; the halved
//! form is the canonical one, being the only one consistent with the
//! energy-per-information ratio in [`crate::energy`].

use crate::oscillator::{DimensionlessCoordinate, Grid1D, OscillatorConfig};
use crate::quad::adaptive_simpson;
use crate::special::erf;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Ordered breakpoints defining the cells of a one-dimensional partition.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition1D {
    breakpoints: Vec<f64>,
}

impl Partition1D {
    pub fn new(breakpoints: Vec<f64>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidInput(
                "a partition needs at least two breakpoints".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidInput(
                "partition breakpoints must be strictly increasing".into(),
            ));
        }
        if breakpoints.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidInput(
                "partition breakpoints must be finite".into(),
            ));
        }
        Ok(Self { breakpoints })
    }

    pub fn uniform(lo: f64, hi: f64, cells: usize) -> Result<Self> {
        if cells == 0 {
            return Err(Error::InvalidInput("a partition needs at least one cell".into()));
        }
        let step = (hi - lo) / cells as f64;
        Self::new((0..=cells).map(|i| lo + i as f64 * step).collect())
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn cells(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breakpoints.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Samples of `(y, density)` along a grid at fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct InfoDensityCurve {
    pub samples: Vec<(f64, f64)>,
}

impl InfoDensityCurve {
    pub fn peak(&self) -> f64 {
        self.samples.iter().map(|&(_, d)| d).fold(f64::MIN, f64::max)
    }
}

/// Probability of finding the particle in `[x̃_lo, x̃_hi]` at time `t`:
/// `½ [Φ(α y_hi) − Φ(α y_lo)]` with `Φ = erf` and `y = x̃ − cos ωt`.
pub fn partition_probability(
    config: &OscillatorConfig,
    t: f64,
    xt_lo: f64,
    xt_hi: f64,
) -> Result<f64> {
    if !(xt_lo < xt_hi) {
        return Err(Error::InvalidInput(format!(
            "interval [{xt_lo}, {xt_hi}] must be ordered"
        )));
    }
    let alpha = config.alpha();
    let center = config.classical_trajectory(t);
    Ok(0.5 * (erf(alpha * (xt_hi - center)) - erf(alpha * (xt_lo - center))))
}

/// Discrete Shannon entropy `−Σ pᵢ ln pᵢ` over the partition cells, in nats,
/// with `0 ln 0 ≡ 0`. If the partition misses more than 1e−12 of the total
/// probability mass the complement is appended as one extra cell.
pub fn discrete_entropy(config: &OscillatorConfig, t: f64, partition: &Partition1D) -> f64 {
    let mut entropy = 0.0;
    let mut covered = 0.0;
    for (lo, hi) in partition.cells() {
        let p = partition_probability(config, t, lo, hi).expect("cells are ordered");
        covered += p;
        entropy -= xlnx(p);
    }
    let missing = 1.0 - covered;
    if missing > 1e-12 {
        entropy -= xlnx(missing);
    }
    entropy
}

fn xlnx(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

/// Canonical space information density per unit `x̃` (nats).
pub fn info_density(config: &OscillatorConfig, coord: DimensionlessCoordinate) -> f64 {
    info_density_profile(config.alpha(), coord.y(config))
}

/// Density as a function of the displacement `y` alone.
pub(crate) fn info_density_profile(alpha: f64, y: f64) -> f64 {
    let u2 = (alpha * y).powi(2);
    alpha / (2.0 * PI.sqrt()) * (-u2).exp() * (1.0 + 0.5 * PI.ln() + u2)
}

/// Riemann-sum variant with prefactor `α/√π`: exactly twice [`info_density`].
pub fn info_density_s6_variant(config: &OscillatorConfig, coord: DimensionlessCoordinate) -> f64 {
    2.0 * info_density(config, coord)
}

/// Total spatial information `∫ dI/dx̃ dy` over the whole line, by adaptive
/// quadrature on `|y| ≤ 8/α` plus an analytic Gaussian tail bound. The result
/// equals `(1 + ln √π)/2 + 1/4` independent of `α` and `t`.
pub fn total_information(config: &OscillatorConfig) -> Result<f64> {
    let alpha = config.alpha();
    let half_width = 8.0 / alpha;
    let q = adaptive_simpson(
        |y| info_density_profile(alpha, y),
        -half_width,
        half_width,
        1e-10,
    )?;
    Ok(q.value + info_tail_bound(alpha, half_width))
}

/// Same quantity evaluated at a fixed time by integrating over `x̃`; exercises
/// the time-independence of the density in `y`.
pub fn total_information_at(config: &OscillatorConfig, t: f64) -> Result<f64> {
    let alpha = config.alpha();
    let center = config.classical_trajectory(t);
    let half_width = 8.0 / alpha;
    let q = adaptive_simpson(
        |xt| info_density(config, DimensionlessCoordinate::new(xt, t)),
        center - half_width,
        center + half_width,
        1e-10,
    )?;
    Ok(q.value + info_tail_bound(alpha, half_width))
}

/// Exact integral of the density over `|y| > L`, from the Gaussian moments
/// `∫ e^(−u²) = √π erfc / 2` and `∫ u² e^(−u²) = (u/2)e^(−u²) + (√π/4) erfc`.
fn info_tail_bound(alpha: f64, half_width: f64) -> f64 {
    let l = alpha * half_width;
    let c = 1.0 + 0.5 * PI.ln();
    let erfc_l = crate::special::erfc(l);
    let tail_const = c * 0.5 * PI.sqrt() * erfc_l;
    let tail_quad = 0.5 * l * (-l * l).exp() + 0.25 * PI.sqrt() * erfc_l;
    2.0 * (tail_const + tail_quad) / (2.0 * PI.sqrt())
}

/// Differential entropy of the position distribution, `ln(√(πe)/α)` nats; the
/// standard comparator for the partition-refinement limit of
/// [`discrete_entropy`].
pub fn differential_entropy(config: &OscillatorConfig) -> f64 {
    ((PI * std::f64::consts::E).sqrt() / config.alpha()).ln()
}

/// Sample the information density along a grid at time `t`.
pub fn density_curve(config: &OscillatorConfig, t: f64, grid: &Grid1D) -> InfoDensityCurve {
    let center = config.classical_trajectory(t);
    let samples = grid
        .nodes()
        .map(|xt| {
            (
                xt - center,
                info_density(config, DimensionlessCoordinate::new(xt, t)),
            )
        })
        .collect();
    InfoDensityCurve { samples }
}

/// Full width at half maximum of the density profile, found by bisection on
/// each flank.
pub fn density_fwhm(config: &OscillatorConfig) -> f64 {
    let alpha = config.alpha();
    let peak = info_density_profile(alpha, 0.0);
    let target = 0.5 * peak;
    // the density is even in y and decreasing past its (single) shoulder
    let mut lo = 0.0;
    let mut hi = 8.0 / alpha;
    debug_assert!(info_density_profile(alpha, hi) < target);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if info_density_profile(alpha, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo + hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn cfg(alpha: f64) -> OscillatorConfig {
        OscillatorConfig::with_alpha(alpha).unwrap()
    }

    // Closed-form total from the Gaussian moments ∫e^(−u²) = √π and
    // ∫u² e^(−u²) = √π/2.
    fn total_information_oracle() -> f64 {
        (1.0 + PI.sqrt().ln()) / 2.0 + 0.25
    }

    #[test]
    fn partition_probability_whole_line() {
        let c = cfg(1.3);
        let p = partition_probability(&c, 0.4, -60.0, 60.0).unwrap();
        assert_abs_diff_eq!(p, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn partition_probability_one_sigma_window() {
        // α=1, t=0: y ∈ [−1, 1] has probability erf(1).
        let c = cfg(1.0);
        let p = partition_probability(&c, 0.0, 0.0, 2.0).unwrap();
        // series oracle value for erf(1)
        assert_abs_diff_eq!(p, 0.842_700_792_949_714_9, epsilon = 1e-14);
        assert_abs_diff_eq!(p, 0.842701, epsilon = 1e-6);
    }

    #[test]
    fn partition_probability_degenerate_and_reversed() {
        let c = cfg(2.0);
        let p = partition_probability(&c, 0.0, 0.5, 0.5 + 1e-300).unwrap();
        assert!(p.abs() < 1e-15);
        assert!(partition_probability(&c, 0.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn discrete_entropy_two_equal_cells() {
        // symmetric split at the trajectory: two cells of probability ½ each
        let c = cfg(1.7);
        let t = 0.9;
        let center = c.classical_trajectory(t);
        let partition =
            Partition1D::new(vec![center - 50.0, center, center + 50.0]).unwrap();
        assert_abs_diff_eq!(discrete_entropy(&c, t, &partition), 2.0_f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn discrete_entropy_single_covering_cell() {
        let c = cfg(1.0);
        let partition = Partition1D::new(vec![-60.0, 60.0]).unwrap();
        assert_abs_diff_eq!(discrete_entropy(&c, 0.0, &partition), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn discrete_entropy_refines_to_differential_entropy() {
        let c = cfg(1.0);
        let h_diff = differential_entropy(&c);
        assert_abs_diff_eq!(h_diff, 1.072365, epsilon = 1e-6);
        // H_discrete + ln Δ → h as the cells refine
        for &cells in &[512usize, 4096] {
            let center = c.classical_trajectory(0.0);
            let partition = Partition1D::uniform(center - 6.0, center + 6.0, cells).unwrap();
            let width = 12.0 / cells as f64;
            let h = discrete_entropy(&c, 0.0, &partition) + width.ln();
            assert_abs_diff_eq!(h, h_diff, epsilon = 1e-3);
        }
    }

    #[test]
    fn info_density_closed_form_values() {
        let c1 = cfg(1.0);
        let on = DimensionlessCoordinate::new(1.0, 0.0);
        let peak1 = (1.0 + PI.sqrt().ln()) / (2.0 * PI.sqrt());
        assert_abs_diff_eq!(info_density(&c1, on), peak1, epsilon = 1e-15);
        assert_abs_diff_eq!(info_density(&c1, on), 0.443556, epsilon = 1e-6);

        let c10 = cfg(10.0);
        assert_abs_diff_eq!(info_density(&c10, on), 10.0 * peak1, epsilon = 1e-13);
        assert_abs_diff_eq!(info_density(&c10, on), 4.435563, epsilon = 1e-6);

        // Gaussian decay
        let far = DimensionlessCoordinate::new(26.0, 0.0);
        assert!(info_density(&c1, far) < 1e-250);
    }

    #[test]
    fn s6_variant_is_twice_canonical() {
        let c = cfg(2.0);
        for &(xt, t) in &[(0.3, 0.0), (1.0, 0.7), (-2.0, 2.1)] {
            let coord = DimensionlessCoordinate::new(xt, t);
            assert_eq!(info_density_s6_variant(&c, coord), 2.0 * info_density(&c, coord));
        }
        let c1 = cfg(1.0);
        assert_abs_diff_eq!(
            info_density_s6_variant(&c1, DimensionlessCoordinate::new(1.0, 0.0)),
            0.887113,
            epsilon = 1e-6
        );
    }

    #[test]
    fn total_information_conserved_in_alpha_and_time() {
        let expected = total_information_oracle();
        assert_abs_diff_eq!(expected, 1.036182, epsilon = 1e-6);
        for &alpha in &[0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
            let c = cfg(alpha);
            assert_abs_diff_eq!(total_information(&c).unwrap(), expected, epsilon = 1e-10);
        }
        let c3 = cfg(3.0);
        let i0 = total_information_at(&c3, 0.0).unwrap();
        let i1 = total_information_at(&c3, PI / 3.0).unwrap();
        assert_abs_diff_eq!(i0, i1, epsilon = 1e-10);
        assert_abs_diff_eq!(i0, expected, epsilon = 1e-10);
    }

    #[test]
    fn differential_entropy_reference_points() {
        assert_abs_diff_eq!(differential_entropy(&cfg(1.0)), 1.072365, epsilon = 1e-6);
        // zero crossing at α = √(πe)
        let root = (PI * std::f64::consts::E).sqrt();
        assert_abs_diff_eq!(differential_entropy(&cfg(root)), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            differential_entropy(&cfg(10.0)),
            1.072365 - 10.0_f64.ln(),
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(differential_entropy(&cfg(10.0)), -1.230220, epsilon = 1e-6);
    }

    #[test]
    fn density_curve_peak_and_positivity() {
        let grid = Grid1D::new(-4.0, 6.0, 2001).unwrap();
        let curve = density_curve(&cfg(1.0), 0.0, &grid);
        assert_abs_diff_eq!(curve.peak(), 0.443556, epsilon = 1e-6);
        let curve10 = density_curve(&cfg(10.0), 0.0, &grid);
        assert!(curve10.samples.iter().all(|&(_, d)| d >= 0.0));
    }

    #[test]
    fn fwhm_scales_as_inverse_alpha() {
        // solve e^(−u²)(c + u²) = c/2 once by bisection, then check 1/α scaling
        let c = 1.0 + 0.5 * PI.ln();
        let (mut lo, mut hi) = (0.0_f64, 6.0_f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (-mid * mid).exp() * (c + mid * mid) > 0.5 * c {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let u_half = 0.5 * (lo + hi);
        for &alpha in &[1.0, 3.0, 10.0, 20.0] {
            let fwhm = density_fwhm(&cfg(alpha));
            assert_relative_eq!(fwhm * alpha, 2.0 * u_half, max_relative = 1e-10);
        }
    }

    #[test]
    fn symmetry_in_displacement() {
        let mut rng = rand::rngs::SmallRng::seed_from_u64(0x5eed);
        for _ in 0..1_000_000 {
            let alpha: f64 = rng.gen_range(0.5..20.0);
            let y: f64 = rng.gen_range(-10.0..10.0);
            assert_eq!(
                info_density_profile(alpha, y),
                info_density_profile(alpha, -y)
            );
        }
    }

    #[test]
    fn riemann_sum_of_s6_variant_converges_to_twice_total() {
        let c = cfg(1.0);
        let expected = 2.0 * total_information_oracle();
        let t = 0.0;
        let center = c.classical_trajectory(t);
        let mut last = f64::NAN;
        for &cells in &[256usize, 1024, 4096, 16384] {
            let lo = center - 8.0;
            let hi = center + 8.0;
            let width = (hi - lo) / cells as f64;
            // midpoint Riemann sum of the S6-variant density
            let sum: f64 = (0..cells)
                .map(|i| {
                    let xt = lo + (i as f64 + 0.5) * width;
                    info_density_s6_variant(&c, DimensionlessCoordinate::new(xt, t)) * width
                })
                .sum();
            last = sum;
        }
        assert_abs_diff_eq!(last, expected, epsilon = 1e-6);
    }

    proptest! {
        #[test]
        fn partition_sum_telescopes(
            seed in 0u64..1000,
            cells in 2usize..64,
            t in 0.0f64..6.0,
            alpha in 0.5f64..10.0,
        ) {
            let c = cfg(alpha);
            let mut rng = rand::rngs::SmallRng::seed_from_u64(seed);
            let lo = rng.gen_range(-6.0..-1.0);
            let hi = rng.gen_range(1.0..6.0);
            let mut pts: Vec<f64> = (0..cells - 1).map(|_| rng.gen_range(lo..hi)).collect();
            pts.push(lo);
            pts.push(hi);
            pts.sort_by(f64::total_cmp);
            pts.dedup();
            if pts.len() < 2 { return Ok(()); }
            let partition = Partition1D::new(pts.clone()).unwrap();
            let total: f64 = partition
                .cells()
                .map(|(a, b)| partition_probability(&c, t, a, b).unwrap())
                .sum();
            let union = partition_probability(&c, t, pts[0], *pts.last().unwrap()).unwrap();
            prop_assert!((total - union).abs() < 1e-12);
        }

        #[test]
        fn probabilities_stay_in_unit_interval(
            a in -8.0f64..8.0,
            w in 1e-6f64..8.0,
            t in 0.0f64..6.0,
            alpha in 0.5f64..20.0,
        ) {
            let c = cfg(alpha);
            let p = partition_probability(&c, t, a, a + w).unwrap();
            prop_assert!((0.0..=1.0).contains(&p));
        }
    }
}
