//! Information-theoretic analysis of a coherent oscillator state.
//!
//! The library computes, for the minimum-uncertainty Gaussian wave packet of
//! a harmonic oscillator whose center follows the classical trajectory
//! `x = a cos ωt`:
//!
//! * the spatial Shannon information density and its conserved total
//!   ([`spatial`]),
//! * the number-state (Poisson) Shannon information and its derivative with
//!   respect to the mean occupation ([`number`]),
//! * the energy density derived from the Schrödinger Lagrangian and the
//!   energy-per-information ratio ([`energy`]),
//! * finite-difference residuals verifying that the substitution
//!   `S = (ħ/i) ln Ψ` turns a Hamilton-Jacobi equation with an imaginary
//!   diffusion term `ν ∇²S` into the Schrödinger equation, together with
//!   norm-preserving Crank-Nicolson time evolution ([`pde`]).
//!
//! Everything is parameterized by [`OscillatorConfig`]; the single control
//! parameter in natural units (`ħ = m = ω = 1`) is `α = a √(mω/ħ)`, which
//! separates the quantum regime (`α ~ 1`) from the classical one (`α ≫ 1`).
//!
//! The `oscinfo` binary exposes the subcommands `density`, `surface`,
//! `number`, `energy`, `verify` and `evolve`; see [`report`] for the CSV/SVG
//! writers and the check suite behind `verify`. Runnable demonstrations of
//! each capability live in `examples/`.

pub mod energy;
mod error;
pub mod number;
pub mod oscillator;
pub mod pde;
pub mod quad;
pub mod report;
pub mod spatial;
pub mod special;

pub use error::{Error, Result};
pub use oscillator::{
    AnalyticField, CoherentState, DimensionlessCoordinate, Grid1D, OscillatorConfig,
    SampledComplexField,
};
