//! Vacuum amplification as Bogoliubov transformations.
//!
//! Every process modelled here (parametric amplification, the Unruh effect,
//! Hawking radiation, the dynamical Casimir effect and its superconducting
//! circuit analogues) ends in the same record: a pair of coefficients
//! `(alpha, beta)` with `|alpha|^2 - |beta|^2 = 1`, where `|beta|^2` is the
//! number of quanta produced from the input vacuum.
//!
//! Module map:
//!
//! * [`constants`]: CODATA 2018 constants, Planck scales, natural units.
//! * [`symplectic`]: Bogoliubov maps, squeezed-state statistics.
//! * [`modeode`]: time-dependent oscillator mode functions and extraction
//!   of Bogoliubov coefficients from an integrated trajectory.
//! * [`horizon`]: Rindler kinematics, chirped waveforms and their spectra,
//!   Schwarzschild thermodynamics.
//! * [`dce`]: Moore-equation solver and cavity Bogoliubov matrices
//!   (natural units, `c = 1`).
//! * [`squid`]: dc-SQUID array analogue horizon.
//!
//! All public APIs take SI quantities except [`dce`], which documents its
//! natural-unit convention at the boundary.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod dce;
pub mod horizon;
pub mod modeode;
pub mod numerics;
pub mod squid;
pub mod symplectic;

pub use num_complex::Complex64 as C64;
