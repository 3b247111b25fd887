//! Physical constants, Planck scales and the natural-unit convention.
//!
//! Values are CODATA 2018. Since the 2019 SI redefinition `h`, `e`, `k_B`
//! and `c` are exact; only `G` carries an uncertainty.
//!
//! | symbol | value                  | unit        |
//! |--------|------------------------|-------------|
//! | h      | 6.626 070 15 e-34      | J s         |
//! | hbar   | h / 2 pi               | J s         |
//! | k_B    | 1.380 649 e-23         | J / K       |
//! | G      | 6.674 30 e-11          | m^3/(kg s^2)|
//! | c      | 299 792 458            | m / s       |
//! | e      | 1.602 176 634 e-19     | C           |
//! | Phi_0  | h / 2e                 | Wb          |

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstantsError {
    #[error("physical constant `{name}` must be strictly positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },
    #[error("natural-unit length scale must be positive and finite (got {0})")]
    BadScale(f64),
}

/// Fundamental constants in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub h: f64,
    pub hbar: f64,
    pub k_b: f64,
    pub g: f64,
    pub c: f64,
    pub e_charge: f64,
    pub flux_quantum: f64,
}

/// Standard acceleration of gravity, m/s^2 (used by the pendulum model).
pub const STANDARD_GRAVITY: f64 = 9.80665;

/// CODATA 2018 recommended values.
pub const CODATA_2018: PhysicalConstants = PhysicalConstants::codata2018();

impl PhysicalConstants {
    pub const fn codata2018() -> Self {
        let h = 6.626_070_15e-34;
        let e = 1.602_176_634e-19;
        Self {
            h,
            hbar: h / (2.0 * PI),
            k_b: 1.380_649e-23,
            g: 6.674_30e-11,
            c: 299_792_458.0,
            e_charge: e,
            flux_quantum: h / (2.0 * e),
        }
    }

    /// Builds a constant set from the independent values; `hbar` and the flux
    /// quantum are derived.
    pub fn new(h: f64, k_b: f64, g: f64, c: f64, e_charge: f64) -> Result<Self, ConstantsError> {
        for (name, value) in [("h", h), ("k_B", k_b), ("G", g), ("c", c), ("e", e_charge)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ConstantsError::NonPositive { name, value });
            }
        }
        Ok(Self { h, hbar: h / (2.0 * PI), k_b, g, c, e_charge, flux_quantum: h / (2.0 * e_charge) })
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        CODATA_2018
    }
}

/// Planck mass, length and energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanckScales {
    pub mass_kg: f64,
    pub length_m: f64,
    pub energy_j: f64,
    pub energy_gev: f64,
}

pub fn planck_scales(consts: &PhysicalConstants) -> PlanckScales {
    let PhysicalConstants { hbar, g, c, e_charge, .. } = *consts;
    let mass_kg = (hbar * c / g).sqrt();
    let energy_j = (hbar * c.powi(5) / g).sqrt();
    PlanckScales { mass_kg, length_m: (hbar * g / c.powi(3)).sqrt(), energy_j, energy_gev: energy_j / (e_charge * 1e9) }
}

/// Exponents of a dimensional quantity in (length, time, mass, temperature).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Dimension {
    pub length: i32,
    pub time: i32,
    pub mass: i32,
    pub temperature: i32,
}

impl Dimension {
    pub const NONE: Dimension = Dimension::new(0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(1, 0, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 1, 0, 0);
    pub const RATE: Dimension = Dimension::new(0, -1, 0, 0);
    pub const VELOCITY: Dimension = Dimension::new(1, -1, 0, 0);
    pub const MASS: Dimension = Dimension::new(0, 0, 1, 0);
    pub const ENERGY: Dimension = Dimension::new(2, -2, 1, 0);
    pub const TEMPERATURE: Dimension = Dimension::new(0, 0, 0, 1);

    pub const fn new(length: i32, time: i32, mass: i32, temperature: i32) -> Self {
        Self { length, time, mass, temperature }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitMode {
    Si,
    /// `hbar = c = k_B = 1`, lengths measured in units of a reference length.
    Natural,
}

/// Conversion between SI and `hbar = c = k_B = 1` units.
///
/// Natural units leave one scale free; it is fixed by `length_scale` (metres).
/// A length `L` becomes `L / length_scale`, a time `t` becomes
/// `c t / length_scale`, a mass `m` becomes `m c length_scale / hbar` and a
/// temperature `T` becomes `k_B T length_scale / (hbar c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    pub mode: UnitMode,
    length_scale: f64,
    consts: PhysicalConstants,
}

impl UnitSystem {
    pub fn si() -> Self {
        Self { mode: UnitMode::Si, length_scale: 1.0, consts: CODATA_2018 }
    }

    pub fn natural(length_scale: f64, consts: PhysicalConstants) -> Result<Self, ConstantsError> {
        if !(length_scale > 0.0 && length_scale.is_finite()) {
            return Err(ConstantsError::BadScale(length_scale));
        }
        Ok(Self { mode: UnitMode::Natural, length_scale, consts })
    }

    pub fn length_scale(&self) -> f64 {
        self.length_scale
    }

    /// SI value of one unit of `dim` in this system.
    pub fn unit_in_si(&self, dim: Dimension) -> f64 {
        match self.mode {
            UnitMode::Si => 1.0,
            UnitMode::Natural => {
                let l = self.length_scale;
                let PhysicalConstants { hbar, c, k_b, .. } = self.consts;
                l.powi(dim.length)
                    * (l / c).powi(dim.time)
                    * (hbar / (c * l)).powi(dim.mass)
                    * (hbar * c / (k_b * l)).powi(dim.temperature)
            }
        }
    }

    pub fn from_si(&self, value: f64, dim: Dimension) -> f64 {
        value / self.unit_in_si(dim)
    }

    pub fn to_si(&self, value: f64, dim: Dimension) -> f64 {
        value * self.unit_in_si(dim)
    }
}
