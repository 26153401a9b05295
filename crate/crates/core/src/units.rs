//! Physical constants and unit conversions.
//!
//! Everything inside the crate is coherent SI. Laboratory units
//! (keV, eV, Å, cm, µA) only appear at constructors and readers.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Fundamental constants (CODATA 2018 exact / recommended values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Electron rest energy in keV.
    pub electron_rest_energy_kev: f64,
    /// Reduced Planck constant in J·s.
    pub reduced_planck: f64,
    /// Speed of light in m/s.
    pub light_speed: f64,
    /// Elementary charge in C.
    pub elementary_charge: f64,
}

pub const CODATA: PhysicalConstants = PhysicalConstants {
    electron_rest_energy_kev: 510.998_950_00,
    reduced_planck: 1.054_571_817e-34,
    light_speed: 299_792_458.0,
    elementary_charge: 1.602_176_634e-19,
};

impl PhysicalConstants {
    /// Electron rest energy in joules.
    pub fn electron_rest_energy(&self) -> f64 {
        self.electron_rest_energy_kev * KEV
    }
}

/// One electron-volt in joules.
pub const EV: f64 = 1.602_176_634e-19;
/// One kilo-electron-volt in joules.
pub const KEV: f64 = 1.0e3 * EV;
pub const ANGSTROM: f64 = 1.0e-10;
pub const CENTIMETER: f64 = 1.0e-2;
pub const MICROAMPERE: f64 = 1.0e-6;

/// A length, stored in metres.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Length(f64);

impl Length {
    pub const ZERO: Length = Length(0.0);

    pub const fn from_meters(m: f64) -> Self {
        Length(m)
    }

    pub fn from_cm(cm: f64) -> Self {
        Length(cm * CENTIMETER)
    }

    pub fn from_angstrom(a: f64) -> Self {
        Length(a * ANGSTROM)
    }

    pub fn meters(self) -> f64 {
        self.0
    }

    pub fn cm(self) -> f64 {
        self.0 / CENTIMETER
    }

    pub fn angstrom(self) -> f64 {
        self.0 / ANGSTROM
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl Add for Length {
    type Output = Length;
    fn add(self, rhs: Length) -> Length {
        Length(self.0 + rhs.0)
    }
}

impl Sub for Length {
    type Output = Length;
    fn sub(self, rhs: Length) -> Length {
        Length(self.0 - rhs.0)
    }
}

impl Mul<f64> for Length {
    type Output = Length;
    fn mul(self, rhs: f64) -> Length {
        Length(self.0 * rhs)
    }
}

impl Div<f64> for Length {
    type Output = Length;
    fn div(self, rhs: f64) -> Length {
        Length(self.0 / rhs)
    }
}

impl Div for Length {
    type Output = f64;
    fn div(self, rhs: Length) -> f64 {
        self.0 / rhs.0
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.abs() < 1e-6 {
            write!(f, "{:.6} Å", self.angstrom())
        } else {
            write!(f, "{:.6} cm", self.cm())
        }
    }
}
