//! Guided TM modes of a symmetric dielectric slab in vacuum.
//!
//! The fundamental TM₀ mode is the superposition of two plane waves at
//! ±α to the slab plane, bouncing by total internal reflection. Its
//! effective index `n cos α` is what the guided-mode beating formula needs.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::units::Length;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabGeometry {
    pub refractive_index: f64,
    pub thickness: Length,
    pub vacuum_wavelength: Length,
}

impl SlabGeometry {
    pub fn new(refractive_index: f64, thickness: Length, vacuum_wavelength: Length) -> Result<Self> {
        if !(refractive_index > 1.0) || !refractive_index.is_finite() {
            return Err(Error::Domain(format!(
                "slab index must exceed the vacuum cladding (n > 1), got {refractive_index}"
            )));
        }
        if !(thickness.meters() > 0.0) || !thickness.is_finite() {
            return Err(Error::InvalidInput(format!(
                "slab thickness must be > 0, got {} Å",
                thickness.angstrom()
            )));
        }
        if !(vacuum_wavelength.meters() > 0.0) || !vacuum_wavelength.is_finite() {
            return Err(Error::InvalidInput(format!(
                "wavelength must be > 0, got {} Å",
                vacuum_wavelength.angstrom()
            )));
        }
        Ok(SlabGeometry {
            refractive_index,
            thickness,
            vacuum_wavelength,
        })
    }

    /// Convenience constructor in Å.
    pub fn from_angstrom(refractive_index: f64, thickness: f64, wavelength: f64) -> Result<Self> {
        Self::new(
            refractive_index,
            Length::from_angstrom(thickness),
            Length::from_angstrom(wavelength),
        )
    }

    fn vacuum_wavenumber(&self) -> f64 {
        2.0 * PI / self.vacuum_wavelength.meters()
    }
}

/// A guided mode, described through its plane-wave decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSolution {
    pub mode_order: u32,
    pub refractive_index: f64,
    /// n cos α.
    pub effective_index: f64,
    /// α, angle of the constituent plane waves to the slab plane.
    pub tilt_angle: f64,
    /// κ = k0 √(n² − n_eff²), 1/m.
    pub transverse_wavenumber: f64,
    /// γ = k0 √(n_eff² − 1), 1/m.
    pub decay_constant: f64,
}

impl ModeSolution {
    /// Builds a mode description from a known effective index.
    ///
    /// `effective_index == refractive_index` is accepted and describes the
    /// untilted plane wave (α = 0).
    pub fn from_effective_index(
        refractive_index: f64,
        effective_index: f64,
        vacuum_wavelength: Length,
    ) -> Result<Self> {
        if !(refractive_index >= 1.0) {
            return Err(Error::InvalidInput(format!(
                "refractive index must be >= 1, got {refractive_index}"
            )));
        }
        if !(effective_index > 1.0) {
            return Err(Error::GuidanceViolation { effective_index });
        }
        if effective_index > refractive_index {
            return Err(Error::Domain(format!(
                "effective index {effective_index} exceeds the slab index {refractive_index}"
            )));
        }
        let k0 = 2.0 * PI / vacuum_wavelength.meters();
        let cos_alpha = (effective_index / refractive_index).min(1.0);
        Ok(ModeSolution {
            mode_order: 0,
            refractive_index,
            effective_index,
            tilt_angle: cos_alpha.acos(),
            transverse_wavenumber: k0 * (refractive_index.powi(2) - effective_index.powi(2)).sqrt(),
            decay_constant: k0 * (effective_index.powi(2) - 1.0).sqrt(),
        })
    }

    /// Plane wave inside the medium tilted by `alpha` (radians).
    pub fn from_tilt_angle(refractive_index: f64, alpha: f64, vacuum_wavelength: Length) -> Result<Self> {
        let mut mode = Self::from_effective_index(
            refractive_index,
            refractive_index * alpha.cos(),
            vacuum_wavelength,
        )?;
        mode.tilt_angle = alpha;
        Ok(mode)
    }

    pub fn cos_alpha(&self) -> f64 {
        self.effective_index / self.refractive_index
    }
}

/// Thickness above which the TM₁ mode is guided, λp / (2 √(n² − 1)).
pub fn tm1_cutoff_thickness(refractive_index: f64, vacuum_wavelength: Length) -> Result<Length> {
    if !(refractive_index > 1.0) {
        return Err(Error::Domain(format!(
            "no total internal reflection for n = {refractive_index} <= 1"
        )));
    }
    Ok(vacuum_wavelength / (2.0 * (refractive_index.powi(2) - 1.0).sqrt()))
}

/// Number of guided TM modes: 1 + floor(d / d_cutoff(TM₁)).
pub fn mode_count(geom: &SlabGeometry) -> usize {
    // SlabGeometry guarantees n > 1
    let cutoff = tm1_cutoff_thickness(geom.refractive_index, geom.vacuum_wavelength)
        .expect("validated geometry");
    1 + (geom.thickness / cutoff).floor() as usize
}

/// TM₀ dispersion residual tan(κ d / 2) − n² γ / κ at a trial effective index.
pub fn tm0_dispersion_residual(geom: &SlabGeometry, effective_index: f64) -> f64 {
    let k0 = geom.vacuum_wavenumber();
    let n2 = geom.refractive_index.powi(2);
    let kappa = k0 * (n2 - effective_index.powi(2)).sqrt();
    let gamma = k0 * (effective_index.powi(2) - 1.0).sqrt();
    (0.5 * kappa * geom.thickness.meters()).tan() - n2 * gamma / kappa
}

/// Solves the symmetric-slab TM₀ dispersion relation for the effective index.
pub fn solve_tm0_mode(geom: &SlabGeometry) -> Result<ModeSolution> {
    let n = geom.refractive_index;
    let k0 = geom.vacuum_wavenumber();
    let d = geom.thickness.meters();
    // Bisect on q = γ/k0 rather than n_eff: thin or weakly guiding films put
    // n_eff − 1 far below the resolution of n_eff itself.
    let q_max = (n * n - 1.0).sqrt();
    let residual = |q: f64| {
        let kappa = k0 * (q_max * q_max - q * q).sqrt();
        (0.5 * kappa * d).tan() - n * n * k0 * q / kappa
    };
    // Above TM₀'s branch the phase κd/2 crosses π/2 and tan flips sign; keep the
    // bracket on the fundamental branch, where κd/2 < π/2.
    let mut lo = 0.0;
    let branch_floor = q_max * q_max - (PI / (k0 * d)).powi(2);
    if branch_floor > 0.0 {
        // step off the tan pole until rounding no longer puts us past it
        let floor = branch_floor.sqrt();
        let mut step = 1e-15 * q_max;
        lo = floor + step;
        while !(residual(lo) > 0.0) && step < 1e-6 * q_max {
            step *= 4.0;
            lo = floor + step;
        }
    }
    let hi = q_max * (1.0 - 1e-15);
    // Residual is positive at lo and tends to −∞ as κ → 0.
    let q = bisect(residual, lo, hi, 0.0, 400)?;
    let n_eff = (1.0 + q * q).sqrt();
    let mut mode = ModeSolution::from_effective_index(n, n_eff, geom.vacuum_wavelength)?;
    mode.mode_order = 0;
    Ok(mode)
}
