//! Photon-transport interference model.
//!
//! Two beams of metastable electrons (energies E0 and E0 + ħω) carry
//! captured laser photons to the target, where the released light fields
//! interfere with amplitudes set by the beam currents.

use std::f64::consts::PI;

use crate::beating::{BeatingLaw, FocusScheme, GeometryScenario};
use crate::error::{Error, Result};
use crate::kinematics::{lambda_b0, BeamParameters, LaserField};
use crate::slab_optics::ModeSolution;
use crate::units::{Length, CODATA, EV, MICROAMPERE};

/// Phase difference φ0 − φ1 of the two released light fields at the target.
///
/// Δφ = (4π z / λ_b0) {1 − (v0/c)² [1 − (n cos α)² r/(z + r)]}
pub fn delta_phi(
    scenario: &GeometryScenario,
    beam: &BeamParameters,
    laser: &LaserField,
    mode: &ModeSolution,
) -> f64 {
    delta_phi_at(
        scenario.z,
        scenario.ratio(),
        lambda_b0(beam, laser),
        beam.beta(),
        mode.effective_index,
    )
}

fn delta_phi_at(z: Length, u: f64, lambda_b0: Length, beta: f64, n_eff: f64) -> f64 {
    let v2 = beta * beta;
    4.0 * PI * z.meters() / lambda_b0.meters() * (1.0 - v2 * (1.0 - n_eff * n_eff * u))
}

/// Superposition a e^{iφ0} + b e^{iφ1} at one target point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceField {
    pub amplitude_elastic: f64,
    pub amplitude_sideband: f64,
    pub phase_difference: f64,
}

impl InterferenceField {
    pub fn new(a: f64, b: f64, phase_difference: f64) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "amplitudes must be >= 0, got a = {a}, b = {b}"
            )));
        }
        Ok(InterferenceField {
            amplitude_elastic: a,
            amplitude_sideband: b,
            phase_difference,
        })
    }

    /// I = a² + b² + 2ab cos Δφ.
    pub fn intensity(&self) -> f64 {
        let (a, b) = (self.amplitude_elastic, self.amplitude_sideband);
        a * a + b * b + 2.0 * a * b * self.phase_difference.cos()
    }

    /// [(a − b)², (a + b)²].
    pub fn intensity_bounds(&self) -> (f64, f64) {
        let (a, b) = (self.amplitude_elastic, self.amplitude_sideband);
        ((a - b).powi(2), (a + b).powi(2))
    }
}

pub fn intensity(field: &InterferenceField) -> f64 {
    field.intensity()
}

/// Fringe visibility 2ab / (a² + b²).
pub fn modulation_depth(a: f64, b: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "amplitudes must be >= 0, got a = {a}, b = {b}"
        )));
    }
    let norm = a * a + b * b;
    if norm == 0.0 {
        return Err(Error::InvalidInput(
            "modulation depth is undefined for a = b = 0".into(),
        ));
    }
    Ok(2.0 * a * b / norm)
}

/// Both amplitude ratios b/a giving fringe visibility `depth`.
///
/// Roots of depth·x² − 2x + depth = 0; they are reciprocal.
pub fn amplitude_ratios_for_depth(depth: f64) -> Result<(f64, f64)> {
    if !(depth > 0.0 && depth <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "modulation depth must lie in (0, 1], got {depth}"
        )));
    }
    let disc = (1.0 - depth * depth).sqrt();
    // small root via the product of roots (= 1) for accuracy at depth → 0
    let large = (1.0 + disc) / depth;
    Ok((1.0 / large, large))
}

/// Maps beam currents onto light amplitudes, a = √(κ J).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeLaw {
    pub kappa: f64,
}

impl Default for AmplitudeLaw {
    fn default() -> Self {
        AmplitudeLaw { kappa: 1.0 }
    }
}

impl AmplitudeLaw {
    pub fn amplitudes(&self, elastic_current: f64, sideband_current: f64) -> Result<(f64, f64)> {
        if !(elastic_current >= 0.0 && sideband_current >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "currents must be >= 0, got {elastic_current} and {sideband_current}"
            )));
        }
        if !(self.kappa > 0.0) {
            return Err(Error::InvalidInput(format!(
                "amplitude constant κ must be > 0, got {}",
                self.kappa
            )));
        }
        Ok((
            (self.kappa * elastic_current).sqrt(),
            (self.kappa * sideband_current).sqrt(),
        ))
    }
}

/// Amplitudes for the two metastable beams with the default κ = 1.
pub fn amplitudes_from_currents(elastic_current: f64, sideband_current: f64) -> Result<(f64, f64)> {
    AmplitudeLaw::default().amplitudes(elastic_current, sideband_current)
}

/// Light power delivered by electrons that carry captured photons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportBudget {
    /// Beam current, A.
    pub beam_current: f64,
    pub carrying_fraction: f64,
    /// Photon energy, J.
    pub photon_energy: f64,
}

impl TransportBudget {
    pub fn new(current_ua: f64, carrying_fraction: f64, photon_energy_ev: f64) -> Result<Self> {
        if !(current_ua >= 0.0) {
            return Err(Error::InvalidInput(format!("current must be >= 0 µA, got {current_ua}")));
        }
        if !(0.0..=1.0).contains(&carrying_fraction) {
            return Err(Error::InvalidInput(format!(
                "carrying fraction must lie in [0, 1], got {carrying_fraction}"
            )));
        }
        if !(photon_energy_ev >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "photon energy must be >= 0 eV, got {photon_energy_ev}"
            )));
        }
        Ok(TransportBudget {
            beam_current: current_ua * MICROAMPERE,
            carrying_fraction,
            photon_energy: photon_energy_ev * EV,
        })
    }

    /// (I/e) · fraction · ħω, in W.
    pub fn transported_power(&self) -> f64 {
        self.beam_current / CODATA.elementary_charge * self.carrying_fraction * self.photon_energy
    }

    /// Fraction of electrons needed to deliver `power` watts.
    pub fn fraction_for_power(&self, power: f64) -> Result<f64> {
        let full = self.beam_current / CODATA.elementary_charge * self.photon_energy;
        if !(full > 0.0) {
            return Err(Error::InvalidInput("beam delivers no photons".into()));
        }
        let f = power / full;
        if !(0.0..=1.0).contains(&f) {
            return Err(Error::Infeasible {
                quantity: "transported power (W)",
                requested: power,
                low: 0.0,
                high: full,
            });
        }
        Ok(f)
    }
}

pub fn transported_power(current_ua: f64, carrying_fraction: f64, photon_energy_ev: f64) -> Result<f64> {
    Ok(TransportBudget::new(current_ua, carrying_fraction, photon_energy_ev)?.transported_power())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntensityLaw {
    /// sin²χ, the quantum models' initial phase.
    Sin2,
    /// cos²χ.
    Cos2,
    /// Two-beam photon interference.
    Phenomenological,
}

/// One sample of the three candidate intensity laws, each normalized to unit maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint {
    pub z: Length,
    pub sin2: f64,
    pub cos2: f64,
    pub phenomenological: f64,
}

impl ProfilePoint {
    pub fn get(&self, law: IntensityLaw) -> f64 {
        match law {
            IntensityLaw::Sin2 => self.sin2,
            IntensityLaw::Cos2 => self.cos2,
            IntensityLaw::Phenomenological => self.phenomenological,
        }
    }
}

/// Evaluates sin²χ, cos²χ and the interference intensity over a z grid.
pub fn intensity_profile(
    grid: &[Length],
    scheme: &FocusScheme,
    law: &BeatingLaw,
    beta: f64,
    amplitudes: (f64, f64),
) -> Result<Vec<ProfilePoint>> {
    if grid.is_empty() {
        return Err(Error::InvalidInput("intensity profile needs a non-empty z grid".into()));
    }
    if grid[0].meters() < 0.0 || grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidInput(
            "z grid must be non-negative and strictly increasing".into(),
        ));
    }
    scheme.validate()?;
    let (a, b) = amplitudes;
    let mut points: Vec<ProfilePoint> = grid
        .iter()
        .map(|&z| {
            let chi = law.chi_for(scheme, z);
            let dphi = delta_phi_at(z, scheme.ratio_at(z), law.lambda_b0(), beta, law.effective_index());
            let field = InterferenceField::new(a, b, dphi)?;
            Ok(ProfilePoint {
                z,
                sin2: chi.sin().powi(2),
                cos2: chi.cos().powi(2),
                phenomenological: field.intensity(),
            })
        })
        .collect::<Result<_>>()?;

    let max_of = |f: fn(&ProfilePoint) -> f64, pts: &[ProfilePoint]| {
        pts.iter().map(f).fold(0.0f64, f64::max)
    };
    let (ms, mc, mp) = (
        max_of(|p| p.sin2, &points),
        max_of(|p| p.cos2, &points),
        max_of(|p| p.phenomenological, &points),
    );
    for p in &mut points {
        if ms > 0.0 {
            p.sin2 /= ms;
        }
        if mc > 0.0 {
            p.cos2 /= mc;
        }
        if mp > 0.0 {
            p.phenomenological /= mp;
        }
    }
    Ok(points)
}
