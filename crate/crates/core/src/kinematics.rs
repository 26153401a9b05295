//! Relativistic electron and photon kinematics.
//!
//! Covers the free-electron mass shell for the elastic channel and the two
//! one-photon sidebands (n = ±1), the beating scale `λ_b0`, the optimum slab
//! thickness `d0` and the one-photon exchange probability behind the
//! thickness factor of the modulated density.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::units::{Length, CODATA, EV, KEV, MICROAMPERE};

/// Coupling amplitude for α-quartz under a 10⁷ W/cm² argon-ion laser.
pub const QUARTZ_COUPLING_BETA: f64 = 0.35;

/// Free electron state of the incident beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParameters {
    total_energy: f64,
    momentum: f64,
    beta: f64,
    gamma: f64,
    current: Option<f64>,
}

impl BeamParameters {
    /// Builds a beam from its kinetic energy in keV.
    pub fn from_kinetic_energy_kev(kinetic_kev: f64) -> Result<Self> {
        if !(kinetic_kev >= 0.0) || !kinetic_kev.is_finite() {
            return Err(Error::InvalidInput(format!(
                "kinetic energy must be a finite value >= 0 keV, got {kinetic_kev}"
            )));
        }
        let rest = CODATA.electron_rest_energy();
        let kinetic = kinetic_kev * KEV;
        let total = rest + kinetic;
        // p c = sqrt(T (T + 2 mc^2)) avoids the E^2 - (mc^2)^2 cancellation at low T.
        let pc = (kinetic * (kinetic + 2.0 * rest)).sqrt();
        Ok(BeamParameters {
            total_energy: total,
            momentum: pc / CODATA.light_speed,
            beta: pc / total,
            gamma: total / rest,
            current: None,
        })
    }

    /// Attaches a beam current in µA.
    pub fn with_current_ua(mut self, current_ua: f64) -> Result<Self> {
        if !(current_ua >= 0.0) || !current_ua.is_finite() {
            return Err(Error::InvalidInput(format!(
                "beam current must be >= 0 µA, got {current_ua}"
            )));
        }
        self.current = Some(current_ua * MICROAMPERE);
        Ok(self)
    }

    pub fn kinetic_energy_kev(&self) -> f64 {
        (self.total_energy - CODATA.electron_rest_energy()) / KEV
    }

    /// Total energy E0 in joules.
    pub fn total_energy(&self) -> f64 {
        self.total_energy
    }

    pub fn total_energy_kev(&self) -> f64 {
        self.total_energy / KEV
    }

    /// Momentum p0 in kg·m/s.
    pub fn momentum(&self) -> f64 {
        self.momentum
    }

    /// v0/c.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Electron speed in m/s.
    pub fn velocity(&self) -> f64 {
        self.beta * CODATA.light_speed
    }

    /// Beam current in amperes, if set.
    pub fn current(&self) -> Option<f64> {
        self.current
    }

    pub fn current_ua(&self) -> Option<f64> {
        self.current.map(|i| i / MICROAMPERE)
    }
}

/// Monochromatic laser light, described by its vacuum wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaserField {
    wavelength: Length,
    angular_frequency: f64,
    photon_energy: f64,
    intensity: Option<f64>,
}

impl LaserField {
    pub fn from_wavelength_angstrom(wavelength_angstrom: f64) -> Result<Self> {
        if !(wavelength_angstrom > 0.0) || !wavelength_angstrom.is_finite() {
            return Err(Error::InvalidInput(format!(
                "laser wavelength must be > 0 Å, got {wavelength_angstrom}"
            )));
        }
        let wavelength = Length::from_angstrom(wavelength_angstrom);
        let omega = 2.0 * PI * CODATA.light_speed / wavelength.meters();
        Ok(LaserField {
            wavelength,
            angular_frequency: omega,
            photon_energy: CODATA.reduced_planck * omega,
            intensity: None,
        })
    }

    pub fn from_photon_energy_ev(photon_ev: f64) -> Result<Self> {
        if !(photon_ev > 0.0) || !photon_ev.is_finite() {
            return Err(Error::InvalidInput(format!(
                "photon energy must be > 0 eV, got {photon_ev}"
            )));
        }
        let energy = photon_ev * EV;
        let omega = energy / CODATA.reduced_planck;
        Ok(LaserField {
            wavelength: Length::from_meters(2.0 * PI * CODATA.light_speed / omega),
            angular_frequency: omega,
            photon_energy: energy,
            intensity: None,
        })
    }

    /// Informational laser intensity in W/cm².
    pub fn with_intensity(mut self, w_per_cm2: f64) -> Result<Self> {
        if !(w_per_cm2 >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "laser intensity must be >= 0 W/cm², got {w_per_cm2}"
            )));
        }
        self.intensity = Some(w_per_cm2);
        Ok(self)
    }

    pub fn wavelength(&self) -> Length {
        self.wavelength
    }

    /// ω in rad/s.
    pub fn angular_frequency(&self) -> f64 {
        self.angular_frequency
    }

    /// ħω in joules.
    pub fn photon_energy(&self) -> f64 {
        self.photon_energy
    }

    pub fn photon_energy_ev(&self) -> f64 {
        self.photon_energy / EV
    }

    pub fn intensity(&self) -> Option<f64> {
        self.intensity
    }

    /// Wavenumber ω n / c inside a medium of index `n`, in 1/m.
    pub fn wavenumber_in(&self, refractive_index: f64) -> f64 {
        refractive_index * self.angular_frequency / CODATA.light_speed
    }
}

/// One electron channel leaving the slab.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sideband {
    pub order: i32,
    /// E_n = E0 + n ħω, J.
    pub energy: f64,
    /// p_nx = n ħ k, kg·m/s.
    pub transverse_momentum: f64,
    /// Longitudinal momentum from the mass shell, kg·m/s.
    pub longitudinal_momentum: f64,
}

impl Sideband {
    /// |E² − (mc²)² − p²c²| / E².
    pub fn mass_shell_residual(&self) -> f64 {
        let c = CODATA.light_speed;
        let rest = CODATA.electron_rest_energy();
        let p2 = self.transverse_momentum.powi(2) + self.longitudinal_momentum.powi(2);
        (self.energy.powi(2) - rest.powi(2) - p2 * c * c).abs() / self.energy.powi(2)
    }
}

/// The elastic channel and both one-photon sidebands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SidebandSet {
    /// Indexed by `n + 1` for n ∈ {−1, 0, +1}.
    pub channels: [Sideband; 3],
    /// Light wavenumber k inside the slab, 1/m.
    pub medium_wavenumber: f64,
}

impl SidebandSet {
    /// Channel with photon number `n` ∈ {−1, 0, 1}.
    pub fn get(&self, n: i32) -> &Sideband {
        assert!((-1..=1).contains(&n), "sideband order must be -1, 0 or 1");
        &self.channels[(n + 1) as usize]
    }

    /// 2p0 − p_{1z} − p_{−1z}: the stationary (beating) momentum combination.
    pub fn beating_momentum(&self) -> f64 {
        2.0 * self.get(0).longitudinal_momentum
            - self.get(1).longitudinal_momentum
            - self.get(-1).longitudinal_momentum
    }

    /// p_{1z} − p_{−1z}: the momentum combination riding on the optical carrier.
    pub fn carrier_momentum(&self) -> f64 {
        self.get(1).longitudinal_momentum - self.get(-1).longitudinal_momentum
    }
}

/// E0 / ħω.
pub fn energy_ratio(beam: &BeamParameters, laser: &LaserField) -> f64 {
    beam.total_energy() / laser.photon_energy()
}

/// Exact mass-shell momenta of the three outgoing channels inside a medium
/// of refractive index `n`.
pub fn sideband_momenta(
    beam: &BeamParameters,
    laser: &LaserField,
    refractive_index: f64,
) -> Result<SidebandSet> {
    if !(refractive_index >= 1.0) || !refractive_index.is_finite() {
        return Err(Error::InvalidInput(format!(
            "refractive index must be >= 1, got {refractive_index}"
        )));
    }
    let c = CODATA.light_speed;
    let hbar = CODATA.reduced_planck;
    let rest = CODATA.electron_rest_energy();
    let k = laser.wavenumber_in(refractive_index);

    let channel = |n: i32| -> Result<Sideband> {
        if n == 0 {
            return Ok(Sideband {
                order: 0,
                energy: beam.total_energy(),
                transverse_momentum: 0.0,
                longitudinal_momentum: beam.momentum(),
            });
        }
        let energy = beam.total_energy() + n as f64 * laser.photon_energy();
        let px = n as f64 * hbar * k;
        // (E - mc^2)(E + mc^2) keeps precision when E is close to mc^2.
        let p_total_sq = (energy - rest) * (energy + rest) / (c * c);
        let pz_sq = p_total_sq - px * px;
        if !(pz_sq > 0.0) {
            return Err(Error::EvanescentSideband {
                order: n,
                pz_squared: pz_sq,
            });
        }
        Ok(Sideband {
            order: n,
            energy,
            transverse_momentum: px,
            longitudinal_momentum: pz_sq.sqrt(),
        })
    };

    Ok(SidebandSet {
        channels: [channel(-1)?, channel(0)?, channel(1)?],
        medium_wavenumber: k,
    })
}

/// Vacuum beating wavelength λ_b0 = 2 λp (E0/ħω) (v0/c)³.
pub fn lambda_b0(beam: &BeamParameters, laser: &LaserField) -> Length {
    laser.wavelength() * (2.0 * energy_ratio(beam, laser) * beam.beta().powi(3))
}

/// Smallest slab thickness maximising one-photon exchange,
/// d0 = λp (v0/c) / 2 = π v0 / ω.
pub fn optimal_thickness_d0(beam: &BeamParameters, laser: &LaserField) -> Length {
    laser.wavelength() * (0.5 * beam.beta())
}

/// Coupling of the electron beam to the light inside the slab.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabCoupling {
    pub beta: f64,
    pub thickness: Length,
    pub optimal_thickness: Length,
}

impl SlabCoupling {
    pub fn new(beta: f64, thickness: Length, optimal_thickness: Length) -> Result<Self> {
        if !(beta >= 0.0) || !beta.is_finite() {
            return Err(Error::InvalidInput(format!("coupling β must be >= 0, got {beta}")));
        }
        if !(thickness.meters() >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "slab thickness must be >= 0, got {} Å",
                thickness.angstrom()
            )));
        }
        if !(optimal_thickness.meters() > 0.0) {
            return Err(Error::InvalidInput(format!(
                "optimal thickness d0 must be > 0, got {} Å",
                optimal_thickness.angstrom()
            )));
        }
        Ok(SlabCoupling {
            beta,
            thickness,
            optimal_thickness,
        })
    }

    /// sin(π d / 2 d0).
    pub fn thickness_factor(&self) -> f64 {
        (PI * (self.thickness / self.optimal_thickness) / 2.0).sin()
    }
}

/// Probability of absorbing (or emitting) one photon in the slab,
/// (β/4)² sin²(π d / 2 d0).
pub fn absorption_probability(coupling: &SlabCoupling) -> f64 {
    (coupling.beta / 4.0).powi(2) * coupling.thickness_factor().powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beam(kev: f64) -> BeamParameters {
        BeamParameters::from_kinetic_energy_kev(kev).unwrap()
    }

    fn argon() -> LaserField {
        LaserField::from_wavelength_angstrom(4880.0).unwrap()
    }

    #[test]
    fn velocity_ratio_at_50_kev() {
        assert!((beam(50.0).beta() - 0.4127).abs() < 1e-4);
    }

    #[test]
    fn electron_at_rest() {
        let b = beam(0.0);
        assert_eq!(b.beta(), 0.0);
        assert_eq!(b.momentum(), 0.0);
        assert_eq!(b.gamma(), 1.0);
        assert_eq!(b.total_energy(), CODATA.electron_rest_energy());
    }

    #[test]
    fn hundred_kev_beam() {
        // gamma = 1 + T/mc^2, v/c = sqrt(1 - 1/gamma^2), evaluated at 30 digits
        let b = beam(100.0);
        assert!((b.gamma() - 1.195_695_118_355_918).abs() < 1e-12);
        assert!((b.beta() - 0.548_220_861_952_357).abs() < 1e-12);
    }

    #[test]
    fn negative_energy_rejected() {
        assert!(matches!(
            BeamParameters::from_kinetic_energy_kev(-1.0),
            Err(Error::InvalidInput(_))
        ));
        assert!(BeamParameters::from_kinetic_energy_kev(f64::NAN).is_err());
    }

    #[test]
    fn beam_invariants() {
        let b = beam(50.0);
        let c = CODATA.light_speed;
        let rest = CODATA.electron_rest_energy();
        let shell = b.total_energy().powi(2) - rest.powi(2) - (b.momentum() * c).powi(2);
        assert!(shell.abs() / b.total_energy().powi(2) < 1e-12);
        assert!((b.beta() - b.momentum() * c / b.total_energy()).abs() < 1e-15);
        assert!((b.gamma() - b.total_energy() / rest).abs() < 1e-15);
    }

    #[test]
    fn photon_energy_matches_wavelength() {
        let l = argon();
        let expect = 2.0 * PI * CODATA.reduced_planck * CODATA.light_speed / l.wavelength().meters();
        assert!((l.photon_energy() / expect - 1.0).abs() < 1e-12);
        assert!((l.photon_energy_ev() - 2.540_659_802).abs() < 1e-8);
    }

    #[test]
    fn energy_ratio_anchor() {
        let r = energy_ratio(&beam(50.0), &argon());
        assert!((r - 2.208e5).abs() < 0.001e5);
    }

    #[test]
    fn energy_ratio_unity() {
        let b = beam(50.0);
        let l = LaserField::from_photon_energy_ev(b.total_energy() / EV).unwrap();
        assert!((energy_ratio(&b, &l) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn energy_ratio_doubles_with_wavelength() {
        let l = LaserField::from_wavelength_angstrom(9760.0).unwrap();
        let r = energy_ratio(&beam(50.0), &l);
        assert!((r - 4.416e5).abs() < 0.001e5);
        assert!((r / energy_ratio(&beam(50.0), &argon()) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn elastic_channel_unchanged() {
        let b = beam(50.0);
        let s = sideband_momenta(&b, &argon(), 1.55).unwrap();
        let e = s.get(0);
        assert_eq!(e.energy, b.total_energy());
        assert_eq!(e.transverse_momentum, 0.0);
        assert_eq!(e.longitudinal_momentum, b.momentum());
    }

    #[test]
    fn sidebands_on_mass_shell() {
        let s = sideband_momenta(&beam(50.0), &argon(), 1.55).unwrap();
        for ch in &s.channels {
            assert!(ch.mass_shell_residual() < 1e-12, "{ch:?}");
        }
        let hbar = CODATA.reduced_planck;
        assert_eq!(s.get(1).transverse_momentum, hbar * s.medium_wavenumber);
        assert_eq!(s.get(-1).transverse_momentum, -hbar * s.medium_wavenumber);
    }

    #[test]
    fn beating_momentum_reproduces_planewave_wavelength() {
        // (z/2ħ)(2p0 - p1 - p-1) = 2π z / λ_b with λ_b = 1.22 cm
        let s = sideband_momenta(&beam(50.0), &argon(), 1.55).unwrap();
        let lambda_b = 1.22e-2;
        let ratio = s.beating_momentum() * lambda_b / (2.0 * 2.0 * PI * CODATA.reduced_planck);
        assert!((ratio - 1.0).abs() < 0.01, "ratio = {ratio}");
    }

    #[test]
    fn exact_vs_first_order_sideband() {
        let b = beam(50.0);
        let l = argon();
        let s = sideband_momenta(&b, &l, 1.55).unwrap();
        let first_order = b.momentum() + l.photon_energy() / b.velocity();
        let exact = s.get(1).longitudinal_momentum;
        assert!(((exact - first_order) / exact).abs() < 1e-4);
        // both sidebands fall below p0 + |shift| and move by ~ħω/v0
        let shift = l.photon_energy() / b.velocity();
        assert!((s.get(1).longitudinal_momentum - b.momentum() - shift).abs() < 1e-3 * shift);
        assert!((b.momentum() - s.get(-1).longitudinal_momentum - shift).abs() < 1e-3 * shift);
    }

    #[test]
    fn evanescent_sideband_is_reported() {
        // 1 eV electrons cannot emit a 2.54 eV photon
        let b = BeamParameters::from_kinetic_energy_kev(1e-3).unwrap();
        match sideband_momenta(&b, &argon(), 1.55) {
            Err(Error::EvanescentSideband { order, .. }) => assert_eq!(order, -1),
            other => panic!("expected evanescent error, got {other:?}"),
        }
    }

    #[test]
    fn refractive_index_below_one_rejected() {
        assert!(sideband_momenta(&beam(50.0), &argon(), 0.9).is_err());
    }

    #[test]
    fn lambda_b0_anchor() {
        let l = lambda_b0(&beam(50.0), &argon());
        assert!((l.cm() - 1.515).abs() < 1e-3, "{}", l.cm());
    }

    #[test]
    fn lambda_b0_quarter_at_half_wavelength() {
        let half = LaserField::from_wavelength_angstrom(2440.0).unwrap();
        let ratio = lambda_b0(&beam(50.0), &half) / lambda_b0(&beam(50.0), &argon());
        assert!((ratio - 0.25).abs() < 1e-12);
    }

    #[test]
    fn lambda_b0_at_25_kev() {
        // direct evaluation at 30 digits: 0.566244702971674 cm
        let l = lambda_b0(&beam(25.0), &argon());
        assert!((l.cm() - 0.566_244_702_971_674).abs() < 1e-10);
    }

    #[test]
    fn d0_anchor() {
        let d0 = optimal_thickness_d0(&beam(50.0), &argon());
        assert!((d0.angstrom() - 1007.0).abs() < 1.0);
    }

    #[test]
    fn d0_arithmetic() {
        // v0/c = 0.5 at T = mc^2 (2/sqrt(3) - 1)
        let t = CODATA.electron_rest_energy_kev * (2.0 / 3f64.sqrt() - 1.0);
        let b = beam(t);
        assert!((b.beta() - 0.5).abs() < 1e-12);
        let l = LaserField::from_wavelength_angstrom(4000.0).unwrap();
        assert!((optimal_thickness_d0(&b, &l).angstrom() - 1000.0).abs() < 1e-8);
    }

    #[test]
    fn d0_from_sideband_momenta() {
        let b = beam(50.0);
        let l = argon();
        let s = sideband_momenta(&b, &l, 1.55).unwrap();
        let half_split = 0.5 * s.carrier_momentum();
        let d0 = PI * CODATA.reduced_planck / half_split;
        let ratio = d0 / optimal_thickness_d0(&b, &l).meters();
        assert!((ratio - 1.0).abs() < 1e-3, "ratio = {ratio}");
    }

    #[test]
    fn absorption_probability_cases() {
        let d0 = Length::from_angstrom(1007.0);
        let at = |d: Length| absorption_probability(&SlabCoupling::new(0.35, d, d0).unwrap());
        assert!((at(d0) - 0.007_656_25).abs() < 1e-12);
        assert_eq!(at(Length::ZERO), 0.0);
        assert!(at(d0 * 2.0) < 1e-30);
    }

    #[test]
    fn coupling_validation() {
        let d0 = Length::from_angstrom(1007.0);
        assert!(SlabCoupling::new(-0.1, d0, d0).is_err());
        assert!(SlabCoupling::new(0.35, Length::from_angstrom(-1.0), d0).is_err());
        assert!(SlabCoupling::new(0.35, d0, Length::ZERO).is_err());
    }
}
