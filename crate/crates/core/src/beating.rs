//! Spatial beating of the modulated electron density.
//!
//! Three models of the beating wavelength are provided: the plane-wave slab
//! field, the guided TM₀ field, and a divergent incident beam focused at a
//! distance `r` before the film. All closed forms are first order in ħω/E0;
//! the exact sideband momenta are only used by [`ModulationField`].

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::{lambda_b0, BeamParameters, LaserField, SidebandSet, SlabCoupling};
use crate::slab_optics::ModeSolution;
use crate::units::{Length, CODATA};

/// Ratios closer than this to 0 or 1 are treated as the band edge.
const RATIO_EDGE: f64 = 1e-12;

fn inside_ratio_band(u: f64) -> bool {
    u > RATIO_EDGE && u < 1.0 - RATIO_EDGE
}

/// Electron probability density behind the slab, to first order in the
/// light field, for the zeroth diffraction order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationField {
    pub baseline_density: f64,
    pub sidebands: SidebandSet,
    pub coupling: SlabCoupling,
    pub angular_frequency: f64,
}

impl ModulationField {
    pub fn new(
        baseline_density: f64,
        sidebands: SidebandSet,
        coupling: SlabCoupling,
        laser: &LaserField,
    ) -> Result<Self> {
        if !(baseline_density >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "baseline density must be >= 0, got {baseline_density}"
            )));
        }
        Ok(ModulationField {
            baseline_density,
            sidebands,
            coupling,
            angular_frequency: laser.angular_frequency(),
        })
    }

    /// False when β > 1, where the first-order density can turn negative.
    pub fn is_physical(&self) -> bool {
        self.coupling.beta <= 1.0
    }

    /// (z / 2ħ)(2p0 − p_{1z} − p_{−1z}), the stationary beating phase.
    pub fn beating_phase(&self, z: Length) -> f64 {
        z.meters() / (2.0 * CODATA.reduced_planck) * self.sidebands.beating_momentum()
    }

    fn carrier_phase(&self, x: Length, z: Length, t: f64) -> f64 {
        // reduce the static part first; it reaches ~10⁶ rad at centimetre distances
        let spatial = self.sidebands.medium_wavenumber * x.meters()
            + z.meters() / (2.0 * CODATA.reduced_planck) * self.sidebands.carrier_momentum();
        spatial.rem_euclid(2.0 * PI) - self.angular_frequency * t
    }
}

/// ρ(x, z, t) = ρ0 {1 − β sin[χ] sin(π d / 2 d0) cos[k x − ω t + …]}.
pub fn probability_density(field: &ModulationField, x: Length, z: Length, t: f64) -> f64 {
    field.baseline_density
        * (1.0
            - field.coupling.beta
                * field.beating_phase(z).sin()
                * field.coupling.thickness_factor()
                * field.carrier_phase(x, z, t).cos())
}

/// How the focus distance `r` behaves as the film-target distance changes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "snake_case")]
pub enum FocusScheme {
    /// Plane incident wave, r → ∞.
    Collimated,
    /// Focus fixed at distance `r` before the film.
    FixedR { r: Length },
    /// r varied with z so that u = r/(z + r) stays constant.
    FixedRatio { u: f64 },
}

impl FocusScheme {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FocusScheme::Collimated => Ok(()),
            FocusScheme::FixedR { r } if r.meters() > 0.0 && r.is_finite() => Ok(()),
            FocusScheme::FixedR { r } => Err(Error::InvalidInput(format!(
                "focus distance must be > 0, got {} cm",
                r.cm()
            ))),
            FocusScheme::FixedRatio { u } if u > 0.0 && u < 1.0 => Ok(()),
            FocusScheme::FixedRatio { u } => Err(Error::InvalidInput(format!(
                "focus ratio r/(z+r) must lie in (0, 1), got {u}"
            ))),
        }
    }

    /// u = r/(z + r) at distance `z`.
    pub fn ratio_at(&self, z: Length) -> f64 {
        match *self {
            FocusScheme::Collimated => 1.0,
            FocusScheme::FixedR { r } => r / (z + r),
            FocusScheme::FixedRatio { u } => u,
        }
    }

    /// Focus distance in force at `z`, `None` when collimated.
    pub fn focus_distance_at(&self, z: Length) -> Option<Length> {
        match *self {
            FocusScheme::Collimated => None,
            FocusScheme::FixedR { r } => Some(r),
            FocusScheme::FixedRatio { u } => Some(z * (u / (1.0 - u))),
        }
    }
}

/// Beating order m = χ(z0)/π, restricted to integers and half-integers.
///
/// Integer orders put a maximum of cos²χ at z0, half-integer ones a maximum of sin²χ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeOrder {
    half_units: i64,
}

impl ModeOrder {
    pub fn from_f64(m: f64) -> Result<Self> {
        let twice = 2.0 * m;
        if !twice.is_finite() || (twice - twice.round()).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "mode order must be an integer or half-integer, got {m}"
            )));
        }
        Ok(ModeOrder {
            half_units: twice.round() as i64,
        })
    }

    pub fn value(self) -> f64 {
        self.half_units as f64 / 2.0
    }

    /// 2m, exact.
    pub fn half_units(self) -> i64 {
        self.half_units
    }

    pub fn is_integer(self) -> bool {
        self.half_units % 2 == 0
    }
}

impl fmt::Display for ModeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.half_units / 2)
        } else {
            write!(f, "{:.1}", self.value())
        }
    }
}

/// Film-target geometry at one distance `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryScenario {
    pub z: Length,
    pub scheme: FocusScheme,
}

impl GeometryScenario {
    pub fn new(z: Length, scheme: FocusScheme) -> Result<Self> {
        if !(z.meters() >= 0.0) || !z.is_finite() {
            return Err(Error::InvalidInput(format!(
                "film-target distance must be >= 0, got {} cm",
                z.cm()
            )));
        }
        scheme.validate()?;
        Ok(GeometryScenario { z, scheme })
    }

    pub fn ratio(&self) -> f64 {
        self.scheme.ratio_at(self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BeatingModelTag {
    Planewave,
    Tm0,
    Divergent,
}

impl BeatingModelTag {
    pub const ALL: [BeatingModelTag; 3] = [Self::Planewave, Self::Tm0, Self::Divergent];

    pub fn name(self) -> &'static str {
        match self {
            Self::Planewave => "planewave",
            Self::Tm0 => "tm0",
            Self::Divergent => "divergent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeatingPrediction {
    pub model: BeatingModelTag,
    /// Beating phase χ, radians.
    pub phase: f64,
    pub local_wavelength: Length,
    /// λ_b as z → ∞ for this model.
    pub asymptotic_wavelength: Length,
}

/// The first-order beating law for one beam, laser and guided mode.
///
/// χ(z; u) = (2π z / λ_b0) {1 − (v0/c)² [1 − (n cos α)² u]}, u = r/(z + r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeatingLaw {
    lambda_b0: Length,
    beta_sq: f64,
    effective_index: f64,
}

impl BeatingLaw {
    pub fn new(beam: &BeamParameters, laser: &LaserField, mode: &ModeSolution) -> Self {
        Self::with_effective_index(beam, laser, mode.effective_index)
    }

    /// Same law with an externally supplied n cos α.
    pub fn with_effective_index(beam: &BeamParameters, laser: &LaserField, effective_index: f64) -> Self {
        BeatingLaw {
            lambda_b0: lambda_b0(beam, laser),
            beta_sq: beam.beta().powi(2),
            effective_index,
        }
    }

    pub fn lambda_b0(&self) -> Length {
        self.lambda_b0
    }

    pub fn effective_index(&self) -> f64 {
        self.effective_index
    }

    /// Bracketed factor {1 − v²[1 − x² u]}.
    fn phase_factor(&self, u: f64) -> f64 {
        1.0 - self.beta_sq * (1.0 - self.effective_index.powi(2) * u)
    }

    /// χ at distance `z` for a given ratio u = r/(z + r).
    pub fn chi(&self, z: Length, u: f64) -> f64 {
        2.0 * PI * (z / self.lambda_b0) * self.phase_factor(u)
    }

    pub fn chi_for(&self, scheme: &FocusScheme, z: Length) -> f64 {
        self.chi(z, scheme.ratio_at(z))
    }

    /// Local wavelength 2π (dχ/dz)⁻¹.
    pub fn local_wavelength(&self, scheme: &FocusScheme, z: Length) -> Length {
        let u_eff = match *scheme {
            FocusScheme::Collimated => 1.0,
            // d/dz [z r/(z+r)] = r²/(z+r)²
            FocusScheme::FixedR { r } => (r / (z + r)).powi(2),
            FocusScheme::FixedRatio { u } => u,
        };
        self.lambda_b0 / self.phase_factor(u_eff)
    }

    /// Collimated (r → ∞) wavelength, the guided-mode λ_b.
    pub fn collimated_wavelength(&self) -> Length {
        self.lambda_b0 / self.phase_factor(1.0)
    }

    /// λ_b0 / (1 − (v0/c)²), the z → ∞ limit at fixed r.
    pub fn asymptotic_wavelength(&self) -> Length {
        self.lambda_b0 / self.phase_factor(0.0)
    }

    /// Open band of χ(z0)/π reachable for u ∈ (0, 1).
    pub fn order_band(&self, z0: Length) -> (f64, f64) {
        let scale = 2.0 * (z0 / self.lambda_b0);
        (scale * self.phase_factor(0.0), scale * self.phase_factor(1.0))
    }

    /// Inverts χ(z0; u) = m π for u. χ is affine in u.
    pub fn ratio_for_order(&self, z0: Length, m: f64) -> Result<f64> {
        if !(z0.meters() > 0.0) {
            return Err(Error::InvalidInput(format!(
                "reference distance must be > 0, got {} cm",
                z0.cm()
            )));
        }
        let scale = 2.0 * (z0 / self.lambda_b0);
        let u = (m / scale - 1.0 + self.beta_sq) / (self.beta_sq * self.effective_index.powi(2));
        if !inside_ratio_band(u) {
            let (low, high) = self.order_band(z0);
            return Err(Error::Infeasible {
                quantity: "mode order m",
                requested: m,
                low,
                high,
            });
        }
        Ok(u)
    }

    /// Focus distance r placing χ(z0) = m π with r held fixed.
    pub fn solve_r(&self, z0: Length, m: f64) -> Result<Length> {
        let u = self.ratio_for_order(z0, m)?;
        Ok(z0 * (u / (1.0 - u)))
    }

    /// Band of constant wavelengths reachable under a fixed ratio u ∈ (0, 1).
    pub fn fixed_ratio_band(&self) -> (Length, Length) {
        (self.collimated_wavelength(), self.asymptotic_wavelength())
    }

    /// Ratio u giving a constant beating wavelength `target` under a fixed-ratio focus.
    pub fn ratio_for_wavelength(&self, target: Length) -> Result<f64> {
        let u = (self.lambda_b0 / target - 1.0 + self.beta_sq)
            / (self.beta_sq * self.effective_index.powi(2));
        if !inside_ratio_band(u) {
            let (low, high) = self.fixed_ratio_band();
            return Err(Error::Infeasible {
                quantity: "beating wavelength (cm)",
                requested: target.cm(),
                low: low.cm(),
                high: high.cm(),
            });
        }
        Ok(u)
    }
}

fn beating_denominator(beam: &BeamParameters, index_term: f64) -> Result<f64> {
    let denom = 1.0 - beam.beta().powi(2) * (1.0 - index_term);
    if !(denom > 0.0) {
        return Err(Error::Domain(format!(
            "beating wavelength denominator is {denom} <= 0"
        )));
    }
    Ok(denom)
}

/// Plane-wave slab field: λ_b = λ_b0 / (1 − (v0/c)² (1 − n²)).
pub fn lambda_b_planewave(beam: &BeamParameters, laser: &LaserField, refractive_index: f64) -> Result<Length> {
    if !(refractive_index >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "refractive index must be >= 1, got {refractive_index}"
        )));
    }
    let denom = beating_denominator(beam, refractive_index.powi(2))?;
    Ok(lambda_b0(beam, laser) / denom)
}

/// Guided-mode field: λ_b = λ_b0 / (1 − (v0/c)² (1 − n² cos² α)).
pub fn lambda_b_tm0(beam: &BeamParameters, laser: &LaserField, mode: &ModeSolution) -> Result<Length> {
    let n_cos = mode.refractive_index * mode.tilt_angle.cos();
    if !(n_cos > 1.0) {
        return Err(Error::GuidanceViolation {
            effective_index: n_cos,
        });
    }
    let denom = beating_denominator(beam, n_cos.powi(2))?;
    Ok(lambda_b0(beam, laser) / denom)
}

/// Divergent-beam beating phase χ(z; r).
pub fn chi_divergent(
    scenario: &GeometryScenario,
    beam: &BeamParameters,
    laser: &LaserField,
    mode: &ModeSolution,
) -> f64 {
    BeatingLaw::new(beam, laser, mode).chi(scenario.z, scenario.ratio())
}

/// Local beating wavelength λ_b(z) = 2π (dχ/dz)⁻¹.
pub fn lambda_b_local(
    scenario: &GeometryScenario,
    beam: &BeamParameters,
    laser: &LaserField,
    mode: &ModeSolution,
) -> Length {
    BeatingLaw::new(beam, laser, mode).local_wavelength(&scenario.scheme, scenario.z)
}

/// Focus distance r that puts χ(z0) = m π.
pub fn solve_r_for_phase(
    z0: Length,
    m: ModeOrder,
    beam: &BeamParameters,
    laser: &LaserField,
    mode: &ModeSolution,
) -> Result<Length> {
    BeatingLaw::new(beam, laser, mode).solve_r(z0, m.value())
}

/// Evaluates one of the three beating models at a scenario.
pub fn predict(
    model: BeatingModelTag,
    scenario: &GeometryScenario,
    beam: &BeamParameters,
    laser: &LaserField,
    mode: &ModeSolution,
) -> Result<BeatingPrediction> {
    let law = BeatingLaw::new(beam, laser, mode);
    let z = scenario.z;
    let (wavelength, asymptote) = match model {
        BeatingModelTag::Planewave => {
            let l = lambda_b_planewave(beam, laser, mode.refractive_index)?;
            (l, l)
        }
        BeatingModelTag::Tm0 => {
            let l = lambda_b_tm0(beam, laser, mode)?;
            (l, l)
        }
        BeatingModelTag::Divergent => {
            let asym = match scenario.scheme {
                FocusScheme::FixedR { .. } => law.asymptotic_wavelength(),
                _ => law.local_wavelength(&scenario.scheme, z),
            };
            (law.local_wavelength(&scenario.scheme, z), asym)
        }
    };
    let phase = match model {
        BeatingModelTag::Divergent => law.chi(z, scenario.ratio()),
        _ => 2.0 * PI * (z / wavelength),
    };
    Ok(BeatingPrediction {
        model,
        phase,
        local_wavelength: wavelength,
        asymptotic_wavelength: asymptote,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{optimal_thickness_d0, sideband_momenta};
    use crate::slab_optics::{solve_tm0_mode, SlabGeometry};

    struct Setup {
        beam: BeamParameters,
        laser: LaserField,
        mode: ModeSolution,
    }

    fn quartz() -> Setup {
        let beam = BeamParameters::from_kinetic_energy_kev(50.0).unwrap();
        let laser = LaserField::from_wavelength_angstrom(4880.0).unwrap();
        let geom = SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0).unwrap();
        Setup {
            beam,
            laser,
            mode: solve_tm0_mode(&geom).unwrap(),
        }
    }

    fn fixed_r(z_cm: f64, r_cm: f64) -> GeometryScenario {
        GeometryScenario::new(
            Length::from_cm(z_cm),
            FocusScheme::FixedR {
                r: Length::from_cm(r_cm),
            },
        )
        .unwrap()
    }

    fn field(s: &Setup, beta: f64) -> ModulationField {
        let sb = sideband_momenta(&s.beam, &s.laser, 1.55).unwrap();
        let d0 = optimal_thickness_d0(&s.beam, &s.laser);
        let coupling = SlabCoupling::new(beta, d0, d0).unwrap();
        ModulationField::new(1.0, sb, coupling, &s.laser).unwrap()
    }

    #[test]
    fn density_at_surface_is_baseline() {
        let s = quartz();
        let f = field(&s, 0.35);
        for t in [0.0, 1e-16, 3e-15] {
            let rho = probability_density(&f, Length::from_angstrom(123.0), Length::ZERO, t);
            assert_eq!(rho, 1.0);
        }
    }

    #[test]
    fn density_without_laser_is_flat() {
        let s = quartz();
        let f = field(&s, 0.0);
        for z in [0.1, 0.3, 1.0, 7.7] {
            let rho = probability_density(&f, Length::ZERO, Length::from_cm(z), 1e-15);
            assert_eq!(rho, 1.0);
        }
    }

    #[test]
    fn density_period_average_is_baseline() {
        let s = quartz();
        let f = field(&s, 0.35);
        let period = 2.0 * PI / f.angular_frequency;
        // periodic trapezoid rule, exact for a single harmonic
        let n = 64;
        for z in [0.31, 2.0, 10.2] {
            let avg: f64 = (0..n)
                .map(|i| {
                    probability_density(&f, Length::ZERO, Length::from_cm(z), period * i as f64 / n as f64)
                })
                .sum::<f64>()
                / n as f64;
            assert!((avg - 1.0).abs() < 1e-12, "avg = {avg}");
        }
    }

    #[test]
    fn density_stays_nonnegative() {
        let s = quartz();
        let f = field(&s, 1.0);
        assert!(f.is_physical());
        for i in 0..200 {
            let z = Length::from_cm(0.0137 * i as f64);
            let t = 1.3e-16 * i as f64;
            assert!(probability_density(&f, Length::ZERO, z, t) >= 0.0);
        }
        assert!(!field(&s, 1.5).is_physical());
    }

    #[test]
    fn eq1_phase_matches_collimated_chi() {
        let s = quartz();
        let f = field(&s, 0.35);
        // plane wave inside the slab: α = 0, u = 1
        let law = BeatingLaw::with_effective_index(&s.beam, &s.laser, 1.55);
        let z = Length::from_cm(10.2);
        let rel = (f.beating_phase(z) / law.chi(z, 1.0) - 1.0).abs();
        assert!(rel < 1e-5, "rel = {rel}");
    }

    #[test]
    fn planewave_anchor() {
        let s = quartz();
        let l = lambda_b_planewave(&s.beam, &s.laser, 1.55).unwrap();
        assert!((l.cm() - 1.22).abs() < 0.01);
        // vacuum limit
        let l1 = lambda_b_planewave(&s.beam, &s.laser, 1.0).unwrap();
        assert_eq!(l1, lambda_b0(&s.beam, &s.laser));
        assert!(lambda_b_planewave(&s.beam, &s.laser, 0.5).is_err());
    }

    #[test]
    fn planewave_index_two() {
        // λ_b0/(1 + 3 v²) at 30 digits = 1.00249190009838 cm
        let s = quartz();
        let l = lambda_b_planewave(&s.beam, &s.laser, 2.0).unwrap();
        assert!((l.cm() - 1.002_491_900_098_38).abs() < 1e-10);
    }

    #[test]
    fn tm0_anchor() {
        let s = quartz();
        let l = lambda_b_tm0(&s.beam, &s.laser, &s.mode).unwrap();
        assert!((l.cm() - 1.47).abs() < 0.01, "{}", l.cm());
        assert!(l < lambda_b0(&s.beam, &s.laser));
    }

    #[test]
    fn tm0_untilted_is_planewave() {
        let s = quartz();
        let flat = ModeSolution::from_tilt_angle(1.55, 0.0, s.laser.wavelength()).unwrap();
        assert_eq!(
            lambda_b_tm0(&s.beam, &s.laser, &flat).unwrap(),
            lambda_b_planewave(&s.beam, &s.laser, 1.55).unwrap()
        );
    }

    #[test]
    fn tm0_approaches_upper_limit() {
        let s = quartz();
        let lb0 = lambda_b0(&s.beam, &s.laser);
        let mut prev = Length::ZERO;
        for eps in [1e-1, 1e-2, 1e-4, 1e-8] {
            let mode = ModeSolution::from_effective_index(1.55, 1.0 + eps, s.laser.wavelength()).unwrap();
            let l = lambda_b_tm0(&s.beam, &s.laser, &mode).unwrap();
            assert!(l < lb0 && l > prev);
            prev = l;
        }
        assert!((prev / lb0 - 1.0).abs() < 1e-7);
    }

    #[test]
    fn tm0_guidance_violation() {
        let s = quartz();
        let mut mode = s.mode;
        mode.tilt_angle = (1.0f64 / 1.55).acos() + 0.01;
        assert!(matches!(
            lambda_b_tm0(&s.beam, &s.laser, &mode),
            Err(Error::GuidanceViolation { .. })
        ));
    }

    #[test]
    fn chi_basics() {
        let s = quartz();
        assert_eq!(chi_divergent(&fixed_r(0.0, 4.57), &s.beam, &s.laser, &s.mode), 0.0);
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let z = Length::from_cm(3.3);
        let ratio = law.chi(z, 1.0) * law.collimated_wavelength().meters() / (2.0 * PI * z.meters());
        assert!((ratio - 1.0).abs() < 1e-9);
        let far = law.chi_for(&FocusScheme::FixedR { r: Length::from_cm(1e12) }, z);
        assert!((far / law.chi(z, 1.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn chi_m12_anchor() {
        let s = quartz();
        let chi = chi_divergent(&fixed_r(10.2, 4.57), &s.beam, &s.laser, &s.mode);
        assert!((chi / PI - 12.0).abs() < 0.12, "m = {}", chi / PI);
    }

    #[test]
    fn chi_increasing_in_z() {
        let s = quartz();
        let mut prev = -1.0;
        for i in 0..400 {
            let chi = chi_divergent(&fixed_r(0.1 * i as f64, 4.57), &s.beam, &s.laser, &s.mode);
            assert!(chi > prev);
            prev = chi;
        }
    }

    #[test]
    fn local_wavelength_limits() {
        let s = quartz();
        let far = lambda_b_local(&fixed_r(1e9, 4.57), &s.beam, &s.laser, &s.mode);
        assert!((far.cm() - 1.826).abs() < 1e-3, "{}", far.cm());
        let near = lambda_b_local(&fixed_r(0.0, 4.57), &s.beam, &s.laser, &s.mode);
        assert_eq!(near, lambda_b_tm0(&s.beam, &s.laser, &s.mode).unwrap());
    }

    #[test]
    fn local_wavelength_matches_finite_difference() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let h = 1e-4;
        for r in [0.5, 4.57, 10.08, 22.13, 300.0] {
            for i in 0..=40 {
                let z = 0.01 + i as f64;
                let scheme = FocusScheme::FixedR { r: Length::from_cm(r) };
                let dchi = (law.chi_for(&scheme, Length::from_cm(z + h))
                    - law.chi_for(&scheme, Length::from_cm(z - h)))
                    / (2.0 * h);
                let fd = 2.0 * PI / dchi;
                let analytic = law.local_wavelength(&scheme, Length::from_cm(z)).cm();
                assert!((fd / analytic - 1.0).abs() < 1e-6, "z = {z}, r = {r}");
            }
        }
    }

    #[test]
    fn solve_r_triple() {
        let s = quartz();
        let z0 = Length::from_cm(10.2);
        for (m, r_ref) in [(12.0, 4.57), (12.5, 10.08), (13.0, 22.13)] {
            let r = solve_r_for_phase(z0, ModeOrder::from_f64(m).unwrap(), &s.beam, &s.laser, &s.mode)
                .unwrap();
            assert!((r.cm() / r_ref - 1.0).abs() < 0.05, "m = {m}: r = {}", r.cm());
            let chi = chi_divergent(&fixed_r(10.2, r.cm()), &s.beam, &s.laser, &s.mode);
            assert!((chi / PI - m).abs() < 1e-10);
        }
    }

    #[test]
    fn solve_r_matches_log_scan() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let z0 = Length::from_cm(10.2);
        for m in [12.0, 12.5, 13.0] {
            let r = law.solve_r(z0, m).unwrap().cm();
            // χ(z0; r)/π − m on a log grid r ∈ (1e-3, 1e3) cm, then bisect the
            // bracketing cell by repeated rescans
            let f = |r: f64| law.chi_for(&FocusScheme::FixedR { r: Length::from_cm(r) }, z0) / PI - m;
            let (mut lo, mut hi) = (1e-3f64.ln(), 1e3f64.ln());
            for _ in 0..6 {
                let steps = 1000;
                let h = (hi - lo) / steps as f64;
                let cell = (0..steps)
                    .find(|&i| {
                        let a = f((lo + i as f64 * h).exp());
                        let b = f((lo + (i + 1) as f64 * h).exp());
                        a.signum() != b.signum()
                    })
                    .expect("sign change");
                lo += cell as f64 * h;
                hi = lo + h;
            }
            let scanned = (0.5 * (lo + hi)).exp();
            assert!((scanned / r - 1.0).abs() < 1e-6, "m = {m}");
        }
    }

    #[test]
    fn solve_r_collimated_order_is_infeasible() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let z0 = Length::from_cm(10.2);
        let (low, high) = law.order_band(z0);
        let m_coll = law.chi(z0, 1.0) / PI;
        assert!((m_coll - high).abs() < 1e-12);
        match law.solve_r(z0, m_coll) {
            Err(Error::Infeasible { low: l, high: h, .. }) => {
                assert_eq!((l, h), (low, high));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        // just inside the band the focus runs away
        let r = law.solve_r(z0, m_coll - 1e-9).unwrap();
        assert!(r.cm() > 1e6);
        assert!(law.solve_r(z0, low - 0.5).is_err());
    }

    #[test]
    fn chi_affine_in_ratio() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let z = Length::from_cm(7.0);
        let (a, b, c) = (law.chi(z, 0.1), law.chi(z, 0.4), law.chi(z, 0.7));
        assert!(((b - a) - (c - b)).abs() < 1e-12 * c.abs());
    }

    #[test]
    fn fixed_ratio_chi_linear_in_z() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let scheme = FocusScheme::FixedRatio { u: 0.309 };
        let c = |z: f64| law.chi_for(&scheme, Length::from_cm(z));
        let (a, b, d) = (c(5.0), c(15.0), c(25.0));
        assert!(((b - a) - (d - b)).abs() < 1e-12 * d);
        assert_eq!(
            law.local_wavelength(&scheme, Length::from_cm(1.0)),
            law.local_wavelength(&scheme, Length::from_cm(30.0))
        );
    }

    #[test]
    fn limit_ordering() {
        let s = quartz();
        let law = BeatingLaw::new(&s.beam, &s.laser, &s.mode);
        let pw = lambda_b_planewave(&s.beam, &s.laser, 1.55).unwrap();
        let tm = lambda_b_tm0(&s.beam, &s.laser, &s.mode).unwrap();
        let lb0 = law.lambda_b0();
        let asym = law.asymptotic_wavelength();
        assert!(pw < tm && tm < lb0 && lb0 < asym);
    }

    #[test]
    fn mode_order_parsing() {
        assert!(ModeOrder::from_f64(12.0).unwrap().is_integer());
        assert!(!ModeOrder::from_f64(12.5).unwrap().is_integer());
        assert!(ModeOrder::from_f64(12.3).is_err());
        assert_eq!(ModeOrder::from_f64(12.5).unwrap().to_string(), "12.5");
    }

    #[test]
    fn scenario_validation() {
        assert!(GeometryScenario::new(Length::from_cm(-1.0), FocusScheme::Collimated).is_err());
        assert!(GeometryScenario::new(Length::ZERO, FocusScheme::FixedR { r: Length::ZERO }).is_err());
        assert!(GeometryScenario::new(Length::ZERO, FocusScheme::FixedRatio { u: 1.0 }).is_err());
    }

    #[test]
    fn predictions_by_model() {
        let s = quartz();
        let sc = fixed_r(10.2, 4.57);
        let d = predict(BeatingModelTag::Divergent, &sc, &s.beam, &s.laser, &s.mode).unwrap();
        assert!((d.asymptotic_wavelength.cm() - 1.826).abs() < 1e-3);
        assert!(d.local_wavelength < d.asymptotic_wavelength);
        let p = predict(BeatingModelTag::Planewave, &sc, &s.beam, &s.laser, &s.mode).unwrap();
        assert!((p.local_wavelength.cm() - 1.22).abs() < 0.01);
    }
}
