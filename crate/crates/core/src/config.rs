//! Scenario configuration (JSON) and its validated, ready-to-run form.
//!
//! Every physical key carries its unit in the name. Missing sections fall
//! back to the α-quartz / 50 keV / 4880 Å setup.

use serde::{Deserialize, Serialize};

use crate::analysis::uniform_grid;
use crate::beating::{BeatingLaw, FocusScheme, ModeOrder};
use crate::error::{Error, Result};
use crate::kinematics::{optimal_thickness_d0, BeamParameters, LaserField, SlabCoupling, QUARTZ_COUPLING_BETA};
use crate::slab_optics::{solve_tm0_mode, ModeSolution, SlabGeometry};
use crate::units::Length;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BeamSpec {
    #[serde(rename = "kinetic_energy_keV")]
    pub kinetic_energy_kev: f64,
    #[serde(rename = "current_uA")]
    pub current_ua: f64,
}

impl Default for BeamSpec {
    fn default() -> Self {
        BeamSpec {
            kinetic_energy_kev: 50.0,
            current_ua: 0.4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LaserSpec {
    pub wavelength_angstrom: f64,
    #[serde(rename = "intensity_W_per_cm2")]
    pub intensity_w_per_cm2: f64,
}

impl Default for LaserSpec {
    fn default() -> Self {
        LaserSpec {
            wavelength_angstrom: 4880.0,
            intensity_w_per_cm2: 1e7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SlabSpec {
    pub refractive_index: f64,
    pub thickness_angstrom: f64,
    pub coupling_beta: f64,
    /// Overrides the TM₀ solve with a fixed n cos α.
    pub effective_index: Option<f64>,
}

impl Default for SlabSpec {
    fn default() -> Self {
        SlabSpec {
            refractive_index: 1.55,
            thickness_angstrom: 1007.0,
            coupling_beta: QUARTZ_COUPLING_BETA,
            effective_index: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeKind {
    Collimated,
    FixedR,
    FixedRatio,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GeometrySpec {
    pub scheme: SchemeKind,
    pub focus_distance_cm: Option<f64>,
    pub focus_ratio: Option<f64>,
    pub reference_distance_cm: f64,
    pub mode_orders: Vec<f64>,
    pub z_min_cm: f64,
    pub z_max_cm: f64,
    pub z_step_cm: f64,
}

impl Default for GeometrySpec {
    fn default() -> Self {
        GeometrySpec {
            scheme: SchemeKind::FixedR,
            focus_distance_cm: Some(4.57),
            focus_ratio: None,
            reference_distance_cm: 10.2,
            mode_orders: vec![12.0, 12.5, 13.0],
            z_min_cm: 0.0,
            z_max_cm: 40.0,
            z_step_cm: 0.01,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhenomenologySpec {
    /// J_sideband / J_elastic for the two photon-carrying beams.
    pub current_ratio: f64,
    pub amplitude_constant: f64,
    pub carrying_fraction: f64,
    #[serde(rename = "target_power_W")]
    pub target_power_w: f64,
    pub target_wavelength_cm: f64,
}

impl Default for PhenomenologySpec {
    fn default() -> Self {
        PhenomenologySpec {
            current_ratio: 0.31,
            amplitude_constant: 1.0,
            carrying_fraction: 1e-3,
            target_power_w: 1e-10,
            target_wavelength_cm: 1.70,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelSelector {
    Planewave,
    Tm0,
    Divergent,
    FixedRatio,
    Phenomenological,
}

impl ModelSelector {
    pub const ALL: [ModelSelector; 5] = [
        Self::Planewave,
        Self::Tm0,
        Self::Divergent,
        Self::FixedRatio,
        Self::Phenomenological,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub directory: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    pub beam: BeamSpec,
    pub laser: LaserSpec,
    pub slab: SlabSpec,
    pub geometry: GeometrySpec,
    pub phenomenology: PhenomenologySpec,
    pub models: Vec<ModelSelector>,
    pub output: OutputSpec,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            beam: BeamSpec::default(),
            laser: LaserSpec::default(),
            slab: SlabSpec::default(),
            geometry: GeometrySpec::default(),
            phenomenology: PhenomenologySpec::default(),
            models: ModelSelector::ALL.to_vec(),
            output: OutputSpec::default(),
        }
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// True for the 50 keV / 4880 Å / n = 1.550 / d = 1007 Å setup the
    /// published numbers refer to.
    pub fn is_reference_setup(&self) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs();
        close(self.beam.kinetic_energy_kev, 50.0)
            && close(self.laser.wavelength_angstrom, 4880.0)
            && close(self.slab.refractive_index, 1.55)
            && close(self.slab.thickness_angstrom, 1007.0)
            && self.slab.effective_index.is_none()
    }

    pub fn focus_scheme(&self) -> Result<FocusScheme> {
        let g = &self.geometry;
        let scheme = match g.scheme {
            SchemeKind::Collimated => FocusScheme::Collimated,
            SchemeKind::FixedR => FocusScheme::FixedR {
                r: Length::from_cm(g.focus_distance_cm.ok_or_else(|| {
                    Error::Config("geometry.focus_distance_cm is required for scheme fixed_r".into())
                })?),
            },
            SchemeKind::FixedRatio => FocusScheme::FixedRatio {
                u: g.focus_ratio.ok_or_else(|| {
                    Error::Config("geometry.focus_ratio is required for scheme fixed_ratio".into())
                })?,
            },
        };
        scheme
            .validate()
            .map_err(|e| Error::Config(format!("geometry: {e}")))?;
        Ok(scheme)
    }

    /// Validates every section and builds the model objects.
    pub fn build(&self) -> Result<Scenario> {
        let field = |section: &str, e: Error| Error::Config(format!("{section}: {e}"));
        let beam = BeamParameters::from_kinetic_energy_kev(self.beam.kinetic_energy_kev)
            .and_then(|b| b.with_current_ua(self.beam.current_ua))
            .map_err(|e| field("beam", e))?;
        let laser = LaserField::from_wavelength_angstrom(self.laser.wavelength_angstrom)
            .and_then(|l| l.with_intensity(self.laser.intensity_w_per_cm2))
            .map_err(|e| field("laser", e))?;
        let slab = SlabGeometry::new(
            self.slab.refractive_index,
            Length::from_angstrom(self.slab.thickness_angstrom),
            laser.wavelength(),
        )
        .map_err(|e| field("slab", e))?;
        let mode = match self.slab.effective_index {
            Some(n_eff) => ModeSolution::from_effective_index(slab.refractive_index, n_eff, laser.wavelength()),
            None => solve_tm0_mode(&slab),
        }
        .map_err(|e| field("slab", e))?;
        let d0 = optimal_thickness_d0(&beam, &laser);
        let coupling =
            SlabCoupling::new(self.slab.coupling_beta, slab.thickness, d0).map_err(|e| field("slab", e))?;
        let scheme = self.focus_scheme()?;
        let g = &self.geometry;
        let grid = uniform_grid(
            Length::from_cm(g.z_min_cm),
            Length::from_cm(g.z_max_cm),
            Length::from_cm(g.z_step_cm),
        )
        .map_err(|e| field("geometry", e))?;
        if !(g.reference_distance_cm > 0.0) {
            return Err(Error::Config(format!(
                "geometry: reference_distance_cm must be > 0, got {}",
                g.reference_distance_cm
            )));
        }
        let orders = g
            .mode_orders
            .iter()
            .map(|&m| ModeOrder::from_f64(m))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| field("geometry", e))?;
        let p = &self.phenomenology;
        if !(p.current_ratio >= 0.0) || !(p.amplitude_constant > 0.0) {
            return Err(Error::Config(
                "phenomenology: current_ratio must be >= 0 and amplitude_constant > 0".into(),
            ));
        }
        if !(0.0..=1.0).contains(&p.carrying_fraction) {
            return Err(Error::Config(format!(
                "phenomenology: carrying_fraction must lie in [0, 1], got {}",
                p.carrying_fraction
            )));
        }
        let law = BeatingLaw::new(&beam, &laser, &mode);
        Ok(Scenario {
            config: self.clone(),
            beam,
            laser,
            slab,
            mode,
            coupling,
            law,
            scheme,
            grid,
            reference_distance: Length::from_cm(g.reference_distance_cm),
            orders,
        })
    }
}

/// A validated configuration with all derived model objects.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub beam: BeamParameters,
    pub laser: LaserField,
    pub slab: SlabGeometry,
    pub mode: ModeSolution,
    pub coupling: SlabCoupling,
    pub law: BeatingLaw,
    pub scheme: FocusScheme,
    pub grid: Vec<Length>,
    pub reference_distance: Length,
    pub orders: Vec<ModeOrder>,
}
