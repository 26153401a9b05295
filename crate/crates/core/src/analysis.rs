//! Comparison against the reported film-target measurements: the embedded
//! dataset, the fixed-ratio focus fit, maxima spacing checks, and the
//! λ_b(z) curves for fixed focus distances.

use serde::Serialize;

use crate::beating::{BeatingLaw, FocusScheme, ModeOrder};
use crate::error::{Error, Result};
use crate::units::Length;

/// Default acceptance threshold on the nearest-integer residual of maxima spacings.
pub const DEFAULT_MAXIMA_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportedWavelength {
    pub value_cm: f64,
    pub uncertainty_cm: Option<f64>,
    pub source: &'static str,
}

/// Reported beating wavelengths and intensity maxima positions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub reported_wavelengths: Vec<ReportedWavelength>,
    /// Film-target distances of observed intensity maxima, cm.
    pub maxima_cm: Vec<f64>,
    pub reference_maximum_cm: f64,
}

impl ExperimentRecord {
    /// The published α-quartz measurements.
    ///
    /// The 1.70 value is sometimes printed with an Å unit; it is a length in cm.
    pub fn schwarz() -> Self {
        ExperimentRecord {
            reported_wavelengths: vec![
                ReportedWavelength {
                    value_cm: 1.70,
                    uncertainty_cm: None,
                    source: "Schwarz film-target scan",
                },
                ReportedWavelength {
                    value_cm: 1.75,
                    uncertainty_cm: None,
                    source: "follow-up report",
                },
                ReportedWavelength {
                    value_cm: 1.73,
                    uncertainty_cm: Some(0.01),
                    source: "follow-up measurement",
                },
            ],
            maxima_cm: vec![10.2, 15.3, 34.0],
            reference_maximum_cm: 10.2,
        }
    }

    pub fn reference_maximum(&self) -> Length {
        Length::from_cm(self.reference_maximum_cm)
    }
}

/// Fixed-ratio focus fitted to a constant beating wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedRatioFit {
    pub target: Length,
    /// u = r/(z + r).
    pub ratio: f64,
    /// r at the reference maximum.
    pub focus_distance: Length,
}

/// Finds the constant ratio u = r/(z + r) that yields `target` as the
/// (then z-independent) beating wavelength, and r at the reference maximum.
pub fn fit_fixed_ratio(record: &ExperimentRecord, target: Length, law: &BeatingLaw) -> Result<FixedRatioFit> {
    let u = law.ratio_for_wavelength(target)?;
    let z0 = record.reference_maximum();
    Ok(FixedRatioFit {
        target,
        ratio: u,
        focus_distance: z0 * (u / (1.0 - u)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaximaSpacing {
    pub from_cm: f64,
    pub to_cm: f64,
    pub spacing_cm: f64,
    /// spacing / (λ_b / 2).
    pub periods: f64,
    pub nearest: i64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaximaCheck {
    pub wavelength_cm: f64,
    pub spacings: Vec<MaximaSpacing>,
    pub threshold: f64,
    pub consistent: bool,
}

impl MaximaCheck {
    pub fn max_residual(&self) -> f64 {
        self.spacings.iter().map(|s| s.residual).fold(0.0, f64::max)
    }
}

/// Tests whether successive maxima are separated by whole intensity periods λ_b/2.
pub fn check_maxima_consistency(record: &ExperimentRecord, wavelength: Length, threshold: f64) -> MaximaCheck {
    let mut maxima = record.maxima_cm.clone();
    maxima.sort_by(f64::total_cmp);
    let half = wavelength.cm() / 2.0;
    let spacings: Vec<MaximaSpacing> = maxima
        .windows(2)
        .map(|w| {
            let spacing = w[1] - w[0];
            let periods = spacing / half;
            let nearest = periods.round();
            MaximaSpacing {
                from_cm: w[0],
                to_cm: w[1],
                spacing_cm: spacing,
                periods,
                nearest: nearest as i64,
                residual: (periods - nearest).abs(),
            }
        })
        .collect();
    let consistent = spacings.iter().all(|s| s.residual < threshold);
    MaximaCheck {
        wavelength_cm: wavelength.cm(),
        spacings,
        threshold,
        consistent,
    }
}

/// λ_b(z) at a fixed focus distance chosen so that χ(z0) = m π.
#[derive(Debug, Clone, PartialEq)]
pub struct WavelengthCurve {
    pub order: ModeOrder,
    pub focus_distance: Length,
    pub points: Vec<(Length, Length)>,
}

/// Local-wavelength curves for each beating order at the reference maximum.
pub fn reproduce_figure2(
    law: &BeatingLaw,
    z0: Length,
    orders: &[ModeOrder],
    grid: &[Length],
) -> Result<Vec<WavelengthCurve>> {
    if grid.is_empty() {
        return Err(Error::InvalidInput("figure grid is empty".into()));
    }
    orders
        .iter()
        .map(|&order| {
            let r = law.solve_r(z0, order.value())?;
            let scheme = FocusScheme::FixedR { r };
            let points = grid
                .iter()
                .map(|&z| (z, law.local_wavelength(&scheme, z)))
                .collect();
            Ok(WavelengthCurve {
                order,
                focus_distance: r,
                points,
            })
        })
        .collect()
}

/// Uniform grid from `start` to `stop` (inclusive) with spacing `step`.
pub fn uniform_grid(start: Length, stop: Length, step: Length) -> Result<Vec<Length>> {
    if !(step.meters() > 0.0) || !(stop >= start) || start.meters() < 0.0 {
        return Err(Error::InvalidInput(format!(
            "bad grid: start {} cm, stop {} cm, step {} cm",
            start.cm(),
            stop.cm(),
            step.cm()
        )));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| start + step * i as f64).collect())
}

/// Interior local maxima of a sampled curve, refined by a three-point parabola.
pub fn find_maxima(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    assert_eq!(xs.len(), ys.len(), "abscissae and ordinates differ in length");
    let mut out = Vec::new();
    for i in 1..ys.len().saturating_sub(1) {
        let (y0, y1, y2) = (ys[i - 1], ys[i], ys[i + 1]);
        if y1 > y0 && y1 >= y2 {
            let denom = y0 - 2.0 * y1 + y2;
            let h = xs[i + 1] - xs[i];
            let shift = if denom < 0.0 { 0.5 * (y0 - y2) / denom } else { 0.0 };
            out.push(xs[i] + shift * h);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{BeamParameters, LaserField};
    use crate::slab_optics::{solve_tm0_mode, SlabGeometry};

    fn law() -> BeatingLaw {
        let beam = BeamParameters::from_kinetic_energy_kev(50.0).unwrap();
        let laser = LaserField::from_wavelength_angstrom(4880.0).unwrap();
        let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0).unwrap()).unwrap();
        BeatingLaw::new(&beam, &laser, &mode)
    }

    fn within_interval(x: f64, lo: f64, hi: f64, rel: f64) -> bool {
        x >= lo * (1.0 - rel) && x <= hi * (1.0 + rel)
    }

    #[test]
    fn default_dataset() {
        let rec = ExperimentRecord::schwarz();
        assert_eq!(rec.maxima_cm, vec![10.2, 15.3, 34.0]);
        assert_eq!(rec.reference_maximum_cm, 10.2);
        let values: Vec<f64> = rec.reported_wavelengths.iter().map(|w| w.value_cm).collect();
        assert_eq!(values, vec![1.70, 1.75, 1.73]);
        assert!(rec.reported_wavelengths.iter().all(|w| w.value_cm > 0.0));
    }

    #[test]
    fn fixed_ratio_fit_at_170() {
        let law = law();
        let fit = fit_fixed_ratio(&ExperimentRecord::schwarz(), Length::from_cm(1.70), &law).unwrap();
        assert!(
            within_interval(fit.focus_distance.cm(), 4.55, 4.57, 0.02),
            "r = {}",
            fit.focus_distance.cm()
        );
        // substitute back: χ(z) under the fitted ratio
        let scheme = FocusScheme::FixedRatio { u: fit.ratio };
        for z in [1.0, 10.2, 34.0] {
            let z = Length::from_cm(z);
            let lambda = 2.0 * std::f64::consts::PI * z.cm() / law.chi_for(&scheme, z);
            assert!((lambda / 1.70 - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn fixed_ratio_band_edges() {
        let law = law();
        let rec = ExperimentRecord::schwarz();
        let edge = law.collimated_wavelength();
        assert!(matches!(
            fit_fixed_ratio(&rec, edge, &law),
            Err(Error::Infeasible { .. })
        ));
        assert!(fit_fixed_ratio(&rec, Length::from_cm(1.9), &law).is_err());
        assert!(fit_fixed_ratio(&rec, Length::from_cm(1.4), &law).is_err());
    }

    #[test]
    fn maxima_consistent_at_170() {
        let check = check_maxima_consistency(&ExperimentRecord::schwarz(), Length::from_cm(1.70), 0.05);
        let nearest: Vec<i64> = check.spacings.iter().map(|s| s.nearest).collect();
        assert_eq!(nearest, vec![6, 22]);
        assert!((check.spacings[0].spacing_cm - 5.1).abs() < 1e-12);
        assert!((check.spacings[1].spacing_cm - 18.7).abs() < 1e-12);
        assert!(check.max_residual() < 1e-9);
        assert!(check.consistent);
    }

    #[test]
    fn maxima_single_point() {
        let mut rec = ExperimentRecord::schwarz();
        rec.maxima_cm = vec![10.2];
        let check = check_maxima_consistency(&rec, Length::from_cm(1.70), 0.05);
        assert!(check.spacings.is_empty());
    }

    #[test]
    fn maxima_inconsistent_at_vacuum_wavelength() {
        let check = check_maxima_consistency(&ExperimentRecord::schwarz(), Length::from_cm(1.515), 0.05);
        assert!(!check.consistent);
        assert!(check.max_residual() > 0.05);
    }

    #[test]
    fn figure2_curves() {
        let law = law();
        let orders: Vec<ModeOrder> = [12.0, 12.5, 13.0].iter().map(|&m| ModeOrder::from_f64(m).unwrap()).collect();
        let grid = uniform_grid(Length::ZERO, Length::from_cm(40.0), Length::from_cm(0.01)).unwrap();
        assert_eq!(grid.len(), 4001);
        let curves = reproduce_figure2(&law, Length::from_cm(10.2), &orders, &grid).unwrap();
        let eq5 = law.collimated_wavelength();
        let asym = law.asymptotic_wavelength();
        for c in &curves {
            assert_eq!(c.points[0].1, eq5);
            assert!(c.points[0].1 < law.lambda_b0());
            assert!(c.points.iter().all(|p| p.1 < asym));
            assert!(c.points.windows(2).all(|w| w[1].1 > w[0].1));
        }
        // the tightest focus is already close to the asymptote at 40 cm
        assert!((curves[0].points.last().unwrap().1.cm() - asym.cm()).abs() < 0.02);
        // larger r stays closer to the guided-mode value at every z
        for i in 1..grid.len() {
            assert!(curves[0].points[i].1 > curves[1].points[i].1);
            assert!(curves[1].points[i].1 > curves[2].points[i].1);
        }
        // all three converge far away
        for c in &curves {
            let far = law.local_wavelength(&FocusScheme::FixedR { r: c.focus_distance }, Length::from_cm(1e4));
            assert!((far.cm() - asym.cm()).abs() < 1e-3);
        }
    }

    #[test]
    fn maxima_finder_on_cosine() {
        let xs: Vec<f64> = (0..=10_000).map(|i| i as f64 * 1e-3).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (std::f64::consts::PI * (x - 0.123) / 0.85).cos().powi(2)).collect();
        let peaks = find_maxima(&xs, &ys);
        for w in peaks.windows(2) {
            assert!((w[1] - w[0] - 0.85).abs() < 1e-6);
        }
        assert!((peaks[0] - 0.123).abs() < 1e-6);
    }

    #[test]
    fn grid_validation() {
        assert!(uniform_grid(Length::ZERO, Length::from_cm(1.0), Length::ZERO).is_err());
        assert!(uniform_grid(Length::from_cm(2.0), Length::from_cm(1.0), Length::from_cm(0.1)).is_err());
        assert_eq!(uniform_grid(Length::ZERO, Length::ZERO, Length::from_cm(0.1)).unwrap().len(), 1);
    }
}
