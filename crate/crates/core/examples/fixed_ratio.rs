//! Fixed-ratio focusing: the r/(z + r) that yields a constant beating wavelength,
//! and a consistency check of reported maxima against it.

use schwarz_hora::analysis::{check_maxima_consistency, fit_fixed_ratio, ExperimentRecord, DEFAULT_MAXIMA_THRESHOLD};
use schwarz_hora::beating::BeatingLaw;
use schwarz_hora::kinematics::{BeamParameters, LaserField};
use schwarz_hora::slab_optics::{solve_tm0_mode, SlabGeometry};
use schwarz_hora::Length;

fn main() -> schwarz_hora::Result<()> {
    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0)?)?;
    let law = BeatingLaw::new(&beam, &laser, &mode);
    let record = ExperimentRecord::schwarz();

    let (min, max) = law.fixed_ratio_band();
    println!("attainable fixed-ratio wavelengths: {:.4} .. {:.4} cm\n", min.cm(), max.cm());

    for target in [1.70, 1.73, 1.75] {
        let target = Length::from_cm(target);
        let fit = fit_fixed_ratio(&record, target, &law)?;
        println!(
            "λ_b = {:.2} cm: r/(z+r) = {:.6}, r at z = {} cm is {:.4} cm",
            target.cm(),
            fit.ratio,
            record.reference_maximum().cm(),
            fit.focus_distance.cm()
        );
        let check = check_maxima_consistency(&record, target, DEFAULT_MAXIMA_THRESHOLD);
        for s in &check.spacings {
            println!(
                "    {:.1} → {:.1} cm: {:.3} half-periods (nearest {}, residual {:.3})",
                s.from_cm, s.to_cm, s.periods, s.nearest, s.residual
            );
        }
        println!("    consistent: {}", check.consistent);
    }
    Ok(())
}
