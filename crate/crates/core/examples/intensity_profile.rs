//! Normalized intensity along z for the sin²χ, cos²χ and two-beam interference laws,
//! with the located maxima of each.

use schwarz_hora::analysis::{find_maxima, uniform_grid};
use schwarz_hora::beating::{BeatingLaw, FocusScheme};
use schwarz_hora::kinematics::{BeamParameters, LaserField};
use schwarz_hora::phenomenological::{amplitudes_from_currents, intensity_profile, IntensityLaw};
use schwarz_hora::slab_optics::{solve_tm0_mode, SlabGeometry};
use schwarz_hora::Length;

fn main() -> schwarz_hora::Result<()> {
    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0)?)?;
    let law = BeatingLaw::new(&beam, &laser, &mode);

    let grid = uniform_grid(Length::ZERO, Length::from_cm(40.0), Length::from_cm(0.005))?;
    let amps = amplitudes_from_currents(1.0, 0.31)?;
    let scheme = FocusScheme::FixedR { r: Length::from_cm(4.57) };
    let profile = intensity_profile(&grid, &scheme, &law, beam.beta(), amps)?;

    let z: Vec<f64> = grid.iter().map(|z| z.cm()).collect();
    for l in [IntensityLaw::Sin2, IntensityLaw::Cos2, IntensityLaw::Phenomenological] {
        let y: Vec<f64> = profile.iter().map(|p| p.get(l)).collect();
        let peaks = find_maxima(&z, &y);
        let shown: Vec<String> = peaks.iter().take(8).map(|p| format!("{p:.2}")).collect();
        println!("{l:?}: I(0) = {:.3}, first maxima [cm] {}", y[0], shown.join(", "));
    }
    Ok(())
}
