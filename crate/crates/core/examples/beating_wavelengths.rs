//! Beating wavelength under the plane-wave, guided-mode and diverging-beam models.

use schwarz_hora::beating::{lambda_b_local, lambda_b_planewave, lambda_b_tm0, FocusScheme, GeometryScenario};
use schwarz_hora::kinematics::{lambda_b0, BeamParameters, LaserField};
use schwarz_hora::slab_optics::{solve_tm0_mode, SlabGeometry};
use schwarz_hora::Length;

fn main() -> schwarz_hora::Result<()> {
    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;

    for (name, n, d) in [("α-quartz", 1.55, 1007.0), ("fused silica", 1.46, 1007.0)] {
        let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(n, d, 4880.0)?)?;
        println!("{name} (n = {n}, d = {d} Å, n cos α = {:.6})", mode.effective_index);
        println!("  vacuum       {:.4} cm", lambda_b0(&beam, &laser).cm());
        println!("  plane wave   {:.4} cm", lambda_b_planewave(&beam, &laser, n)?.cm());
        println!("  TM0          {:.4} cm", lambda_b_tm0(&beam, &laser, &mode)?.cm());
        let r = Length::from_cm(4.57);
        for z in [0.0, 5.0, 10.2, 20.0, 40.0, 1e6] {
            let sc = GeometryScenario::new(Length::from_cm(z), FocusScheme::FixedR { r })?;
            println!("  r = 4.57 cm, z = {z:>9} cm: {:.4} cm", lambda_b_local(&sc, &beam, &laser, &mode).cm());
        }
        println!();
    }
    Ok(())
}
