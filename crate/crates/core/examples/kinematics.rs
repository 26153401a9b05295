//! Beam and laser scalars, plus the exact sideband momenta, across beam energies.
//!
//! ```text
//! cargo run --example kinematics
//! ```

use schwarz_hora::kinematics::{
    absorption_probability, energy_ratio, lambda_b0, optimal_thickness_d0, sideband_momenta, BeamParameters,
    LaserField, SlabCoupling, QUARTZ_COUPLING_BETA,
};

fn main() -> schwarz_hora::Result<()> {
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    println!("photon energy {:.4} eV, ω = {:.4e} rad/s\n", laser.photon_energy_ev(), laser.angular_frequency());

    println!("{:>8} {:>8} {:>8} {:>11} {:>10} {:>8} {:>9}", "T [keV]", "v0/c", "gamma", "E0/ħω", "λ_b0 [cm]", "d0 [Å]", "(β/4)²");
    for kev in [1.0, 10.0, 25.0, 50.0, 100.0, 300.0, 500.0] {
        let beam = BeamParameters::from_kinetic_energy_kev(kev)?;
        let d0 = optimal_thickness_d0(&beam, &laser);
        let p = absorption_probability(&SlabCoupling::new(QUARTZ_COUPLING_BETA, d0, d0)?);
        println!(
            "{kev:>8.1} {:>8.4} {:>8.4} {:>11.4e} {:>10.4} {:>8.1} {:>9.5}",
            beam.beta(),
            beam.gamma(),
            energy_ratio(&beam, &laser),
            lambda_b0(&beam, &laser).cm(),
            d0.angstrom(),
            p
        );
    }

    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let set = sideband_momenta(&beam, &laser, 1.55)?;
    println!("\n50 keV channels inside n = 1.55:");
    for ch in &set.channels {
        println!(
            "  n = {:+}  p_x = {:.6e}  p_z = {:.9e} kg m/s  shell residual {:.1e}",
            ch.order,
            ch.transverse_momentum,
            ch.longitudinal_momentum,
            ch.mass_shell_residual()
        );
    }
    // χ = z K / 2ħ with K = 2p0 − p1 − p−1, so λ_b = 4πħ / K
    let lambda = 4.0 * std::f64::consts::PI * schwarz_hora::units::CODATA.reduced_planck / set.beating_momentum();
    println!("  beating wavelength from exact momenta: {:.4} cm", lambda * 100.0);
    Ok(())
}
