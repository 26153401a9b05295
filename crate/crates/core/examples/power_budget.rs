//! Photon power carried by a fraction of the beam, and modulation depth
//! against the elastic/sideband amplitude ratio.

use schwarz_hora::kinematics::LaserField;
use schwarz_hora::phenomenological::{amplitude_ratios_for_depth, modulation_depth, TransportBudget};

fn main() -> schwarz_hora::Result<()> {
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    let ev = laser.photon_energy_ev();

    println!("photon energy {ev:.4} eV");
    for fraction in [1e-4, 1e-3, 1e-2] {
        let b = TransportBudget::new(0.4, fraction, ev)?;
        println!("  0.4 µA, fraction {fraction:.0e}: {:.3e} W", b.transported_power());
    }
    let b = TransportBudget::new(0.4, 1e-3, ev)?;
    println!("  fraction needed for 1e-10 W: {:.3e}\n", b.fraction_for_power(1e-10)?);

    println!("{:>6} {:>7}", "b/a", "depth");
    for ratio in [0.1, 0.3, 0.557, 1.0, 1.796, 3.0] {
        println!("{ratio:>6.3} {:>7.4}", modulation_depth(1.0, ratio)?);
    }
    let (lo, hi) = amplitude_ratios_for_depth(0.85)?;
    println!("depth 0.85 at b/a = {lo:.4} or {hi:.4}");
    Ok(())
}
