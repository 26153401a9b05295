//! Focus distance r that puts a beating maximum of order m at a chosen z0.
//!
//! ```text
//! cargo run --example fit_focus -- [z0_cm]
//! ```

use std::f64::consts::PI;

use schwarz_hora::beating::{BeatingLaw, FocusScheme};
use schwarz_hora::kinematics::{BeamParameters, LaserField};
use schwarz_hora::slab_optics::{solve_tm0_mode, SlabGeometry};
use schwarz_hora::{Error, Length};

fn main() -> schwarz_hora::Result<()> {
    let z0: f64 = match std::env::args().nth(1) {
        Some(s) => s.parse().map_err(|_| Error::InvalidInput(format!("bad z0 {s:?}")))?,
        None => 10.2,
    };
    let z0 = Length::from_cm(z0);
    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0)?)?;
    let law = BeatingLaw::new(&beam, &laser, &mode);

    let (lo, hi) = law.order_band(z0);
    println!("z0 = {} cm: reachable orders {lo:.4} < m < {hi:.4}", z0.cm());
    let mut m = (2.0 * lo).floor() / 2.0;
    while m <= hi + 0.5 {
        match law.solve_r(z0, m) {
            Ok(r) => {
                let chi = law.chi_for(&FocusScheme::FixedR { r }, z0);
                println!("  m = {m:>5}: r = {:>10.4} cm   (χ/π = {:.12})", r.cm(), chi / PI);
            }
            Err(e) => println!("  m = {m:>5}: {e}"),
        }
        m += 0.5;
    }
    Ok(())
}
