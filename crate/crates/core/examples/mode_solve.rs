//! TM₀ effective index and guided-mode count of a film in vacuum.
//!
//! ```text
//! cargo run --example mode_solve -- [refractive_index]
//! ```

use schwarz_hora::slab_optics::{mode_count, solve_tm0_mode, tm1_cutoff_thickness, SlabGeometry};
use schwarz_hora::Length;

fn main() -> schwarz_hora::Result<()> {
    let n: f64 = match std::env::args().nth(1) {
        Some(s) => s.parse().map_err(|_| schwarz_hora::Error::InvalidInput(format!("bad index {s:?}")))?,
        None => 1.55,
    };
    let cutoff = tm1_cutoff_thickness(n, Length::from_angstrom(4880.0))?;
    println!("n = {n}, λ = 4880 Å, TM1 cutoff at {:.2} Å\n", cutoff.angstrom());
    println!("{:>9} {:>12} {:>10} {:>7}", "d [Å]", "n cos α", "α [deg]", "modes");
    for d in [50.0, 200.0, 500.0, 1007.0, 1500.0, 2000.0, 3000.0, 5000.0] {
        let geom = SlabGeometry::from_angstrom(n, d, 4880.0)?;
        let mode = solve_tm0_mode(&geom)?;
        println!(
            "{d:>9.0} {:>12.8} {:>10.4} {:>7}",
            mode.effective_index,
            mode.tilt_angle.to_degrees(),
            mode_count(&geom)
        );
    }
    Ok(())
}
