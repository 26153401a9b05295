//! λ_b(z) for the three focus distances that put a maximum at 10.2 cm.
//! Writes `figure2.csv` into the directory given as the first argument,
//! or prints a coarse table when none is given.

use std::path::Path;

use schwarz_hora::analysis::{reproduce_figure2, uniform_grid};
use schwarz_hora::beating::{BeatingLaw, ModeOrder};
use schwarz_hora::kinematics::{BeamParameters, LaserField};
use schwarz_hora::report::Series;
use schwarz_hora::slab_optics::{solve_tm0_mode, SlabGeometry};
use schwarz_hora::Length;

fn main() -> schwarz_hora::Result<()> {
    let beam = BeamParameters::from_kinetic_energy_kev(50.0)?;
    let laser = LaserField::from_wavelength_angstrom(4880.0)?;
    let mode = solve_tm0_mode(&SlabGeometry::from_angstrom(1.55, 1007.0, 4880.0)?)?;
    let law = BeatingLaw::new(&beam, &laser, &mode);

    let orders = [12.0, 12.5, 13.0].map(|m| ModeOrder::from_f64(m).unwrap());
    let grid = uniform_grid(Length::ZERO, Length::from_cm(40.0), Length::from_cm(0.05))?;
    let curves = reproduce_figure2(&law, Length::from_cm(10.2), &orders, &grid)?;

    for c in &curves {
        println!("m = {}: r = {:.3} cm", c.order, c.focus_distance.cm());
    }
    println!("asymptote {:.4} cm, collimated {:.4} cm", law.asymptotic_wavelength().cm(), law.collimated_wavelength().cm());

    match std::env::args().nth(1) {
        Some(dir) => {
            let mut series = Series::new("figure2", &["z_cm", "m12_cm", "m12.5_cm", "m13_cm"]);
            for (i, z) in grid.iter().enumerate() {
                let mut row = vec![z.cm()];
                row.extend(curves.iter().map(|c| c.points[i].1.cm()));
                series.push(row);
            }
            std::fs::create_dir_all(&dir)?;
            series.write(Path::new(&dir))?;
            println!("wrote {dir}/figure2.csv ({} rows)", grid.len());
        }
        None => {
            println!("\n{:>6} {:>9} {:>9} {:>9}", "z [cm]", "m=12", "m=12.5", "m=13");
            for i in (0..grid.len()).step_by(100) {
                println!(
                    "{:>6.1} {:>9.4} {:>9.4} {:>9.4}",
                    grid[i].cm(),
                    curves[0].points[i].1.cm(),
                    curves[1].points[i].1.cm(),
                    curves[2].points[i].1.cm()
                );
            }
        }
    }
    Ok(())
}
