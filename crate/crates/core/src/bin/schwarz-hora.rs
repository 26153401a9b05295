use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schwarz_hora::beating::ModeOrder;
use schwarz_hora::config::{OutputFormat, ScenarioConfig};
use schwarz_hora::phenomenological::IntensityLaw;
use schwarz_hora::report::{Output, ReportTable};
use schwarz_hora::scenario;
use schwarz_hora::{Length, Result};

#[derive(Parser)]
#[command(version, about = "Sideband kinematics, spatial beating and photon-transport interference models")]
struct Cli {
    /// JSON scenario file; defaults to 50 keV electrons, 4880 Å light, α-quartz.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for report.json and CSV series.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    kinetic_energy_kev: Option<f64>,
    #[arg(long, global = true)]
    wavelength_angstrom: Option<f64>,
    #[arg(long, global = true)]
    refractive_index: Option<f64>,
    #[arg(long, global = true)]
    thickness_angstrom: Option<f64>,
    /// Use a fixed n cos α instead of solving the TM0 mode.
    #[arg(long, global = true)]
    effective_index: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Beam and laser scalars.
    Kinematics,
    /// Beating wavelength for one model.
    Beating {
        #[arg(long, value_enum)]
        model: ModelArg,
    },
    /// TM0 mode of the slab.
    ModeSolve,
    /// Focus distance putting χ(z0) = m π.
    FitR {
        #[arg(long = "m", required = true, num_args = 1..)]
        orders: Vec<f64>,
    },
    /// Fixed-ratio focus for a constant beating wavelength.
    FixedRatio {
        /// Target wavelength in cm.
        #[arg(long)]
        target: f64,
    },
    /// Normalized intensity profiles over the z grid.
    Profile {
        #[arg(long, value_enum, default_value = "all")]
        law: LawArg,
    },
    /// λ_b(z) curves for the configured beating orders.
    Figure2,
    /// Every model selected in the config.
    Run,
    /// Full reproduction report; exits nonzero if any row fails.
    ReproduceAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Planewave,
    Tm0,
    Divergent,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Sin2,
    Cos2,
    Phenom,
    All,
}

fn load_config(cli: &Cli) -> Result<ScenarioConfig> {
    let mut config = match &cli.config {
        Some(path) => ScenarioConfig::from_json(&fs::read_to_string(path)?)?,
        None => ScenarioConfig::default(),
    };
    if let Some(v) = cli.kinetic_energy_kev {
        config.beam.kinetic_energy_kev = v;
    }
    if let Some(v) = cli.wavelength_angstrom {
        config.laser.wavelength_angstrom = v;
    }
    if let Some(v) = cli.refractive_index {
        config.slab.refractive_index = v;
    }
    if let Some(v) = cli.thickness_angstrom {
        config.slab.thickness_angstrom = v;
    }
    if cli.effective_index.is_some() {
        config.slab.effective_index = cli.effective_index;
    }
    Ok(config)
}

/// Writes to stdout; a reader closing the pipe early is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn table(t: ReportTable) -> Output {
    Output {
        table: t,
        series: Vec::new(),
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let config = load_config(cli)?;
    let out_dir = cli
        .out
        .clone()
        .or_else(|| config.output.directory.as_ref().map(PathBuf::from));
    let json = cli.json || config.output.format == OutputFormat::Json;

    let output = if let Command::ReproduceAll = cli.command {
        table(scenario::reproduce_all()?)
    } else {
        let s = config.build()?;
        match &cli.command {
            Command::Kinematics => table(scenario::kinematics_report(&s)),
            Command::Beating { model } => match model {
                ModelArg::Planewave => table(scenario::planewave_report(&s)?),
                ModelArg::Tm0 => table(scenario::tm0_report(&s)?),
                ModelArg::Divergent => scenario::divergent_output(&s)?,
            },
            Command::ModeSolve => table(scenario::mode_report(&s)),
            Command::FitR { orders } => {
                let orders = orders
                    .iter()
                    .map(|&m| ModeOrder::from_f64(m))
                    .collect::<Result<Vec<_>>>()?;
                table(scenario::fit_r_report(&s, &orders)?)
            }
            Command::FixedRatio { target } => {
                table(scenario::fixed_ratio_report(&s, Length::from_cm(*target))?)
            }
            Command::Profile { law } => {
                let laws = match law {
                    LawArg::Sin2 => vec![IntensityLaw::Sin2],
                    LawArg::Cos2 => vec![IntensityLaw::Cos2],
                    LawArg::Phenom => vec![IntensityLaw::Phenomenological],
                    LawArg::All => vec![IntensityLaw::Sin2, IntensityLaw::Cos2, IntensityLaw::Phenomenological],
                };
                Output {
                    table: ReportTable::new("intensity profile"),
                    series: vec![scenario::profile_series(&s, &laws)?],
                }
            }
            Command::Figure2 => scenario::figure2_output(&s)?,
            Command::Run => scenario::run_scenario(&config)?,
            Command::ReproduceAll => unreachable!(),
        }
    };

    // bare series commands stream CSV when no directory is given
    let series_only = matches!(cli.command, Command::Profile { .. } | Command::Figure2);
    match &out_dir {
        Some(dir) => {
            output.write_to(dir)?;
            eprintln!("wrote report and {} series to {}", output.series.len(), dir.display());
        }
        None if series_only => {
            for s in &output.series {
                emit(&s.to_csv()?)?;
            }
            return Ok(output.table.all_passed());
        }
        None => {}
    }
    if json {
        emit(&(output.table.to_json()? + "\n"))?;
    } else {
        emit(&output.table.to_text())?;
    }
    Ok(output.table.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
