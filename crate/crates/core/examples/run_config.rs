//! Runs a JSON scenario through every selected model and writes the outputs.
//!
//! ```text
//! cargo run --example run_config -- configs/fused_silica.json [out_dir]
//! ```

use std::path::PathBuf;

use schwarz_hora::config::ScenarioConfig;
use schwarz_hora::scenario::run_scenario;

fn main() -> schwarz_hora::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = PathBuf::from(args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/configs/golden.json").into()));
    let config = ScenarioConfig::from_json(&std::fs::read_to_string(&path)?)?;
    let output = run_scenario(&config)?;
    print!("{}", output.table.to_text());
    for s in &output.series {
        println!("series {}: {} rows × {} columns", s.name, s.rows.len(), s.columns.len());
    }
    if let Some(dir) = args.next() {
        output.write_to(&PathBuf::from(&dir))?;
        println!("wrote {dir}");
    }
    Ok(())
}
