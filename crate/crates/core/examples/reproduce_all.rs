//! Full reproduction table; exits nonzero when any check fails.

use std::process::ExitCode;

fn main() -> ExitCode {
    match schwarz_hora::scenario::reproduce_all() {
        Ok(table) => {
            print!("{}", table.to_text());
            let failed = table.failures().count();
            println!("\n{} rows, {failed} failed", table.rows.len());
            if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
