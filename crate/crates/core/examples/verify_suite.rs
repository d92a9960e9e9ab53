//! Runs every verification fixture and prints the report.

use magicsq::output::{emit, Format};
use magicsq::verify::run_verify;

fn main() -> magicsq::Result<()> {
    let pattern = std::env::args().nth(1);
    let report = run_verify(pattern.as_deref())?;
    print!("{}", emit(&report, Format::Text)?);
    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
