//! Ellipse sweep across the crossover with Hersch's bound, as CSV.
//!
//!     cargo run --release --example sweep

use qcspec::report::{cmd_sweep, render_rows, OutputFormat, RunSettings, SweepParam};
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    let rows = cmd_sweep(
        &MapFamily::Ellipse { a: 0.0 },
        SweepParam::A,
        0.15,
        0.3,
        0.01,
        false,
        &RunSettings::default(),
    )?;
    print!("{}", render_rows(&rows, OutputFormat::Csv));
    let astar = qcspec::bounds::crossover_vs_hersch();
    eprintln!("qc - hersch changes sign at a* = {astar:.12}");
    Ok(())
}
