//! The full table of worked examples as Markdown. Coarser than the CLI
//! default so it finishes quickly.
//!
//!     cargo run --release --example paper_table

use qcspec::report::{cmd_paper_table, render_rows, OutputFormat, RunSettings};

fn main() {
    let settings = RunSettings {
        rings: 32,
        ..RunSettings::default()
    };
    print!(
        "{}",
        render_rows(&cmd_paper_table(&settings), OutputFormat::Md)
    );
}
