//! Checks the quasiconformal bound and the growth gap against FEM eigenvalues
//! for several domains.
//!
//!     cargo run --release --example verify_theorem

use qcspec::report::{cmd_verify, RunSettings};
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    let settings = RunSettings {
        rings: 48,
        ..RunSettings::default()
    };
    println!(
        "{:<28} {:>12} {:>12} {:>12} {:>12}",
        "domain", "fem", "qc_lower", "fem gap", "gap bound"
    );
    for f in [
        MapFamily::Ellipse { a: 0.125 },
        MapFamily::Ellipse { a: 0.5 },
        MapFamily::RosePetal { a: 0.9 },
        MapFamily::epicycloid(0.15, 0.05, 5),
    ] {
        let r = cmd_verify(&f, &settings)?;
        let gap = r.growth_gap.map_or("-".to_string(), |g| format!("{g:.6}"));
        println!(
            "{:<28} {:>12.6} {:>12.6} {:>12.6} {:>12} {}",
            f.to_string(),
            r.fem_lambda,
            r.qc_lower,
            r.fem_gap,
            gap,
            if r.all_hold { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}
