//! Every closed-form lower bound for one domain, printed as JSON.
//!
//!     cargo run --release --example eigenvalue_bounds -- 0.9

use qcspec::qc::PolarGrid;
use qcspec::{BoundReport, MapFamily};

fn main() -> qcspec::Result<()> {
    let a = std::env::args()
        .nth(1)
        .map_or(Ok(0.9), |s| s.parse())
        .expect("petal parameter");
    let (qc, report) = BoundReport::compute(&MapFamily::RosePetal { a }, PolarGrid::default())?;
    println!(
        "K = {}, J_sup = {}, K*J_sup = {}",
        qc.k_global,
        qc.j_sup,
        qc.distortion_product()
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(())
}
