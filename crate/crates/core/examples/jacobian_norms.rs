//! Analytic and grid sup-norms of the Jacobian, the `L^beta` integrals and the
//! image area for a rose petal and an epicycloid.
//!
//!     cargo run --release --example jacobian_norms

use qcspec::qc::{image_area, jacobian_beta_integral, jacobian_sup_norm, PolarGrid, SupNormMethod};
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    for f in [
        MapFamily::RosePetal { a: 0.7 },
        MapFamily::epicycloid(0.2, 0.05, 3),
    ] {
        let analytic = jacobian_sup_norm(&f, SupNormMethod::Analytic, None)?;
        println!("{f}: analytic ||J||_inf = {analytic:.10}");
        for m in [64, 256, 1024] {
            let grid = PolarGrid::square(m)?;
            let g = jacobian_sup_norm(&f, SupNormMethod::Grid, Some(grid))?;
            println!(
                "  grid {m:>4}^2: {g:.10}  (deficit {:.2e})",
                (analytic - g) / analytic
            );
        }
        let grid = PolarGrid::default();
        println!("  area = {:.10}", image_area(&f, grid)?);
        for beta in [1.0, 2.0] {
            println!(
                "  int |J|^{beta} = {:.10}",
                jacobian_beta_integral(&f, beta, grid)?
            );
        }
    }
    Ok(())
}
