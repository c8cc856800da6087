//! Refines the disc mesh, solves for the principal Dirichlet eigenvalue and
//! extrapolates to the continuum limit `j01^2`.
//!
//!     cargo run --release --example disc_reference

use std::time::Instant;

use qcspec::bounds::disc_eigenvalue;
use qcspec::fem::{principal_eigenvalue, richardson_extrapolate, DEFAULT_TOL};
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    let exact = disc_eigenvalue();
    println!("j01^2 = {exact:.12}");
    println!(
        "{:>6} {:>16} {:>12} {:>10} {:>6} {:>9}",
        "rings", "lambda_h", "rel. error", "residual", "iters", "time [s]"
    );
    let mut values = Vec::new();
    for rings in [16, 32, 64] {
        let start = Instant::now();
        let sol = principal_eigenvalue(&MapFamily::Identity, rings, DEFAULT_TOL)?;
        println!(
            "{:>6} {:>16.12} {:>12.3e} {:>10.2e} {:>6} {:>9.3}",
            rings,
            sol.lambda(),
            (sol.lambda() - exact) / exact,
            sol.eigen.residual,
            sol.eigen.iterations,
            start.elapsed().as_secs_f64()
        );
        values.push(sol.lambda());
    }
    let (limit, order) = richardson_extrapolate(values[0], values[1], values[2]);
    println!(
        "extrapolated {limit:.12} (observed order {order:.3}), rel. error {:.3e}",
        (limit - exact) / exact
    );
    Ok(())
}
