//! Upper estimates of the Sobolev-Poincare constant `A_{r,2}` from the
//! optimized Holder exponent, for the disc and for a distorted image.
//!
//!     cargo run --example sobolev_constant

use std::f64::consts::PI;

use qcspec::bounds::{
    a22_from_lambda, disc_eigenvalue, sobolev_constant_upper, sobolev_interval,
    weighted_sobolev_constant,
};

fn main() -> qcspec::Result<()> {
    println!(
        "A_22 of the disc = 1/sqrt(lambda_1) = {:.10}",
        a22_from_lambda(disc_eigenvalue())?
    );
    for r in [2.0, 2.5, 3.0, 4.0] {
        let (lo, hi) = sobolev_interval(r);
        println!(
            "r = {r}: p in ({lo:.6}, {hi:.6}), A_r2 <= {:.10}, with K = 2: {:.10}",
            sobolev_constant_upper(r, PI)?,
            weighted_sobolev_constant(r, 2.0, PI)?
        );
    }
    Ok(())
}
