//! Pointwise and global distortion of each map family, with the Wirtinger
//! derivatives at a few sample points.
//!
//!     cargo run --example map_distortion

use num_complex::Complex64;
use qcspec::maps::{pointwise_distortion, wirtinger_derivatives};
use qcspec::qc::global_distortion;
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    let families = [
        MapFamily::Identity,
        MapFamily::Ellipse { a: 0.125 },
        MapFamily::RosePetal { a: 0.9 },
        MapFamily::epicycloid(0.2, 0.05, 3),
    ];
    let points = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::from_polar(0.8, 2.0),
    ];
    for f in &families {
        println!("{f}: K = {:.6}", global_distortion(f)?);
        for &z in &points {
            // the rose petal has no derivative at the origin of its chart
            let Ok(w) = wirtinger_derivatives(f, z) else {
                println!("  z = {z:.3}: derivatives undefined");
                continue;
            };
            println!(
                "  z = {z:.3}: psi_z = {:.5}, psi_zbar = {:.5}, J = {:.6}, K(z) = {:.6}",
                w.dz,
                w.dzbar,
                w.jacobian(),
                pointwise_distortion(f, z)?
            );
        }
    }
    Ok(())
}
