//! Pushes the disc mesh forward under a map and writes it in the plain text
//! mesh format.
//!
//!     cargo run --example mesh_export -- petal.mesh

use std::fs::File;
use std::io::BufWriter;

use qcspec::mesh::{pushforward_mesh, unit_disc_mesh};
use qcspec::MapFamily;

fn main() -> qcspec::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "rose_petal.mesh".into());
    let disc = unit_disc_mesh(12)?;
    let mesh = pushforward_mesh(&disc, &MapFamily::RosePetal { a: 0.7 })?;
    mesh.validate()?;
    mesh.write_text(BufWriter::new(File::create(&path)?))?;
    println!(
        "wrote {path}: {} vertices ({} on the boundary), {} triangles, area {:.6}",
        mesh.vertices.len(),
        mesh.boundary_count(),
        mesh.triangles.len(),
        mesh.area()
    );
    Ok(())
}
