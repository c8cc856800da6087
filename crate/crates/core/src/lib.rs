//! Quasiconformal lower bounds for the principal Dirichlet-Laplacian
//! eigenvalue of planar domains that are images of the unit disc, together
//! with a P1 finite-element eigensolver that checks every bound.
//!
//! The modules build on one another:
//!
//! - [`maps`]: the map families, their Wirtinger derivatives, Jacobians and
//!   pointwise distortion.
//! - [`qc`]: global distortion, Jacobian sup-norms, image areas and
//!   `beta`-integrals over the disc.
//! - [`bounds`]: Faber-Krahn, Makai, Hersch and quasiconformal bounds, the
//!   growth gap, and Sobolev-constant estimates.
//! - [`mesh`], [`sparse`], [`fem`]: the reference eigensolver.
//! - [`report`]: the records behind the `qcspec` command line tool.

pub mod bounds;
pub mod error;
pub mod fem;
pub mod maps;
pub mod mesh;
pub mod optimize;
pub mod qc;
pub mod report;
pub mod sparse;
pub mod special;

pub use bounds::{BoundReport, EllipseComparison};
pub use error::{Error, Result};
pub use fem::{EigenResult, FemSolution};
pub use maps::{ComplexPoint, MapFamily, WirtingerEval};
pub use mesh::Mesh;
pub use qc::{PolarGrid, QcAnalysis};
pub use sparse::CsrMatrix;
