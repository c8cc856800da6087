//! P1 finite elements for the Dirichlet eigenvalue problem
//! `int grad u . grad v = lambda int u v` on a triangulated domain.
//!
//! Boundary vertices are eliminated, so the assembled stiffness `K` and
//! consistent mass `M` act on interior vertices only. The principal
//! eigenpair of the pencil `(K, M)` is found by inverse iteration with
//! conjugate-gradient inner solves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::MapFamily;
use crate::mesh::{pushforward_mesh, unit_disc_mesh, Mesh, MIN_TRIANGLE_AREA};
use crate::sparse::{conjugate_gradient, norm2, CsrMatrix};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_OUTER_ITERATIONS: usize = 10_000;

/// Stiffness and mass matrices over the interior vertices of a mesh.
#[derive(Debug, Clone)]
pub struct P1System {
    pub stiffness: CsrMatrix,
    pub mass: CsrMatrix,
    /// Mesh vertex index of each unknown.
    pub interior: Vec<usize>,
}

pub fn assemble_p1(mesh: &Mesh) -> Result<P1System> {
    let mut dof = vec![usize::MAX; mesh.vertices.len()];
    let mut interior = Vec::new();
    for (v, &b) in mesh.boundary.iter().enumerate() {
        if !b {
            dof[v] = interior.len();
            interior.push(v);
        }
    }
    let n = interior.len();
    let mut k_trip = Vec::with_capacity(9 * mesh.triangles.len());
    let mut m_trip = Vec::with_capacity(9 * mesh.triangles.len());
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let area = mesh.triangle_area(t);
        if area <= MIN_TRIANGLE_AREA {
            return Err(Error::DegenerateTriangle { index: t, area });
        }
        let p = tri.map(|v| mesh.vertices[v]);
        // edge opposite vertex i
        let e: [[f64; 2]; 3] = std::array::from_fn(|i| {
            let (a, b) = (p[(i + 1) % 3], p[(i + 2) % 3]);
            [b[0] - a[0], b[1] - a[1]]
        });
        for i in 0..3 {
            let di = dof[tri[i]];
            if di == usize::MAX {
                continue;
            }
            for j in 0..3 {
                let dj = dof[tri[j]];
                if dj == usize::MAX {
                    continue;
                }
                let kij = (e[i][0] * e[j][0] + e[i][1] * e[j][1]) / (4.0 * area);
                let mij = if i == j { area / 6.0 } else { area / 12.0 };
                k_trip.push((di, dj, kij));
                m_trip.push((di, dj, mij));
            }
        }
    }
    Ok(P1System {
        stiffness: CsrMatrix::from_triplets(n, n, k_trip),
        mass: CsrMatrix::from_triplets(n, n, m_trip),
        interior,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    pub lambda: f64,
    /// Values at interior vertices, normalized so that `u^T M u = 1`.
    pub eigenvector: Vec<f64>,
    /// `||K u - lambda M u|| / ||K u||`.
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    /// Relative change of `lambda` and eigen-residual at which iteration stops.
    pub tol: f64,
    /// Relative residual for each conjugate-gradient solve.
    pub cg_tol: f64,
    pub max_outer: usize,
}

impl EigenOptions {
    pub fn with_tol(tol: f64) -> Self {
        EigenOptions {
            tol,
            cg_tol: tol / 100.0,
            max_outer: MAX_OUTER_ITERATIONS,
        }
    }
}

impl Default for EigenOptions {
    fn default() -> Self {
        Self::with_tol(DEFAULT_TOL)
    }
}

fn m_normalize(u: &mut [f64], mass: &CsrMatrix) {
    let s = mass.quadratic_form(u).sqrt();
    u.iter_mut().for_each(|x| *x /= s);
}

fn eigen_residual(k: &CsrMatrix, m: &CsrMatrix, u: &[f64], lambda: f64) -> f64 {
    let ku = k.mul_vec(u);
    let mu = m.mul_vec(u);
    let r: Vec<f64> = ku.iter().zip(&mu).map(|(a, b)| a - lambda * b).collect();
    norm2(&r) / norm2(&ku)
}

/// Smallest eigenpair of `K u = lambda M u` by inverse iteration.
pub fn smallest_eigenpair(k: &CsrMatrix, m: &CsrMatrix, opts: EigenOptions) -> Result<EigenResult> {
    let n = k.rows;
    if n == 0 || k.cols != n || m.rows != n || m.cols != n {
        return Err(Error::InvalidInput(format!(
            "pencil must be square and nonempty, got K {}x{}, M {}x{}",
            k.rows, k.cols, m.rows, m.cols
        )));
    }
    if !(opts.tol > 0.0 && opts.cg_tol > 0.0) {
        return Err(Error::InvalidInput("tolerances must be positive".into()));
    }

    let mut u = vec![1.0; n];
    m_normalize(&mut u, m);
    let mut lambda = k.quadratic_form(&u);
    let cg_max = 20 * n + 1000;
    let mut x = vec![0.0; n];

    for it in 1..=opts.max_outer {
        let b = m.mul_vec(&u);
        for (xi, ui) in x.iter_mut().zip(&u) {
            *xi = ui / lambda;
        }
        conjugate_gradient(k, &b, &mut x, opts.cg_tol, cg_max)?;
        u.copy_from_slice(&x);
        m_normalize(&mut u, m);
        let next = k.quadratic_form(&u);
        let change = (next - lambda).abs() / next;
        lambda = next;
        if change < opts.tol {
            let residual = eigen_residual(k, m, &u, lambda);
            if residual <= opts.tol {
                // Rayleigh quotient with the final vector
                let lambda = k.quadratic_form(&u) / m.quadratic_form(&u);
                return Ok(EigenResult {
                    lambda,
                    eigenvector: u,
                    residual,
                    iterations: it,
                });
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: opts.max_outer,
    })
}

/// FEM reference eigenvalue of a mapped disc and the mesh it was computed on.
#[derive(Debug, Clone)]
pub struct FemSolution {
    pub family: MapFamily,
    pub rings: usize,
    pub mesh: Mesh,
    pub eigen: EigenResult,
    pub interior: Vec<usize>,
}

impl FemSolution {
    pub fn lambda(&self) -> f64 {
        self.eigen.lambda
    }

    pub fn mesh_area(&self) -> f64 {
        self.mesh.area()
    }

    /// `u^T K u / u^T M u` recomputed from a fresh assembly.
    pub fn rayleigh_quotient(&self) -> Result<f64> {
        let sys = assemble_p1(&self.mesh)?;
        let u = &self.eigen.eigenvector;
        Ok(sys.stiffness.quadratic_form(u) / sys.mass.quadratic_form(u))
    }
}

/// Principal Dirichlet eigenvalue of a mesh.
pub fn mesh_eigenvalue(mesh: &Mesh, tol: f64) -> Result<EigenResult> {
    let sys = assemble_p1(mesh)?;
    smallest_eigenpair(&sys.stiffness, &sys.mass, EigenOptions::with_tol(tol))
}

/// Disc mesh, pushed forward through `family`, assembled and solved.
pub fn principal_eigenvalue(family: &MapFamily, rings: usize, tol: f64) -> Result<FemSolution> {
    let disc = unit_disc_mesh(rings)?;
    let mesh = pushforward_mesh(&disc, family)?;
    let sys = assemble_p1(&mesh)?;
    let eigen = smallest_eigenpair(&sys.stiffness, &sys.mass, EigenOptions::with_tol(tol))?;
    Ok(FemSolution {
        family: *family,
        rings,
        mesh,
        eigen,
        interior: sys.interior,
    })
}

/// Three-level extrapolation of a sequence computed at halving mesh sizes,
/// with the observed convergence order.
pub fn richardson_extrapolate(coarse: f64, medium: f64, fine: f64) -> (f64, f64) {
    let order = ((coarse - medium) / (medium - fine)).log2();
    let limit = fine - (medium - fine) / (2f64.powf(order) - 1.0);
    (limit, order)
}
