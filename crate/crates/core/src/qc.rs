//! Global quasiconformal invariants of a map family on the unit disc.
//!
//! Grid evaluations run in parallel over radial rows; every reduction is
//! performed row by row in a fixed order so results do not depend on the
//! number of worker threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::maps::{evaluate_map, jacobian, ComplexPoint, MapFamily};

pub const MIN_GRID: usize = 64;

/// Sup-norm nodes are pulled inside the open disc by this relative factor.
const SUP_RADIUS_CAP: f64 = 1.0 - 1e-9;

/// Polar midpoint grid on the unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarGrid {
    pub radial: usize,
    pub angular: usize,
}

impl PolarGrid {
    pub fn new(radial: usize, angular: usize) -> Result<Self> {
        if radial < MIN_GRID || angular < MIN_GRID {
            return Err(Error::InvalidGrid {
                radial,
                angular,
                min: MIN_GRID,
            });
        }
        Ok(PolarGrid { radial, angular })
    }

    pub fn square(m: usize) -> Result<Self> {
        Self::new(m, m)
    }

    fn radius(&self, i: usize) -> f64 {
        (i as f64 + 0.5) / self.radial as f64
    }

    fn angle(&self, j: usize) -> f64 {
        TAU * (j as f64 + 0.5) / self.angular as f64
    }
}

impl Default for PolarGrid {
    fn default() -> Self {
        PolarGrid {
            radial: 512,
            angular: 512,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupNormMethod {
    Analytic,
    Grid,
}

/// Global distortion coefficient `K` of the family on the unit disc.
pub fn global_distortion(family: &MapFamily) -> Result<f64> {
    family.validate()?;
    Ok(match *family {
        MapFamily::Identity => 1.0,
        MapFamily::Ellipse { a } => {
            let s = (a * a + 1.0).sqrt();
            (s + a) / (s - a)
        }
        MapFamily::RosePetal { .. } => 2.0,
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            ..
        } => (analytic + antianalytic) / (analytic - antianalytic),
    })
}

fn analytic_sup_norm(family: &MapFamily) -> f64 {
    match *family {
        MapFamily::Identity | MapFamily::Ellipse { .. } => 1.0,
        MapFamily::RosePetal { a } => a * a / 2.0,
        // |1 + z^(n-1)|^2 -> 4 as z^(n-1) -> 1
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            ..
        } => 4.0 * (analytic * analytic - antianalytic * antianalytic),
    }
}

/// Essential supremum of the Jacobian over the open unit disc.
///
/// The grid path returns the maximum over the capped midpoint nodes, which is
/// a lower estimate of the true supremum.
pub fn jacobian_sup_norm(
    family: &MapFamily,
    method: SupNormMethod,
    grid: Option<PolarGrid>,
) -> Result<f64> {
    family.validate()?;
    match method {
        SupNormMethod::Analytic => Ok(analytic_sup_norm(family)),
        SupNormMethod::Grid => {
            let grid = grid.ok_or_else(|| {
                Error::InvalidInput("grid sup-norm requires a grid specification".into())
            })?;
            let grid = PolarGrid::new(grid.radial, grid.angular)?;
            let row_max: Vec<f64> = (0..grid.radial)
                .into_par_iter()
                .map(|i| {
                    let r = grid.radius(i) * SUP_RADIUS_CAP;
                    let mut m = f64::NEG_INFINITY;
                    for j in 0..grid.angular {
                        let z = ComplexPoint::from_polar(r, grid.angle(j));
                        m = m.max(jacobian(family, z)?);
                    }
                    Ok(m)
                })
                .collect::<Result<_>>()?;
            Ok(row_max.into_iter().fold(f64::NEG_INFINITY, f64::max))
        }
    }
}

/// Midpoint-rule quadrature of `|J|^beta` over the unit disc in polar
/// coordinates.
pub fn jacobian_beta_integral(family: &MapFamily, beta: f64, grid: PolarGrid) -> Result<f64> {
    family.validate()?;
    if !(beta.is_finite() && beta >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "beta must be >= 1, got {beta}"
        )));
    }
    let grid = PolarGrid::new(grid.radial, grid.angular)?;
    let rows: Vec<f64> = (0..grid.radial)
        .into_par_iter()
        .map(|i| {
            let r = grid.radius(i);
            let mut s = 0.0;
            for j in 0..grid.angular {
                let z = ComplexPoint::from_polar(r, grid.angle(j));
                s += jacobian(family, z)?.abs().powf(beta);
            }
            Ok(s * r)
        })
        .collect::<Result<_>>()?;
    let cell = (1.0 / grid.radial as f64) * (TAU / grid.angular as f64);
    Ok(rows.iter().sum::<f64>() * cell)
}

/// Area of the image domain by the change-of-variables formula.
pub fn image_area(family: &MapFamily, grid: PolarGrid) -> Result<f64> {
    jacobian_beta_integral(family, 1.0, grid)
}

/// Images of `samples` equally spaced points of the unit circle, starting at 1.
pub fn boundary_samples(family: &MapFamily, samples: usize) -> Result<Vec<ComplexPoint>> {
    (0..samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            evaluate_map(family, ComplexPoint::from_polar(1.0, t))
        })
        .collect()
}

/// Sampled check that the image domain lies inside the unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InclusionCheck {
    pub max_boundary_modulus: f64,
    pub inside_unit_disc: bool,
}

pub const INCLUSION_SAMPLES: usize = 4096;

pub fn unit_disc_inclusion(family: &MapFamily) -> Result<InclusionCheck> {
    let max = boundary_samples(family, INCLUSION_SAMPLES)?
        .iter()
        .map(|p| p.norm())
        .fold(0.0, f64::max);
    Ok(InclusionCheck {
        max_boundary_modulus: max,
        inside_unit_disc: max < 1.0 - 1e-9,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InradiusMethod {
    Analytic,
    Estimated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Inradius {
    pub value: f64,
    pub method: InradiusMethod,
}

fn segment_distance(p: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 > 0.0 {
        ((p - a).re * ab.re + (p - a).im * ab.im) / len2
    } else {
        0.0
    };
    (p - (a + ab * t.clamp(0.0, 1.0))).norm()
}

fn polyline_distance(p: ComplexPoint, boundary: &[ComplexPoint]) -> f64 {
    let n = boundary.len();
    (0..n)
        .map(|k| segment_distance(p, boundary[k], boundary[(k + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Radius of the largest disc inscribed in the image domain.
///
/// Exact for the identity and the ellipse (semi-minor axis). Otherwise the
/// distance to a densely sampled boundary polygon is maximized over images of
/// a polar grid, then polished by a pattern search in the source disc.
pub fn inradius(family: &MapFamily) -> Result<Inradius> {
    family.validate()?;
    match *family {
        MapFamily::Identity => {
            return Ok(Inradius {
                value: 1.0,
                method: InradiusMethod::Analytic,
            })
        }
        MapFamily::Ellipse { a } => {
            return Ok(Inradius {
                value: (a * a + 1.0).sqrt() - a,
                method: InradiusMethod::Analytic,
            })
        }
        _ => {}
    }

    let boundary = boundary_samples(family, 2048)?;
    let depth = |z: ComplexPoint| -> Result<f64> {
        Ok(polyline_distance(evaluate_map(family, z)?, &boundary))
    };

    let (nr, na) = (32, 64);
    let candidates: Vec<(f64, ComplexPoint)> = (0..nr)
        .into_par_iter()
        .map(|i| {
            let r = (i as f64 + 0.5) / nr as f64;
            let mut best = (f64::NEG_INFINITY, ComplexPoint::new(0.0, 0.0));
            for j in 0..na {
                let z = ComplexPoint::from_polar(r, TAU * j as f64 / na as f64);
                let d = depth(z)?;
                if d > best.0 {
                    best = (d, z);
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let (mut best, mut z) = candidates.into_iter().fold(
        (f64::NEG_INFINITY, ComplexPoint::new(0.0, 0.0)),
        |acc, c| {
            if c.0 > acc.0 {
                c
            } else {
                acc
            }
        },
    );

    let mut step = 1.0 / nr as f64;
    while step > 1e-7 {
        let mut moved = false;
        for k in 0..8 {
            let trial = z + ComplexPoint::from_polar(step, PI / 4.0 * k as f64);
            if trial.norm() >= 1.0 {
                continue;
            }
            let d = depth(trial)?;
            if d > best {
                best = d;
                z = trial;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    Ok(Inradius {
        value: best,
        method: InradiusMethod::Estimated,
    })
}

/// Global quasiconformal data of one map family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QcAnalysis {
    pub family: MapFamily,
    pub k_global: f64,
    pub j_sup: f64,
    pub j_sup_method: SupNormMethod,
    /// Grid maximum of the Jacobian, a lower estimate of `j_sup`.
    pub j_sup_grid: f64,
    pub image_area: f64,
    pub grid_resolution: PolarGrid,
}

impl QcAnalysis {
    pub fn compute(family: &MapFamily, grid: PolarGrid) -> Result<Self> {
        Ok(QcAnalysis {
            family: *family,
            k_global: global_distortion(family)?,
            j_sup: jacobian_sup_norm(family, SupNormMethod::Analytic, None)?,
            j_sup_method: SupNormMethod::Analytic,
            j_sup_grid: jacobian_sup_norm(family, SupNormMethod::Grid, Some(grid))?,
            image_area: image_area(family, grid)?,
            grid_resolution: grid,
        })
    }

    /// `K * ||J||_inf`, the quantity both eigenvalue bounds depend on.
    pub fn distortion_product(&self) -> f64 {
        self.k_global * self.j_sup
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grid_minimum_enforced() {
        assert!(matches!(
            PolarGrid::new(63, 64),
            Err(Error::InvalidGrid { .. })
        ));
        assert!(jacobian_sup_norm(&MapFamily::Identity, SupNormMethod::Grid, None).is_err());
        let bad = PolarGrid {
            radial: 8,
            angular: 8,
        };
        assert!(image_area(&MapFamily::Identity, bad).is_err());
    }

    #[test]
    fn distortion_values() {
        assert_eq!(
            global_distortion(&MapFamily::Ellipse { a: 0.0 }).unwrap(),
            1.0
        );
        assert_abs_diff_eq!(
            global_distortion(&MapFamily::epicycloid(0.2, 0.05, 3)).unwrap(),
            5.0 / 3.0,
            epsilon = 1e-15
        );
        for a in [0.1, 0.5, 0.9] {
            assert_eq!(global_distortion(&MapFamily::RosePetal { a }).unwrap(), 2.0);
        }
        assert!(global_distortion(&MapFamily::epicycloid(0.2, 0.2, 3)).is_err());
    }

    #[test]
    fn rose_petal_product_is_a_squared() {
        for a in [0.3, 0.5, 0.7, 0.9] {
            let f = MapFamily::RosePetal { a };
            let k = global_distortion(&f).unwrap();
            let j = jacobian_sup_norm(&f, SupNormMethod::Analytic, None).unwrap();
            assert_eq!(k * j, a * a);
        }
    }

    #[test]
    fn identity_beta_integrals() {
        let g = PolarGrid::square(64).unwrap();
        for beta in [1.0, 2.0, 7.0] {
            assert_abs_diff_eq!(
                jacobian_beta_integral(&MapFamily::Identity, beta, g).unwrap(),
                PI,
                epsilon = 1e-12
            );
        }
        assert!(jacobian_beta_integral(&MapFamily::Identity, 0.5, g).is_err());
    }

    #[test]
    fn epicycloid_area_closed_form() {
        // (A^2 - B^2) * integral |1 + z^(n-1)|^2 = (A^2 - B^2) * pi * (1 + 1/n)
        let f = MapFamily::epicycloid(0.2, 0.05, 3);
        let exact = 0.0375 * PI * (4.0 / 3.0);
        let area = image_area(&f, PolarGrid::square(512).unwrap()).unwrap();
        assert_abs_diff_eq!(area, exact, epsilon = 1e-6);
    }

    #[test]
    fn rose_petal_inclusion_needs_small_a() {
        let small = unit_disc_inclusion(&MapFamily::RosePetal { a: 0.4 }).unwrap();
        assert!(small.inside_unit_disc);
        assert_abs_diff_eq!(small.max_boundary_modulus, 0.8, epsilon = 1e-12);
        let big = unit_disc_inclusion(&MapFamily::RosePetal { a: 0.9 }).unwrap();
        assert!(!big.inside_unit_disc);
        assert!(
            unit_disc_inclusion(&MapFamily::epicycloid(0.2, 0.05, 3))
                .unwrap()
                .inside_unit_disc
        );
    }

    #[test]
    fn inradius_values() {
        let e = inradius(&MapFamily::Ellipse { a: 0.125 }).unwrap();
        assert_abs_diff_eq!(e.value, 0.882_782_218_537_318_7, epsilon = 1e-12);
        // the petal is symmetric about the real axis; its inscribed disc is
        // well inside the circumscribed bound 2a
        let a = 0.5;
        let r = inradius(&MapFamily::RosePetal { a }).unwrap();
        assert_eq!(r.method, InradiusMethod::Estimated);
        assert!(r.value > 0.2 * a && r.value < a, "rho = {}", r.value);
    }

    #[test]
    fn polygon_distance_from_circle_centre() {
        let boundary: Vec<_> = (0..2048)
            .map(|k| ComplexPoint::from_polar(1.0, TAU * k as f64 / 2048.0))
            .collect();
        let d = polyline_distance(ComplexPoint::new(0.0, 0.0), &boundary);
        assert_abs_diff_eq!(d, 1.0, epsilon = 2e-6);
    }
}
