//! Closed-form quasiconformal maps of the unit disc.
//!
//! Each [`MapFamily`] is a homeomorphism of the closed unit disc onto a
//! planar domain. Derivatives are expressed through the Wirtinger pair
//! `psi_z = (psi_x - i psi_y) / 2`, `psi_zbar = (psi_x + i psi_y) / 2`, from
//! which the Jacobian `|psi_z|^2 - |psi_zbar|^2` and the pointwise distortion
//! `(|psi_z| + |psi_zbar|) / (|psi_z| - |psi_zbar|)` follow.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A point of the complex plane.
pub type ComplexPoint = Complex64;

/// Below this gap `|psi_z| - |psi_zbar|` a map is treated as degenerate.
pub const DEGENERACY_EPS: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum MapFamily {
    Identity,
    /// `sqrt(a^2 + 1) z + a conj(z)`, onto an ellipse with semi-axes
    /// `sqrt(a^2 + 1) + a` and `sqrt(a^2 + 1) - a`.
    Ellipse {
        a: f64,
    },
    /// `a (z + 1)^(3/4) (conj(z) + 1)^(1/4)`, onto the petal `rho = 2a cos 2theta`.
    RosePetal {
        a: f64,
    },
    /// `A (z + z^n / n) + B (conj(z) + conj(z)^n / n)`, onto a domain bounded
    /// by an epicycloid with `n - 1` cusps.
    Epicycloid {
        #[serde(rename = "A")]
        analytic: f64,
        #[serde(rename = "B")]
        antianalytic: f64,
        n: u32,
    },
}

/// Value and Wirtinger derivatives of a map at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerEval {
    pub value: ComplexPoint,
    pub dz: ComplexPoint,
    pub dzbar: ComplexPoint,
}

impl WirtingerEval {
    pub fn jacobian(&self) -> f64 {
        self.dz.norm_sqr() - self.dzbar.norm_sqr()
    }
}

impl MapFamily {
    pub fn epicycloid(analytic: f64, antianalytic: f64, n: u32) -> Self {
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            n,
        }
    }

    /// Short kebab-case name, as used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            MapFamily::Identity => "identity",
            MapFamily::Ellipse { .. } => "ellipse",
            MapFamily::RosePetal { .. } => "rose-petal",
            MapFamily::Epicycloid { .. } => "epicycloid",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MapFamily::Identity => Ok(()),
            MapFamily::Ellipse { a } => {
                if a.is_finite() && a >= 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameters(format!(
                        "ellipse requires a >= 0, got {a}"
                    )))
                }
            }
            MapFamily::RosePetal { a } => {
                if a.is_finite() && a > 0.0 && a < 1.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameters(format!(
                        "rose petal requires 0 < a < 1, got {a}"
                    )))
                }
            }
            MapFamily::Epicycloid {
                analytic,
                antianalytic,
                n,
            } => {
                if !(analytic.is_finite() && antianalytic.is_finite()) {
                    return Err(Error::InvalidParameters(
                        "epicycloid coefficients must be finite".into(),
                    ));
                }
                if antianalytic < 0.0 {
                    return Err(Error::InvalidParameters(format!(
                        "epicycloid requires B >= 0, got {antianalytic}"
                    )));
                }
                if analytic <= antianalytic {
                    return Err(Error::InvalidParameters(format!(
                        "epicycloid requires A > B (K is infinite otherwise), got A = {analytic}, B = {antianalytic}"
                    )));
                }
                if n < 2 {
                    return Err(Error::InvalidParameters(format!(
                        "epicycloid requires n >= 2, got {n}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Whether the image of the unit disc is convex.
    pub fn image_is_convex(&self) -> bool {
        matches!(self, MapFamily::Identity | MapFamily::Ellipse { .. })
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MapFamily::Identity => write!(f, "identity"),
            MapFamily::Ellipse { a } => write!(f, "ellipse(a={a})"),
            MapFamily::RosePetal { a } => write!(f, "rose-petal(a={a})"),
            MapFamily::Epicycloid {
                analytic,
                antianalytic,
                n,
            } => write!(f, "epicycloid(A={analytic}, B={antianalytic}, n={n})"),
        }
    }
}

fn check_finite(z: ComplexPoint) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("non-finite point {z}")))
    }
}

fn ellipse_coefficient(a: f64) -> f64 {
    (a * a + 1.0).sqrt()
}

pub fn evaluate_map(family: &MapFamily, z: ComplexPoint) -> Result<ComplexPoint> {
    family.validate()?;
    check_finite(z)?;
    Ok(match *family {
        MapFamily::Identity => z,
        MapFamily::Ellipse { a } => ellipse_coefficient(a) * z + a * z.conj(),
        MapFamily::RosePetal { a } => {
            let w = z + 1.0;
            if w.norm_sqr() == 0.0 {
                // continuous extension at the petal corner
                ComplexPoint::new(0.0, 0.0)
            } else {
                a * w.powf(0.75) * w.conj().powf(0.25)
            }
        }
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            n,
        } => {
            let nf = f64::from(n);
            let zn = z.powu(n);
            analytic * (z + zn / nf) + antianalytic * (z.conj() + zn.conj() / nf)
        }
    })
}

pub fn wirtinger_derivatives(family: &MapFamily, z: ComplexPoint) -> Result<WirtingerEval> {
    let value = evaluate_map(family, z)?;
    let (dz, dzbar) = match *family {
        MapFamily::Identity => (ComplexPoint::new(1.0, 0.0), ComplexPoint::new(0.0, 0.0)),
        MapFamily::Ellipse { a } => (
            ComplexPoint::new(ellipse_coefficient(a), 0.0),
            ComplexPoint::new(a, 0.0),
        ),
        MapFamily::RosePetal { a } => {
            let w = z + 1.0;
            if w.norm_sqr() == 0.0 {
                return Err(Error::Domain(
                    "rose-petal derivatives are undefined at z = -1".into(),
                ));
            }
            let wc = w.conj();
            (
                0.75 * a * w.powf(-0.25) * wc.powf(0.25),
                0.25 * a * w.powf(0.75) * wc.powf(-0.75),
            )
        }
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            n,
        } => {
            let zk = z.powu(n - 1);
            (analytic * (1.0 + zk), antianalytic * (1.0 + zk.conj()))
        }
    };
    Ok(WirtingerEval { value, dz, dzbar })
}

pub fn jacobian(family: &MapFamily, z: ComplexPoint) -> Result<f64> {
    Ok(wirtinger_derivatives(family, z)?.jacobian())
}

/// `K(z) = (|psi_z| + |psi_zbar|) / (|psi_z| - |psi_zbar|)`.
pub fn pointwise_distortion(family: &MapFamily, z: ComplexPoint) -> Result<f64> {
    let w = wirtinger_derivatives(family, z)?;
    let (p, q) = (w.dz.norm(), w.dzbar.norm());
    let gap = p - q;
    if gap < DEGENERACY_EPS {
        return Err(Error::DegenerateMap {
            re: z.re,
            im: z.im,
            gap,
        });
    }
    Ok((p + q) / gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im)
    }

    #[test]
    fn identity_is_identity() {
        let z = c(0.3, 0.4);
        assert_eq!(evaluate_map(&MapFamily::Identity, z).unwrap(), z);
        assert_eq!(pointwise_distortion(&MapFamily::Identity, z).unwrap(), 1.0);
    }

    #[test]
    fn ellipse_vertices_are_semi_axes() {
        for a in [0.0, 0.125, 0.5, 2.0] {
            let f = MapFamily::Ellipse { a };
            let major = (a * a + 1.0).sqrt() + a;
            let minor = (a * a + 1.0).sqrt() - a;
            let p = evaluate_map(&f, c(1.0, 0.0)).unwrap();
            assert_abs_diff_eq!(p.re, major, epsilon = 1e-14);
            let m = evaluate_map(&f, c(-1.0, 0.0)).unwrap();
            assert_abs_diff_eq!(m.re, -major, epsilon = 1e-14);
            let i = evaluate_map(&f, c(0.0, 1.0)).unwrap();
            assert_abs_diff_eq!(i.im, minor, epsilon = 1e-14);
            assert_abs_diff_eq!(i.re, 0.0, epsilon = 1e-14);
            let mi = evaluate_map(&f, c(0.0, -1.0)).unwrap();
            assert_abs_diff_eq!(mi.im, -minor, epsilon = 1e-14);
        }
    }

    #[test]
    fn ellipse_zero_is_identity() {
        let z = c(-0.2, 0.7);
        let w = evaluate_map(&MapFamily::Ellipse { a: 0.0 }, z).unwrap();
        assert_eq!(w, z);
    }

    #[test]
    fn ellipse_jacobian_and_distortion() {
        let a = 0.3_f64;
        let f = MapFamily::Ellipse { a };
        let s = (a * a + 1.0).sqrt();
        let z = c(0.1, -0.5);
        assert_abs_diff_eq!(jacobian(&f, z).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            pointwise_distortion(&f, z).unwrap(),
            (s + a) / (s - a),
            epsilon = 1e-13
        );
    }

    #[test]
    fn rose_petal_corner_maps_to_origin() {
        let f = MapFamily::RosePetal { a: 0.7 };
        assert_eq!(evaluate_map(&f, c(-1.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(matches!(
            wirtinger_derivatives(&f, c(-1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rose_petal_constant_moduli() {
        let a = 0.9;
        let f = MapFamily::RosePetal { a };
        for z in [c(0.0, 0.0), c(0.5, 0.5), c(-0.9, 0.1), c(0.2, -0.95)] {
            let w = wirtinger_derivatives(&f, z).unwrap();
            assert_abs_diff_eq!(w.dz.norm(), 0.75 * a, epsilon = 1e-14);
            assert_abs_diff_eq!(w.dzbar.norm(), 0.25 * a, epsilon = 1e-14);
            assert_abs_diff_eq!(w.jacobian(), a * a / 2.0, epsilon = 1e-14);
            assert_abs_diff_eq!(pointwise_distortion(&f, z).unwrap(), 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn rose_petal_boundary_is_polar_petal() {
        let a = 0.4;
        let f = MapFamily::RosePetal { a };
        for k in 0..64 {
            let t = -std::f64::consts::PI + (k as f64 + 0.5) * std::f64::consts::TAU / 64.0;
            let p = evaluate_map(&f, ComplexPoint::from_polar(1.0, t)).unwrap();
            let theta = p.arg();
            assert_abs_diff_eq!(p.norm(), 2.0 * a * (2.0 * theta).cos(), epsilon = 1e-13);
            assert!(theta.abs() <= std::f64::consts::FRAC_PI_4 + 1e-14);
        }
    }

    #[test]
    fn epicycloid_derivatives_closed_form() {
        let f = MapFamily::epicycloid(0.2, 0.05, 3);
        let z = c(0.3, 0.6);
        let w = wirtinger_derivatives(&f, z).unwrap();
        assert_abs_diff_eq!((w.dz - 0.2 * (1.0 + z * z)).norm(), 0.0, epsilon = 1e-15);
        let j = (0.04 - 0.0025) * (1.0 + z * z).norm_sqr();
        assert_abs_diff_eq!(w.jacobian(), j, epsilon = 1e-15);
    }

    #[test]
    fn epicycloid_distortion_is_global_value() {
        let f = MapFamily::epicycloid(0.2, 0.05, 3);
        assert_abs_diff_eq!(
            pointwise_distortion(&f, c(0.5, 0.0)).unwrap(),
            5.0 / 3.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn epicycloid_cusp_is_degenerate() {
        let f = MapFamily::epicycloid(0.2, 0.05, 3);
        assert!(matches!(
            pointwise_distortion(&f, c(0.0, 1.0)),
            Err(Error::DegenerateMap { .. })
        ));
    }

    #[test]
    fn parameter_validation() {
        assert!(MapFamily::Ellipse { a: -0.1 }.validate().is_err());
        assert!(MapFamily::RosePetal { a: 1.0 }.validate().is_err());
        assert!(MapFamily::RosePetal { a: 0.0 }.validate().is_err());
        assert!(MapFamily::epicycloid(0.2, 0.2, 3).validate().is_err());
        assert!(MapFamily::epicycloid(0.2, 0.1, 1).validate().is_err());
        assert!(MapFamily::epicycloid(0.2, -0.1, 3).validate().is_err());
        assert!(matches!(
            evaluate_map(&MapFamily::epicycloid(0.1, 0.2, 3), c(0.0, 0.0)),
            Err(Error::InvalidParameters(_))
        ));
        assert!(evaluate_map(&MapFamily::Identity, c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn serde_tags() {
        let s = serde_json::to_string(&MapFamily::epicycloid(0.2, 0.05, 3)).unwrap();
        assert_eq!(s, r#"{"family":"epicycloid","A":0.2,"B":0.05,"n":3}"#);
        let back: MapFamily = serde_json::from_str(r#"{"family":"rose-petal","a":0.9}"#).unwrap();
        assert_eq!(back, MapFamily::RosePetal { a: 0.9 });
    }
}
