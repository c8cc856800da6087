//! Lower bounds for the principal Dirichlet eigenvalue and the Sobolev
//! constants behind them.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::maps::MapFamily;
use crate::optimize::minimize_bounded;
use crate::qc::{self, InclusionCheck, Inradius, PolarGrid, QcAnalysis};
use crate::special::{bessel_j0_first_zero, ln_gamma};

/// Makai constant for simply connected domains.
pub const MAKAI_ALPHA: f64 = 0.25;
/// Hersch constant for convex domains.
pub const HERSCH_ALPHA: f64 = PI * PI / 4.0;

/// Open-interval margin for the Sobolev-constant minimization.
pub const SOBOLEV_EPS: f64 = 1e-9;
/// Bracket width at which the golden-section search stops.
pub const SOBOLEV_TOL: f64 = 1e-12;

/// First positive zero of `J0`, computed once.
pub fn j01() -> f64 {
    static J01: OnceLock<f64> = OnceLock::new();
    *J01.get_or_init(bessel_j0_first_zero)
}

/// `lambda_1` of the unit disc, `j01^2`.
pub fn disc_eigenvalue() -> f64 {
    let j = j01();
    j * j
}

fn require_positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{name} must be positive, got {x}"
        )))
    }
}

/// Rayleigh-Faber-Krahn: `lambda_1 >= j01^2 / R^2` with `pi R^2 = area`.
pub fn faber_krahn_bound(area: f64) -> Result<f64> {
    require_positive("area", area)?;
    Ok(disc_eigenvalue() * PI / area)
}

/// `1 / (4 rho^2)`, valid for simply connected domains.
pub fn makai_bound(inradius: f64) -> Result<f64> {
    require_positive("inradius", inradius)?;
    Ok(MAKAI_ALPHA / (inradius * inradius))
}

/// `pi^2 / (4 rho^2)`; the caller certifies the domain is convex.
pub fn hersch_bound(inradius: f64) -> Result<f64> {
    require_positive("inradius", inradius)?;
    Ok(HERSCH_ALPHA / (inradius * inradius))
}

fn check_qc_inputs(lambda_ref: f64, k: f64, j_sup: f64) -> Result<()> {
    require_positive("lambda_ref", lambda_ref)?;
    require_positive("j_sup", j_sup)?;
    if !(k.is_finite() && k >= 1.0) {
        return Err(Error::InvalidInput(format!("K must be >= 1, got {k}")));
    }
    Ok(())
}

/// `lambda_1(Omega) >= lambda_1(Omega') / (K ||J||_inf)` for a K-quasiconformal
/// map of `Omega'` onto `Omega`.
pub fn qc_lower_bound(lambda_ref: f64, k: f64, j_sup: f64) -> Result<f64> {
    check_qc_inputs(lambda_ref, k, j_sup)?;
    Ok(lambda_ref / (k * j_sup))
}

/// Lower bound on `lambda_1(Omega) - lambda_1(Omega')`, positive only when
/// `K ||J||_inf < 1`.
pub fn growth_gap_bound(lambda_ref: f64, k: f64, j_sup: f64) -> Result<f64> {
    check_qc_inputs(lambda_ref, k, j_sup)?;
    let product = k * j_sup;
    if product >= 1.0 {
        return Err(Error::VacuousBound { product });
    }
    Ok((1.0 - product) / product * lambda_ref)
}

/// The function of `p` whose infimum over `(2r/(r+2), 2)` bounds `A_{r,2}`,
/// evaluated in log form.
pub fn sobolev_log_objective(p: f64, r: f64, area: f64) -> f64 {
    ((p - 1.0) / p) * ((p - 1.0) / (2.0 - p)).ln() + area.ln() / r
        - 0.5 * PI.ln()
        - std::f64::consts::LN_2 / p
        - 0.5 * (ln_gamma(2.0 / p) + ln_gamma(3.0 - 2.0 / p))
}

pub fn sobolev_objective(p: f64, r: f64, area: f64) -> f64 {
    sobolev_log_objective(p, r, area).exp()
}

/// Search interval for the Sobolev-constant infimum.
pub fn sobolev_interval(r: f64) -> (f64, f64) {
    (2.0 * r / (r + 2.0) + SOBOLEV_EPS, 2.0 - SOBOLEV_EPS)
}

/// Upper estimate of the Sobolev-Poincare constant `A_{r,2}` of a domain of
/// the given area.
pub fn sobolev_constant_upper(r: f64, area_ref: f64) -> Result<f64> {
    if !(r.is_finite() && r >= 2.0) {
        return Err(Error::InvalidInput(format!("r must be >= 2, got {r}")));
    }
    require_positive("area", area_ref)?;
    let (lo, hi) = sobolev_interval(r);
    let m = minimize_bounded(
        |p| sobolev_log_objective(p, r, area_ref),
        lo,
        hi,
        SOBOLEV_TOL,
    );
    Ok(m.value.exp())
}

/// Weighted constant `A_{r,2}(h, Omega) <= K^(1/2) A_{r,2}(Omega')`.
pub fn weighted_sobolev_constant(r: f64, k: f64, area_ref: f64) -> Result<f64> {
    if !(k.is_finite() && k >= 1.0) {
        return Err(Error::InvalidInput(format!("K must be >= 1, got {k}")));
    }
    Ok(k.sqrt() * sobolev_constant_upper(r, area_ref)?)
}

/// `A_{2,2} = lambda_1^(-1/2)`.
pub fn a22_from_lambda(lambda1: f64) -> Result<f64> {
    require_positive("lambda1", lambda1)?;
    Ok(1.0 / lambda1.sqrt())
}

/// Quasiconformal bound versus Hersch's bound on the ellipse image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipseComparison {
    pub a: f64,
    pub semi_minor: f64,
    pub qc: f64,
    pub hersch: f64,
    pub qc_wins: bool,
}

pub fn ellipse_vs_hersch(a: f64) -> Result<EllipseComparison> {
    if !(a.is_finite() && a >= 0.0) {
        return Err(Error::InvalidParameters(format!(
            "ellipse requires a >= 0, got {a}"
        )));
    }
    let s = (a * a + 1.0).sqrt();
    let b = s - a;
    let qc = qc_lower_bound(disc_eigenvalue(), (s + a) / (s - a), 1.0)?;
    let hersch = hersch_bound(b)?;
    Ok(EllipseComparison {
        a,
        semi_minor: b,
        qc,
        hersch,
        qc_wins: qc > hersch,
    })
}

/// Parameter `a*` at which the ellipse quasiconformal bound meets Hersch's,
/// by bisection to 1e-12.
pub fn crossover_vs_hersch() -> f64 {
    let gap = |a: f64| {
        let c = ellipse_vs_hersch(a).expect("a >= 0");
        c.qc - c.hersch
    };
    // qc - hersch is positive at 0 and decreasing in a
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Every lower bound available for one map family with the unit disc as
/// reference domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub family: MapFamily,
    pub lambda_ref: f64,
    pub k_j_sup: f64,
    pub qc_lower: f64,
    pub growth_gap: Option<f64>,
    pub growth_gap_status: String,
    pub inclusion: InclusionCheck,
    pub faber_krahn: f64,
    pub inradius: Inradius,
    pub makai: f64,
    pub hersch: Option<f64>,
    /// `K^(1/2) A_{2,2}(D) ||J||_inf^(1/2)` with `A_{2,2}(D) = 1 / j01`.
    pub sobolev_a22_upper: f64,
    /// Upper estimate of `A_{2,2}(D)` from the Gamma-function formula.
    pub sobolev_a22_ref_estimate: f64,
    /// `K^(1/2)` times the previous estimate.
    pub weighted_sobolev_a22: f64,
}

impl BoundReport {
    pub fn from_analysis(qc: &QcAnalysis) -> Result<Self> {
        let family = qc.family;
        let lambda_ref = disc_eigenvalue();
        let product = qc.distortion_product();
        let qc_lower = qc_lower_bound(lambda_ref, qc.k_global, qc.j_sup)?;
        let inclusion = qc::unit_disc_inclusion(&family)?;
        let (growth_gap, growth_gap_status) =
            match growth_gap_bound(lambda_ref, qc.k_global, qc.j_sup) {
                Ok(g) if inclusion.inside_unit_disc => (Some(g), "ok".to_string()),
                Ok(g) => (
                    Some(g),
                    format!(
                    "ok; image not strictly inside the unit disc (max |psi| on boundary = {:.6})",
                    inclusion.max_boundary_modulus
                ),
                ),
                Err(Error::VacuousBound { product }) => {
                    (None, format!("vacuous: K*J_sup = {product:.6} >= 1"))
                }
                Err(e) => return Err(e),
            };
        let inradius = qc::inradius(&family)?;
        let hersch = if family.image_is_convex() {
            Some(hersch_bound(inradius.value)?)
        } else {
            None
        };
        let area_disc = PI;
        let a22_ref = sobolev_constant_upper(2.0, area_disc)?;
        Ok(BoundReport {
            family,
            lambda_ref,
            k_j_sup: product,
            qc_lower,
            growth_gap,
            growth_gap_status,
            inclusion,
            faber_krahn: faber_krahn_bound(qc.image_area)?,
            inradius,
            makai: makai_bound(inradius.value)?,
            hersch,
            sobolev_a22_upper: (qc.k_global * qc.j_sup).sqrt() * a22_from_lambda(lambda_ref)?,
            sobolev_a22_ref_estimate: a22_ref,
            weighted_sobolev_a22: weighted_sobolev_constant(2.0, qc.k_global, area_disc)?,
        })
    }

    pub fn compute(family: &MapFamily, grid: PolarGrid) -> Result<(QcAnalysis, Self)> {
        let qc = QcAnalysis::compute(family, grid)?;
        let report = Self::from_analysis(&qc)?;
        Ok((qc, report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn j01_matches_literature() {
        assert_abs_diff_eq!(j01(), 2.404_825_557_695_773, epsilon = 1e-14);
        assert_eq!(format!("{:.4}", j01()), "2.4048");
    }

    #[test]
    fn faber_krahn_scaling() {
        let l = disc_eigenvalue();
        assert_abs_diff_eq!(faber_krahn_bound(PI).unwrap(), l, epsilon = 1e-14);
        assert_abs_diff_eq!(
            faber_krahn_bound(4.0 * PI).unwrap(),
            l / 4.0,
            epsilon = 1e-14
        );
        let a = 0.9;
        let rose = faber_krahn_bound(PI * a * a / 2.0).unwrap();
        assert_abs_diff_eq!(rose, 14.279_471_513_448_85, epsilon = 1e-9);
        assert!(faber_krahn_bound(0.0).is_err());
        assert!(faber_krahn_bound(-1.0).is_err());
    }

    #[test]
    fn makai_and_hersch() {
        assert_eq!(makai_bound(1.0).unwrap(), 0.25);
        assert_abs_diff_eq!(
            hersch_bound(1.0).unwrap(),
            2.467_401_100_272_339_5,
            epsilon = 1e-15
        );
        let b = (1.0_f64 / 64.0 + 1.0).sqrt() - 0.125;
        assert_abs_diff_eq!(
            hersch_bound(b).unwrap(),
            3.166_158_123_369_32,
            epsilon = 1e-9
        );
        assert!(makai_bound(0.0).is_err());
        assert!(hersch_bound(-2.0).is_err());
    }

    #[test]
    fn qc_bound_examples() {
        let l = disc_eigenvalue();
        assert_eq!(qc_lower_bound(l, 1.0, 1.0).unwrap(), l);
        assert_abs_diff_eq!(
            qc_lower_bound(l, 2.0, 0.405).unwrap(),
            7.139_735_756_724_424,
            epsilon = 1e-9
        );
        let a = 0.3_f64;
        let s = (a * a + 1.0).sqrt();
        assert_abs_diff_eq!(
            qc_lower_bound(l, (s + a) / (s - a), 1.0).unwrap(),
            (s - a) / (s + a) * l,
            epsilon = 1e-13
        );
        assert!(qc_lower_bound(l, 0.5, 1.0).is_err());
        assert!(qc_lower_bound(0.0, 1.0, 1.0).is_err());
        assert!(qc_lower_bound(l, 1.0, -1.0).is_err());
    }

    #[test]
    fn growth_gap_examples() {
        let l = disc_eigenvalue();
        for a in [0.5_f64, 0.7, 0.9] {
            let g = growth_gap_bound(l, 2.0, a * a / 2.0).unwrap();
            assert_abs_diff_eq!(g, (1.0 - a * a) / (a * a) * l, epsilon = 1e-12);
        }
        let (big_a, big_b) = (0.2_f64, 0.05_f64);
        let g = growth_gap_bound(
            l,
            (big_a + big_b) / (big_a - big_b),
            4.0 * (big_a * big_a - big_b * big_b),
        )
        .unwrap();
        assert_abs_diff_eq!(g, 3.0 * l, epsilon = 1e-12);
        assert!(matches!(
            growth_gap_bound(l, 2.0, 0.5),
            Err(Error::VacuousBound { .. })
        ));
    }

    #[test]
    fn a22_values() {
        assert_eq!(a22_from_lambda(1.0).unwrap(), 1.0);
        assert_eq!(a22_from_lambda(4.0).unwrap(), 0.5);
        assert_abs_diff_eq!(
            a22_from_lambda(disc_eigenvalue()).unwrap(),
            1.0 / j01(),
            epsilon = 1e-15
        );
        assert!(a22_from_lambda(0.0).is_err());
    }

    #[test]
    fn sobolev_objective_closed_form_at_four_thirds() {
        // (1/2)^(1/4) / (sqrt(pi) 2^(3/4) sqrt(Gamma(3/2)^2)) * sqrt(pi) = 1/sqrt(pi)
        assert_abs_diff_eq!(
            sobolev_objective(4.0 / 3.0, 2.0, PI),
            1.0 / PI.sqrt(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn sobolev_constant_properties() {
        let a = sobolev_constant_upper(2.0, PI).unwrap();
        assert!(a >= 1.0 / j01());
        let doubled = sobolev_constant_upper(2.0, 2.0 * PI).unwrap();
        assert_abs_diff_eq!(doubled / a, 2f64.sqrt(), epsilon = 1e-12);
        let a4 = sobolev_constant_upper(4.0, PI).unwrap();
        let d4 = sobolev_constant_upper(4.0, 2.0 * PI).unwrap();
        assert_abs_diff_eq!(d4 / a4, 2f64.powf(0.25), epsilon = 1e-12);
        assert!(sobolev_constant_upper(1.5, PI).is_err());
        assert!(sobolev_constant_upper(2.0, 0.0).is_err());
    }

    #[test]
    fn weighted_constant_scaling() {
        let base = sobolev_constant_upper(3.0, PI).unwrap();
        assert_eq!(weighted_sobolev_constant(3.0, 1.0, PI).unwrap(), base);
        assert_abs_diff_eq!(
            weighted_sobolev_constant(3.0, 4.0, PI).unwrap(),
            2.0 * base,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            weighted_sobolev_constant(2.0, 2.0, PI).unwrap(),
            2f64.sqrt() * sobolev_constant_upper(2.0, PI).unwrap(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn ellipse_comparison() {
        let c0 = ellipse_vs_hersch(0.0).unwrap();
        assert_abs_diff_eq!(c0.qc, disc_eigenvalue(), epsilon = 1e-14);
        assert_abs_diff_eq!(c0.hersch, PI * PI / 4.0, epsilon = 1e-14);
        assert!(c0.qc_wins);
        let c = ellipse_vs_hersch(0.125).unwrap();
        assert_abs_diff_eq!(c.qc, 4.506_862_529_300_77, epsilon = 1e-9);
        assert_abs_diff_eq!(c.hersch, 3.166_158_123_369_32, epsilon = 1e-9);
        assert!(c.qc_wins);
        for a in [0.0, 0.1, 0.5, 1.7] {
            let c = ellipse_vs_hersch(a).unwrap();
            assert_abs_diff_eq!(
                c.qc,
                c.semi_minor * c.semi_minor * disc_eigenvalue(),
                epsilon = 1e-14
            );
        }
        assert!(ellipse_vs_hersch(-1.0).is_err());
    }

    #[test]
    fn crossover() {
        let a = crossover_vs_hersch();
        assert!(a > 0.125 && a < 0.3);
        let b2 = PI / (2.0 * j01());
        let oracle = (1.0 - b2) / (2.0 * b2.sqrt());
        assert_abs_diff_eq!(a, oracle, epsilon = 1e-10);
        let after = ellipse_vs_hersch(a + 0.01).unwrap();
        assert!(after.qc < after.hersch);
    }

    #[test]
    fn report_invariants() {
        let g = PolarGrid::square(128).unwrap();
        for f in [
            MapFamily::Identity,
            MapFamily::Ellipse { a: 0.25 },
            MapFamily::RosePetal { a: 0.9 },
            MapFamily::RosePetal { a: 0.3 },
            MapFamily::epicycloid(0.2, 0.05, 3),
        ] {
            let (qc, r) = BoundReport::compute(&f, g).unwrap();
            assert_eq!(r.qc_lower, r.lambda_ref / (qc.k_global * qc.j_sup));
            if let Some(gap) = r.growth_gap {
                let p = qc.k_global * qc.j_sup;
                assert_abs_diff_eq!(gap, (1.0 - p) / p * r.lambda_ref, epsilon = 1e-12);
                assert_abs_diff_eq!(gap, r.qc_lower - r.lambda_ref, epsilon = 1e-12);
            }
            assert!(r.qc_lower > 0.0 && r.faber_krahn > 0.0 && r.makai > 0.0);
            assert_eq!(r.hersch.is_some(), f.image_is_convex());
        }
        let (_, ell) = BoundReport::compute(&MapFamily::Ellipse { a: 0.25 }, g).unwrap();
        assert!(ell.growth_gap.is_none());
        assert!(ell.growth_gap_status.starts_with("vacuous"));
    }
}
