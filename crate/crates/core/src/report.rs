//! Records emitted by the `qcspec` tool and their JSON, CSV and Markdown
//! renderings.
//!
//! Every record is a flat struct so that all three formats share one key
//! set. Floating-point values are rounded to 12 significant digits on output.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::bounds::{
    crossover_vs_hersch, disc_eigenvalue, ellipse_vs_hersch, growth_gap_bound, BoundReport,
};
use crate::error::{Error, Result};
use crate::fem::{principal_eigenvalue, DEFAULT_TOL};
use crate::maps::MapFamily;
use crate::qc::{self, PolarGrid, QcAnalysis, SupNormMethod};

pub const DEFAULT_RINGS: usize = 64;
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const BAD_INPUT: u8 = 2;
    pub const VIOLATION: u8 = 3;
    pub const NO_CONVERGENCE: u8 = 4;
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NoConvergence { .. } | Error::SingularSystem { .. } => exit::NO_CONVERGENCE,
        _ => exit::BAD_INPUT,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSettings {
    pub rings: usize,
    pub tol: f64,
    pub grid: PolarGrid,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings {
            rings: DEFAULT_RINGS,
            tol: DEFAULT_TOL,
            grid: PolarGrid::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

/// Builds a family from command-line style parts, reporting the first
/// missing or invalid parameter.
pub fn family_from_parts(
    name: &str,
    a: Option<f64>,
    big_a: Option<f64>,
    big_b: Option<f64>,
    n: Option<u32>,
) -> Result<MapFamily> {
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParameters(format!("family `{name}` requires --{flag}")))
    };
    let family = match name {
        "identity" => MapFamily::Identity,
        "ellipse" => MapFamily::Ellipse { a: need(a, "a")? },
        "rose-petal" => MapFamily::RosePetal { a: need(a, "a")? },
        "epicycloid" => MapFamily::epicycloid(
            need(big_a, "A")?,
            need(big_b, "B")?,
            n.ok_or_else(|| Error::InvalidParameters("family `epicycloid` requires --n".into()))?,
        ),
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown family `{other}` (expected identity, ellipse, rose-petal or epicycloid)"
            )))
        }
    };
    family.validate()?;
    Ok(family)
}

pub fn parameter_string(family: &MapFamily) -> String {
    match *family {
        MapFamily::Identity => String::new(),
        MapFamily::Ellipse { a } | MapFamily::RosePetal { a } => format!("a={a}"),
        MapFamily::Epicycloid {
            analytic,
            antianalytic,
            n,
        } => format!("A={analytic};B={antianalytic};n={n}"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeRecord {
    pub family: String,
    pub parameters: String,
    pub k_global: f64,
    pub j_sup: f64,
    pub j_sup_method: SupNormMethod,
    pub j_sup_grid: f64,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub image_area: f64,
    pub lambda_ref: f64,
    pub k_j_sup: f64,
    pub qc_lower: f64,
    pub growth_gap: Option<f64>,
    pub growth_gap_status: String,
    pub max_boundary_modulus: f64,
    pub inside_unit_disc: bool,
    pub faber_krahn: f64,
    pub inradius: f64,
    pub inradius_method: qc::InradiusMethod,
    pub makai: f64,
    pub hersch: Option<f64>,
    pub sobolev_a22_upper: f64,
    pub sobolev_a22_ref_estimate: f64,
    pub weighted_sobolev_a22: f64,
}

impl AnalyzeRecord {
    pub fn new(qc: &QcAnalysis, b: &BoundReport) -> Self {
        AnalyzeRecord {
            family: qc.family.name().into(),
            parameters: parameter_string(&qc.family),
            k_global: qc.k_global,
            j_sup: qc.j_sup,
            j_sup_method: qc.j_sup_method,
            j_sup_grid: qc.j_sup_grid,
            grid_radial: qc.grid_resolution.radial,
            grid_angular: qc.grid_resolution.angular,
            image_area: qc.image_area,
            lambda_ref: b.lambda_ref,
            k_j_sup: b.k_j_sup,
            qc_lower: b.qc_lower,
            growth_gap: b.growth_gap,
            growth_gap_status: b.growth_gap_status.clone(),
            max_boundary_modulus: b.inclusion.max_boundary_modulus,
            inside_unit_disc: b.inclusion.inside_unit_disc,
            faber_krahn: b.faber_krahn,
            inradius: b.inradius.value,
            inradius_method: b.inradius.method,
            makai: b.makai,
            hersch: b.hersch,
            sobolev_a22_upper: b.sobolev_a22_upper,
            sobolev_a22_ref_estimate: b.sobolev_a22_ref_estimate,
            weighted_sobolev_a22: b.weighted_sobolev_a22,
        }
    }
}

pub fn cmd_analyze(family: &MapFamily, settings: &RunSettings) -> Result<AnalyzeRecord> {
    let (qc, bounds) = BoundReport::compute(family, settings.grid)?;
    Ok(AnalyzeRecord::new(&qc, &bounds))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRecord {
    pub family: String,
    pub parameters: String,
    pub rings: usize,
    pub tol: f64,
    pub fem_lambda: f64,
    pub residual: f64,
    pub iterations: usize,
    pub mesh_area: f64,
    pub lambda_ref: f64,
    pub qc_lower: f64,
    pub margin: f64,
    pub growth_gap: Option<f64>,
    pub fem_gap: f64,
    pub gap_margin: Option<f64>,
    pub faber_krahn: f64,
    pub faber_krahn_margin: f64,
    pub makai: f64,
    pub makai_margin: f64,
    pub hersch: Option<f64>,
    pub hersch_margin: Option<f64>,
    pub all_hold: bool,
}

pub fn cmd_verify(family: &MapFamily, settings: &RunSettings) -> Result<VerifyRecord> {
    let (_, b) = BoundReport::compute(family, settings.grid)?;
    let sol = principal_eigenvalue(family, settings.rings, settings.tol)?;
    let lambda = sol.lambda();
    let fem_gap = lambda - b.lambda_ref;
    let gap_margin = b.growth_gap.map(|g| fem_gap - g);
    let hersch_margin = b.hersch.map(|h| lambda - h);
    let margin = lambda - b.qc_lower;
    let faber_krahn_margin = lambda - b.faber_krahn;
    let makai_margin = lambda - b.makai;
    let all_hold = [
        Some(margin),
        gap_margin,
        Some(faber_krahn_margin),
        Some(makai_margin),
        hersch_margin,
    ]
    .into_iter()
    .flatten()
    .all(|m| m >= 0.0);
    Ok(VerifyRecord {
        family: family.name().into(),
        parameters: parameter_string(family),
        rings: settings.rings,
        tol: settings.tol,
        fem_lambda: lambda,
        residual: sol.eigen.residual,
        iterations: sol.eigen.iterations,
        mesh_area: sol.mesh_area(),
        lambda_ref: b.lambda_ref,
        qc_lower: b.qc_lower,
        margin,
        growth_gap: b.growth_gap,
        fem_gap,
        gap_margin,
        faber_krahn: b.faber_krahn,
        faber_krahn_margin,
        makai: b.makai,
        makai_margin,
        hersch: b.hersch,
        hersch_margin,
        all_hold,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    QcLower,
    GrowthGap,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaperTableRow {
    pub section: String,
    pub parameters: String,
    pub k_global: Option<f64>,
    pub j_sup: Option<f64>,
    pub k_j_sup: Option<f64>,
    pub bound_kind: BoundKind,
    /// Closed-form bound: `qc_lower` on `lambda_1`, or the growth gap on
    /// `lambda_1 - j01^2`.
    pub bound: Option<f64>,
    pub hersch: Option<f64>,
    pub qc_wins: Option<bool>,
    pub fem_lambda: Option<f64>,
    /// The FEM counterpart of `bound`.
    pub fem_value: Option<f64>,
    pub margin: Option<f64>,
    pub status: String,
    pub note: String,
}

impl PaperTableRow {
    fn failed(section: &str, parameters: String, kind: BoundKind, err: &Error) -> Self {
        PaperTableRow {
            section: section.into(),
            parameters,
            k_global: None,
            j_sup: None,
            k_j_sup: None,
            bound_kind: kind,
            bound: None,
            hersch: None,
            qc_wins: None,
            fem_lambda: None,
            fem_value: None,
            margin: None,
            status: format!("error: {err}"),
            note: String::new(),
        }
    }
}

pub const PAPER_ELLIPSE_A: [f64; 4] = [0.0, 1.0 / 16.0, 1.0 / 8.0, 0.3];
pub const PAPER_ROSE_A: [f64; 3] = [0.5, 0.7, 0.9];
pub const PAPER_EPICYCLOIDS: [(f64, f64, u32); 3] =
    [(0.2, 0.05, 3), (0.2, 0.2, 3), (0.15, 0.05, 5)];

/// Ellipse row: quasiconformal bound against Hersch's, with the FEM value.
pub fn ellipse_row(a: f64, settings: &RunSettings) -> PaperTableRow {
    let family = MapFamily::Ellipse { a };
    let build = || -> Result<PaperTableRow> {
        let cmp = ellipse_vs_hersch(a)?;
        let k = qc::global_distortion(&family)?;
        let j = qc::jacobian_sup_norm(&family, SupNormMethod::Analytic, None)?;
        let fem = principal_eigenvalue(&family, settings.rings, settings.tol)?.lambda();
        Ok(PaperTableRow {
            section: "ellipse".into(),
            parameters: parameter_string(&family),
            k_global: Some(k),
            j_sup: Some(j),
            k_j_sup: Some(k * j),
            bound_kind: BoundKind::QcLower,
            bound: Some(cmp.qc),
            hersch: Some(cmp.hersch),
            qc_wins: Some(cmp.qc_wins),
            fem_lambda: Some(fem),
            fem_value: Some(fem),
            margin: Some(fem - cmp.qc),
            status: "ok".into(),
            note: if cmp.qc_wins {
                "qc bound beats Hersch".into()
            } else {
                "Hersch bound beats qc".into()
            },
        })
    };
    build().unwrap_or_else(|e| {
        PaperTableRow::failed("ellipse", parameter_string(&family), BoundKind::QcLower, &e)
    })
}

/// Growth-gap row for a family mapping the disc into itself.
pub fn gap_row(family: &MapFamily, settings: &RunSettings) -> PaperTableRow {
    let section = family.name();
    let build = || -> Result<PaperTableRow> {
        let k = qc::global_distortion(family)?;
        let j = qc::jacobian_sup_norm(family, SupNormMethod::Analytic, None)?;
        let lambda_ref = disc_eigenvalue();
        let mut notes = Vec::new();
        if let MapFamily::Epicycloid {
            analytic,
            antianalytic,
            ..
        } = *family
        {
            if analytic + antianalytic >= 0.5 {
                notes.push("hypothesis A+B<1/2 fails".to_string());
            }
        }
        let inclusion = qc::unit_disc_inclusion(family)?;
        if !inclusion.inside_unit_disc {
            notes.push(format!(
                "image not strictly inside the unit disc (max |psi| = {:.6})",
                inclusion.max_boundary_modulus
            ));
        }
        let gap = match growth_gap_bound(lambda_ref, k, j) {
            Ok(g) => Some(g),
            Err(Error::VacuousBound { product }) => {
                notes.push(format!("vacuous: K*J_sup = {product:.6} >= 1"));
                None
            }
            Err(e) => return Err(e),
        };
        let fem = principal_eigenvalue(family, settings.rings, settings.tol)?.lambda();
        let fem_gap = fem - lambda_ref;
        Ok(PaperTableRow {
            section: section.into(),
            parameters: parameter_string(family),
            k_global: Some(k),
            j_sup: Some(j),
            k_j_sup: Some(k * j),
            bound_kind: BoundKind::GrowthGap,
            bound: gap,
            hersch: None,
            qc_wins: None,
            fem_lambda: Some(fem),
            fem_value: Some(fem_gap),
            margin: gap.map(|g| fem_gap - g),
            status: "ok".into(),
            note: notes.join("; "),
        })
    };
    build().unwrap_or_else(|e| {
        PaperTableRow::failed(section, parameter_string(family), BoundKind::GrowthGap, &e)
    })
}

/// Every worked example: ellipse rows at `a in {0, 1/16, 1/8, a*, 0.3}`,
/// rose petals at `a in {0.5, 0.7, 0.9}`, and three epicycloids.
pub fn cmd_paper_table(settings: &RunSettings) -> Vec<PaperTableRow> {
    let astar = crossover_vs_hersch();
    let mut ellipse_a: Vec<f64> = PAPER_ELLIPSE_A.to_vec();
    ellipse_a.insert(3, astar);

    enum Job {
        Ellipse(f64),
        Gap(MapFamily),
    }
    let jobs: Vec<Job> = ellipse_a
        .into_iter()
        .map(Job::Ellipse)
        .chain(
            PAPER_ROSE_A
                .iter()
                .map(|&a| Job::Gap(MapFamily::RosePetal { a })),
        )
        .chain(
            PAPER_EPICYCLOIDS
                .iter()
                .map(|&(a, b, n)| Job::Gap(MapFamily::epicycloid(a, b, n))),
        )
        .collect();
    let mut rows: Vec<PaperTableRow> = jobs
        .par_iter()
        .map(|job| match job {
            Job::Ellipse(a) => ellipse_row(*a, settings),
            Job::Gap(f) => gap_row(f, settings),
        })
        .collect();
    rows[3].note = format!("crossover a* = {astar:.12}; {}", rows[3].note);
    rows
}

/// True when every row with a margin has it nonnegative.
pub fn paper_table_holds(rows: &[PaperTableRow]) -> bool {
    rows.iter().filter_map(|r| r.margin).all(|m| m >= 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    A,
    BigA,
    BigB,
}

impl SweepParam {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(SweepParam::A),
            "A" => Ok(SweepParam::BigA),
            "B" => Ok(SweepParam::BigB),
            other => Err(Error::InvalidRange(format!(
                "unknown sweep parameter `{other}` (expected a, A or B)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::A => "a",
            SweepParam::BigA => "A",
            SweepParam::BigB => "B",
        }
    }

    /// Replaces this parameter of `base` by `value`.
    pub fn apply(&self, base: &MapFamily, value: f64) -> Result<MapFamily> {
        let f = match (*self, *base) {
            (SweepParam::A, MapFamily::Ellipse { .. }) => MapFamily::Ellipse { a: value },
            (SweepParam::A, MapFamily::RosePetal { .. }) => MapFamily::RosePetal { a: value },
            (
                SweepParam::BigA,
                MapFamily::Epicycloid {
                    antianalytic, n, ..
                },
            ) => MapFamily::epicycloid(value, antianalytic, n),
            (SweepParam::BigB, MapFamily::Epicycloid { analytic, n, .. }) => {
                MapFamily::epicycloid(analytic, value, n)
            }
            (p, f) => {
                return Err(Error::InvalidRange(format!(
                    "cannot sweep `{}` of family `{}`",
                    p.name(),
                    f.name()
                )))
            }
        };
        Ok(f)
    }
}

/// Inclusive sample points `from, from + step, ...` not exceeding `to`.
pub fn sweep_samples(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) {
        return Err(Error::InvalidRange("range bounds must be finite".into()));
    }
    if step <= 0.0 || to <= from {
        return Err(Error::InvalidRange(format!(
            "empty range: from {from} to {to} with step {step}"
        )));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    if count < 2 {
        return Err(Error::InvalidRange(format!(
            "range from {from} to {to} with step {step} has fewer than 2 samples"
        )));
    }
    Ok((0..count).map(|i| from + step * i as f64).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: String,
    pub value: f64,
    pub k_global: Option<f64>,
    pub j_sup: Option<f64>,
    pub k_j_sup: Option<f64>,
    pub qc_lower: Option<f64>,
    pub faber_krahn: Option<f64>,
    pub makai: Option<f64>,
    pub hersch: Option<f64>,
    pub qc_minus_hersch: Option<f64>,
    pub growth_gap: Option<f64>,
    pub fem_lambda: Option<f64>,
    pub margin_qc: Option<f64>,
    pub margin_faber_krahn: Option<f64>,
    pub status: String,
}

pub const SWEEP_COLUMNS: [&str; 15] = [
    "param",
    "value",
    "k_global",
    "j_sup",
    "k_j_sup",
    "qc_lower",
    "faber_krahn",
    "makai",
    "hersch",
    "qc_minus_hersch",
    "growth_gap",
    "fem_lambda",
    "margin_qc",
    "margin_faber_krahn",
    "status",
];

fn sweep_row(
    family: &MapFamily,
    param: SweepParam,
    value: f64,
    with_fem: bool,
    settings: &RunSettings,
) -> SweepRow {
    let mut row = SweepRow {
        status: "ok".into(),
        ..empty_sweep_row(param, value)
    };
    let fill = |row: &mut SweepRow| -> Result<()> {
        let (qc, b) = BoundReport::compute(family, settings.grid)?;
        row.k_global = Some(qc.k_global);
        row.j_sup = Some(qc.j_sup);
        row.k_j_sup = Some(b.k_j_sup);
        row.qc_lower = Some(b.qc_lower);
        row.faber_krahn = Some(b.faber_krahn);
        row.makai = Some(b.makai);
        row.hersch = b.hersch;
        row.qc_minus_hersch = b.hersch.map(|h| b.qc_lower - h);
        row.growth_gap = b.growth_gap;
        if with_fem {
            let fem = principal_eigenvalue(family, settings.rings, settings.tol)?.lambda();
            row.fem_lambda = Some(fem);
            row.margin_qc = Some(fem - b.qc_lower);
            row.margin_faber_krahn = Some(fem - b.faber_krahn);
        }
        Ok(())
    };
    if let Err(e) = fill(&mut row) {
        row.status = format!("error: {e}");
    }
    row
}

/// One row per sample of `param` over `[from, to]`; rows come back in
/// parameter order.
pub fn cmd_sweep(
    base: &MapFamily,
    param: SweepParam,
    from: f64,
    to: f64,
    step: f64,
    with_fem: bool,
    settings: &RunSettings,
) -> Result<Vec<SweepRow>> {
    let samples = sweep_samples(from, to, step)?;
    let families = samples
        .iter()
        .map(|&v| param.apply(base, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(samples
        .par_iter()
        .zip(&families)
        .map(|(&v, f)| sweep_row(f, param, v, with_fem, settings))
        .collect())
}

fn empty_sweep_row(param: SweepParam, value: f64) -> SweepRow {
    SweepRow {
        param: param.name().into(),
        value,
        k_global: None,
        j_sup: None,
        k_j_sup: None,
        qc_lower: None,
        faber_krahn: None,
        makai: None,
        hersch: None,
        qc_minus_hersch: None,
        growth_gap: None,
        fem_lambda: None,
        margin_qc: None,
        margin_faber_krahn: None,
        status: String::new(),
    }
}

/// Rounds to `digits` significant digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_significant(n.as_f64().unwrap(), SIGNIFICANT_DIGITS);
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

/// Serializes to a JSON value with rounded floats.
pub fn to_value<T: Serialize>(record: &T) -> Value {
    round_value(serde_json::to_value(record).expect("records serialize"))
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn object_rows(values: &[Value]) -> (Vec<String>, Vec<Vec<String>>) {
    let keys: Vec<String> = match values.first() {
        Some(Value::Object(o)) => o.keys().cloned().collect(),
        _ => Vec::new(),
    };
    let rows = values
        .iter()
        .map(|v| {
            let o = v.as_object().cloned().unwrap_or_else(Map::new);
            keys.iter()
                .map(|k| o.get(k).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    (keys, rows)
}

fn render_csv(keys: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(keys).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

fn render_md_table(keys: &[String], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", keys.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(keys.len())));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

/// Renders one record. Markdown uses a two-column key/value table.
pub fn render_record<T: Serialize>(record: &T, format: OutputFormat) -> String {
    let v = to_value(record);
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&v).expect("json") + "\n",
        OutputFormat::Csv => {
            let (keys, rows) = object_rows(std::slice::from_ref(&v));
            render_csv(&keys, &rows)
        }
        OutputFormat::Md => {
            let (keys, rows) = object_rows(std::slice::from_ref(&v));
            let kv: Vec<Vec<String>> = keys
                .iter()
                .zip(&rows[0])
                .map(|(k, v)| vec![k.clone(), v.clone()])
                .collect();
            render_md_table(&["key".into(), "value".into()], &kv)
        }
    }
}

/// Renders a list of records as a JSON array, CSV or a Markdown table.
pub fn render_rows<T: Serialize>(records: &[T], format: OutputFormat) -> String {
    let values: Vec<Value> = records.iter().map(to_value).collect();
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&Value::Array(values)).expect("json") + "\n"
        }
        OutputFormat::Csv => {
            let (keys, rows) = object_rows(&values);
            render_csv(&keys, &rows)
        }
        OutputFormat::Md => {
            let (keys, rows) = object_rows(&values);
            render_md_table(&keys, &rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&Error::NoConvergence { iterations: 3 }),
            exit::NO_CONVERGENCE
        );
        assert_eq!(
            exit_code(&Error::SingularSystem {
                iterations: 3,
                residual: 1.0
            }),
            exit::NO_CONVERGENCE
        );
        assert_eq!(exit_code(&Error::InvalidRange("x".into())), exit::BAD_INPUT);
    }

    #[test]
    fn family_parts() {
        assert_eq!(
            family_from_parts("rose-petal", Some(0.9), None, None, None).unwrap(),
            MapFamily::RosePetal { a: 0.9 }
        );
        assert_eq!(
            family_from_parts("epicycloid", None, Some(0.2), Some(0.05), Some(3)).unwrap(),
            MapFamily::epicycloid(0.2, 0.05, 3)
        );
        assert!(family_from_parts("ellipse", None, None, None, None).is_err());
        assert!(family_from_parts("epicycloid", None, Some(0.2), Some(0.2), Some(3)).is_err());
        assert!(family_from_parts("square", None, None, None, None).is_err());
    }

    #[test]
    fn samples() {
        assert_eq!(sweep_samples(0.0, 0.5, 0.025).unwrap().len(), 21);
        assert_eq!(sweep_samples(0.0, 1.0, 0.5).unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(sweep_samples(0.0, 0.0, 0.1).is_err());
        assert!(sweep_samples(1.0, 0.0, 0.1).is_err());
        assert!(sweep_samples(0.0, 1.0, 0.0).is_err());
        assert!(sweep_samples(0.0, 0.1, 0.5).is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_significant(1.0 / 3.0, 12), 0.333333333333);
        assert_eq!(round_significant(5.783185962946784, 12), 5.78318596295);
        assert_eq!(round_significant(0.0, 12), 0.0);
        assert_eq!(round_significant(-1234567.891234567, 12), -1234567.89123);
    }

    #[test]
    fn epicycloid_hypothesis_note() {
        let s = RunSettings {
            rings: 8,
            ..RunSettings::default()
        };
        let row = gap_row(&MapFamily::epicycloid(0.4, 0.2, 3), &s);
        assert!(row.note.contains("hypothesis A+B<1/2 fails"));
        assert!(row.bound.is_none());
        let bad = gap_row(&MapFamily::epicycloid(0.2, 0.2, 3), &s);
        assert!(bad.status.starts_with("error"));
        assert!(bad.margin.is_none());
    }

    #[test]
    fn sweep_param_mismatch() {
        let s = RunSettings::default();
        assert!(matches!(
            cmd_sweep(
                &MapFamily::Ellipse { a: 0.1 },
                SweepParam::BigA,
                0.0,
                1.0,
                0.5,
                false,
                &s
            ),
            Err(Error::InvalidRange(_))
        ));
    }

    #[test]
    fn render_formats() {
        let rows = vec![
            SweepRow {
                status: "ok".into(),
                ..empty_sweep_row(SweepParam::A, 0.1)
            },
            SweepRow {
                status: "ok".into(),
                hersch: Some(2.0 / 3.0),
                ..empty_sweep_row(SweepParam::A, 0.2)
            },
        ];
        let csv = render_rows(&rows, OutputFormat::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), SWEEP_COLUMNS.join(","));
        assert_eq!(lines.next().unwrap(), "a,0.1,,,,,,,,,,,,,ok");
        assert!(lines.next().unwrap().contains(",0.666666666667,"));
        let md = render_rows(&rows, OutputFormat::Md);
        assert!(md.starts_with("| param | value |"));
        let json: Value = serde_json::from_str(&render_rows(&rows, OutputFormat::Json)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 2);
    }
}
