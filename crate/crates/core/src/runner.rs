//! Declarative scenario files in, deterministic JSON reports out.
//!
//! A scenario file is `{"version": 1, "scenario": {"kind": ..., ...}}`.
//! Field elements are coefficient lists over GF(p), points are three of
//! them, matrices nine (row-major).

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::criterion::{
    build_plane_model, check_inner_criterion, check_outer_criterion, fermat_orbit_condition,
    fermat_orbit_condition_model, hermitian_scenario_with, verify_model_galois, HermitianScenario, ModelKind,
    ModelOptions, Status, DEFAULT_MAX_Q,
};
use crate::curve::{make_curve, CurveSpec, LinFormProduct};
use crate::error::{Error, Result};
use crate::field::{make_field, Field, FieldCtx, FieldElem};
use crate::galois::{decomposition_group, scan_galois_points, Candidates, ScanSummary};
use crate::geometry::{group_closure, AutGroup, Mat3, ProjLine, ProjMatrix, ProjPoint, DEFAULT_GROUP_CAP};
use crate::report;

pub const SCENARIO_VERSION: u32 = 1;
pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_EXT_BOUND: u32 = 12;

pub type ElemSpec = Vec<u64>;
pub type PointSpec = [ElemSpec; 3];
pub type MatrixSpec = [ElemSpec; 9];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub version: u32,
    pub scenario: Scenario,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Scenario {
    /// The cyclic-group configuration on the Hermitian curve, optionally
    /// with its plane model.
    Hermitian {
        q: u64,
        s: u64,
        #[serde(default)]
        seed: u64,
        #[serde(default = "default_max_q")]
        max_q: u64,
        #[serde(default = "default_true")]
        model: bool,
        #[serde(default = "default_ext_degree")]
        ext_degree: u32,
    },
    OuterCriterion(CriterionSpec),
    InnerCriterion(CriterionSpec),
    FermatCheck { target: FermatTarget },
    Scan(ScanSpec),
}

fn default_max_q() -> u64 {
    DEFAULT_MAX_Q
}

fn default_true() -> bool {
    true
}

fn default_ext_degree() -> u32 {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub field: FieldSpec,
    pub curve: CurveSpec,
    pub points: [PointSpec; 3],
    pub groups: [GroupSpec; 3],
    /// Claimed fixed-field generators; a missing one leaves (a) unverified.
    #[serde(default)]
    pub certificates: [Option<FunctionSpec>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum GroupSpec {
    Generators { generators: Vec<MatrixSpec> },
    /// The decomposition group at the corresponding point.
    Decomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionSpec {
    #[serde(default)]
    pub scale: Option<ElemSpec>,
    /// `[line coefficients, exponent]` pairs; exponents sum to zero.
    pub factors: Vec<(PointSpec, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum FermatTarget {
    /// Centers default to the coordinate vertices.
    Plane {
        field: FieldSpec,
        curve: CurveSpec,
        #[serde(default)]
        centers: Option<[PointSpec; 3]>,
    },
    /// The plane model of a Hermitian scenario, checked on the source curve.
    HermitianModel {
        q: u64,
        s: u64,
        #[serde(default)]
        seed: u64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateSpec {
    #[default]
    All,
    OnCurve,
    OffCurve,
    Explicit(Vec<PointSpec>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanExpectation {
    pub inner_galois: usize,
    pub outer_galois: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSpec {
    pub field: FieldSpec,
    pub curve: CurveSpec,
    #[serde(default)]
    pub candidates: CandidateSpec,
    /// When present the run fails unless the counts match.
    #[serde(default)]
    pub expect: Option<ScanExpectation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunOptions {
    /// Largest extension degree over the base field a run may use.
    pub ext_bound: u32,
    pub group_cap: usize,
    /// Replaces every seed in the scenario.
    pub seed: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { ext_bound: DEFAULT_EXT_BOUND, group_cap: DEFAULT_GROUP_CAP, seed: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Unverified,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Unverified | Outcome::Error => 2,
        }
    }
}

impl From<Status> for Outcome {
    fn from(s: Status) -> Outcome {
        match s {
            Status::Pass => Outcome::Pass,
            Status::Fail => Outcome::Fail,
            Status::Unverified => Outcome::Unverified,
        }
    }
}

pub fn parse_scenario(text: &str) -> Result<ScenarioFile> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.version != SCENARIO_VERSION {
        return Err(Error::Parse(format!("unsupported scenario version {}", file.version)));
    }
    Ok(file)
}

pub fn load_scenario(path: &Path) -> Result<ScenarioFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_scenario(&text)
}

fn override_seed(s: &mut Scenario, seed: u64) {
    match s {
        Scenario::Hermitian { seed: x, .. } => *x = seed,
        Scenario::OuterCriterion(c) | Scenario::InnerCriterion(c) => c.field.seed = seed,
        Scenario::FermatCheck { target: FermatTarget::Plane { field, .. } } => field.seed = seed,
        Scenario::FermatCheck { target: FermatTarget::HermitianModel { seed: x, .. } } => *x = seed,
        Scenario::Scan(c) => c.field.seed = seed,
    }
}

/// Executes a parsed scenario; returns the verdict and the `result` body.
pub fn execute(s: &Scenario, opts: &RunOptions) -> Result<(Outcome, Value)> {
    match s {
        Scenario::Hermitian { q, s, seed, max_q, model, ext_degree } => {
            run_hermitian(*q, *s, *seed, *max_q, *model, *ext_degree, opts)
        }
        Scenario::OuterCriterion(c) => run_criterion(c, false, opts),
        Scenario::InnerCriterion(c) => run_criterion(c, true, opts),
        Scenario::FermatCheck { target } => run_fermat_check(target, opts),
        Scenario::Scan(c) => run_scan(c),
    }
}

/// The full report for a scenario file (or the error that prevented
/// reading it).
pub fn build_report(file: Result<ScenarioFile>, opts: &RunOptions) -> (Outcome, Value) {
    let tool = json!({ "name": TOOL_NAME, "version": TOOL_VERSION });
    let options = serde_json::to_value(opts).expect("options serialize");
    let mut file = match file {
        Ok(f) => f,
        Err(e) => {
            let report = json!({ "tool": tool, "options": options, "status": Outcome::Error, "error": error_json(&e) });
            return (Outcome::Error, report);
        }
    };
    if let Some(seed) = opts.seed {
        override_seed(&mut file.scenario, seed);
    }
    let scenario = serde_json::to_value(&file).expect("scenario serializes");
    match execute(&file.scenario, opts) {
        Ok((outcome, result)) => {
            let report = json!({ "tool": tool, "options": options, "scenario": scenario, "status": outcome, "result": result });
            (outcome, report)
        }
        Err(e) => {
            let report =
                json!({ "tool": tool, "options": options, "scenario": scenario, "status": Outcome::Error, "error": error_json(&e) });
            (Outcome::Error, report)
        }
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "message": e.to_string() })
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        std::fs::set_permissions(tmp.path(), std::fs::Permissions::from_mode(0o644)).map_err(io)?;
    }
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn render(report: &Value) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(report).expect("report serializes");
    v.push(b'\n');
    v
}

/// Runs a scenario file and writes its report to `out`.
pub fn run_scenario(path: &Path, out: &Path, opts: &RunOptions) -> Result<Outcome> {
    run_loaded(load_scenario(path), out, opts)
}

/// Like [`run_scenario`] for an already parsed (or failed) scenario.
pub fn run_loaded(file: Result<ScenarioFile>, out: &Path, opts: &RunOptions) -> Result<Outcome> {
    let (outcome, report) = build_report(file, opts);
    write_atomic(out, &render(&report))?;
    Ok(outcome)
}

fn field(spec: &FieldSpec) -> Result<Field> {
    make_field(spec.p, spec.n, spec.seed)
}

fn elem(k: &FieldCtx, v: &ElemSpec) -> Result<FieldElem> {
    k.from_coeffs(v)
}

fn triple(k: &FieldCtx, v: &PointSpec) -> Result<[FieldElem; 3]> {
    Ok([elem(k, &v[0])?, elem(k, &v[1])?, elem(k, &v[2])?])
}

pub fn point(k: &FieldCtx, v: &PointSpec) -> Result<ProjPoint> {
    ProjPoint::new(k, triple(k, v)?)
}

pub fn line(k: &FieldCtx, v: &PointSpec) -> Result<ProjLine> {
    ProjLine::new(k, triple(k, v)?)
}

pub fn matrix(k: &FieldCtx, v: &MatrixSpec) -> Result<ProjMatrix> {
    let mut e = [k.zero(); 9];
    for (x, s) in e.iter_mut().zip(v) {
        *x = elem(k, s)?;
    }
    ProjMatrix::new(k, Mat3(e))
}

pub fn function(k: &Field, f: &FunctionSpec) -> Result<LinFormProduct> {
    let factors = f.factors.iter().map(|(l, e)| Ok((line(k, l)?, *e))).collect::<Result<Vec<_>>>()?;
    let out = LinFormProduct::new(k, factors)?;
    match &f.scale {
        Some(c) => out.with_scale(elem(k, c)?),
        None => Ok(out),
    }
}

fn check_ext(need: u32, opts: &RunOptions) -> Result<()> {
    if need > opts.ext_bound {
        return Err(Error::Scenario(format!("needs an extension of degree {need}, above the bound {}", opts.ext_bound)));
    }
    Ok(())
}

fn hermitian_model_run(sc: &HermitianScenario, ext_degree: u32) -> Result<(Status, Value, crate::criterion::PlaneModel)> {
    let opts = ModelOptions { ext_degree, ..ModelOptions::default() };
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, opts)?;
    let v = verify_model_galois(&m)?;
    let ok = m.image_degree() == Some(sc.params.d as u32)
        && m.incidences_hold()
        && m.poles_agree
        && m.base_point_free
        && v.all_galois;
    let body = json!({ "model": report::model_json(&m), "galois": report::model_galois_json(&sc.base, &v) });
    Ok((Status::from_bool(ok), body, m))
}

fn run_hermitian(
    q: u64,
    s: u64,
    seed: u64,
    max_q: u64,
    model: bool,
    ext_degree: u32,
    opts: &RunOptions,
) -> Result<(Outcome, Value)> {
    let sc = hermitian_scenario_with(q, s, seed, max_q)?;
    let mut status = sc.report.verdict.and(Status::from_bool(sc.power_identity.holds() && sc.g3_moves_q3));
    let mut body = report::hermitian_json(&sc);
    if model {
        check_ext(ext_degree, opts)?;
        let (ms, mj, _) = hermitian_model_run(&sc, ext_degree)?;
        status = status.and(ms);
        body["plane_model"] = mj;
    }
    Ok((status.into(), body))
}

fn run_criterion(spec: &CriterionSpec, inner: bool, opts: &RunOptions) -> Result<(Outcome, Value)> {
    let k = field(&spec.field)?;
    let c = make_curve(&spec.curve, &k)?;
    let pts = [point(&k, &spec.points[0])?, point(&k, &spec.points[1])?, point(&k, &spec.points[2])?];
    let mut groups: Vec<AutGroup> = Vec::new();
    for (g, p) in spec.groups.iter().zip(&pts) {
        groups.push(match g {
            GroupSpec::Generators { generators } => {
                let gens = generators.iter().map(|m| matrix(&k, m)).collect::<Result<Vec<_>>>()?;
                group_closure(&k, &gens, opts.group_cap)?
            }
            GroupSpec::Decomposition => decomposition_group(&c, p, &k)?,
        });
    }
    let groups: [AutGroup; 3] = groups.try_into().expect("three groups");
    let mut certs: [Option<LinFormProduct>; 3] = Default::default();
    for (c, f) in certs.iter_mut().zip(&spec.certificates) {
        *c = f.as_ref().map(|f| function(&k, f)).transpose()?;
    }
    let r = if inner {
        check_inner_criterion(&c, &groups, &pts, &certs, &k)?
    } else {
        check_outer_criterion(&c, &groups, &pts, &certs, &k)?
    };
    let body = json!({
        "curve": report::curve_json(&c),
        "groups": groups.iter().map(|g| report::group_json(&k, g)).collect::<Vec<_>>(),
        "criterion": r,
    });
    Ok((r.verdict.into(), body))
}

fn orbit_outcome(holds: Option<bool>) -> Outcome {
    match holds {
        Some(true) => Outcome::Pass,
        Some(false) => Outcome::Fail,
        None => Outcome::Unverified,
    }
}

fn run_fermat_check(t: &FermatTarget, opts: &RunOptions) -> Result<(Outcome, Value)> {
    match t {
        FermatTarget::Plane { field: fs, curve, centers } => {
            let k = field(fs)?;
            let c = make_curve(curve, &k)?;
            let centers = match centers {
                Some(v) => [point(&k, &v[0])?, point(&k, &v[1])?, point(&k, &v[2])?],
                None => [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|v| ProjPoint::from_ints(&k, v).expect("vertex")),
            };
            let r = fermat_orbit_condition(&c, &centers, &k, opts.group_cap)?;
            if let Some(lk) = &r.line_field {
                check_ext(lk.degree() / k.degree(), opts)?;
            }
            let body = json!({ "curve": report::curve_json(&c), "orbit_condition": report::orbit_condition_json(&r) });
            Ok((orbit_outcome(r.holds), body))
        }
        FermatTarget::HermitianModel { q, s, seed } => {
            check_ext(3, opts)?;
            let sc = hermitian_scenario_with(*q, *s, *seed, DEFAULT_MAX_Q)?;
            let (_, mut body, m) = hermitian_model_run(&sc, 3)?;
            let v = verify_model_galois(&m)?;
            let r = fermat_orbit_condition_model(&m, &v, opts.group_cap)?;
            body["orbit_condition"] = report::orbit_condition_json(&r);
            if let Some(image) = &m.image {
                // the same question asked of the image with its linear symmetries
                body["image_plane_check"] = match fermat_orbit_condition(image, &m.vertices, &sc.base, opts.group_cap) {
                    Ok(p) => report::orbit_condition_json(&p),
                    Err(e) => error_json(&e),
                };
            }
            Ok((orbit_outcome(r.holds), body))
        }
    }
}

fn run_scan(spec: &ScanSpec) -> Result<(Outcome, Value)> {
    let k = field(&spec.field)?;
    let c = make_curve(&spec.curve, &k)?;
    let candidates = match &spec.candidates {
        CandidateSpec::All => Candidates::All,
        CandidateSpec::OnCurve => Candidates::Explicit(c.enumerate_points(&k)?),
        CandidateSpec::OffCurve => {
            let mut v = Vec::new();
            for p in ProjPoint::all(&k) {
                if !c.contains(&p)? {
                    v.push(p);
                }
            }
            Candidates::Explicit(v)
        }
        CandidateSpec::Explicit(v) => Candidates::Explicit(v.iter().map(|p| point(&k, p)).collect::<Result<_>>()?),
    };
    let scan = scan_galois_points(&c, candidates, &k)?;
    let outcome = match spec.expect {
        Some(e) => Outcome::from(Status::from_bool(matches(&scan.summary, e))),
        None => Outcome::Pass,
    };
    let mut body = report::scan_json(&k, &scan);
    body["curve"] = report::curve_json(&c);
    Ok((outcome, body))
}

fn matches(s: &ScanSummary, e: ScanExpectation) -> bool {
    s.inner_galois == e.inner_galois && s.outer_galois == e.outer_galois
}

/// `fermat:4`, `hermitian:3`.
pub fn parse_curve_arg(s: &str) -> Result<CurveSpec> {
    let (kind, n) = s.split_once(':').ok_or_else(|| Error::Parse(format!("curve `{s}`: expected KIND:N")))?;
    let n: u64 = n.parse().map_err(|_| Error::Parse(format!("curve `{s}`: bad number")))?;
    match kind {
        "fermat" => Ok(CurveSpec::Fermat { d: n as u32 }),
        "hermitian" => Ok(CurveSpec::Hermitian { q: n }),
        _ => Err(Error::Parse(format!("curve `{s}`: unknown kind `{kind}`"))),
    }
}

/// `13` or `2^2`.
pub fn parse_field_arg(s: &str, seed: u64) -> Result<FieldSpec> {
    let bad = || Error::Parse(format!("field `{s}`: expected P or P^N"));
    let (p, n) = match s.split_once('^') {
        Some((p, n)) => (p.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?),
        None => (s.parse().map_err(|_| bad())?, 1),
    };
    Ok(FieldSpec { p, n, seed })
}

/// `3:2` for q = 3, s = 2.
pub fn parse_qs_arg(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::Parse(format!("`{s}`: expected Q:S"));
    let (q, r) = s.split_once(':').ok_or_else(bad)?;
    Ok((q.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?))
}
