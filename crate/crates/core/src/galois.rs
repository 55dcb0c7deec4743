//! Projections from a point, decomposition groups and Galois-point detection.

use rayon::prelude::*;

use crate::curve::{Divisor, HomPoly, LinFormProduct, PlaneCurve};
use crate::error::{Error, Result};
use crate::field::{extension, Field, FieldCtx, FieldElem};
use crate::geometry::{
    group_closure, perspectivities_with_center, AutGroup, Mat3, ProjLine, ProjMatrix, ProjPoint, DEFAULT_GROUP_CAP,
};

/// Largest `|k|³` for which the perspectivity family is searched.
pub const PERSPECTIVITY_SEARCH_CAP: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    Inner,
    Outer,
    Singular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Galois,
    NotGaloisAmongLinear,
}

#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub center: ProjPoint,
    pub kind: PointKind,
    pub projection_degree: u32,
    pub group: AutGroup,
    pub verdict: Verdict,
    /// `γ ↦ a(γ)`, the eigenvalue at the center relative to the common
    /// axis, when every non-identity element is a homology with that axis.
    pub character: Option<Vec<(ProjMatrix, FieldElem)>>,
    pub axis: Option<ProjLine>,
    pub search_field: Field,
}

pub fn classify_center(c: &PlaneCurve, center: &ProjPoint) -> Result<PointKind> {
    if !c.contains(center)? {
        Ok(PointKind::Outer)
    } else if c.is_smooth_at(center)? {
        Ok(PointKind::Inner)
    } else {
        Ok(PointKind::Singular)
    }
}

/// The fiber of the projection from `center` over the line `L` through it.
pub fn projection_fiber(c: &PlaneCurve, center: &ProjPoint, l: &ProjLine, ext: &Field) -> Result<Divisor> {
    let ce = center.lift(ext)?;
    let le = l.lift(ext)?;
    if !le.contains(ext, &ce) {
        return Err(Error::CenterNotOnLine { center: ce.display(ext), line: le.display(ext) });
    }
    let div = c.line_intersection_divisor(&le, ext)?;
    match classify_center(c, &ce)? {
        PointKind::Outer => Ok(div),
        PointKind::Inner => div.sub(&Divisor::point(ext, ce, 1)?),
        PointKind::Singular => Err(Error::SingularCenter(ce.display(ext))),
    }
}

/// Points `x` with `F(x) ≠ 0`, used to reject non-preserving matrices
/// before composing polynomials.
pub(crate) fn sample_points(k: &FieldCtx, f: &HomPoly, n: usize) -> Vec<([FieldElem; 3], FieldElem)> {
    let q = k.order();
    let mut out = Vec::new();
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..(40 * n) {
        if out.len() >= n {
            break;
        }
        let c = [0, 1, 2].map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            k.from_u64((state >> 17) % q)
        });
        if c.iter().all(|x| x.is_zero()) {
            continue;
        }
        let v = f.eval(k, &c);
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Whether `F ∘ M` is a scalar multiple of `F` (`F` normalized).
pub fn preserves(k: &FieldCtx, f: &HomPoly, m: &Mat3, samples: &[([FieldElem; 3], FieldElem)]) -> bool {
    if let Some((x0, f0)) = samples.first() {
        let g0 = f.eval(k, &m.apply(k, x0));
        for (x, fx) in &samples[1..] {
            let gx = f.eval(k, &m.apply(k, x));
            if k.mul(gx, *f0) != k.mul(g0, *fx) {
                return false;
            }
        }
    }
    match f.compose(k, m).normalized(k) {
        Ok(g) => g == *f,
        Err(_) => false,
    }
}

/// A small generating set of a group given by all of its elements.
fn reduce_generators(k: &FieldCtx, elems: &[ProjMatrix]) -> Result<AutGroup> {
    let mut sorted = elems.to_vec();
    sorted.sort();
    let mut g = AutGroup::trivial(k);
    let mut gens = Vec::new();
    for m in sorted {
        if !g.contains(&m) {
            gens.push(m);
            g = group_closure(k, &gens, DEFAULT_GROUP_CAP)?;
        }
    }
    Ok(g)
}

/// The curve-preserving perspectivities with the given center, over `ext`.
pub fn decomposition_group(c: &PlaneCurve, center: &ProjPoint, ext: &Field) -> Result<AutGroup> {
    let k: &FieldCtx = ext;
    let q = k.order();
    if q.saturating_mul(q).saturating_mul(q) > PERSPECTIVITY_SEARCH_CAP {
        return Err(Error::ScanCapExceeded { p: k.characteristic(), n: k.degree(), size: q * q * q, cap: PERSPECTIVITY_SEARCH_CAP });
    }
    let f = c.poly_over(k)?;
    let center = center.lift(ext)?;
    let samples = sample_points(k, &f, 10);
    let mut fam = perspectivities_with_center(k, &center);
    let mut raws = Vec::new();
    while let Some(m) = fam.next_raw() {
        raws.push(m);
    }
    let found: Vec<ProjMatrix> = raws
        .par_iter()
        .filter(|m| preserves(k, &f, m, &samples))
        .map(|m| ProjMatrix::new(k, *m).expect("perspectivity family is nonsingular"))
        .collect();
    let g = reduce_generators(k, &found)?;
    if g.order() != found.len() {
        return Err(Error::Internal(format!(
            "curve-preserving perspectivities ({}) do not form a group (closure {})",
            found.len(),
            g.order()
        )));
    }
    Ok(g)
}

/// Solves `B y = x` for a nonsingular `B` given by columns.
fn coordinates(k: &FieldCtx, cols: [[FieldElem; 3]; 3], x: &[FieldElem; 3]) -> [FieldElem; 3] {
    let b = Mat3::from_columns(cols);
    let inv_det = k.inv(b.det(k));
    b.adjugate(k).apply(k, x).map(|y| k.mul(y, inv_det))
}

/// For a perspectivity `M` with center `v`: its axis and the ratio of the
/// eigenvalue at `v` to the eigenvalue on the axis.
pub fn homology_data(k: &FieldCtx, m: &ProjMatrix, center: &ProjPoint) -> Option<(ProjLine, FieldElem)> {
    let v = center.coords();
    let (z, o) = (k.zero(), k.one());
    let basis = [[o, z, z], [z, o, z], [z, z, o]];
    let (e1, e2) = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .map(|(i, j)| (basis[i], basis[j]))
        .find(|(a, b)| !Mat3::from_columns([v, *a, *b]).det(k).is_zero())?;
    let mm = m.mat();
    let mv = mm.apply(k, &v);
    let lam_c = coordinates(k, [v, e1, e2], &mv)[0];
    let mu = coordinates(k, [v, e1, e2], &mm.apply(k, &e1))[1];
    // M - μI = μ v wᵀ; any nonzero row is a multiple of w
    let mut diff = mm;
    for i in 0..3 {
        diff.0[4 * i] = k.sub(diff.0[4 * i], mu);
    }
    let row = (0..3).map(|i| [diff.at(i, 0), diff.at(i, 1), diff.at(i, 2)]).find(|r| r.iter().any(|x| !x.is_zero()))?;
    let axis = ProjLine::new(k, row).ok()?;
    Some((axis, k.div(lam_c, mu)))
}

/// Character table when all non-identity elements are homologies sharing
/// one axis not through the center.
pub fn character(k: &FieldCtx, g: &AutGroup, center: &ProjPoint) -> Option<(ProjLine, Vec<(ProjMatrix, FieldElem)>)> {
    let mut axis: Option<ProjLine> = None;
    let mut table = Vec::new();
    for m in g.elements() {
        if m.is_identity(k) {
            table.push((*m, k.one()));
            continue;
        }
        let (ax, a) = homology_data(k, m, center)?;
        if ax.contains(k, center) || axis.is_some_and(|x| x != ax) {
            return None;
        }
        axis = Some(ax);
        table.push((*m, a));
    }
    Some((axis?, table))
}

/// Galois-point test among linear automorphisms.
pub fn is_galois_point(c: &PlaneCurve, center: &ProjPoint, ext: &Field) -> Result<GaloisReport> {
    let center = center.lift(ext)?;
    let kind = classify_center(c, &center)?;
    let projection_degree = match kind {
        PointKind::Outer => c.degree(),
        PointKind::Inner => c.degree() - 1,
        PointKind::Singular => return Err(Error::SingularCenter(center.display(ext))),
    };
    let group = decomposition_group(c, &center, ext)?;
    let verdict =
        if group.order() == projection_degree as usize { Verdict::Galois } else { Verdict::NotGaloisAmongLinear };
    let ch = if group.order() > 1 { character(ext, &group, &center) } else { None };
    Ok(GaloisReport {
        center,
        kind,
        projection_degree,
        group,
        verdict,
        axis: ch.as_ref().map(|c| c.0),
        character: ch.map(|c| c.1),
        search_field: ext.clone(),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ScanSummary {
    pub candidates: usize,
    pub inner_galois: usize,
    pub outer_galois: usize,
    pub skipped_singular: usize,
}

#[derive(Clone, Debug)]
pub struct Scan {
    pub reports: Vec<GaloisReport>,
    pub summary: ScanSummary,
}

pub enum Candidates {
    /// Every point of P²(search field).
    All,
    Explicit(Vec<ProjPoint>),
}

pub const SCAN_POINT_CAP: u64 = 1 << 20;

/// One report per non-singular candidate, in candidate order.
pub fn scan_galois_points(c: &PlaneCurve, candidates: Candidates, ext: &Field) -> Result<Scan> {
    let pts: Vec<ProjPoint> = match candidates {
        Candidates::All => {
            let q = ext.order();
            let n = q * q + q + 1;
            if n > SCAN_POINT_CAP {
                return Err(Error::ScanCapExceeded { p: ext.characteristic(), n: ext.degree(), size: n, cap: SCAN_POINT_CAP });
            }
            ProjPoint::all(ext).collect()
        }
        Candidates::Explicit(v) => v.iter().map(|p| p.lift(ext)).collect::<Result<_>>()?,
    };
    let results: Vec<Result<Option<GaloisReport>>> = pts
        .par_iter()
        .map(|p| match classify_center(c, p)? {
            PointKind::Singular => Ok(None),
            _ => is_galois_point(c, p, ext).map(Some),
        })
        .collect();
    let mut summary = ScanSummary { candidates: pts.len(), ..Default::default() };
    let mut reports = Vec::new();
    for r in results {
        match r? {
            None => summary.skipped_singular += 1,
            Some(rep) => {
                if rep.verdict == Verdict::Galois {
                    match rep.kind {
                        PointKind::Inner => summary.inner_galois += 1,
                        _ => summary.outer_galois += 1,
                    }
                }
                reports.push(rep);
            }
        }
    }
    Ok(Scan { reports, summary })
}

#[derive(Clone, Debug)]
pub struct FixedFieldCertificate {
    pub invariant: bool,
    /// First element moving the function, with the reason.
    pub failure: Option<(ProjMatrix, String)>,
    pub pole_degree: i64,
    pub group_order: usize,
    pub holds: bool,
}

/// Certifies `k(C)^G = k(F)`: `F ∘ σ = F` for all `σ ∈ G` (equal divisors
/// and equal values at one point off the supports) and the pole divisor of
/// `F` has degree `|G|`.
pub fn fixed_field_generator_check(c: &PlaneCurve, g: &AutGroup, f: &LinFormProduct) -> Result<FixedFieldCertificate> {
    let mut lines = f.lines();
    let composed: Vec<(ProjMatrix, LinFormProduct)> =
        g.elements().iter().map(|s| Ok((*s, f.compose(s)?))).collect::<Result<_>>()?;
    for (_, h) in &composed {
        lines.extend(h.lines());
    }
    let mut ext = c.splitting_field_for_lines(&lines)?;
    let div = f.divisor(c, &ext)?;
    let pole_degree = div.negative_part().degree();
    // a point off every factor line, enlarging the field if necessary
    let mut probe = None;
    for step in 1..=6u32 {
        let k = if step == 1 { ext.clone() } else { extension(&ext, step)? };
        let fk = f.lift(&k)?;
        let hs: Vec<LinFormProduct> = composed.iter().map(|(_, h)| h.lift(&k)).collect::<Result<_>>()?;
        let pts = crate::curve::enumerate_points_capped(c, &k, crate::field::DEFAULT_SCAN_CAP)?;
        if let Some(p) = pts.into_iter().find(|p| fk.eval(p).is_some() && hs.iter().all(|h| h.eval(p).is_some())) {
            probe = Some((k, p));
            break;
        }
    }
    let (pk, p) = probe.ok_or_else(|| Error::Internal("no point off the factor lines".into()))?;
    if pk.degree() > ext.degree() {
        ext = pk.clone();
    }
    let div = div.embed(&ext)?;
    let f_at_p = f.lift(&pk)?.eval(&p).unwrap();
    let mut failure = None;
    for (s, h) in &composed {
        let dh = h.divisor(c, &ext)?;
        if !dh.same_as(&div)? {
            failure = Some((*s, format!("divisor changes: {} vs {}", dh, div)));
            break;
        }
        if h.lift(&pk)?.eval(&p).unwrap() != f_at_p {
            failure = Some((*s, format!("value changes at {}", p.display(&pk))));
            break;
        }
    }
    let invariant = failure.is_none();
    let holds = invariant && pole_degree == g.order() as i64;
    Ok(FixedFieldCertificate { invariant, failure, pole_degree, group_order: g.order(), holds })
}

#[cfg(test)]
#[path = "galois/tests.rs"]
mod tests;
