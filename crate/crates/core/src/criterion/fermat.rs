use std::collections::BTreeSet;

use super::model::{ModelGaloisReport, PlaneModel};
use crate::curve::{lift_matrix, PlaneCurve};
use crate::error::Result;
use crate::field::{compositum, Field, FieldCtx};
use crate::galois::{is_galois_point, GaloisReport, PointKind, Verdict};
use crate::geometry::{collinear, group_closure, line_through, AutGroup, Mat3, ProjMatrix, ProjPoint};

#[derive(Clone, Debug)]
pub struct OrbitConditionReport {
    /// Why the three centers do not qualify; empty when they do.
    pub hypothesis_failures: Vec<String>,
    pub center_reports: Vec<GaloisReport>,
    pub group: Option<AutGroup>,
    pub group_field: Field,
    /// Curve points on the three lines joining the centers.
    pub line_points: Vec<ProjPoint>,
    pub line_field: Option<Field>,
    /// `None` when the hypothesis fails.
    pub holds: Option<bool>,
    /// `(Q, σ, σQ)` with `σQ` off the three lines.
    pub witness: Option<(ProjPoint, ProjMatrix, ProjPoint)>,
    /// Whether every center group is cyclic.
    pub groups_cyclic: Option<bool>,
    /// Whether every center group is diagonal in the frame of the centers.
    pub simultaneously_diagonal: Option<bool>,
}

impl OrbitConditionReport {
    fn failed_hypothesis(k: &Field, why: Vec<String>, reports: Vec<GaloisReport>) -> OrbitConditionReport {
        OrbitConditionReport {
            hypothesis_failures: why,
            center_reports: reports,
            group: None,
            group_field: k.clone(),
            line_points: Vec::new(),
            line_field: None,
            holds: None,
            witness: None,
            groups_cyclic: None,
            simultaneously_diagonal: None,
        }
    }
}

fn element_order(k: &FieldCtx, m: &ProjMatrix) -> usize {
    let mut x = *m;
    let mut n = 1;
    while !x.is_identity(k) {
        x = x.compose(k, m);
        n += 1;
    }
    n
}

fn is_cyclic(k: &FieldCtx, g: &AutGroup) -> bool {
    g.elements().iter().any(|m| element_order(k, m) == g.order())
}

/// First `(Q, σ, σQ)` with `Q ∈ S` and `σQ ∉ S`.
fn escaping(k: &Field, g: &AutGroup, s: &[ProjPoint]) -> Result<Option<(ProjPoint, ProjMatrix, ProjPoint)>> {
    let set: BTreeSet<ProjPoint> = s.iter().copied().collect();
    let mats: Vec<ProjMatrix> = g.elements().iter().map(|m| lift_matrix(m, k)).collect::<Result<_>>()?;
    for q in s {
        for (orig, m) in g.elements().iter().zip(&mats) {
            let img = m.apply(k, q);
            if !set.contains(&img) {
                return Ok(Some((*q, *orig, img)));
            }
        }
    }
    Ok(None)
}

/// Orbit condition for three outer Galois points of a plane curve whose
/// groups act by perspectivities: the group generated by the three
/// decomposition groups keeps the curve points on the joining lines on
/// those lines.
pub fn fermat_orbit_condition(
    c: &PlaneCurve,
    centers: &[ProjPoint; 3],
    ext: &Field,
    cap: usize,
) -> Result<OrbitConditionReport> {
    let k: &FieldCtx = ext;
    let centers = [centers[0].lift(k)?, centers[1].lift(k)?, centers[2].lift(k)?];
    let mut why = Vec::new();
    if centers.iter().enumerate().any(|(i, p)| centers[..i].contains(p)) || collinear(k, &centers[0], &centers[1], &centers[2]) {
        why.push("centers are collinear".into());
        return Ok(OrbitConditionReport::failed_hypothesis(ext, why, Vec::new()));
    }
    let mut reports = Vec::new();
    for (i, p) in centers.iter().enumerate() {
        let r = is_galois_point(c, p, ext)?;
        if r.kind != PointKind::Outer {
            why.push(format!("center {} lies on the curve", i + 1));
        } else if r.verdict != Verdict::Galois {
            why.push(format!("center {} is not Galois (group of order {})", i + 1, r.group.order()));
        }
        reports.push(r);
    }
    if !why.is_empty() {
        return Ok(OrbitConditionReport::failed_hypothesis(ext, why, reports));
    }
    let gens: Vec<ProjMatrix> = reports.iter().flat_map(|r| r.group.generators().to_vec()).collect();
    let g = group_closure(k, &gens, cap)?;

    let lines = [
        line_through(k, &centers[0], &centers[1])?,
        line_through(k, &centers[0], &centers[2])?,
        line_through(k, &centers[1], &centers[2])?,
    ];
    let lk = compositum(ext, &c.splitting_field_for_lines(&lines)?)?;
    let mut s = BTreeSet::new();
    for l in &lines {
        s.extend(c.line_intersection_divisor(l, &lk)?.support());
    }
    let line_points: Vec<ProjPoint> = s.into_iter().collect();
    let witness = escaping(&lk, &g, &line_points)?;

    let groups_cyclic = reports.iter().all(|r| is_cyclic(k, &r.group));
    let frame = ProjMatrix::new(k, Mat3::from_columns(centers.map(|p| p.coords())))?;
    let frame_inv = frame.inverse();
    let diagonal = reports.iter().all(|r| {
        r.group.elements().iter().all(|m| {
            let d = frame_inv.compose(k, &m.compose(k, &frame)).mat();
            (0..3).all(|i| (0..3).all(|j| i == j || d.at(i, j).is_zero()))
        })
    });
    Ok(OrbitConditionReport {
        hypothesis_failures: Vec::new(),
        center_reports: reports,
        group: Some(g),
        group_field: ext.clone(),
        line_points,
        line_field: Some(lk),
        holds: Some(witness.is_none()),
        witness,
        groups_cyclic: Some(groups_cyclic),
        simultaneously_diagonal: Some(diagonal),
    })
}

/// Orbit condition on the source curve of a plane model: `G = ⟨G_1, G_2,
/// G_3⟩ ⊂ Aut(X)` and `S = φ⁻¹` of the three coordinate lines (the supports
/// of the three pullbacks).
pub fn fermat_orbit_condition_model(
    model: &PlaneModel,
    verification: &ModelGaloisReport,
    cap: usize,
) -> Result<OrbitConditionReport> {
    let base = model.source.base();
    let mut why = Vec::new();
    if !verification.non_collinear {
        why.push("centers are collinear".into());
    }
    for (i, v) in verification.vertices.iter().enumerate() {
        if !v.galois {
            why.push(format!("vertex {} is not certified Galois", i + 1));
        }
    }
    if !why.is_empty() {
        return Ok(OrbitConditionReport::failed_hypothesis(base, why, Vec::new()));
    }
    let gens: Vec<ProjMatrix> = model.groups.iter().flat_map(|g| g.generators().to_vec()).collect();
    let g = group_closure(base, &gens, cap)?;
    let k = model.poles.ctx().clone();
    let mut s = BTreeSet::new();
    for d in &model.pullbacks {
        s.extend(d.support());
    }
    let line_points: Vec<ProjPoint> = s.into_iter().collect();
    let witness = escaping(&k, &g, &line_points)?;
    let groups_cyclic = model.groups.iter().all(|h| is_cyclic(base, h));
    Ok(OrbitConditionReport {
        hypothesis_failures: Vec::new(),
        center_reports: Vec::new(),
        group: Some(g),
        group_field: base.clone(),
        line_points,
        line_field: Some(k),
        holds: Some(witness.is_none()),
        witness,
        groups_cyclic: Some(groups_cyclic),
        simultaneously_diagonal: None,
    })
}
