//! JSON encodings: field elements as coefficient lists over GF(p), points
//! as three such lists, matrices row-major, divisors as `[point, coeff]`.

use serde_json::{json, Value};

use crate::criterion::{HermitianScenario, ModelGaloisReport, OrbitConditionReport, PlaneModel};
use crate::curve::{lift_matrix, Divisor, LinFormProduct, PlaneCurve};
use crate::field::{Field, FieldCtx, FieldElem};
use crate::galois::{FixedFieldCertificate, GaloisReport, Scan};
use crate::geometry::{AutGroup, ProjLine, ProjMatrix, ProjPoint};

pub fn field_json(k: &FieldCtx) -> Value {
    json!({ "p": k.characteristic(), "n": k.degree(), "seed": k.seed(), "modulus": k.modulus() })
}

pub fn elem_json(k: &FieldCtx, x: FieldElem) -> Value {
    json!(k.coeffs(x))
}

pub fn point_json(k: &FieldCtx, p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|&x| elem_json(k, x)).collect())
}

pub fn line_json(k: &FieldCtx, l: &ProjLine) -> Value {
    Value::Array(l.coords().iter().map(|&x| elem_json(k, x)).collect())
}

pub fn matrix_json(k: &FieldCtx, m: &ProjMatrix) -> Value {
    Value::Array(m.entries().iter().map(|&x| elem_json(k, x)).collect())
}

pub fn divisor_json(d: &Divisor) -> Value {
    let k = d.ctx();
    json!({
        "field": field_json(k),
        "degree": d.degree(),
        "terms": d.terms().map(|(p, c)| json!([point_json(k, p), c])).collect::<Vec<_>>(),
    })
}

pub fn group_json(k: &FieldCtx, g: &AutGroup) -> Value {
    json!({
        "order": g.order(),
        "generators": g.generators().iter().map(|m| matrix_json(k, m)).collect::<Vec<_>>(),
    })
}

pub fn group_elements_json(k: &FieldCtx, g: &AutGroup) -> Value {
    Value::Array(g.elements().iter().map(|m| matrix_json(k, m)).collect())
}

pub fn function_json(f: &LinFormProduct) -> Value {
    let k = f.ctx();
    json!({
        "field": field_json(k),
        "scale": elem_json(k, f.scale()),
        "factors": f.factors().iter().map(|(l, e)| json!([line_json(k, l), e])).collect::<Vec<_>>(),
    })
}

pub fn galois_report_json(r: &GaloisReport) -> Value {
    let k = &r.search_field;
    json!({
        "center": point_json(k, &r.center),
        "kind": r.kind,
        "projection_degree": r.projection_degree,
        "group": group_json(k, &r.group),
        "verdict": r.verdict,
        "note": "verdict considers automorphisms induced by PGL(3) only",
        "axis": r.axis.map(|a| line_json(k, &a)),
        "character": r.character.as_ref().map(|t| t.iter().map(|(m, a)| json!([matrix_json(k, m), elem_json(k, *a)])).collect::<Vec<_>>()),
    })
}

pub fn curve_json(c: &PlaneCurve) -> Value {
    serde_json::to_value(c.record()).expect("curve record serializes")
}

pub fn certificate_json(k: &Field, c: &FixedFieldCertificate) -> Value {
    json!({
        "holds": c.holds,
        "invariant": c.invariant,
        "pole_degree": c.pole_degree,
        "group_order": c.group_order,
        "moved_by": c.failure.as_ref().map(|(m, why)| json!({
            "element": lift_matrix(m, k).map(|m| matrix_json(k, &m)).unwrap_or(Value::Null),
            "reason": why,
        })),
    })
}

pub fn hermitian_json(sc: &HermitianScenario) -> Value {
    let k = &sc.base;
    json!({
        "params": sc.params,
        "curve": curve_json(&sc.curve),
        "points": sc.points.iter().map(|p| point_json(k, p)).collect::<Vec<_>>(),
        "groups": sc.groups.iter().map(|g| group_json(k, g)).collect::<Vec<_>>(),
        "phi": matrix_json(k, &sc.phi),
        "psi": matrix_json(k, &sc.psi),
        "phi_swaps": sc.phi_swaps,
        "psi_swaps": sc.psi_swaps,
        "generators": [function_json(&sc.f), function_json(&sc.g), function_json(&sc.h)],
        "power_identity": {
            "checked": sc.power_identity.checked,
            "holds": sc.power_identity.holds(),
            "counterexample": sc.power_identity.counterexample.map(|a| elem_json(k, a)),
        },
        "g3_moves_q3": sc.g3_moves_q3,
        "criterion": sc.report,
    })
}

pub fn model_json(m: &PlaneModel) -> Value {
    let base = m.source.base();
    let e = &m.sample_field;
    json!({
        "kind": m.kind,
        "f": function_json(&m.f),
        "g": function_json(&m.g),
        "divisor_f": divisor_json(&m.div_f),
        "divisor_g": divisor_json(&m.div_g),
        "poles": divisor_json(&m.poles),
        "pullbacks": {
            "X=0": divisor_json(&m.pullbacks[0]),
            "Y=0": divisor_json(&m.pullbacks[1]),
            "Z=0": divisor_json(&m.pullbacks[2]),
        },
        "poles_agree": m.poles_agree,
        "base_point_free": m.base_point_free,
        "incidences": m.incidences,
        "sample_field": field_json(e),
        "sample_count": m.samples.len(),
        "collisions": m.collisions.iter().map(|(img, a, b)| json!({
            "image": point_json(e, img),
            "preimages": [point_json(e, a), point_json(e, b)],
        })).collect::<Vec<_>>(),
        "expected_degree": m.expected_degree,
        "interpolation": m.interpolation,
        "image": m.image.as_ref().map(curve_json),
        "vertices": m.vertices.iter().map(|p| point_json(base, p)).collect::<Vec<_>>(),
    })
}

pub fn model_galois_json(base: &Field, r: &ModelGaloisReport) -> Value {
    json!({
        "all_galois": r.all_galois,
        "non_collinear": r.non_collinear,
        "vertices": r.vertices.iter().map(|v| json!({
            "vertex": point_json(base, &v.vertex),
            "galois": v.galois,
            "function": function_json(&v.function),
            "group_order": v.group_order,
            "projection_degree": v.projection_degree,
            "certificate": certificate_json(base, &v.certificate),
            "image_side": match &v.image_side {
                Ok(g) => galois_report_json(g),
                Err(e) => json!({ "error": e }),
            },
        })).collect::<Vec<_>>(),
    })
}

pub fn orbit_condition_json(r: &OrbitConditionReport) -> Value {
    let gk = &r.group_field;
    let lk = r.line_field.as_ref();
    json!({
        "holds": r.holds,
        "hypothesis_failures": r.hypothesis_failures,
        "centers": r.center_reports.iter().map(galois_report_json).collect::<Vec<_>>(),
        "group": r.group.as_ref().map(|g| group_json(gk, g)),
        "line_field": lk.map(|k| field_json(k)),
        "line_points": lk.map(|k| r.line_points.iter().map(|p| point_json(k, p)).collect::<Vec<_>>()),
        "witness": match (lk, &r.witness) {
            (Some(k), Some((q, s, img))) => json!({
                "point": point_json(k, q),
                "element": lift_matrix(s, k).map(|m| matrix_json(k, &m)).unwrap_or(Value::Null),
                "image": point_json(k, img),
            }),
            _ => Value::Null,
        },
        "groups_cyclic": r.groups_cyclic,
        "simultaneously_diagonal": r.simultaneously_diagonal,
    })
}

pub fn scan_json(k: &FieldCtx, s: &Scan) -> Value {
    json!({
        "search_field": field_json(k),
        "summary": s.summary,
        "reports": s.reports.iter().map(galois_report_json).collect::<Vec<_>>(),
    })
}
