use super::*;
use crate::field::{make_field, Field};
use crate::geometry::ProjPoint;

#[test]
fn status_combination() {
    assert_eq!(Status::all([Status::Pass, Status::Pass]), Status::Pass);
    assert_eq!(Status::all([Status::Pass, Status::Unverified]), Status::Unverified);
    assert_eq!(Status::all([Status::Unverified, Status::Fail]), Status::Fail);
    assert_eq!(Status::all([]), Status::Pass);
}

#[test]
fn power_identity_small() {
    for (p, n, q, s) in [(2, 2, 2, 1), (3, 2, 3, 1), (3, 2, 3, 2)] {
        let k = make_field(p, n, 0).unwrap();
        let c = power_identity(&k, q, s);
        assert!(c.holds());
        assert_eq!(c.checked as u64, q * q - 1);
    }
}

#[test]
fn power_identity_detects_wrong_exponent() {
    // with s not dividing q - 1 the identity has no reason to hold
    let k = make_field(5, 2, 0).unwrap();
    assert!(!power_identity(&k, 5, 3).holds());
}

#[test]
fn hermitian_q2_outer_criterion() {
    let sc = hermitian_scenario(2, 1, 0).unwrap();
    assert_eq!(sc.report.verdict, Status::Pass, "{:#?}", sc.report);
    for g in &sc.groups {
        assert_eq!(g.order(), 3);
    }
    assert_eq!(sc.params.d, 3);
    assert!(sc.power_identity.holds());
    assert!(sc.g3_moves_q3);
}

#[test]
fn hermitian_scenario_rejects_bad_s() {
    assert!(matches!(hermitian_scenario(2, 2, 0), Err(Error::Scenario(m)) if m.contains("s must divide q−1")));
    assert!(hermitian_scenario(6, 1, 0).is_err());
    assert!(hermitian_scenario(5, 1, 0).is_err());
}

#[test]
fn hermitian_q2_model() {
    let sc = hermitian_scenario(2, 1, 0).unwrap();
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())
        .unwrap();
    assert!(m.incidences_hold());
    assert!(m.poles_agree && m.base_point_free);
    assert_eq!(m.image_degree(), Some(3));
    let v = verify_model_galois(&m).unwrap();
    assert!(v.all_galois, "{:#?}", v.vertices.iter().map(|x| (&x.certificate, x.group_order)).collect::<Vec<_>>());
    for x in &v.vertices {
        assert_eq!(x.group_order, 3);
        let r = x.image_side.as_ref().unwrap();
        assert_eq!(r.group.order(), 3);
    }
}

#[test]
fn inner_q2_scenario_and_model() {
    let sc = inner_hermitian_scenario(2, 0).unwrap();
    assert_eq!(sc.report.verdict, Status::Pass, "{:#?}", sc.report);
    let m = build_plane_model(ModelKind::Inner, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())
        .unwrap();
    assert!(m.incidences_hold());
    assert_eq!(m.image_degree(), Some(3));
    let v = verify_model_galois(&m).unwrap();
    assert!(v.all_galois);
}

#[test]
fn hermitian_scenarios_pass() {
    for (q, s) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let sc = hermitian_scenario(q, s, 0).unwrap();
        assert_eq!(sc.report.verdict, Status::Pass, "q={q} s={s}");
        assert!(sc.groups.iter().all(|g| g.order() as u64 == s * (q + 1)));
        assert_eq!(sc.params.m * s, q - 1);
        assert!(sc.g3_moves_q3);
        // the swap exists for q = 3 only; otherwise Φ fixes Q1 and sends Q2 to Q3
        assert_eq!(sc.phi_swaps, q == 3);
        assert_eq!(sc.phi.apply(&sc.base, &sc.points[0]), sc.points[0]);
        assert_eq!(sc.phi.apply(&sc.base, &sc.points[1]), sc.points[2]);
        assert_eq!(sc.psi.apply(&sc.base, &sc.points[0]), sc.points[2]);
        assert_eq!(sc.psi.apply(&sc.base, &sc.points[1]), sc.points[1]);
    }
}

#[test]
fn outer_witnesses_are_full_orbits() {
    let sc = hermitian_scenario(3, 1, 0).unwrap();
    let c = sc.report.condition("c'").unwrap();
    for w in &c.witnesses {
        let terms = w["lhs"]["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0][1], 4);
        assert_eq!(w["lhs"], w["rhs"]);
    }
}

#[test]
fn wrong_generator_is_caught() {
    let sc = hermitian_scenario(2, 1, 0).unwrap();
    let bad = wrong_divisor_generator(&sc).unwrap();
    let err = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &bad, ModelOptions::default())
        .unwrap_err();
    assert!(matches!(err, Error::PrescriptionMismatch { ref which, .. } if which == "g"));
    let opts = ModelOptions { check_prescription: false, ..ModelOptions::default() };
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &bad, opts).unwrap();
    let v = verify_model_galois(&m).unwrap();
    assert!(v.vertices[0].galois);
    assert!(!v.vertices[1].galois);
    assert!(v.vertices[1].certificate.failure.is_some());
    assert!(!v.all_galois);
}

fn vertices(k: &Field) -> [ProjPoint; 3] {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|c| ProjPoint::from_ints(k, c).unwrap())
}

#[test]
fn fermat_orbit_condition_holds_on_fermat_curves() {
    use crate::curve::{make_curve, CurveSpec};
    for (p, n, d) in [(2, 2, 3), (13, 1, 4), (11, 1, 5), (7, 1, 6)] {
        let k = make_field(p, n, 0).unwrap();
        let c = make_curve(&CurveSpec::Fermat { d }, &k).unwrap();
        let r = fermat_orbit_condition(&c, &vertices(&k), &k, crate::geometry::DEFAULT_GROUP_CAP).unwrap();
        assert!(r.hypothesis_failures.is_empty(), "d={d}: {:?}", r.hypothesis_failures);
        assert_eq!(r.holds, Some(true), "d={d}");
        assert_eq!(r.group.as_ref().unwrap().order(), (d * d) as usize);
        assert_eq!(r.line_points.len(), 3 * d as usize);
        assert_eq!(r.groups_cyclic, Some(true));
        assert_eq!(r.simultaneously_diagonal, Some(true));
    }
}

#[test]
fn fermat_orbit_condition_hypotheses() {
    use crate::curve::{make_curve, CurveSpec};
    let k = make_field(13, 1, 0).unwrap();
    let c = make_curve(&CurveSpec::Fermat { d: 4 }, &k).unwrap();
    let pt = |v| ProjPoint::from_ints(&k, v).unwrap();
    let r = fermat_orbit_condition(&c, &[pt([1, 0, 0]), pt([0, 1, 0]), pt([1, 1, 0])], &k, 1000).unwrap();
    assert_eq!(r.holds, None);
    assert!(r.hypothesis_failures[0].contains("collinear"));
    let r = fermat_orbit_condition(&c, &[pt([1, 0, 0]), pt([0, 1, 0]), pt([1, 1, 1])], &k, 1000).unwrap();
    assert_eq!(r.holds, None);
    assert!(r.hypothesis_failures.iter().any(|w| w.contains("center 3")));
}

#[test]
fn orbit_condition_fails_on_degree_eight_model() {
    let sc = hermitian_scenario(3, 2, 0).unwrap();
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())
        .unwrap();
    let v = verify_model_galois(&m).unwrap();
    assert!(v.all_galois);
    let r = fermat_orbit_condition_model(&m, &v, crate::geometry::DEFAULT_GROUP_CAP).unwrap();
    assert_eq!(r.holds, Some(false));
    let (q, sigma, img) = r.witness.unwrap();
    assert!(r.line_points.contains(&q));
    assert!(!r.line_points.contains(&img));
    assert_eq!(sigma.apply(&sc.base, &q), img);
}
