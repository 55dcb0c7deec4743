//! Each condition of the criterion catches the defect it is meant to.

use galois_points::criterion::{
    build_plane_model, check_outer_criterion, hermitian_scenario, verify_model_galois, wrong_divisor_generator,
    ModelKind, ModelOptions,
};

fn main() -> galois_points::Result<()> {
    let sc = hermitian_scenario(2, 1, 0)?;
    let k = &sc.base;
    let certs = [Some(sc.f.clone()), Some(sc.g.clone()), Some(sc.h.clone())];

    let same = [sc.groups[0].clone(), sc.groups[0].clone(), sc.groups[2].clone()];
    let r = check_outer_criterion(&sc.curve, &same, &sc.points, &certs, k)?;
    println!("G1 = G2: (b) {:?}", r.condition("b").unwrap().status);

    // Q3 moved into the G2-orbit of Q2, with G2 playing the role of G1
    let sigma = sc.groups[1].non_identity(k).next().unwrap();
    let pts = [sc.points[0], sc.points[1], sigma.apply(k, &sc.points[1])];
    let groups = [sc.groups[1].clone(), sc.groups[0].clone(), sc.groups[2].clone()];
    let r = check_outer_criterion(&sc.curve, &groups, &pts, &[None, None, None], k)?;
    println!("shared orbit: (d') {:?}, overall {:?}", r.condition("d'").unwrap().status, r.verdict);

    let bad = wrong_divisor_generator(&sc)?;
    let opts = ModelOptions { check_prescription: false, ..ModelOptions::default() };
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &bad, opts)?;
    let v = verify_model_galois(&m)?;
    for x in &v.vertices {
        println!("wrong g, vertex {}: Galois {}", x.vertex.display(k), x.galois);
    }
    Ok(())
}
