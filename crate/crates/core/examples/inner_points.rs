//! Three inner Galois points on the Hermitian cubic and the plane model
//! they produce.

use galois_points::criterion::{build_plane_model, inner_hermitian_scenario, verify_model_galois, ModelKind, ModelOptions};

fn main() -> galois_points::Result<()> {
    let sc = inner_hermitian_scenario(2, 0)?;
    let k = &sc.base;
    for (p, g) in sc.points.iter().zip(&sc.groups) {
        println!("P = {} with decomposition group of order {}", p.display(k), g.order());
    }
    println!("criterion: {:?}", sc.report.verdict);
    let m = build_plane_model(ModelKind::Inner, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())?;
    println!("image degree {:?}", m.image_degree());
    for i in &m.incidences {
        println!("  P{} on {}: {}", i.point, i.line, i.holds);
    }
    let v = verify_model_galois(&m)?;
    println!("all vertices Galois: {}", v.all_galois);
    Ok(())
}
