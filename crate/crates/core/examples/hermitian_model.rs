//! Three non-collinear outer Galois points from cyclic groups of order
//! s(q+1) on the Hermitian curve. Usage: `hermitian_model [q] [s]`.

use galois_points::criterion::{build_plane_model, hermitian_scenario, verify_model_galois, ModelKind, ModelOptions};

fn main() -> galois_points::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (q, s) = (args.first().copied().unwrap_or(3), args.get(1).copied().unwrap_or(2));
    let sc = hermitian_scenario(q, s, 0)?;
    let k = &sc.base;
    println!("q = {q}, s = {s}, m = {}, groups of order {}", sc.params.m, sc.groups[2].order());
    println!("power identity checked on {} elements: {}", sc.power_identity.checked, sc.power_identity.holds());
    for (i, p) in sc.points.iter().enumerate() {
        println!("Q{} = {}", i + 1, p.display(k));
    }
    for c in &sc.report.conditions {
        println!("condition ({}) {:?}", c.name, c.status);
    }

    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())?;
    println!("f = {}", m.f.display());
    println!("g = {}", m.g.display());
    println!("common poles {}", m.poles);
    println!("{} sample points over GF({}), {} repeated images", m.samples.len(), m.sample_field.order(), m.collisions.len());
    if let Some(img) = &m.image {
        println!("image of degree {}: {}", img.degree(), img.display());
    }
    let v = verify_model_galois(&m)?;
    for x in &v.vertices {
        let lin = x.image_side.as_ref().map(|r| r.group.order()).unwrap_or(0);
        println!(
            "vertex {}: Galois {} (group {}, projection degree {}, linear part on the image {})",
            x.vertex.display(k),
            x.galois,
            x.group_order,
            x.projection_degree,
            lin
        );
    }
    Ok(())
}
