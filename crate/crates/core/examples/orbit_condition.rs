//! The orbit condition: it holds for Fermat curves and fails for the
//! degree-8 Hermitian model.

use galois_points::criterion::{
    build_plane_model, fermat_orbit_condition, fermat_orbit_condition_model, hermitian_scenario,
    verify_model_galois, ModelKind, ModelOptions,
};
use galois_points::curve::{make_curve, CurveSpec};
use galois_points::field::make_field;
use galois_points::geometry::{ProjPoint, DEFAULT_GROUP_CAP};

fn main() -> galois_points::Result<()> {
    for (p, n, d) in [(2, 2, 3), (13, 1, 4), (11, 1, 5), (7, 1, 6)] {
        let k = make_field(p, n, 0)?;
        let c = make_curve(&CurveSpec::Fermat { d }, &k)?;
        let v = [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|x| ProjPoint::from_ints(&k, x).unwrap());
        let r = fermat_orbit_condition(&c, &v, &k, DEFAULT_GROUP_CAP)?;
        println!(
            "Fermat d={d} over GF({}): holds {:?}, |G| = {}, {} points on the lines",
            k.order(),
            r.holds,
            r.group.as_ref().map_or(0, |g| g.order()),
            r.line_points.len()
        );
    }

    let sc = hermitian_scenario(3, 2, 0)?;
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default())?;
    let v = verify_model_galois(&m)?;
    let r = fermat_orbit_condition_model(&m, &v, DEFAULT_GROUP_CAP)?;
    let k = &sc.base;
    println!("degree {:?} Hermitian model: holds {:?}", m.image_degree(), r.holds);
    if let Some((q, s, img)) = &r.witness {
        println!("  {} is sent off the lines to {} by {}", q.display(k), img.display(k), s.display(k));
    }
    Ok(())
}
