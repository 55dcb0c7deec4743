//! Points, lines, projectivities and the scaling group over GF(7).

use galois_points::field::make_field;
use galois_points::geometry::{
    group_closure, line_through, maps_between_triangles, meet, orbit, perspectivities_with_center, ProjMatrix,
    ProjPoint, DEFAULT_GROUP_CAP,
};

fn main() -> galois_points::Result<()> {
    let k = make_field(7, 1, 0)?;
    let p = |c| ProjPoint::from_ints(&k, c);
    let (a, b, c) = (p([1, 0, 0])?, p([0, 1, 0])?, p([1, 2, 3])?);
    let l = line_through(&k, &a, &c)?;
    let m = line_through(&k, &b, &c)?;
    println!("line {} meets line {} at {}", l.display(&k), m.display(&k), meet(&k, &l, &m)?.display(&k));

    let n = maps_between_triangles(&k, [a, b, c], [b, c, a])?.count();
    println!("{n} projectivities send a,b,c to b,c,a");

    let center = p([0, 0, 1])?;
    let fam = perspectivities_with_center(&k, &center);
    println!("perspectivities with center {}: {}", center.display(&k), fam.family_size());

    // scalings by cube roots of unity on the last two coordinates
    let w = k.root_of_unity(3)?;
    let g = group_closure(
        &k,
        &[ProjMatrix::diag(&k, k.one(), w, k.one())?, ProjMatrix::diag(&k, k.one(), k.one(), w)?],
        DEFAULT_GROUP_CAP,
    )?;
    println!("scaling group of order {}", g.order());
    for q in [p([1, 1, 1])?, p([1, 1, 0])?, a] {
        println!("  orbit of {} has {} points", q.display(&k), orbit(&k, &g, &q).len());
    }
    Ok(())
}
