//! Decomposition groups and the Galois-point census of the Fermat quartic
//! over GF(13).

use galois_points::curve::{make_curve, CurveSpec};
use galois_points::field::make_field;
use galois_points::galois::{is_galois_point, scan_galois_points, Candidates, Verdict};
use galois_points::geometry::ProjPoint;

fn main() -> galois_points::Result<()> {
    let k = make_field(13, 1, 0)?;
    let c = make_curve(&CurveSpec::Fermat { d: 4 }, &k)?;

    let v = ProjPoint::from_ints(&k, [0, 0, 1])?;
    let r = is_galois_point(&c, &v, &k)?;
    println!("{}: {:?}, degree {}, group order {}, {:?}", v.display(&k), r.kind, r.projection_degree, r.group.order(), r.verdict);
    if let Some(ch) = &r.character {
        for (m, a) in ch {
            println!("  {} has eigenvalue ratio {}", m.display(&k), k.format(*a));
        }
    }

    let scan = scan_galois_points(&c, Candidates::All, &k)?;
    println!("{:?}", scan.summary);
    for r in scan.reports.iter().filter(|r| r.verdict == Verdict::Galois) {
        println!("  Galois point {}", r.center.display(&k));
    }
    Ok(())
}
