//! Points, line sections and principal divisors on the Hermitian cubic.

use galois_points::curve::{interpolate_curve, make_curve, CurveSpec, Interpolation, LinFormProduct};
use galois_points::field::{extension, make_field};
use galois_points::geometry::ProjLine;

fn main() -> galois_points::Result<()> {
    let k = make_field(2, 2, 0)?;
    let c = make_curve(&CurveSpec::Hermitian { q: 2 }, &k)?;
    println!("curve {}", c.display());
    let pts = c.enumerate_points(&k)?;
    println!("{} points over GF(4)", pts.len());

    let z = ProjLine::from_ints(&k, [0, 0, 1])?;
    let y = ProjLine::from_ints(&k, [0, 1, 0])?;
    println!("Z = 0 cuts {}", c.line_intersection_divisor(&z, &k)?);
    println!("Y = 0 cuts {}", c.line_intersection_divisor(&y, &k)?);

    // a line that only splits over an extension
    let l = ProjLine::from_ints(&k, [1, 1, 1])?;
    let sk = c.splitting_field(&l)?;
    println!("X + Y + Z = 0 splits over GF({}): {}", sk.order(), c.line_intersection_divisor(&l, &sk)?);

    let x = ProjLine::from_ints(&k, [1, 0, 0])?;
    let f = LinFormProduct::ratio(&k, x, z)?;
    let d = f.divisor(&c, &k)?;
    println!("div(X/Z) = {}  (degree {})", d, d.degree());

    let ext = extension(&k, 3)?;
    let big = c.enumerate_points(&ext)?;
    match interpolate_curve(&ext, &big, 3) {
        Interpolation::Curve { poly, .. } => {
            let same = poly == c.poly().embed(&k, &ext)?.normalized(&ext)?;
            println!("the {} points over GF(64) determine the equation again: {same}", big.len());
        }
        other => println!("interpolation: {other:?}"),
    }
    Ok(())
}
