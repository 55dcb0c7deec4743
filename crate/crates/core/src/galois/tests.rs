use super::*;
use crate::curve::{make_curve, CurveSpec};
use crate::field::make_field;
use crate::geometry::line_through;

fn pt(k: &Field, c: [i64; 3]) -> ProjPoint {
    ProjPoint::from_ints(k, c).unwrap()
}

#[test]
fn fibers() {
    let k = make_field(2, 2, 0).unwrap();
    let f = make_curve(&CurveSpec::Fermat { d: 3 }, &k).unwrap();
    let fib = projection_fiber(&f, &pt(&k, [0, 0, 1]), &ProjLine::from_ints(&k, [1, 0, 0]).unwrap(), &k).unwrap();
    assert_eq!(fib.degree(), 3);
    assert_eq!(fib.support().len(), 3);
    let h = make_curve(&CurveSpec::Hermitian { q: 2 }, &k).unwrap();
    let q1 = pt(&k, [1, 0, 0]);
    let fib = projection_fiber(&h, &q1, &ProjLine::from_ints(&k, [0, 0, 1]).unwrap(), &k).unwrap();
    assert_eq!(fib, Divisor::point(&k, q1, 2).unwrap());
    let k13 = make_field(13, 1, 0).unwrap();
    let f4 = make_curve(&CurveSpec::Fermat { d: 4 }, &k13).unwrap();
    let c = pt(&k13, [1, 1, 1]);
    let mut seen = 0;
    for l in ProjLine::all(&k13).filter(|l| l.contains(&k13, &c)).take(14) {
        let ext = f4.splitting_field(&l).unwrap();
        assert_eq!(projection_fiber(&f4, &c, &l, &ext).unwrap().degree(), 4);
        seen += 1;
    }
    assert_eq!(seen, 14);
}

#[test]
fn decomposition_groups() {
    let k = make_field(2, 2, 0).unwrap();
    let f = make_curve(&CurveSpec::Fermat { d: 3 }, &k).unwrap();
    let g = decomposition_group(&f, &pt(&k, [0, 0, 1]), &k).unwrap();
    let mut expect: Vec<ProjMatrix> =
        k.nonzero_elements().map(|z| ProjMatrix::diag(&k, k.one(), k.one(), z).unwrap()).collect();
    expect.sort();
    assert_eq!(g.elements(), &expect[..]);
    let k13 = make_field(13, 1, 0).unwrap();
    let f4 = make_curve(&CurveSpec::Fermat { d: 4 }, &k13).unwrap();
    assert_eq!(decomposition_group(&f4, &pt(&k13, [0, 0, 1]), &k13).unwrap().order(), 4);
    let mut terms = f4.poly().terms();
    terms.push(([2, 1, 1], k13.one()));
    let generic = PlaneCurve::new(&k13, HomPoly::from_terms(&k13, 4, &terms).unwrap()).unwrap();
    assert_eq!(decomposition_group(&generic, &pt(&k13, [0, 0, 1]), &k13).unwrap().order(), 1);
}

#[test]
fn galois_verdicts() {
    let k = make_field(2, 2, 0).unwrap();
    let f = make_curve(&CurveSpec::Fermat { d: 3 }, &k).unwrap();
    let r = is_galois_point(&f, &pt(&k, [0, 0, 1]), &k).unwrap();
    assert_eq!((r.kind, r.verdict, r.group.order()), (PointKind::Outer, Verdict::Galois, 3));
    // diag(1, 1, ζ): axis Z = 0, a(γ) = ζ
    assert_eq!(r.axis, Some(ProjLine::from_ints(&k, [0, 0, 1]).unwrap()));
    for (m, a) in r.character.unwrap() {
        assert_eq!(m, ProjMatrix::diag(&k, k.one(), k.one(), a).unwrap());
    }
    let k13 = make_field(13, 1, 0).unwrap();
    let f4 = make_curve(&CurveSpec::Fermat { d: 4 }, &k13).unwrap();
    let r = is_galois_point(&f4, &pt(&k13, [1, 1, 1]), &k13).unwrap();
    assert_eq!((r.kind, r.verdict, r.group.order()), (PointKind::Outer, Verdict::NotGaloisAmongLinear, 1));
    let h = make_curve(&CurveSpec::Hermitian { q: 2 }, &k).unwrap();
    let r = is_galois_point(&h, &pt(&k, [1, 0, 0]), &k).unwrap();
    assert_eq!((r.kind, r.verdict, r.group.order(), r.projection_degree), (PointKind::Inner, Verdict::Galois, 2, 2));
    // x ↦ x + z
    assert!(r.group.contains(&ProjMatrix::from_ints(&k, [1, 0, 1, 0, 1, 0, 0, 0, 1]).unwrap()));
    let k7 = make_field(7, 1, 0).unwrap();
    let cusp = PlaneCurve::new(
        &k7,
        HomPoly::from_terms(&k7, 3, &[([0, 2, 1], k7.one()), ([3, 0, 0], k7.from_int(-1))]).unwrap(),
    )
    .unwrap();
    assert!(matches!(is_galois_point(&cusp, &pt(&k7, [0, 0, 1]), &k7), Err(Error::SingularCenter(_))));
}

#[test]
fn scans() {
    let k = make_field(2, 2, 0).unwrap();
    let h = make_curve(&CurveSpec::Hermitian { q: 2 }, &k).unwrap();
    let pts = h.enumerate_points(&k).unwrap();
    let s = scan_galois_points(&h, Candidates::Explicit(pts), &k).unwrap();
    assert_eq!(s.summary.inner_galois, 9);
    let s = scan_galois_points(&h, Candidates::Explicit(Vec::new()), &k).unwrap();
    assert!(s.reports.is_empty());
}

#[test]
fn group_elements_fix_fibers() {
    let k = make_field(2, 2, 0).unwrap();
    let f = make_curve(&CurveSpec::Fermat { d: 3 }, &k).unwrap();
    let c = pt(&k, [0, 0, 1]);
    let r = is_galois_point(&f, &c, &k).unwrap();
    for l in ProjLine::all(&k).filter(|l| l.contains(&k, &c)) {
        let ext = f.splitting_field(&l).unwrap();
        let fib = projection_fiber(&f, &c, &l, &ext).unwrap();
        for m in r.group.elements() {
            assert_eq!(fib.pushforward(m).unwrap(), fib);
        }
    }
}

#[test]
fn conjugation_covariance() {
    let k = make_field(2, 2, 0).unwrap();
    let f = make_curve(&CurveSpec::Fermat { d: 3 }, &k).unwrap();
    let c = pt(&k, [0, 0, 1]);
    let g = decomposition_group(&f, &c, &k).unwrap();
    let mats = [[1, 1, 0, 0, 1, 0, 1, 0, 1], [0, 1, 0, 0, 0, 1, 1, 0, 0], [1, 0, 0, 1, 1, 0, 0, 1, 1]];
    for e in mats {
        let m = ProjMatrix::from_ints(&k, e).unwrap();
        // the image M(C) is cut out by F ∘ M⁻¹
        let moved = f.transform(&m.inverse()).unwrap();
        let g2 = decomposition_group(&moved, &m.apply(&k, &c), &k).unwrap();
        assert_eq!(g2, g.conjugate(&k, &m));
    }
}

#[test]
fn fixed_field_certificates() {
    let k = make_field(2, 2, 0).unwrap();
    let h = make_curve(&CurveSpec::Hermitian { q: 2 }, &k).unwrap();
    let x = LinFormProduct::ratio(&k, ProjLine::from_ints(&k, [1, 0, 0]).unwrap(), ProjLine::from_ints(&k, [0, 0, 1]).unwrap()).unwrap();
    let a = k.primitive_element();
    let g = group_closure(&k, &[ProjMatrix::diag(&k, k.one(), a, k.one()).unwrap()], 100).unwrap();
    assert_eq!(g.order(), 3);
    let cert = fixed_field_generator_check(&h, &g, &x).unwrap();
    assert!(cert.holds, "{cert:?}");
    let k9 = make_field(3, 2, 0).unwrap();
    let h3 = make_curve(&CurveSpec::Hermitian { q: 3 }, &k9).unwrap();
    let b = k9.primitive_element();
    // A_{b} = diag(b^4, b, 1) generates the order-8 group with s = 2
    let g8 = group_closure(&k9, &[ProjMatrix::diag(&k9, k9.pow(b, 4), b, k9.one()).unwrap()], 100).unwrap();
    assert_eq!(g8.order(), 8);
    let x9 = LinFormProduct::ratio(&k9, ProjLine::from_ints(&k9, [1, 0, 0]).unwrap(), ProjLine::from_ints(&k9, [0, 0, 1]).unwrap()).unwrap();
    assert!(fixed_field_generator_check(&h3, &g8, &x9.pow(2)).unwrap().holds);
    let c = fixed_field_generator_check(&h3, &g8, &x9).unwrap();
    assert!(!c.holds);
    assert_eq!(c.pole_degree, 4);
    // x itself is not invariant: A_b multiplies it by b^4 = -1
    assert!(!c.invariant);
    // the line through Q1 and Q2 is not a generator either
    let _ = line_through(&k9, &pt(&k9, [1, 0, 0]), &pt(&k9, [0, 0, 1])).unwrap();
}
