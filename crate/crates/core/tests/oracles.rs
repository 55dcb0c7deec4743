//! Brute-force and closed-form cross-checks that do not go through the
//! library's group machinery.

mod common;

use std::collections::HashSet;

use galois_points::criterion::{build_plane_model, fermat_orbit_condition_model, verify_model_galois, ModelKind, ModelOptions};
use galois_points::curve::{make_curve, CurveSpec};
use galois_points::field::make_field;
use galois_points::geometry::{Mat3, ProjMatrix, ProjPoint, DEFAULT_GROUP_CAP};

/// |PGU(3, q)| = q³(q³ + 1)(q² − 1).
fn pgu_order(q: usize) -> usize {
    q.pow(3) * (q.pow(3) + 1) * (q * q - 1)
}

/// Every 3×3 matrix over GF(4) is tried; those with `H(Mx) = λ H(x)` for
/// all x ∈ GF(4)³ are counted. Degrees in each variable stay below 4, so
/// agreement on GF(4)³ is agreement as polynomials.
#[test]
fn hermitian_cubic_has_216_linear_automorphisms() {
    let k = make_field(2, 2, 0).unwrap();
    let c = make_curve(&CurveSpec::Hermitian { q: 2 }, &k).unwrap();
    let els: Vec<_> = k.elements().collect();
    let vecs: Vec<[_; 3]> = (0..64).map(|i| [els[i >> 4], els[(i >> 2) & 3], els[i & 3]]).collect();
    let h = |v: &[_; 3]| c.poly().eval(&k, v);
    let hv: Vec<_> = vecs.iter().map(h).collect();
    let probe = vecs.iter().position(|v| !h(v).is_zero()).unwrap();

    let mut found = HashSet::new();
    let mut raw = 0usize;
    for idx in 0..4usize.pow(9) {
        let e: [_; 9] = std::array::from_fn(|i| els[(idx >> (2 * i)) & 3]);
        let m = Mat3(e);
        if m.det(&k).is_zero() {
            continue;
        }
        let lam = k.div(h(&m.apply(&k, &vecs[probe])), hv[probe]);
        if vecs.iter().zip(&hv).all(|(v, &x)| h(&m.apply(&k, v)) == k.mul(lam, x)) {
            raw += 1;
            found.insert(ProjMatrix::new(&k, m).unwrap());
        }
    }
    assert_eq!(raw, 3 * 216);
    assert_eq!(found.len(), pgu_order(2));

    // the group generated by the three cyclic groups of the construction
    let sc = common::scenario(2, 1);
    let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default()).unwrap();
    let v = verify_model_galois(&m).unwrap();
    let r = fermat_orbit_condition_model(&m, &v, DEFAULT_GROUP_CAP).unwrap();
    let g = r.group.unwrap();
    assert_eq!(g.elements().iter().collect::<HashSet<_>>(), found.iter().collect());
}

#[test]
fn generated_groups_are_the_full_unitary_groups() {
    for (q, s) in [(3, 1), (4, 1)] {
        let sc = common::scenario(q, s);
        let m = build_plane_model(ModelKind::Outer, &sc.curve, &sc.groups, &sc.points, &sc.f, &sc.g, ModelOptions::default()).unwrap();
        let v = verify_model_galois(&m).unwrap();
        let r = fermat_orbit_condition_model(&m, &v, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(r.group.unwrap().order(), pgu_order(q as usize), "q = {q}");
    }
}

/// Rational points: q³ + 1 on the Hermitian curve over GF(q²); the Fermat
/// quartic over GF(13) is checked against a direct count of solutions.
#[test]
fn point_counts() {
    for q in [2u64, 3, 4] {
        let k = make_field(galois_points::field::primes::prime_factors(q)[0], if q == 4 { 4 } else { 2 }, 0).unwrap();
        let c = make_curve(&CurveSpec::Hermitian { q }, &k).unwrap();
        assert_eq!(c.enumerate_points(&k).unwrap().len() as u64, q.pow(3) + 1);
    }
    let k = make_field(13, 1, 0).unwrap();
    let c = make_curve(&CurveSpec::Fermat { d: 4 }, &k).unwrap();
    let mut affine = 0;
    for x in 0..13u64 {
        for y in 0..13u64 {
            for z in 0..13u64 {
                if (x.pow(4) + y.pow(4) + z.pow(4)) % 13 == 0 && (x, y, z) != (0, 0, 0) {
                    affine += 1;
                }
            }
        }
    }
    let pts = c.enumerate_points(&k).unwrap();
    assert_eq!(pts.len(), affine / 12);
    assert!(pts.iter().all(|p| ProjPoint::all(&k).any(|a| a == *p)));
}
