//! Invariants shared by the property tests and the acceptance run. Each
//! check drives a deterministic proptest runner for `cases` cases.

use std::collections::HashSet;

use galois_points::curve::{interpolate_curve, make_curve, CurveSpec, Interpolation, LinFormProduct, PlaneCurve};
use galois_points::field::{embed, extension, make_field, restrict, Field};
use galois_points::geometry::{is_perspectivity, perspectivities_with_center, Mat3, ProjLine, ProjMatrix, ProjPoint};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

pub const CASES: u32 = 128;

fn runner(cases: u32) -> TestRunner {
    let cfg = Config { cases, failure_persistence: None, max_global_rejects: 100 * cases, ..Config::default() };
    TestRunner::new_with_rng(cfg, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn report<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn fail<E: std::fmt::Display>(e: E) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// Splitting fields past the table cap are outside the representable range.
fn too_large(e: galois_points::Error) -> TestCaseError {
    match e {
        galois_points::Error::SplittingFieldTooLarge { .. } => TestCaseError::reject(e.to_string()),
        e => fail(e),
    }
}

fn nth(k: &Field, i: u64) -> galois_points::field::FieldElem {
    k.elements().nth((i % k.order()) as usize).unwrap()
}

fn triple(k: &Field, c: [u64; 3]) -> Option<[galois_points::field::FieldElem; 3]> {
    let v = c.map(|i| nth(k, i));
    if v.iter().all(|x| x.is_zero()) {
        None
    } else {
        Some(v)
    }
}

fn matrix(k: &Field, e: [u64; 9]) -> Option<ProjMatrix> {
    ProjMatrix::new(k, Mat3(e.map(|i| nth(k, i)))).ok()
}

struct TestCurve {
    curve: PlaneCurve,
    name: &'static str,
}

fn curves() -> Vec<TestCurve> {
    let mk = |p, n, spec: CurveSpec, name| TestCurve { curve: make_curve(&spec, &make_field(p, n, 0).unwrap()).unwrap(), name };
    vec![
        mk(2, 2, CurveSpec::Hermitian { q: 2 }, "hermitian q=2"),
        mk(3, 2, CurveSpec::Hermitian { q: 3 }, "hermitian q=3"),
        mk(13, 1, CurveSpec::Fermat { d: 4 }, "fermat d=4 / GF(13)"),
        mk(11, 1, CurveSpec::Fermat { d: 5 }, "fermat d=5 / GF(11)"),
    ]
}

fn lines_strategy() -> impl Strategy<Value = (usize, [u64; 3])> {
    (0..4usize, any::<[u64; 3]>())
}

/// A line meets a curve of degree d in d points counted with multiplicity,
/// all of them on both.
pub fn bezout_line_sections(cases: u32) -> Result<(), String> {
    let cs = curves();
    report(runner(cases).run(&lines_strategy(), |(i, c)| {
        let tc = &cs[i];
        let k = tc.curve.base();
        let Some(v) = triple(k, c) else { return Err(TestCaseError::reject("zero line")) };
        let l = ProjLine::new(k, v).map_err(fail)?;
        let sk = tc.curve.splitting_field(&l).map_err(too_large)?;
        let d = tc.curve.line_intersection_divisor(&l, &sk).map_err(fail)?;
        prop_assert_eq!(d.degree(), tc.curve.degree() as i64, "{}: {}", tc.name, d);
        prop_assert!(d.is_effective());
        let ls = l.lift(&sk).map_err(fail)?;
        for p in d.support() {
            prop_assert!(tc.curve.contains(&p).map_err(fail)? && ls.contains(&sk, &p));
        }
        Ok(())
    }))
}

/// Quotients of products of linear forms of total degree zero have
/// principal divisors of degree zero, and `div` is a homomorphism.
pub fn principal_divisors_have_degree_zero(cases: u32) -> Result<(), String> {
    let cs = curves();
    let strat = (0..4usize, prop::collection::vec((any::<[u64; 3]>(), -3i64..=3), 1..4), any::<[u64; 3]>());
    report(runner(cases).run(&strat, |(i, factors, last)| {
        let tc = &cs[i];
        let k = tc.curve.base();
        let mut fs = Vec::new();
        for (c, e) in &factors {
            if let Some(v) = triple(k, *c) {
                fs.push((ProjLine::new(k, v).map_err(fail)?, *e));
            }
        }
        let total: i64 = fs.iter().map(|f| f.1).sum();
        let Some(v) = triple(k, last) else { return Err(TestCaseError::reject("zero line")) };
        fs.push((ProjLine::new(k, v).map_err(fail)?, -total));
        let f = LinFormProduct::new(k, fs.clone()).map_err(fail)?;
        let lines: Vec<ProjLine> = fs.iter().map(|x| x.0).collect();
        let ext = tc.curve.splitting_field_for_lines(&lines).map_err(too_large)?;
        let div = f.divisor(&tc.curve, &ext).map_err(fail)?;
        prop_assert_eq!(div.degree(), 0, "{}: {}", tc.name, div);
        let inv = f.inverse().divisor(&tc.curve, &ext).map_err(fail)?;
        prop_assert!(inv.same_as(&div.neg()).map_err(fail)?);
        let sq = f.mul(&f).map_err(fail)?.divisor(&tc.curve, &ext).map_err(fail)?;
        prop_assert!(sq.same_as(&div.scale(2)).map_err(fail)?);
        Ok(())
    }))
}

/// For automorphisms σ of the Hermitian curve: `(σℓ)·C = σ_*(ℓ·C)` and
/// `div(F ∘ σ) = σ⁻¹_* div(F)` for the fixed-field generators.
pub fn pushforward_covariance(cases: u32) -> Result<(), String> {
    let scs = [super::scenario(2, 1), super::scenario(3, 1), super::scenario(3, 2)];
    let strat = (0..3usize, 0..3usize, any::<usize>(), any::<[u64; 3]>(), 0..3usize);
    report(runner(cases).run(&strat, |(si, gi, ei, lc, fi)| {
        let sc = &scs[si];
        let k = &sc.base;
        let c = &sc.curve;
        let els = sc.groups[gi].elements();
        let sigma = els[ei % els.len()];
        let Some(v) = triple(k, lc) else { return Err(TestCaseError::reject("zero line")) };
        let l = ProjLine::new(k, v).map_err(fail)?;
        let ext = c.splitting_field(&l).map_err(fail)?;
        let lhs = c.line_intersection_divisor(&sigma.apply_line(k, &l), &ext).map_err(fail)?;
        let rhs = c.line_intersection_divisor(&l, &ext).map_err(fail)?.pushforward(&sigma).map_err(fail)?;
        prop_assert!(lhs.same_as(&rhs).map_err(fail)?, "{} vs {}", lhs, rhs);

        let f = [&sc.f, &sc.g, &sc.h][fi];
        let fs = f.compose(&sigma).map_err(fail)?;
        let mut lines = f.lines();
        lines.extend(fs.lines());
        let ext = c.splitting_field_for_lines(&lines).map_err(fail)?;
        let lhs = fs.divisor(c, &ext).map_err(fail)?;
        let rhs = f.divisor(c, &ext).map_err(fail)?.pushforward(&sigma.inverse()).map_err(fail)?;
        prop_assert!(lhs.same_as(&rhs).map_err(fail)?, "{} vs {}", lhs, rhs);
        Ok(())
    }))
}

/// The perspectivity family with a given center consists of exactly the
/// q³ − q² perspectivities with that center. Members are tested for
/// soundness; independently built perspectivities `A S A⁻¹`, with `S`
/// fixing every line through (1:0:0), must appear in the family.
pub fn perspectivity_family(cases: u32) -> Result<(), String> {
    let fields = [make_field(2, 2, 0).unwrap(), make_field(3, 2, 0).unwrap()];
    let strat = (0..2usize, any::<u64>(), any::<[u64; 6]>(), any::<[u64; 3]>(), any::<usize>());
    report(runner(cases).run(&strat, |(fi, ci, cols, abc, mi)| {
        let k = &fields[fi];
        let pts: Vec<ProjPoint> = ProjPoint::all(k).collect();
        let center = pts[(ci % pts.len() as u64) as usize];
        let fam: Vec<ProjMatrix> = perspectivities_with_center(k, &center).collect();
        let q = k.order() as usize;
        prop_assert_eq!(fam.len(), q * q * q - q * q);
        prop_assert_eq!(fam.iter().collect::<HashSet<_>>().len(), fam.len());
        let m = &fam[mi % fam.len()];
        prop_assert!(is_perspectivity(k, m, &center));

        let v = center.coords();
        let col = |j: usize| [cols[j], cols[j + 1], cols[j + 2]].map(|i| nth(k, i));
        let a = Mat3::from_columns([v, col(0), col(3)]);
        let Ok(a) = ProjMatrix::new(k, a) else { return Err(TestCaseError::reject("singular frame")) };
        let lead = k.nonzero_elements().nth((abc[0] % (k.order() - 1)) as usize).unwrap();
        let (z, o) = (k.zero(), k.one());
        let s = ProjMatrix::new(k, Mat3([lead, nth(k, abc[1]), nth(k, abc[2]), z, o, z, z, z, o])).map_err(fail)?;
        let built = a.compose(k, &s.compose(k, &a.inverse()));
        prop_assert!(is_perspectivity(k, &built, &center));
        prop_assert!(fam.contains(&built), "{} missing", built.display(k));
        Ok(())
    }))
}

/// Canonical embeddings are ring homomorphisms that commute with Frobenius
/// and are inverted by restriction.
pub fn embedding_laws(cases: u32) -> Result<(), String> {
    let pairs: Vec<(Field, Field)> = [(2, 2, 3), (3, 2, 3), (13, 1, 2), (2, 3, 2), (7, 1, 3)]
        .into_iter()
        .map(|(p, n, e)| {
            let k = make_field(p, n, 0).unwrap();
            let big = extension(&k, e).unwrap();
            (k, big)
        })
        .collect();
    let strat = (0..pairs.len(), any::<u64>(), any::<u64>(), any::<u64>());
    report(runner(cases).run(&strat, |(i, a, b, c)| {
        let (k, big) = &pairs[i];
        let (x, y) = (nth(k, a), nth(k, b));
        let e = |t| embed(t, k, big).map_err(fail);
        prop_assert_eq!(e(k.add(x, y))?, big.add(e(x)?, e(y)?));
        prop_assert_eq!(e(k.mul(x, y))?, big.mul(e(x)?, e(y)?));
        prop_assert_eq!(e(k.frobenius(x))?, big.frobenius(e(x)?));
        prop_assert_eq!(restrict(e(x)?, big, k).map_err(fail)?, Some(x));
        prop_assert_eq!(k.frobenius(k.add(x, y)), k.add(k.frobenius(x), k.frobenius(y)));
        prop_assert_eq!(k.frobenius(k.mul(x, y)), k.mul(k.frobenius(x), k.frobenius(y)));
        prop_assert_eq!(k.pow(x, k.order()), x);
        let u = nth(big, c);
        prop_assert_eq!(big.frobenius(big.add(u, e(y)?)), big.add(big.frobenius(u), big.frobenius(e(y)?)));
        let fixed = restrict(u, big, k).map_err(fail)?.is_some();
        prop_assert_eq!(fixed, big.pow(u, k.order()) == u);
        Ok(())
    }))
}

/// Points of `C ∘ M` over an extension interpolate back to exactly the
/// transformed equation.
pub fn interpolation_round_trip(cases: u32) -> Result<(), String> {
    let setups: Vec<(PlaneCurve, Field, Vec<ProjPoint>)> = [
        (2, 2, CurveSpec::Hermitian { q: 2 }, 3),
        (3, 2, CurveSpec::Hermitian { q: 3 }, 1),
        (2, 2, CurveSpec::Fermat { d: 3 }, 3),
        (13, 1, CurveSpec::Fermat { d: 4 }, 2),
    ]
    .into_iter()
    .map(|(p, n, spec, e)| {
        let k = make_field(p, n, 0).unwrap();
        let c = make_curve(&spec, &k).unwrap();
        let ext = extension(&k, e).unwrap();
        let pts = c.enumerate_points(&ext).unwrap();
        (c, ext, pts)
    })
    .collect();
    let strat = (0..setups.len(), any::<[u64; 9]>());
    report(runner(cases).run(&strat, |(i, e)| {
        let (c, ext, pts) = &setups[i];
        let k = c.base();
        let Some(m) = matrix(k, e) else { return Err(TestCaseError::reject("singular")) };
        let t = c.transform(&m).map_err(fail)?;
        let mi = galois_points::curve::lift_matrix(&m.inverse(), ext).map_err(fail)?;
        let moved: Vec<ProjPoint> = pts.iter().map(|p| mi.apply(ext, p)).collect();
        let want = t.poly().embed(k, ext).map_err(fail)?.normalized(ext).map_err(fail)?;
        match interpolate_curve(ext, &moved, c.degree()) {
            Interpolation::Curve { poly, reduced } => {
                prop_assert_eq!(poly, want);
                prop_assert!(reduced);
            }
            other => return Err(fail(format!("{other:?}"))),
        }
        Ok(())
    }))
}

pub type Property = (&'static str, fn(u32) -> Result<(), String>);

pub const ALL: [Property; 6] = [
    ("line sections have degree d", bezout_line_sections),
    ("principal divisors have degree 0", principal_divisors_have_degree_zero),
    ("divisors are covariant under automorphisms", pushforward_covariance),
    ("perspectivity families are sound and complete", perspectivity_family),
    ("embeddings respect the field operations", embedding_laws),
    ("interpolation recovers transformed curves", interpolation_round_trip),
];
