use serde::{Deserialize, Serialize};

use super::{check_inner_criterion, check_outer_criterion, CriterionReport};
use crate::curve::{make_curve, prime_power_exponent, CurveSpec, LinFormProduct, PlaneCurve};
use crate::error::{Error, Result};
use crate::field::{make_field, Field, FieldCtx, FieldElem};
use crate::galois::{decomposition_group, preserves, sample_points};
use crate::geometry::{
    collinear, group_closure, line_through, maps_between_triangles, AutGroup, Mat3, ProjMatrix, ProjPoint,
    DEFAULT_GROUP_CAP,
};

/// Largest `q` accepted by [`hermitian_scenario`].
pub const DEFAULT_MAX_Q: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub n: u32,
    pub seed: u64,
}

impl FieldDesc {
    pub fn of(k: &FieldCtx) -> FieldDesc {
        FieldDesc { p: k.characteristic(), n: k.degree(), seed: k.seed() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioParams {
    pub p: u64,
    pub q: u64,
    pub s: u64,
    pub m: u64,
    pub d: u64,
    pub base: FieldDesc,
    pub ext: FieldDesc,
}

#[derive(Clone, Debug)]
pub struct PowerIdentityCheck {
    pub checked: usize,
    /// First `a` with `(A_{a^m})^s ≠ diag(1, a^{q−1}, 1)`.
    pub counterexample: Option<FieldElem>,
}

impl PowerIdentityCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `A_b = diag(b^{q+1}, b, 1)`.
fn a_matrix(k: &FieldCtx, q: u64, b: FieldElem) -> Mat3 {
    Mat3::diag(k, k.pow(b, q + 1), b, k.one())
}

/// Checks `(A_{a^m})^s = diag(1, a^{q−1}, 1)` entrywise for every `a ∈ k*`.
pub fn power_identity(k: &FieldCtx, q: u64, s: u64) -> PowerIdentityCheck {
    let m = (q - 1) / s;
    let mut checked = 0;
    for a in k.nonzero_elements() {
        checked += 1;
        let lhs = a_matrix(k, q, k.pow(a, m)).pow(k, s);
        if lhs != Mat3::diag(k, k.one(), k.pow(a, q - 1), k.one()) {
            return PowerIdentityCheck { checked, counterexample: Some(a) };
        }
    }
    PowerIdentityCheck { checked, counterexample: None }
}

#[derive(Clone, Debug)]
pub struct HermitianScenario {
    pub params: ScenarioParams,
    pub base: Field,
    pub curve: PlaneCurve,
    pub points: [ProjPoint; 3],
    pub groups: [AutGroup; 3],
    /// Fixes `Q_1` and sends `Q_2` to `Q_3`.
    pub phi: ProjMatrix,
    /// Sends `Q_1` to `Q_3` and fixes `Q_2`.
    pub psi: ProjMatrix,
    /// Whether `Φ` also sends `Q_3` to `Q_2`, and `Ψ` sends `Q_3` to `Q_1`.
    pub phi_swaps: bool,
    pub psi_swaps: bool,
    /// Generators of the three fixed fields: `f`, `g`, `(X/Z)^s`.
    pub f: LinFormProduct,
    pub g: LinFormProduct,
    pub h: LinFormProduct,
    pub power_identity: PowerIdentityCheck,
    /// Whether every non-identity element of `G_3` moves `Q_3`.
    pub g3_moves_q3: bool,
    pub report: CriterionReport,
}

fn split_q(q: u64) -> Result<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0).ok_or_else(|| Error::Scenario(format!("q = {q} is not a prime power")))?;
    let e = prime_power_exponent(p, q).ok_or_else(|| Error::Scenario(format!("q = {q} is not a prime power")))?;
    Ok((p, e))
}

/// The curve-preserving maps with `Q_a ↦ dst_a`, `Q_b ↦ dst_b`; a map also
/// sending the third point to `prefer` is returned first when one exists,
/// otherwise the smallest in canonical order. The flag tells which.
fn find_automorphism(
    c: &PlaneCurve,
    src: [ProjPoint; 3],
    dst: [ProjPoint; 2],
    prefer: ProjPoint,
) -> Result<(ProjMatrix, bool)> {
    let k = c.base();
    let f = c.poly();
    let samples = sample_points(k, f, 10);
    let first = |third: ProjPoint| -> Result<Option<ProjMatrix>> {
        if collinear(k, &dst[0], &dst[1], &third) {
            return Ok(None);
        }
        Ok(maps_between_triangles(k, src, [dst[0], dst[1], third])?
            .filter(|m| preserves(k, f, &m.mat(), &samples))
            .min())
    };
    if let Some(m) = first(prefer)? {
        return Ok((m, true));
    }
    let mut best: Option<ProjMatrix> = None;
    for r in c.enumerate_points(k)? {
        if r == dst[0] || r == dst[1] {
            continue;
        }
        if let Some(m) = first(r)? {
            best = Some(best.map_or(m, |b| b.min(m)));
        }
    }
    best.map(|m| (m, false)).ok_or_else(|| {
        Error::NoAutomorphism(format!(
            "sending {} to {} and {} to {}",
            src[0].display(k),
            dst[0].display(k),
            src[1].display(k),
            dst[1].display(k)
        ))
    })
}

pub fn hermitian_scenario(q: u64, s: u64, seed: u64) -> Result<HermitianScenario> {
    hermitian_scenario_with(q, s, seed, DEFAULT_MAX_Q)
}

/// The cyclic-group configuration on `x^q + x = y^{q+1}` over GF(q²) with
/// groups of order `s(q+1)`, checked against the outer criterion.
pub fn hermitian_scenario_with(q: u64, s: u64, seed: u64, max_q: u64) -> Result<HermitianScenario> {
    if q < 2 || q > max_q {
        return Err(Error::Scenario(format!("q = {q} outside the configured range 2..={max_q}")));
    }
    let (p, e) = split_q(q)?;
    if s == 0 || (q - 1) % s != 0 {
        return Err(Error::Scenario("s must divide q−1".into()));
    }
    let m = (q - 1) / s;
    let k = make_field(p, 2 * e, seed)?;
    let curve = make_curve(&CurveSpec::Hermitian { q }, &k)?;
    let pt = |c| ProjPoint::from_ints(&k, c);
    let q1 = pt([1, 0, 0])?;
    let q2 = pt([0, 0, 1])?;
    let q3 = curve
        .enumerate_points(&k)?
        .into_iter()
        .find(|x| !x.coords()[0].is_zero() && !x.coords()[1].is_zero())
        .ok_or_else(|| Error::Internal("no rational point off Y = 0".into()))?;

    let power_identity = power_identity(&k, q, s);
    let gen = ProjMatrix::new(&k, a_matrix(&k, q, k.pow(k.primitive_element(), m)))?;
    let g3 = group_closure(&k, &[gen], DEFAULT_GROUP_CAP)?;
    let g3_moves_q3 = g3.non_identity(&k).all(|x| x.apply(&k, &q3) != q3);

    let (phi, phi_swaps) = find_automorphism(&curve, [q1, q2, q3], [q1, q3], q2)?;
    let (psi, psi_swaps) = find_automorphism(&curve, [q1, q2, q3], [q3, q2], q1)?;
    let g1 = g3.conjugate(&k, &psi);
    let g2 = g3.conjugate(&k, &phi);

    let x = crate::geometry::ProjLine::from_ints(&k, [1, 0, 0])?;
    let z = crate::geometry::ProjLine::from_ints(&k, [0, 0, 1])?;
    let h = LinFormProduct::ratio(&k, x, z)?.pow(s as i64);
    let f = h.compose(&psi.inverse())?;
    let g = h.compose(&phi.inverse())?.inverse();

    let groups = [g1, g2, g3];
    let points = [q1, q2, q3];
    let report =
        check_outer_criterion(&curve, &groups, &points, &[Some(f.clone()), Some(g.clone()), Some(h.clone())], &k)?;
    let params = ScenarioParams {
        p,
        q,
        s,
        m,
        d: s * (q + 1),
        base: FieldDesc::of(&k),
        ext: FieldDesc { p, n: 6 * e, seed },
    };
    Ok(HermitianScenario {
        params,
        base: k,
        curve,
        points,
        groups,
        phi,
        psi,
        phi_swaps,
        psi_swaps,
        f,
        g,
        h,
        power_identity,
        g3_moves_q3,
        report,
    })
}

/// A deliberately wrong generator for `G_2`: `g · T_R / T_{Q_1}` with `T`
/// the tangent lines, `R` the first rational point outside `{Q_i}` moved by
/// `G_2`. Its divisor is `(g) + (q+1)(R − Q_1)`.
pub fn wrong_divisor_generator(sc: &HermitianScenario) -> Result<LinFormProduct> {
    let k = &sc.base;
    let r = sc
        .curve
        .enumerate_points(k)?
        .into_iter()
        .find(|r| !sc.points.contains(r) && sc.groups[1].non_identity(k).any(|m| m.apply(k, r) != *r))
        .ok_or_else(|| Error::Internal("no rational point moved by G_2".into()))?;
    let t = LinFormProduct::ratio(k, sc.curve.tangent_line(&r)?, sc.curve.tangent_line(&sc.points[0])?)?;
    sc.g.mul(&t)
}

#[derive(Clone, Debug)]
pub struct InnerScenario {
    pub base: Field,
    pub curve: PlaneCurve,
    pub points: [ProjPoint; 3],
    pub groups: [AutGroup; 3],
    /// `ℓ_{P1P3}/ℓ_{P1P2}` and `ℓ_{P2P3}/ℓ_{P2P1}`.
    pub f: LinFormProduct,
    pub g: LinFormProduct,
    /// `ℓ_{P3P1}/ℓ_{P3P2}`, generator for `G_3`.
    pub h: LinFormProduct,
    pub report: CriterionReport,
}

/// Three non-collinear rational points of the Hermitian curve over GF(q²)
/// with their decomposition groups, checked against the inner criterion.
pub fn inner_hermitian_scenario(q: u64, seed: u64) -> Result<InnerScenario> {
    let (p, e) = split_q(q)?;
    let k = make_field(p, 2 * e, seed)?;
    let curve = make_curve(&CurveSpec::Hermitian { q }, &k)?;
    let pts = curve.enumerate_points(&k)?;
    if pts.len() < 3 {
        return Err(Error::Internal("fewer than three rational points".into()));
    }
    let (p1, p2) = (pts[0], pts[1]);
    let p3 = *pts
        .iter()
        .skip(2)
        .find(|x| !collinear(&k, &p1, &p2, x))
        .ok_or_else(|| Error::Internal("all rational points collinear".into()))?;
    let points = [p1, p2, p3];
    let groups = [
        decomposition_group(&curve, &p1, &k)?,
        decomposition_group(&curve, &p2, &k)?,
        decomposition_group(&curve, &p3, &k)?,
    ];
    let l = |a: &ProjPoint, b: &ProjPoint| line_through(&k, a, b);
    let f = LinFormProduct::ratio(&k, l(&p1, &p3)?, l(&p1, &p2)?)?;
    let g = LinFormProduct::ratio(&k, l(&p2, &p3)?, l(&p2, &p1)?)?;
    let h = LinFormProduct::ratio(&k, l(&p3, &p1)?, l(&p3, &p2)?)?;
    let report =
        check_inner_criterion(&curve, &groups, &points, &[Some(f.clone()), Some(g.clone()), Some(h.clone())], &k)?;
    Ok(InnerScenario { base: k, curve, points, groups, f, g, h, report })
}
