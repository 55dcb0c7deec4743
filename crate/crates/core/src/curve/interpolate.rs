use super::hompoly::{monomial_count, monomials, HomPoly};
use crate::field::linalg::Echelon;
use crate::field::{Field, FieldCtx, FieldElem};
use crate::geometry::ProjPoint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Interpolation {
    /// The unique curve of the requested degree through the points.
    /// `reduced` is false when the polynomial has a repeated factor.
    Curve { poly: HomPoly, reduced: bool },
    Underdetermined { nullity: usize },
    NoCurve,
}

fn monomial_row(k: &FieldCtx, d: u32, p: &ProjPoint) -> Vec<FieldElem> {
    let c = p.coords();
    let pw = |x: FieldElem| {
        let mut v = vec![k.one()];
        for i in 1..=d as usize {
            v.push(k.mul(v[i - 1], x));
        }
        v
    };
    let (px, py, pz) = (pw(c[0]), pw(c[1]), pw(c[2]));
    monomials(d)
        .iter()
        .map(|e| k.mul(px[e[0] as usize], k.mul(py[e[1] as usize], pz[e[2] as usize])))
        .collect()
}

/// Curves of degree `d` through all `points` (over `k`). Rows are fed
/// incrementally; once the kernel is one-dimensional the remaining points
/// are only checked against the candidate.
pub fn interpolate_curve(k: &Field, points: &[ProjPoint], d: u32) -> Interpolation {
    let n = monomial_count(d);
    let mut ech = Echelon::new(n);
    let mut rest = points.iter();
    for p in rest.by_ref() {
        ech.push(k, monomial_row(k, d, p));
        if ech.rank() + 1 >= n {
            break;
        }
    }
    if ech.rank() >= n {
        return Interpolation::NoCurve;
    }
    let basis = ech.nullspace(k);
    if basis.len() > 1 {
        return Interpolation::Underdetermined { nullity: basis.len() };
    }
    let cand = HomPoly { degree: d, coeffs: basis.into_iter().next().unwrap() };
    if rest.any(|p| !cand.eval(k, &p.coords()).is_zero()) {
        return Interpolation::NoCurve;
    }
    let poly = cand.normalized(k).expect("kernel vector is nonzero");
    let reduced = super::find_transversal_line(k, &poly).is_some();
    Interpolation::Curve { poly, reduced }
}
