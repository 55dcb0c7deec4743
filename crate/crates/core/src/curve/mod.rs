//! Plane curves, their points, line sections and divisors.

mod divisor;
mod function;
mod hompoly;
mod interpolate;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use divisor::{lift_matrix, Divisor};
pub use function::LinFormProduct;
pub use hompoly::{monomial_count, monomial_index, monomials, HomPoly};
pub use interpolate::{interpolate_curve, Interpolation};

use crate::error::{Error, Result};
use crate::field::poly::{self, Poly};
use crate::field::{extension, make_field, primes, Field, FieldCtx, FieldElem, DEFAULT_SCAN_CAP};
use crate::geometry::{ProjLine, ProjPoint};

/// How a curve is specified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CurveSpec {
    /// `X^q Z + X Z^q - Y^(q+1)`.
    Hermitian { q: u64 },
    /// `X^d + Y^d + Z^d`.
    Fermat { d: u32 },
    /// Coefficients as lists over GF(p), keyed by exponent triples.
    Explicit { degree: u32, terms: Vec<MonomialRecord> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub exps: [u32; 3],
    pub coeff: Vec<u64>,
}

/// Exact serialized form of a curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub p: u64,
    pub n: u32,
    pub seed: u64,
    pub degree: u32,
    pub monomials: Vec<MonomialRecord>,
}

/// A reduced plane curve `F = 0`, `F` normalized.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    base: Field,
    poly: HomPoly,
    lifted: Arc<Mutex<HashMap<u64, Arc<HomPoly>>>>,
}

impl PartialEq for PlaneCurve {
    fn eq(&self, o: &PlaneCurve) -> bool {
        self.base.id() == o.base.id() && self.poly == o.poly
    }
}

impl Eq for PlaneCurve {}

/// Degree of `q` over `p` if `q` is a power of `p`.
pub fn prime_power_exponent(p: u64, q: u64) -> Option<u32> {
    let mut e = 0;
    let mut t = q;
    while t > 1 && t % p == 0 {
        t /= p;
        e += 1;
    }
    (t == 1 && e > 0).then_some(e)
}

pub fn make_curve(spec: &CurveSpec, base: &Field) -> Result<PlaneCurve> {
    let k: &FieldCtx = base;
    let one = k.one();
    let poly = match spec {
        CurveSpec::Hermitian { q } => {
            let e = prime_power_exponent(k.characteristic(), *q)
                .ok_or_else(|| Error::BadCurveSpec(format!("q = {q} is not a power of {}", k.characteristic())))?;
            if k.degree() % (2 * e) != 0 {
                return Err(Error::BadCurveSpec(format!("GF({}) does not contain GF({q}^2)", k.order())));
            }
            let q = *q as u32;
            HomPoly::from_terms(k, q + 1, &[([q, 0, 1], one), ([1, 0, q], one), ([0, q + 1, 0], k.neg(one))])?
        }
        CurveSpec::Fermat { d } => {
            if *d == 0 {
                return Err(Error::BadCurveSpec("degree 0".into()));
            }
            HomPoly::from_terms(k, *d, &[([*d, 0, 0], one), ([0, *d, 0], one), ([0, 0, *d], one)])?
        }
        CurveSpec::Explicit { degree, terms } => {
            let ts = terms
                .iter()
                .map(|t| Ok((t.exps, k.from_coeffs(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?;
            HomPoly::from_terms(k, *degree, &ts)?
        }
    };
    PlaneCurve::new(base, poly)
}

impl PlaneCurve {
    /// Normalizes `poly` and checks that it has no repeated factor.
    pub fn new(base: &Field, poly: HomPoly) -> Result<PlaneCurve> {
        if poly.degree == 0 {
            return Err(Error::BadCurveSpec("degree 0".into()));
        }
        let poly = poly.normalized(base)?;
        if find_transversal_line(base, &poly).is_none() {
            return Err(Error::NotReduced);
        }
        Ok(PlaneCurve { base: base.clone(), poly, lifted: Default::default() })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree
    }

    pub fn poly(&self) -> &HomPoly {
        &self.poly
    }

    /// The defining polynomial with coefficients in `ext ⊇ base`.
    pub fn poly_over(&self, ext: &FieldCtx) -> Result<Arc<HomPoly>> {
        if ext.id() == self.base.id() {
            return Ok(Arc::new(self.poly.clone()));
        }
        if let Some(p) = self.lifted.lock().unwrap().get(&ext.id()) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.poly.embed(&self.base, ext)?);
        self.lifted.lock().unwrap().insert(ext.id(), p.clone());
        Ok(p)
    }

    /// `C ∘ M`: the curve `F(M x) = 0`, i.e. the preimage of `C` under `M`.
    pub fn transform(&self, m: &crate::geometry::ProjMatrix) -> Result<PlaneCurve> {
        let m = lift_matrix(m, &self.base)?;
        let poly = self.poly.compose(&self.base, &m.mat()).normalized(&self.base)?;
        Ok(PlaneCurve { base: self.base.clone(), poly, lifted: Default::default() })
    }

    pub fn contains(&self, p: &ProjPoint) -> Result<bool> {
        let k = ctx_of_point(p, &self.base)?;
        Ok(self.poly_over(&k)?.eval(&k, &p.coords()).is_zero())
    }

    /// Whether `P` is a nonsingular point of the curve.
    pub fn is_smooth_at(&self, p: &ProjPoint) -> Result<bool> {
        let k = ctx_of_point(p, &self.base)?;
        let f = self.poly_over(&k)?;
        let c = p.coords();
        if !f.eval(&k, &c).is_zero() {
            return Err(Error::NotOnCurve(p.display(&k)));
        }
        Ok(f.gradient(&k).iter().any(|g| !g.eval(&k, &c).is_zero()))
    }

    /// The tangent line at a smooth point.
    pub fn tangent_line(&self, p: &ProjPoint) -> Result<ProjLine> {
        if !self.is_smooth_at(p)? {
            return Err(Error::SingularCenter(p.to_string()));
        }
        let k = ctx_of_point(p, &self.base)?;
        let grad = self.poly_over(&k)?.gradient(&k);
        ProjLine::new(&k, [0, 1, 2].map(|i| grad[i].eval(&k, &p.coords())))
    }

    /// All points of `C` over `ext`, in canonical order.
    pub fn enumerate_points(&self, ext: &Field) -> Result<Vec<ProjPoint>> {
        enumerate_points_capped(self, ext, DEFAULT_SCAN_CAP)
    }

    /// The intersection divisor of `L` with `C`, points over `ext`.
    pub fn line_intersection_divisor(&self, l: &ProjLine, ext: &Field) -> Result<Divisor> {
        let l = l.lift(ext)?;
        let f = self.poly_over(ext)?;
        let (a, b) = l.basis_points(ext);
        let bin = f.restrict_to_line(ext, &a.coords(), &b.coords());
        if bin.iter().all(|c| c.is_zero()) {
            return Err(Error::LineIsComponent(l.display(ext)));
        }
        let d = self.degree();
        let (at_a, u) = split_binary(ext, &bin);
        let rs = poly::roots(ext, &u);
        let total = at_a + rs.iter().map(|r| r.1).sum::<u32>();
        if total != d {
            let fd = poly::factor_degrees(ext, &u);
            let need = fd.iter().fold(1u64, |acc, &x| primes::lcm(acc, x as u64)) as u32;
            return Err(Error::NotSplit { line: l.display(ext), have: ext.degree(), needed: ext.degree() * need });
        }
        let mut terms = Vec::new();
        if at_a > 0 {
            terms.push((a, at_a as i64));
        }
        for (s, m) in rs {
            let c = [0, 1, 2].map(|i| ext.add(ext.mul(s, a.coords()[i]), b.coords()[i]));
            terms.push((ProjPoint::new(ext, c)?, m as i64));
        }
        Divisor::from_terms(ext, terms)
    }

    /// Smallest extension of `base` (containing `L`'s field) over which `L ∩ C` splits.
    pub fn splitting_field(&self, l: &ProjLine) -> Result<Field> {
        let lk = ctx_of_point_like(l.coords()[0], &self.base)?;
        let k = crate::field::compositum(&self.base, &lk)?;
        let l = l.lift(&k)?;
        let f = self.poly_over(&k)?;
        let (a, b) = l.basis_points(&k);
        let bin = f.restrict_to_line(&k, &a.coords(), &b.coords());
        if bin.iter().all(|c| c.is_zero()) {
            return Err(Error::LineIsComponent(l.display(&k)));
        }
        let (_, u) = split_binary(&k, &bin);
        let need = poly::factor_degrees(&k, &u).iter().fold(1u64, |acc, &x| primes::lcm(acc, x as u64)) as u32;
        if need == 1 {
            return Ok(k);
        }
        let too_large = || Error::SplittingFieldTooLarge { line: l.display(&k), p: k.characteristic(), needed: k.degree() * need };
        match extension(&k, need) {
            Ok(ext) if ext.has_tables() => Ok(ext),
            Ok(_) | Err(Error::FieldTooLarge { .. }) => Err(too_large()),
            Err(e) => Err(e),
        }
    }

    /// Smallest field over which every given line section splits.
    pub fn splitting_field_for_lines(&self, lines: &[ProjLine]) -> Result<Field> {
        let mut k = self.base.clone();
        for l in lines {
            let lk = self.splitting_field(l)?;
            let too_large = || Error::SplittingFieldTooLarge {
                line: l.to_string(),
                p: k.characteristic(),
                needed: primes::lcm(k.degree() as u64, lk.degree() as u64) as u32,
            };
            k = match crate::field::compositum(&k, &lk) {
                Ok(f) if f.has_tables() => f,
                Ok(_) | Err(Error::FieldTooLarge { .. }) => return Err(too_large()),
                Err(e) => return Err(e),
            };
        }
        Ok(k)
    }

    pub fn record(&self) -> CurveRecord {
        let k = &self.base;
        CurveRecord {
            p: k.characteristic(),
            n: k.degree(),
            seed: k.seed(),
            degree: self.degree(),
            monomials: self.poly.terms().into_iter().map(|(e, c)| MonomialRecord { exps: e, coeff: k.coeffs(c) }).collect(),
        }
    }

    pub fn from_record(r: &CurveRecord) -> Result<PlaneCurve> {
        let base = make_field(r.p, r.n, r.seed)?;
        make_curve(&CurveSpec::Explicit { degree: r.degree, terms: r.monomials.clone() }, &base)
    }

    pub fn display(&self) -> String {
        let k = &self.base;
        let names = ["X", "Y", "Z"];
        let parts: Vec<String> = self
            .poly
            .terms()
            .into_iter()
            .map(|(e, c)| {
                let mut s = if c == k.one() { String::new() } else { format!("{}*", k.format(c)) };
                let mon: Vec<String> = (0..3)
                    .filter(|&v| e[v] > 0)
                    .map(|v| if e[v] == 1 { names[v].to_string() } else { format!("{}^{}", names[v], e[v]) })
                    .collect();
                if mon.is_empty() {
                    s = k.format(c);
                } else {
                    s.push_str(&mon.join("*"));
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

/// Splits a binary form `Σ c_e s^(d-e) t^e` into the multiplicity of the
/// root `t = 0` and the dehomogenized polynomial in `s` (at `t = 1`).
fn split_binary(k: &FieldCtx, bin: &[FieldElem]) -> (u32, Poly) {
    let d = bin.len() - 1;
    let at_a = bin.iter().take_while(|c| c.is_zero()).count() as u32;
    let u = Poly::new((0..=d).map(|e| bin[d - e]).collect());
    let _ = k;
    (at_a, u)
}

fn ctx_of_point(p: &ProjPoint, fallback: &Field) -> Result<Field> {
    ctx_of_point_like(p.coords()[0], fallback)
}

fn ctx_of_point_like(x: FieldElem, fallback: &Field) -> Result<Field> {
    if x.ctx_id() == fallback.id() {
        return Ok(fallback.clone());
    }
    crate::field::field_of(x).ok_or_else(|| Error::ContextMismatch("point over an unknown field".into()))
}

pub fn enumerate_points_capped(c: &PlaneCurve, ext: &Field, cap: u64) -> Result<Vec<ProjPoint>> {
    let k: &FieldCtx = ext;
    if k.order() > cap {
        return Err(Error::ScanCapExceeded { p: k.characteristic(), n: k.degree(), size: k.order(), cap });
    }
    let f = c.poly_over(k)?;
    let d = f.degree;
    let xs: Vec<FieldElem> = k.elements().collect();
    let mut pts: Vec<ProjPoint> = xs
        .par_iter()
        .flat_map_iter(|&x| {
            // F(x, Y, 1) as a polynomial in Y
            let mut coeffs = vec![k.zero(); d as usize + 1];
            let mut xp = vec![k.one()];
            for i in 1..=d as usize {
                xp.push(k.mul(xp[i - 1], x));
            }
            for (e, &cf) in monomials(d).iter().zip(&f.coeffs) {
                if !cf.is_zero() {
                    coeffs[e[1] as usize] = k.add(coeffs[e[1] as usize], k.mul(cf, xp[e[0] as usize]));
                }
            }
            let u = Poly::new(coeffs);
            let ys: Vec<FieldElem> =
                if u.is_zero() { k.elements().collect() } else { poly::roots(k, &u).into_iter().map(|r| r.0).collect() };
            ys.into_iter().map(move |y| ProjPoint::new(k, [x, y, k.one()]).unwrap()).collect::<Vec<_>>()
        })
        .collect();
    // points at Z = 0: (x : 1 : 0) and (1 : 0 : 0)
    let mut coeffs = vec![k.zero(); d as usize + 1];
    for i in 0..=d {
        coeffs[i as usize] = f.coeff(i, d - i);
    }
    let u = Poly::new(coeffs);
    let xs: Vec<FieldElem> =
        if u.is_zero() { k.elements().collect() } else { poly::roots(k, &u).into_iter().map(|r| r.0).collect() };
    pts.extend(xs.into_iter().map(|x| ProjPoint::new(k, [x, k.one(), k.zero()]).unwrap()));
    if f.coeff(d, 0).is_zero() {
        pts.push(ProjPoint::new(k, [k.one(), k.zero(), k.zero()]).unwrap());
    }
    pts.sort();
    Ok(pts)
}

fn restriction_is_squarefree(k: &FieldCtx, f: &HomPoly, l: &ProjLine) -> bool {
    let (a, b) = l.basis_points(k);
    let bin = f.restrict_to_line(k, &a.coords(), &b.coords());
    if bin.iter().all(|c| c.is_zero()) {
        return false;
    }
    let (at_a, u) = split_binary(k, &bin);
    at_a <= 1 && poly::is_squarefree(k, &u)
}

const TRANSVERSAL_TRIES: usize = 4000;

/// A line meeting `F = 0` in a squarefree binary form. Its existence proves
/// that `F` has no repeated factor; for reduced `F` one exists over a large
/// enough field.
pub fn find_transversal_line(base: &Field, f: &HomPoly) -> Option<(Field, ProjLine)> {
    if let Some(l) = ProjLine::all(base).take(TRANSVERSAL_TRIES).find(|l| restriction_is_squarefree(base, f, l)) {
        return Some((base.clone(), l));
    }
    let d = f.degree as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x11e5);
    for e in 2..=12u32 {
        let Ok(ext) = extension(base, e) else { break };
        let Ok(fe) = f.embed(base, &ext) else { break };
        for _ in 0..TRANSVERSAL_TRIES {
            let c = [0, 1, 2].map(|_| ext.from_u64(rng.gen_range(0..ext.order())));
            let Ok(l) = ProjLine::new(&ext, c) else { continue };
            if restriction_is_squarefree(&ext, &fe, &l) {
                return Some((ext.clone(), l));
            }
        }
        if ext.order() > 16 * d * d * d {
            break;
        }
    }
    None
}
