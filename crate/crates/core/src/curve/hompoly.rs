//! Dense homogeneous polynomials in X, Y, Z.
//!
//! Coefficients are indexed by monomials `X^i Y^j Z^(d-i-j)` in graded-lex
//! order: `i` descending, then `j` descending.

use crate::error::{Error, Result};
use crate::field::{embed, FieldCtx, FieldElem};
use crate::geometry::Mat3;

pub fn monomial_count(d: u32) -> usize {
    ((d + 1) * (d + 2) / 2) as usize
}

#[inline]
pub fn monomial_index(d: u32, i: u32, j: u32) -> usize {
    let a = d - i;
    (a * (a + 1) / 2 + (a - j)) as usize
}

/// Exponent triples in coefficient order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    pub degree: u32,
    pub coeffs: Vec<FieldElem>,
}

impl HomPoly {
    pub fn zero(k: &FieldCtx, d: u32) -> HomPoly {
        HomPoly { degree: d, coeffs: vec![k.zero(); monomial_count(d)] }
    }

    pub fn from_terms(k: &FieldCtx, d: u32, terms: &[([u32; 3], FieldElem)]) -> Result<HomPoly> {
        let mut f = HomPoly::zero(k, d);
        for (e, c) in terms {
            if e[0] + e[1] + e[2] != d {
                return Err(Error::NotHomogeneous(d));
            }
            let i = monomial_index(d, e[0], e[1]);
            f.coeffs[i] = k.add(f.coeffs[i], *c);
        }
        Ok(f)
    }

    /// `aX + bY + cZ`.
    pub fn linear(l: [FieldElem; 3]) -> HomPoly {
        HomPoly { degree: 1, coeffs: l.to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElem {
        self.coeffs[monomial_index(self.degree, i, j)]
    }

    /// Nonzero terms in coefficient order.
    pub fn terms(&self) -> Vec<([u32; 3], FieldElem)> {
        monomials(self.degree).into_iter().zip(self.coeffs.iter().copied()).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Scales so the first nonzero coefficient is 1.
    pub fn normalized(&self, k: &FieldCtx) -> Result<HomPoly> {
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)?;
        let inv = k.inv(*lead);
        Ok(HomPoly { degree: self.degree, coeffs: self.coeffs.iter().map(|&c| k.mul(c, inv)).collect() })
    }

    pub fn embed(&self, src: &FieldCtx, dst: &FieldCtx) -> Result<HomPoly> {
        let coeffs = self.coeffs.iter().map(|&c| embed(c, src, dst)).collect::<Result<_>>()?;
        Ok(HomPoly { degree: self.degree, coeffs })
    }

    /// Coefficients restricted to a subfield, if they all lie in it.
    pub fn restrict(&self, ambient: &FieldCtx, sub: &FieldCtx) -> Result<Option<HomPoly>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            match crate::field::restrict(c, ambient, sub)? {
                Some(x) => coeffs.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(HomPoly { degree: self.degree, coeffs }))
    }

    pub fn add(&self, k: &FieldCtx, o: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, o.degree);
        HomPoly { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| k.add(a, b)).collect() }
    }

    pub fn scale(&self, k: &FieldCtx, c: FieldElem) -> HomPoly {
        HomPoly { degree: self.degree, coeffs: self.coeffs.iter().map(|&a| k.mul(a, c)).collect() }
    }

    pub fn mul(&self, k: &FieldCtx, o: &HomPoly) -> HomPoly {
        let d = self.degree + o.degree;
        let mut out = HomPoly::zero(k, d);
        let mo = monomials(o.degree);
        for (ea, &a) in monomials(self.degree).iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (eb, &b) in mo.iter().zip(&o.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let idx = monomial_index(d, ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[idx] = k.add(out.coeffs[idx], k.mul(a, b));
            }
        }
        out
    }

    pub fn eval(&self, k: &FieldCtx, p: &[FieldElem; 3]) -> FieldElem {
        let d = self.degree as usize;
        let pw = |x: FieldElem| {
            let mut v = Vec::with_capacity(d + 1);
            v.push(k.one());
            for i in 1..=d {
                v.push(k.mul(v[i - 1], x));
            }
            v
        };
        let (px, py, pz) = (pw(p[0]), pw(p[1]), pw(p[2]));
        let mut acc = k.zero();
        let mut idx = 0;
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                let c = self.coeffs[idx];
                idx += 1;
                if !c.is_zero() {
                    acc = k.add(acc, k.mul(c, k.mul(px[i], k.mul(py[j], pz[d - i - j]))));
                }
            }
        }
        acc
    }

    /// Partial derivatives `(∂X, ∂Y, ∂Z)`.
    pub fn gradient(&self, k: &FieldCtx) -> [HomPoly; 3] {
        let d = self.degree;
        assert!(d >= 1, "gradient of a constant");
        let mut out = [HomPoly::zero(k, d - 1), HomPoly::zero(k, d - 1), HomPoly::zero(k, d - 1)];
        for (e, &c) in monomials(d).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            for v in 0..3 {
                if e[v] == 0 {
                    continue;
                }
                let mut f = *e;
                f[v] -= 1;
                let idx = monomial_index(d - 1, f[0], f[1]);
                let t = k.mul(c, k.from_u64(e[v] as u64));
                out[v].coeffs[idx] = k.add(out[v].coeffs[idx], t);
            }
        }
        out
    }

    /// `F(M (X, Y, Z)ᵀ)`.
    pub fn compose(&self, k: &FieldCtx, m: &Mat3) -> HomPoly {
        let d = self.degree;
        let forms: Vec<HomPoly> = (0..3).map(|r| HomPoly::linear([m.at(r, 0), m.at(r, 1), m.at(r, 2)])).collect();
        let powers: Vec<Vec<HomPoly>> = forms
            .iter()
            .map(|l| {
                let mut v = vec![HomPoly { degree: 0, coeffs: vec![k.one()] }];
                for e in 1..=d as usize {
                    let next = v[e - 1].mul(k, l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = HomPoly::zero(k, d);
        let mut idx = 0;
        for i in (0..=d).rev() {
            let xi = &powers[0][i as usize];
            // collect Σ_j c_ij Y'^j Z'^(d-i-j) before multiplying by X'^i
            let mut inner = HomPoly::zero(k, d - i);
            let mut any = false;
            for j in (0..=d - i).rev() {
                let c = self.coeffs[idx];
                idx += 1;
                if c.is_zero() {
                    continue;
                }
                any = true;
                let t = powers[1][j as usize].mul(k, &powers[2][(d - i - j) as usize]).scale(k, c);
                inner = inner.add(k, &t);
            }
            if any {
                out = out.add(k, &xi.mul(k, &inner));
            }
        }
        out
    }

    /// Restriction to the line through `a` and `b`: the binary form
    /// `F(s a + t b)` as coefficients of `s^(d-e) t^e`, `e = 0..=d`.
    pub fn restrict_to_line(&self, k: &FieldCtx, a: &[FieldElem; 3], b: &[FieldElem; 3]) -> Vec<FieldElem> {
        let d = self.degree as usize;
        let mul = |u: &[FieldElem], v: &[FieldElem]| {
            let mut w = vec![k.zero(); u.len() + v.len() - 1];
            for (i, &x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, &y) in v.iter().enumerate() {
                    w[i + j] = k.add(w[i + j], k.mul(x, y));
                }
            }
            w
        };
        let powers: Vec<Vec<Vec<FieldElem>>> = (0..3)
            .map(|r| {
                let l = [a[r], b[r]];
                let mut v = vec![vec![k.one()]];
                for e in 1..=d {
                    let next = mul(&v[e - 1], &l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = vec![k.zero(); d + 1];
        let mut idx = 0;
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                let c = self.coeffs[idx];
                idx += 1;
                if c.is_zero() {
                    continue;
                }
                let t = mul(&mul(&powers[0][i], &powers[1][j]), &powers[2][d - i - j]);
                for (o, x) in out.iter_mut().zip(t) {
                    *o = k.add(*o, k.mul(c, x));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(k: &FieldCtx, d: u32, rng: &mut ChaCha8Rng) -> HomPoly {
        HomPoly { degree: d, coeffs: (0..monomial_count(d)).map(|_| k.from_u64(rng.gen_range(0..k.order()))).collect() }
    }

    #[test]
    fn index_matches_enumeration() {
        for d in 0..7 {
            for (n, e) in monomials(d).iter().enumerate() {
                assert_eq!(monomial_index(d, e[0], e[1]), n);
            }
        }
    }

    #[test]
    fn compose_and_restrict_agree_with_evaluation() {
        let k = make_field(7, 1, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in 1..6 {
            let f = random_poly(&k, d, &mut rng);
            let m = Mat3((0..9).map(|_| k.from_u64(rng.gen_range(0..7))).collect::<Vec<_>>().try_into().unwrap());
            let g = f.compose(&k, &m);
            let a = [0, 1, 2].map(|_| k.from_u64(rng.gen_range(0..7)));
            let b = [0, 1, 2].map(|_| k.from_u64(rng.gen_range(0..7)));
            let bin = f.restrict_to_line(&k, &a, &b);
            for _ in 0..20 {
                let p = [0, 1, 2].map(|_| k.from_u64(rng.gen_range(0..7)));
                assert_eq!(g.eval(&k, &p), f.eval(&k, &m.apply(&k, &p)));
                let (s, t) = (k.from_u64(rng.gen_range(0..7)), k.from_u64(rng.gen_range(0..7)));
                let pt = [0, 1, 2].map(|i| k.add(k.mul(s, a[i]), k.mul(t, b[i])));
                let mut v = k.zero();
                for (e, &c) in bin.iter().enumerate() {
                    v = k.add(v, k.mul(c, k.mul(k.pow(s, d as u64 - e as u64), k.pow(t, e as u64))));
                }
                assert_eq!(v, f.eval(&k, &pt));
            }
        }
    }

    #[test]
    fn product_evaluates_as_product() {
        let k = make_field(3, 2, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = random_poly(&k, 3, &mut rng);
        let g = random_poly(&k, 2, &mut rng);
        let h = f.mul(&k, &g);
        for _ in 0..30 {
            let p = [0, 1, 2].map(|_| k.from_u64(rng.gen_range(0..9)));
            assert_eq!(h.eval(&k, &p), k.mul(f.eval(&k, &p), g.eval(&k, &p)));
        }
    }

    #[test]
    fn euler_identity() {
        // Σ x_i ∂_i F = d F
        let k = make_field(11, 1, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_poly(&k, 4, &mut rng);
        let g = f.gradient(&k);
        for _ in 0..20 {
            let p = [0, 1, 2].map(|_| k.from_u64(rng.gen_range(0..11)));
            let lhs = k.sum((0..3).map(|i| k.mul(p[i], g[i].eval(&k, &p))));
            assert_eq!(lhs, k.mul(k.from_u64(4), f.eval(&k, &p)));
        }
    }
}
