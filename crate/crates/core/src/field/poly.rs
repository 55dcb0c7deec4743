//! Univariate polynomials over a [`FieldCtx`]: Euclidean arithmetic, root
//! finding with multiplicities and the factor-degree pattern used to size
//! splitting fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FieldCtx, FieldElem};

/// Dense little-endian coefficients; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(pub Vec<FieldElem>);

impl Poly {
    pub fn new(mut c: Vec<FieldElem>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(k: &FieldCtx, c: FieldElem) -> Poly {
        let _ = k;
        Poly::new(vec![c])
    }

    /// x − r
    pub fn linear(k: &FieldCtx, r: FieldElem) -> Poly {
        Poly(vec![k.neg(r), k.one()])
    }

    pub fn x(k: &FieldCtx) -> Poly {
        Poly(vec![k.zero(), k.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<FieldElem> {
        self.0.last().copied()
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }
}

pub fn eval(k: &FieldCtx, f: &Poly, x: FieldElem) -> FieldElem {
    f.0.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), c))
}

pub fn add(k: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    Poly::new(
        (0..n)
            .map(|i| {
                let x = a.0.get(i).copied().unwrap_or(k.zero());
                let y = b.0.get(i).copied().unwrap_or(k.zero());
                k.add(x, y)
            })
            .collect(),
    )
}

pub fn sub(k: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    Poly::new(
        (0..n)
            .map(|i| {
                let x = a.0.get(i).copied().unwrap_or(k.zero());
                let y = b.0.get(i).copied().unwrap_or(k.zero());
                k.sub(x, y)
            })
            .collect(),
    )
}

pub fn mul(k: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![k.zero(); a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.0.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    Poly::new(out)
}

pub fn scale(k: &FieldCtx, a: &Poly, c: FieldElem) -> Poly {
    Poly::new(a.0.iter().map(|&x| k.mul(x, c)).collect())
}

pub fn monic(k: &FieldCtx, a: &Poly) -> Poly {
    match a.lead() {
        None => Poly::zero(),
        Some(l) => scale(k, a, k.inv(l)),
    }
}

/// Quotient and remainder; panics when dividing by zero.
pub fn divrem(k: &FieldCtx, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = b.degree().expect("polynomial division by zero");
    let inv_lead = k.inv(b.lead().unwrap());
    let mut r = a.0.clone();
    if r.len() <= db {
        return (Poly::zero(), a.clone());
    }
    let mut q = vec![k.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = k.mul(r[i], inv_lead);
        if c.is_zero() {
            continue;
        }
        q[i - db] = c;
        for (j, &bj) in b.0.iter().enumerate() {
            r[i - db + j] = k.sub(r[i - db + j], k.mul(c, bj));
        }
    }
    r.truncate(db);
    (Poly::new(q), Poly::new(r))
}

pub fn rem(k: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    divrem(k, a, b).1
}

/// Monic gcd (zero when both inputs are zero).
pub fn gcd(k: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn derivative(k: &FieldCtx, a: &Poly) -> Poly {
    Poly::new(
        a.0.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(c, k.from_int((i as u64 % k.characteristic()) as i64)))
            .collect(),
    )
}

pub fn pow_mod(k: &FieldCtx, base: &Poly, mut e: u128, m: &Poly) -> Poly {
    let mut acc = rem(k, &Poly::constant(k, k.one()), m);
    let mut b = rem(k, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(k, &mul(k, &acc, &b), m);
        }
        b = rem(k, &mul(k, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// x^(q^j) mod m, by repeated q-th powering.
fn frobenius_power(k: &FieldCtx, start: &Poly, m: &Poly) -> Poly {
    pow_mod(k, start, k.order() as u128, m)
}

/// True when `f` has no repeated factor.
pub fn is_squarefree(k: &FieldCtx, f: &Poly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => gcd(k, f, &derivative(k, f)).degree() == Some(0),
    }
}

/// The degrees of the distinct monic irreducible factors of `f`, ascending.
pub fn factor_degrees(k: &FieldCtx, f: &Poly) -> Vec<usize> {
    let mut rest = monic(k, f);
    let x = Poly::x(k);
    let mut degrees = Vec::new();
    let mut xq = x.clone();
    let mut j = 0;
    while rest.degree().unwrap_or(0) > 0 {
        j += 1;
        xq = frobenius_power(k, &rem(k, &xq, &rest), &rest);
        let g = gcd(k, &rest, &sub(k, &xq, &x));
        if g.degree().unwrap_or(0) > 0 {
            degrees.push(j);
            loop {
                let h = gcd(k, &rest, &g);
                if h.degree().unwrap_or(0) == 0 {
                    break;
                }
                rest = divrem(k, &rest, &h).0;
            }
        }
        if j > f.degree().unwrap_or(0) {
            unreachable!("every factor has degree at most deg f");
        }
    }
    degrees
}

/// Splits a monic product of distinct linear factors into its roots.
fn split_linear(k: &FieldCtx, f: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<FieldElem>) {
    match f.degree() {
        None | Some(0) => {}
        Some(1) => out.push(k.neg(k.div(f.0[0], f.0[1]))),
        Some(_) => {
            let q = k.order();
            // small fields: evaluate directly
            if q <= 64 {
                out.extend(k.elements().filter(|&x| eval(k, f, x).is_zero()));
                return;
            }
            loop {
                let delta = k.from_u64(rng.gen_range(0..q));
                let h = if k.characteristic() == 2 {
                    // absolute trace of delta*x
                    let mut t = Poly::new(vec![k.zero(), delta]);
                    let mut acc = t.clone();
                    let bits = 64 - (q - 1).leading_zeros();
                    for _ in 1..bits {
                        t = rem(k, &mul(k, &t, &t), f);
                        acc = add(k, &acc, &t);
                    }
                    acc
                } else {
                    let base = Poly::new(vec![delta, k.one()]);
                    let t = pow_mod(k, &base, ((q - 1) / 2) as u128, f);
                    sub(k, &t, &Poly::constant(k, k.one()))
                };
                let g = gcd(k, f, &h);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < f.degree().unwrap() {
                    let other = divrem(k, f, &g).0;
                    split_linear(k, &g, rng, out);
                    split_linear(k, &monic(k, &other), rng, out);
                    return;
                }
            }
        }
    }
}

/// Roots of `f` in the field with multiplicities, sorted by encoding.
pub fn roots(k: &FieldCtx, f: &Poly) -> Vec<(FieldElem, u32)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let f = monic(k, f);
    let x = Poly::x(k);
    let xq = frobenius_power(k, &x, &f);
    let lin = gcd(k, &f, &sub(k, &xq, &x));
    let mut rs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(k, &lin, &mut rng, &mut rs);
    rs.sort();
    rs.into_iter()
        .map(|r| {
            let lf = Poly::linear(k, r);
            let mut m = 0;
            let mut cur = f.clone();
            loop {
                let (qq, rr) = divrem(k, &cur, &lf);
                if !rr.is_zero() {
                    break;
                }
                m += 1;
                cur = qq;
            }
            (r, m)
        })
        .collect()
}
