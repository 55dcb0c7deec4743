//! Exact arithmetic in GF(p^n).
//!
//! A [`FieldCtx`] is built from a prime `p`, an extension degree `n` and a
//! seed that picks the defining modulus. Elements are plain [`FieldElem`]
//! values tagged with the id of their context; all arithmetic goes through
//! the context and mixing contexts panics.
//!
//! Fields up to [`FieldLimits::table_cap`] elements get exp/log tables based
//! on a canonical primitive element: a root of the Conway-style polynomial
//! of degree `n`, i.e. the least primitive polynomial (in Conway's signed
//! lexicographic order) whose norms down to every subfield are the chosen
//! primitive polynomials of those subfields. Embeddings between tabled fields
//! send one canonical element to a power of the other, so they compose.

mod fp_poly;
pub mod linalg;
pub mod poly;
pub mod primes;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use primes::{is_prime, mul_mod, prime_factors};

pub type Field = Arc<FieldCtx>;

/// Default bound on the number of elements for table-backed fields and for
/// exhaustive scans over a field.
pub const DEFAULT_SCAN_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldLimits {
    pub max_element_bits: u32,
    pub table_cap: u64,
}

impl Default for FieldLimits {
    fn default() -> Self {
        FieldLimits { max_element_bits: 64, table_cap: DEFAULT_SCAN_CAP }
    }
}

/// An element of some [`FieldCtx`]. The value is the base-`p` encoding of
/// the residue polynomial: coefficient `i` is digit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    v: u64,
    ctx: u64,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl FieldElem {
    #[inline]
    pub fn value(self) -> u64 {
        self.v
    }

    #[inline]
    pub fn ctx_id(self) -> u64 {
        self.ctx
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.v == 0
    }
}

struct Tables {
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldCtx {
    id: u64,
    p: u64,
    n: u32,
    seed: u64,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
    primitive: u64,
    primitive_poly: Vec<u64>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.p, self.n, self.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for FieldCtx {}

static FIELDS: Lazy<Mutex<HashMap<(u64, u32, u64), Field>>> = Lazy::new(Default::default);

/// Builds (or fetches from the process-wide cache) GF(p^n) with the modulus
/// picked by `seed`.
pub fn make_field(p: u64, n: u32, seed: u64) -> Result<Field> {
    let key = (p, n, seed);
    if let Some(f) = FIELDS.lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let field = Arc::new(FieldCtx::build(p, n, seed, FieldLimits::default())?);
    Ok(FIELDS.lock().unwrap().entry(key).or_insert(field).clone())
}

/// Like [`make_field`] but with explicit limits and no caching.
pub fn make_field_with(p: u64, n: u32, seed: u64, limits: FieldLimits) -> Result<Field> {
    Ok(Arc::new(FieldCtx::build(p, n, seed, limits)?))
}

/// The degree-`k` extension of `base` (seed 0 representation).
pub fn extension(base: &FieldCtx, k: u32) -> Result<Field> {
    make_field(base.p, base.n * k, 0)
}

/// Smallest field (seed 0 representation) containing both `a` and `b`.
pub fn compositum(a: &Field, b: &Field) -> Result<Field> {
    if a.p != b.p {
        return Err(Error::ContextMismatch(format!("characteristics {} and {}", a.p, b.p)));
    }
    let n = primes::lcm(a.n as u64, b.n as u64) as u32;
    if n == a.n {
        Ok(a.clone())
    } else if n == b.n {
        Ok(b.clone())
    } else {
        make_field(a.p, n, 0)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv(words: impl IntoIterator<Item = u64>) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for w in words {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Conway's ordering key: coefficients from degree n-1 down, with sign
/// (-1)^(n-i) applied to the coefficient of x^i.
fn conway_key(f: &[u64], p: u64) -> Vec<u64> {
    let n = f.len() - 1;
    (0..n)
        .rev()
        .map(|i| if (n - i) % 2 == 1 { (p - f[i]) % p } else { f[i] })
        .collect()
}

impl FieldCtx {
    fn build(p: u64, n: u32, seed: u64, limits: FieldLimits) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let bits = limits.max_element_bits.min(64);
        let q128 = (p as u128).checked_pow(n);
        let q = match q128 {
            Some(q) if q < (1u128 << bits) => q as u64,
            _ => return Err(Error::FieldTooLarge { p, n, bits }),
        };
        let modulus = Self::pick_modulus(p, n, q, seed);
        let id = fnv([p, n as u64].into_iter().chain(modulus.iter().copied()));
        let mut ctx = FieldCtx {
            id,
            p,
            n,
            seed,
            q,
            modulus,
            tables: None,
            primitive: 0,
            primitive_poly: Vec::new(),
        };
        let g0 = ctx.first_primitive_raw();
        if q <= limits.table_cap {
            ctx.install_tables(g0);
            let (c, poly) = ctx.conway_element();
            ctx.rebase_tables(c);
            ctx.primitive = c;
            ctx.primitive_poly = poly;
        } else {
            ctx.primitive = g0;
            ctx.primitive_poly = ctx.minpoly_raw(g0);
        }
        Ok(ctx)
    }

    fn pick_modulus(p: u64, n: u32, q: u64, seed: u64) -> Vec<u64> {
        let start = if seed == 0 { 0 } else { splitmix64(seed) % q };
        for k in 0..q {
            let idx = start.wrapping_add(k) % q;
            let mut f: Vec<u64> = Vec::with_capacity(n as usize + 1);
            let mut t = idx;
            for _ in 0..n {
                f.push(t % p);
                t /= p;
            }
            f.push(1);
            if fp_poly::is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    /// Monic defining polynomial over GF(p), little-endian.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Minimal polynomial over GF(p) of [`FieldCtx::primitive_element`].
    pub fn primitive_polynomial(&self) -> &[u64] {
        &self.primitive_poly
    }

    #[inline]
    fn elem(&self, v: u64) -> FieldElem {
        FieldElem { v, ctx: self.id }
    }

    #[inline]
    fn check(&self, x: FieldElem) {
        assert!(
            x.ctx == self.id,
            "field element from another context used with GF({}^{})",
            self.p,
            self.n
        );
    }

    pub fn owns(&self, x: FieldElem) -> bool {
        x.ctx == self.id
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    /// Element with raw encoding `v` (must be below the field order).
    pub fn from_u64(&self, v: u64) -> FieldElem {
        assert!(v < self.q, "encoding {v} out of range for a field of order {}", self.q);
        self.elem(v)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        let r = v.rem_euclid(self.p as i64) as u64;
        self.elem(r)
    }

    /// Element from its residue coefficients over GF(p), little-endian.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!(
                "{coeffs:?} is not a residue over GF({}) of degree < {}",
                self.p, self.n
            )));
        }
        Ok(self.elem(self.digits_to_value(coeffs)))
    }

    /// Residue coefficients over GF(p), little-endian, length n.
    pub fn coeffs(&self, x: FieldElem) -> Vec<u64> {
        self.check(x);
        self.value_to_digits(x.v)
    }

    fn value_to_digits(&self, mut v: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn digits_to_value(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(move |v| self.elem(v))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.q).map(move |v| self.elem(v))
    }

    // ---- raw arithmetic on encodings ----

    #[inline]
    fn add_raw(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.n == 1 {
            let s = a as u128 + b as u128;
            return (s % self.p as u128) as u64;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..self.n {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            a /= self.p;
            b /= self.p;
            if i + 1 < self.n {
                place *= self.p;
            }
        }
        out
    }

    #[inline]
    fn neg_raw(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        if self.n == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..self.n {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            a /= self.p;
            if i + 1 < self.n {
                place *= self.p;
            }
        }
        out
    }

    fn mul_poly_raw(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let p = self.p;
        if self.n == 1 {
            return mul_mod(a, b, p);
        }
        let n = self.n as usize;
        let da = self.value_to_digits(a);
        let db = self.value_to_digits(b);
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
                }
            }
        }
        // reduce by the monic modulus
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let t = mul_mod(c, self.modulus[i], p);
                prod[k - n + i] = (prod[k - n + i] + p - t) % p;
            }
        }
        self.digits_to_value(&prod[..n])
    }

    fn pow_poly_raw(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly_raw(acc, b);
            }
            b = self.mul_poly_raw(b, b);
            e >>= 1;
        }
        acc
    }

    fn first_primitive_raw(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        let order = self.q - 1;
        let factors = prime_factors(order);
        (2..self.q)
            .chain(std::iter::once(1))
            .find(|&g| factors.iter().all(|&r| self.pow_poly_raw(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn install_tables(&mut self, g: u64) {
        let m = (self.q - 1) as usize;
        let mut exp = vec![0u32; 2 * m.max(1)];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..m {
            exp[i] = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_poly_raw(x, g);
        }
        for i in m..2 * m {
            exp[i] = exp[i - m];
        }
        self.tables = Some(Tables { exp, log });
    }

    fn rebase_tables(&mut self, c: u64) {
        let t = self.tables.as_ref().expect("tables installed");
        let m = (self.q - 1) as usize;
        if m == 0 {
            return;
        }
        let lc = t.log[c as usize] as u64;
        let mut exp = vec![0u32; 2 * m];
        let mut log = vec![0u32; self.q as usize];
        for i in 0..m {
            let v = t.exp[((i as u64 * lc) % m as u64) as usize];
            exp[i] = v;
            log[v as usize] = i as u32;
        }
        for i in m..2 * m {
            exp[i] = exp[i - m];
        }
        self.tables = Some(Tables { exp, log });
    }

    /// Minimal polynomial over GF(p) of the element with encoding `a`,
    /// returned as a monic little-endian coefficient vector.
    fn minpoly_raw(&self, a: u64) -> Vec<u64> {
        let mut conj = vec![a];
        let mut c = self.pow_raw(a, self.p);
        while c != a {
            conj.push(c);
            c = self.pow_raw(c, self.p);
        }
        let mut poly = vec![1u64];
        for &r in &conj {
            let mut next = vec![0u64; poly.len() + 1];
            let nr = self.neg_raw(r);
            for (i, &ci) in poly.iter().enumerate() {
                next[i + 1] = self.add_raw(next[i + 1], ci);
                next[i] = self.add_raw(next[i], self.mul_raw(ci, nr));
            }
            poly = next;
        }
        debug_assert!(poly.iter().all(|&c| c < self.p));
        poly
    }

    /// Picks the canonical primitive element (see module docs). Returns its
    /// encoding and its minimal polynomial.
    fn conway_element(&self) -> (u64, Vec<u64>) {
        let p = self.p;
        let n = self.n as u64;
        let q1 = self.q - 1;
        if q1 == 1 {
            return (1, vec![1, 1]);
        }
        let g0 = self.tables.as_ref().unwrap().exp[1] as u64;
        let mut chosen: HashMap<u64, Vec<u64>> = HashMap::new();
        let mut chosen_log: u64 = 1;
        for m in primes::divisors(n) {
            let qm1 = p.pow(m as u32) - 1;
            let sub = q1 / qm1;
            let proper: Vec<u64> = primes::divisors(m).into_iter().filter(|&d| d < m).collect();
            let mut best: Option<(Vec<u64>, Vec<u64>, u64)> = None;
            for k in 1..qm1.max(2) {
                if primes::gcd(k, qm1) != 1 {
                    continue;
                }
                // skip k unless it is least in its cyclotomic coset
                let mut least = true;
                let mut t = k;
                for _ in 1..m {
                    t = mul_mod(t, p, qm1);
                    if t < k {
                        least = false;
                        break;
                    }
                }
                if !least {
                    continue;
                }
                let log_beta = mul_mod(k, sub, q1);
                let beta = self.pow_raw(g0, log_beta);
                let f = self.minpoly_raw(beta);
                let key = conway_key(&f, p);
                if let Some((bk, _, _)) = &best {
                    if &key >= bk {
                        continue;
                    }
                }
                let compatible = proper.iter().all(|&d| {
                    let e = qm1 / (p.pow(d as u32) - 1);
                    self.minpoly_raw(self.pow_raw(beta, e)) == chosen[&d]
                });
                if compatible {
                    best = Some((key, f, log_beta));
                }
            }
            let (_, f, lb) = best.expect("compatible primitive polynomials exist");
            chosen.insert(m, f);
            chosen_log = lb;
        }
        let root = self.pow_raw(g0, chosen_log);
        // least conjugate root in encoding order
        let mut c = root;
        let mut r = root;
        for _ in 1..n {
            r = self.pow_raw(r, p);
            c = c.min(r);
        }
        (c, chosen.remove(&n).unwrap())
    }

    #[inline]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    t.exp[(t.log[a as usize] + t.log[b as usize]) as usize] as u64
                }
            }
            None => self.mul_poly_raw(a, b),
        }
    }

    fn pow_raw(&self, a: u64, e: u64) -> u64 {
        match &self.tables {
            Some(t) => {
                if a == 0 {
                    return if e == 0 { 1 } else { 0 };
                }
                let m = (self.q - 1) as u128;
                let l = (t.log[a as usize] as u128 * (e as u128 % m)) % m;
                t.exp[l as usize] as u64
            }
            None => self.pow_poly_raw(a, e),
        }
    }

    // ---- public arithmetic ----

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        self.elem(self.add_raw(a.v, b.v))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.check(a);
        self.elem(self.neg_raw(a.v))
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        self.elem(self.add_raw(a.v, self.neg_raw(b.v)))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        self.elem(self.mul_raw(a.v, b.v))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        self.check(a);
        self.elem(self.pow_raw(a.v, e))
    }

    pub fn try_inv(&self, a: FieldElem) -> Option<FieldElem> {
        self.check(a);
        if a.v == 0 {
            return None;
        }
        let v = match &self.tables {
            Some(t) => {
                let m = self.q - 1;
                t.exp[((m - t.log[a.v as usize] as u64) % m) as usize] as u64
            }
            None => self.pow_poly_raw(a.v, self.q - 2),
        };
        Some(self.elem(v))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul(a, self.inv(b))
    }

    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    /// Sum of many terms.
    pub fn sum(&self, it: impl IntoIterator<Item = FieldElem>) -> FieldElem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    /// The canonical primitive element (generator of the multiplicative group).
    pub fn primitive_element(&self) -> FieldElem {
        self.elem(self.primitive)
    }

    /// Discrete log to the base of [`FieldCtx::primitive_element`]; tabled fields only.
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        self.check(a);
        let t = self.tables.as_ref()?;
        (a.v != 0).then(|| t.log[a.v as usize] as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> u64 {
        self.check(a);
        assert!(!a.is_zero(), "zero has no multiplicative order");
        let mut ord = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while ord % r == 0 && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// Minimal polynomial of `a` over GF(p), monic little-endian.
    pub fn minimal_polynomial(&self, a: FieldElem) -> Vec<u64> {
        self.check(a);
        self.minpoly_raw(a.v)
    }

    /// True when `a` lies in the subfield GF(p^k) (k must divide n).
    pub fn in_subfield(&self, a: FieldElem, k: u32) -> bool {
        self.pow(a, self.p.pow(k)) == a
    }

    /// A primitive `r`-th root of unity, derived from the canonical
    /// primitive element.
    pub fn root_of_unity(&self, r: u64) -> Result<FieldElem> {
        let m = self.q - 1;
        if r == 0 || m % r != 0 {
            return Err(Error::NoRootOfUnity { r, order: m });
        }
        Ok(self.pow(self.primitive_element(), m / r))
    }

    pub fn format(&self, a: FieldElem) -> String {
        self.check(a);
        if self.n == 1 {
            return a.v.to_string();
        }
        let d = self.value_to_digits(a.v);
        format!("[{}]", d.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn embedding_factor(src: &FieldCtx, dst: &FieldCtx) -> Result<u64> {
    let err = || Error::NoEmbedding { p: src.p, src: src.n, p2: dst.p, dst: dst.n };
    if src.p != dst.p || dst.n % src.n != 0 {
        return Err(err());
    }
    for f in [src, dst] {
        if f.tables.is_none() {
            return Err(Error::Untabled { p: f.p, n: f.n });
        }
    }
    Ok((dst.q - 1) / (src.q - 1))
}

/// Image of `x` under the canonical embedding `src → dst`.
pub fn embed(x: FieldElem, src: &FieldCtx, dst: &FieldCtx) -> Result<FieldElem> {
    src.check(x);
    if src.id == dst.id {
        return Ok(x);
    }
    let e = embedding_factor(src, dst)?;
    if x.v == 0 {
        return Ok(dst.zero());
    }
    let l = src.log(x).unwrap();
    let m = dst.q - 1;
    let dl = ((l as u128 * e as u128) % m as u128) as u64;
    Ok(dst.elem(dst.tables.as_ref().unwrap().exp[dl as usize] as u64))
}

/// Inverse of [`embed`]: `Some(x)` when `y` lies in the image of `src`.
pub fn restrict(y: FieldElem, dst: &FieldCtx, src: &FieldCtx) -> Result<Option<FieldElem>> {
    dst.check(y);
    if src.id == dst.id {
        return Ok(Some(y));
    }
    let e = embedding_factor(src, dst)?;
    if y.v == 0 {
        return Ok(Some(src.zero()));
    }
    let l = dst.log(y).unwrap();
    if l % e != 0 {
        return Ok(None);
    }
    Ok(Some(src.elem(src.tables.as_ref().unwrap().exp[(l / e) as usize] as u64)))
}

/// The cached context that owns `x`, if it was built through [`make_field`].
pub fn field_of(x: FieldElem) -> Option<Field> {
    FIELDS.lock().unwrap().values().find(|f| f.id == x.ctx).cloned()
}

/// Embeds `x` into `dst` from whichever cached subfield owns it.
pub fn lift(x: FieldElem, dst: &FieldCtx) -> Result<FieldElem> {
    if x.ctx == dst.id {
        return Ok(x);
    }
    let src = field_of(x).ok_or_else(|| Error::ContextMismatch(format!("unknown context {:x}", x.ctx)))?;
    embed(x, &src, dst)
}

/// Whether `src` embeds into `dst`.
pub fn embeds_into(src: &FieldCtx, dst: &FieldCtx) -> bool {
    src.id == dst.id || embedding_factor(src, dst).is_ok()
}

/// Embeds a slice of elements.
pub fn embed_all(xs: &[FieldElem], src: &FieldCtx, dst: &FieldCtx) -> Result<Vec<FieldElem>> {
    xs.iter().map(|&x| embed(x, src, dst)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_and_gf4() {
        let f2 = make_field(2, 1, 0).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        assert_eq!(f2.order(), 2);
        let f4 = make_field(2, 2, 0).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let w = f4.root_of_unity(3).unwrap();
        assert_ne!(w, f4.one());
        assert_eq!(f4.pow(w, 3), f4.one());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1, 0).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(3, 0, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 64, 0), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(make_field(3, 41, 0), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn gf729_group_order() {
        let k = make_field(3, 6, 0).unwrap();
        for v in [1u64, 2, 5, 100, 728] {
            assert_eq!(k.pow(k.from_u64(v), 728), k.one());
        }
        assert_eq!(k.multiplicative_order(k.primitive_element()), 728);
    }

    #[test]
    fn root_of_unity_orders() {
        let k = make_field(13, 1, 0).unwrap();
        let z = k.root_of_unity(4).unwrap();
        assert_eq!(k.multiplicative_order(z), 4);
        assert_eq!(k.mul(z, z), k.from_int(-1));
        let f4 = make_field(2, 2, 0).unwrap();
        assert!(matches!(f4.root_of_unity(2), Err(Error::NoRootOfUnity { .. })));
    }

    #[test]
    fn canonical_polynomials_are_conway() {
        // published Conway polynomials, little-endian
        let cases: &[(u64, u32, &[u64])] = &[
            (2, 2, &[1, 1, 1]),
            (2, 3, &[1, 1, 0, 1]),
            (2, 4, &[1, 1, 0, 0, 1]),
            (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
            (3, 2, &[2, 2, 1]),
            (3, 3, &[1, 2, 0, 1]),
            (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
            (13, 1, &[11, 1]),
            (13, 2, &[2, 12, 1]),
            (7, 2, &[3, 6, 1]),
        ];
        for &(p, n, poly) in cases {
            let k = make_field(p, n, 0).unwrap();
            assert_eq!(k.primitive_polynomial(), poly, "GF({p}^{n})");
        }
    }

    #[test]
    fn table_and_polynomial_paths_agree() {
        for (p, n) in [(2u64, 4u32), (3, 2), (5, 2), (7, 1)] {
            let t = make_field(p, n, 0).unwrap();
            let s = make_field_with(p, n, 0, FieldLimits { table_cap: 0, ..Default::default() }).unwrap();
            assert!(!s.has_tables());
            assert_eq!(t.modulus(), s.modulus());
            for a in 0..t.order() {
                for b in 0..t.order() {
                    let x = t.mul(t.from_u64(a), t.from_u64(b)).value();
                    let y = s.mul(s.from_u64(a), s.from_u64(b)).value();
                    assert_eq!(x, y);
                }
                if a != 0 {
                    assert_eq!(t.inv(t.from_u64(a)).value(), s.inv(s.from_u64(a)).value());
                }
            }
        }
    }

    #[test]
    fn large_untabled_field() {
        let k = make_field(2, 40, 0).unwrap();
        assert!(!k.has_tables());
        let a = k.from_u64(0x1234_5678_9a);
        assert_eq!(k.mul(a, k.inv(a)), k.one());
        assert_eq!(k.pow(a, k.order() - 1), k.one());
    }

    #[test]
    fn embedding_gf4_gf16_gf256() {
        let f4 = make_field(2, 2, 0).unwrap();
        let f16 = make_field(2, 4, 0).unwrap();
        let f256 = make_field(2, 8, 0).unwrap();
        assert_eq!(embed(f4.one(), &f4, &f16).unwrap(), f16.one());
        let g = embed(f4.primitive_element(), &f4, &f16).unwrap();
        assert_eq!(f16.multiplicative_order(g), 3);
        for x in f4.elements() {
            let two = embed(embed(x, &f4, &f16).unwrap(), &f16, &f256).unwrap();
            assert_eq!(two, embed(x, &f4, &f256).unwrap());
        }
        assert!(embed(f16.one(), &f16, &make_field(2, 6, 0).unwrap()).is_err());
    }

    #[test]
    fn seeds_give_isomorphic_representations() {
        let a = make_field(3, 4, 0).unwrap();
        let b = make_field(3, 4, 17).unwrap();
        assert_ne!(a.modulus(), b.modulus());
        assert_eq!(a.primitive_polynomial(), b.primitive_polynomial());
        for x in a.elements().step_by(7) {
            for y in a.elements().step_by(11) {
                let lhs = embed(a.add(x, y), &a, &b).unwrap();
                let rhs = b.add(embed(x, &a, &b).unwrap(), embed(y, &a, &b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn restrict_inverts_embed() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f729 = make_field(3, 6, 0).unwrap();
        for x in f9.elements() {
            let y = embed(x, &f9, &f729).unwrap();
            assert_eq!(restrict(y, &f729, &f9).unwrap(), Some(x));
        }
        let outside = f729.elements().filter(|&y| restrict(y, &f729, &f9).unwrap().is_none()).count();
        assert_eq!(outside, 720);
    }

    #[test]
    #[should_panic(expected = "another context")]
    fn cross_context_arithmetic_panics() {
        let a = make_field(2, 2, 0).unwrap();
        let b = make_field(2, 3, 0).unwrap();
        a.add(a.one(), b.one());
    }
}
