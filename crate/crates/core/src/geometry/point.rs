use std::fmt;

use crate::error::{Error, Result};
use crate::field::{embed, lift, FieldCtx, FieldElem};

/// Normalizes a nonzero triple so that its first nonzero entry is 1.
fn normalize(k: &FieldCtx, c: [FieldElem; 3]) -> Result<[FieldElem; 3]> {
    let lead = c.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = k.inv(*lead);
    Ok([k.mul(c[0], inv), k.mul(c[1], inv), k.mul(c[2], inv)])
}

pub(crate) fn cross(k: &FieldCtx, a: &[FieldElem; 3], b: &[FieldElem; 3]) -> [FieldElem; 3] {
    [
        k.sub(k.mul(a[1], b[2]), k.mul(a[2], b[1])),
        k.sub(k.mul(a[2], b[0]), k.mul(a[0], b[2])),
        k.sub(k.mul(a[0], b[1]), k.mul(a[1], b[0])),
    ]
}

pub(crate) fn dot(k: &FieldCtx, a: &[FieldElem; 3], b: &[FieldElem; 3]) -> FieldElem {
    k.add(k.add(k.mul(a[0], b[0]), k.mul(a[1], b[1])), k.mul(a[2], b[2]))
}

/// A point of the projective plane, stored with its first nonzero
/// coordinate equal to 1. Equality, hashing and ordering are on the
/// normalized coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint {
    c: [FieldElem; 3],
}

/// A line `a X + b Y + c Z = 0`, normalized like [`ProjPoint`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine {
    c: [FieldElem; 3],
}

macro_rules! triple_common {
    ($t:ident) => {
        impl $t {
            pub fn new(k: &FieldCtx, c: [FieldElem; 3]) -> Result<$t> {
                Ok($t { c: normalize(k, c)? })
            }

            pub fn from_ints(k: &FieldCtx, c: [i64; 3]) -> Result<$t> {
                $t::new(k, c.map(|x| k.from_int(x)))
            }

            pub fn coords(&self) -> [FieldElem; 3] {
                self.c
            }

            /// Image under the canonical embedding `src → dst`.
            pub fn embed(&self, src: &FieldCtx, dst: &FieldCtx) -> Result<$t> {
                let c = [
                    embed(self.c[0], src, dst)?,
                    embed(self.c[1], src, dst)?,
                    embed(self.c[2], src, dst)?,
                ];
                Ok($t { c })
            }

            /// Image in `dst` from whichever subfield the coordinates live in.
            pub fn lift(&self, dst: &FieldCtx) -> Result<$t> {
                Ok($t { c: [lift(self.c[0], dst)?, lift(self.c[1], dst)?, lift(self.c[2], dst)?] })
            }

            /// Whether every coordinate lies in the image of `sub ⊂ ambient`.
            pub fn restrict(&self, ambient: &FieldCtx, sub: &FieldCtx) -> Result<Option<$t>> {
                let mut out = [sub.zero(); 3];
                for i in 0..3 {
                    match crate::field::restrict(self.c[i], ambient, sub)? {
                        Some(x) => out[i] = x,
                        None => return Ok(None),
                    }
                }
                Ok(Some($t { c: out }))
            }

            pub fn ctx_id(&self) -> u64 {
                self.c[0].ctx_id()
            }

            pub fn display(&self, k: &FieldCtx) -> String {
                format!("({}:{}:{})", k.format(self.c[0]), k.format(self.c[1]), k.format(self.c[2]))
            }

            /// All elements of the (dual) plane over `k` in canonical order.
            pub fn all(k: &FieldCtx) -> impl Iterator<Item = $t> + '_ {
                let z = k.zero();
                let o = k.one();
                std::iter::once($t { c: [z, z, o] })
                    .chain(k.elements().map(move |c| $t { c: [z, o, c] }))
                    .chain(
                        k.elements()
                            .flat_map(move |b| k.elements().map(move |c| $t { c: [o, b, c] })),
                    )
            }
        }
    };
}

triple_common!(ProjPoint);
triple_common!(ProjLine);

impl ProjPoint {
    pub fn on_line(&self, k: &FieldCtx, l: &ProjLine) -> bool {
        dot(k, &self.c, &l.c).is_zero()
    }
}

impl ProjLine {
    pub fn contains(&self, k: &FieldCtx, p: &ProjPoint) -> bool {
        p.on_line(k, self)
    }

    /// Two distinct points spanning the line, deterministic.
    pub fn basis_points(&self, k: &FieldCtx) -> (ProjPoint, ProjPoint) {
        let [a, b, c] = self.c;
        let (z, o) = (k.zero(), k.one());
        // the normalized leading coefficient is 1
        if !a.is_zero() {
            let p = ProjPoint { c: normalize(k, [k.neg(b), o, z]).unwrap() };
            let q = ProjPoint { c: normalize(k, [k.neg(c), z, o]).unwrap() };
            (p, q)
        } else if !b.is_zero() {
            (ProjPoint { c: [o, z, z] }, ProjPoint { c: normalize(k, [z, k.neg(c), o]).unwrap() })
        } else {
            (ProjPoint { c: [o, z, z] }, ProjPoint { c: [z, o, z] })
        }
    }

    /// Points of the line over `k` (q + 1 of them).
    pub fn points(&self, k: &FieldCtx) -> Vec<ProjPoint> {
        let (a, b) = self.basis_points(k);
        let mut out = vec![a];
        out.extend(k.elements().map(|t| {
            let c = [0, 1, 2].map(|i| k.add(k.mul(t, a.c[i]), b.c[i]));
            ProjPoint::new(k, c).unwrap()
        }));
        out.sort();
        out
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.c.iter().map(|x| x.value().to_string()).collect();
        write!(f, "({})", v.join(":"))
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.c.iter().map(|x| x.value().to_string()).collect();
        write!(f, "[{}]", v.join(":"))
    }
}

/// The line through two distinct points.
pub fn line_through(k: &FieldCtx, p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(Error::CoincidentPoints(p.display(k)));
    }
    ProjLine::new(k, cross(k, &p.c, &q.c))
}

/// The intersection point of two distinct lines.
pub fn meet(k: &FieldCtx, l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    if l == m {
        return Err(Error::CoincidentPoints(l.display(k)));
    }
    ProjPoint::new(k, cross(k, &l.c, &m.c))
}

pub fn collinear(k: &FieldCtx, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    dot(k, &cross(k, &a.c, &b.c), &c.c).is_zero()
}
