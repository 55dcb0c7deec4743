use std::fmt;

use super::point::{ProjLine, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{embed, FieldCtx, FieldElem};

/// A plain 3×3 matrix, row-major, no normalization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat3(pub [FieldElem; 9]);

impl Mat3 {
    pub fn identity(k: &FieldCtx) -> Mat3 {
        let (z, o) = (k.zero(), k.one());
        Mat3([o, z, z, z, o, z, z, z, o])
    }

    pub fn diag(k: &FieldCtx, a: FieldElem, b: FieldElem, c: FieldElem) -> Mat3 {
        let z = k.zero();
        Mat3([a, z, z, z, b, z, z, z, c])
    }

    pub fn from_ints(k: &FieldCtx, e: [i64; 9]) -> Mat3 {
        Mat3(e.map(|x| k.from_int(x)))
    }

    /// Matrix with the given columns.
    pub fn from_columns(c: [[FieldElem; 3]; 3]) -> Mat3 {
        Mat3([c[0][0], c[1][0], c[2][0], c[0][1], c[1][1], c[2][1], c[0][2], c[1][2], c[2][2]])
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> FieldElem {
        self.0[3 * i + j]
    }

    pub fn mul(&self, k: &FieldCtx, o: &Mat3) -> Mat3 {
        let mut out = [k.zero(); 9];
        for i in 0..3 {
            for j in 0..3 {
                out[3 * i + j] = k.add(
                    k.add(k.mul(self.at(i, 0), o.at(0, j)), k.mul(self.at(i, 1), o.at(1, j))),
                    k.mul(self.at(i, 2), o.at(2, j)),
                );
            }
        }
        Mat3(out)
    }

    pub fn pow(&self, k: &FieldCtx, mut e: u64) -> Mat3 {
        let mut acc = Mat3::identity(k);
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &b);
            }
            b = b.mul(k, &b);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn apply(&self, k: &FieldCtx, v: &[FieldElem; 3]) -> [FieldElem; 3] {
        [0, 1, 2].map(|i| {
            k.add(
                k.add(k.mul(self.at(i, 0), v[0]), k.mul(self.at(i, 1), v[1])),
                k.mul(self.at(i, 2), v[2]),
            )
        })
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]])
    }

    pub fn det(&self, k: &FieldCtx) -> FieldElem {
        let a = |i, j| self.at(i, j);
        let t0 = k.mul(a(0, 0), k.sub(k.mul(a(1, 1), a(2, 2)), k.mul(a(1, 2), a(2, 1))));
        let t1 = k.mul(a(0, 1), k.sub(k.mul(a(1, 0), a(2, 2)), k.mul(a(1, 2), a(2, 0))));
        let t2 = k.mul(a(0, 2), k.sub(k.mul(a(1, 0), a(2, 1)), k.mul(a(1, 1), a(2, 0))));
        k.add(k.sub(t0, t1), t2)
    }

    /// Adjugate: `adj(M) M = det(M) I`.
    pub fn adjugate(&self, k: &FieldCtx) -> Mat3 {
        let a = |i: usize, j: usize| self.at(i, j);
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let m = k.sub(k.mul(a(r[0], c[0]), a(r[1], c[1])), k.mul(a(r[0], c[1]), a(r[1], c[0])));
            if (i + j) % 2 == 1 {
                k.neg(m)
            } else {
                m
            }
        };
        let mut out = [k.zero(); 9];
        for i in 0..3 {
            for j in 0..3 {
                out[3 * j + i] = cof(i, j);
            }
        }
        Mat3(out)
    }

    pub fn scale(&self, k: &FieldCtx, c: FieldElem) -> Mat3 {
        Mat3(self.0.map(|x| k.mul(x, c)))
    }

    pub fn embed(&self, src: &FieldCtx, dst: &FieldCtx) -> Result<Mat3> {
        let mut out = [dst.zero(); 9];
        for (o, &x) in out.iter_mut().zip(&self.0) {
            *o = embed(x, src, dst)?;
        }
        Ok(Mat3(out))
    }
}

fn normalize9(k: &FieldCtx, m: &Mat3) -> [FieldElem; 9] {
    let lead = m.0.iter().find(|x| !x.is_zero()).expect("nonzero matrix");
    m.scale(k, k.inv(*lead)).0
}

/// An element of PGL(3): a nonsingular matrix up to scalars, normalized so
/// that its first nonzero entry (row-major) is 1. The inverse is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjMatrix {
    m: [FieldElem; 9],
    inv: [FieldElem; 9],
}

impl ProjMatrix {
    pub fn new(k: &FieldCtx, m: Mat3) -> Result<ProjMatrix> {
        if m.det(k).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = m.adjugate(k);
        Ok(ProjMatrix { m: normalize9(k, &m), inv: normalize9(k, &adj) })
    }

    pub fn identity(k: &FieldCtx) -> ProjMatrix {
        let i = Mat3::identity(k);
        ProjMatrix { m: i.0, inv: i.0 }
    }

    pub fn diag(k: &FieldCtx, a: FieldElem, b: FieldElem, c: FieldElem) -> Result<ProjMatrix> {
        ProjMatrix::new(k, Mat3::diag(k, a, b, c))
    }

    pub fn from_ints(k: &FieldCtx, e: [i64; 9]) -> Result<ProjMatrix> {
        ProjMatrix::new(k, Mat3::from_ints(k, e))
    }

    /// Normalized representative.
    pub fn mat(&self) -> Mat3 {
        Mat3(self.m)
    }

    pub fn entries(&self) -> [FieldElem; 9] {
        self.m
    }

    pub fn inverse(&self) -> ProjMatrix {
        ProjMatrix { m: self.inv, inv: self.m }
    }

    pub fn is_identity(&self, k: &FieldCtx) -> bool {
        self.m == Mat3::identity(k).0
    }

    /// `self ∘ other`.
    pub fn compose(&self, k: &FieldCtx, other: &ProjMatrix) -> ProjMatrix {
        let m = Mat3(self.m).mul(k, &Mat3(other.m));
        let inv = Mat3(other.inv).mul(k, &Mat3(self.inv));
        ProjMatrix { m: normalize9(k, &m), inv: normalize9(k, &inv) }
    }

    /// `self ∘ g ∘ self⁻¹`.
    pub fn conjugate(&self, k: &FieldCtx, g: &ProjMatrix) -> ProjMatrix {
        self.compose(k, &g.compose(k, &self.inverse()))
    }

    pub fn apply(&self, k: &FieldCtx, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(k, Mat3(self.m).apply(k, &p.coords())).expect("nonsingular image")
    }

    /// Image of a line as a point set: dual coordinates transform by M^-T.
    pub fn apply_line(&self, k: &FieldCtx, l: &ProjLine) -> ProjLine {
        ProjLine::new(k, Mat3(self.inv).transpose().apply(k, &l.coords())).expect("nonsingular image")
    }

    pub fn embed(&self, src: &FieldCtx, dst: &FieldCtx) -> Result<ProjMatrix> {
        Ok(ProjMatrix { m: Mat3(self.m).embed(src, dst)?.0, inv: Mat3(self.inv).embed(src, dst)?.0 })
    }

    pub fn ctx_id(&self) -> u64 {
        self.m[0].ctx_id()
    }

    pub fn display(&self, k: &FieldCtx) -> String {
        let rows: Vec<String> = (0..3)
            .map(|i| (0..3).map(|j| k.format(self.m[3 * i + j])).collect::<Vec<_>>().join(" "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.m.iter().map(|x| x.value().to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// Projective maps sending three non-collinear points `src[i]` to `dst[i]`
/// (up to the scalars on the frame), enumerated over the remaining torus
/// parameters. Every such map appears exactly once.
pub fn maps_between_triangles(
    k: &FieldCtx,
    src: [ProjPoint; 3],
    dst: [ProjPoint; 3],
) -> Result<impl Iterator<Item = ProjMatrix> + '_> {
    let s = Mat3::from_columns(src.map(|p| p.coords()));
    let d = Mat3::from_columns(dst.map(|p| p.coords()));
    let s_inv = ProjMatrix::new(k, s)?.inverse().mat();
    ProjMatrix::new(k, d)?;
    let units: Vec<FieldElem> = k.nonzero_elements().collect();
    let units2 = units.clone();
    Ok(units.into_iter().flat_map(move |b| {
        let units2 = units2.clone();
        units2.into_iter().map(move |c| {
            let t = Mat3::diag(k, k.one(), b, c);
            ProjMatrix::new(k, d.mul(k, &t).mul(k, &s_inv)).expect("product of nonsingular matrices")
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::geometry::point::line_through;

    #[test]
    fn scaling_invariance_is_exhaustive_over_gf4() {
        let k = make_field(2, 2, 0).unwrap();
        let w = k.primitive_element();
        for m in [
            Mat3::from_ints(&k, [1, 1, 0, 0, 1, 1, 0, 0, 1]),
            Mat3::diag(&k, w, k.one(), w),
            Mat3([k.zero(), w, k.one(), k.one(), k.zero(), k.zero(), w, w, w]),
        ] {
            let base = ProjMatrix::new(&k, m).unwrap();
            for lam in k.nonzero_elements() {
                assert_eq!(ProjMatrix::new(&k, m.scale(&k, lam)).unwrap(), base);
            }
        }
    }

    #[test]
    fn apply_examples() {
        let k = make_field(2, 2, 0).unwrap();
        let w = k.root_of_unity(3).unwrap();
        let d = ProjMatrix::diag(&k, k.one(), w, k.one()).unwrap();
        let p = ProjPoint::from_ints(&k, [0, 1, 1]).unwrap();
        let expected = ProjPoint::new(&k, [k.zero(), w, k.one()]).unwrap();
        assert_eq!(d.apply(&k, &p), expected);
        assert_eq!(d.inverse().apply(&k, &expected), p);
        for p in ProjPoint::all(&k) {
            assert_eq!(ProjMatrix::identity(&k).apply(&k, &p), p);
        }
    }

    #[test]
    fn lines_map_with_their_points() {
        let k = make_field(3, 2, 0).unwrap();
        let m = ProjMatrix::from_ints(&k, [1, 2, 0, 0, 1, 1, 2, 0, 1]).unwrap();
        let pts: Vec<ProjPoint> = ProjPoint::all(&k).take(30).collect();
        for w in pts.windows(2) {
            let l = line_through(&k, &w[0], &w[1]).unwrap();
            let ml = m.apply_line(&k, &l);
            assert!(ml.contains(&k, &m.apply(&k, &w[0])));
            assert!(ml.contains(&k, &m.apply(&k, &w[1])));
        }
    }

    #[test]
    fn singular_rejected() {
        let k = make_field(5, 1, 0).unwrap();
        assert_eq!(ProjMatrix::from_ints(&k, [1, 2, 3, 2, 4, 6, 0, 0, 1]), Err(Error::SingularMatrix));
    }

    #[test]
    fn triangle_maps_hit_targets() {
        let k = make_field(5, 1, 0).unwrap();
        let p = |c| ProjPoint::from_ints(&k, c).unwrap();
        let src = [p([1, 0, 0]), p([0, 0, 1]), p([1, 1, 1])];
        let dst = [p([1, 0, 0]), p([1, 1, 1]), p([0, 0, 1])];
        let maps: Vec<ProjMatrix> = maps_between_triangles(&k, src, dst).unwrap().collect();
        assert_eq!(maps.len(), 16);
        for m in &maps {
            for i in 0..3 {
                assert_eq!(m.apply(&k, &src[i]), dst[i]);
            }
        }
        let mut dedup = maps.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 16);
    }
}
