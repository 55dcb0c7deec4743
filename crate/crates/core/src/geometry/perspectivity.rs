use super::matrix::{Mat3, ProjMatrix};
use super::point::{cross, dot, ProjPoint};
use crate::field::{FieldCtx, FieldElem};

/// Lazy enumeration of the perspectivities with a given center: the classes
/// of `I + v wᵀ` with `1 + w·v ≠ 0`, where `v` is the normalized coordinate
/// vector of the center. Members with a zero scalar part are all singular,
/// so the family has `q³ − q²` elements.
pub struct Perspectivities<'a> {
    k: &'a FieldCtx,
    v: [FieldElem; 3],
    q: u64,
    next: u64,
}

pub fn perspectivities_with_center<'a>(k: &'a FieldCtx, center: &ProjPoint) -> Perspectivities<'a> {
    Perspectivities { k, v: center.coords(), q: k.order(), next: 0 }
}

impl<'a> Perspectivities<'a> {
    /// Next member as a raw matrix `I + v wᵀ`, skipping singular ones.
    pub fn next_raw(&mut self) -> Option<Mat3> {
        let k = self.k;
        while self.next < self.q * self.q * self.q {
            let i = self.next;
            self.next += 1;
            let w = [i / (self.q * self.q), (i / self.q) % self.q, i % self.q].map(|x| k.from_u64(x));
            if k.add(k.one(), dot(k, &w, &self.v)).is_zero() {
                continue;
            }
            let mut m = Mat3::identity(k).0;
            for r in 0..3 {
                for c in 0..3 {
                    m[3 * r + c] = k.add(m[3 * r + c], k.mul(self.v[r], w[c]));
                }
            }
            return Some(Mat3(m));
        }
        None
    }

    pub fn family_size(&self) -> u64 {
        self.q * self.q * self.q - self.q * self.q
    }
}

impl<'a> Iterator for Perspectivities<'a> {
    type Item = ProjMatrix;

    fn next(&mut self) -> Option<ProjMatrix> {
        let m = self.next_raw()?;
        Some(ProjMatrix::new(self.k, m).expect("nonsingular member"))
    }
}

/// Whether `m` fixes `center` and maps each line through it to itself.
pub fn is_perspectivity(k: &FieldCtx, m: &ProjMatrix, center: &ProjPoint) -> bool {
    if m.apply(k, center) != *center {
        return false;
    }
    // the pencil through v is a projective line; a map of it fixing three
    // members is the identity
    let v = center.coords();
    let (z, o) = (k.zero(), k.one());
    let basis = [[o, z, z], [z, o, z], [z, z, o]];
    let (a, b) = (0..3)
        .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
        .map(|(i, j)| (basis[i], basis[j]))
        .find(|(a, b)| !dot(k, &cross(k, a, b), &v).is_zero())
        .expect("some pair of basis vectors completes v to a frame");
    let ab = [0, 1, 2].map(|i| k.add(a[i], b[i]));
    let mm = m.mat();
    [a, b, ab].iter().all(|e| dot(k, &cross(k, &v, e), &mm.apply(k, e)).is_zero())
}
