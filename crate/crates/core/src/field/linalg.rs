//! Dense Gaussian elimination over a [`FieldCtx`].

use super::{FieldCtx, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(k: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![k.zero(); rows * cols] }
    }

    pub fn identity(k: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zeros(k, n, n);
        for i in 0..n {
            m.data[i * n + i] = k.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, k: &FieldCtx, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| k.sum(self.row(i).iter().zip(v).map(|(&a, &b)| k.mul(a, b))))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Nullspace,
    Solve,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// Basis of the right kernel, one vector per free column in ascending order.
    Nullspace(Vec<Vec<FieldElem>>),
    Solution(Vec<FieldElem>),
    Inconsistent,
}

/// Rows of a matrix kept in reduced row echelon form; rows can be fed one
/// at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows and inserts it if independent.
    /// Returns whether the rank grew.
    pub fn push(&mut self, k: &FieldCtx, mut v: Vec<FieldElem>) -> bool {
        assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = k.sub(*x, k.mul(c, r));
                }
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = k.inv(v[pc]);
        for x in v.iter_mut() {
            *x = k.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if !c.is_zero() {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = k.sub(*x, k.mul(c, r));
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, v);
        true
    }

    pub fn nullspace(&self, k: &FieldCtx) -> Vec<Vec<FieldElem>> {
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if self.pivots.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                v[pc] = k.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Exact Gaussian elimination. In `Solve` mode the last column of `m` is the
/// right-hand side.
pub fn solve_linear(k: &FieldCtx, m: &Matrix, mode: SolveMode) -> LinearSolution {
    match mode {
        SolveMode::Nullspace => {
            let mut e = Echelon::new(m.cols);
            for i in 0..m.rows {
                e.push(k, m.row(i).to_vec());
            }
            LinearSolution::Nullspace(e.nullspace(k))
        }
        SolveMode::Solve => {
            assert!(m.cols >= 1, "augmented matrix needs a right-hand side column");
            let n = m.cols - 1;
            let mut e = Echelon::new(m.cols);
            for i in 0..m.rows {
                e.push(k, m.row(i).to_vec());
            }
            if e.pivots.last() == Some(&n) {
                return LinearSolution::Inconsistent;
            }
            let mut x = vec![k.zero(); n];
            for (row, &pc) in e.rows.iter().zip(&e.pivots) {
                x[pc] = row[n];
            }
            LinearSolution::Solution(x)
        }
    }
}

/// Kernel basis of `m`.
pub fn nullspace(k: &FieldCtx, m: &Matrix) -> Vec<Vec<FieldElem>> {
    match solve_linear(k, m, SolveMode::Nullspace) {
        LinearSolution::Nullspace(b) => b,
        _ => unreachable!(),
    }
}

/// Solves `m x = rhs`.
pub fn solve(k: &FieldCtx, m: &Matrix, rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let rows = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i]);
            r
        })
        .collect();
    match solve_linear(k, &Matrix::from_rows(rows), SolveMode::Solve) {
        LinearSolution::Solution(x) => Some(x),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_has_trivial_kernel() {
        let k = make_field(13, 1, 0).unwrap();
        assert!(nullspace(&k, &Matrix::identity(&k, 4)).is_empty());
    }

    #[test]
    fn zero_row_has_full_kernel() {
        let k = make_field(13, 1, 0).unwrap();
        let b = nullspace(&k, &Matrix::zeros(&k, 1, 3));
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn random_invertible_solve() {
        let k = make_field(13, 1, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut solved = 0;
        while solved < 20 {
            let m = Matrix::from_rows(
                (0..5).map(|_| (0..5).map(|_| k.from_u64(rng.gen_range(0..13))).collect()).collect(),
            );
            if !nullspace(&k, &m).is_empty() {
                continue;
            }
            let rhs: Vec<FieldElem> = (0..5).map(|_| k.from_u64(rng.gen_range(0..13))).collect();
            let x = solve(&k, &m, &rhs).unwrap();
            assert_eq!(m.mul_vec(&k, &x), rhs);
            solved += 1;
        }
    }

    #[test]
    fn inconsistent_is_reported() {
        let k = make_field(7, 1, 0).unwrap();
        let m = Matrix::from_rows(vec![vec![k.one(), k.one()], vec![k.one(), k.one()]]);
        assert_eq!(solve(&k, &m, &[k.one(), k.from_int(2)]), None);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let k = make_field(3, 2, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..8);
            let m = Matrix::from_rows(
                (0..r).map(|_| (0..c).map(|_| k.from_u64(rng.gen_range(0..9))).collect()).collect(),
            );
            let basis = nullspace(&k, &m);
            for v in &basis {
                assert!(m.mul_vec(&k, v).iter().all(|x| x.is_zero()));
            }
            let mut e = Echelon::new(c);
            for i in 0..r {
                e.push(&k, m.row(i).to_vec());
            }
            assert_eq!(e.rank() + basis.len(), c);
        }
    }
}
