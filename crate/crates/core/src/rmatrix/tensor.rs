use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A sparse operator on V^{⊗n}, dim V = r.
///
/// Basis vectors are multi-indices (i_1..i_n), 0-based, ordered
/// lexicographically with i_1 most significant. Entry `(row, col)` is the
/// coefficient of output `row` on input `col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    r: usize,
    n: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl TensorOperator {
    pub fn zero(r: usize, n: usize) -> Self {
        TensorOperator {
            r,
            n,
            rows: vec![BTreeMap::new(); r.pow(n as u32)],
        }
    }

    pub fn identity(r: usize, n: usize) -> Self {
        let mut t = Self::zero(r, n);
        for i in 0..t.dim() {
            t.rows[i].insert(i, Scalar::one());
        }
        t
    }

    pub fn from_matrix(r: usize, n: usize, m: &Matrix) -> Self {
        let mut t = Self::zero(r, n);
        assert_eq!(m.rows(), t.dim());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                t.set(i, j, m[(i, j)].clone());
            }
        }
        t
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.rows[row]
            .get(&col)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        if v.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, v);
        }
    }

    fn add_at(&mut self, row: usize, col: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[row].entry(col).or_insert_with(Scalar::zero);
        *e += v;
        if e.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    /// Nonzero entries of a row.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.rows[row].iter().map(|(&c, v)| (c, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.r, self.n);
        if c.is_zero() {
            return out;
        }
        for (i, j, v) in self.entries() {
            out.rows[i].insert(j, v * c);
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, j, v) in self.entries() {
            m[(i, j)] = v.clone();
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    /// Multi-index of a basis position.
    pub fn multi_index(&self, pos: usize) -> Vec<usize> {
        multi_index(self.r, self.n, pos)
    }

    /// A ⊗ B on V^{⊗(n+m)}.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let mut out = Self::zero(self.r, self.n + other.n);
        let d = other.dim();
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.rows[i * d + k].insert(j * d + l, a * b);
            }
        }
        out
    }

    /// The r×r matrix `m` acting on every factor: m^{⊗n}.
    pub fn tensor_power(m: &Matrix, n: usize) -> Self {
        let r = m.rows();
        let base = Self::from_matrix(r, 1, m);
        let mut acc = Self::identity(r, 0);
        for _ in 0..n {
            acc = acc.kron(&base);
        }
        acc
    }

    /// Embeds a two-factor operator on factors (i, i+1), 1-based, of V^{⊗n}.
    pub fn embed_pair(op: &TensorOperator, i: usize, n: usize) -> Self {
        assert_eq!(op.n, 2);
        assert!(i >= 1 && i < n);
        let r = op.r;
        let before = r.pow((i - 1) as u32);
        let after = r.pow((n - i - 1) as u32);
        let mut out = Self::zero(r, n);
        for a in 0..before {
            for (row, col, v) in op.entries() {
                for b in 0..after {
                    let ro = (a * r * r + row) * after + b;
                    let co = (a * r * r + col) * after + b;
                    out.rows[ro].insert(co, v.clone());
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (i, j, v) in self.entries() {
            out.rows[j].insert(i, v.clone());
        }
        out
    }
}

pub(crate) fn multi_index(r: usize, n: usize, mut pos: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for k in (0..n).rev() {
        idx[k] = pos % r;
        pos /= r;
    }
    idx
}

#[cfg(test)]
fn linear_index(r: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * r + i)
}

impl Mul for &TensorOperator {
    type Output = TensorOperator;
    fn mul(self, rhs: &TensorOperator) -> TensorOperator {
        assert_eq!(
            (self.r, self.n),
            (rhs.r, rhs.n),
            "tensor operator size mismatch"
        );
        let mut out = TensorOperator::zero(self.r, self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &rhs.rows[k] {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        out
    }
}

impl Add for &TensorOperator {
    type Output = TensorOperator;
    fn add(self, rhs: &TensorOperator) -> TensorOperator {
        assert_eq!(
            (self.r, self.n),
            (rhs.r, rhs.n),
            "tensor operator size mismatch"
        );
        let mut out = self.clone();
        for (i, j, v) in rhs.entries() {
            out.add_at(i, j, v);
        }
        out
    }
}

impl Sub for &TensorOperator {
    type Output = TensorOperator;
    fn sub(self, rhs: &TensorOperator) -> TensorOperator {
        self + &rhs.scale(&Scalar::from_int(-1))
    }
}
