//! The FRT bialgebra of a Hecke symmetry: normal forms, points, characters,
//! quantum powers and the characteristic equation.

mod ncpoly;

use thiserror::Error;

use crate::heckealg::primitive_idempotent;
use crate::linalg::Matrix;
use crate::partitions::{syt, Partition};
use crate::rmatrix::{multi_index, HeckeSymmetry, RMatrixError, RhoTable, TensorOperator};
use crate::scalar::Scalar;

pub use ncpoly::{NCPoly, RewriteSystem, Rule, Strategy, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QMatrixError {
    #[error("not a point: {0}")]
    InvalidPoint(String),
    #[error("image of the antisymmetrizer has dimension {0}, not 1")]
    NotRankOne(usize),
    #[error("two rules share a leading word")]
    NotOrientable,
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
}

/// An r×r matrix A with R A₁A₂ = A₁A₂ R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPoint {
    a: Matrix,
}

impl MatrixPoint {
    pub fn new(h: &HeckeSymmetry, a: Matrix) -> Result<Self, QMatrixError> {
        let r = h.r();
        if a.rows() != r || a.cols() != r {
            return Err(QMatrixError::InvalidPoint(format!(
                "expected {r}x{r}, found {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let aa = TensorOperator::tensor_power(&a, 2);
        if (h.matrix() * &aa) != (&aa * h.matrix()) {
            return Err(QMatrixError::InvalidPoint("R A1 A2 != A1 A2 R".to_string()));
        }
        Ok(MatrixPoint { a })
    }

    pub fn diagonal(h: &HeckeSymmetry, d: &[Scalar]) -> Result<Self, QMatrixError> {
        let r = d.len();
        let a = Matrix::from_fn(
            r,
            r,
            |i, j| if i == j { d[i].clone() } else { Scalar::zero() },
        );
        Self::new(h, a)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    /// Diagonal entries, when the matrix is diagonal.
    pub fn as_diagonal(&self) -> Option<Vec<Scalar>> {
        let r = self.a.rows();
        for i in 0..r {
            for j in 0..r {
                if i != j && !self.a[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        Some((0..r).map(|i| self.a[(i, i)].clone()).collect())
    }
}

/// Nonzero (I, Π m[i_t, j_t]) over multi-indices I, for a fixed J.
fn tensor_column(m: &Matrix, j: &[usize]) -> Vec<(Vec<usize>, Scalar)> {
    let r = m.rows();
    let mut out = vec![(Vec::new(), Scalar::one())];
    for &jt in j {
        let mut next = Vec::new();
        for (idx, c) in &out {
            for i in 0..r {
                let v = &m[(i, jt)];
                if !v.is_zero() {
                    let mut ni = idx.clone();
                    ni.push(i);
                    next.push((ni, c * v));
                }
            }
        }
        out = next;
    }
    out
}

/// E_R for a Hecke symmetry: its rewriting system and the characters built on it.
#[derive(Clone, Debug)]
pub struct FrtAlgebra {
    h: HeckeSymmetry,
    rs: RewriteSystem,
}

impl FrtAlgebra {
    pub fn new(h: HeckeSymmetry) -> Self {
        let rs = RewriteSystem::frt(&h);
        FrtAlgebra { h, rs }
    }

    pub fn symmetry(&self) -> &HeckeSymmetry {
        &self.h
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rs
    }

    fn r(&self) -> usize {
        self.h.r()
    }

    fn gen(&self, i: usize, j: usize) -> u16 {
        (i * self.r() + j) as u16
    }

    /// q^{n(r+1)/2} tr(D^{⊗n} F Z^{⊗n}), unreduced.
    pub fn phi_raw(&self, f: &TensorOperator) -> Result<NCPoly, QMatrixError> {
        let r = self.r();
        let d = self.h.closure()?.d();
        let n = f.degree();
        let mut out = NCPoly::zero(r);
        for (row, col, v) in f.entries() {
            // D^{⊗n}[I, row] F[row, col] Z^{col}_I
            let jdx = multi_index(r, n, row);
            let kdx = multi_index(r, n, col);
            for (idx, w) in tensor_column(d, &jdx) {
                let word: Word = (0..n).map(|t| self.gen(kdx[t], idx[t])).collect();
                out.add_term(word, &(v * &w));
            }
        }
        Ok(out.scale(&Scalar::p_pow((n * (r + 1)) as i64)))
    }

    pub fn phi(&self, f: &TensorOperator) -> Result<NCPoly, QMatrixError> {
        Ok(self.rs.normal_form(&self.phi_raw(f)?))
    }

    /// (H_k, E_k) = (Φ(X_k), Φ(Y_k)) in normal form; H_0 = E_0 = 1.
    pub fn symmetric_chars(&self, k: usize) -> Result<(NCPoly, NCPoly), QMatrixError> {
        if k == 0 {
            return Ok((NCPoly::one(self.r()), NCPoly::one(self.r())));
        }
        let (x, y) = self.h.symmetrizers(k);
        Ok((self.phi(&x)?, self.phi(&y)?))
    }

    /// The quantum power as an r×r matrix of unreduced polynomials:
    ///
    /// ```text
    ///  (Z^{q*n})^a_b = t^{n-1} (D^{⊗(n-1)})^I_J (R_{n-1}⋯R_1)^{J a}_{K k} Z^K_I z^k_b
    /// ```
    ///
    /// with t = q^{(r+1)/2}, so Z^{q*1} = Z. For n = 0 this returns t^{-1}·Id.
    pub fn quantum_power_raw(&self, n: usize) -> Result<Vec<Vec<NCPoly>>, QMatrixError> {
        let r = self.r();
        let mut out = vec![vec![NCPoly::zero(r); r]; r];
        if n == 0 {
            let c = Scalar::p_pow(-(r as i64 + 1));
            for (a, row) in out.iter_mut().enumerate() {
                row[a] = NCPoly::constant(r, c.clone());
            }
            return Ok(out);
        }
        let d = self.h.closure()?.d();
        let mut op = TensorOperator::identity(r, n);
        for i in 1..n {
            op = &self.h.local(i, n) * &op;
        }
        let t = Scalar::p_pow(((n - 1) * (r + 1)) as i64);
        for (row, col, v) in op.entries() {
            let out_idx = multi_index(r, n, row);
            let in_idx = multi_index(r, n, col);
            let (jdx, a) = (&out_idx[..n - 1], out_idx[n - 1]);
            let (kdx, k) = (&in_idx[..n - 1], in_idx[n - 1]);
            for (idx, w) in tensor_column(d, jdx) {
                let c = &(v * &w) * &t;
                let mut word: Word = (0..n - 1).map(|s| self.gen(kdx[s], idx[s])).collect();
                word.push(0);
                for b in 0..r {
                    word[n - 1] = self.gen(k, b);
                    out[a][b].add_term(word.clone(), &c);
                }
            }
        }
        Ok(out)
    }

    pub fn quantum_power(&self, n: usize) -> Result<Vec<Vec<NCPoly>>, QMatrixError> {
        let raw = self.quantum_power_raw(n)?;
        Ok(raw
            .iter()
            .map(|row| row.iter().map(|p| self.rs.normal_form(p)).collect())
            .collect())
    }

    fn e_coeff(k: usize, plain_signs: bool) -> Scalar {
        let c = if plain_signs {
            Scalar::one()
        } else {
            Scalar::q_pow(k as i64)
        };
        if k % 2 == 1 {
            -c
        } else {
            c
        }
    }

    /// Σ_{k=0}^{r} (-q)^k E_k · Z^{q*(top-k)}, reduced, with E_k on the left.
    /// `top = r` is the characteristic equation, `top = r + 1` its lift to
    /// degree r+1. With `plain_signs` the coefficients are (-1)^k and Z^{q*0} = Id.
    pub fn characteristic_matrix(
        &self,
        top: usize,
        plain_signs: bool,
    ) -> Result<Vec<Vec<NCPoly>>, QMatrixError> {
        let r = self.r();
        assert!(top >= r);
        let mut acc = vec![vec![NCPoly::zero(r); r]; r];
        for k in 0..=r {
            let (_, e) = self.symmetric_chars(k)?;
            let e = e.scale(&Self::e_coeff(k, plain_signs));
            let pw = if plain_signs && top == k {
                let mut id = vec![vec![NCPoly::zero(r); r]; r];
                for (a, row) in id.iter_mut().enumerate() {
                    row[a] = NCPoly::one(r);
                }
                id
            } else {
                self.quantum_power_raw(top - k)?
            };
            for a in 0..r {
                for b in 0..r {
                    acc[a][b] = acc[a][b].add(&self.rs.mul(&e, &pw[a][b]));
                }
            }
        }
        Ok(acc)
    }

    /// True iff every entry of the characteristic matrix reduces to 0.
    pub fn cayley_hamilton_symbolic(&self) -> Result<bool, QMatrixError> {
        let m = self.characteristic_matrix(self.r(), false)?;
        Ok(m.iter().flatten().all(NCPoly::is_zero))
    }

    /// The characteristic matrix evaluated at a point.
    pub fn cayley_hamilton_at(&self, a: &MatrixPoint) -> Result<Matrix, QMatrixError> {
        let r = self.r();
        let mut acc = Matrix::zeros(r, r);
        for k in 0..=r {
            let ek = if k == 0 {
                Scalar::one()
            } else {
                let (_, y) = self.h.symmetrizers(k);
                self.phi_raw(&y)?.eval(a.matrix())
            };
            let ek = &ek * &Self::e_coeff(k, false);
            let pw = self.quantum_power_raw(r - k)?;
            for i in 0..r {
                for j in 0..r {
                    acc[(i, j)] = &acc[(i, j)] + &(&ek * &pw[i][j].eval(a.matrix()));
                }
            }
        }
        Ok(acc)
    }

    /// Φ(M_λ) at a point: q^{n(r+1)/2} tr(D^{⊗n} ρ_n(E_λ) A^{⊗n}).
    pub fn char_at_point(
        &self,
        shape: &Partition,
        a: &MatrixPoint,
    ) -> Result<Scalar, QMatrixError> {
        if shape.length() > self.r() {
            return Ok(Scalar::zero());
        }
        let n = shape.size();
        if n == 0 {
            return Ok(Scalar::one());
        }
        let t = syt(shape).into_iter().next().expect("nonempty shape");
        let f = RhoTable::new(&self.h, n).apply(&primitive_idempotent(&t));
        Ok(self.phi_raw(&f)?.eval(a.matrix()))
    }

    /// Φ(M_λ) in normal form.
    pub fn schur_element(&self, shape: &Partition) -> Result<NCPoly, QMatrixError> {
        let n = shape.size();
        if n == 0 {
            return Ok(NCPoly::one(self.r()));
        }
        let t = syt(shape).into_iter().next().expect("nonempty shape");
        let f = RhoTable::new(&self.h, n).apply(&primitive_idempotent(&t));
        self.phi(&f)
    }

    /// The scalar by which A^{⊗r} acts on the image of Y_r.
    pub fn quantum_determinant(&self, a: &MatrixPoint) -> Result<Scalar, QMatrixError> {
        let r = self.r();
        let (_, y) = self.h.symmetrizers(r);
        let cs = y.to_matrix().column_space();
        if cs.cols() != 1 {
            return Err(QMatrixError::NotRankOne(cs.cols()));
        }
        let ar = TensorOperator::tensor_power(a.matrix(), r);
        let v: Vec<Scalar> = (0..cs.rows()).map(|i| cs[(i, 0)].clone()).collect();
        let w: Vec<Scalar> = (0..cs.rows())
            .map(|i| ar.row(i).map(|(j, x)| x * &v[j]).sum())
            .collect();
        let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero column");
        let lambda = &w[pivot] * &v[pivot].inv().expect("nonzero");
        if w.iter().zip(&v).any(|(wi, vi)| *wi != vi * &lambda) {
            return Err(QMatrixError::InvalidPoint(
                "A^{⊗r} does not preserve the antisymmetric line".to_string(),
            ));
        }
        Ok(lambda)
    }

    /// The closed GL_q(r) formula
    /// E_k = p^{k(r+1)} Σ_{i_1<⋯<i_k} p^{2Σi} Σ_σ (-p)^{-l(σ)} z^{i_{σ1}}_{i_1}⋯z^{i_{σk}}_{i_k},
    /// with unit sign exponents, for comparison with Φ(Y_k).
    pub fn elementary_minor_sum(&self, k: usize) -> NCPoly {
        self.elementary_minor_sum_with(k, 1, -1)
    }

    /// The same sum with p^{2·ws·Σi} and (-p)^{ls·l(σ)}.
    pub fn elementary_minor_sum_with(&self, k: usize, ws: i64, ls: i64) -> NCPoly {
        let r = self.r();
        let mut out = NCPoly::zero(r);
        let perms = crate::heckealg::Permutation::all(k);
        for subset in subsets(r, k) {
            let weight: i64 = subset.iter().map(|&i| 2 * ws * (i as i64 + 1)).sum();
            let pre = Scalar::p_pow((k * (r + 1)) as i64 + weight);
            for s in &perms {
                let l = s.length() as i64;
                let mut c = &pre * &Scalar::p_pow(ls * l);
                if l % 2 == 1 {
                    c = -c;
                }
                let word: Word = (0..k)
                    .map(|t| self.gen(subset[s.apply(t)], subset[t]))
                    .collect();
                out.add_term(word, &c);
            }
        }
        self.rs.normal_form(&out)
    }
}

fn subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    rec(0, r, k, &mut cur, &mut out);
    out
}

/// A random diagonal with entries c·p^e, c a small nonzero rational.
pub fn random_diagonal<R: rand::Rng>(rng: &mut R, r: usize) -> Vec<Scalar> {
    (0..r)
        .map(|_| {
            let mut num = 0;
            while num == 0 {
                num = rng.gen_range(-6i64..=6);
            }
            let den = rng.gen_range(1i64..=5);
            let c = Scalar::from_rational(num_rational::BigRational::new(num.into(), den.into()));
            &c * &Scalar::p_pow(rng.gen_range(-2i64..=2))
        })
        .collect()
}
