//! Hecke symmetries R: V⊗V → V⊗V and the operators they generate on V^{⊗n}.

mod tensor;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heckealg::{HeckeElement, Permutation};
use crate::linalg::Matrix;
use crate::partitions::Partition;
use crate::scalar::{q_int, q_int_inv, Scalar};

pub(crate) use tensor::multi_index;
pub use tensor::TensorOperator;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RMatrixError {
    #[error("R is not closed: the closure system is singular")]
    NotClosed,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("invalid R-matrix file: {0}")]
    Format(String),
}

/// P^{ab}_{cd} together with the contractions C and D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    r: usize,
    p: Vec<Scalar>,
    c: Matrix,
    d: Matrix,
}

impl Closure {
    /// P^{ab}_{cd}, 0-based.
    pub fn p(&self, a: usize, b: usize, c: usize, d: usize) -> &Scalar {
        let r = self.r;
        &self.p[((a * r + b) * r + c) * r + d]
    }

    /// C^i_j = Σ_l P^{il}_{jl}, stored with row i.
    pub fn c(&self) -> &Matrix {
        &self.c
    }

    /// D^i_j = Σ_l P^{li}_{lj}.
    pub fn d(&self) -> &Matrix {
        &self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSymmetry {
    r: usize,
    rmat: TensorOperator,
    closure: Option<Closure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub yang_baxter: bool,
    pub hecke: bool,
    pub closed: bool,
    /// The scalar c with CD = DC = c·Id, when there is one.
    pub cd_scalar: Option<Scalar>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.yang_baxter && self.hecke && self.closed
    }
}

#[derive(Serialize, Deserialize)]
struct FileEntry {
    kl: [usize; 2],
    ij: [usize; 2],
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct RMatrixFile {
    r: usize,
    entries: Vec<FileEntry>,
}

impl HeckeSymmetry {
    /// Wraps an operator on V⊗V. The closure is computed eagerly and is
    /// `None` when the closure system is singular.
    pub fn new(rmat: TensorOperator) -> Result<Self, RMatrixError> {
        if rmat.degree() != 2 {
            return Err(RMatrixError::SizeMismatch {
                expected: 2,
                found: rmat.degree(),
            });
        }
        let r = rmat.r();
        let closure = compute_closure_of(&rmat).ok();
        Ok(HeckeSymmetry { r, rmat, closure })
    }

    /// The Drinfel'd–Jimbo R-matrix of type A_{r-1}.
    pub fn dj(r: usize) -> Self {
        assert!(r >= 1);
        let q = Scalar::q();
        let qm1 = &q - &Scalar::one();
        let p = Scalar::p();
        let mut m = TensorOperator::zero(r, 2);
        for i in 0..r {
            for j in 0..r {
                let col = i * r + j;
                if i == j {
                    m.set(col, col, q.clone());
                } else {
                    // (k,l) = (j,i) always gets p; (k,l) = (i,j) gets q-1 when i<j.
                    m.set(j * r + i, col, p.clone());
                    if i < j {
                        m.set(col, col, qm1.clone());
                    }
                }
            }
        }
        HeckeSymmetry::new(m).expect("degree 2")
    }

    pub fn from_json(text: &str) -> Result<Self, RMatrixError> {
        let file: RMatrixFile =
            serde_json::from_str(text).map_err(|e| RMatrixError::Format(e.to_string()))?;
        let r = file.r;
        if r == 0 {
            return Err(RMatrixError::Format("r must be positive".into()));
        }
        let mut m = TensorOperator::zero(r, 2);
        for e in file.entries {
            for &x in e.kl.iter().chain(e.ij.iter()) {
                if x == 0 || x > r {
                    return Err(RMatrixError::IndexOutOfRange(x, r));
                }
            }
            let row = (e.kl[0] - 1) * r + e.kl[1] - 1;
            let col = (e.ij[0] - 1) * r + e.ij[1] - 1;
            let v = &m.get(row, col) + &e.coeff;
            m.set(row, col, v);
        }
        HeckeSymmetry::new(m)
    }

    pub fn to_json(&self) -> String {
        let r = self.r;
        let entries = self
            .rmat
            .entries()
            .map(|(row, col, v)| FileEntry {
                kl: [row / r + 1, row % r + 1],
                ij: [col / r + 1, col % r + 1],
                coeff: v.clone(),
            })
            .collect();
        serde_json::to_string(&RMatrixFile { r, entries }).expect("serializable")
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn matrix(&self) -> &TensorOperator {
        &self.rmat
    }

    /// R^{kl}_{ij}, 0-based.
    pub fn entry(&self, k: usize, l: usize, i: usize, j: usize) -> Scalar {
        let r = self.r;
        self.rmat.get(k * r + l, i * r + j)
    }

    pub fn closure(&self) -> Result<&Closure, RMatrixError> {
        self.closure.as_ref().ok_or(RMatrixError::NotClosed)
    }

    /// R_i on V^{⊗n}.
    pub fn local(&self, i: usize, n: usize) -> TensorOperator {
        TensorOperator::embed_pair(&self.rmat, i, n)
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let r1 = self.local(1, 3);
        let r2 = self.local(2, 3);
        let yang_baxter = &(&r1 * &r2) * &r1 == &(&r2 * &r1) * &r2;
        let id = TensorOperator::identity(self.r, 2);
        let q = Scalar::q();
        let a = &self.rmat - &id.scale(&q);
        let b = &self.rmat + &id;
        let hecke = (&a * &b).is_zero();
        let cd_scalar = self.closure.as_ref().and_then(|cl| {
            let cd = &cl.c * &cl.d;
            let dc = &cl.d * &cl.c;
            let s = cd[(0, 0)].clone();
            (cd == dc && cd == Matrix::identity(self.r).scale(&s)).then_some(s)
        });
        AxiomReport {
            yang_baxter,
            hecke,
            closed: self.closure.is_some(),
            cd_scalar,
        }
    }

    /// ρ_n(T_w) = R_{i1}⋯R_{ik} along a reduced word.
    pub fn rho_basis(&self, w: &Permutation) -> TensorOperator {
        let n = w.size();
        let mut acc = TensorOperator::identity(self.r, n);
        for &i in w.reduced_word().iter().rev() {
            acc = &self.local(i, n) * &acc;
        }
        acc
    }

    pub fn rho(&self, n: usize, x: &HeckeElement) -> Result<TensorOperator, RMatrixError> {
        if x.n() != n {
            return Err(RMatrixError::SizeMismatch {
                expected: n,
                found: x.n(),
            });
        }
        Ok(RhoTable::new(self, n).apply(x))
    }

    /// (X_n, Y_n): the q-symmetrizer and q-antisymmetrizer on V^{⊗n}.
    pub fn symmetrizers(&self, n: usize) -> (TensorOperator, TensorOperator) {
        assert!(n >= 1);
        let mut x = TensorOperator::identity(self.r, 1);
        let mut y = x.clone();
        let one = TensorOperator::identity(self.r, 1);
        for m in 2..=n {
            x = x.kron(&one);
            y = y.kron(&one);
            let mut chain = TensorOperator::identity(self.r, m);
            let mut sx = chain.clone();
            let mut sy = chain.clone();
            // chain = R_{m-k} ⋯ R_{m-1}
            for k in 1..m {
                chain = &self.local(m - k, m) * &chain;
                sx = &sx + &chain;
                let mut coeff = Scalar::q_pow(-(k as i64));
                if k % 2 == 1 {
                    coeff = -coeff;
                }
                sy = &sy + &chain.scale(&coeff);
            }
            let nx = q_int(m as i64).inv().expect("nonzero");
            let ny = q_int_inv(m as i64).inv().expect("nonzero");
            x = (&sx * &x).scale(&nx);
            y = (&sy * &y).scale(&ny);
        }
        (x, y)
    }

    /// Y_{rank+1} = 0 and Y_rank has rank one.
    pub fn even_rank_check(&self, rank: usize) -> bool {
        if rank == 0 {
            return false;
        }
        let (_, y_top) = self.symmetrizers(rank + 1);
        if !y_top.is_zero() {
            return false;
        }
        let (_, y) = self.symmetrizers(rank);
        y.rank() == 1
    }

    /// q^{n(r+1)/2} tr(C^{⊗n} F).
    pub fn braided_trace(&self, f: &TensorOperator) -> Result<Scalar, RMatrixError> {
        if f.r() != self.r {
            return Err(RMatrixError::SizeMismatch {
                expected: self.r,
                found: f.r(),
            });
        }
        let c = self.closure()?.c();
        let n = f.degree();
        let mut acc = Scalar::zero();
        for (row, col, v) in f.entries() {
            // C^{⊗n}[col, row] F[row, col]
            let a = multi_index(self.r, n, col);
            let b = multi_index(self.r, n, row);
            let mut w = v.clone();
            for k in 0..n {
                let ck = &c[(a[k], b[k])];
                if ck.is_zero() {
                    w = Scalar::zero();
                    break;
                }
                w = &w * ck;
            }
            acc += &w;
        }
        Ok(acc.shift_p((n * (self.r + 1)) as i64))
    }
}

/// Solves Σ_{p,q} P^{ip}_{jq} R^{qk}_{pl} = δ^i_l δ^k_j.
fn compute_closure_of(rmat: &TensorOperator) -> Result<Closure, RMatrixError> {
    let r = rmat.r();
    let rr = r * r;
    // T[(p,q),(l,k)] = R^{qk}_{pl}; the unknowns X[(i,j),(p,q)] = P^{ip}_{jq} satisfy X T = I.
    let t = Matrix::from_fn(rr, rr, |a, b| {
        let (p, q) = (a / r, a % r);
        let (l, k) = (b / r, b % r);
        rmat.get(q * r + k, p * r + l)
    });
    let x = t.inverse().ok_or(RMatrixError::NotClosed)?;
    let mut pv = vec![Scalar::zero(); rr * rr];
    for i in 0..r {
        for j in 0..r {
            for p in 0..r {
                for q in 0..r {
                    pv[((i * r + p) * r + j) * r + q] = x[(i * r + j, p * r + q)].clone();
                }
            }
        }
    }
    let at = |a: usize, b: usize, c: usize, d: usize| &pv[((a * r + b) * r + c) * r + d];
    let c = Matrix::from_fn(r, r, |i, j| (0..r).map(|l| at(i, l, j, l).clone()).sum());
    let d = Matrix::from_fn(r, r, |i, j| (0..r).map(|l| at(l, i, l, j).clone()).sum());
    Ok(Closure { r, p: pv, c, d })
}

/// ρ_n(T_w) for every w ∈ S_n.
pub struct RhoTable {
    r: usize,
    n: usize,
    mats: HashMap<Permutation, TensorOperator>,
}

impl RhoTable {
    pub fn new(h: &HeckeSymmetry, n: usize) -> Self {
        let gens: Vec<TensorOperator> = (1..n).map(|i| h.local(i, n)).collect();
        let mut by_len = Permutation::all(n);
        by_len.sort_by_key(Permutation::length);
        let mut mats: HashMap<Permutation, TensorOperator> = HashMap::new();
        for w in by_len {
            let m = match w.reduced_word().first() {
                None => TensorOperator::identity(h.r, n),
                Some(&i) => &gens[i - 1] * &mats[&w.left_simple(i - 1)],
            };
            mats.insert(w, m);
        }
        RhoTable { r: h.r, n, mats }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> &TensorOperator {
        &self.mats[w]
    }

    pub fn apply(&self, x: &HeckeElement) -> TensorOperator {
        assert_eq!(x.n(), self.n);
        let mut acc = TensorOperator::zero(self.r, self.n);
        for (w, c) in x.terms() {
            acc = &acc + &self.mats[w].scale(c);
        }
        acc
    }
}

/// q^{-n(r-1)/2 + n(λ)} Π_x [c(x)+r]_q / [h(x)]_q, zero when λ has more than r rows.
pub fn quantum_rank(shape: &Partition, r: usize) -> Scalar {
    if shape.length() > r {
        return Scalar::zero();
    }
    let n = shape.size() as i64;
    let mut acc = Scalar::p_pow(-n * (r as i64 - 1) + 2 * shape.n_lambda() as i64);
    for x in shape.nodes() {
        let c = shape.content(x).expect("node of shape");
        let h = shape.hook_length(x).expect("node of shape");
        acc = &acc * &q_int(c + r as i64);
        acc = &acc * &q_int(h as i64).inv().expect("nonzero");
    }
    acc
}
