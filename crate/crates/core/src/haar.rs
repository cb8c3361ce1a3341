//! Haar integral on the Hopf algebra generated by Z and T = Z^{-1}.
//!
//! Monomials are z^{i_1}_{j_1}⋯z^{i_n}_{j_n} t^{k_1}_{l_1}⋯t^{k_n}_{l_n}, all indices
//! 0-based. T̄^{⊗n} denotes T^{⊗n} with reversed multi-indices, so its words run
//! t^{k_n}_{l_n}⋯t^{k_1}_{l_1}.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::heckealg::{
    central_idempotent, k_lambda, omega_operator, primitive_idempotent, CharacterTable,
    Idempotents, Permutation,
};
use crate::partitions::{partitions_of, syt, Partition};
use crate::qmatrix::MatrixPoint;
use crate::rmatrix::{
    multi_index, quantum_rank, HeckeSymmetry, RMatrixError, RhoTable, TensorOperator,
};
use crate::scalar::{q_int, Scalar};
use crate::symfunc::SymFunc;

#[derive(Debug, Error, PartialEq)]
pub enum HaarError {
    #[error("multi-index length mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("only diagonal points are supported")]
    UnsupportedPoint,
    #[error(transparent)]
    RMatrix(#[from] RMatrixError),
}

struct Term {
    weight: Scalar,
    left: TensorOperator,
    right: TensorOperator,
}

/// The integral restricted to degree-n monomials:
///
/// ∫ z^I_J t^K_L = Σ_w q^{-l(w)} (Ω_n R_{w⁻¹})[I, L'] (C^{⊗n} R_w)[K', J].
pub struct MonomialIntegral {
    r: usize,
    n: usize,
    terms: Vec<Term>,
}

impl MonomialIntegral {
    pub fn new(h: &HeckeSymmetry, n: usize) -> Result<Self, HaarError> {
        let r = h.r();
        let cn = TensorOperator::tensor_power(h.closure()?.c(), n);
        let rho = RhoTable::new(h, n);
        let omega = rho.apply(&omega_operator(n, r));
        let terms = Permutation::all(n)
            .into_iter()
            .map(|w| Term {
                weight: Scalar::q_pow(-(w.length() as i64)),
                left: &omega * rho.get(&w.inverse()),
                right: &cn * rho.get(&w),
            })
            .collect();
        Ok(MonomialIntegral { r, n, terms })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn position(&self, idx: &[usize], reversed: bool) -> Result<usize, HaarError> {
        if idx.len() != self.n {
            return Err(HaarError::SizeMismatch {
                expected: self.n,
                found: idx.len(),
            });
        }
        let mut pos = 0;
        for k in 0..self.n {
            let i = if reversed {
                idx[self.n - 1 - k]
            } else {
                idx[k]
            };
            if i >= self.r {
                return Err(HaarError::IndexOutOfRange(i, self.r));
            }
            pos = pos * self.r + i;
        }
        Ok(pos)
    }

    /// ∫ z^{i_1}_{j_1}⋯z^{i_n}_{j_n} t^{k_1}_{l_1}⋯t^{k_n}_{l_n}.
    pub fn value(
        &self,
        i: &[usize],
        j: &[usize],
        k: &[usize],
        l: &[usize],
    ) -> Result<Scalar, HaarError> {
        let pi = self.position(i, false)?;
        let pj = self.position(j, false)?;
        let pk = self.position(k, true)?;
        let pl = self.position(l, true)?;
        Ok(self.value_at(pi, pj, pk, pl))
    }

    /// Same as `value` with the primed positions of K and L already taken.
    fn value_at(&self, i: usize, j: usize, k_rev: usize, l_rev: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for t in &self.terms {
            let a = t.left.get(i, l_rev);
            if a.is_zero() {
                continue;
            }
            let b = t.right.get(k_rev, j);
            if !b.is_zero() {
                acc += &(&(&a * &b) * &t.weight);
            }
        }
        acc
    }
}

/// ∫ z^I_J t^K_L; zero unless l(I) = l(K).
pub fn integral_monomial(
    h: &HeckeSymmetry,
    i: &[usize],
    j: &[usize],
    k: &[usize],
    l: &[usize],
) -> Result<Scalar, HaarError> {
    for (a, b) in [(i, j), (k, l)] {
        if a.len() != b.len() {
            return Err(HaarError::SizeMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
    }
    if i.len() != k.len() {
        return Ok(Scalar::zero());
    }
    if i.is_empty() {
        return Ok(Scalar::one());
    }
    MonomialIntegral::new(h, i.len())?.value(i, j, k, l)
}

fn twist_power(r: usize, n: usize) -> Scalar {
    Scalar::p_pow(((r + 1) * n) as i64)
}

fn first_primitive(h: &HeckeSymmetry, shape: &Partition) -> Result<TensorOperator, HaarError> {
    let t = &syt(shape)[0];
    Ok(h.rho(shape.size(), &primitive_idempotent(t))?)
}

/// ∫ Φ(M_λ) Φ(M_μ^*), with Φ(M_λ) = t^n tr(D^{⊗n} E_λ Z^{⊗n}) and
/// Φ(M_μ^*) = t^n tr(C^{⊗n} E_μ T̄^{⊗n}) expanded into monomials.
pub fn scalar_product_chars(
    h: &HeckeSymmetry,
    lambda: &Partition,
    mu: &Partition,
) -> Result<Scalar, HaarError> {
    let n = lambda.size();
    if mu.size() != n {
        return Ok(Scalar::zero());
    }
    if n == 0 {
        return Ok(Scalar::one());
    }
    let r = h.r();
    let cl = h.closure()?;
    let left = &TensorOperator::tensor_power(cl.d(), n) * &first_primitive(h, lambda)?;
    let right = &TensorOperator::tensor_power(cl.c(), n) * &first_primitive(h, mu)?;
    let integral = MonomialIntegral::new(h, n)?;
    // word z^K_I t^{L'}_{J'}: the integral reverses primed indices back
    let mut acc = Scalar::zero();
    for (i, k, a) in left.entries() {
        for (j, l, b) in right.entries() {
            let v = integral.value_at(k, i, l, j);
            if !v.is_zero() {
                acc += &(&(a * b) * &v);
            }
        }
    }
    Ok(&acc * &twist_power(r, n).pow(2))
}

/// Gram matrix of degree-n characters over the partitions of n with at most r rows.
pub fn orthogonality_matrix(h: &HeckeSymmetry, n: usize) -> Result<Vec<Vec<Scalar>>, HaarError> {
    let shapes: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|s| s.length() <= h.r())
        .collect();
    shapes
        .iter()
        .map(|a| {
            shapes
                .iter()
                .map(|b| scalar_product_chars(h, a, b))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HcizReport {
    pub n: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl HcizReport {
    pub fn matches(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn diagonal_of(h: &HeckeSymmetry, m: &MatrixPoint) -> Result<Vec<Scalar>, HaarError> {
    let d = m.as_diagonal().ok_or(HaarError::UnsupportedPoint)?;
    if d.len() != h.r() {
        return Err(HaarError::SizeMismatch {
            expected: h.r(),
            found: d.len(),
        });
    }
    Ok(d)
}

fn q_weighted(d: &[Scalar]) -> Vec<Scalar> {
    d.iter()
        .enumerate()
        .map(|(i, x)| x * &Scalar::q_pow(i as i64 + 1))
        .collect()
}

/// ∫ t^n Σ_{I,J} w(I) μ^I ν^J z^I_J T̄^J_I, for diagonal M = (μ), N = (ν).
fn hciz_lhs(
    h: &HeckeSymmetry,
    mu: &[Scalar],
    nu: &[Scalar],
    n: usize,
    weight: &dyn Fn(usize) -> Scalar,
) -> Result<Scalar, HaarError> {
    let r = h.r();
    if n == 0 {
        return Ok(Scalar::one());
    }
    let integral = MonomialIntegral::new(h, n)?;
    let dim = r.pow(n as u32);
    let prod = |d: &[Scalar], pos: usize| -> Scalar {
        multi_index(r, n, pos)
            .iter()
            .map(|&i| d[i].clone())
            .product()
    };
    let mut acc = Scalar::zero();
    for pi in 0..dim {
        let a = &prod(mu, pi) * &weight(pi);
        if a.is_zero() {
            continue;
        }
        for pj in 0..dim {
            // T̄^J_I = t^{j_n}_{i_n}⋯t^{j_1}_{i_1}: K = J', L = I', so K' = J and L' = I
            let v = integral.value_at(pi, pj, pj, pi);
            if !v.is_zero() {
                acc += &(&(&a * &prod(nu, pj)) * &v);
            }
        }
    }
    Ok(&acc * &twist_power(r, n))
}

/// Σ_{λ⊢n} d_λ / rank(M_λ) · s_λ(q^i μ_i) s_λ(q^i ν_i).
pub fn hciz_rhs(h: &HeckeSymmetry, mu: &[Scalar], nu: &[Scalar], n: usize) -> Scalar {
    let r = h.r();
    let (m, v) = (q_weighted(mu), q_weighted(nu));
    let mut acc = Scalar::zero();
    for shape in partitions_of(n) {
        if shape.length() > r {
            continue;
        }
        let d = Scalar::from_int(shape.dim_sn() as i64);
        let rank = quantum_rank(&shape, r);
        let s = SymFunc::schur(shape);
        let term = &(&d / &rank) * &(&s.specialize(&m) * &s.specialize(&v));
        acc += &term;
    }
    acc
}

/// q-HCIZ at diagonal points, with the diagonal weight q^{|I|} on the Z side.
pub fn hciz(
    h: &HeckeSymmetry,
    m: &MatrixPoint,
    nn: &MatrixPoint,
    n: usize,
) -> Result<HcizReport, HaarError> {
    let (mu, nu) = (diagonal_of(h, m)?, diagonal_of(h, nn)?);
    let r = h.r();
    let weight = |pos: usize| -> Scalar {
        let s: usize = multi_index(r, n, pos).iter().map(|i| i + 1).sum();
        Scalar::q_pow(s as i64)
    };
    Ok(HcizReport {
        n,
        lhs: hciz_lhs(h, &mu, &nu, n, &weight)?,
        rhs: hciz_rhs(h, &mu, &nu, n),
    })
}

/// The left side with D^{⊗n} as the Z-side weight.
pub fn hciz_lhs_d_weighted(
    h: &HeckeSymmetry,
    m: &MatrixPoint,
    nn: &MatrixPoint,
    n: usize,
) -> Result<Scalar, HaarError> {
    let (mu, nu) = (diagonal_of(h, m)?, diagonal_of(h, nn)?);
    let r = h.r();
    let d = h.closure()?.d().clone();
    let weight = |pos: usize| -> Scalar {
        multi_index(r, n, pos)
            .iter()
            .map(|&i| d[(i, i)].clone())
            .product()
    };
    hciz_lhs(h, &mu, &nu, n, &weight)
}

/// Degrees 0..=max of the series Σ_n (1/n!) ∫ tr(…)^n, each as an (lhs, rhs) pair.
pub fn hciz_series(
    h: &HeckeSymmetry,
    m: &MatrixPoint,
    nn: &MatrixPoint,
    max: usize,
) -> Result<Vec<HcizReport>, HaarError> {
    let mut fact = Scalar::one();
    let mut out = Vec::new();
    for n in 0..=max {
        if n > 0 {
            fact = &fact * &Scalar::from_int(n as i64);
        }
        let inv = fact.inv().expect("n! is nonzero");
        let rep = hciz(h, m, nn, n)?;
        out.push(HcizReport {
            n,
            lhs: &rep.lhs * &inv,
            rhs: &rep.rhs * &inv,
        });
    }
    Ok(out)
}

/// q^{l(w)} q^{-n(λ)} / n! · Π_x h(x)[h(x)]_q · t_λ(w⁻¹), where t_λ(w) is the
/// coefficient of T_w in the central idempotent F_λ. This is χ(T_w F_λ) / χ(F_λ),
/// the irreducible character divided by d_λ.
pub fn normalized_char_table(n: usize) -> BTreeMap<(Partition, Permutation), Scalar> {
    let mut nfact = Scalar::one();
    for k in 2..=n {
        nfact = &nfact * &Scalar::from_int(k as i64);
    }
    let nfact_inv = nfact.inv().expect("n! is nonzero");
    let mut out = BTreeMap::new();
    for shape in partitions_of(n) {
        let f = central_idempotent(&shape);
        let mut c = &nfact_inv * &Scalar::q_pow(-(shape.n_lambda() as i64));
        for hk in shape.hooks() {
            c = &c * &(&Scalar::from_int(hk as i64) * &q_int(hk as i64));
        }
        for w in Permutation::all(n) {
            let t = f.coeff(&w.inverse());
            let v = &(&c * &t) * &Scalar::q_pow(w.length() as i64);
            out.insert((shape.clone(), w), v);
        }
    }
    out
}

/// χ^λ(T_w) = q^{l(w)} k_λ^{-1} t_λ(w⁻¹): the table above scaled by d_λ.
pub fn char_table_from_idempotents(n: usize) -> BTreeMap<(Partition, Permutation), Scalar> {
    normalized_char_table(n)
        .into_iter()
        .map(|((shape, w), v)| {
            let d = Scalar::from_int(shape.dim_sn() as i64);
            ((shape, w), &v * &d)
        })
        .collect()
}

/// The table above agrees with the seminormal character table everywhere.
pub fn char_table_check(n: usize) -> bool {
    let table = CharacterTable::new(n);
    char_table_from_idempotents(n)
        .iter()
        .all(|((shape, w), v)| table.value(shape, w) == *v)
}

/// χ(E_t) = k_λ for every standard tableau of size n.
pub fn chi_on_primitive_check(n: usize) -> bool {
    Idempotents::new(n)
        .primitives()
        .all(|(t, e)| e.chi_trace() == k_lambda(&t.shape()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_pairing() {
        let h = HeckeSymmetry::dj(1);
        assert_eq!(
            integral_monomial(&h, &[0], &[0], &[0], &[0]).unwrap(),
            Scalar::one()
        );
        assert_eq!(
            integral_monomial(&h, &[], &[], &[], &[]).unwrap(),
            Scalar::one()
        );
        assert!(integral_monomial(&h, &[0], &[0], &[], &[])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn small_character_table() {
        let t = char_table_from_idempotents(2);
        let s1 = Permutation::simple(1, 2);
        assert_eq!(t[&(Partition::row(2), s1.clone())], Scalar::q());
        assert_eq!(t[&(Partition::column(2), s1)], Scalar::from_int(-1));
    }
}
