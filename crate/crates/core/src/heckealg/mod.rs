//! The Iwahori–Hecke algebra of the symmetric group over Q(p).
//!
//! Basis elements `T_w` multiply by the rules `T_i T_w = T_{s_i w}` when the
//! length goes up and `T_i T_w = (q-1) T_w + q T_{s_i w}` otherwise.

mod idempotents;
mod perm;
mod seminormal;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

pub use idempotents::{
    central_idempotent, central_idempotent_from_character, k_lambda, murphy,
    murphy_minimal_product, omega_murphy_form, omega_operator, primitive_idempotent,
    primitive_idempotent_full, Idempotents,
};
pub use perm::{NotAPermutation, Permutation};
pub use seminormal::{irr_character, CharacterTable, SeminormalRep};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {0} out of range for n = {1}")]
    IndexOutOfRange(usize, usize),
    #[error("element is not invertible")]
    NotInvertible,
}

/// A finite linear combination of basis elements `T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: Permutation, c: Scalar) -> Self {
        let mut h = Self::zero(w.size());
        h.add_term(w, c);
        h
    }

    /// The generator T_i, 1 ≤ i < n.
    pub fn generator(i: usize, n: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= n {
            return Err(HeckeError::IndexOutOfRange(i, n));
        }
        Ok(Self::basis(Permutation::simple(i, n)))
    }

    pub fn scalar(c: Scalar, n: usize) -> Self {
        Self::term(Permutation::identity(n), c)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Scalar)>) -> Self {
        let mut h = Self::zero(n);
        for (w, c) in terms {
            assert_eq!(w.size(), n);
            h.add_term(w, c);
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, w: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        HeckeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// T_i · self, 0-based generator index.
    fn left_gen(&self, i: usize) -> Self {
        let qm1 = Scalar::q() - Scalar::one();
        let q = Scalar::q();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.left_simple(i);
            if w.left_ascent(i) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), c * &qm1);
                out.add_term(sw, c * &q);
            }
        }
        out
    }

    /// self · T_i, 0-based generator index.
    fn right_gen(&self, i: usize) -> Self {
        let qm1 = Scalar::q() - Scalar::one();
        let q = Scalar::q();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.right_simple(i);
            if w.right_ascent(i) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c * &qm1);
                out.add_term(ws, c * &q);
            }
        }
        out
    }

    /// T_w · self.
    pub fn left_mul_basis(&self, w: &Permutation) -> Self {
        let mut acc = self.clone();
        for &i in w.reduced_word().iter().rev() {
            acc = acc.left_gen(i - 1);
        }
        acc
    }

    /// self · T_w.
    pub fn right_mul_basis(&self, w: &Permutation) -> Self {
        let mut acc = self.clone();
        for &i in &w.reduced_word() {
            acc = acc.right_gen(i - 1);
        }
        acc
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::SizeMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        if other.terms.len() <= self.terms.len() {
            for (w, c) in &other.terms {
                for (u, x) in self.right_mul_basis(w).terms {
                    out.add_term(u, x * c);
                }
            }
        } else {
            for (w, c) in &self.terms {
                for (u, x) in other.left_mul_basis(w).terms {
                    out.add_term(u, c * &x);
                }
            }
        }
        Ok(out)
    }

    /// The trace χ(h): the coefficient of T_e.
    pub fn chi_trace(&self) -> Scalar {
        self.coeff(&Permutation::identity(self.n))
    }

    /// ⟨a, b⟩ with ⟨T_u, T_w⟩ = q^{l(u)} when w = u⁻¹, else 0.
    pub fn bilinear_form(&self, other: &Self) -> Result<Scalar, HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::SizeMismatch(self.n, other.n));
        }
        let mut acc = Scalar::zero();
        for (u, a) in &self.terms {
            if let Some(b) = other.terms.get(&u.inverse()) {
                acc += (a * b).shift_p(2 * u.length() as i64);
            }
        }
        Ok(acc)
    }

    /// Matrix of left multiplication by `self` on the basis `Permutation::all(n)`.
    pub fn left_regular_matrix(&self) -> crate::linalg::Matrix {
        let basis = Permutation::all(self.n);
        let index: BTreeMap<&Permutation, usize> =
            basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut m = crate::linalg::Matrix::zeros(basis.len(), basis.len());
        for (j, w) in basis.iter().enumerate() {
            let col = self.right_mul_basis(w);
            for (u, c) in col.terms {
                m[(index[&u], j)] = c;
            }
        }
        m
    }

    /// Multiplicative inverse, by a linear solve in the regular representation.
    pub fn inverse(&self) -> Result<Self, HeckeError> {
        let basis = Permutation::all(self.n);
        let m = self.left_regular_matrix();
        let mut e = crate::linalg::Matrix::zeros(basis.len(), 1);
        e[(0, 0)] = Scalar::one();
        let x = m.solve(&e).ok_or(HeckeError::NotInvertible)?;
        Ok(Self::from_terms(
            self.n,
            basis
                .into_iter()
                .enumerate()
                .map(|(k, w)| (w, x[(k, 0)].clone())),
        ))
    }

    /// The image of a ⊗ b under H_n ⊗ H_m → H_{n+m}, with b acting on the last m strands.
    pub fn tensor(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n + other.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut line = u.one_line();
                line.extend(v.one_line().iter().map(|x| x + n));
                out.add_term(Permutation::from_one_line(&line).unwrap(), a * b);
            }
        }
        out
    }

    /// Pairs of one-line permutation and coefficient string.
    pub fn to_pairs(&self) -> Vec<(Vec<usize>, String)> {
        self.terms
            .iter()
            .map(|(w, c)| (w.one_line(), c.to_string()))
            .collect()
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "Hecke algebra size mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        self.checked_mul(rhs).expect("Hecke algebra size mismatch")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*T{}", c, w)?;
        }
        Ok(())
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let pairs = Vec::<(Vec<usize>, Scalar)>::deserialize(d)?;
        let Some(first) = pairs.first() else {
            return Err(D::Error::custom(
                "empty element has no size; use [] with care",
            ));
        };
        let n = first.0.len();
        let mut h = HeckeElement::zero(n);
        for (w, c) in pairs {
            if w.len() != n {
                return Err(D::Error::custom("permutations of different sizes"));
            }
            h.add_term(Permutation::from_one_line(&w).map_err(D::Error::custom)?, c);
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, n: usize) -> HeckeElement {
        HeckeElement::generator(i, n).unwrap()
    }

    #[test]
    fn quadratic_and_braid() {
        let q = Scalar::q();
        let t1 = t(1, 3);
        let t2 = t(2, 3);
        let sq = &t1 * &t1;
        let expect = &t1.scale(&(q.clone() - Scalar::one())) + &HeckeElement::scalar(q, 3);
        assert_eq!(sq, expect);
        let lhs = &(&t1 * &t2) * &t1;
        let rhs = &(&t2 * &t1) * &t2;
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 1);
        assert_eq!(
            &t1 * &t2,
            HeckeElement::basis(Permutation::simple(1, 3).compose(&Permutation::simple(2, 3)))
        );
    }

    #[test]
    fn trace_and_form() {
        let q = Scalar::q();
        let t1 = t(1, 2);
        assert_eq!(HeckeElement::one(2).chi_trace(), Scalar::one());
        assert!(t1.chi_trace().is_zero());
        assert_eq!((&t1 * &t1).chi_trace(), q);
        assert_eq!(t1.bilinear_form(&t1).unwrap(), q);
        assert!(HeckeElement::one(2).bilinear_form(&t1).unwrap().is_zero());
        let s12 = &t(1, 3) * &t(2, 3);
        let s21 = &t(2, 3) * &t(1, 3);
        assert_eq!(s12.bilinear_form(&s21).unwrap(), Scalar::q_pow(2));
        assert!(t(1, 2).bilinear_form(&t(1, 3)).is_err());
    }

    #[test]
    fn associativity_on_basis_n3() {
        let basis: Vec<_> = Permutation::all(3)
            .into_iter()
            .map(HeckeElement::basis)
            .collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                }
            }
        }
    }

    #[test]
    fn inverse_of_generator() {
        let t1 = t(1, 3);
        let inv = t1.inverse().unwrap();
        assert_eq!(&t1 * &inv, HeckeElement::one(3));
        assert!(HeckeElement::zero(2).inverse().is_err());
    }

    #[test]
    fn json_pairs_round_trip() {
        let h = &t(1, 3) + &HeckeElement::scalar(Scalar::q(), 3);
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"[[[1,2,3],"p^2"],[[2,1,3],"1"]]"#);
        let back: HeckeElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
    }
}
