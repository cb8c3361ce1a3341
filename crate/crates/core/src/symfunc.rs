//! Symmetric functions over Q(p) in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::heckealg::{HeckeElement, Permutation, SeminormalRep};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{q_int, q_int_inv, Scalar};

/// A finite Schur expansion Σ c_λ s_λ, optionally truncated to at most `bound` rows.
///
/// Equality compares the expansions only.
#[derive(Clone, Debug, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Scalar>,
    bound: Option<usize>,
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SymFunc {}

/// A polynomial in the complete symmetric functions: h-index lists (sorted
/// decreasing, zeros dropped) with integer coefficients.
pub type HPoly = BTreeMap<Vec<usize>, i64>;

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(shape: Partition) -> Self {
        Self::from_terms([(shape, Scalar::one())])
    }

    /// h_k = s_(k).
    pub fn complete(k: usize) -> Self {
        Self::schur(Partition::row(k))
    }

    /// e_k = s_(1^k).
    pub fn elementary(k: usize) -> Self {
        Self::schur(Partition::column(k))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Scalar)>) -> Self {
        let mut f = Self::zero();
        for (s, c) in terms {
            f.add_term(s, c);
        }
        f
    }

    /// Drops every term with more than `r` rows, now and after each product.
    pub fn with_bound(mut self, r: usize) -> Self {
        self.bound = Some(r);
        self.terms.retain(|s, _| s.length() <= r);
        self
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shape: &Partition) -> Scalar {
        self.terms.get(shape).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, s: Partition, c: Scalar) {
        if c.is_zero() || self.bound.is_some_and(|r| s.length() > r) {
            return;
        }
        let e = self.terms.entry(s.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = SymFunc {
            terms: BTreeMap::new(),
            bound: self.bound,
        };
        for (s, x) in &self.terms {
            out.add_term(s.clone(), x * c);
        }
        out
    }

    fn joint_bound(&self, other: &Self) -> Option<usize> {
        match (self.bound, other.bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.bound = self.joint_bound(other);
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out.terms
            .retain(|s, _| out.bound.is_none_or(|r| s.length() <= r));
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Product in the ring, via Jacobi–Trudi on one factor and Pieri on the other.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymFunc {
            terms: BTreeMap::new(),
            bound: self.joint_bound(other),
        };
        let mut cache: HashMap<(Partition, Partition), BTreeMap<Partition, i64>> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let key = if a.length() >= b.length() {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                let prod = cache
                    .entry(key.clone())
                    .or_insert_with(|| schur_product(&key.0, &key.1, out.bound));
                let c = ca * cb;
                for (s, k) in prod.iter() {
                    out.add_term(s.clone(), &c * &Scalar::from_int(*k));
                }
            }
        }
        out
    }

    /// Evaluates at commuting values x_1..x_r.
    pub fn specialize(&self, values: &[Scalar]) -> Scalar {
        let mut memo = HashMap::new();
        self.terms
            .iter()
            .map(|(s, c)| c * &schur_at(s.parts(), values, &mut memo))
            .sum()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*s{s}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Partition,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct JsonSymFunc {
    basis: String,
    terms: Vec<JsonTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        JsonSymFunc {
            basis: "schur".into(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| JsonTerm {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = JsonSymFunc::deserialize(d)?;
        if j.basis != "schur" {
            return Err(serde::de::Error::custom(format!(
                "unsupported basis {:?}",
                j.basis
            )));
        }
        Ok(SymFunc::from_terms(
            j.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// All ν with ν/λ a horizontal strip of k boxes, at most `bound` rows.
fn pieri(shape: &[usize], k: usize, bound: Option<usize>) -> Vec<Vec<usize>> {
    fn rec(
        shape: &[usize],
        i: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        bound: Option<usize>,
    ) {
        let len = shape.get(i).copied().unwrap_or(0);
        if left == 0 {
            let mut v = cur.clone();
            v.extend_from_slice(&shape[i.min(shape.len())..]);
            out.push(v);
            return;
        }
        if i > shape.len() || bound.is_some_and(|r| i >= r) {
            return;
        }
        let cap = if i == 0 {
            left
        } else {
            (shape[i - 1] - len).min(left)
        };
        for a in 0..=cap {
            if i == shape.len() && a != left {
                continue;
            }
            cur.push(len + a);
            rec(shape, i + 1, left - a, cur, out, bound);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 0, k, &mut Vec::new(), &mut out, bound);
    for v in &mut out {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    out
}

/// Jacobi–Trudi: s_λ = det(h_{λ_i - i + j}).
pub fn jacobi_trudi(shape: &Partition) -> HPoly {
    let parts = shape.parts();
    let l = parts.len();
    let mut out = HPoly::new();
    for sigma in Permutation::all(l) {
        let mut idx = Vec::with_capacity(l);
        let mut ok = true;
        for i in 0..l {
            let v = parts[i] as i64 - i as i64 + sigma.apply(i) as i64;
            if v < 0 {
                ok = false;
                break;
            }
            if v > 0 {
                idx.push(v as usize);
            }
        }
        if !ok {
            continue;
        }
        idx.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if sigma.length() % 2 == 0 { 1 } else { -1 };
        *out.entry(idx).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Converts a polynomial in the h_k back to the Schur basis.
pub fn h_to_schur(h: &HPoly) -> SymFunc {
    let mut out = SymFunc::zero();
    for (idx, c) in h {
        let mut cur: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(vec![], 1)]);
        for &k in idx {
            let mut next = BTreeMap::new();
            for (s, m) in &cur {
                for nu in pieri(s, k, None) {
                    *next.entry(nu).or_insert(0) += m;
                }
            }
            cur = next;
        }
        for (s, m) in cur {
            out.add_term(Partition::new(s).unwrap(), Scalar::from_int(m * c));
        }
    }
    out
}

/// s_a · s_b with integer coefficients.
fn schur_product(a: &Partition, b: &Partition, bound: Option<usize>) -> BTreeMap<Partition, i64> {
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (idx, c) in jacobi_trudi(b) {
        let mut cur: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(a.parts().to_vec(), c)]);
        for &k in &idx {
            let mut next = BTreeMap::new();
            for (s, m) in &cur {
                for nu in pieri(s, k, bound) {
                    *next.entry(nu).or_insert(0) += m;
                }
            }
            cur = next;
        }
        for (s, m) in cur {
            *out.entry(s).or_insert(0) += m;
        }
    }
    out.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(s, m)| (Partition::new(s).unwrap(), m))
        .collect()
}

/// s_λ(x_1..x_r) by the branching rule: strip the cells holding r.
fn schur_at(
    parts: &[usize],
    values: &[Scalar],
    memo: &mut HashMap<(Vec<usize>, usize), Scalar>,
) -> Scalar {
    let r = values.len();
    if parts.is_empty() {
        return Scalar::one();
    }
    if parts.len() > r {
        return Scalar::zero();
    }
    let key = (parts.to_vec(), r);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // μ interlaces λ: λ_{i+1} ≤ μ_i ≤ λ_i, and μ has at most r-1 rows.
    let mut total = Scalar::zero();
    let mut mu = Vec::with_capacity(parts.len());
    fn rec(
        parts: &[usize],
        i: usize,
        mu: &mut Vec<usize>,
        values: &[Scalar],
        memo: &mut HashMap<(Vec<usize>, usize), Scalar>,
        total: &mut Scalar,
    ) {
        let r = values.len();
        if i == parts.len() {
            let mut m = mu.clone();
            while m.last() == Some(&0) {
                m.pop();
            }
            if m.len() > r - 1 {
                return;
            }
            let strip = parts.iter().sum::<usize>() - m.iter().sum::<usize>();
            let inner = schur_at(&m, &values[..r - 1], memo);
            if !inner.is_zero() {
                *total += &inner * &values[r - 1].pow(strip as i64);
            }
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        for v in lo..=parts[i] {
            mu.push(v);
            rec(parts, i + 1, mu, values, memo, total);
            mu.pop();
        }
    }
    rec(parts, 0, &mut mu, values, memo, &mut total);
    memo.insert(key, total.clone());
    total
}

/// Φ(h) = Σ_λ χ^λ(h) s_λ.
pub fn char_map(h: &HeckeElement) -> SymFunc {
    let n = h.n();
    let mut out = SymFunc::zero();
    for shape in partitions_of(n) {
        let rep = SeminormalRep::new(&shape);
        let chi: Scalar = h.terms().map(|(w, c)| c * &rep.matrix_of(w).trace()).sum();
        out.add_term(shape, chi);
    }
    out
}

/// T_{k-1} ⋯ T_2 T_1, the basis element of a k-cycle.
pub fn cycle_element(k: usize) -> HeckeElement {
    let mut acc = HeckeElement::one(k);
    for i in (1..k).rev() {
        acc = &acc * &HeckeElement::generator(i, k).unwrap();
    }
    acc
}

/// P_k = Φ(T_{k-1} ⋯ T_1).
pub fn power_char(k: usize) -> SymFunc {
    char_map(&cycle_element(k))
}

/// Which of the two sign readings of the E-recursion hold at degree n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonReport {
    pub h_recursion: bool,
    /// [n]_{1/q} E_n = Σ_k (-q)^{-(k-1)} E_{n-k} P_k
    pub e_recursion: bool,
    /// [n]_{1/q} E_n = Σ_k (-q)^{k-1} E_{n-k} P_k, the opposite sign exponent.
    pub e_recursion_opposite_sign: bool,
}

pub fn newton_recursion_report(n: usize) -> NewtonReport {
    let powers: Vec<SymFunc> = (1..=n).map(power_char).collect();
    let mut h_rhs = SymFunc::zero();
    let mut e_rhs = SymFunc::zero();
    let mut e_lit = SymFunc::zero();
    for k in 1..=n {
        let pk = &powers[k - 1];
        h_rhs = h_rhs.add(&SymFunc::complete(n - k).mul(pk));
        let ep = SymFunc::elementary(n - k).mul(pk);
        let minus_q = -Scalar::q();
        e_rhs = e_rhs.add(&ep.scale(&minus_q.pow(-(k as i64 - 1))));
        e_lit = e_lit.add(&ep.scale(&minus_q.pow(k as i64 - 1)));
    }
    let h_lhs = SymFunc::complete(n).scale(&q_int(n as i64));
    let e_lhs = SymFunc::elementary(n).scale(&q_int_inv(n as i64));
    NewtonReport {
        h_recursion: h_lhs == h_rhs,
        e_recursion: e_lhs == e_rhs,
        e_recursion_opposite_sign: e_lhs == e_lit,
    }
}

/// Both recursions hold, with the E-coefficient (-q)^{-(k-1)}.
pub fn newton_recursion_check(n: usize) -> bool {
    let r = newton_recursion_report(n);
    r.h_recursion && r.e_recursion
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[usize]) -> SymFunc {
        SymFunc::schur(part(v))
    }

    #[test]
    fn small_products() {
        assert_eq!(s(&[1]).mul(&s(&[1])), s(&[2]).add(&s(&[1, 1])));
        assert_eq!(s(&[1]).mul(&s(&[2])), s(&[3]).add(&s(&[2, 1])));
        assert_eq!(
            s(&[2, 1]).mul(&s(&[1])),
            s(&[3, 1]).add(&s(&[2, 2])).add(&s(&[2, 1, 1]))
        );
        let bounded = s(&[1]).with_bound(1);
        assert_eq!(bounded.mul(&s(&[1])), s(&[2]));
    }

    #[test]
    fn jacobi_trudi_small() {
        assert_eq!(
            jacobi_trudi(&part(&[1, 1])),
            HPoly::from([(vec![1, 1], 1), (vec![2], -1)])
        );
        assert_eq!(jacobi_trudi(&part(&[3])), HPoly::from([(vec![3], 1)]));
        assert_eq!(
            jacobi_trudi(&part(&[2, 1])),
            HPoly::from([(vec![2, 1], 1), (vec![3], -1)])
        );
        for n in 1..=5 {
            for shape in partitions_of(n) {
                assert_eq!(h_to_schur(&jacobi_trudi(&shape)), SymFunc::schur(shape));
            }
        }
    }

    #[test]
    fn specializations() {
        let x = Scalar::from_int(3);
        let y = Scalar::q();
        assert_eq!(s(&[1]).specialize(&[x.clone(), y.clone()]), &x + &y);
        assert_eq!(s(&[1, 1]).specialize(&[x.clone(), y.clone()]), &x * &y);
        let q = Scalar::q();
        let expect = Scalar::q_pow(2) + Scalar::q_pow(3) + Scalar::q_pow(4);
        assert_eq!(s(&[2]).specialize(&[q.clone(), q.pow(2)]), expect);
        assert!(s(&[1, 1, 1]).specialize(&[x, y]).is_zero());
    }

    #[test]
    fn char_map_small() {
        assert_eq!(char_map(&HeckeElement::one(1)), s(&[1]));
        let t1 = HeckeElement::generator(1, 2).unwrap();
        assert_eq!(char_map(&t1), s(&[2]).scale(&Scalar::q()).sub(&s(&[1, 1])));
        assert_eq!(power_char(2), char_map(&t1));
        assert_eq!(power_char(1), s(&[1]));
        let p3 = power_char(3);
        assert_eq!(p3.coeff(&part(&[3])), Scalar::q_pow(2));
        assert_eq!(p3.coeff(&part(&[1, 1, 1])), Scalar::one());
    }

    #[test]
    fn newton_recursions_low_degrees() {
        for n in 1..=3 {
            let r = newton_recursion_report(n);
            assert!(r.h_recursion && r.e_recursion, "n = {n}: {r:?}");
        }
    }

    #[test]
    fn json_shape() {
        let f = s(&[2, 1]).scale(&Scalar::q());
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"{"basis":"schur","terms":[{"partition":[2,1],"coeff":"p^2"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
    }
}
