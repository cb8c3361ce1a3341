use std::collections::BTreeMap;

use crate::partitions::{partitions_of, Partition, StandardTableau};
use crate::scalar::{q_int, Scalar};

use super::{CharacterTable, HeckeElement, HeckeError, Permutation};

/// The Murphy operator L_k = Σ_{i<k} q^{i-k} T_{(i,k)}; L_1 = 0.
pub fn murphy(k: usize, n: usize) -> Result<HeckeElement, HeckeError> {
    if k == 0 || k > n {
        return Err(HeckeError::IndexOutOfRange(k, n));
    }
    Ok(HeckeElement::from_terms(
        n,
        (1..k).map(|i| {
            (
                Permutation::transposition(i, k, n),
                Scalar::q_pow(i as i64 - k as i64),
            )
        }),
    ))
}

/// h · (L_k - [c]) / ([target] - [c]) for each c in `others`.
fn interpolate(h: &HeckeElement, k: usize, target: i64, others: &[i64]) -> HeckeElement {
    let n = h.n();
    let mut acc = h.clone();
    for &c in others {
        let lk = murphy(k, n).unwrap();
        let shifted = &lk - &HeckeElement::scalar(q_int(c), n);
        let denom = (q_int(target) - q_int(c)).inv().unwrap();
        acc = (&acc * &shifted).scale(&denom);
    }
    acc
}

/// Contents of the cells that can be added to `rows` (a partial tableau's row lengths).
fn addable_contents(rows: &[usize]) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for i in 0..=rows.len() {
        let len = rows.get(i).copied().unwrap_or(0);
        let above = if i == 0 { usize::MAX } else { rows[i - 1] };
        if len < above {
            out.push((i, len as i64 - i as i64));
        }
    }
    out
}

/// Row lengths of the sub-tableau with entries < k.
fn prefix_rows(t: &StandardTableau, k: usize) -> Vec<usize> {
    let mut rows: Vec<usize> = t
        .rows()
        .iter()
        .map(|r| r.iter().filter(|&&v| v < k).count())
        .collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}

/// Primitive idempotent E_t by interpolation in the Murphy operators.
///
/// At step k only the contents addable to the shape of the entries < k are
/// interpolated; the other factors act as the identity on what is left.
pub fn primitive_idempotent(t: &StandardTableau) -> HeckeElement {
    let n = t.size();
    let mut e = HeckeElement::one(n);
    for k in 2..=n {
        let target = t.content_of(k);
        let others: Vec<i64> = addable_contents(&prefix_rows(t, k))
            .into_iter()
            .map(|(_, c)| c)
            .filter(|&c| c != target)
            .collect();
        e = interpolate(&e, k, target, &others);
    }
    e
}

/// E_t with every content in {-(k-1)..k-1} interpolated at step k.
pub fn primitive_idempotent_full(t: &StandardTableau) -> HeckeElement {
    let n = t.size();
    let mut e = HeckeElement::one(n);
    for k in 2..=n {
        let target = t.content_of(k);
        let reach = k as i64 - 1;
        let others: Vec<i64> = (-reach..=reach).filter(|&c| c != target).collect();
        e = interpolate(&e, k, target, &others);
    }
    e
}

/// F_λ = Σ_{t ∈ SYT(λ)} E_t.
pub fn central_idempotent(shape: &Partition) -> HeckeElement {
    let n = shape.size();
    crate::partitions::syt(shape)
        .iter()
        .map(primitive_idempotent)
        .fold(HeckeElement::zero(n), |a, b| &a + &b)
}

/// F_λ = k_λ Σ_w q^{-l(w)} χ^λ(T_w) T_{w⁻¹}.
pub fn central_idempotent_from_character(
    shape: &Partition,
    table: &CharacterTable,
) -> HeckeElement {
    let k = k_lambda(shape);
    HeckeElement::from_terms(
        table.n(),
        table.perms().iter().map(|w| {
            let c = (&table.value(shape, w) * &k).shift_p(-2 * w.length() as i64);
            (w.inverse(), c)
        }),
    )
}

/// k_λ = q^{n(λ)} / Π [h(x)]_q.
pub fn k_lambda(shape: &Partition) -> Scalar {
    let hooks: Scalar = shape.hooks().iter().map(|&h| q_int(h as i64)).product();
    Scalar::q_pow(shape.n_lambda() as i64) / hooks
}

/// p_λ = q^{rn} / Π [c(x)+r]_q, or `None` when λ has more than r rows.
fn spectral_coeff(shape: &Partition, r: usize) -> Option<Scalar> {
    if shape.length() > r {
        return None;
    }
    let den: Scalar = shape
        .contents()
        .iter()
        .map(|&c| q_int(c + r as i64))
        .product();
    Some(Scalar::q_pow((r * shape.size()) as i64) / den)
}

/// Ω_n = Σ p_λ F_λ over λ ⊢ n with at most r rows.
pub fn omega_operator(n: usize, r: usize) -> HeckeElement {
    Idempotents::new(n).omega(r)
}

/// Π_c (L_k - [c]_q) over c in {-(k-1)..k-1}; zero in H_n.
pub fn murphy_minimal_product(k: usize, n: usize) -> HeckeElement {
    let lk = murphy(k, n).unwrap();
    let reach = k as i64 - 1;
    (-reach..=reach).fold(HeckeElement::one(n), |acc, c| {
        &acc * &(&lk - &HeckeElement::scalar(q_int(c), n))
    })
}

/// (L_k - x)⁻¹ by Lagrange interpolation over the eigenvalues [c]_q of L_k.
/// An eigenvalue equal to x is skipped, which yields the group inverse.
fn murphy_shift_inverse(k: usize, n: usize, x: &Scalar) -> (HeckeElement, bool) {
    let reach = k as i64 - 1;
    let contents: Vec<i64> = (-reach..=reach).collect();
    let mut singular = false;
    let mut acc = HeckeElement::zero(n);
    for &c in &contents {
        let gap = &q_int(c) - x;
        if gap.is_zero() {
            singular = true;
            continue;
        }
        let others: Vec<i64> = contents.iter().copied().filter(|&d| d != c).collect();
        let proj = interpolate(&HeckeElement::one(n), k, c, &others);
        acc = &acc + &proj.scale(&gap.inv().unwrap());
    }
    (acc, singular)
}

/// The Murphy product Π_k (L_k - [-r]_q) inverted factor by factor.
///
/// When n > r some factor is singular; the result is then the group inverse
/// (the inverse on the image, zero on the kernel) if `group_inverse` is set,
/// and `NotInvertible` otherwise.
pub fn omega_murphy_form(
    n: usize,
    r: usize,
    group_inverse: bool,
) -> Result<HeckeElement, HeckeError> {
    let x = q_int(-(r as i64));
    let mut acc = HeckeElement::one(n);
    for k in 1..=n {
        let (inv, singular) = murphy_shift_inverse(k, n, &x);
        if singular && !group_inverse {
            return Err(HeckeError::NotInvertible);
        }
        acc = &acc * &inv;
    }
    Ok(acc)
}

/// All primitive and central idempotents of H_n, built along the tableau tree.
#[derive(Clone, Debug)]
pub struct Idempotents {
    n: usize,
    primitive: BTreeMap<StandardTableau, HeckeElement>,
    central: BTreeMap<Partition, HeckeElement>,
}

impl Idempotents {
    pub fn new(n: usize) -> Self {
        let mut level: Vec<(Vec<Vec<usize>>, HeckeElement)> = vec![(vec![], HeckeElement::one(n))];
        for k in 1..=n {
            let mut next = Vec::new();
            for (rows, e) in &level {
                let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
                let addable = addable_contents(&lens);
                for &(row, c) in &addable {
                    let others: Vec<i64> = addable
                        .iter()
                        .map(|&(_, c2)| c2)
                        .filter(|&c2| c2 != c)
                        .collect();
                    let child = interpolate(e, k, c, &others);
                    let mut rows = rows.clone();
                    if row == rows.len() {
                        rows.push(vec![k]);
                    } else {
                        rows[row].push(k);
                    }
                    next.push((rows, child));
                }
            }
            level = next;
        }
        let mut primitive = BTreeMap::new();
        let mut central: BTreeMap<Partition, HeckeElement> = BTreeMap::new();
        for (rows, e) in level {
            let t = StandardTableau::new(rows).expect("tree builds standard tableaux");
            let f = central
                .entry(t.shape())
                .or_insert_with(|| HeckeElement::zero(n));
            *f = &*f + &e;
            primitive.insert(t, e);
        }
        Idempotents {
            n,
            primitive,
            central,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn primitive(&self, t: &StandardTableau) -> &HeckeElement {
        &self.primitive[t]
    }

    pub fn primitives(&self) -> impl Iterator<Item = (&StandardTableau, &HeckeElement)> {
        self.primitive.iter()
    }

    pub fn central(&self, shape: &Partition) -> &HeckeElement {
        &self.central[shape]
    }

    /// Σ p_λ F_λ over shapes with at most r rows.
    pub fn omega(&self, r: usize) -> HeckeElement {
        let mut acc = HeckeElement::zero(self.n);
        for shape in partitions_of(self.n) {
            if let Some(c) = spectral_coeff(&shape, r) {
                acc = &acc + &self.central[&shape].scale(&c);
            }
        }
        acc
    }
}
