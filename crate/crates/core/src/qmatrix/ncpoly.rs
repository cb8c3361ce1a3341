use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::rmatrix::HeckeSymmetry;
use crate::scalar::Scalar;

use super::QMatrixError;

/// Generator z^i_j is stored as the index i*r + j (row-major, 0-based).
pub type Word = Vec<u16>;

/// A linear combination of words in the generators z^i_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    r: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(r: usize) -> Self {
        NCPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: usize, c: Scalar) -> Self {
        let mut p = Self::zero(r);
        p.add_term(Vec::new(), &c);
        p
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, Scalar::one())
    }

    /// z^i_j, 0-based.
    pub fn generator(r: usize, i: usize, j: usize) -> Self {
        let mut p = Self::zero(r);
        p.add_term(vec![(i * r + j) as u16], &Scalar::one());
        p
    }

    pub fn monomial(r: usize, word: Word, c: Scalar) -> Self {
        let mut p = Self::zero(r);
        p.add_term(word, &c);
        p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[u16]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.r);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Product by concatenation, without reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.r);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    /// Value at a matrix with commuting entries.
    pub fn eval(&self, a: &Matrix) -> Scalar {
        let r = self.r;
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            let mut v = c.clone();
            for &g in w {
                let g = g as usize;
                v = &v * &a[(g / r, g % r)];
                if v.is_zero() {
                    break;
                }
            }
            acc += &v;
        }
        acc
    }
}

fn fmt_coeff(c: &Scalar) -> String {
    let s = c.to_string();
    if s.contains(' ') && !s.starts_with('(') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let r = self.r;
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_coeff(c))?;
            if !w.is_empty() {
                write!(f, " *")?;
                for &g in w {
                    let g = g as usize;
                    write!(f, " z[{},{}]", g / r + 1, g % r + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// A rule `lhs → Σ c·word` on two-letter words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: [u16; 2],
    pub rhs: Vec<([u16; 2], Scalar)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Quadratic rewriting system for the FRT relations R Z₁Z₂ = Z₁Z₂R under
/// degree-lexicographic order on row-major generators.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    r: usize,
    rules: HashMap<[u16; 2], Vec<([u16; 2], Scalar)>>,
}

const STEP_LIMIT: usize = 200_000;

impl RewriteSystem {
    pub fn frt(h: &HeckeSymmetry) -> Self {
        let r = h.r();
        let g = r * r;
        let nw = g * g;
        // columns in decreasing word order: column c holds word nw-1-c
        let col_of = |a: usize, b: usize| nw - 1 - (a * g + b);
        let gen = |i: usize, j: usize| i * r + j;
        let mut rel = Matrix::zeros(nw, nw);
        let mut row = 0;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        for m in 0..r {
                            for n in 0..r {
                                let c = h.entry(i, j, m, n);
                                if !c.is_zero() {
                                    let col = col_of(gen(m, k), gen(n, l));
                                    rel[(row, col)] = &rel[(row, col)] + &c;
                                }
                            }
                        }
                        for p in 0..r {
                            for q in 0..r {
                                let c = h.entry(p, q, k, l);
                                if !c.is_zero() {
                                    let col = col_of(gen(i, p), gen(j, q));
                                    rel[(row, col)] = &rel[(row, col)] - &c;
                                }
                            }
                        }
                        row += 1;
                    }
                }
            }
        }
        let (red, piv) = rel.rref();
        let word_of = |col: usize| {
            let w = nw - 1 - col;
            [(w / g) as u16, (w % g) as u16]
        };
        let mut rules = HashMap::new();
        for (k, &pc) in piv.iter().enumerate() {
            let rhs = (pc + 1..nw)
                .filter(|&c| !red[(k, c)].is_zero())
                .map(|c| (word_of(c), -red[(k, c)].clone()))
                .collect();
            rules.insert(word_of(pc), rhs);
        }
        RewriteSystem { r, rules }
    }

    /// A system from explicit rules; rejects repeated left-hand sides.
    pub fn from_rules(r: usize, rules: Vec<Rule>) -> Result<Self, QMatrixError> {
        let mut map = HashMap::new();
        for rule in rules {
            if map.insert(rule.lhs, rule.rhs).is_some() {
                return Err(QMatrixError::NotOrientable);
            }
        }
        Ok(RewriteSystem { r, rules: map })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rules(&self) -> Vec<Rule> {
        let mut out: Vec<Rule> = self
            .rules
            .iter()
            .map(|(l, r)| Rule {
                lhs: *l,
                rhs: r.clone(),
            })
            .collect();
        out.sort_by_key(|a| a.lhs);
        out
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    pub fn is_reducible(&self, w: &[u16]) -> bool {
        self.redex(w, Strategy::Leftmost).is_some()
    }

    fn redex(&self, w: &[u16], s: Strategy) -> Option<usize> {
        let n = w.len().saturating_sub(1);
        let hit = |i: &usize| self.rules.contains_key(&[w[*i], w[*i + 1]]);
        match s {
            Strategy::Leftmost => (0..n).find(hit),
            Strategy::Rightmost => (0..n).rev().find(hit),
        }
    }

    fn apply_at(&self, w: &[u16], pos: usize, c: &Scalar, into: &mut NCPoly) {
        for (rw, rc) in &self.rules[&[w[pos], w[pos + 1]]] {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + 2..]);
            into.add_term(nw, &(c * rc));
        }
    }

    /// Normal form with a step bound; `None` if the bound is hit.
    pub fn normal_form_with(&self, p: &NCPoly, s: Strategy) -> Option<NCPoly> {
        let mut work = p.clone();
        let mut out = NCPoly::zero(p.r);
        let mut steps = 0;
        while let Some((w, c)) = work.terms.pop_last() {
            steps += 1;
            if steps > STEP_LIMIT {
                return None;
            }
            match self.redex(&w, s) {
                None => out.add_term(w, &c),
                Some(pos) => self.apply_at(&w, pos, &c, &mut work),
            }
        }
        Some(out)
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.normal_form_with(p, Strategy::Leftmost)
            .expect("rewriting terminates for an oriented system")
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.normal_form(&a.concat(b))
    }

    /// Every overlap x·y·z with xy and yz both reducible resolves to one normal
    /// form (degree 3); at higher degree, seeded random words are reduced
    /// leftmost-first and rightmost-first.
    pub fn confluence_check(&self, degree: usize) -> bool {
        let g = (self.r * self.r) as u16;
        if degree <= 3 {
            for x in 0..g {
                for y in 0..g {
                    if !self.rules.contains_key(&[x, y]) {
                        continue;
                    }
                    for z in 0..g {
                        if !self.rules.contains_key(&[y, z]) {
                            continue;
                        }
                        let w = vec![x, y, z];
                        let mut left = NCPoly::zero(self.r);
                        self.apply_at(&w, 0, &Scalar::one(), &mut left);
                        let mut right = NCPoly::zero(self.r);
                        self.apply_at(&w, 1, &Scalar::one(), &mut right);
                        let a = self.normal_form_with(&left, Strategy::Leftmost);
                        let b = self.normal_form_with(&right, Strategy::Leftmost);
                        if a.is_none() || a != b {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(degree as u64);
        for _ in 0..32 {
            let w: Word = (0..degree).map(|_| rng.gen_range(0..g)).collect();
            let p = NCPoly::monomial(self.r, w, Scalar::one());
            let a = self.normal_form_with(&p, Strategy::Leftmost);
            let b = self.normal_form_with(&p, Strategy::Rightmost);
            if a.is_none() || a != b {
                return false;
            }
        }
        true
    }

    /// Irreducible words of a given degree.
    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        let g = (self.r * self.r) as u16;
        let mut out: Vec<Word> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for w in &out {
                for x in 0..g {
                    if w.last().is_some_and(|&y| self.rules.contains_key(&[y, x])) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}
