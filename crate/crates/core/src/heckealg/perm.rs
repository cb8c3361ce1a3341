use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of {1..n} in one-line notation.
///
/// Stored 0-based; printed and serialized 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a permutation: {0:?}")]
pub struct NotAPermutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// From one-line notation with values in 1..=n.
    pub fn from_one_line(values: &[usize]) -> Result<Self, NotAPermutation> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(NotAPermutation(values.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(values.iter().map(|v| v - 1).collect()))
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// The simple transposition s_i swapping i and i+1 (1-based, 1 ≤ i < n).
    pub fn simple(i: usize, n: usize) -> Self {
        let mut w = Self::identity(n);
        w.0.swap(i - 1, i);
        w
    }

    /// The transposition (i k), 1-based.
    pub fn transposition(i: usize, k: usize, n: usize) -> Self {
        let mut w = Self::identity(n);
        w.0.swap(i - 1, k - 1);
        w
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    /// s_i ∘ self: swaps the values i and i+1 (0-based generator index).
    pub(crate) fn left_simple(&self, i: usize) -> Self {
        let w = self
            .0
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation(w)
    }

    /// self ∘ s_i: swaps the positions i and i+1 (0-based).
    pub(crate) fn right_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Permutation(w)
    }

    /// Whether l(s_i w) > l(w): the value i occurs before i+1.
    pub(crate) fn left_ascent(&self, i: usize) -> bool {
        let inv = self.0.iter().position(|&v| v == i).unwrap();
        let inv1 = self.0.iter().position(|&v| v == i + 1).unwrap();
        inv < inv1
    }

    /// Whether l(w s_i) > l(w).
    pub(crate) fn right_ascent(&self, i: usize) -> bool {
        self.0[i] < self.0[i + 1]
    }

    /// A reduced word `[i1, .., ik]` (1-based) with w = s_{i1} ⋯ s_{ik}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.size().saturating_sub(1) {
                if !w.left_ascent(i) {
                    word.push(i + 1);
                    w = w.left_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// All permutations of size n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut u = Permutation::identity(n);
                for &i in word.iter().rev() {
                    u = Permutation::simple(i, n).compose(&u);
                }
                assert_eq!(u, w);
            }
        }
    }

    #[test]
    fn inverse_and_length() {
        let w = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(w.length(), 2);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.inverse().length(), 2);
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }
}
