//! Partitions, Young diagrams and standard tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("node ({0}, {1}) is not in the diagram")]
    NodeOutOfShape(usize, usize),
    #[error("parts must be non-increasing and positive: {0:?}")]
    NotAPartition(Vec<usize>),
}

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

/// Cell of a diagram, 1-based `(row, column)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl Partition {
    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `lambda_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: Node) -> bool {
        x.row >= 1 && x.col >= 1 && x.col <= self.part(x.row)
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Node::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&l| l >= j).count())
                .collect(),
        )
    }

    pub fn hook_length(&self, x: Node) -> Result<usize, PartitionError> {
        if !self.contains(x) {
            return Err(PartitionError::NodeOutOfShape(x.row, x.col));
        }
        let col_len = self.0.iter().filter(|&&l| l >= x.col).count();
        Ok(self.part(x.row) - x.col + col_len - x.row + 1)
    }

    pub fn content(&self, x: Node) -> Result<i64, PartitionError> {
        if !self.contains(x) {
            return Err(PartitionError::NodeOutOfShape(x.row, x.col));
        }
        Ok(x.col as i64 - x.row as i64)
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.nodes().map(|x| self.hook_length(x).unwrap()).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.nodes().map(|x| x.col as i64 - x.row as i64).collect()
    }

    /// `n(lambda) = sum_i (i - 1) lambda_i`.
    pub fn n_lambda(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &l)| i * l).sum()
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn dim_sn(&self) -> u64 {
        let n = self.size() as u64;
        let fact: u128 = (1..=n as u128).product();
        let hooks: u128 = self.hooks().iter().map(|&h| h as u128).product();
        (fact / hooks) as u64
    }

    /// Partitions obtained by adding one box, in row order.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            if i == 0 || self.0[i - 1] > cur {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = String;
    /// Accepts `3,1`, `[3,1]` or `3 1`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|w| !w.is_empty())
            .map(|w| w.parse::<usize>().map_err(|e| format!("{w}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard tableau, rows listed top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let t = StandardTableau { rows };
        t.is_valid().then_some(t)
    }

    fn is_valid(&self) -> bool {
        let lens: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        if Partition::new(lens).is_err() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
                if j > 0 && row[j - 1] >= v {
                    return false;
                }
                if i > 0 && self.rows[i - 1][j] >= v {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    /// 1-based position of entry `k`.
    pub fn position(&self, k: usize) -> Node {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == k) {
                return Node::new(i + 1, j + 1);
            }
        }
        panic!("entry {k} not in tableau");
    }

    pub fn content_of(&self, k: usize) -> i64 {
        let x = self.position(k);
        x.col as i64 - x.row as i64
    }

    /// Contents of entries `1..=n` in order.
    pub fn content_vector(&self) -> Vec<i64> {
        (1..=self.size()).map(|k| self.content_of(k)).collect()
    }

    /// The tableau with `k` and `k + 1` exchanged, if still standard.
    pub fn swap(&self, k: usize) -> Option<StandardTableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| match v {
                        v if v == k => k + 1,
                        v if v == k + 1 => k,
                        v => v,
                    })
                    .collect()
            })
            .collect();
        StandardTableau::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// All standard tableaux of shape `shape`, sorted.
pub fn syt(shape: &Partition) -> Vec<StandardTableau> {
    // Remove the largest entry from each corner recursively.
    fn rec(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
        let n = shape.size();
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let parts = shape.parts();
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
            if !is_corner {
                continue;
            }
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            let sub = Partition::new(smaller).unwrap();
            for mut t in rec(&sub) {
                if i == t.len() {
                    t.push(vec![n]);
                } else {
                    t[i].push(n);
                }
                out.push(t);
            }
        }
        out
    }
    let mut all: Vec<StandardTableau> = rec(shape)
        .into_iter()
        .map(|rows| StandardTableau { rows })
        .collect();
    all.sort();
    all
}

/// Every standard tableau with `n` boxes, grouped by shape in `partitions_of` order.
pub fn all_syt(n: usize) -> Vec<StandardTableau> {
    partitions_of(n).iter().flat_map(syt).collect()
}
