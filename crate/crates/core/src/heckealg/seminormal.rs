use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::partitions::{partitions_of, syt, Partition, StandardTableau};
use crate::scalar::Scalar;

use super::{HeckeElement, Permutation};

/// Seminormal form of the irreducible representation of shape λ.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    shape: Partition,
    basis: Vec<StandardTableau>,
    generators: Vec<Matrix>,
}

/// Diagonal coefficient (q-1)/(1-q^{-d}).
fn diag_coeff(d: i64) -> Scalar {
    let q = Scalar::q();
    (&q - &Scalar::one()) / (Scalar::one() - Scalar::q_pow(-d))
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let basis = syt(shape);
        let n = shape.size();
        let index: HashMap<&StandardTableau, usize> =
            basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut generators = Vec::new();
        for i in 1..n {
            let mut m = Matrix::zeros(basis.len(), basis.len());
            for (col, t) in basis.iter().enumerate() {
                let (a, b) = (t.position(i), t.position(i + 1));
                if a.row == b.row {
                    m[(col, col)] = Scalar::q();
                } else if a.col == b.col {
                    m[(col, col)] = Scalar::from_int(-1);
                } else {
                    let d = t.content_of(i + 1) - t.content_of(i);
                    let ad = diag_coeff(d);
                    let s = t.swap(i).expect("swap of non-adjacent cells is standard");
                    m[(index[&s], col)] = &ad + &Scalar::one();
                    m[(col, col)] = ad;
                }
            }
            generators.push(m);
        }
        SeminormalRep {
            shape: shape.clone(),
            basis,
            generators,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of T_i, 1 ≤ i < n.
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.generators[i - 1]
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Matrix of T_w along its reduced word.
    pub fn matrix_of(&self, w: &Permutation) -> Matrix {
        let mut m = Matrix::identity(self.dim());
        for &i in &w.reduced_word() {
            m = &m * self.generator(i);
        }
        m
    }

    pub fn matrix_of_element(&self, h: &HeckeElement) -> Matrix {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in h.terms() {
            acc = &acc + &self.matrix_of(w).scale(c);
        }
        acc
    }
}

/// χ^λ(T_w) as the trace of the seminormal matrices along a reduced word.
pub fn irr_character(shape: &Partition, w: &Permutation) -> Scalar {
    SeminormalRep::new(shape).matrix_of(w).trace()
}

/// All irreducible characters on all basis elements T_w of H_n.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    perms: Vec<Permutation>,
    values: Vec<Vec<Scalar>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let shapes = partitions_of(n);
        let perms = Permutation::all(n);
        let mut values = Vec::with_capacity(shapes.len());
        for shape in &shapes {
            let rep = SeminormalRep::new(shape);
            // T_w = T_i T_{s_i w} for a left descent i, so each matrix costs one product.
            let mut mats: HashMap<Permutation, Matrix> = HashMap::new();
            let mut by_len = perms.clone();
            by_len.sort_by_key(Permutation::length);
            for w in &by_len {
                let m = match w.reduced_word().first() {
                    None => Matrix::identity(rep.dim()),
                    Some(&i) => {
                        let rest = w.left_simple(i - 1);
                        rep.generator(i) * &mats[&rest]
                    }
                };
                mats.insert(w.clone(), m);
            }
            values.push(perms.iter().map(|w| mats[w].trace()).collect());
        }
        CharacterTable {
            n,
            shapes,
            perms,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn value(&self, shape: &Partition, w: &Permutation) -> Scalar {
        let a = self.shape_index(shape);
        let b = self
            .perms
            .binary_search(w)
            .expect("permutation of wrong size");
        self.values[a][b].clone()
    }

    fn shape_index(&self, shape: &Partition) -> usize {
        self.shapes
            .iter()
            .position(|s| s == shape)
            .expect("partition of wrong size")
    }

    /// χ^λ(h), extended linearly.
    pub fn character(&self, shape: &Partition, h: &HeckeElement) -> Scalar {
        let a = self.shape_index(shape);
        h.terms()
            .map(|(w, c)| c * &self.values[a][self.perms.binary_search(w).unwrap()])
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn check_relations(rep: &SeminormalRep) {
        let q = Scalar::q();
        let id = Matrix::identity(rep.dim());
        let g = rep.generators();
        for (i, a) in g.iter().enumerate() {
            let quad = &(a * a) - &(&a.scale(&(&q - &Scalar::one())) + &id.scale(&q));
            assert!(
                quad.is_zero(),
                "quadratic relation fails for {}",
                rep.shape()
            );
            for (j, b) in g.iter().enumerate() {
                if j == i + 1 {
                    assert_eq!(
                        &(a * b) * a,
                        &(b * a) * b,
                        "braid fails for {}",
                        rep.shape()
                    );
                } else if j > i + 1 {
                    assert_eq!(a * b, b * a);
                }
            }
        }
    }

    #[test]
    fn relations_hold_up_to_n4() {
        for n in 1..=4 {
            for shape in partitions_of(n) {
                check_relations(&SeminormalRep::new(&shape));
            }
        }
    }

    #[test]
    fn small_characters() {
        let q = Scalar::q();
        let s1 = Permutation::simple(1, 2);
        assert_eq!(irr_character(&part(&[2]), &s1), q);
        assert_eq!(irr_character(&part(&[1, 1]), &s1), Scalar::from_int(-1));
        assert_eq!(SeminormalRep::new(&part(&[2])).generator(1)[(0, 0)], q);
        let rep = SeminormalRep::new(&part(&[2, 1]));
        for g in rep.generators() {
            assert_eq!(g.trace(), &q - &Scalar::one());
        }
        let table = CharacterTable::new(3);
        for shape in table.shapes() {
            assert_eq!(
                table.value(shape, &Permutation::identity(3)),
                Scalar::from_int(shape.dim_sn() as i64)
            );
            for w in table.perms() {
                assert_eq!(table.value(shape, w), irr_character(shape, w));
            }
        }
    }
}
