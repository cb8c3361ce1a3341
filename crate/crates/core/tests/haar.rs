use qchar::haar::{
    char_table_check, char_table_from_idempotents, chi_on_primitive_check, hciz,
    hciz_lhs_d_weighted, hciz_rhs, hciz_series, integral_monomial, normalized_char_table,
    orthogonality_matrix, scalar_product_chars, HaarError, MonomialIntegral,
};
use qchar::partitions::{partitions_of, Partition};
use qchar::qmatrix::{random_diagonal, MatrixPoint};
use qchar::rmatrix::{quantum_rank, HeckeSymmetry};
use qchar::scalar::Scalar;
use qchar::symfunc::SymFunc;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tuples(r: usize, n: usize) -> Vec<Vec<usize>> {
    (0..r.pow(n as u32))
        .map(|mut pos| {
            let mut v = vec![0; n];
            for k in (0..n).rev() {
                v[k] = pos % r;
                pos /= r;
            }
            v
        })
        .collect()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn degree_one_values() {
    for r in 1..=3 {
        let h = HeckeSymmetry::dj(r);
        let int = MonomialIntegral::new(&h, 1).unwrap();
        for (i, j, k, l) in itertools(r) {
            let v = int.value(&[i], &[j], &[k], &[l]).unwrap();
            let expect = if i == l && j == k {
                &Scalar::q_pow(j as i64) / &qchar::scalar::q_int(r as i64)
            } else {
                Scalar::zero()
            };
            assert_eq!(v, expect, "r={r} {i}{j}{k}{l}");
        }
    }
}

fn itertools(r: usize) -> Vec<(usize, usize, usize, usize)> {
    tuples(r, 4)
        .into_iter()
        .map(|v| (v[0], v[1], v[2], v[3]))
        .collect()
}

#[test]
fn vanishing_and_errors() {
    let h = HeckeSymmetry::dj(2);
    assert!(integral_monomial(&h, &[0, 1], &[1, 0], &[0], &[1])
        .unwrap()
        .is_zero());
    assert!(integral_monomial(&h, &[], &[], &[1], &[1])
        .unwrap()
        .is_zero());
    assert!(matches!(
        integral_monomial(&h, &[0, 1], &[1], &[0], &[1]),
        Err(HaarError::SizeMismatch { .. })
    ));
    assert_eq!(
        integral_monomial(&h, &[2], &[0], &[0], &[0]),
        Err(HaarError::IndexOutOfRange(2, 2))
    );
}

/// Σ_m z^{i}_m t^m_l = δ^i_l at the junction between the Z and T blocks.
#[test]
fn inverse_contraction() {
    for r in 2..=3 {
        let h = HeckeSymmetry::dj(r);
        let two = MonomialIntegral::new(&h, 2).unwrap();
        let one = MonomialIntegral::new(&h, 1).unwrap();
        for v in tuples(r, 5) {
            let (i1, j1, i2, l1, k2) = (v[0], v[1], v[2], v[3], v[4]);
            for l2 in 0..r {
                let mut acc = Scalar::zero();
                for m in 0..r {
                    acc += &two.value(&[i1, i2], &[j1, m], &[m, k2], &[l1, l2]).unwrap();
                }
                let expect = if i2 == l1 {
                    one.value(&[i1], &[j1], &[k2], &[l2]).unwrap()
                } else {
                    Scalar::zero()
                };
                assert_eq!(acc, expect);
            }
        }
    }
}

/// R Z₁Z₂ = Z₁Z₂ R and R T̄₁T̄₂ = T̄₁T̄₂ R hold under the integral.
#[test]
fn quadratic_relations_are_respected() {
    let r = 2;
    let h = HeckeSymmetry::dj(r);
    let int = MonomialIntegral::new(&h, 2).unwrap();
    let f = |i: [usize; 2], j: [usize; 2], k: [usize; 2], l: [usize; 2]| {
        int.value(&i, &j, &k, &l).unwrap()
    };
    for v in tuples(r, 8) {
        let (i, j, k, l) = ([v[0], v[1]], [v[2], v[3]], [v[4], v[5]], [v[6], v[7]]);
        let mut left = Scalar::zero();
        let mut right = Scalar::zero();
        for a in 0..r {
            for b in 0..r {
                left += &(&h.entry(i[0], i[1], a, b) * &f([a, b], j, k, l));
                right += &(&f(i, [a, b], k, l) * &h.entry(a, b, j[0], j[1]));
            }
        }
        assert_eq!(left, right, "Z relation at {v:?}");
        // T̄ words: (T̄⊗T̄)[(k1,k2),(l1,l2)] = t^{k2}_{l2} t^{k1}_{l1}
        let mut left = Scalar::zero();
        let mut right = Scalar::zero();
        for a in 0..r {
            for b in 0..r {
                left += &(&h.entry(k[0], k[1], a, b) * &f(i, j, [b, a], [l[1], l[0]]));
                right += &(&f(i, j, [k[1], k[0]], [b, a]) * &h.entry(a, b, l[0], l[1]));
            }
        }
        assert_eq!(left, right, "T relation at {v:?}");
    }
}

/// Diagonal points act by torus weights, so the integral vanishes unless I and K
/// carry the same multiset of indices.
#[test]
fn torus_weights() {
    let h = HeckeSymmetry::dj(3);
    let int = MonomialIntegral::new(&h, 2).unwrap();
    for v in tuples(3, 8) {
        let (i, j, k, l) = (&v[0..2], &v[2..4], &v[4..6], &v[6..8]);
        let sorted = |x: &[usize]| {
            let mut y = x.to_vec();
            y.sort();
            y
        };
        if sorted(i) != sorted(l) || sorted(j) != sorted(k) {
            assert!(int.value(i, j, k, l).unwrap().is_zero(), "{v:?}");
        }
    }
}

#[test]
fn orthogonality() {
    for r in 2..=3 {
        let h = HeckeSymmetry::dj(r);
        for n in 1..=3 {
            let g = orthogonality_matrix(&h, n).unwrap();
            for (a, row) in g.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    let expect = if a == b {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(*v, expect, "r={r} n={n} ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn scalar_product_examples() {
    let h = HeckeSymmetry::dj(2);
    assert_eq!(
        scalar_product_chars(&h, &part(&[1]), &part(&[1])).unwrap(),
        Scalar::one()
    );
    assert!(scalar_product_chars(&h, &part(&[2]), &part(&[1, 1]))
        .unwrap()
        .is_zero());
    assert!(scalar_product_chars(&h, &part(&[2]), &part(&[1]))
        .unwrap()
        .is_zero());
}

fn point(h: &HeckeSymmetry, d: &[Scalar]) -> MatrixPoint {
    MatrixPoint::diagonal(h, d).unwrap()
}

#[test]
fn hciz_rank_one_anchor() {
    let h = HeckeSymmetry::dj(1);
    let mu = Scalar::from_int(3);
    let nu = &Scalar::from_int(2) / &Scalar::from_int(7);
    let rep = hciz(
        &h,
        &point(&h, std::slice::from_ref(&mu)),
        &point(&h, std::slice::from_ref(&nu)),
        1,
    )
    .unwrap();
    let expect = &(&mu * &nu) * &Scalar::q_pow(2);
    assert_eq!(rep.lhs, expect);
    assert_eq!(rep.rhs, expect);
}

#[test]
fn hciz_identity_points() {
    let h = HeckeSymmetry::dj(2);
    let id = point(&h, &[Scalar::one(), Scalar::one()]);
    let rep = hciz(&h, &id, &id, 1).unwrap();
    assert!(rep.matches());
    let qq = &Scalar::q() + &Scalar::q_pow(2);
    assert_eq!(rep.rhs, &(&qq * &qq) / &quantum_rank(&part(&[1]), 2));
}

#[test]
fn hciz_random_points() {
    for r in 1..=3 {
        let h = HeckeSymmetry::dj(r);
        for n in 1..=3 {
            let mut rng = ChaCha8Rng::seed_from_u64((10 * r + n) as u64);
            for _ in 0..5 {
                let m = point(&h, &random_diagonal(&mut rng, r));
                let nn = point(&h, &random_diagonal(&mut rng, r));
                let rep = hciz(&h, &m, &nn, n).unwrap();
                assert!(rep.matches(), "r={r} n={n}: {} vs {}", rep.lhs, rep.rhs);
            }
        }
    }
}

/// With D^{⊗n} as the Z-side weight the μ side comes out as s_λ(q^{-i} μ_i).
#[test]
fn hciz_d_weight_reverses_orientation() {
    let r = 2;
    let h = HeckeSymmetry::dj(r);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=2 {
        let mu = random_diagonal(&mut rng, r);
        let nu = random_diagonal(&mut rng, r);
        let lhs = hciz_lhs_d_weighted(&h, &point(&h, &mu), &point(&h, &nu), n).unwrap();
        let mu_inv: Vec<Scalar> = mu
            .iter()
            .enumerate()
            .map(|(i, x)| x * &Scalar::q_pow(-(i as i64) - 1))
            .collect();
        let nu_q: Vec<Scalar> = nu
            .iter()
            .enumerate()
            .map(|(i, x)| x * &Scalar::q_pow(i as i64 + 1))
            .collect();
        let mut expect = Scalar::zero();
        for shape in partitions_of(n) {
            let d = Scalar::from_int(shape.dim_sn() as i64);
            let rank = quantum_rank(&shape, r);
            let s = SymFunc::schur(shape);
            expect += &(&(&d / &rank) * &(&s.specialize(&mu_inv) * &s.specialize(&nu_q)));
        }
        assert_eq!(lhs, expect);
        assert_ne!(lhs, hciz_rhs(&h, &mu, &nu, n));
    }
}

#[test]
fn series_terms_match() {
    let h = HeckeSymmetry::dj(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = point(&h, &random_diagonal(&mut rng, 2));
    let nn = point(&h, &random_diagonal(&mut rng, 2));
    let s = hciz_series(&h, &m, &nn, 2).unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.iter().all(|t| t.matches()));
    assert_eq!(s[0].lhs, Scalar::one());
}

#[test]
fn non_diagonal_points_are_rejected() {
    let h = HeckeSymmetry::dj(2);
    let mut a = qchar::linalg::Matrix::identity(2);
    a[(0, 1)] = Scalar::one();
    if let Ok(m) = MatrixPoint::new(&h, a) {
        let id = point(&h, &[Scalar::one(), Scalar::one()]);
        assert_eq!(hciz(&h, &m, &id, 1), Err(HaarError::UnsupportedPoint));
    }
}

#[test]
fn character_tables_agree() {
    for n in 1..=4 {
        assert!(char_table_check(n), "n={n}");
    }
    assert_eq!(char_table_from_idempotents(3).len(), 3 * 6);
}

#[test]
fn normalized_table_is_divided_by_degree() {
    let t = qchar::heckealg::CharacterTable::new(3);
    for ((shape, w), v) in normalized_char_table(3) {
        let d = Scalar::from_int(shape.dim_sn() as i64);
        assert_eq!(&v * &d, t.value(&shape, &w));
    }
    let mixed = part(&[2, 1]);
    let e = qchar::heckealg::Permutation::identity(3);
    assert_eq!(normalized_char_table(3)[&(mixed, e)], Scalar::one());
}

#[test]
fn primitive_idempotent_traces() {
    for n in 1..=4 {
        assert!(chi_on_primitive_check(n), "n={n}");
    }
}
