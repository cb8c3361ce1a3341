use qchar::heckealg::{HeckeElement, Idempotents, Permutation};
use qchar::linalg::Matrix;
use qchar::partitions::{partitions_of, Partition};
use qchar::rmatrix::{quantum_rank, HeckeSymmetry, RhoTable, TensorOperator};
use qchar::scalar::{q_int, q_int_inv, Scalar};

#[test]
fn dj_axioms_and_closure() {
    for r in 1..=3 {
        let h = HeckeSymmetry::dj(r);
        let rep = h.verify_axioms();
        assert!(rep.all_pass(), "r={r} {rep:?}");
        assert_eq!(rep.cd_scalar, Some(Scalar::q_pow(-(r as i64 + 1))));
        let cl = h.closure().unwrap();
        let c = Matrix::from_fn(r, r, |i, j| {
            if i == j {
                Scalar::q_pow(i as i64 + 1 - r as i64 - 1)
            } else {
                Scalar::zero()
            }
        });
        let d = Matrix::from_fn(r, r, |i, j| {
            if i == j {
                Scalar::q_pow(-(i as i64 + 1))
            } else {
                Scalar::zero()
            }
        });
        assert_eq!(cl.c(), &c, "C r={r}");
        assert_eq!(cl.d(), &d, "D r={r}");
    }
}

#[test]
fn closure_equation_holds() {
    let h = HeckeSymmetry::dj(2);
    let cl = h.closure().unwrap();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut s = Scalar::zero();
                    for p in 0..2 {
                        for q in 0..2 {
                            s += &(cl.p(i, p, j, q) * &h.entry(q, k, p, l));
                        }
                    }
                    let want = if i == l && k == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(s, want);
                }
            }
        }
    }
}

#[test]
fn middle_block_eigenvalues() {
    let h = HeckeSymmetry::dj(2);
    let m = h.matrix();
    let tr = &m.get(1, 1) + &m.get(2, 2);
    let det = &(&m.get(1, 1) * &m.get(2, 2)) - &(&m.get(1, 2) * &m.get(2, 1));
    assert_eq!(tr, &Scalar::q() - &Scalar::one());
    assert_eq!(det, -Scalar::q());
}

#[test]
fn perturbed_entry_breaks_yang_baxter() {
    let h = HeckeSymmetry::dj(2);
    let mut m = h.matrix().clone();
    m.set(1, 2, &m.get(1, 2) + &Scalar::one());
    let bad = HeckeSymmetry::new(m).unwrap();
    assert!(!bad.verify_axioms().yang_baxter);
}

#[test]
fn scalar_symmetry() {
    let mut m = TensorOperator::zero(1, 2);
    m.set(0, 0, Scalar::q());
    let h = HeckeSymmetry::new(m).unwrap();
    let rep = h.verify_axioms();
    assert!(rep.all_pass());
    assert_eq!(rep.cd_scalar, Some(Scalar::q_pow(-2)));
}

#[test]
fn rho_is_a_homomorphism() {
    for r in 2..=3 {
        let h = HeckeSymmetry::dj(r);
        let table = RhoTable::new(&h, 3);
        let perms = Permutation::all(3);
        for u in &perms {
            assert_eq!(table.get(u), &h.rho_basis(u));
            for v in &perms {
                let prod = &HeckeElement::basis(u.clone()) * &HeckeElement::basis(v.clone());
                assert_eq!(table.apply(&prod), table.get(u) * table.get(v));
            }
        }
    }
    let h = HeckeSymmetry::dj(2);
    let t = HeckeElement::generator(1, 2).unwrap();
    let q = Scalar::q();
    let lhs = h.rho(2, &(&t * &t)).unwrap();
    let rhs = &h.matrix().scale(&(&q - &Scalar::one())) + &TensorOperator::identity(2, 2).scale(&q);
    assert_eq!(lhs, rhs);
    assert!(h.rho(3, &t).is_err());
}

#[test]
fn symmetrizer_properties() {
    let q = Scalar::q();
    for r in 2..=3 {
        let h = HeckeSymmetry::dj(r);
        let id = TensorOperator::identity(r, 2);
        let (x2, y2) = h.symmetrizers(2);
        assert_eq!(x2, (&id + h.matrix()).scale(&q_int(2).inv().unwrap()));
        assert_eq!(
            y2,
            (&id - &h.matrix().scale(&Scalar::q_pow(-1))).scale(&q_int_inv(2).inv().unwrap())
        );
        for n in 1..=3 {
            let (x, y) = h.symmetrizers(n);
            assert_eq!(&x * &x, x);
            assert_eq!(&y * &y, y);
            for i in 1..n {
                let ri = h.local(i, n);
                assert_eq!(&x * &ri, x.scale(&q));
                assert_eq!(&ri * &x, x.scale(&q));
                assert_eq!(&y * &ri, y.scale(&Scalar::from_int(-1)));
                assert_eq!(&ri * &y, y.scale(&Scalar::from_int(-1)));
            }
            let table = RhoTable::new(&h, n);
            let mut anti = TensorOperator::zero(r, n);
            for w in Permutation::all(n) {
                let mut c = Scalar::q_pow(-(w.length() as i64));
                if w.length() % 2 == 1 {
                    c = -c;
                }
                anti = &anti + &table.get(&w).scale(&c);
            }
            // Σ (-q)^{-l(w)} R_w = [n]_{1/q}! Y_n
            let fact: Scalar = (1..=n as i64).map(q_int_inv).product();
            assert_eq!(anti, y.scale(&fact), "r={r} n={n}");
        }
    }
}

#[test]
fn even_rank() {
    assert!(HeckeSymmetry::dj(2).even_rank_check(2));
    assert!(!HeckeSymmetry::dj(2).even_rank_check(1));
    assert!(!HeckeSymmetry::dj(2).even_rank_check(3));
    assert!(HeckeSymmetry::dj(3).even_rank_check(3));
}

#[test]
fn braided_trace_of_identity() {
    for r in 1..=3 {
        let h = HeckeSymmetry::dj(r);
        let t = h.braided_trace(&TensorOperator::identity(r, 1)).unwrap();
        assert_eq!(t, &Scalar::p_pow(-(r as i64 - 1)) * &q_int(r as i64));
        assert_eq!(t, quantum_rank(&Partition::row(1), r));
        assert!(h
            .braided_trace(&TensorOperator::zero(r, 2))
            .unwrap()
            .is_zero());
    }
}

#[test]
fn braided_trace_of_idempotents_is_quantum_rank() {
    for r in 2..=3 {
        let h = HeckeSymmetry::dj(r);
        for n in 1..=3 {
            let idem = Idempotents::new(n);
            let table = RhoTable::new(&h, n);
            for (t, e) in idem.primitives() {
                let f = table.apply(e);
                let got = h.braided_trace(&f).unwrap();
                assert_eq!(got, quantum_rank(&t.shape(), r), "r={r} t={t}");
            }
        }
    }
}

#[test]
fn braided_trace_is_multiplicative() {
    let h = HeckeSymmetry::dj(2);
    let a = h.matrix().clone();
    let b = TensorOperator::identity(2, 1);
    let lhs = h.braided_trace(&a.kron(&b)).unwrap();
    let rhs = &h.braided_trace(&a).unwrap() * &h.braided_trace(&b).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn quantum_rank_examples() {
    for r in 1..=4 {
        let col = Partition::column(r);
        // a single column of height r has quantum rank 1
        assert_eq!(quantum_rank(&col, r), Scalar::one(), "r={r}");
        assert!(quantum_rank(&Partition::column(r + 1), r).is_zero());
    }
    for n in 1..=4 {
        // Σ dim S^λ · rank(λ) = rank(V)^n
        let r = 2;
        let total: Scalar = partitions_of(n)
            .iter()
            .map(|s| &Scalar::from_int(s.dim_sn() as i64) * &quantum_rank(s, r))
            .sum();
        assert_eq!(total, quantum_rank(&Partition::row(1), r).pow(n as i64));
    }
}
