use proptest::prelude::*;
use qchar::scalar::{q_int, rat, Scalar};

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e)| Scalar::monomial(rat(c), e))
            .sum()
    })
}

/// Laurent numerators over products of q-integers and p-binomials.
fn scalar() -> impl Strategy<Value = Scalar> {
    (
        laurent(),
        prop::collection::vec(1i64..=4, 0..3),
        prop::option::of(1i64..=3),
    )
        .prop_map(|(num, qs, shift)| {
            let mut den: Scalar = qs.into_iter().map(q_int).product();
            if let Some(c) = shift {
                den = &den * &(&Scalar::p() + &Scalar::from_int(c));
            }
            &num / &den
        })
}

proptest! {
    #[test]
    fn addition_is_a_group(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &Scalar::zero(), a);
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_are_invertible(a in scalar()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&a / &a), &Scalar::one());
        }
    }

    #[test]
    fn text_round_trips(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in scalar(), b in scalar(), p0 in 2i64..6) {
        let x = rat(p0);
        let (va, vb) = (a.eval_at(&x).unwrap(), b.eval_at(&x).unwrap());
        prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).eval_at(&x).unwrap(), va + vb);
    }
}
