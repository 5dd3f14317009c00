use proptest::prelude::*;
use surreal::arith::{add, mul, neg, pow_nat, sub, GeneticArith};
use surreal::{Sign, SignSequence};

fn v(x: &str) -> SignSequence {
    x.parse().unwrap()
}

fn signs_strategy(max_len: usize) -> impl Strategy<Value = SignSequence> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|v| {
        SignSequence::from_signs(
            v.into_iter()
                .map(|b| if b { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    })
}

#[test]
fn listed_values() {
    assert_eq!(add(&v("1/2"), &v("1/2")), v("1"));
    assert_eq!(add(&v("3/4"), &v("-1/4")), v("1/2"));
    assert_eq!(neg(&v("2")), v("-2"));
    assert_eq!(sub(&v("3/4"), &v("1/4")), v("1/2"));
    assert_eq!(mul(&v("1/2"), &v("2")), v("1"));
    assert_eq!(mul(&v("-1/2"), &v("-1/2")), v("1/4"));
    assert_eq!(pow_nat(&v("1/2"), 2), v("1/4"));
    assert_eq!(pow_nat(&v("2"), 3), v("8"));
    assert_eq!(pow_nat(&v("7/8"), 0), v("1"));
}

#[test]
fn genetic_negation_is_sign_flip() {
    let mut g = GeneticArith::new();
    for x in SignSequence::all_up_to(9) {
        assert_eq!(g.neg(&x).unwrap(), x.negate_signs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(x in signs_strategy(10), y in signs_strategy(10), z in signs_strategy(10)) {
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
    }

    #[test]
    fn negation(x in signs_strategy(20)) {
        prop_assert_eq!(neg(&neg(&x)), x.clone());
        prop_assert_eq!(add(&x, &neg(&x)), SignSequence::zero());
        prop_assert_eq!(sub(&SignSequence::zero(), &x), neg(&x));
    }

    #[test]
    fn genetic_matches_dyadic(x in signs_strategy(7), y in signs_strategy(7)) {
        let mut g = GeneticArith::new();
        prop_assert_eq!(g.add(&x, &y).unwrap(), add(&x, &y));
        prop_assert_eq!(g.mul(&x, &y).unwrap(), mul(&x, &y));
    }

    #[test]
    fn genetic_ring_laws(x in signs_strategy(5), y in signs_strategy(5), z in signs_strategy(5)) {
        let mut g = GeneticArith::new();
        let xy = g.mul(&x, &y).unwrap();
        let yx = g.mul(&y, &x).unwrap();
        prop_assert_eq!(&xy, &yx);
        let y_plus_z = g.add(&y, &z).unwrap();
        let lhs = g.mul(&x, &y_plus_z).unwrap();
        let xz = g.mul(&x, &z).unwrap();
        let rhs = g.add(&xy, &xz).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
