use proptest::prelude::*;
use surreal::genetic::{
    builtin, builtin_names, check_uniformity, coarsenings, eval_genetic, eval_with_representation,
    exhaustive_samples, sigma_options, Evaluator, GeneticDefinition, OptionFunction,
    Representation, Side, SigmaPattern, UniformitySample, UniformityWitness,
};
use surreal::{Cut, Dyadic, Error, Sign, SignSequence};

fn v(x: &str) -> SignSequence {
    x.parse().unwrap()
}

fn from(d: Dyadic) -> SignSequence {
    SignSequence::from_dyadic(&d)
}

#[test]
fn catalog_names_resolve() {
    for name in builtin_names() {
        let name = name.replace("<y>", "1");
        assert!(builtin(&name).is_ok(), "{name}");
    }
}

#[test]
fn add1_and_neg_match_dyadic_oracle() {
    let add1 = builtin("add1").unwrap();
    let neg = builtin("neg").unwrap();
    let mut ev_a = Evaluator::new();
    let mut ev_n = Evaluator::new();
    for x in SignSequence::all_up_to(8) {
        let d = x.to_dyadic();
        assert_eq!(
            ev_a.eval(&add1, std::slice::from_ref(&x)).unwrap(),
            from(&d + &Dyadic::one())
        );
        assert_eq!(ev_n.eval(&neg, std::slice::from_ref(&x)).unwrap(), from(-d));
    }
}

#[test]
fn floor_minus_x_has_the_stated_values_on_positives() {
    let f = builtin("floor_minus_x").unwrap();
    let mut ev = Evaluator::new();
    for x in SignSequence::all_up_to(8) {
        let d = x.to_dyadic();
        if d.is_negative() {
            continue;
        }
        let expected = &Dyadic::from_integer(d.floor()) - &d;
        assert_eq!(
            ev.eval(&f, std::slice::from_ref(&x)).unwrap().to_dyadic(),
            expected,
            "at {d}"
        );
    }
}

#[test]
fn sigma_options_follow_the_pattern() {
    let x = [v("1/2"), v("-1")];
    let opts = sigma_options(&x, &SigmaPattern::parse("-0").unwrap()).unwrap();
    assert_eq!(opts, vec![vec![v("0"), v("-1")]]);
    let opts = sigma_options(&x, &SigmaPattern::parse("++").unwrap()).unwrap();
    assert_eq!(opts, vec![vec![v("1"), v("0")]]);
    assert!(SigmaPattern::parse("00").is_err());
    assert_eq!(SigmaPattern::all(2).len(), 8);
}

#[test]
fn recursion_outside_the_options_is_rejected() {
    let bad = GeneticDefinition::new("bad", 1, false).with(OptionFunction::new(
        Side::Left,
        "f(x + 1)",
        vec![],
        |c| {
            let up = SignSequence::from_dyadic(&(&c.x0().to_dyadic() + &Dyadic::one()));
            Ok(vec![c.f(&[up])?])
        },
    ));
    assert!(matches!(
        eval_genetic(&bad, &[v("1")]),
        Err(Error::IllFoundedRecursion { .. })
    ));
    let selfcall = GeneticDefinition::new("self", 1, false).with(OptionFunction::new(
        Side::Left,
        "f(x)",
        vec![],
        |c| {
            let x = c.x.to_vec();
            Ok(vec![c.f(&x)?])
        },
    ));
    assert!(matches!(
        eval_genetic(&selfcall, &[v("0")]),
        Err(Error::IllFoundedRecursion { .. })
    ));
}

#[test]
fn crossed_options_raise_empty_cut() {
    let crossed = GeneticDefinition::new("crossed", 1, false)
        .with(OptionFunction::new(Side::Left, "1", vec![], |_| {
            Ok(vec![v("1")])
        }))
        .with(OptionFunction::new(Side::Right, "0", vec![], |_| {
            Ok(vec![v("0")])
        }));
    assert!(matches!(
        eval_genetic(&crossed, &[v("0")]),
        Err(Error::EmptyCutViolation { .. })
    ));
}

#[test]
fn memo_cap_is_an_error() {
    let prod = builtin("prod2").unwrap();
    let mut ev = Evaluator::with_cap(4);
    let r = ev.eval(&prod, &[v("+-+-+"), v("-+-+")]);
    assert_eq!(r, Err(Error::MemoCapExceeded { cap: 4 }));
    let mut fresh = Evaluator::without_memo();
    assert_eq!(fresh.eval(&prod, &[v("1/2"), v("3")]).unwrap(), v("3/2"));
}

#[test]
fn arity_is_checked() {
    let sum = builtin("sum2").unwrap();
    assert_eq!(
        eval_genetic(&sum, &[v("1")]),
        Err(Error::ArityMismatch {
            expected: 2,
            actual: 1
        })
    );
}

#[test]
fn representations_must_denote_the_argument() {
    let add1 = builtin("add1").unwrap();
    let rep = Representation::new(vec![Cut::new([v("1")], [v("2")]).unwrap()]);
    assert!(matches!(
        eval_with_representation(&add1, &[v("0")], &rep),
        Err(Error::NotARepresentation { .. })
    ));
}

#[test]
fn coarsenings_all_represent_x() {
    for x in SignSequence::all_up_to(4) {
        let cuts = coarsenings(&x, 4);
        assert_eq!(cuts[0], Cut::canonical(&x));
        for c in &cuts {
            assert!(c.represents(&x), "{c} for {x}");
        }
    }
}

#[test]
fn sum_product_negation_are_uniform_at_small_birthdays() {
    for (name, arity) in [("sum2", 2), ("prod2", 2), ("neg", 1), ("add1", 1)] {
        let def = builtin(name).unwrap();
        let r = check_uniformity(&def, &exhaustive_samples(arity, 3)).unwrap();
        assert!(r.uniform_on_samples, "{name}: {:?}", r.witnesses.first());
    }
}

#[test]
fn concatenation_is_not_uniform() {
    let def = builtin("concat_right(1)").unwrap();
    let r = check_uniformity(&def, &exhaustive_samples(1, 3)).unwrap();
    assert!(!r.uniform_on_samples);
    assert!(r
        .witnesses
        .iter()
        .any(|w| matches!(w, UniformityWitness::Representation { .. })));
}

#[test]
fn omnific_floor_truncates_negatives() {
    let f = builtin("omnific_floor").unwrap();
    assert_eq!(eval_genetic(&f, &[v("-1/2")]).unwrap(), v("0"));
    assert_eq!(eval_genetic(&f, &[v("-7/2")]).unwrap(), v("-3"));
    assert_eq!(eval_genetic(&f, &[v("7/2")]).unwrap(), v("3"));
    for x in ["-3/4", "-1/2", "0", "1/4", "3/4"] {
        assert_eq!(eval_genetic(&f, &[v(x)]).unwrap(), v("0"), "at {x}");
    }
}

#[test]
fn pathological_point_value() {
    let f = builtin("pathological_point").unwrap();
    assert_eq!(eval_genetic(&f, &[v("1")]).unwrap(), v("-1/2"));
}

#[test]
fn family_23_literal_values_off_the_sequence() {
    let f = builtin("family_23").unwrap();
    assert_eq!(eval_genetic(&f, &[v("1/4")]).unwrap(), v("1/2"));
    assert_eq!(eval_genetic(&f, &[v("9/16")]).unwrap(), v("5/8"));
}

#[test]
fn canonical_rep_gives_the_canonical_value() {
    let def = builtin("concat_right(1)").unwrap();
    let x = [v("3/8")];
    let sample = UniformitySample {
        args: x.to_vec(),
        representations: vec![Representation::canonical(&x)],
    };
    let r = check_uniformity(&def, &[sample]).unwrap();
    assert!(r
        .witnesses
        .iter()
        .all(|w| !matches!(w, UniformityWitness::Representation { .. })));
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concat_right_is_concatenation(x in signs_strategy(10), y in signs_strategy(4)) {
        let def = builtin(&format!("concat_right({})", y.to_dyadic())).unwrap();
        prop_assert_eq!(eval_genetic(&def, std::slice::from_ref(&x)).unwrap(), x.concat(&y));
    }

    #[test]
    fn memo_does_not_change_values(x in signs_strategy(3), y in signs_strategy(3)) {
        let prod = builtin("prod2").unwrap();
        let a = Evaluator::new().eval(&prod, &[x.clone(), y.clone()]).unwrap();
        let b = Evaluator::without_memo().eval(&prod, &[x, y]).unwrap();
        prop_assert_eq!(a, b);
    }
}
