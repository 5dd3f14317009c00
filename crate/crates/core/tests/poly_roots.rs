use std::cmp::Ordering;

use num_rational::BigRational;
use proptest::prelude::*;
use surreal::poly::{
    derivative, enclosure_contains, eval_poly, find_root_genetic, instantiate_option,
    is_simpler_poly, isolate_roots, poly_options, real_roots, reciprocal, root_sign_expansion,
    simplest_root, sqrt, QPoly, RatBound, RootResult, SurrealPolynomial,
};
use surreal::{Dyadic, Error, ExtendedBound, SignSequence};

fn v(x: &str) -> SignSequence {
    x.parse().unwrap()
}

fn poly(s: &str) -> SurrealPolynomial {
    s.parse().unwrap()
}

fn fin(x: &str) -> ExtendedBound {
    ExtendedBound::Finite(v(x))
}

/// Bracket-walk oracle: the sign says whether the target is above the current point.
fn walk_oracle(above: impl Fn(&Dyadic) -> Ordering, n: usize) -> (String, bool) {
    let mut z = Dyadic::zero();
    let (mut lo, mut hi): (Option<Dyadic>, Option<Dyadic>) = (None, None);
    let mut out = String::new();
    loop {
        let o = above(&z);
        if o == Ordering::Equal {
            return (out, true);
        }
        if out.len() == n {
            return (out, false);
        }
        if o == Ordering::Greater {
            out.push('+');
            lo = Some(z.clone());
        } else {
            out.push('-');
            hi = Some(z.clone());
        }
        z = match (&lo, &hi) {
            (Some(l), Some(h)) => l.midpoint(h),
            (Some(l), None) => l + &Dyadic::one(),
            (None, Some(h)) => h - &Dyadic::one(),
            (None, None) => unreachable!(),
        };
    }
}

#[test]
fn reciprocal_and_square_root_examples() {
    let r = reciprocal(&v("3"), 7).unwrap();
    assert_eq!(r.signs().sign_string(), "+--+-+-");
    let e = r.enclosure();
    assert!(!e.exact);
    assert_eq!(
        reciprocal(&v("4"), 10).unwrap(),
        RootResult::Exact(v("1/4"))
    );
    assert_eq!(reciprocal(&v("0"), 10), Err(Error::DivisionByZero));
    assert_eq!(sqrt(&v("2"), 8).unwrap().signs().sign_string(), "++--++-+");
    assert_eq!(sqrt(&v("9/4"), 20).unwrap(), RootResult::Exact(v("3/2")));
    assert_eq!(sqrt(&v("0"), 5).unwrap(), RootResult::Exact(v("0")));
    assert!(matches!(sqrt(&v("-1"), 5), Err(Error::NegativeRadicand(_))));
}

#[test]
fn root_errors() {
    let p = poly("[-2,0,1]");
    assert_eq!(
        root_sign_expansion(
            &p,
            &v("0"),
            &ExtendedBound::NegInf,
            &ExtendedBound::PosInf,
            8
        ),
        Err(Error::NotIsolated(2))
    );
    assert_eq!(
        root_sign_expansion(&p, &v("0"), &fin("2"), &fin("3"), 8),
        Err(Error::NoRoot)
    );
    assert_eq!(
        root_sign_expansion(&poly("[5]"), &v("5"), &fin("0"), &fin("1"), 8),
        Err(Error::ConstantPolynomial)
    );
    assert_eq!(
        root_sign_expansion(&poly("[5]"), &v("0"), &fin("0"), &fin("1"), 8),
        Err(Error::NoRoot)
    );
}

#[test]
fn simplest_root_prefers_exact_roots() {
    let p = poly("[0,-2,0,1]");
    let r = simplest_root(
        &p,
        &v("0"),
        &ExtendedBound::NegInf,
        &ExtendedBound::PosInf,
        16,
    )
    .unwrap();
    assert_eq!(r, RootResult::Exact(v("0")));
}

#[test]
fn isolating_intervals_separate_roots() {
    let p = poly("[-2,0,1]");
    let iv = isolate_roots(&p, &v("0"), &ExtendedBound::NegInf, &ExtendedBound::PosInf).unwrap();
    assert_eq!(iv.len(), 2);
    assert!(iv[0].hi <= iv[1].lo);
}

#[test]
fn polynomial_options_are_simpler() {
    for s in ["[0,0,1]", "[-1,2]", "[1,-1,1]", "[-2,0,0,1]", "[1/2,3/4,1]"] {
        let p = poly(s);
        for opt in poly_options(&p) {
            let (cl, cr) = (v("-1"), v("3"));
            match instantiate_option(&opt, &p, Some(&cl), Some(&cr)) {
                Ok(q) => assert!(is_simpler_poly(&q, &p), "{q} from {p} via {opt:?}"),
                Err(e) => assert!(matches!(e, Error::SideRequired(_))),
            }
        }
    }
    assert!(is_simpler_poly(&poly("[0,1]"), &poly("[1,1]")));
    assert!(!is_simpler_poly(&poly("[1,1]"), &poly("[1,1]")));
    assert_eq!(derivative(&poly("[-2,0,1]")), poly("[0,2]"));
    assert_eq!(derivative(&poly("[0,0,0,1]")), poly("[0,0,3]"));
}

#[test]
fn square_instantiation_example() {
    let p = poly("[0,0,1]");
    let opt = poly_options(&p)
        .into_iter()
        .find(|o| o.m == 2 && o.alpha == 2 && o.coeff_option.is_zero())
        .expect("option with m = α = 2 and zero coefficient");
    let q = instantiate_option(&opt, &p, Some(&v("1")), None).unwrap();
    assert_eq!(q, poly("[-1,2]"));
}

#[test]
fn genetic_roots_agree_with_the_walk() {
    let fixtures = [
        ("[-1,2]", "0", "0", "1"),
        ("[-2,3]", "0", "0", "1"),
        ("[-1,4]", "0", "0", "1"),
        ("[-2,0,1]", "0", "1", "2"),
        ("[-1,0,3]", "0", "0", "1"),
        ("[-1,1,1]", "0", "0", "1"),
        ("[0,0,1]", "1/4", "0", "1"),
    ];
    for (p, d, a, b) in fixtures {
        let (p, d, a, b) = (poly(p), v(d), fin(a), fin(b));
        let walk = root_sign_expansion(&p, &d, &a, &b, 40).unwrap();
        let g = find_root_genetic(&p, &d, &a, &b, 24).unwrap();
        let k = walk.signs().birthday().min(g.result.signs().birthday());
        assert_eq!(
            walk.signs().prefix(k),
            g.result.signs().prefix(k),
            "{p} = {d}"
        );
        if let RootResult::Exact(c) = &g.result {
            assert_eq!(eval_poly(&p, c), d);
        }
        for t in &g.trace {
            assert!(t.point.approx().is_finite());
        }
    }
}

#[test]
fn real_roots_of_products() {
    let q = |v: &[i64]| {
        QPoly::new(
            v.iter()
                .map(|&a| BigRational::from_integer(a.into()))
                .collect(),
        )
    };
    let p = q(&[-2, 0, 1]).mul(&q(&[-1, 0, 3])).mul(&q(&[1, 1]));
    let roots = real_roots(&p, &RatBound::NegInf, &RatBound::PosInf);
    assert_eq!(roots.len(), 5);
    for w in roots.windows(2) {
        assert_eq!(w[0].compare(&w[1]), Ordering::Less);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_roots_match_walk(num in 1i64..200, den in 1i64..40) {
        // den * x - num = 0 on (0, +inf)
        let p = SurrealPolynomial::new(vec![SignSequence::integer(-num), SignSequence::integer(den)]);
        let r = root_sign_expansion(&p, &v("0"), &fin("0"), &ExtendedBound::PosInf, 30).unwrap();
        let (n, d) = (Dyadic::from(num), Dyadic::from(den));
        let (signs, exact) = walk_oracle(|z| n.cmp(&(&d * z)), 30);
        prop_assert_eq!(r.signs().sign_string(), signs);
        prop_assert_eq!(r.is_exact(), exact);
    }

    #[test]
    fn square_roots_match_walk(a in 1i64..500) {
        let r = sqrt(&SignSequence::integer(a), 24).unwrap();
        let t = Dyadic::from(a);
        let (signs, exact) = walk_oracle(|z| if z.is_negative() { Ordering::Greater } else { t.cmp(&(z * z)) }, 24);
        prop_assert_eq!(r.signs().sign_string(), signs);
        prop_assert_eq!(r.is_exact(), exact);
        let rho = real_roots(&QPoly::new(vec![-Dyadic::from(a).to_rational(), Dyadic::zero().to_rational(), Dyadic::one().to_rational()]), &RatBound::Finite(Dyadic::zero().to_rational()), &RatBound::PosInf);
        prop_assert!(enclosure_contains(&r.enclosure(), &rho[0]));
    }
}
