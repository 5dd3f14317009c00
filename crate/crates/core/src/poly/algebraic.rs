//! Real algebraic numbers given by a square-free polynomial and an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::qpoly::{QPoly, RatBound, Sturm};

/// An exact real number that is either rational or the unique root of a
/// square-free polynomial inside an open interval whose ends are not roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RealAlgebraic {
    Rational(BigRational),
    Root {
        poly: QPoly,
        lo: BigRational,
        hi: BigRational,
    },
}

impl RealAlgebraic {
    /// Builds the root of `poly` isolated in `(lo, hi)`; degree-one polynomials
    /// collapse to their rational root.
    pub fn root(poly: QPoly, lo: BigRational, hi: BigRational) -> RealAlgebraic {
        if poly.degree() == Some(1) {
            let c = poly.coeffs();
            return RealAlgebraic::Rational(-&c[0] / &c[1]);
        }
        debug_assert!(!poly.eval(&lo).is_zero() && !poly.eval(&hi).is_zero());
        RealAlgebraic::Root { poly, lo, hi }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RealAlgebraic::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Halves the isolating interval.
    pub fn refined(&self) -> RealAlgebraic {
        match self {
            RealAlgebraic::Rational(_) => self.clone(),
            RealAlgebraic::Root { poly, lo, hi } => {
                let mid = (lo + hi) / BigRational::from_integer(2.into());
                let s = poly.sign_at(&mid);
                if s == Ordering::Equal {
                    RealAlgebraic::Rational(mid)
                } else if s == poly.sign_at(lo) {
                    RealAlgebraic::Root {
                        poly: poly.clone(),
                        lo: mid,
                        hi: hi.clone(),
                    }
                } else {
                    RealAlgebraic::Root {
                        poly: poly.clone(),
                        lo: lo.clone(),
                        hi: mid,
                    }
                }
            }
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, z: &BigRational) -> Ordering {
        match self {
            RealAlgebraic::Rational(r) => r.cmp(z),
            RealAlgebraic::Root { poly, lo, hi } => {
                if z <= lo {
                    return Ordering::Greater;
                }
                if z >= hi {
                    return Ordering::Less;
                }
                let s = poly.sign_at(z);
                if s == Ordering::Equal {
                    Ordering::Equal
                } else if s == poly.sign_at(lo) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Exact comparison of two algebraic numbers.
    pub fn compare(&self, other: &RealAlgebraic) -> Ordering {
        match (self, other) {
            (_, RealAlgebraic::Rational(z)) => self.cmp_rational(z),
            (RealAlgebraic::Rational(z), _) => other.cmp_rational(z).reverse(),
            (
                RealAlgebraic::Root {
                    poly: p,
                    lo: a0,
                    hi: a1,
                },
                RealAlgebraic::Root {
                    poly: q,
                    lo: b0,
                    hi: b1,
                },
            ) => {
                let lo = a0.max(b0).clone();
                let hi = a1.min(b1).clone();
                if lo < hi {
                    let g = p.gcd(q);
                    if g.degree().unwrap_or(0) > 0
                        && Sturm::new(&g).count_open(&RatBound::Finite(lo), &RatBound::Finite(hi))
                            > 0
                    {
                        return Ordering::Equal;
                    }
                }
                let (mut x, mut y) = (self.clone(), other.clone());
                loop {
                    if let Some(o) = x.disjoint_order(&y) {
                        return o;
                    }
                    x = x.refined();
                    y = y.refined();
                }
            }
        }
    }

    fn disjoint_order(&self, other: &RealAlgebraic) -> Option<Ordering> {
        match (self, other) {
            (RealAlgebraic::Rational(_), _) | (_, RealAlgebraic::Rational(_)) => {
                Some(self.compare(other))
            }
            (
                RealAlgebraic::Root { lo: a0, hi: a1, .. },
                RealAlgebraic::Root { lo: b0, hi: b1, .. },
            ) => {
                if a1 <= b0 {
                    Some(Ordering::Less)
                } else if b1 <= a0 {
                    Some(Ordering::Greater)
                } else {
                    None
                }
            }
        }
    }

    /// Sign of `q` at this number.
    pub fn sign_of(&self, q: &QPoly) -> Ordering {
        match self {
            RealAlgebraic::Rational(r) => q.sign_at(r),
            RealAlgebraic::Root { poly, .. } => {
                let g = poly.gcd(q);
                let mut x = self.clone();
                if g.degree().unwrap_or(0) > 0 {
                    if let RealAlgebraic::Root { lo, hi, .. } = &x {
                        if Sturm::new(&g).count_open(
                            &RatBound::Finite(lo.clone()),
                            &RatBound::Finite(hi.clone()),
                        ) > 0
                        {
                            return Ordering::Equal;
                        }
                    }
                }
                let qs = Sturm::new(&q.square_free());
                loop {
                    match &x {
                        RealAlgebraic::Rational(r) => return q.sign_at(r),
                        RealAlgebraic::Root { lo, hi, .. } => {
                            let (l, h) =
                                (RatBound::Finite(lo.clone()), RatBound::Finite(hi.clone()));
                            if qs.count_open(&l, &h) == 0
                                && !q.eval(lo).is_zero()
                                && !q.eval(hi).is_zero()
                            {
                                return q.sign_at(lo);
                            }
                        }
                    }
                    x = x.refined();
                }
            }
        }
    }

    /// A floating approximation for display.
    pub fn approx(&self) -> f64 {
        match self {
            RealAlgebraic::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            RealAlgebraic::Root { .. } => {
                let mut x = self.clone();
                for _ in 0..60 {
                    x = x.refined();
                }
                match x {
                    RealAlgebraic::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
                    RealAlgebraic::Root { lo, hi, .. } => ((lo + hi)
                        / BigRational::from_integer(2.into()))
                    .to_f64()
                    .unwrap_or(f64::NAN),
                }
            }
        }
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgebraic::Rational(r) => write!(f, "{r}"),
            RealAlgebraic::Root { poly, lo, hi } => {
                write!(f, "root of {poly} in ({lo}, {hi}) ≈ {:.12}", self.approx())
            }
        }
    }
}

/// All roots of `p` in the open interval `(lo, hi)`, in increasing order.
pub fn real_roots(p: &QPoly, lo: &RatBound, hi: &RatBound) -> Vec<RealAlgebraic> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sq = p.square_free();
    let sturm = Sturm::new(&sq);
    let bound = sq.root_bound();
    let lo_r = match lo {
        RatBound::Finite(x) => x.clone().max(-bound.clone()),
        _ => -bound.clone(),
    };
    let hi_r = match hi {
        RatBound::Finite(x) => x.clone().min(bound),
        _ => bound,
    };
    let mut out = Vec::new();
    if lo_r >= hi_r {
        return out;
    }
    isolate(&sq, &sturm, lo_r, hi_r, &mut out);
    out
}

/// Isolating intervals with dyadic-friendly midpoints, pushed left to right.
fn isolate(
    p: &QPoly,
    sturm: &Sturm,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RealAlgebraic>,
) {
    let n = sturm.count_open(&RatBound::Finite(lo.clone()), &RatBound::Finite(hi.clone()));
    if n == 0 {
        return;
    }
    if n == 1 && !p.eval(&lo).is_zero() && !p.eval(&hi).is_zero() {
        out.push(RealAlgebraic::root(p.clone(), lo, hi));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    isolate(p, sturm, lo, mid.clone(), out);
    if p.eval(&mid).is_zero() {
        out.push(RealAlgebraic::Rational(mid.clone()));
    }
    isolate(p, sturm, mid, hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> QPoly {
        QPoly::new(
            v.iter()
                .map(|&a| BigRational::from_integer(a.into()))
                .collect(),
        )
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt2_comparisons() {
        let roots = real_roots(&q(&[-2, 0, 1]), &RatBound::NegInf, &RatBound::PosInf);
        assert_eq!(roots.len(), 2);
        let s = &roots[1];
        assert_eq!(s.cmp_rational(&r(141, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&r(142, 100)), Ordering::Less);
        assert_eq!(roots[0].compare(s), Ordering::Less);
    }

    #[test]
    fn equal_roots_of_different_polynomials() {
        let a = real_roots(
            &q(&[-2, 0, 1]),
            &RatBound::Finite(r(0, 1)),
            &RatBound::PosInf,
        );
        let b = real_roots(
            &q(&[-2, 0, 1]).mul(&q(&[-3, 0, 1])),
            &RatBound::Finite(r(1, 1)),
            &RatBound::Finite(r(3, 2)),
        );
        assert_eq!(a[0].compare(&b[0]), Ordering::Equal);
    }

    #[test]
    fn rational_roots_found_at_midpoints() {
        let roots = real_roots(&q(&[0, -1, 1]), &RatBound::NegInf, &RatBound::PosInf);
        assert_eq!(
            roots,
            vec![
                RealAlgebraic::Rational(r(0, 1)),
                RealAlgebraic::Rational(r(1, 1))
            ]
        );
    }

    #[test]
    fn sign_at_root() {
        let s = &real_roots(
            &q(&[-2, 0, 1]),
            &RatBound::Finite(r(0, 1)),
            &RatBound::PosInf,
        )[0];
        assert_eq!(s.sign_of(&q(&[-3, 2])), Ordering::Less);
        assert_eq!(s.sign_of(&q(&[-4, 0, 2])), Ordering::Equal);
    }
}
