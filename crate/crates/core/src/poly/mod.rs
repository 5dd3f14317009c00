//! Polynomials with surreal coefficients: evaluation, options, simplicity and roots.

pub mod algebraic;
mod genetic_root;
pub mod qpoly;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::cut::{canonical_options, Cut, ExtendedBound};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::genetic::Side;
use crate::signseq::{Sign, SignSequence};

pub use algebraic::{real_roots, RealAlgebraic};
pub use genetic_root::{find_root_genetic, GeneticRoot, TraceEntry, TraceSource};
pub use qpoly::{QPoly, RatBound, Sturm};

/// `Σ a_i x^i` with coefficients lowest degree first and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SurrealPolynomial {
    coeffs: Vec<SignSequence>,
}

impl SurrealPolynomial {
    pub fn new(mut coeffs: Vec<SignSequence>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SurrealPolynomial { coeffs }
    }

    pub fn from_dyadics(coeffs: &[Dyadic]) -> Self {
        SurrealPolynomial::new(coeffs.iter().map(SignSequence::from_dyadic).collect())
    }

    pub fn from_qpoly(q: &QPoly) -> Option<Self> {
        q.coeffs()
            .iter()
            .map(|c| Dyadic::from_rational(c).map(|d| SignSequence::from_dyadic(&d)))
            .collect::<Option<Vec<_>>>()
            .map(SurrealPolynomial::new)
    }

    pub fn coeffs(&self) -> &[SignSequence] {
        &self.coeffs
    }

    /// `a_i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> SignSequence {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.to_dyadic().to_rational())
                .collect(),
        )
    }

    /// `p - d` as a rational polynomial.
    pub fn shifted(&self, d: &SignSequence) -> QPoly {
        self.to_qpoly()
            .sub(&QPoly::constant(d.to_dyadic().to_rational()))
    }

    /// Coefficient-list literal such as `[-2, 0, 1]`.
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| c.to_dyadic().to_string())
            .collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for SurrealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_qpoly())
    }
}

impl FromStr for SurrealPolynomial {
    type Err = Error;

    /// Parses `[a_0, a_1, …]` with dyadic or sign-string coefficients.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "polynomial literal must be a bracketed list: `{s}`"
                ))
            })?;
        if inner.trim().is_empty() {
            return Ok(SurrealPolynomial::default());
        }
        inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<Dyadic>()
                    .map(|d| SignSequence::from_dyadic(&d))
            })
            .collect::<Result<Vec<_>>>()
            .map(SurrealPolynomial::new)
    }
}

/// Horner evaluation.
pub fn eval_poly(p: &SurrealPolynomial, x: &SignSequence) -> SignSequence {
    let x = x.to_dyadic();
    let mut acc = Dyadic::zero();
    for a in p.coeffs.iter().rev() {
        acc = &(&acc * &x) + &a.to_dyadic();
    }
    SignSequence::from_dyadic(&acc)
}

pub fn derivative(p: &SurrealPolynomial) -> SurrealPolynomial {
    SurrealPolynomial::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| SignSequence::from_dyadic(&(a.to_dyadic() * Dyadic::from(i as i64))))
            .collect(),
    )
}

/// An option `p(x) - (a_m - â)(x - x^L)^α (x - x^R)^(m-α)` of a polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct PolyOption {
    pub m: usize,
    pub alpha: usize,
    #[serde(serialize_with = "ser_signs")]
    pub coeff_option: SignSequence,
    #[serde(serialize_with = "ser_side")]
    pub side: Side,
}

fn ser_signs<S: serde::Serializer>(x: &SignSequence, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_dyadic().to_string())
}

fn ser_side<S: serde::Serializer>(x: &Side, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match x {
        Side::Left => "left",
        Side::Right => "right",
    })
}

/// Left iff `m − α` is even and `â < a_m`, or odd and `â > a_m`.
pub fn option_side(
    m: usize,
    alpha: usize,
    coeff_option: &SignSequence,
    a_m: &SignSequence,
) -> Side {
    let even = (m - alpha).is_multiple_of(2);
    let below = coeff_option < a_m;
    if even == below {
        Side::Left
    } else {
        Side::Right
    }
}

/// Every option `(m, α, â)` with `â` a canonical option of `a_m`.
pub fn poly_options(p: &SurrealPolynomial) -> Vec<PolyOption> {
    let mut out = Vec::new();
    for m in 0..p.coeffs.len() {
        let a = &p.coeffs[m];
        let (l, r) = canonical_options(a);
        for alpha in 0..=m {
            for c in l.iter().chain(r.iter()) {
                out.push(PolyOption {
                    m,
                    alpha,
                    coeff_option: c.clone(),
                    side: option_side(m, alpha, c, a),
                });
            }
        }
    }
    out
}

/// The option polynomial at rational substitutions for `x^L` and `x^R`.
pub fn instantiate_rational(
    opt: &PolyOption,
    p: &SurrealPolynomial,
    xl: Option<&BigRational>,
    xr: Option<&BigRational>,
) -> Result<QPoly> {
    let right_exp = opt.m - opt.alpha;
    let mut term =
        QPoly::constant((p.coeff(opt.m).to_dyadic() - opt.coeff_option.to_dyadic()).to_rational());
    if opt.alpha > 0 {
        let l = xl.ok_or(Error::SideRequired("left"))?;
        term = term.mul(&QPoly::x_minus(l).pow(opt.alpha as u32));
    }
    if right_exp > 0 {
        let r = xr.ok_or(Error::SideRequired("right"))?;
        term = term.mul(&QPoly::x_minus(r).pow(right_exp as u32));
    }
    Ok(p.to_qpoly().sub(&term))
}

/// The option polynomial with `x^L = xl`, `x^R = xr`.
pub fn instantiate_option(
    opt: &PolyOption,
    p: &SurrealPolynomial,
    xl: Option<&SignSequence>,
    xr: Option<&SignSequence>,
) -> Result<SurrealPolynomial> {
    let xl = xl.map(|x| x.to_dyadic().to_rational());
    let xr = xr.map(|x| x.to_dyadic().to_rational());
    let q = instantiate_rational(opt, p, xl.as_ref(), xr.as_ref())?;
    Ok(SurrealPolynomial::from_qpoly(&q).expect("dyadic inputs give dyadic coefficients"))
}

/// `q ≺ p`: equal above some index `m`, and `b_m` strictly simpler than `a_m`.
pub fn is_simpler_poly(q: &SurrealPolynomial, p: &SurrealPolynomial) -> bool {
    let n = q.coeffs.len().max(p.coeffs.len());
    for i in (0..n).rev() {
        let (b, a) = (q.coeff(i), p.coeff(i));
        if b != a {
            return b.is_simpler(&a);
        }
    }
    false
}

/// A closed dyadic interval containing exactly one root; `lo == hi` for a dyadic root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

pub(crate) fn to_rat_bound(b: &ExtendedBound) -> RatBound {
    match b {
        ExtendedBound::NegInf => RatBound::NegInf,
        ExtendedBound::PosInf => RatBound::PosInf,
        ExtendedBound::Finite(x) => RatBound::Finite(x.to_dyadic().to_rational()),
    }
}

/// Roots of `p - d` in the open interval `(a, b)`.
fn roots_in(
    p: &SurrealPolynomial,
    d: &SignSequence,
    a: &ExtendedBound,
    b: &ExtendedBound,
) -> Result<Vec<RealAlgebraic>> {
    let q = p.shifted(d);
    if q.is_zero() {
        return Err(Error::ConstantPolynomial);
    }
    if a >= b {
        return Err(Error::NoRoot);
    }
    Ok(real_roots(&q, &to_rat_bound(a), &to_rat_bound(b)))
}

/// Disjoint dyadic intervals, one per solution of `p(x) = d` in `(a, b)`.
pub fn isolate_roots(
    p: &SurrealPolynomial,
    d: &SignSequence,
    a: &ExtendedBound,
    b: &ExtendedBound,
) -> Result<Vec<RootInterval>> {
    let q = p.shifted(d);
    if q.is_zero() {
        return Err(Error::ConstantPolynomial);
    }
    if a >= b || q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sq = q.square_free();
    let sturm = Sturm::new(&sq);
    let bound = sq.root_bound();
    let lo = match to_rat_bound(a) {
        RatBound::Finite(x) => x.max(-bound.clone()),
        _ => -bound.clone(),
    };
    let hi = match to_rat_bound(b) {
        RatBound::Finite(x) => x.min(bound),
        _ => bound,
    };
    let mut out = Vec::new();
    if lo < hi {
        isolate_dyadic(&sq, &sturm, lo, hi, &mut out);
    }
    Ok(out)
}

fn isolate_dyadic(
    p: &QPoly,
    sturm: &Sturm,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<RootInterval>,
) {
    let n = sturm.count_open(&RatBound::Finite(lo.clone()), &RatBound::Finite(hi.clone()));
    if n == 0 {
        return;
    }
    let dy = |r: &BigRational| Dyadic::from_rational(r).expect("bisection of dyadic ends");
    if n == 1 && !p.eval(&lo).is_zero() && !p.eval(&hi).is_zero() {
        out.push(RootInterval {
            lo: dy(&lo),
            hi: dy(&hi),
        });
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    isolate_dyadic(p, sturm, lo, mid.clone(), out);
    if p.eval(&mid).is_zero() {
        out.push(RootInterval {
            lo: dy(&mid),
            hi: dy(&mid),
        });
    }
    isolate_dyadic(p, sturm, mid, hi, out);
}

/// A verified interval for a number known only through a sign prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enclosure {
    pub low: ExtendedBound,
    pub high: ExtendedBound,
    pub prefix: SignSequence,
    pub exact: bool,
}

impl Enclosure {
    /// The tightest bounds shared by every number whose signs start with `prefix`:
    /// its nearest canonical options.
    pub fn of_prefix(prefix: &SignSequence) -> Enclosure {
        let cut = Cut::canonical(prefix);
        Enclosure {
            low: cut
                .max_left()
                .map_or(ExtendedBound::NegInf, |x| ExtendedBound::Finite(x.clone())),
            high: cut
                .min_right()
                .map_or(ExtendedBound::PosInf, |x| ExtendedBound::Finite(x.clone())),
            prefix: prefix.clone(),
            exact: false,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootResult {
    Exact(SignSequence),
    Prefix(Enclosure),
}

impl RootResult {
    pub fn is_exact(&self) -> bool {
        matches!(self, RootResult::Exact(_))
    }

    /// The signs determined so far.
    pub fn signs(&self) -> &SignSequence {
        match self {
            RootResult::Exact(x) => x,
            RootResult::Prefix(e) => &e.prefix,
        }
    }

    pub fn enclosure(&self) -> Enclosure {
        match self {
            RootResult::Exact(x) => Enclosure {
                low: ExtendedBound::Finite(x.clone()),
                high: ExtendedBound::Finite(x.clone()),
                prefix: x.clone(),
                exact: true,
            },
            RootResult::Prefix(e) => e.clone(),
        }
    }
}

/// Sign walk toward `rho`: each sign records whether `rho` lies above or below
/// the number spelled so far.
pub(crate) fn sign_walk(rho: &RealAlgebraic, max_signs: usize) -> RootResult {
    let mut z = SignSequence::zero();
    loop {
        let ord = rho.cmp_rational(&z.to_dyadic().to_rational());
        if ord == Ordering::Equal {
            return RootResult::Exact(z);
        }
        if z.birthday() == max_signs {
            return RootResult::Prefix(Enclosure::of_prefix(&z));
        }
        z.push(if ord == Ordering::Greater {
            Sign::Plus
        } else {
            Sign::Minus
        });
    }
}

/// Sign expansion of the unique solution of `p(x) = d` in `(a, b)`, up to `max_signs` signs.
pub fn root_sign_expansion(
    p: &SurrealPolynomial,
    d: &SignSequence,
    a: &ExtendedBound,
    b: &ExtendedBound,
    max_signs: usize,
) -> Result<RootResult> {
    let roots = roots_in(p, d, a, b)?;
    match roots.len() {
        0 => Err(Error::NoRoot),
        1 => Ok(sign_walk(&roots[0], max_signs)),
        n => Err(Error::NotIsolated(n)),
    }
}

/// Among all solutions of `p(x) = d` in `(a, b)`, the exact one of least
/// birthday; without exact solutions, the least solution.
pub fn simplest_root(
    p: &SurrealPolynomial,
    d: &SignSequence,
    a: &ExtendedBound,
    b: &ExtendedBound,
    max_signs: usize,
) -> Result<RootResult> {
    let results: Vec<RootResult> = roots_in(p, d, a, b)?
        .iter()
        .map(|r| sign_walk(r, max_signs))
        .collect();
    let best_exact = results
        .iter()
        .filter(|r| r.is_exact())
        .min_by_key(|r| r.signs().birthday())
        .cloned();
    best_exact
        .or_else(|| results.into_iter().next())
        .ok_or(Error::NoRoot)
}

/// `1/a` as the root of `a x − 1`.
pub fn reciprocal(a: &SignSequence, max_signs: usize) -> Result<RootResult> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let p = SurrealPolynomial::new(vec![SignSequence::integer(-1), a.clone()]);
    let zero = ExtendedBound::Finite(SignSequence::zero());
    let (lo, hi) = if a > &SignSequence::zero() {
        (zero, ExtendedBound::PosInf)
    } else {
        (ExtendedBound::NegInf, zero)
    };
    root_sign_expansion(&p, &SignSequence::zero(), &lo, &hi, max_signs)
}

/// `√a` as the nonnegative root of `x² − a`.
pub fn sqrt(a: &SignSequence, max_signs: usize) -> Result<RootResult> {
    if a < &SignSequence::zero() {
        return Err(Error::NegativeRadicand(a.to_dyadic().to_string()));
    }
    if a.is_zero() {
        return Ok(RootResult::Exact(SignSequence::zero()));
    }
    let p = SurrealPolynomial::new(vec![
        a.negate_signs(),
        SignSequence::zero(),
        SignSequence::integer(1),
    ]);
    root_sign_expansion(
        &p,
        &SignSequence::zero(),
        &ExtendedBound::Finite(SignSequence::zero()),
        &ExtendedBound::PosInf,
        max_signs,
    )
}

/// `true` when `x` lies in the closed enclosure.
pub fn enclosure_contains(e: &Enclosure, x: &RealAlgebraic) -> bool {
    let above_low = match &e.low {
        ExtendedBound::NegInf => true,
        ExtendedBound::PosInf => false,
        ExtendedBound::Finite(l) => x.cmp_rational(&l.to_dyadic().to_rational()) != Ordering::Less,
    };
    let below_high = match &e.high {
        ExtendedBound::PosInf => true,
        ExtendedBound::NegInf => false,
        ExtendedBound::Finite(h) => {
            x.cmp_rational(&h.to_dyadic().to_rational()) != Ordering::Greater
        }
    };
    above_low && below_high
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str) -> SignSequence {
        x.parse().unwrap()
    }

    fn poly(s: &str) -> SurrealPolynomial {
        s.parse().unwrap()
    }

    fn fin(x: &str) -> ExtendedBound {
        ExtendedBound::Finite(v(x))
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_poly(&poly("[-2,0,1]"), &v("1")), v("-1"));
        assert_eq!(eval_poly(&poly("[3/4,5,1]"), &v("0")), v("3/4"));
        assert_eq!(eval_poly(&poly("[-1,2]"), &v("1/2")), v("0"));
        assert_eq!(derivative(&poly("[-2,0,1]")), poly("[0,2]"));
        assert_eq!(derivative(&poly("[7]")), poly("[]"));
        assert_eq!(derivative(&poly("[0,0,0,1]")), poly("[0,0,3]"));
    }

    #[test]
    fn options_of_square() {
        let p = poly("[0,0,1]");
        let opts = poly_options(&p);
        let find = |m, alpha| {
            opts.iter()
                .find(|o| o.m == m && o.alpha == alpha && o.coeff_option == v("0"))
                .unwrap()
                .clone()
        };
        let left = find(2, 2);
        assert_eq!(left.side, Side::Left);
        assert_eq!(find(2, 1).side, Side::Right);
        let q = instantiate_option(&left, &p, Some(&v("1")), None).unwrap();
        assert_eq!(q, poly("[-1,2]"));
        assert!(is_simpler_poly(&q, &p));
        assert!(matches!(
            instantiate_option(&find(2, 1), &p, Some(&v("1")), None),
            Err(Error::SideRequired("right"))
        ));
    }

    #[test]
    fn options_of_linear() {
        let opts = poly_options(&poly("[-1,2]"));
        let m1: Vec<_> = opts.iter().filter(|o| o.m == 1).collect();
        assert_eq!(m1.len(), 4);
        assert!(m1
            .iter()
            .all(|o| o.coeff_option == v("0") || o.coeff_option == v("1")));
    }

    #[test]
    fn simpler_polynomials() {
        assert!(is_simpler_poly(&poly("[-1,2]"), &poly("[0,0,1]")));
        assert!(!is_simpler_poly(&poly("[-1,2]"), &poly("[-1,2]")));
        assert!(is_simpler_poly(&poly("[0,1]"), &poly("[1,1]")));
    }

    #[test]
    fn isolation() {
        let iv = isolate_roots(&poly("[-2,0,1]"), &v("0"), &fin("-8"), &fin("8")).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].hi <= Dyadic::zero() && iv[1].lo >= Dyadic::zero());
        let iv = isolate_roots(&poly("[-1,2]"), &v("0"), &fin("0"), &fin("1")).unwrap();
        let half: Dyadic = "1/2".parse().unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv[0].lo <= half && half <= iv[0].hi);
        assert!(
            isolate_roots(&poly("[1,0,1]"), &v("0"), &fin("-8"), &fin("8"))
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn sign_expansion_examples() {
        let r = root_sign_expansion(&poly("[-1,2]"), &v("0"), &fin("0"), &fin("1"), 8).unwrap();
        assert_eq!(r, RootResult::Exact(v("1/2")));
        let r = root_sign_expansion(&poly("[-2,3]"), &v("0"), &fin("0"), &fin("1"), 6).unwrap();
        assert_eq!(r.signs().sign_string(), "+-+-+-");
        let e = r.enclosure();
        assert_eq!((e.low, e.high), (fin("5/8"), fin("11/16")));
        let r = root_sign_expansion(&poly("[-2,0,1]"), &v("0"), &fin("1"), &fin("2"), 8).unwrap();
        assert_eq!(r.signs().sign_string(), "++--++-+");
        assert!(matches!(
            root_sign_expansion(&poly("[-2,0,1]"), &v("0"), &fin("-8"), &fin("8"), 8),
            Err(Error::NotIsolated(2))
        ));
    }

    #[test]
    fn reciprocal_and_sqrt() {
        assert_eq!(reciprocal(&v("2"), 8).unwrap(), RootResult::Exact(v("1/2")));
        assert_eq!(reciprocal(&v("1"), 8).unwrap(), RootResult::Exact(v("1")));
        assert_eq!(
            reciprocal(&v("3"), 7).unwrap().signs().sign_string(),
            "+--+-+-"
        );
        assert_eq!(
            reciprocal(&v("-2"), 8).unwrap(),
            RootResult::Exact(v("-1/2"))
        );
        assert!(matches!(reciprocal(&v("0"), 8), Err(Error::DivisionByZero)));
        assert_eq!(sqrt(&v("4"), 8).unwrap(), RootResult::Exact(v("2")));
        assert_eq!(sqrt(&v("0"), 8).unwrap(), RootResult::Exact(v("0")));
        assert_eq!(sqrt(&v("2"), 8).unwrap().signs().sign_string(), "++--++-+");
        assert!(matches!(sqrt(&v("-1"), 8), Err(Error::NegativeRadicand(_))));
    }

    #[test]
    fn simplest_root_prefers_short_exact() {
        let p = poly("[0,-3/2,1]");
        let r = simplest_root(&p, &v("0"), &fin("-8"), &fin("8"), 10).unwrap();
        assert_eq!(r, RootResult::Exact(v("0")));
    }
}
