//! Dense univariate polynomials over the rationals with Sturm root counting.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An end of a real interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RatBound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

/// Polynomial with rational coefficients, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    c: Vec<BigRational>,
}

fn sign(r: &BigRational) -> Ordering {
    r.cmp(&BigRational::zero())
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(r: BigRational) -> Self {
        QPoly::new(vec![r])
    }

    /// `x - r`.
    pub fn x_minus(r: &BigRational) -> Self {
        QPoly::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        sign(&self.eval(x))
    }

    pub fn sign_at_bound(&self, b: &RatBound) -> Ordering {
        match b {
            RatBound::Finite(x) => self.sign_at(x),
            RatBound::PosInf => sign(&self.lead()),
            RatBound::NegInf => {
                let s = sign(&self.lead());
                if self.degree().unwrap_or(0) % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        QPoly::new(
            (0..n)
                .map(|i| {
                    let z = BigRational::zero();
                    self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut acc = QPoly::constant(BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.lead();
        let mut r = self.c.clone();
        let mut q = vec![BigRational::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &f * b;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&(BigRational::one() / self.lead()))
    }

    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors, up to a constant.
    pub fn square_free(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Cauchy bound: every root has absolute value below the returned power of two.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.lead().abs();
        let mut m = BigRational::zero();
        for a in &self.c[..self.c.len().saturating_sub(1)] {
            let q = a.abs() / &lead;
            if q > m {
                m = q;
            }
        }
        let need = m + BigRational::one();
        let mut b = BigRational::one();
        while b <= need {
            b *= BigRational::from_integer(BigInt::from(2));
        }
        b
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            } else if a.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let m = a.abs();
            let show_coeff = i == 0 || !m.is_one();
            if show_coeff {
                write!(f, "{m}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) > 0 {
            chain.push(p.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].div_rem(&chain[n - 1]).1;
                if r.is_zero() {
                    break;
                }
                chain.push(r.scale(&-BigRational::one()));
            }
        }
        Sturm { chain }
    }

    pub fn poly(&self) -> &QPoly {
        &self.chain[0]
    }

    fn variations(&self, b: &RatBound) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for q in &self.chain {
            let s = q.sign_at_bound(b);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct roots in the open interval `(lo, hi)`.
    pub fn count_open(&self, lo: &RatBound, hi: &RatBound) -> usize {
        if self.poly().degree().unwrap_or(0) == 0 {
            return 0;
        }
        let upper = self.variations(lo) - self.variations(hi);
        match hi {
            RatBound::Finite(h) if self.poly().eval(h).is_zero() => upper - 1,
            _ => upper,
        }
    }
}

impl RatBound {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            RatBound::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn less_than(&self, other: &RatBound) -> bool {
        match (self, other) {
            (RatBound::NegInf, RatBound::NegInf) | (RatBound::PosInf, RatBound::PosInf) => false,
            (RatBound::NegInf, _) | (_, RatBound::PosInf) => true,
            (_, RatBound::NegInf) | (RatBound::PosInf, _) => false,
            (RatBound::Finite(a), RatBound::Finite(b)) => a < b,
        }
    }
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
    fn arithmetic() {
        let p = q(&[-1, 1]).mul(&q(&[1, 1]));
        assert_eq!(p, q(&[-1, 0, 1]));
        let (quot, rem) = q(&[-2, 0, 1]).div_rem(&q(&[-1, 1]));
        assert_eq!(quot, q(&[1, 1]));
        assert_eq!(rem, q(&[-1]));
        assert_eq!(q(&[0, 0, 3]).derivative(), q(&[0, 6]));
        assert_eq!(
            q(&[1, -2, 1]).square_free(),
            q(&[-1, 1]).scale(&r(1, 1)).monic()
        );
    }

    #[test]
    fn sturm_counts() {
        let s = Sturm::new(&q(&[-2, 0, 1]));
        assert_eq!(s.count_open(&RatBound::NegInf, &RatBound::PosInf), 2);
        let fin = |n, d| RatBound::Finite(r(n, d));
        assert_eq!(s.count_open(&fin(1, 1), &fin(2, 1)), 1);
        assert_eq!(s.count_open(&fin(-1, 1), &fin(1, 1)), 0);
        let lin = Sturm::new(&q(&[-1, 2]));
        assert_eq!(lin.count_open(&fin(0, 1), &fin(1, 2)), 0);
        assert_eq!(lin.count_open(&fin(1, 2), &fin(1, 1)), 0);
        assert_eq!(lin.count_open(&fin(0, 1), &fin(1, 1)), 1);
        assert_eq!(
            Sturm::new(&q(&[1, 0, 1])).count_open(&RatBound::NegInf, &RatBound::PosInf),
            0
        );
    }

    #[test]
    fn display() {
        assert_eq!(q(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(q(&[1, -3]).to_string(), "-3x + 1");
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let p = q(&[-100, 0, 1]);
        assert!(p.root_bound() > r(10, 1));
    }
}
