//! Exact dyadic rationals `n / 2^k`, the value space of finite-birthday surreals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// A rational number whose denominator is a power of two.
///
/// Always stored in lowest terms: either `exponent == 0` or the numerator is odd.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut d = Dyadic {
            numerator: numerator.into(),
            exponent,
        };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Self {
        Dyadic::new(1, 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0);
        let shift = tz.min(u64::from(self.exponent)) as u32;
        if shift > 0 {
            self.numerator >>= shift;
            self.exponent -= shift;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    pub fn signum(&self) -> Ordering {
        self.numerator.sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    /// Greatest integer not above `self`.
    pub fn floor(&self) -> BigInt {
        if self.exponent == 0 {
            return self.numerator.clone();
        }
        // Arithmetic shift rounds toward negative infinity.
        &self.numerator >> self.exponent
    }

    /// Integer part, rounding toward zero.
    pub fn trunc(&self) -> BigInt {
        if self.is_negative() {
            -((-&self.numerator) >> self.exponent)
        } else {
            self.floor()
        }
    }

    /// `self * 2^k` for signed `k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if k >= 0 {
            let k = k as u32;
            if k <= self.exponent {
                Dyadic::new(self.numerator.clone(), self.exponent - k)
            } else {
                Dyadic::new(&self.numerator << (k - self.exponent), 0)
            }
        } else {
            Dyadic::new(self.numerator.clone(), self.exponent + (-k) as u32)
        }
    }

    /// Midpoint of two dyadics, which is again dyadic.
    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        (self + other).mul_pow2(-1)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), BigInt::one() << self.exponent)
    }

    /// Converts an exact rational when its reduced denominator is a power of two.
    pub fn from_rational(r: &BigRational) -> Option<Dyadic> {
        let denom = r.denom();
        let bits = denom.bits();
        if bits == 0 {
            return None;
        }
        let tz = denom.trailing_zeros().unwrap_or(0);
        if tz + 1 != bits {
            return None;
        }
        Some(Dyadic::new(r.numer().clone(), tz as u32))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    fn align(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exponent.max(other.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &other.numerator << (e - other.exponent);
        (a, b, e)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_integer(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::from_integer(n)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.align(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.align(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.align(rhs);
        Dyadic::new(a - b, e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(
            &self.numerator * &rhs.numerator,
            self.exponent + rhs.exponent,
        )
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n`, `n/d` with `d` a power of two, and `n/2^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("not a dyadic literal: `{s}`"));
        let s = s.trim();
        let int = |t: &str| -> Result<BigInt, Error> {
            let t = t.trim();
            let t = t.strip_prefix('+').unwrap_or(t);
            if t.is_empty()
                || !t
                    .trim_start_matches('-')
                    .chars()
                    .all(|c| c.is_ascii_digit())
            {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Dyadic::from_integer(int(s)?)),
            Some((n, d)) => {
                let n = int(n)?;
                let d = d.trim();
                if let Some(k) = d.strip_prefix("2^") {
                    let k: u32 = k.parse().map_err(|_| bad())?;
                    return Ok(Dyadic::new(n, k));
                }
                let d = int(d)?;
                if !d.is_positive() {
                    return Err(bad());
                }
                let r = BigRational::new(n, d);
                Dyadic::from_rational(&r).ok_or_else(|| {
                    Error::Parse(format!("`{s}` does not have a power-of-two denominator"))
                })
            }
        }
    }
}

impl serde::Serialize for Dyadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn lowest_terms() {
        let x = Dyadic::new(4, 3);
        assert_eq!(x.numerator(), &BigInt::from(1));
        assert_eq!(x.exponent(), 1);
        assert_eq!(Dyadic::new(0, 7).exponent(), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(d("5/8"), Dyadic::new(5, 3));
        assert_eq!(d("5/2^3"), Dyadic::new(5, 3));
        assert_eq!(d("-3"), Dyadic::from_integer(-3));
        assert_eq!(d("6/4"), Dyadic::new(3, 1));
        assert_eq!(d("-21/64").to_string(), "-21/64");
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("abc".parse::<Dyadic>().is_err());
        assert!("1/0".parse::<Dyadic>().is_err());
    }

    #[test]
    fn floor_and_trunc() {
        assert_eq!(d("-1/2").floor(), BigInt::from(-1));
        assert_eq!(d("-1/2").trunc(), BigInt::from(0));
        assert_eq!(d("7/2").floor(), BigInt::from(3));
        assert_eq!(d("-7/2").trunc(), BigInt::from(-3));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&d("3/4") + &d("-1/4"), d("1/2"));
        assert_eq!(&d("-1/2") * &d("-1/2"), d("1/4"));
        assert_eq!(d("1/4").midpoint(&d("1/2")), d("3/8"));
        assert!(d("5/8") < d("3/4"));
    }
}
