//! Surreal numbers of finite birthday, represented by their sign sequences.
//!
//! A sign sequence is a finite list of `+` and `-`; the empty list is `0`.
//! The value order compares the first differing position, treating a missing
//! sign as lying between `-` and `+`. Prefixes are the simpler numbers.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::dyadic::Dyadic;
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Position in the value order where an undefined sign ranks as 0.
    fn rank(sign: Option<Sign>) -> i8 {
        match sign {
            Some(Sign::Minus) => -1,
            None => 0,
            Some(Sign::Plus) => 1,
        }
    }
}

/// A finite-birthday surreal number.
///
/// `Ord` is the numeric order of the surreal; equality is equality of sign lists,
/// which coincides with numeric equality because sign sequences are canonical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SignSequence {
    signs: Vec<Sign>,
}

impl Hash for SignSequence {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_usize(self.signs.len());
        for chunk in self.signs.chunks(64) {
            let word =
                chunk.iter().enumerate().fold(
                    0u64,
                    |w, (i, s)| if *s == Sign::Plus { w | 1 << i } else { w },
                );
            state.write_u64(word);
        }
    }
}

impl SignSequence {
    pub fn zero() -> Self {
        SignSequence::default()
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        SignSequence { signs }
    }

    /// The integer `n`: `|n|` copies of its sign.
    pub fn integer(n: i64) -> Self {
        let sign = if n < 0 { Sign::Minus } else { Sign::Plus };
        SignSequence {
            signs: vec![sign; n.unsigned_abs() as usize],
        }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn get(&self, i: usize) -> Option<Sign> {
        self.signs.get(i).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn birthday(&self) -> usize {
        self.signs.len()
    }

    /// The restriction to the first `len` signs.
    pub fn prefix(&self, len: usize) -> SignSequence {
        SignSequence {
            signs: self.signs[..len.min(self.signs.len())].to_vec(),
        }
    }

    /// All strict prefixes, shortest first.
    pub fn strict_prefixes(&self) -> impl Iterator<Item = SignSequence> + '_ {
        (0..self.signs.len()).map(move |k| self.prefix(k))
    }

    pub fn push(&mut self, sign: Sign) {
        self.signs.push(sign);
    }

    pub fn with(&self, sign: Sign) -> SignSequence {
        let mut s = self.clone();
        s.push(sign);
        s
    }

    /// `x` is strictly simpler than `y`: a strict prefix of it.
    pub fn is_simpler(&self, other: &SignSequence) -> bool {
        self.signs.len() < other.signs.len() && other.signs.starts_with(&self.signs)
    }

    /// `x ⪯ y`: a prefix of it, possibly equal.
    pub fn is_prefix_of(&self, other: &SignSequence) -> bool {
        other.signs.starts_with(&self.signs)
    }

    /// Neither is a prefix of the other.
    pub fn is_perp(&self, other: &SignSequence) -> bool {
        !self.is_prefix_of(other) && !other.is_prefix_of(self)
    }

    /// Signs of `self` followed by signs of `other`.
    pub fn concat(&self, other: &SignSequence) -> SignSequence {
        let mut signs = Vec::with_capacity(self.signs.len() + other.signs.len());
        signs.extend_from_slice(&self.signs);
        signs.extend_from_slice(&other.signs);
        SignSequence { signs }
    }

    /// Flips every sign; this is the negation of the number.
    pub fn negate_signs(&self) -> SignSequence {
        SignSequence {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    pub fn compare(&self, other: &SignSequence) -> Ordering {
        let n = self.signs.len().max(other.signs.len());
        for i in 0..n {
            let (a, b) = (self.get(i), other.get(i));
            if a != b {
                return Sign::rank(a).cmp(&Sign::rank(b));
            }
        }
        Ordering::Equal
    }

    /// The dyadic value: a leading run of `k` equal signs gives `±k`, and each
    /// later sign adds `±2^-j` for the `j`-th sign after the run.
    pub fn to_dyadic(&self) -> Dyadic {
        let Some(&first) = self.signs.first() else {
            return Dyadic::zero();
        };
        let run = self.signs.iter().take_while(|&&s| s == first).count();
        let tail = &self.signs[run..];
        let exp = tail.len() as u32;
        if exp < 100 && run < (1 << 20) {
            let mut acc = (run as i128) << exp;
            if first == Sign::Minus {
                acc = -acc;
            }
            for (j, s) in tail.iter().enumerate() {
                let term = 1i128 << (exp - 1 - j as u32);
                match s {
                    Sign::Plus => acc += term,
                    Sign::Minus => acc -= term,
                }
            }
            return Dyadic::new(acc, exp);
        }
        // value * 2^exp, accumulated as an integer.
        let mut acc = BigInt::from(run) << exp;
        if first == Sign::Minus {
            acc = -acc;
        }
        for (j, s) in tail.iter().enumerate() {
            let term = BigInt::from(1) << (exp - 1 - j as u32);
            match s {
                Sign::Plus => acc += term,
                Sign::Minus => acc -= term,
            }
        }
        Dyadic::new(acc, exp)
    }

    /// The unique sign sequence with the given value.
    pub fn from_dyadic(d: &Dyadic) -> SignSequence {
        let mut signs = Vec::new();
        if d.is_zero() {
            return SignSequence { signs };
        }
        let (first, mag) = if d.is_negative() {
            (Sign::Minus, -d)
        } else {
            (Sign::Plus, d.clone())
        };
        // A non-integer |d| in (n, n+1) starts with n + 1 equal signs and turns
        // back to n + 1/2; the binary digits b_1 … b_(e-1) of the fraction then
        // give one sign each.
        let int_part = mag.floor();
        let run = if mag.is_integer() {
            int_part
        } else {
            int_part + 1
        };
        let run = run
            .to_usize()
            .expect("sign sequence length exceeds addressable memory");
        signs.extend(std::iter::repeat_n(first, run));
        if mag.is_integer() {
            return SignSequence { signs };
        }
        let (up, down) = (first, first.flip());
        signs.push(down);
        let e = u64::from(mag.exponent());
        let m = mag.numerator();
        signs.extend((1..e).map(|j| if m.bit(e - j) { up } else { down }));
        SignSequence { signs }
    }

    /// Every sign sequence of length at most `max_birthday`, shortest first and
    /// in increasing value within each length.
    pub fn all_up_to(max_birthday: usize) -> Vec<SignSequence> {
        let mut out = vec![SignSequence::zero()];
        let mut level = vec![SignSequence::zero()];
        for _ in 0..max_birthday {
            let mut next = Vec::with_capacity(level.len() * 2);
            for x in &level {
                next.push(x.with(Sign::Minus));
                next.push(x.with(Sign::Plus));
            }
            next.sort();
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

impl Ord for SignSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl PartialOrd for SignSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            return f.write_str("0");
        }
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.sign_string())
    }
}

impl SignSequence {
    /// The literal `[+-]*` form; empty for zero.
    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    /// Parses a `[+-]*` sign string.
    pub fn parse_signs(s: &str) -> Result<SignSequence, Error> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::Parse(format!("not a sign string: `{s}`"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignSequence::from_signs)
    }

    /// Parses either a sign string or a dyadic literal. Strings made only of
    /// `+` and `-` are sign strings; anything with a digit is a dyadic.
    pub fn parse_value(s: &str) -> Result<SignSequence, Error> {
        let s = s.trim();
        if s.chars().all(|c| c == '+' || c == '-') {
            SignSequence::parse_signs(s)
        } else {
            Ok(SignSequence::from_dyadic(&s.parse::<Dyadic>()?))
        }
    }
}

impl FromStr for SignSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignSequence::parse_value(s)
    }
}

impl From<&Dyadic> for SignSequence {
    fn from(d: &Dyadic) -> Self {
        SignSequence::from_dyadic(d)
    }
}

impl From<&SignSequence> for Dyadic {
    fn from(x: &SignSequence) -> Self {
        x.to_dyadic()
    }
}

/// An infinite, eventually periodic sign sequence such as `2/3 = +-+-+-…`.
///
/// Only used as a comparison target: finite numbers are compared against it
/// by reading exactly as many signs as the comparison needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSigns {
    head: Vec<Sign>,
    period: Vec<Sign>,
}

impl PeriodicSigns {
    pub fn new(head: Vec<Sign>, period: Vec<Sign>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        PeriodicSigns { head, period }
    }

    /// `2/3 = +-+-+-…`.
    pub fn two_thirds() -> Self {
        PeriodicSigns::new(Vec::new(), vec![Sign::Plus, Sign::Minus])
    }

    pub fn sign_at(&self, i: usize) -> Sign {
        if i < self.head.len() {
            self.head[i]
        } else {
            self.period[(i - self.head.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> SignSequence {
        SignSequence::from_signs((0..len).map(|i| self.sign_at(i)).collect())
    }

    /// Number of leading signs needed to decide the comparison with `x`.
    pub fn decisive_length(&self, x: &SignSequence) -> usize {
        x.birthday() + 1
    }

    /// Exact comparison of a finite number with the infinite sequence; never `Equal`.
    pub fn compare_finite(&self, x: &SignSequence) -> Ordering {
        x.compare(&self.prefix(self.decisive_length(x)))
    }
}
