//! Polynomials with nimber coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{nim_add, nim_mul, NimGeneticDefinition, Nimber};
use crate::error::{Error, Result};

/// Coefficients lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NimPolynomial {
    coeffs: Vec<Nimber>,
}

impl NimPolynomial {
    pub fn new(mut coeffs: Vec<Nimber>) -> Self {
        while coeffs.last() == Some(&Nimber::ZERO) {
            coeffs.pop();
        }
        NimPolynomial { coeffs }
    }

    pub fn from_values(v: &[u128]) -> Self {
        NimPolynomial::new(v.iter().map(|&x| Nimber(x)).collect())
    }

    pub fn coeffs(&self) -> &[Nimber] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: Nimber) -> Nimber {
        self.coeffs
            .iter()
            .rev()
            .fold(Nimber::ZERO, |acc, &a| nim_add(nim_mul(acc, x), a))
    }
}

impl FromStr for NimPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a coefficient list, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(NimPolynomial::default());
        }
        inner
            .split(',')
            .map(str::parse::<Nimber>)
            .collect::<Result<Vec<_>>>()
            .map(NimPolynomial::new)
    }
}

impl fmt::Display for NimPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| a.0 != 0)
            .map(|(i, a)| match (i, a.0) {
                (0, v) => v.to_string(),
                (1, 1) => "x".into(),
                (1, v) => format!("{v}x"),
                (i, 1) => format!("x^{i}"),
                (i, v) => format!("{v}x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Degree first, then coefficients from the top down.
pub fn compare_nim_poly(p: &NimPolynomial, q: &NimPolynomial) -> Ordering {
    p.coeffs
        .len()
        .cmp(&q.coeffs.len())
        .then_with(|| p.coeffs.iter().rev().cmp(q.coeffs.iter().rev()))
}

/// Something that can be evaluated at a nimber.
pub trait NimFunction {
    fn value_at(&self, x: Nimber) -> Nimber;

    /// Values at `0, 1, …, bound − 1`.
    fn values_below(&self, bound: u128) -> Vec<Nimber> {
        (0..bound).map(|x| self.value_at(Nimber(x))).collect()
    }
}

impl NimFunction for NimPolynomial {
    fn value_at(&self, x: Nimber) -> Nimber {
        self.eval(x)
    }
}

impl NimFunction for NimGeneticDefinition {
    fn value_at(&self, x: Nimber) -> Nimber {
        self.eval(x)
    }

    fn values_below(&self, bound: u128) -> Vec<Nimber> {
        self.eval_table(bound)
    }
}

/// `{x < bound : f(x) = d}`.
pub fn zero_set(f: &impl NimFunction, d: Nimber, bound: u128) -> Vec<Nimber> {
    f.values_below(bound)
        .into_iter()
        .enumerate()
        .filter(|(_, v)| *v == d)
        .map(|(x, _)| Nimber(x as u128))
        .collect()
}

/// The least monic polynomial of `degree` with coefficients below
/// `coeff_bound` that has no root below `root_bound`.
pub fn simplest_irreducible(
    degree: usize,
    coeff_bound: u128,
    root_bound: u128,
) -> Result<NimPolynomial> {
    if coeff_bound == 0 {
        return Err(Error::NotFound);
    }
    // lower[0] is the coefficient of x^(degree-1), the most significant one.
    let mut lower = vec![0u128; degree];
    loop {
        let mut coeffs: Vec<Nimber> = lower.iter().rev().map(|&c| Nimber(c)).collect();
        coeffs.push(Nimber::ONE);
        let p = NimPolynomial::new(coeffs);
        if (0..root_bound).all(|x| p.eval(Nimber(x)) != Nimber::ZERO) {
            return Ok(p);
        }
        let mut i = degree;
        loop {
            if i == 0 {
                return Err(Error::NotFound);
            }
            i -= 1;
            lower[i] += 1;
            if lower[i] < coeff_bound {
                break;
            }
            lower[i] = 0;
        }
    }
}
