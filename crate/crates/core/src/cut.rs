//! Cuts `⟨L | R⟩` over finite sets of sign sequences and their simplest elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::signseq::{Sign, SignSequence};

/// A pair of finite sets with every left element below every right element.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Cut {
    left: BTreeSet<SignSequence>,
    right: BTreeSet<SignSequence>,
}

impl Cut {
    pub fn new(
        left: impl IntoIterator<Item = SignSequence>,
        right: impl IntoIterator<Item = SignSequence>,
    ) -> Result<Cut> {
        let cut = Cut {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        };
        if let (Some(l), Some(r)) = (cut.left.last(), cut.right.first()) {
            if l >= r {
                return Err(Error::InvalidCut {
                    left: l.to_string(),
                    right: r.to_string(),
                });
            }
        }
        Ok(cut)
    }

    /// The canonical representation of `x`: its strict prefixes split by value.
    pub fn canonical(x: &SignSequence) -> Cut {
        let (left, right) = x.strict_prefixes().partition(|p| p < x);
        Cut { left, right }
    }

    pub fn left(&self) -> &BTreeSet<SignSequence> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<SignSequence> {
        &self.right
    }

    pub fn max_left(&self) -> Option<&SignSequence> {
        self.left.last()
    }

    pub fn min_right(&self) -> Option<&SignSequence> {
        self.right.first()
    }

    /// `L < z < R`.
    pub fn contains(&self, z: &SignSequence) -> bool {
        self.max_left().is_none_or(|l| l < z) && self.min_right().is_none_or(|r| z < r)
    }

    /// The simplest number strictly between the two sides.
    pub fn simplest(&self) -> SignSequence {
        let mut z = SignSequence::zero();
        loop {
            if self.max_left().is_some_and(|l| &z <= l) {
                z.push(Sign::Plus);
            } else if self.min_right().is_some_and(|r| &z >= r) {
                z.push(Sign::Minus);
            } else {
                return z;
            }
        }
    }

    /// Whether this cut represents `x`.
    pub fn represents(&self, x: &SignSequence) -> bool {
        &self.simplest() == x
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &BTreeSet<SignSequence>| {
            s.iter()
                .map(|x| x.to_dyadic().to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "{{{} | {}}}", side(&self.left), side(&self.right))
    }
}

/// Strict prefixes of `x` below and above it.
pub fn canonical_options(x: &SignSequence) -> (BTreeSet<SignSequence>, BTreeSet<SignSequence>) {
    let c = Cut::canonical(x);
    (c.left, c.right)
}

/// The simplest `z` with `L < z < R`.
pub fn simplest_in_cut<'a>(
    left: impl IntoIterator<Item = &'a SignSequence>,
    right: impl IntoIterator<Item = &'a SignSequence>,
) -> Result<SignSequence> {
    let cut = Cut::new(left.into_iter().cloned(), right.into_iter().cloned())?;
    Ok(cut.simplest())
}

/// For a strict prefix `z` of `x = ⟨L | R⟩`, an element of `L` in `[z, x)` when
/// `z < x`, or of `R` in `(x, z]` when `z > x`. The element nearest to `z` is returned.
pub fn inverse_cofinality_witness(
    x: &SignSequence,
    rep: &Cut,
    z: &SignSequence,
) -> Result<SignSequence> {
    if !z.is_simpler(x) {
        return Err(Error::NotAnOption {
            option: z.to_string(),
            value: x.to_string(),
        });
    }
    let actual = rep.simplest();
    if &actual != x {
        return Err(Error::NotARepresentation {
            expected: x.to_string(),
            actual: actual.to_string(),
        });
    }
    let found = if z < x {
        rep.left.range(z.clone()..x.clone()).next()
    } else {
        rep.right
            .range((
                std::ops::Bound::Excluded(x.clone()),
                std::ops::Bound::Included(z.clone()),
            ))
            .next_back()
    };
    found.cloned().ok_or(Error::NotFound)
}

/// A point of `No ∪ {±∞}` restricted to finite numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ExtendedBound {
    NegInf,
    Finite(SignSequence),
    PosInf,
}

impl ExtendedBound {
    pub fn finite(&self) -> Option<&SignSequence> {
        match self {
            ExtendedBound::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for ExtendedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedBound::NegInf => f.write_str("-inf"),
            ExtendedBound::PosInf => f.write_str("+inf"),
            ExtendedBound::Finite(x) => write!(f, "{}", x.to_dyadic()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str) -> SignSequence {
        x.parse().unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<SignSequence> {
        xs.iter().map(|x| v(x)).collect()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_options(&v("0")), (set(&[]), set(&[])));
        assert_eq!(
            canonical_options(&v("5/8")),
            (set(&["0", "1/2"]), set(&["3/4", "1"]))
        );
        assert_eq!(canonical_options(&v("2")), (set(&["0", "1"]), set(&[])));
    }

    #[test]
    fn simplest_examples() {
        let none: [SignSequence; 0] = [];
        assert_eq!(simplest_in_cut(&none, &none).unwrap(), v("0"));
        assert_eq!(simplest_in_cut(&[v("0")], &[v("1")]).unwrap(), v("1/2"));
        assert_eq!(simplest_in_cut(&[v("1")], &none).unwrap(), v("2"));
        assert_eq!(simplest_in_cut(&none, &[v("-3/4")]).unwrap(), v("-1"));
        assert!(matches!(
            simplest_in_cut(&[v("1")], &[v("1")]),
            Err(Error::InvalidCut { .. })
        ));
    }

    #[test]
    fn witness_examples() {
        let rep = Cut::new([v("1/4")], [v("3/4")]).unwrap();
        assert_eq!(
            inverse_cofinality_witness(&v("1/2"), &rep, &v("0")).unwrap(),
            v("1/4")
        );
        assert_eq!(
            inverse_cofinality_witness(&v("1/2"), &rep, &v("1")).unwrap(),
            v("3/4")
        );
        let x = v("5/8");
        assert_eq!(
            inverse_cofinality_witness(&x, &Cut::canonical(&x), &v("1/2")).unwrap(),
            v("1/2")
        );
        assert!(matches!(
            inverse_cofinality_witness(&v("1/2"), &rep, &v("3/2")),
            Err(Error::NotAnOption { .. })
        ));
    }

    #[test]
    fn extended_order() {
        let lo = ExtendedBound::NegInf;
        let mid = ExtendedBound::Finite(v("-100"));
        let hi = ExtendedBound::PosInf;
        assert!(lo < mid && mid < hi);
        assert!(ExtendedBound::Finite(v("1/2")) < ExtendedBound::Finite(v("3/4")));
    }
}
