//! Root construction by growing the options of the root itself.
//!
//! The cut for the root `c` of `p(x) = d` in `(a, b)` starts as `⟨a | b⟩`. For
//! every option `d̂` of `d`, the ends of the interval around the root on which
//! `p − d̂` keeps its sign are added; this secures `d^L < p(c) < d^R`. For every
//! polynomial option instantiated at a pair of current rational options of `c`,
//! the ends of the interval around the root on which the option stays on its
//! side of `d` are added. The candidate is the simplest number of the cut.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::algebraic::{real_roots, RealAlgebraic};
use super::qpoly::{QPoly, RatBound};
use super::{
    eval_poly, instantiate_rational, poly_options, to_rat_bound, Enclosure, RootResult,
    SurrealPolynomial,
};
use crate::cut::{canonical_options, ExtendedBound};
use crate::error::{Error, Result};
use crate::genetic::Side;
use crate::signseq::{Sign, SignSequence};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceSource {
    /// An end of the search interval.
    Seed,
    /// From an option of the target value.
    TargetOption { option: SignSequence },
    /// From a polynomial option instantiated at `x^L = xl`, `x^R = xr`.
    PolyOption {
        m: usize,
        alpha: usize,
        coeff_option: SignSequence,
        xl: Option<BigRational>,
        xr: Option<BigRational>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEntry {
    pub side: Side,
    pub point: RealAlgebraic,
    pub source: TraceSource,
}

#[derive(Clone, Debug)]
pub struct GeneticRoot {
    pub result: RootResult,
    /// Every option added to the cut, in order.
    pub trace: Vec<TraceEntry>,
    pub left: Vec<RealAlgebraic>,
    pub right: Vec<RealAlgebraic>,
    /// Options added beyond the seeds.
    pub budget_used: usize,
    /// No pass produced a new option.
    pub saturated: bool,
}

struct Growth<'a> {
    rho: &'a RealAlgebraic,
    left: Vec<RealAlgebraic>,
    right: Vec<RealAlgebraic>,
    trace: Vec<TraceEntry>,
    used: usize,
    budget: usize,
}

impl Growth<'_> {
    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    /// Adds a point unless it is already present; fails if it lies on the wrong side.
    fn add(
        &mut self,
        side: Side,
        point: RealAlgebraic,
        source: TraceSource,
        seed: bool,
    ) -> Result<bool> {
        let expected = if side == Side::Left {
            Ordering::Less
        } else {
            Ordering::Greater
        };
        if point.compare(self.rho) != expected {
            return Err(Error::InconsistentCut(format!(
                "{point} added on the {side:?} side of {}",
                self.rho
            )));
        }
        let set = if side == Side::Left {
            &self.left
        } else {
            &self.right
        };
        if set.iter().any(|p| p.compare(&point) == Ordering::Equal) {
            return Ok(false);
        }
        if !seed {
            if self.exhausted() {
                return Ok(false);
            }
            self.used += 1;
        }
        if side == Side::Left {
            self.left.push(point.clone());
        } else {
            self.right.push(point.clone());
        }
        self.trace.push(TraceEntry {
            side,
            point,
            source,
        });
        Ok(true)
    }

    /// Adds the ends of the maximal interval around the root inside `(lo, hi)`
    /// on which `q` has no zero.
    fn add_component(
        &mut self,
        q: &QPoly,
        lo: &RatBound,
        hi: &RatBound,
        source: TraceSource,
    ) -> Result<bool> {
        let roots = real_roots(q, lo, hi);
        let below = roots
            .iter()
            .rev()
            .find(|r| r.compare(self.rho) == Ordering::Less)
            .cloned();
        let above = roots
            .iter()
            .find(|r| r.compare(self.rho) == Ordering::Greater)
            .cloned();
        let mut added = false;
        if let Some(u) = below {
            added |= self.add(Side::Left, u, source.clone(), false)?;
        }
        if let Some(w) = above {
            added |= self.add(Side::Right, w, source, false)?;
        }
        Ok(added)
    }

    /// The simplest number above every left point and below every right point.
    fn candidate(&self) -> SignSequence {
        let mut z = SignSequence::zero();
        loop {
            let zr = z.to_dyadic().to_rational();
            if self
                .left
                .iter()
                .any(|l| l.cmp_rational(&zr) != Ordering::Less)
            {
                z.push(Sign::Plus);
            } else if self
                .right
                .iter()
                .any(|r| r.cmp_rational(&zr) != Ordering::Greater)
            {
                z.push(Sign::Minus);
            } else {
                return z;
            }
        }
    }
}

/// Builds the root of `p(x) = d` in `(a, b)` from its options, adding at most
/// `budget` options beyond the interval ends.
///
/// The result is exact once the simplest element of the cut solves the
/// equation. Otherwise the simplest element so far is a prefix of the root and
/// is returned with its enclosure. Polynomial options are instantiated only at
/// rational options of the cut.
pub fn find_root_genetic(
    p: &SurrealPolynomial,
    d: &SignSequence,
    a: &ExtendedBound,
    b: &ExtendedBound,
    budget: usize,
) -> Result<GeneticRoot> {
    let q = p.shifted(d);
    if q.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (lo, hi) = (to_rat_bound(a), to_rat_bound(b));
    if !lo.less_than(&hi) {
        return Err(Error::NoRoot);
    }
    let roots = real_roots(&q, &lo, &hi);
    let rho = match roots.len() {
        0 => return Err(Error::NoRoot),
        1 => &roots[0],
        n => return Err(Error::NotIsolated(n)),
    };
    let mut g = Growth {
        rho,
        left: Vec::new(),
        right: Vec::new(),
        trace: Vec::new(),
        used: 0,
        budget,
    };
    if let RatBound::Finite(x) = &lo {
        g.add(
            Side::Left,
            RealAlgebraic::Rational(x.clone()),
            TraceSource::Seed,
            true,
        )?;
    }
    if let RatBound::Finite(x) = &hi {
        g.add(
            Side::Right,
            RealAlgebraic::Rational(x.clone()),
            TraceSource::Seed,
            true,
        )?;
    }

    let finish = |g: Growth<'_>, saturated: bool| {
        let c = g.candidate();
        let result = if eval_poly(p, &c) == *d {
            RootResult::Exact(c)
        } else {
            RootResult::Prefix(Enclosure::of_prefix(&c))
        };
        GeneticRoot {
            result,
            trace: g.trace,
            left: g.left,
            right: g.right,
            budget_used: g.used,
            saturated,
        }
    };

    if eval_poly(p, &g.candidate()) == *d {
        return Ok(finish(g, false));
    }

    let (dl, dr) = canonical_options(d);
    for option in dl.iter().chain(dr.iter()) {
        let shifted = p.shifted(option);
        g.add_component(
            &shifted,
            &lo,
            &hi,
            TraceSource::TargetOption {
                option: option.clone(),
            },
        )?;
    }

    let options = poly_options(p);
    let mut done: std::collections::HashSet<(usize, Option<usize>, Option<usize>)> =
        std::collections::HashSet::new();
    loop {
        if eval_poly(p, &g.candidate()) == *d || g.exhausted() {
            return Ok(finish(g, false));
        }
        let mut added = false;
        let lefts: Vec<Option<usize>> = if g.left.is_empty() {
            vec![None]
        } else {
            (0..g.left.len()).map(Some).collect()
        };
        let rights: Vec<Option<usize>> = if g.right.is_empty() {
            vec![None]
        } else {
            (0..g.right.len()).map(Some).collect()
        };
        for (k, opt) in options.iter().enumerate() {
            for &li in &lefts {
                for &ri in &rights {
                    if !done.insert((k, li, ri)) {
                        continue;
                    }
                    let xl = li.and_then(|i| g.left[i].as_rational().cloned());
                    let xr = ri.and_then(|i| g.right[i].as_rational().cloned());
                    if (li.is_some() && xl.is_none()) || (ri.is_some() && xr.is_none()) {
                        continue;
                    }
                    let inst = match instantiate_rational(opt, p, xl.as_ref(), xr.as_ref()) {
                        Ok(inst) => inst,
                        Err(Error::SideRequired(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    let shifted = inst.sub(&QPoly::constant(d.to_dyadic().to_rational()));
                    let lo_i = xl.clone().map_or(RatBound::NegInf, RatBound::Finite);
                    let hi_i = xr.clone().map_or(RatBound::PosInf, RatBound::Finite);
                    let source = TraceSource::PolyOption {
                        m: opt.m,
                        alpha: opt.alpha,
                        coeff_option: opt.coeff_option.clone(),
                        xl,
                        xr,
                    };
                    added |= g.add_component(&shifted, &lo_i, &hi_i, source)?;
                    if g.exhausted() {
                        return Ok(finish(g, false));
                    }
                }
            }
        }
        if !added {
            return Ok(finish(g, true));
        }
    }
}
