//! Field operations on finite-birthday surreals.
//!
//! The plain functions compute through exact dyadics. The `*_genetic` variants
//! evaluate the recursive definitions and must agree with them.

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::genetic::{builtin, Evaluator, GeneticDefinition};
use crate::signseq::SignSequence;

pub fn add(x: &SignSequence, y: &SignSequence) -> SignSequence {
    SignSequence::from_dyadic(&(x.to_dyadic() + y.to_dyadic()))
}

pub fn neg(x: &SignSequence) -> SignSequence {
    x.negate_signs()
}

pub fn sub(x: &SignSequence, y: &SignSequence) -> SignSequence {
    add(x, &neg(y))
}

pub fn mul(x: &SignSequence, y: &SignSequence) -> SignSequence {
    SignSequence::from_dyadic(&(x.to_dyadic() * y.to_dyadic()))
}

pub fn pow_nat(x: &SignSequence, m: u32) -> SignSequence {
    let base = x.to_dyadic();
    let mut acc = Dyadic::one();
    for _ in 0..m {
        acc = &acc * &base;
    }
    SignSequence::from_dyadic(&acc)
}

/// Evaluators for the recursive sum, product and negation.
pub struct GeneticArith {
    sum: GeneticDefinition,
    prod: GeneticDefinition,
    neg: GeneticDefinition,
    sum_ev: Evaluator,
    prod_ev: Evaluator,
    neg_ev: Evaluator,
}

impl Default for GeneticArith {
    fn default() -> Self {
        GeneticArith::new()
    }
}

impl GeneticArith {
    pub fn new() -> Self {
        GeneticArith::with_cap(crate::genetic::DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        GeneticArith {
            sum: builtin("sum2").expect("catalog"),
            prod: builtin("prod2").expect("catalog"),
            neg: builtin("neg").expect("catalog"),
            sum_ev: Evaluator::with_cap(cap),
            prod_ev: Evaluator::with_cap(cap),
            neg_ev: Evaluator::with_cap(cap),
        }
    }

    pub fn add(&mut self, x: &SignSequence, y: &SignSequence) -> Result<SignSequence> {
        self.sum_ev.eval(&self.sum, &[x.clone(), y.clone()])
    }

    pub fn mul(&mut self, x: &SignSequence, y: &SignSequence) -> Result<SignSequence> {
        self.prod_ev.eval(&self.prod, &[x.clone(), y.clone()])
    }

    pub fn neg(&mut self, x: &SignSequence) -> Result<SignSequence> {
        self.neg_ev.eval(&self.neg, std::slice::from_ref(x))
    }

    /// Drops all memoized values.
    pub fn clear(&mut self) {
        self.sum_ev.clear();
        self.prod_ev.clear();
        self.neg_ev.clear();
    }
}
