use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use super::Report;
use crate::arith;
use crate::error::{Error, Result};
use crate::signseq::SignSequence;

pub type FiniteSurrealSet = BTreeSet<SignSequence>;

/// Prefix-closed: every strict prefix of a member is a member.
pub fn is_initial_finite(s: &FiniteSurrealSet) -> bool {
    s.iter()
        .all(|x| x.strict_prefixes().all(|y| s.contains(&y)))
}

/// Pairs `(member, missing prefix)`, each missing prefix reported once per member.
pub fn prefix_violations(s: &FiniteSurrealSet) -> Vec<(SignSequence, SignSequence)> {
    s.iter()
        .flat_map(|x| {
            x.strict_prefixes()
                .filter(|y| !s.contains(y))
                .map(move |y| (x.clone(), y))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SurrealOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl SurrealOp {
    fn name(self) -> &'static str {
        match self {
            SurrealOp::Add => "add",
            SurrealOp::Sub => "sub",
            SurrealOp::Mul => "mul",
            SurrealOp::Neg => "neg",
        }
    }
}

impl fmt::Display for SurrealOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurrealOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "add" => Ok(SurrealOp::Add),
            "sub" => Ok(SurrealOp::Sub),
            "mul" => Ok(SurrealOp::Mul),
            "neg" => Ok(SurrealOp::Neg),
            other => Err(Error::Parse(format!("unknown operation `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub set: FiniteSurrealSet,
    /// Distinct results dropped for exceeding the birthday cap.
    pub escapes: usize,
}

impl ClosureResult {
    pub fn saturated(&self) -> bool {
        self.escapes > 0
    }
}

/// Least set containing `seed` and closed under `ops`, restricted to birthday ≤ `cap`.
pub fn closure_under_ops(seed: &FiniteSurrealSet, ops: &[SurrealOp], cap: usize) -> ClosureResult {
    let mut set: FiniteSurrealSet = seed
        .iter()
        .filter(|x| x.birthday() <= cap)
        .cloned()
        .collect();
    let mut escaped: BTreeSet<SignSequence> = seed
        .iter()
        .filter(|x| x.birthday() > cap)
        .cloned()
        .collect();
    let mut frontier: Vec<SignSequence> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let members: Vec<SignSequence> = set.iter().cloned().collect();
        let mut fresh = FiniteSurrealSet::new();
        let mut take = |v: SignSequence| {
            if v.birthday() > cap {
                escaped.insert(v);
            } else if !set.contains(&v) {
                fresh.insert(v);
            }
        };
        for x in &frontier {
            for &op in ops {
                match op {
                    SurrealOp::Neg => take(arith::neg(x)),
                    SurrealOp::Add | SurrealOp::Sub | SurrealOp::Mul => {
                        for y in &members {
                            let apply = |a: &SignSequence, b: &SignSequence| match op {
                                SurrealOp::Add => arith::add(a, b),
                                SurrealOp::Sub => arith::sub(a, b),
                                _ => arith::mul(a, b),
                            };
                            take(apply(x, y));
                            take(apply(y, x));
                        }
                    }
                }
            }
        }
        set.extend(fresh.iter().cloned());
        frontier = fresh.into_iter().collect();
    }
    ClosureResult {
        set,
        escapes: escaped.len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialityReport {
    pub seed: FiniteSurrealSet,
    pub ops: Vec<SurrealOp>,
    pub cap: usize,
    pub closure: ClosureResult,
    pub violations: Vec<(SignSequence, SignSequence)>,
}

impl InitialityReport {
    pub fn initial(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn verdict(&self) -> String {
        match (self.initial(), self.closure.escapes) {
            (false, _) => "not initial".to_string(),
            (true, 0) => "initial".to_string(),
            (true, k) => format!("initial within cap with {k} escapes"),
        }
    }

    pub fn to_report(&self) -> Report {
        Report {
            name: "initiality".into(),
            parameters: json!({
                "seed": self.seed.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "ops": self.ops.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                "cap": self.cap,
                "closure_size": self.closure.set.len(),
                "escapes": self.closure.escapes,
            }),
            verdict: self.verdict(),
            witnesses: self
                .violations
                .iter()
                .map(|(x, y)| json!({ "member": x.to_string(), "missing_prefix": y.to_string() }))
                .collect(),
        }
    }
}

pub fn initiality_report(
    seed: &FiniteSurrealSet,
    ops: &[SurrealOp],
    cap: usize,
) -> InitialityReport {
    let closure = closure_under_ops(seed, ops, cap);
    let violations = prefix_violations(&closure.set);
    InitialityReport {
        seed: seed.clone(),
        ops: ops.to_vec(),
        cap,
        closure,
        violations,
    }
}
