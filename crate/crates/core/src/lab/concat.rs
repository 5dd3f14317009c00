use std::cmp::Ordering;

use serde_json::json;

use super::Report;
use crate::cut::{simplest_in_cut, ExtendedBound};
use crate::error::Result;
use crate::genetic::{Evaluator, GeneticDefinition};
use crate::signseq::{PeriodicSigns, Sign, SignSequence};

fn plus() -> SignSequence {
    SignSequence::from_signs(vec![Sign::Plus])
}

fn minus() -> SignSequence {
    SignSequence::from_signs(vec![Sign::Minus])
}

/// `a_n = (+−)^n`, `b_n = a_n:+`, `c_n = a_n:−`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatSequences {
    pub n: usize,
    pub a: SignSequence,
    pub b: SignSequence,
    pub c: SignSequence,
}

pub fn concat_sequences(n_max: usize) -> Vec<ConcatSequences> {
    let d = PeriodicSigns::two_thirds();
    (1..=n_max)
        .map(|n| {
            let a = d.prefix(2 * n);
            ConcatSequences {
                n,
                b: a.concat(&plus()),
                c: a.concat(&minus()),
                a,
            }
        })
        .collect()
}

/// Checks `c_n < a_n < c_{n+1} < d < b_n`, `a_n:1 = b_n` and `c_n:1 < a_n` for
/// every entry, with `d = 2/3` compared exactly. Returns the failures.
pub fn check_concat_sequences(seqs: &[ConcatSequences]) -> Vec<String> {
    let d = PeriodicSigns::two_thirds();
    let one = SignSequence::integer(1);
    let mut failures = Vec::new();
    for s in seqs {
        let c_next =
            s.a.concat(&SignSequence::parse_signs("+--").expect("static signs"));
        let checks = [
            ("c_n < a_n", s.c < s.a),
            ("a_n < c_(n+1)", s.a < c_next),
            ("c_(n+1) < d", d.compare_finite(&c_next) == Ordering::Less),
            ("d < b_n", d.compare_finite(&s.b) == Ordering::Greater),
            ("a_n:1 = b_n", s.a.concat(&one) == s.b),
            ("c_n:1 < a_n", s.c.concat(&one) < s.a),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("n = {}: {name} fails", s.n));
            }
        }
    }
    failures
}

/// The value `f(x)` is compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusTarget {
    Finite(SignSequence),
    Periodic(PeriodicSigns),
}

impl CensusTarget {
    /// Order of `y` relative to the target.
    fn order_of(&self, y: &SignSequence) -> Ordering {
        match self {
            CensusTarget::Finite(d) => y.cmp(d),
            CensusTarget::Periodic(p) => p.compare_finite(y),
        }
    }

    fn describe(&self) -> String {
        match self {
            CensusTarget::Finite(d) => d.to_string(),
            CensusTarget::Periodic(p) => format!("{}…", p.prefix(12).sign_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    /// `(x, f(x), order of f(x) against the target)` in sample order.
    pub samples: Vec<(SignSequence, SignSequence, Ordering)>,
    pub alternations: usize,
    /// Consecutive samples across which the order flips.
    pub witnesses: Vec<(SignSequence, SignSequence)>,
}

fn ord_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "below",
        Ordering::Equal => "equal",
        Ordering::Greater => "above",
    }
}

impl CensusReport {
    pub fn to_report(&self, function: &str, target: &CensusTarget) -> Report {
        Report {
            name: "sign_change_census".into(),
            parameters: json!({
                "function": function,
                "target": target.describe(),
                "samples": self.samples.iter().map(|(x, fx, o)| json!({
                    "x": x.to_string(),
                    "f": fx.to_string(),
                    "order": ord_name(*o),
                })).collect::<Vec<_>>(),
            }),
            verdict: format!("{} alternations", self.alternations),
            witnesses: self
                .witnesses
                .iter()
                .map(|(x, y)| json!([x.to_string(), y.to_string()]))
                .collect(),
        }
    }
}

/// Evaluates a unary definition on `samples` in order and counts how often the
/// order of `f(x)` against the target changes between neighbours.
pub fn sign_change_census(
    f: &GeneticDefinition,
    target: &CensusTarget,
    samples: &[SignSequence],
) -> Result<CensusReport> {
    let mut ev = Evaluator::new();
    let mut rows = Vec::with_capacity(samples.len());
    for x in samples {
        let fx = ev.eval(f, std::slice::from_ref(x))?;
        let o = target.order_of(&fx);
        rows.push((x.clone(), fx, o));
    }
    let witnesses: Vec<(SignSequence, SignSequence)> = rows
        .windows(2)
        .filter(|w| w[0].2 != w[1].2)
        .map(|w| (w[0].0.clone(), w[1].0.clone()))
        .collect();
    Ok(CensusReport {
        alternations: witnesses.len(),
        samples: rows,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupEscapeReport {
    /// For each birthday cap, the largest `x < 2/3` of that birthday or less with `x:1 > 2/3`.
    pub rows: Vec<(usize, Option<SignSequence>)>,
}

impl SupEscapeReport {
    pub fn strictly_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| match (&w[0].1, &w[1].1) {
            (Some(x), Some(y)) => x < y,
            (None, Some(_)) => true,
            _ => false,
        })
    }

    pub fn to_report(&self) -> Report {
        Report {
            name: "sup_escape".into(),
            parameters: json!({ "caps": self.rows.iter().map(|r| r.0).collect::<Vec<_>>() }),
            verdict: if self.strictly_increasing() {
                "strictly increasing, no stabilization".into()
            } else {
                "not strictly increasing".into()
            },
            witnesses: self
                .rows
                .iter()
                .map(|(cap, m)| {
                    json!({
                        "cap": cap,
                        "max": m.as_ref().map(|x| x.to_string()),
                        "signs": m.as_ref().map(|x| x.sign_string()),
                    })
                })
                .collect(),
        }
    }
}

/// Exhaustive scan of every number of birthday at most each cap.
pub fn sup_escape_experiment(caps: &[usize]) -> SupEscapeReport {
    let d = PeriodicSigns::two_thirds();
    let one = SignSequence::integer(1);
    let rows = caps
        .iter()
        .map(|&cap| {
            let best = SignSequence::all_up_to(cap)
                .into_iter()
                .filter(|x| {
                    d.compare_finite(x) == Ordering::Less
                        && d.compare_finite(&x.concat(&one)) == Ordering::Greater
                })
                .max();
            (cap, best)
        })
        .collect();
    SupEscapeReport { rows }
}

/// An interval `(a, b)` around `c` on each half of which `x:1 − d` keeps one sign.
pub fn local_tameness_witness(
    c: &SignSequence,
    d: &SignSequence,
) -> Result<(ExtendedBound, ExtendedBound)> {
    let below_c = ExtendedBound::Finite(c.concat(&minus()));
    Ok(match d.cmp(c) {
        Ordering::Less => (
            ExtendedBound::Finite(simplest_in_cut([d], [c])?),
            ExtendedBound::PosInf,
        ),
        Ordering::Equal => (below_c, ExtendedBound::PosInf),
        Ordering::Greater => {
            let b = if d.is_simpler(c) {
                d.clone()
            } else {
                simplest_in_cut([c], [d])?
            };
            (below_c, ExtendedBound::Finite(b))
        }
    })
}
