//! Finite experiments on initial sets, closures, and the concatenation map
//! `x ↦ x:+` near `2/3`.

mod closure;
mod concat;

use serde::{Deserialize, Serialize};

pub use closure::{
    closure_under_ops, initiality_report, is_initial_finite, prefix_violations, ClosureResult,
    FiniteSurrealSet, InitialityReport, SurrealOp,
};
pub use concat::{
    check_concat_sequences, concat_sequences, local_tameness_witness, sign_change_census,
    sup_escape_experiment, CensusReport, CensusTarget, ConcatSequences, SupEscapeReport,
};

/// Common JSON shape of every experiment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub parameters: serde_json::Value,
    pub verdict: String,
    pub witnesses: Vec<serde_json::Value>,
}
