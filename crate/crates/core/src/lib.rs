//! Exact surreal numbers of finite birthday, genetic definitions, and nimbers.

pub mod arith;
pub mod cut;
pub mod dyadic;
pub mod error;
pub mod genetic;
pub mod lab;
pub mod nimber;
pub mod poly;
pub mod signseq;

pub use cut::{canonical_options, inverse_cofinality_witness, simplest_in_cut, Cut, ExtendedBound};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use signseq::{PeriodicSigns, Sign, SignSequence};
