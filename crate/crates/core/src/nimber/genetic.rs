//! Recursive definitions on nimbers: `f(x) = mex` of option values
//! `f̂(x, x̂, f(x̂))` over all `x̂ < x`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::{mex, Nimber};
use crate::error::{Error, Result};

type FixedBody = Arc<dyn Fn(Nimber) -> Nimber + Send + Sync>;
type OptionBody = Arc<dyn Fn(Nimber, Nimber, Nimber) -> Nimber + Send + Sync>;

/// A single option function.
#[derive(Clone)]
pub enum NimOption {
    /// Depends on `x` only.
    Fixed(FixedBody),
    /// Applied to every `x̂ < x` together with `f(x̂)`.
    PerOption(OptionBody),
}

impl NimOption {
    pub fn fixed(f: impl Fn(Nimber) -> Nimber + Send + Sync + 'static) -> Self {
        NimOption::Fixed(Arc::new(f))
    }

    pub fn per_option(
        f: impl Fn(Nimber, Nimber, Nimber) -> Nimber + Send + Sync + 'static,
    ) -> Self {
        NimOption::PerOption(Arc::new(f))
    }
}

impl fmt::Debug for NimOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NimOption::Fixed(_) => f.write_str("Fixed(..)"),
            NimOption::PerOption(_) => f.write_str("PerOption(..)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NimGeneticDefinition {
    pub name: String,
    pub options: Vec<NimOption>,
}

impl NimGeneticDefinition {
    pub fn new(name: impl Into<String>, options: Vec<NimOption>) -> Self {
        NimGeneticDefinition {
            name: name.into(),
            options,
        }
    }

    /// `f(0), …, f(bound − 1)`, each computed from the earlier ones.
    pub fn eval_table(&self, bound: u128) -> Vec<Nimber> {
        let mut values: Vec<Nimber> = Vec::with_capacity(bound as usize);
        for x in 0..bound {
            let x = Nimber(x);
            let mut seen = HashSet::new();
            for opt in &self.options {
                match opt {
                    NimOption::Fixed(g) => {
                        seen.insert(g(x));
                    }
                    NimOption::PerOption(g) => {
                        for (xh, &fx) in values.iter().enumerate() {
                            seen.insert(g(x, Nimber(xh as u128), fx));
                        }
                    }
                }
            }
            values.push(mex(&seen));
        }
        values
    }

    pub fn eval(&self, x: Nimber) -> Nimber {
        self.eval_table(x.0 + 1)[x.0 as usize]
    }
}

/// Catalog of nimber definitions:
/// `zero_or_x` is `⟨0, x⟩`, `hat` is `⟨x̂⟩` and `hat_value` is `⟨f(x̂)⟩`.
pub fn nim_builtin(name: &str) -> Result<NimGeneticDefinition> {
    let def = match name {
        "zero_or_x" => NimGeneticDefinition::new(
            name,
            vec![NimOption::fixed(|_| Nimber::ZERO), NimOption::fixed(|x| x)],
        ),
        "hat" => NimGeneticDefinition::new(name, vec![NimOption::per_option(|_, xh, _| xh)]),
        "hat_value" => NimGeneticDefinition::new(name, vec![NimOption::per_option(|_, _, fx| fx)]),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Ok(def)
}
