//! Rewriting of proof terms: composition elimination, inversion of terms
//! whose occurrence relation avoids one side, and the factorization into a
//! hat-fragment part followed by a check-fragment part.

mod cut;
mod invert;
mod standard;

use std::fmt;

use thiserror::Error;

use crate::relfun::RelError;
use crate::terms::{to_gentzen, typecheck, System, Term, TypeError};

pub use cut::{eliminate_composition, step_budget};
pub use invert::{invert_conj, invert_disj, lemma3_factor};
pub use standard::{factorize, standard_form, Factor, StandardForm};

/// Child indices from the root of a term.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TermPath(pub Vec<usize>);

impl fmt::Display for TermPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteStep {
    pub rule: &'static str,
    pub path: TermPath,
    pub before: Term,
    pub after: Term,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}: {} => {}", self.rule, self.path, self.before, self.after)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies each recorded step to `start` at its path, checking that the
    /// recorded `before` is what is found there.
    pub fn replay(&self, start: &Term) -> Option<Term> {
        let mut current = start.clone();
        for step in &self.steps {
            if current.subterm_at(&step.path.0)? != &step.before {
                return None;
            }
            current = current.replace_at(&step.path.0, step.after.clone())?;
        }
        Some(current)
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Relation(#[from] RelError),
    #[error("rewriting exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: usize },
    #[error("inapplicable: {0}")]
    Inapplicable(String),
}

/// Translation into Gentzen form followed by composition elimination.
pub fn normalize(t: &Term, system: System) -> Result<(Term, RewriteTrace), NormalizeError> {
    typecheck(t, system)?;
    eliminate_composition(&to_gentzen(t)?, system)
}
