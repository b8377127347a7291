//! Proof terms for conjunctive-disjunctive logic with optional `top` and
//! `bot`, interpreted in free lattice, sesquicartesian and dicartesian
//! categories.
//!
//! Equality of proofs is decided through the occurrence-relation functor
//! ([`relfun::g_of`]) wherever a coherence result applies; elsewhere the
//! deciders answer [`decide::Verdict::Unknown`].

pub mod decide;
pub mod formulas;
pub mod maximality;
pub mod models;
pub mod normalize;
pub mod relfun;
pub mod sample;
pub mod syntax;
pub mod terms;

pub use decide::{decide, Verdict};
pub use formulas::{Connective, Constant, Formula, Letter, OccPath, Side};
pub use relfun::{g_of, OccurrenceRelation};
pub use syntax::{parse_formula, parse_term, ParseError};
pub use terms::{typecheck, System, Term, TermType, TypeError, TypedTerm};
