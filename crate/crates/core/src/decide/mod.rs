//! Equality deciders built on the occurrence-relation functor, plus an
//! independent bounded search over the equational theory.

mod axioms;
mod oracle;

use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::relfun::{image, RelError};
use crate::terms::{dualize_term, typecheck, System, Term, TermType, TypeError};

pub use axioms::{axiom_instances, schemas_for, AxiomInstance};
pub use oracle::{ball, local_moves, neighbors, oracle_equal, Ball, Fingerprint, OracleConfig, OracleResult};

/// Which sufficient condition established an equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EqualReason {
    LatticeCoherence,
    SesquicartesianCoherence,
    EmptyImages,
    DnfSourceCnfTarget,
    BotNormalSource,
    TopNormalTarget,
}

impl fmt::Display for EqualReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualReason::LatticeCoherence => "occurrence relations agree and the lattice functor is faithful",
            EqualReason::SesquicartesianCoherence => {
                "occurrence relations agree and the functor is faithful for one constant"
            }
            EqualReason::EmptyImages => "both occurrence relations are empty",
            EqualReason::DnfSourceCnfTarget => {
                "occurrence relations agree, the source is in dnf and the target in cnf"
            }
            EqualReason::BotNormalSource => "occurrence relations agree and the source is bot-normal",
            EqualReason::TopNormalTarget => "occurrence relations agree and the target is top-normal",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Equal { system: System, reason: EqualReason },
    NotEqual { system: System, witness: (usize, usize) },
    Unknown { system: System, reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equal { .. } => "equal",
            Verdict::NotEqual { .. } => "not_equal",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn system(&self) -> System {
        match self {
            Verdict::Equal { system, .. } | Verdict::NotEqual { system, .. } | Verdict::Unknown { system, .. } => {
                *system
            }
        }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }

    pub fn is_not_equal(&self) -> bool {
        matches!(self, Verdict::NotEqual { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn reason(&self) -> String {
        match self {
            Verdict::Equal { reason, .. } => reason.to_string(),
            Verdict::NotEqual { witness: (j, k), .. } => {
                format!("the pair ({j},{k}) lies in exactly one occurrence relation")
            }
            Verdict::Unknown { reason, .. } => reason.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "verdict": self.label(),
            "system": self.system().name(),
            "reason": self.reason(),
        });
        if let Verdict::NotEqual { witness: (j, k), .. } = self {
            v["witness"] = json!([j, k]);
        }
        v
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotEqual { witness: (j, k), .. } => write!(f, "not_equal witness ({j},{k})"),
            other => write!(f, "{}: {}", other.label(), other.reason()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Relation(#[from] RelError),
    #[error("the terms have different types: {left} and {right}")]
    TypeMismatch { left: TermType, right: TermType },
}

/// Decides `f = g` in `system` wherever a coherence result applies.
pub fn decide(f: &Term, g: &Term, system: System) -> Result<Verdict, DecideError> {
    let tf = typecheck(f, system)?;
    let tg = typecheck(g, system)?;
    if tf != tg {
        return Err(DecideError::TypeMismatch { left: tf, right: tg });
    }
    let (rf, rg) = (image(f)?, image(g)?);
    if let Some(&witness) = rf.pairs.symmetric_difference(&rg.pairs).min() {
        return Ok(Verdict::NotEqual { system, witness });
    }
    Ok(match system {
        System::L => Verdict::Equal {
            system,
            reason: EqualReason::LatticeCoherence,
        },
        System::Lbot => Verdict::Equal {
            system,
            reason: EqualReason::SesquicartesianCoherence,
        },
        System::Ltop => match decide(&dualize_term(f), &dualize_term(g), System::Lbot)? {
            Verdict::Equal { reason, .. } => Verdict::Equal { system, reason },
            other => other,
        },
        System::Ltopbot => restricted(&tf, rf.is_empty()),
        System::Bicart => Verdict::Unknown {
            system,
            reason: "no coherence result is available for bicartesian categories".into(),
        },
    })
}

fn restricted(ty: &TermType, empty: bool) -> Verdict {
    let system = System::Ltopbot;
    let reason = if empty {
        EqualReason::EmptyImages
    } else if ty.source.is_dnf() && ty.target.is_cnf() {
        EqualReason::DnfSourceCnfTarget
    } else if ty.source.is_bot_normal() {
        EqualReason::BotNormalSource
    } else if ty.target.is_top_normal() {
        EqualReason::TopNormalTarget
    } else {
        return Verdict::Unknown {
            system,
            reason: "occurrence relations agree but the source is neither in dnf nor bot-normal \
                     and the target is neither in cnf nor top-normal"
                .into(),
        };
    };
    Verdict::Equal { system, reason }
}
