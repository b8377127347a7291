//! Proof terms in both presentations, sharing one tree type.
//!
//! Arrow primitives (`Hw`, `Cw`, `Hk`, `Ck`) and Gentzen constructors (`Pair`,
//! `Copair`, `HProj`, `CInj`) live side by side, so translations between the
//! two presentations and rewrites mixing them need no conversion layer.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{Connective, Formula, Letter, Side};

/// The free categories whose arrows the terms denote.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum System {
    /// Lattice categories: no constants.
    L,
    /// Only `bot` and `ckap`.
    Lbot,
    /// Only `top` and `hkap`.
    Ltop,
    /// Dicartesian categories.
    Ltopbot,
    /// Bicartesian categories: as `Ltopbot` without the constant-projection equations.
    Bicart,
}

impl System {
    pub const ALL: [System; 5] = [System::L, System::Lbot, System::Ltop, System::Ltopbot, System::Bicart];

    pub fn allows_top(self) -> bool {
        matches!(self, System::Ltop | System::Ltopbot | System::Bicart)
    }

    pub fn allows_bot(self) -> bool {
        matches!(self, System::Lbot | System::Ltopbot | System::Bicart)
    }

    pub fn dual(self) -> System {
        match self {
            System::Lbot => System::Ltop,
            System::Ltop => System::Lbot,
            s => s,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            System::L => "L",
            System::Lbot => "Lbot",
            System::Ltop => "Ltop",
            System::Ltopbot => "Ltopbot",
            System::Bicart => "Bicart",
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        System::ALL
            .into_iter()
            .find(|sys| sys.name() == s)
            .ok_or_else(|| format!("unknown system {s:?}; expected one of L, Lbot, Ltop, Ltopbot, Bicart"))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Term {
    Id(Formula),
    /// Diagonal `A |- A /\ A`.
    Hw(Formula),
    /// Codiagonal `A \/ A |- A`.
    Cw(Formula),
    /// Projection `A1 /\ A2 |- Ai`.
    Hk(Side, Formula, Formula),
    /// Injection `Ai |- A1 \/ A2`.
    Ck(Side, Formula, Formula),
    /// `A |- top`.
    Hkappa(Formula),
    /// `bot |- A`.
    Ckappa(Formula),
    /// `Comp(g, f)` applies `f` first.
    Comp(Arc<Term>, Arc<Term>),
    Conj(Arc<Term>, Arc<Term>),
    Disj(Arc<Term>, Arc<Term>),
    Pair(Arc<Term>, Arc<Term>),
    Copair(Arc<Term>, Arc<Term>),
    /// `HProj(i, other, g)` with `g: Ai |- C` has type `A1 /\ A2 |- C`;
    /// `other` is the discarded conjunct.
    HProj(Side, Formula, Arc<Term>),
    /// `CInj(i, other, f)` with `f: C |- Bi` has type `C |- B1 \/ B2`.
    CInj(Side, Formula, Arc<Term>),
}

/// Alias used where a term is expected to use only arrow primitives.
pub type ArrowTerm = Term;
/// Alias used where a term is expected to use only Gentzen constructors.
pub type GentzenTerm = Term;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermType {
    pub source: Formula,
    pub target: Formula,
}

impl TermType {
    pub fn new(source: Formula, target: Formula) -> Self {
        TermType { source, target }
    }

    pub fn dual(&self) -> TermType {
        TermType::new(self.target.dual(), self.source.dual())
    }
}

impl fmt::Display for TermType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.source, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("composition mismatch: expected {expected}, found {found}")]
    CompositionMismatch { expected: Formula, found: Formula },
    #[error("pairing mismatch: expected {expected}, found {found}")]
    EndpointMismatch { expected: Formula, found: Formula },
    #[error("{what} is not available in system {system}")]
    ConstantNotInSystem { system: System, what: String },
    #[error("malformed term: {0}")]
    MalformedTerm(String),
}

/// Which restricted fragment a Gentzen term lies in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Fragment {
    HatFragment,
    CheckFragment,
    Both,
    Neither,
}

impl Term {
    pub fn comp(g: Term, f: Term) -> Term {
        Term::Comp(Arc::new(g), Arc::new(f))
    }

    pub fn conj(f1: Term, f2: Term) -> Term {
        Term::Conj(Arc::new(f1), Arc::new(f2))
    }

    pub fn disj(f1: Term, f2: Term) -> Term {
        Term::Disj(Arc::new(f1), Arc::new(f2))
    }

    pub fn xi(conn: Connective, f1: Term, f2: Term) -> Term {
        match conn {
            Connective::Conj => Term::conj(f1, f2),
            Connective::Disj => Term::disj(f1, f2),
        }
    }

    pub fn pair(f1: Term, f2: Term) -> Term {
        Term::Pair(Arc::new(f1), Arc::new(f2))
    }

    pub fn copair(g1: Term, g2: Term) -> Term {
        Term::Copair(Arc::new(g1), Arc::new(g2))
    }

    pub fn hproj(side: Side, other: Formula, g: Term) -> Term {
        Term::HProj(side, other, Arc::new(g))
    }

    pub fn cinj(side: Side, other: Formula, f: Term) -> Term {
        Term::CInj(side, other, Arc::new(f))
    }

    /// Composes a chain given in application order (first applied first).
    pub fn compose_chain(mut chain: Vec<Term>, identity_at: Formula) -> Term {
        match chain.len() {
            0 => Term::Id(identity_at),
            _ => {
                let mut acc = chain.remove(0);
                for t in chain {
                    acc = Term::comp(t, acc);
                }
                acc
            }
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Comp(a, b)
            | Term::Conj(a, b)
            | Term::Disj(a, b)
            | Term::Pair(a, b)
            | Term::Copair(a, b) => vec![a, b],
            Term::HProj(_, _, a) | Term::CInj(_, _, a) => vec![a],
            _ => Vec::new(),
        }
    }

    /// Rebuilds this node with new children (same arity as `children`).
    pub fn with_children(&self, mut kids: Vec<Term>) -> Term {
        let mut next = || Arc::new(kids.remove(0));
        match self {
            Term::Comp(..) => Term::Comp(next(), next()),
            Term::Conj(..) => Term::Conj(next(), next()),
            Term::Disj(..) => Term::Disj(next(), next()),
            Term::Pair(..) => Term::Pair(next(), next()),
            Term::Copair(..) => Term::Copair(next(), next()),
            Term::HProj(s, o, _) => Term::HProj(*s, o.clone(), next()),
            Term::CInj(s, o, _) => Term::CInj(*s, o.clone(), next()),
            leaf => leaf.clone(),
        }
    }

    pub fn subterm_at(&self, path: &[usize]) -> Option<&Term> {
        let mut node = self;
        for &i in path {
            node = *node.children().get(i)?;
        }
        Some(node)
    }

    pub fn replace_at(&self, path: &[usize], replacement: Term) -> Option<Term> {
        let Some((&first, rest)) = path.split_first() else {
            return Some(replacement);
        };
        let kids = self.children();
        let child = kids.get(first)?.replace_at(rest, replacement)?;
        let mut new_kids: Vec<Term> = kids.into_iter().cloned().collect();
        new_kids[first] = child;
        Some(self.with_children(new_kids))
    }

    pub fn has_composition(&self) -> bool {
        matches!(self, Term::Comp(..)) || self.children().iter().any(|c| c.has_composition())
    }

    pub fn is_arrow(&self) -> bool {
        !matches!(self, Term::Pair(..) | Term::Copair(..) | Term::HProj(..) | Term::CInj(..))
            && self.children().iter().all(|c| c.is_arrow())
    }

    pub fn is_gentzen(&self) -> bool {
        !matches!(self, Term::Hw(_) | Term::Cw(_) | Term::Hk(..) | Term::Ck(..))
            && self.children().iter().all(|c| c.is_gentzen())
    }

    /// Every formula mentioned as an annotation.
    fn visit_formulas<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Term::Id(a) | Term::Hw(a) | Term::Cw(a) | Term::Hkappa(a) | Term::Ckappa(a) => out.push(a),
            Term::Hk(_, a, b) | Term::Ck(_, a, b) => {
                out.push(a);
                out.push(b);
            }
            Term::HProj(_, o, _) | Term::CInj(_, o, _) => out.push(o),
            _ => {}
        }
        for c in self.children() {
            c.visit_formulas(out);
        }
    }

    /// Type without any system restriction.
    pub fn infer(&self) -> Result<TermType, TypeError> {
        Ok(match self {
            Term::Id(a) => TermType::new(a.clone(), a.clone()),
            Term::Hw(a) => TermType::new(a.clone(), Formula::conj(a.clone(), a.clone())),
            Term::Cw(a) => TermType::new(Formula::disj(a.clone(), a.clone()), a.clone()),
            Term::Hk(i, a1, a2) => {
                TermType::new(Formula::conj(a1.clone(), a2.clone()), i.pick(a1, a2).clone())
            }
            Term::Ck(i, a1, a2) => {
                TermType::new(i.pick(a1, a2).clone(), Formula::disj(a1.clone(), a2.clone()))
            }
            Term::Hkappa(a) => TermType::new(a.clone(), Formula::Top),
            Term::Ckappa(a) => TermType::new(Formula::Bot, a.clone()),
            Term::Comp(g, f) => {
                let tf = f.infer()?;
                let tg = g.infer()?;
                if tf.target != tg.source {
                    return Err(TypeError::CompositionMismatch {
                        expected: tg.source,
                        found: tf.target,
                    });
                }
                TermType::new(tf.source, tg.target)
            }
            Term::Conj(f1, f2) | Term::Disj(f1, f2) => {
                let conn = if matches!(self, Term::Conj(..)) {
                    Connective::Conj
                } else {
                    Connective::Disj
                };
                let t1 = f1.infer()?;
                let t2 = f2.infer()?;
                TermType::new(
                    Formula::binary(conn, t1.source, t2.source),
                    Formula::binary(conn, t1.target, t2.target),
                )
            }
            Term::Pair(f1, f2) => {
                let t1 = f1.infer()?;
                let t2 = f2.infer()?;
                if t1.source != t2.source {
                    return Err(TypeError::EndpointMismatch {
                        expected: t1.source,
                        found: t2.source,
                    });
                }
                TermType::new(t1.source, Formula::conj(t1.target, t2.target))
            }
            Term::Copair(g1, g2) => {
                let t1 = g1.infer()?;
                let t2 = g2.infer()?;
                if t1.target != t2.target {
                    return Err(TypeError::EndpointMismatch {
                        expected: t1.target,
                        found: t2.target,
                    });
                }
                TermType::new(Formula::disj(t1.source, t2.source), t1.target)
            }
            Term::HProj(i, other, g) => {
                let t = g.infer()?;
                let source = match i {
                    Side::Left => Formula::conj(t.source, other.clone()),
                    Side::Right => Formula::conj(other.clone(), t.source),
                };
                TermType::new(source, t.target)
            }
            Term::CInj(i, other, f) => {
                let t = f.infer()?;
                let target = match i {
                    Side::Left => Formula::disj(t.target, other.clone()),
                    Side::Right => Formula::disj(other.clone(), t.target),
                };
                TermType::new(t.source, target)
            }
        })
    }

    /// Checks that the term only uses what `system` provides.
    pub fn check_system(&self, system: System) -> Result<(), TypeError> {
        let deny = |what: String| Err(TypeError::ConstantNotInSystem { system, what });
        if !system.allows_top() && self.mentions(&|t| matches!(t, Term::Hkappa(_))) {
            return deny("hkap".into());
        }
        if !system.allows_bot() && self.mentions(&|t| matches!(t, Term::Ckappa(_))) {
            return deny("ckap".into());
        }
        let mut formulas = Vec::new();
        self.visit_formulas(&mut formulas);
        for a in formulas {
            if !system.allows_top() && a.contains_top() {
                return deny(format!("top (in {a})"));
            }
            if !system.allows_bot() && a.contains_bot() {
                return deny(format!("bot (in {a})"));
            }
        }
        Ok(())
    }

    pub fn mentions(&self, pred: &dyn Fn(&Term) -> bool) -> bool {
        pred(self) || self.children().iter().any(|c| c.mentions(pred))
    }

    /// Replaces every letter in every annotation.
    /// Every letter mentioned anywhere in the term, sorted.
    pub fn letters(&self) -> Vec<Letter> {
        let seen = std::cell::RefCell::new(std::collections::BTreeSet::new());
        self.map_formulas(&|a| {
            seen.borrow_mut().extend(a.letters());
            a.clone()
        });
        seen.into_inner().into_iter().collect()
    }

    pub fn map_formulas(&self, f: &dyn Fn(&Formula) -> Formula) -> Term {
        let node = match self {
            Term::Id(a) => Term::Id(f(a)),
            Term::Hw(a) => Term::Hw(f(a)),
            Term::Cw(a) => Term::Cw(f(a)),
            Term::Hkappa(a) => Term::Hkappa(f(a)),
            Term::Ckappa(a) => Term::Ckappa(f(a)),
            Term::Hk(i, a, b) => Term::Hk(*i, f(a), f(b)),
            Term::Ck(i, a, b) => Term::Ck(*i, f(a), f(b)),
            Term::HProj(i, o, g) => Term::HProj(*i, f(o), g.clone()),
            Term::CInj(i, o, g) => Term::CInj(*i, f(o), g.clone()),
            other => other.clone(),
        };
        let kids = node.children().into_iter().map(|c| c.map_formulas(f)).collect();
        node.with_children(kids)
    }
}

/// Type of `term` in `system`.
pub fn typecheck(term: &Term, system: System) -> Result<TermType, TypeError> {
    term.check_system(system)?;
    term.infer()
}

/// A term with its type, checked in a system.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypedTerm {
    pub term: Term,
    pub ty: TermType,
    pub system: System,
}

impl TypedTerm {
    pub fn new(term: Term, system: System) -> Result<Self, TypeError> {
        let ty = typecheck(&term, system)?;
        Ok(TypedTerm { term, ty, system })
    }

    pub fn source(&self) -> &Formula {
        &self.ty.source
    }

    pub fn target(&self) -> &Formula {
        &self.ty.target
    }
}

impl fmt::Display for TypedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.term, self.ty)
    }
}

/// Translation into Gentzen constructors. Conjunction of terms survives when
/// the term lies in the check fragment and disjunction of terms when it lies
/// in the hat fragment; otherwise both are encoded by pairing.
pub fn to_gentzen(term: &Term) -> Result<Term, TypeError> {
    term.infer()?;
    let keep_conj = !term.mentions(&hat_only);
    let keep_disj = !term.mentions(&check_only);
    gentzen_rec(term, keep_conj, keep_disj)
}

/// Translation into Gentzen constructors with every conjunction and
/// disjunction of terms encoded.
pub fn to_gentzen_strict(term: &Term) -> Result<Term, TypeError> {
    term.infer()?;
    gentzen_rec(term, false, false)
}

fn gentzen_rec(t: &Term, keep_conj: bool, keep_disj: bool) -> Result<Term, TypeError> {
    let rec = |x: &Term| gentzen_rec(x, keep_conj, keep_disj);
    Ok(match t {
        Term::Hw(a) => Term::pair(Term::Id(a.clone()), Term::Id(a.clone())),
        Term::Cw(a) => Term::copair(Term::Id(a.clone()), Term::Id(a.clone())),
        Term::Hk(i, a1, a2) => {
            let (keep, other) = (i.pick(a1, a2), i.pick(a2, a1));
            Term::hproj(*i, other.clone(), Term::Id(keep.clone()))
        }
        Term::Ck(i, a1, a2) => {
            let (keep, other) = (i.pick(a1, a2), i.pick(a2, a1));
            Term::cinj(*i, other.clone(), Term::Id(keep.clone()))
        }
        Term::Conj(f1, f2) if !keep_conj => {
            let a1 = f1.infer()?.source;
            let a2 = f2.infer()?.source;
            Term::pair(
                Term::hproj(Side::Left, a2, rec(f1)?),
                Term::hproj(Side::Right, a1, rec(f2)?),
            )
        }
        Term::Disj(f1, f2) if !keep_disj => {
            let b1 = f1.infer()?.target;
            let b2 = f2.infer()?.target;
            Term::copair(
                Term::cinj(Side::Left, b2, rec(f1)?),
                Term::cinj(Side::Right, b1, rec(f2)?),
            )
        }
        other => {
            let kids = other.children().into_iter().map(rec).collect::<Result<Vec<_>, _>>()?;
            other.with_children(kids)
        }
    })
}

/// Literal expansion of the Gentzen constructors into arrow primitives.
pub fn to_arrow(term: &Term) -> Result<Term, TypeError> {
    term.infer()?;
    arrow_rec(term)
}

fn arrow_rec(t: &Term) -> Result<Term, TypeError> {
    Ok(match t {
        Term::Pair(f1, f2) => {
            let c = f1.infer()?.source;
            Term::comp(Term::conj(arrow_rec(f1)?, arrow_rec(f2)?), Term::Hw(c))
        }
        Term::Copair(g1, g2) => {
            let c = g1.infer()?.target;
            Term::comp(Term::Cw(c), Term::disj(arrow_rec(g1)?, arrow_rec(g2)?))
        }
        Term::HProj(i, other, g) => {
            let a = g.infer()?.source;
            let (a1, a2) = match i {
                Side::Left => (a, other.clone()),
                Side::Right => (other.clone(), a),
            };
            Term::comp(arrow_rec(g)?, Term::Hk(*i, a1, a2))
        }
        Term::CInj(i, other, f) => {
            let b = f.infer()?.target;
            let (b1, b2) = match i {
                Side::Left => (b, other.clone()),
                Side::Right => (other.clone(), b),
            };
            Term::comp(Term::Ck(*i, b1, b2), arrow_rec(f)?)
        }
        other => {
            let kids = other.children().into_iter().map(arrow_rec).collect::<Result<Vec<_>, _>>()?;
            other.with_children(kids)
        }
    })
}

/// The mirror image of a term: connectives, constants and dual constructors
/// are swapped and compositions reversed.
pub fn dualize_term(t: &Term) -> Term {
    let d = |x: &Arc<Term>| Arc::new(dualize_term(x));
    match t {
        Term::Id(a) => Term::Id(a.dual()),
        Term::Hw(a) => Term::Cw(a.dual()),
        Term::Cw(a) => Term::Hw(a.dual()),
        Term::Hk(i, a, b) => Term::Ck(*i, a.dual(), b.dual()),
        Term::Ck(i, a, b) => Term::Hk(*i, a.dual(), b.dual()),
        Term::Hkappa(a) => Term::Ckappa(a.dual()),
        Term::Ckappa(a) => Term::Hkappa(a.dual()),
        Term::Comp(g, f) => Term::Comp(d(f), d(g)),
        Term::Conj(a, b) => Term::Disj(d(a), d(b)),
        Term::Disj(a, b) => Term::Conj(d(a), d(b)),
        Term::Pair(a, b) => Term::Copair(d(a), d(b)),
        Term::Copair(a, b) => Term::Pair(d(a), d(b)),
        Term::HProj(i, o, g) => Term::CInj(*i, o.dual(), d(g)),
        Term::CInj(i, o, f) => Term::HProj(*i, o.dual(), d(f)),
    }
}

pub fn dualize(t: &Term, system: System) -> Result<(Term, System), TypeError> {
    typecheck(t, system)?;
    Ok((dualize_term(t), system.dual()))
}

fn hat_only(t: &Term) -> bool {
    matches!(t, Term::Hw(_) | Term::Hk(..) | Term::Hkappa(_) | Term::Pair(..) | Term::HProj(..))
}

fn check_only(t: &Term) -> bool {
    matches!(t, Term::Cw(_) | Term::Ck(..) | Term::Ckappa(_) | Term::Copair(..) | Term::CInj(..))
}

/// Whether a term avoids the check-side constructors, the hat-side ones, both
/// or neither.
pub fn fragment_of(t: &Term) -> Fragment {
    match (t.mentions(&check_only), t.mentions(&hat_only)) {
        (false, false) => Fragment::Both,
        (false, true) => Fragment::HatFragment,
        (true, false) => Fragment::CheckFragment,
        (true, true) => Fragment::Neither,
    }
}

impl Fragment {
    pub fn within_hat(self) -> bool {
        matches!(self, Fragment::HatFragment | Fragment::Both)
    }

    pub fn within_check(self) -> bool {
        matches!(self, Fragment::CheckFragment | Fragment::Both)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |s: &Side| s.index();
        match self {
            Term::Id(a) => write!(f, "id<{a}>"),
            Term::Hw(a) => write!(f, "hw<{a}>"),
            Term::Cw(a) => write!(f, "cw<{a}>"),
            Term::Hk(i, a, b) => write!(f, "hk{}<{a},{b}>", idx(i)),
            Term::Ck(i, a, b) => write!(f, "ck{}<{a},{b}>", idx(i)),
            Term::Hkappa(a) => write!(f, "hkap<{a}>"),
            Term::Ckappa(a) => write!(f, "ckap<{a}>"),
            Term::Comp(g, h) => {
                if matches!(**g, Term::Comp(..)) {
                    write!(f, "({g}) . {h}")
                } else {
                    write!(f, "{g} . {h}")
                }
            }
            Term::Conj(a, b) => write!(f, "({a} /\\ {b})"),
            Term::Disj(a, b) => write!(f, "({a} \\/ {b})"),
            Term::Pair(a, b) => write!(f, "pair({a}, {b})"),
            Term::Copair(a, b) => write!(f, "copair({a}, {b})"),
            Term::HProj(i, o, g) => write!(f, "HK{}<{o}>({g})", idx(i)),
            Term::CInj(i, o, g) => write!(f, "CK{}<{o}>({g})", idx(i)),
        }
    }
}
