//! Propositional formulas over letters, `top` and `bot`, with the two binary
//! connectives, plus the predicates the restricted deciders depend on.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A propositional letter.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: &str) -> Self {
        Letter(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The two binary connectives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Connective {
    Conj,
    Disj,
}

impl Connective {
    pub fn dual(self) -> Self {
        match self {
            Connective::Conj => Connective::Disj,
            Connective::Disj => Connective::Conj,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Conj => "/\\",
            Connective::Disj => "\\/",
        }
    }
}

/// The two propositional constants, also used as the values of letterless
/// formulas.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Constant {
    Top,
    Bot,
}

impl Constant {
    pub fn meet(self, other: Constant) -> Constant {
        if self == Constant::Top && other == Constant::Top {
            Constant::Top
        } else {
            Constant::Bot
        }
    }

    pub fn join(self, other: Constant) -> Constant {
        if self == Constant::Bot && other == Constant::Bot {
            Constant::Bot
        } else {
            Constant::Top
        }
    }

    pub fn formula(self) -> Formula {
        match self {
            Constant::Top => Formula::Top,
            Constant::Bot => Formula::Bot,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Formula {
    Letter(Letter),
    Top,
    Bot,
    Conj(Arc<Formula>, Arc<Formula>),
    Disj(Arc<Formula>, Arc<Formula>),
}

/// One step of an [`OccPath`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// `1` for the left component, `2` for the right one.
    pub fn index(self) -> u8 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Side> {
        match i {
            1 => Some(Side::Left),
            2 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn pick<T>(self, left: T, right: T) -> T {
        match self {
            Side::Left => left,
            Side::Right => right,
        }
    }
}

/// Positional address of a subformula occurrence: the steps taken from the
/// root. The empty path addresses the whole formula.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct OccPath(pub Vec<Side>);

impl OccPath {
    pub fn root() -> Self {
        OccPath(Vec::new())
    }

    pub fn child(&self, side: Side) -> OccPath {
        let mut steps = self.0.clone();
        steps.push(side);
        OccPath(steps)
    }

    pub fn join(&self, rest: &OccPath) -> OccPath {
        let mut steps = self.0.clone();
        steps.extend_from_slice(&rest.0);
        OccPath(steps)
    }

    pub fn is_prefix_of(&self, other: &OccPath) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// The remainder of `other` after this prefix.
    pub fn strip_from(&self, other: &OccPath) -> Option<OccPath> {
        self.is_prefix_of(other)
            .then(|| OccPath(other.0[self.0.len()..].to_vec()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for OccPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s {
                Side::Left => "left",
                Side::Right => "right",
            })
            .collect();
        f.write_str(&parts.join("."))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("path {path} does not resolve in {formula}")]
    InvalidPath { path: OccPath, formula: Formula },
    #[error("formula {0} contains a letter")]
    NotLetterless(Formula),
}

impl Formula {
    pub fn letter(name: &str) -> Formula {
        Formula::Letter(Letter::new(name))
    }

    pub fn conj(left: Formula, right: Formula) -> Formula {
        Formula::Conj(Arc::new(left), Arc::new(right))
    }

    pub fn disj(left: Formula, right: Formula) -> Formula {
        Formula::Disj(Arc::new(left), Arc::new(right))
    }

    pub fn binary(conn: Connective, left: Formula, right: Formula) -> Formula {
        match conn {
            Connective::Conj => Formula::conj(left, right),
            Connective::Disj => Formula::disj(left, right),
        }
    }

    /// Splits a binary formula into its connective and components.
    pub fn as_binary(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::Conj(l, r) => Some((Connective::Conj, l, r)),
            Formula::Disj(l, r) => Some((Connective::Disj, l, r)),
            _ => None,
        }
    }

    pub fn as_conj(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Conj(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn as_disj(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Disj(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Number of letter occurrences, written |A|.
    pub fn occ_count(&self) -> usize {
        match self {
            Formula::Letter(_) => 1,
            Formula::Top | Formula::Bot => 0,
            Formula::Conj(l, r) | Formula::Disj(l, r) => l.occ_count() + r.occ_count(),
        }
    }

    /// Letter occurrences numbered from 1, left to right.
    pub fn occurrences(&self) -> Vec<(usize, Letter)> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out.into_iter().enumerate().map(|(i, l)| (i + 1, l)).collect()
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            Formula::Letter(l) => out.push(l.clone()),
            Formula::Top | Formula::Bot => {}
            Formula::Conj(l, r) | Formula::Disj(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    /// The letter at the 1-based occurrence `index`.
    pub fn letter_at(&self, index: usize) -> Option<Letter> {
        self.occurrences()
            .into_iter()
            .find(|(i, _)| *i == index)
            .map(|(_, l)| l)
    }

    /// Path to the 1-based occurrence `index`.
    pub fn path_of_occurrence(&self, index: usize) -> Option<OccPath> {
        fn go(f: &Formula, index: usize, path: &mut Vec<Side>) -> bool {
            match f {
                Formula::Letter(_) => index == 1,
                Formula::Top | Formula::Bot => false,
                Formula::Conj(l, r) | Formula::Disj(l, r) => {
                    let n = l.occ_count();
                    if index <= n {
                        path.push(Side::Left);
                        go(l, index, path)
                    } else {
                        path.push(Side::Right);
                        go(r, index - n, path)
                    }
                }
            }
        }
        if index == 0 || index > self.occ_count() {
            return None;
        }
        let mut path = Vec::new();
        go(self, index, &mut path).then_some(OccPath(path))
    }

    /// Number of letter occurrences strictly to the left of the subformula at
    /// `path`; adding this offset converts local indices into global ones.
    pub fn occ_offset(&self, path: &OccPath) -> Result<usize, FormulaError> {
        let mut offset = 0;
        let mut node = self;
        for step in &path.0 {
            let (_, l, r) = node.as_binary().ok_or_else(|| FormulaError::InvalidPath {
                path: path.clone(),
                formula: self.clone(),
            })?;
            match step {
                Side::Left => node = l,
                Side::Right => {
                    offset += l.occ_count();
                    node = r;
                }
            }
        }
        Ok(offset)
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn is_letterless(&self) -> bool {
        self.occ_count() == 0
    }

    pub fn has_constants(&self) -> bool {
        match self {
            Formula::Letter(_) => false,
            Formula::Top | Formula::Bot => true,
            Formula::Conj(l, r) | Formula::Disj(l, r) => l.has_constants() || r.has_constants(),
        }
    }

    pub fn contains_top(&self) -> bool {
        match self {
            Formula::Top => true,
            Formula::Letter(_) | Formula::Bot => false,
            Formula::Conj(l, r) | Formula::Disj(l, r) => l.contains_top() || r.contains_top(),
        }
    }

    pub fn contains_bot(&self) -> bool {
        match self {
            Formula::Bot => true,
            Formula::Letter(_) | Formula::Top => false,
            Formula::Conj(l, r) | Formula::Disj(l, r) => l.contains_bot() || r.contains_bot(),
        }
    }

    pub fn contains_conj(&self) -> bool {
        match self {
            Formula::Conj(..) => true,
            Formula::Disj(l, r) => l.contains_conj() || r.contains_conj(),
            _ => false,
        }
    }

    pub fn contains_disj(&self) -> bool {
        match self {
            Formula::Disj(..) => true,
            Formula::Conj(l, r) => l.contains_disj() || r.contains_disj(),
            _ => false,
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bot => 1,
            Formula::Conj(l, r) | Formula::Disj(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Number of leaves (letters and constants).
    pub fn leaf_count(&self) -> usize {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bot => 1,
            Formula::Conj(l, r) | Formula::Disj(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn subformula_at(&self, path: &OccPath) -> Result<&Formula, FormulaError> {
        let mut node = self;
        for step in &path.0 {
            let (_, l, r) = node.as_binary().ok_or_else(|| FormulaError::InvalidPath {
                path: path.clone(),
                formula: self.clone(),
            })?;
            node = step.pick(l, r);
        }
        Ok(node)
    }

    /// Replaces the subformula occurrence at `at` by `replacement`.
    pub fn replace_at(&self, at: &OccPath, replacement: Formula) -> Result<Formula, FormulaError> {
        fn go(f: &Formula, steps: &[Side], replacement: Formula) -> Option<Formula> {
            let Some((first, rest)) = steps.split_first() else {
                return Some(replacement);
            };
            let (conn, l, r) = f.as_binary()?;
            Some(match first {
                Side::Left => Formula::binary(conn, go(l, rest, replacement)?, r.clone()),
                Side::Right => Formula::binary(conn, l.clone(), go(r, rest, replacement)?),
            })
        }
        go(self, &at.0, replacement).ok_or_else(|| FormulaError::InvalidPath {
            path: at.clone(),
            formula: self.clone(),
        })
    }

    /// Uniform substitution at letter leaves; unmapped letters are kept.
    pub fn substitute(&self, sigma: &BTreeMap<Letter, Formula>) -> Formula {
        self.map_letters(&mut |l| sigma.get(l).cloned().unwrap_or_else(|| Formula::Letter(l.clone())))
    }

    pub fn map_letters(&self, f: &mut impl FnMut(&Letter) -> Formula) -> Formula {
        match self {
            Formula::Letter(l) => f(l),
            Formula::Top => Formula::Top,
            Formula::Bot => Formula::Bot,
            Formula::Conj(l, r) => Formula::conj(l.map_letters(f), r.map_letters(f)),
            Formula::Disj(l, r) => Formula::disj(l.map_letters(f), r.map_letters(f)),
        }
    }

    /// Replaces every letter by the constant `c`.
    pub fn constant_instance(&self, c: Constant) -> Formula {
        self.map_letters(&mut |_| c.formula())
    }

    /// Swaps the connectives and the constants.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Letter(l) => Formula::Letter(l.clone()),
            Formula::Top => Formula::Bot,
            Formula::Bot => Formula::Top,
            Formula::Conj(l, r) => Formula::disj(l.dual(), r.dual()),
            Formula::Disj(l, r) => Formula::conj(l.dual(), r.dual()),
        }
    }

    /// Two-valued evaluation of a letterless formula. The result names the
    /// constant the formula is isomorphic to in the dicartesian setting.
    pub fn eval_letterless(&self) -> Result<Constant, FormulaError> {
        match self {
            Formula::Letter(_) => Err(FormulaError::NotLetterless(self.clone())),
            Formula::Top => Ok(Constant::Top),
            Formula::Bot => Ok(Constant::Bot),
            Formula::Conj(l, r) => Ok(l.eval_letterless()?.meet(r.eval_letterless()?)),
            Formula::Disj(l, r) => Ok(l.eval_letterless()?.join(r.eval_letterless()?)),
        }
    }

    /// Whether an arrow `A |- bot` exists: decided by evaluating the instance
    /// with every letter replaced by `top`.
    pub fn is_contradiction(&self) -> bool {
        self.constant_instance(Constant::Top)
            .eval_letterless()
            .map(|c| c == Constant::Bot)
            .unwrap_or(false)
    }

    /// Whether an arrow `top |- A` exists: decided by evaluating the instance
    /// with every letter replaced by `bot`.
    pub fn is_tautology(&self) -> bool {
        self.constant_instance(Constant::Bot)
            .eval_letterless()
            .map(|c| c == Constant::Top)
            .unwrap_or(false)
    }

    pub fn is_dnf(&self) -> bool {
        match self {
            Formula::Disj(l, r) => l.is_dnf() && r.is_dnf(),
            f => !f.contains_disj(),
        }
    }

    pub fn is_cnf(&self) -> bool {
        match self {
            Formula::Conj(l, r) => l.is_cnf() && r.is_cnf(),
            f => !f.contains_conj(),
        }
    }

    /// No conjunction has a contradictory side next to a side containing a
    /// disjunction.
    pub fn is_bot_normal(&self) -> bool {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bot => true,
            Formula::Conj(l, r) => {
                let bad = (r.is_contradiction() && l.contains_disj())
                    || (l.is_contradiction() && r.contains_disj());
                !bad && l.is_bot_normal() && r.is_bot_normal()
            }
            Formula::Disj(l, r) => l.is_bot_normal() && r.is_bot_normal(),
        }
    }

    /// Dual of [`Formula::is_bot_normal`].
    pub fn is_top_normal(&self) -> bool {
        match self {
            Formula::Letter(_) | Formula::Top | Formula::Bot => true,
            Formula::Disj(l, r) => {
                let bad = (r.is_tautology() && l.contains_conj())
                    || (l.is_tautology() && r.contains_conj());
                !bad && l.is_top_normal() && r.is_top_normal()
            }
            Formula::Conj(l, r) => l.is_top_normal() && r.is_top_normal(),
        }
    }

    /// Paths of every subformula occurrence, in pre-order.
    pub fn subformula_paths(&self) -> Vec<OccPath> {
        fn go(f: &Formula, path: &mut Vec<Side>, out: &mut Vec<OccPath>) {
            out.push(OccPath(path.clone()));
            if let Some((_, l, r)) = f.as_binary() {
                path.push(Side::Left);
                go(l, path, out);
                path.pop();
                path.push(Side::Right);
                go(r, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Letter(l) => write!(f, "{l}"),
            Formula::Top => f.write_str("top"),
            Formula::Bot => f.write_str("bot"),
            Formula::Conj(l, r) => write!(f, "({l} /\\ {r})"),
            Formula::Disj(l, r) => write!(f, "({l} \\/ {r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn letters(v: &[(usize, &str)]) -> Vec<(usize, Letter)> {
        v.iter().map(|(i, s)| (*i, Letter::new(s))).collect()
    }

    #[test]
    fn occurrences_count_letters_left_to_right() {
        assert_eq!(f("p").occurrences(), letters(&[(1, "p")]));
        assert_eq!(
            f("(p/\\q)\\/p").occurrences(),
            letters(&[(1, "p"), (2, "q"), (3, "p")])
        );
        assert_eq!(f("(p/\\bot)\\/top").occurrences(), letters(&[(1, "p")]));
    }

    #[test]
    fn replace_at_examples() {
        let right = OccPath(vec![Side::Right]);
        assert_eq!(f("p/\\q").replace_at(&right, f("r")).unwrap(), f("p/\\r"));
        assert_eq!(
            f("p").replace_at(&OccPath::root(), f("p/\\bot")).unwrap(),
            f("p/\\bot")
        );
        let a = f("(p\\/q)/\\r");
        let out = a.replace_at(&OccPath(vec![Side::Left]), f("q")).unwrap();
        assert_eq!(out, f("q/\\r"));
        assert_eq!(out.occ_count(), a.occ_count() - f("p\\/q").occ_count() + 1);
    }

    #[test]
    fn replace_at_rejects_bad_path() {
        let err = f("p").replace_at(&OccPath(vec![Side::Left]), f("q"));
        assert!(matches!(err, Err(FormulaError::InvalidPath { .. })));
    }

    #[test]
    fn substitute_examples() {
        let top = |names: &[&str]| -> BTreeMap<Letter, Formula> {
            names.iter().map(|n| (Letter::new(n), Formula::Top)).collect()
        };
        assert_eq!(f("p/\\q").substitute(&top(&["p", "q"])), f("top/\\top"));
        assert_eq!(f("p\\/bot").substitute(&top(&["p"])), f("top\\/bot"));
        let sigma = BTreeMap::from([(Letter::new("p"), f("r"))]);
        assert_eq!(f("p/\\(q\\/p)").substitute(&sigma), f("r/\\(q\\/r)"));
    }

    #[test]
    fn letterless_evaluation() {
        assert_eq!(f("bot/\\bot").eval_letterless(), Ok(Constant::Bot));
        assert_eq!(f("top\\/top").eval_letterless(), Ok(Constant::Top));
        assert_eq!(f("(top/\\bot)\\/top").eval_letterless(), Ok(Constant::Top));
        assert!(matches!(
            f("p/\\top").eval_letterless(),
            Err(FormulaError::NotLetterless(_))
        ));
    }

    #[test]
    fn contradictions_and_tautologies() {
        assert!(f("p/\\bot").is_contradiction());
        assert!(!f("p\\/bot").is_contradiction());
        assert!(f("p\\/top").is_tautology());
        assert!(!f("p").is_tautology());
        assert!(!f("p").is_contradiction());
    }

    #[test]
    fn normal_form_predicates() {
        assert!(f("(p/\\q)\\/p").is_dnf());
        assert!(!f("p/\\(q\\/r)").is_dnf());
        assert!(f("(p\\/bot)/\\top").is_cnf());
        assert!(f("p").is_dnf() && f("p").is_cnf());
    }

    #[test]
    fn bot_and_top_normality() {
        assert!(f("p/\\bot").is_bot_normal());
        assert!(!f("((p/\\bot)\\/top)/\\bot").is_bot_normal());
        assert!(!f("((p\\/top)/\\bot)\\/top").is_top_normal());
        // no disjunction below any conjunct: vacuously bot-normal
        assert!(f("(p/\\bot)/\\(q/\\bot)").is_bot_normal());
    }

    #[test]
    fn occurrence_paths_and_offsets() {
        let a = f("(p/\\q)\\/(r/\\p)");
        let path = a.path_of_occurrence(3).unwrap();
        assert_eq!(path, OccPath(vec![Side::Right, Side::Left]));
        assert_eq!(a.occ_offset(&path).unwrap(), 2);
        assert_eq!(a.subformula_at(&path).unwrap(), &f("r"));
        assert_eq!(a.path_of_occurrence(5), None);
    }

    #[test]
    fn display_parenthesizes_every_binary_node() {
        assert_eq!(f("p/\\p").to_string(), "(p /\\ p)");
        assert_eq!(f("(p/\\q)\\/top").to_string(), "((p /\\ q) \\/ top)");
    }
}
