//! Finite pointed-set models of dicartesian categories, with and without an
//! empty initial object, and the family of composites that no sufficient
//! condition of the decider covers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::formulas::{Formula, Letter, Side};
use crate::terms::{typecheck, System, Term, TermType, TypeError, TypedTerm};

/// Elements of interpreted formulas. Products and sums use tagged pairs,
/// with `Star` standing for the basepoint in either slot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Elem {
    Star,
    Atom(Arc<str>),
    Pair(Arc<Elem>, Arc<Elem>),
}

impl Elem {
    pub fn pair(x: Elem, y: Elem) -> Elem {
        Elem::Pair(Arc::new(x), Arc::new(y))
    }

    pub fn atom(name: &str) -> Elem {
        Elem::Atom(name.into())
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Elem::Star)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Star => f.write_str("*"),
            Elem::Atom(a) => f.write_str(a),
            Elem::Pair(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// A pointed set, or the empty object of the extended model.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ModelObject {
    Empty,
    Pointed(BTreeSet<Elem>),
}

impl ModelObject {
    /// The one-point set.
    pub fn unit() -> ModelObject {
        ModelObject::Pointed(BTreeSet::from([Elem::Star]))
    }

    /// A pointed set with the given non-basepoint atoms.
    pub fn with_atoms<S: AsRef<str>>(names: &[S]) -> ModelObject {
        let mut set = BTreeSet::from([Elem::Star]);
        set.extend(names.iter().map(|n| Elem::atom(n.as_ref())));
        ModelObject::Pointed(set)
    }

    /// A pointed set of `size` elements whose atoms are named after `prefix`.
    pub fn of_size(prefix: &str, size: usize) -> ModelObject {
        let names: Vec<String> = (1..size).map(|i| format!("{prefix}{i}")).collect();
        ModelObject::with_atoms(&names)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ModelObject::Empty)
    }

    pub fn elements(&self) -> Vec<Elem> {
        match self {
            ModelObject::Empty => Vec::new(),
            ModelObject::Pointed(s) => s.iter().cloned().collect(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ModelObject::Empty => 0,
            ModelObject::Pointed(s) => s.len(),
        }
    }

    fn points(&self) -> impl Iterator<Item = &Elem> {
        let set = match self {
            ModelObject::Empty => None,
            ModelObject::Pointed(s) => Some(s),
        };
        set.into_iter().flatten().filter(|x| !x.is_star())
    }

    /// The smash-style product: the basepoint together with every pair other
    /// than (basepoint, basepoint).
    pub fn product(&self, other: &ModelObject) -> ModelObject {
        if self.is_empty() || other.is_empty() {
            return ModelObject::Empty;
        }
        let mut set = BTreeSet::from([Elem::Star]);
        for x in self.elements() {
            for y in other.elements() {
                if !(x.is_star() && y.is_star()) {
                    set.insert(Elem::pair(x.clone(), y));
                }
            }
        }
        ModelObject::Pointed(set)
    }

    /// The wedge: both summands glued at the basepoint.
    pub fn sum(&self, other: &ModelObject) -> ModelObject {
        match (self, other) {
            (ModelObject::Empty, b) => b.clone(),
            (a, ModelObject::Empty) => a.clone(),
            _ => {
                let mut set = BTreeSet::from([Elem::Star]);
                set.extend(self.points().map(|x| Elem::pair(x.clone(), Elem::Star)));
                set.extend(other.points().map(|y| Elem::pair(Elem::Star, y.clone())));
                ModelObject::Pointed(set)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ModelObject::Empty => json!([]),
            ModelObject::Pointed(s) => json!(s.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        }
    }
}

impl fmt::Display for ModelObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelObject::Empty => f.write_str("{}"),
            ModelObject::Pointed(s) => {
                let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

/// How the constants are read.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ModelVariant {
    /// Both constants are the one-point set.
    Star,
    /// Top is the one-point set, bottom is the empty object.
    StarEmpty,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 2] = [ModelVariant::Star, ModelVariant::StarEmpty];

    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::Star => "star",
            ModelVariant::StarEmpty => "star-empty",
        }
    }
}

pub type Assignment = BTreeMap<Letter, ModelObject>;

/// The same pointed set of `size` elements for every letter in `letters`.
pub fn uniform_assignment<'a>(letters: impl IntoIterator<Item = &'a Letter>, size: usize) -> Assignment {
    letters
        .into_iter()
        .map(|l| (l.clone(), ModelObject::of_size(l.as_str(), size)))
        .collect()
}

/// A basepoint-preserving function (or an empty function) given by its table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointedFn {
    pub domain: ModelObject,
    pub codomain: ModelObject,
    pub table: BTreeMap<Elem, Elem>,
}

impl PointedFn {
    pub fn apply(&self, x: &Elem) -> &Elem {
        &self.table[x]
    }

    pub fn is_empty_function(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn preserves_basepoint(&self) -> bool {
        match self.table.get(&Elem::Star) {
            Some(y) => y.is_star(),
            None => self.domain.is_empty(),
        }
    }

    pub fn to_json(&self) -> Value {
        let table: serde_json::Map<String, Value> = self
            .table
            .iter()
            .map(|(x, y)| (x.to_string(), Value::String(y.to_string())))
            .collect();
        json!({
            "domain": self.domain.to_json(),
            "codomain": self.codomain.to_json(),
            "table": table,
        })
    }
}

impl fmt::Display for PointedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.table.iter().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "{{{}}} : {} -> {}", items.join(", "), self.domain, self.codomain)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("no set is assigned to the letter {0}")]
    UnassignedLetter(Letter),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("the terms have different types: {left} and {right}")]
    TypeMismatch { left: TermType, right: TermType },
}

pub fn interp_formula(a: &Formula, assignment: &Assignment, variant: ModelVariant) -> Result<ModelObject, ModelError> {
    Ok(match a {
        Formula::Letter(l) => assignment
            .get(l)
            .cloned()
            .ok_or_else(|| ModelError::UnassignedLetter(l.clone()))?,
        Formula::Top => ModelObject::unit(),
        Formula::Bot => match variant {
            ModelVariant::Star => ModelObject::unit(),
            ModelVariant::StarEmpty => ModelObject::Empty,
        },
        Formula::Conj(x, y) => {
            interp_formula(x, assignment, variant)?.product(&interp_formula(y, assignment, variant)?)
        }
        Formula::Disj(x, y) => interp_formula(x, assignment, variant)?.sum(&interp_formula(y, assignment, variant)?),
    })
}

/// Interprets a term of the dicartesian language (or any subsystem).
pub fn interp_term(t: &Term, assignment: &Assignment, variant: ModelVariant) -> Result<PointedFn, ModelError> {
    let ty = typecheck(t, System::Ltopbot)?;
    let domain = interp_formula(&ty.source, assignment, variant)?;
    let codomain = interp_formula(&ty.target, assignment, variant)?;
    let table = tabulate(&compile(t, assignment, variant)?, &domain);
    Ok(PointedFn {
        domain,
        codomain,
        table,
    })
}

/// Whether `f` and `g` agree on every element of their common domain. Only
/// the domain is built, so large targets stay cheap.
pub fn model_equal(f: &Term, g: &Term, assignment: &Assignment, variant: ModelVariant) -> Result<bool, ModelError> {
    let tf = typecheck(f, System::Ltopbot)?;
    let tg = typecheck(g, System::Ltopbot)?;
    if tf != tg {
        return Err(ModelError::TypeMismatch { left: tf, right: tg });
    }
    let (cf, cg) = (compile(f, assignment, variant)?, compile(g, assignment, variant)?);
    let domain = interp_formula(&tf.source, assignment, variant)?;
    Ok(domain.elements().iter().all(|x| cf.apply(x) == cg.apply(x)))
}

/// Whether `t` sends the basepoint to the basepoint (vacuous on the empty object).
pub fn preserves_basepoint(t: &Term, assignment: &Assignment, variant: ModelVariant) -> Result<bool, ModelError> {
    let ty = typecheck(t, System::Ltopbot)?;
    let c = Compiler { assignment, variant };
    if c.empty(&ty.source)? {
        return Ok(true);
    }
    Ok(c.compile(t)?.apply(&Elem::Star).is_star())
}

/// A term compiled for pointwise evaluation: only the emptiness of the
/// objects involved matters, so no intermediate set is ever built.
enum Op {
    Id,
    Diag,
    Codiag,
    Proj(Side),
    Inj { side: Side, other_empty: bool },
    Const,
    Comp(Box<Op>, Box<Op>),
    Conj(Box<Op>, Box<Op>),
    Disj { f1: Box<Op>, f2: Box<Op>, dom: (bool, bool), cod: (bool, bool) },
    Pair(Box<Op>, Box<Op>),
    Copair { g1: Box<Op>, g2: Box<Op>, dom: (bool, bool) },
    HProj(Side, Box<Op>),
    CInj { side: Side, other_empty: bool, f: Box<Op> },
}

struct Compiler<'a> {
    assignment: &'a Assignment,
    variant: ModelVariant,
}

impl Compiler<'_> {
    fn empty(&self, a: &Formula) -> Result<bool, ModelError> {
        Ok(match a {
            Formula::Letter(l) => self
                .assignment
                .get(l)
                .ok_or_else(|| ModelError::UnassignedLetter(l.clone()))?
                .is_empty(),
            Formula::Top => false,
            Formula::Bot => self.variant == ModelVariant::StarEmpty,
            Formula::Conj(x, y) => self.empty(x)? | self.empty(y)?,
            Formula::Disj(x, y) => self.empty(x)? & self.empty(y)?,
        })
    }

    fn sides(&self, t: &Term) -> Result<(bool, bool), ModelError> {
        let ty = t.infer()?;
        Ok((self.empty(&ty.source)?, self.empty(&ty.target)?))
    }

    fn compile(&self, t: &Term) -> Result<Op, ModelError> {
        let sub = |x: &Term| self.compile(x).map(Box::new);
        Ok(match t {
            Term::Id(_) => Op::Id,
            Term::Hw(_) => Op::Diag,
            Term::Cw(_) => Op::Codiag,
            Term::Hk(i, _, _) => Op::Proj(*i),
            Term::Ck(i, a1, a2) => Op::Inj {
                side: *i,
                other_empty: self.empty(i.pick(a2, a1))?,
            },
            Term::Hkappa(_) | Term::Ckappa(_) => Op::Const,
            Term::Comp(g, f) => Op::Comp(sub(g)?, sub(f)?),
            Term::Conj(f1, f2) => Op::Conj(sub(f1)?, sub(f2)?),
            Term::Disj(f1, f2) => {
                let ((d1, c1), (d2, c2)) = (self.sides(f1)?, self.sides(f2)?);
                Op::Disj {
                    f1: sub(f1)?,
                    f2: sub(f2)?,
                    dom: (d1, d2),
                    cod: (c1, c2),
                }
            }
            Term::Pair(f1, f2) => Op::Pair(sub(f1)?, sub(f2)?),
            Term::Copair(g1, g2) => Op::Copair {
                dom: (self.sides(g1)?.0, self.sides(g2)?.0),
                g1: sub(g1)?,
                g2: sub(g2)?,
            },
            Term::HProj(i, _, g) => Op::HProj(*i, sub(g)?),
            Term::CInj(i, other, f) => Op::CInj {
                side: *i,
                other_empty: self.empty(other)?,
                f: sub(f)?,
            },
        })
    }
}

impl Op {
    fn apply(&self, z: &Elem) -> Elem {
        match self {
            Op::Id => z.clone(),
            Op::Diag => pairing(z.clone(), z.clone()),
            Op::Codiag => cases((false, false), z, Elem::clone, Elem::clone),
            Op::Proj(i) => project(*i, z),
            Op::Inj { side, other_empty } => inject(*side, *other_empty, z.clone()),
            Op::Const => Elem::Star,
            Op::Comp(g, f) => g.apply(&f.apply(z)),
            Op::Conj(f1, f2) => match z {
                Elem::Pair(x, y) => pairing(f1.apply(x), f2.apply(y)),
                _ => Elem::Star,
            },
            Op::Disj { f1, f2, dom, cod } => cases(
                *dom,
                z,
                |x| inject(Side::Left, cod.1, f1.apply(x)),
                |y| inject(Side::Right, cod.0, f2.apply(y)),
            ),
            Op::Pair(f1, f2) => pairing(f1.apply(z), f2.apply(z)),
            Op::Copair { g1, g2, dom } => cases(*dom, z, |x| g1.apply(x), |y| g2.apply(y)),
            Op::HProj(i, g) => g.apply(&project(*i, z)),
            Op::CInj { side, other_empty, f } => inject(*side, *other_empty, f.apply(z)),
        }
    }
}

fn tabulate(op: &Op, domain: &ModelObject) -> BTreeMap<Elem, Elem> {
    domain
        .elements()
        .into_iter()
        .map(|x| {
            let y = op.apply(&x);
            (x, y)
        })
        .collect()
}

fn compile(t: &Term, assignment: &Assignment, variant: ModelVariant) -> Result<Op, ModelError> {
    Compiler { assignment, variant }.compile(t)
}

fn pairing(x: Elem, y: Elem) -> Elem {
    if x.is_star() && y.is_star() {
        Elem::Star
    } else {
        Elem::pair(x, y)
    }
}

fn project(i: Side, z: &Elem) -> Elem {
    match z {
        Elem::Pair(x, y) => (**i.pick(x, y)).clone(),
        _ => Elem::Star,
    }
}

fn inject(i: Side, other_empty: bool, x: Elem) -> Elem {
    if other_empty || x.is_star() {
        return x;
    }
    match i {
        Side::Left => Elem::pair(x, Elem::Star),
        Side::Right => Elem::pair(Elem::Star, x),
    }
}

/// Case analysis on an element of a sum whose summands have the given
/// emptiness.
fn cases(empty: (bool, bool), z: &Elem, left: impl Fn(&Elem) -> Elem, right: impl Fn(&Elem) -> Elem) -> Elem {
    if empty.1 {
        return left(z);
    }
    if empty.0 {
        return right(z);
    }
    match z {
        Elem::Pair(x, y) if y.is_star() => left(x),
        Elem::Pair(_, y) => right(y),
        _ => left(&Elem::Star),
    }
}

/// `X` conjoined with bottom, then `n` times: joined with top, conjoined with bottom.
pub fn bot_tower(x: &Formula, n: usize) -> Formula {
    (0..n).fold(Formula::conj(x.clone(), Formula::Bot), |acc, _| {
        Formula::conj(Formula::disj(acc, Formula::Top), Formula::Bot)
    })
}

/// The mirror image of [`bot_tower`].
pub fn top_tower(x: &Formula, n: usize) -> Formula {
    (0..n).fold(Formula::disj(x.clone(), Formula::Top), |acc, _| {
        Formula::disj(Formula::conj(acc, Formula::Bot), Formula::Top)
    })
}

fn bot_term_tower(h: Term, n: usize) -> Term {
    let id_bot = || Term::Id(Formula::Bot);
    (0..n).fold(Term::conj(h, id_bot()), |acc, _| {
        Term::conj(Term::disj(acc, Term::Id(Formula::Top)), id_bot())
    })
}

fn top_term_tower(h: Term, n: usize) -> Term {
    let id_top = || Term::Id(Formula::Top);
    (0..n).fold(Term::disj(h, id_top()), |acc, _| {
        Term::disj(Term::conj(acc, Term::Id(Formula::Bot)), id_top())
    })
}

/// Two composites from `bot_tower(a, n + 1)` to `top_tower(a, n + 1)` with the
/// same occurrence relation, where neither endpoint is in normal form.
pub fn counterexample_pair(n: usize, a: &Formula) -> (TypedTerm, TypedTerm) {
    let inject_top = Term::Ck(Side::Left, a.clone(), Formula::Top);
    let f = Term::comp(
        top_term_tower(Term::conj(inject_top, Term::Id(Formula::Bot)), n),
        Term::Hk(Side::Left, top_tower(&Formula::conj(a.clone(), Formula::Bot), n), Formula::Bot),
    );
    let project_bot = Term::Hk(Side::Left, a.clone(), Formula::Bot);
    let g = Term::comp(
        Term::Ck(Side::Left, bot_tower(&Formula::disj(a.clone(), Formula::Top), n), Formula::Top),
        bot_term_tower(Term::disj(project_bot, Term::Id(Formula::Top)), n),
    );
    let typed = |t| TypedTerm::new(t, System::Ltopbot).expect("the family is well typed");
    (typed(f), typed(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::Constant;
    use crate::syntax::{parse_formula, parse_term};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn p_ab() -> Assignment {
        BTreeMap::from([(Letter::new("p"), ModelObject::with_atoms(&["a"]))])
    }

    #[test]
    fn formula_examples() {
        let pbot = parse_formula("p /\\ bot").unwrap();
        assert_eq!(interp_formula(&pbot, &p_ab(), ModelVariant::StarEmpty).unwrap(), ModelObject::Empty);
        let mut asg = p_ab();
        asg.insert(Letter::new("q"), ModelObject::with_atoms(&["b"]));
        let sum = interp_formula(&parse_formula("p \\/ q").unwrap(), &asg, ModelVariant::Star).unwrap();
        assert_eq!(sum.to_string(), "{*,(*,b),(a,*)}");
        let top = interp_formula(&Formula::Top, &Assignment::new(), ModelVariant::Star).unwrap();
        assert_eq!(top, ModelObject::unit());
        let prod = interp_formula(&parse_formula("p /\\ q").unwrap(), &asg, ModelVariant::Star).unwrap();
        assert_eq!(prod.len(), 4);
        assert!(matches!(
            interp_formula(&Formula::letter("r"), &asg, ModelVariant::Star),
            Err(ModelError::UnassignedLetter(_))
        ));
        assert_eq!(Constant::Bot.formula(), Formula::Bot);
    }

    #[test]
    fn term_examples() {
        let lhs = interp_term(&t("hk1<p,bot>"), &p_ab(), ModelVariant::StarEmpty).unwrap();
        assert!(lhs.is_empty_function() && lhs.codomain.is_empty() == false);
        let rhs = interp_term(&t("ckap<p> . hk2<p,bot>"), &p_ab(), ModelVariant::StarEmpty).unwrap();
        assert_eq!(lhs, rhs);
        let hw = interp_term(&t("hw<p>"), &p_ab(), ModelVariant::Star).unwrap();
        assert_eq!(hw.to_string(), "{*->*, a->(a,a)} : {*,a} -> {*,(*,a),(a,*),(a,a)}");
    }

    #[test]
    fn model_equal_examples() {
        let three = BTreeMap::from([(Letter::new("p"), ModelObject::with_atoms(&["a", "b"]))]);
        assert!(model_equal(&t("hk1<p,bot>"), &t("ckap<p> . hk2<p,bot>"), &p_ab(), ModelVariant::StarEmpty).unwrap());
        assert!(!model_equal(&t("hk1<p,bot>"), &t("ckap<p> . hk2<p,bot>"), &p_ab(), ModelVariant::Star).unwrap());
        assert!(!model_equal(&t("hk1<p,p>"), &t("hk2<p,p>"), &three, ModelVariant::StarEmpty).unwrap());
        assert!(model_equal(&t("hk1<p,p> . hw<p>"), &t("id<p>"), &p_ab(), ModelVariant::Star).unwrap());
    }

    #[test]
    fn sums_with_the_empty_object() {
        let asg = p_ab();
        for v in ModelVariant::ALL {
            let cw = interp_term(&t("copair(id<p>, ckap<p>) . ck1<p,bot>"), &asg, v).unwrap();
            let id = interp_term(&t("id<p>"), &asg, v).unwrap();
            assert_eq!(cw, id, "{}", v.name());
            let copair = interp_term(&t("copair(id<p>, ckap<p>)"), &asg, v).unwrap();
            assert!(copair.preserves_basepoint());
        }
    }

    #[test]
    fn counterexample_types() {
        let p = Formula::letter("p");
        let (f0, g0) = counterexample_pair(0, &p);
        assert_eq!(f0.source().to_string(), "(((p /\\ bot) \\/ top) /\\ bot)");
        assert_eq!(f0.target().to_string(), "(((p \\/ top) /\\ bot) \\/ top)");
        assert_eq!(f0.ty, g0.ty);
        assert_eq!(f0.term, t("((ck1<p,top> /\\ id<bot>) \\/ id<top>) . hk1<(p /\\ bot) \\/ top, bot>"));
        for n in 0..4 {
            let (f, g) = counterexample_pair(n, &p);
            assert_eq!(f.ty, g.ty);
            assert_eq!(f.source(), &bot_tower(&p, n + 1));
            assert_eq!(f.target(), &top_tower(&p, n + 1));
        }
    }
}
