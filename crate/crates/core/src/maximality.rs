//! Collapse witnesses: given two terms of the same type with different
//! occurrence relations, contexts around them that reduce the equation
//! between them to one of a handful of small equations.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::formulas::{Connective, Formula, Letter, Side};
use crate::relfun::{image, OccurrenceRelation, RelError};
use crate::terms::{dualize_term, typecheck, System, Term, TermType, TypeError};

/// The small equation a collapse witness derives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CollapseEquation {
    /// Both projections out of `p /\ p` coincide.
    HatHat,
    /// Both injections into `p \/ p` coincide.
    CheckCheck,
    /// `ck1 . hk1` and `ck2 . 0 . hk2` coincide at `p /\ bot |- p \/ top`.
    HatCheck,
    /// `hk1<p,bot> = ckap<p> . hk2<p,bot>`.
    HatKappaCheck,
    /// `ck1<p,top> = ck2<p,top> . hkap<p>`.
    CheckKappaHat,
}

impl CollapseEquation {
    pub fn name(self) -> &'static str {
        match self {
            CollapseEquation::HatHat => "hk-hk",
            CollapseEquation::CheckCheck => "ck-ck",
            CollapseEquation::HatCheck => "hk-ck",
            CollapseEquation::HatKappaCheck => "hk-ckappa",
            CollapseEquation::CheckKappaHat => "ck-hkappa",
        }
    }

    /// Both sides of the equation, instantiated at `letter`.
    pub fn sides(self, letter: &Letter) -> (Term, Term) {
        let p = Formula::Letter(letter.clone());
        let (top, bot) = (Formula::Top, Formula::Bot);
        match self {
            CollapseEquation::HatHat => (Term::Hk(Side::Left, p.clone(), p.clone()), Term::Hk(Side::Right, p.clone(), p)),
            CollapseEquation::CheckCheck => {
                (Term::Ck(Side::Left, p.clone(), p.clone()), Term::Ck(Side::Right, p.clone(), p))
            }
            CollapseEquation::HatCheck => (
                Term::comp(Term::Ck(Side::Left, p.clone(), top.clone()), Term::Hk(Side::Left, p.clone(), bot.clone())),
                Term::compose_chain(
                    vec![
                        Term::Hk(Side::Right, p.clone(), bot.clone()),
                        Term::Hkappa(bot.clone()),
                        Term::Ck(Side::Right, p.clone(), top),
                    ],
                    p,
                ),
            ),
            CollapseEquation::HatKappaCheck => (
                Term::Hk(Side::Left, p.clone(), bot.clone()),
                Term::comp(Term::Ckappa(p.clone()), Term::Hk(Side::Right, p, bot)),
            ),
            CollapseEquation::CheckKappaHat => (
                Term::Ck(Side::Left, p.clone(), top.clone()),
                Term::comp(Term::Ck(Side::Right, p.clone(), top), Term::Hkappa(p)),
            ),
        }
    }
}

impl fmt::Display for CollapseEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = self.sides(&Letter::new("p"));
        write!(f, "{} = {}", l, r)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollapseWitness {
    pub equation: CollapseEquation,
    /// The letter the derived equation is stated for.
    pub letter: Letter,
    /// Type of the two input terms.
    pub ty: TermType,
    /// Occurrence pair in the first relation but not the second.
    pub separating_pair: (usize, usize),
    /// True when the pair was found in the second term's relation, so the
    /// composites list the second input first.
    pub swapped: bool,
    pub pre_context: Term,
    pub post_context: Term,
    pub composites: (Term, Term),
    pub check_images: (OccurrenceRelation, OccurrenceRelation),
    /// Named building blocks of the contexts.
    pub parts: Vec<(&'static str, Term)>,
}

impl CollapseWitness {
    pub fn to_json(&self) -> Value {
        let parts: serde_json::Map<String, Value> = self
            .parts
            .iter()
            .map(|(name, t)| (name.to_string(), Value::String(t.to_string())))
            .collect();
        json!({
            "equation": self.equation.name(),
            "statement": self.equation.to_string(),
            "separating_pair": [self.separating_pair.0, self.separating_pair.1],
            "swapped": self.swapped,
            "pre_context": self.pre_context.to_string(),
            "post_context": self.post_context.to_string(),
            "composites": [self.composites.0.to_string(), self.composites.1.to_string()],
            "images": [self.check_images.0.to_json(), self.check_images.1.to_json()],
            "parts": parts,
            "consequences": derived_consequences(self)
                .into_iter()
                .map(|c| json!({"name": c.name, "statement": c.statement}))
                .collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaximalityError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Relation(#[from] RelError),
    #[error("the terms have different types: {left} and {right}")]
    TypeMismatch { left: TermType, right: TermType },
    #[error("the occurrence relations coincide, so there is nothing to collapse")]
    SameImage,
    #[error("the type mentions more than one letter ({0}); substitute a single letter first")]
    NotMonoletter(String),
    #[error("a construction step broke its invariant: {0}")]
    InvariantFailed(String),
}

/// Replaces every letter by `p`.
pub fn monoletter(t: &Term) -> Term {
    let p = Formula::letter("p");
    t.map_formulas(&|a: &Formula| a.map_letters(&mut |_| p.clone()))
}

struct Prepared {
    ty: TermType,
    first: Term,
    second: Term,
    pair: (usize, usize),
    swapped: bool,
}

fn prepare(f1: &Term, f2: &Term, system: System) -> Result<Prepared, MaximalityError> {
    let t1 = typecheck(f1, system)?;
    let t2 = typecheck(f2, system)?;
    if t1 != t2 {
        return Err(MaximalityError::TypeMismatch { left: t1, right: t2 });
    }
    let (r1, r2) = (image(f1)?, image(f2)?);
    let (pair, swapped) = match r1.pairs.difference(&r2.pairs).next() {
        Some(&p) => (p, false),
        None => (*r2.pairs.difference(&r1.pairs).next().ok_or(MaximalityError::SameImage)?, true),
    };
    let (first, second) = if swapped { (f2, f1) } else { (f1, f2) };
    Ok(Prepared {
        ty: t1,
        first: first.clone(),
        second: second.clone(),
        pair,
        swapped,
    })
}

fn finish(
    prep: Prepared,
    equation: CollapseEquation,
    letter: Letter,
    pre: Term,
    post: Term,
    parts: Vec<(&'static str, Term)>,
) -> Result<CollapseWitness, MaximalityError> {
    let t1 = Term::compose_chain(vec![pre.clone(), prep.first.clone(), post.clone()], prep.ty.source.clone());
    let t2 = Term::compose_chain(vec![pre.clone(), prep.second.clone(), post.clone()], prep.ty.source.clone());
    let (g1, g2) = (image(&t1)?, image(&t2)?);
    let (s1, s2) = equation.sides(&letter);
    if g1 != image(&s1)? || g2 != image(&s2)? {
        return Err(MaximalityError::InvariantFailed(format!(
            "composites have images {g1} and {g2}, expected those of {s1} and {s2}"
        )));
    }
    Ok(CollapseWitness {
        equation,
        letter,
        ty: prep.ty,
        separating_pair: prep.pair,
        swapped: prep.swapped,
        pre_context: pre,
        post_context: post,
        composites: (t1, t2),
        check_images: (g1, g2),
        parts,
    })
}

fn letter_path(a: &Formula, index: usize) -> Vec<Side> {
    a.path_of_occurrence(index).expect("related occurrences exist").0
}

/// `p |- C` for a constant-free formula over `p`, copying `p` into every
/// conjunct and the left disjunct.
pub fn spread(c: &Formula) -> Term {
    match c {
        Formula::Conj(l, r) => Term::comp(Term::conj(spread(l), spread(r)), Term::Hw(single_letter(c))),
        Formula::Disj(l, r) => Term::comp(Term::Ck(Side::Left, (**l).clone(), (**r).clone()), spread(l)),
        leaf => Term::Id(leaf.clone()),
    }
}

/// The mirror image of [`spread`]: `C |- p`, merging every disjunct.
pub fn gather(c: &Formula) -> Term {
    dualize_term(&spread(&c.dual()))
}

fn single_letter(c: &Formula) -> Formula {
    Formula::Letter(c.letters().into_iter().next().expect("formula mentions a letter"))
}

/// `p /\ p |- C`: the first conjunct goes to the occurrence at `path`, the
/// second feeds every other surviving occurrence.
fn select_source(c: &Formula, path: &[Side], p: &Formula) -> Term {
    let Some((&side, rest)) = path.split_first() else {
        return Term::Hk(Side::Left, p.clone(), p.clone());
    };
    let (conn, l, r) = c.as_binary().expect("path stays inside the formula");
    let (on, off) = side.pick((l, r), (r, l));
    let chosen = select_source(on, rest, p);
    match conn {
        Connective::Conj => {
            let rest_of = Term::comp(spread(off), Term::Hk(Side::Right, p.clone(), p.clone()));
            let (a, b) = side.pick((chosen.clone(), rest_of.clone()), (rest_of, chosen));
            Term::pair(a, b)
        }
        Connective::Disj => Term::comp(Term::Ck(side, l.clone(), r.clone()), chosen),
    }
}

/// The mirror image of [`select_source`]: `C |- p \/ p`.
fn select_target(c: &Formula, path: &[Side], p: &Formula) -> Term {
    dualize_term(&select_source(&c.dual(), path, &p.dual()))
}

/// Collapse witness for two lattice terms over a single letter.
pub fn collapse_witness_l(f1: &Term, f2: &Term) -> Result<CollapseWitness, MaximalityError> {
    let ty = typecheck(f1, System::L)?;
    let mut letters = ty.source.letters();
    letters.extend(ty.target.letters());
    letters.sort();
    letters.dedup();
    if letters.len() != 1 {
        let names: Vec<&str> = letters.iter().map(|l| l.as_str()).collect();
        return Err(MaximalityError::NotMonoletter(names.join(", ")));
    }
    let prep = prepare(f1, f2, System::L)?;
    let letter = letters[0].clone();
    let p = Formula::Letter(letter.clone());
    let (a, b) = (&prep.ty.source, &prep.ty.target);
    let (x, y) = prep.pair;
    let mut pre = if a.occ_count() == 1 {
        Term::Id(p.clone())
    } else {
        select_source(a, &letter_path(a, x), &p)
    };
    let mut post = if b.occ_count() == 1 {
        Term::Id(p.clone())
    } else {
        select_target(b, &letter_path(b, y), &p)
    };
    let parts = vec![("source_selector", pre.clone()), ("target_selector", post.clone())];
    let second = image(&Term::compose_chain(vec![pre.clone(), prep.second.clone(), post.clone()], a.clone()))?;
    let single = second.pairs.iter().next().copied();
    if second.pairs.len() != 1 {
        return Err(MaximalityError::InvariantFailed(format!("expected a singleton image, found {second}")));
    }
    let equation = match (a.occ_count() == 1, b.occ_count() == 1, single) {
        (false, true, _) => CollapseEquation::HatHat,
        (true, false, _) => CollapseEquation::CheckCheck,
        (false, false, Some((2, _))) => {
            post = Term::comp(Term::Cw(p.clone()), post);
            CollapseEquation::HatHat
        }
        (false, false, _) => {
            pre = Term::comp(pre, Term::Hw(p.clone()));
            CollapseEquation::CheckCheck
        }
        (true, true, _) => {
            return Err(MaximalityError::InvariantFailed(
                "an arrow from a letter to itself cannot have two images".into(),
            ))
        }
    };
    finish(prep, equation, letter, pre, post, parts)
}

/// Pieces of a source-side reduction.
struct Reduction {
    /// The reduced formula.
    reduced: Formula,
    /// Arrow from the reduced formula back to the original one.
    back: Term,
    /// Isomorphism from the core (`p /\ bot`, or `p` when refined) onto the
    /// reduced formula.
    embed: Term,
    /// Its inverse.
    retract: Term,
}

/// `C |- bot` for a formula built from bot alone.
fn to_bot(c: &Formula) -> Term {
    match c {
        Formula::Conj(l, r) => Term::hproj(Side::Left, (**r).clone(), to_bot(l)),
        Formula::Disj(l, r) => Term::copair(to_bot(l), to_bot(r)),
        other => Term::Id(other.clone()),
    }
}

/// `top |- C` for a letterless formula that evaluates to top.
fn from_top(c: &Formula) -> Term {
    match c {
        Formula::Conj(l, r) => Term::pair(from_top(l), from_top(r)),
        Formula::Disj(l, r) => {
            let side = if l.eval_letterless() == Ok(crate::formulas::Constant::Top) {
                Side::Left
            } else {
                Side::Right
            };
            Term::cinj(side, side.pick(r, l).as_ref().clone(), from_top(side.pick(l, r)))
        }
        other => Term::Id(other.clone()),
    }
}

/// Replaces every leaf of `c` by bot, except that top leaves are kept when
/// `keep_top`; returns the new formula and the arrow back to `c`.
fn flatten_off_path(c: &Formula, keep_top: bool) -> (Formula, Term) {
    match c {
        Formula::Bot => (Formula::Bot, Term::Id(Formula::Bot)),
        Formula::Top if keep_top => (Formula::Top, Term::Id(Formula::Top)),
        Formula::Top | Formula::Letter(_) => (Formula::Bot, Term::Ckappa(c.clone())),
        Formula::Conj(l, r) | Formula::Disj(l, r) => {
            let conn = if matches!(c, Formula::Conj(..)) { Connective::Conj } else { Connective::Disj };
            let (fl, bl) = flatten_off_path(l, keep_top);
            let (fr, br) = flatten_off_path(r, keep_top);
            (Formula::binary(conn, fl, fr), Term::xi(conn, bl, br))
        }
    }
}

/// Reduces `c` around the letter occurrence at `path`. Unrefined, the
/// occurrence becomes `p /\ bot` and every other leaf bot. Refined, the
/// occurrence stays `p` and top leaves beside a conjunction on the path are
/// kept, which succeeds when the result is isomorphic to `p`.
fn reduce_source(c: &Formula, path: &[Side], p: &Formula, refined: bool) -> Option<Reduction> {
    let core = if refined {
        p.clone()
    } else {
        Formula::conj(p.clone(), Formula::Bot)
    };
    let Some((&side, rest)) = path.split_first() else {
        let back = if refined {
            Term::Id(p.clone())
        } else {
            Term::Hk(Side::Left, p.clone(), Formula::Bot)
        };
        return Some(Reduction {
            reduced: core.clone(),
            back,
            embed: Term::Id(core.clone()),
            retract: Term::Id(core),
        });
    };
    let (conn, l, r) = c.as_binary()?;
    let (on, off) = side.pick((l, r), (r, l));
    let inner = reduce_source(on, rest, p, refined)?;
    let keep_top = refined && conn == Connective::Conj;
    let (off_reduced, off_back) = flatten_off_path(off, keep_top);
    let arrange = |a: Term, b: Term| side.pick((a.clone(), b.clone()), (b, a));
    let (lb, rb) = arrange(inner.back, off_back);
    let (lf, rf) = side.pick(
        (inner.reduced.clone(), off_reduced.clone()),
        (off_reduced.clone(), inner.reduced.clone()),
    );
    let reduced = Formula::binary(conn, lf, rf);
    let back = Term::xi(conn, lb, rb);
    let (embed, retract) = match conn {
        Connective::Conj => {
            let filler = if refined {
                if off_reduced.eval_letterless().ok()? != crate::formulas::Constant::Top {
                    return None;
                }
                Term::comp(from_top(&off_reduced), Term::Hkappa(core.clone()))
            } else {
                Term::comp(Term::Ckappa(off_reduced.clone()), Term::Hk(Side::Right, p.clone(), Formula::Bot))
            };
            let (a, b) = arrange(inner.embed, filler);
            (Term::pair(a, b), Term::hproj(side, off_reduced, inner.retract))
        }
        Connective::Disj => {
            let filler = Term::comp(Term::Ckappa(core.clone()), to_bot(&off_reduced));
            let (a, b) = arrange(inner.retract, filler);
            (Term::cinj(side, off_reduced, inner.embed), Term::copair(a, b))
        }
    };
    Some(Reduction {
        reduced,
        back,
        embed,
        retract,
    })
}

/// Collapse witness for two dicartesian terms. With `refine`, tries to reduce
/// one endpoint to something isomorphic to the letter itself, which yields a
/// stronger equation.
pub fn collapse_witness_dicart(f1: &Term, f2: &Term, refine: bool) -> Result<CollapseWitness, MaximalityError> {
    let prep = prepare(f1, f2, System::Ltopbot)?;
    let (a, b) = (prep.ty.source.clone(), prep.ty.target.clone());
    let (x, y) = prep.pair;
    let letter = a.letter_at(x).expect("related occurrences exist");
    let p = Formula::Letter(letter.clone());
    let (xp, yp) = (letter_path(&a, x), letter_path(&b, y));
    let source = |refined| reduce_source(&a, &xp, &p, refined);
    let target = |refined| reduce_source(&b.dual(), &yp, &p, refined);
    let (src, tgt, equation) = match (refine, source(true), target(true)) {
        (true, Some(s), _) => (s, target(false), CollapseEquation::CheckKappaHat),
        (true, None, Some(t)) => (source(false).expect("unrefined reduction always exists"), Some(t), CollapseEquation::HatKappaCheck),
        _ => (source(false).expect("unrefined reduction always exists"), target(false), CollapseEquation::HatCheck),
    };
    let tgt = tgt.expect("unrefined reduction always exists");
    let target_back = dualize_term(&tgt.back);
    let target_embed = dualize_term(&tgt.embed);
    let target_retract = dualize_term(&tgt.retract);
    let pre = Term::comp(src.back.clone(), src.embed.clone());
    let post = Term::comp(target_embed.clone(), target_back.clone());
    let parts = vec![
        ("reduced_source", Term::Id(src.reduced.clone())),
        ("reduced_target", Term::Id(tgt.reduced.dual())),
        ("h_source", src.back),
        ("h_target", target_back),
        ("j_source", src.embed),
        ("j_target", target_embed),
        ("j_source_inverse", src.retract),
        ("j_target_inverse", target_retract),
    ];
    finish(prep, equation, letter, pre, post, parts)
}

/// An equation schema that holds in every category satisfying a witness's
/// derived equation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Consequence {
    pub name: &'static str,
    pub statement: String,
}

pub fn derived_consequences(w: &CollapseWitness) -> Vec<Consequence> {
    let (a, b) = (&w.ty.source, &w.ty.target);
    let preorder = Consequence {
        name: "preorder",
        statement: "any two arrows with the same source and target are equal".into(),
    };
    let contextual = Consequence {
        name: "hk-ck-fg",
        statement: format!(
            "ck1<{b}, top> . f . hk1<{a}, bot> = ck1<{b}, top> . g . hk1<{a}, bot> for all f, g : {a} |- {b}"
        ),
    };
    match w.equation {
        CollapseEquation::HatHat | CollapseEquation::CheckCheck => vec![preorder],
        CollapseEquation::HatCheck => vec![contextual],
        CollapseEquation::HatKappaCheck => vec![
            contextual,
            Consequence {
                name: "hk-fg",
                statement: format!("f . hk1<{a}, bot> = g . hk1<{a}, bot> for all f, g : {a} |- {b}"),
            },
        ],
        CollapseEquation::CheckKappaHat => vec![
            contextual,
            Consequence {
                name: "ck-fg",
                statement: format!("ck1<{b}, top> . f = ck1<{b}, top> . g for all f, g : {a} |- {b}"),
            },
        ],
    }
}

/// Both sides of the contextual equation for `f, g : a |- b`.
pub fn contextual_sides(f: &Term, g: &Term) -> Result<(Term, Term), TypeError> {
    let ty = f.infer()?;
    let wrap = |t: &Term| {
        Term::compose_chain(
            vec![
                Term::Hk(Side::Left, ty.source.clone(), Formula::Bot),
                t.clone(),
                Term::Ck(Side::Left, ty.target.clone(), Formula::Top),
            ],
            Formula::conj(ty.source.clone(), Formula::Bot),
        )
    };
    Ok((wrap(f), wrap(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::decide;
    use crate::relfun::g_of;
    use crate::syntax::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn monoletter_examples() {
        assert_eq!(monoletter(&t("hk1<q,r>")), t("hk1<p,p>"));
        assert_eq!(monoletter(&t("id<p>")), t("id<p>"));
        let hw = t("hw<q \\/ r>");
        assert_eq!(monoletter(&hw), t("hw<p \\/ p>"));
        assert_eq!(image(&monoletter(&hw)).unwrap().pairs, image(&hw).unwrap().pairs);
    }

    #[test]
    fn projections_are_already_final() {
        let w = collapse_witness_l(&t("hk1<p,p>"), &t("hk2<p,p>")).unwrap();
        assert_eq!(w.equation, CollapseEquation::HatHat);
        assert_eq!(w.check_images.0.pairs.iter().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(w.check_images.1.pairs.iter().copied().collect::<Vec<_>>(), vec![(2, 1)]);
        let w = collapse_witness_l(&t("ck1<p,p>"), &t("ck2<p,p>")).unwrap();
        assert_eq!(w.equation, CollapseEquation::CheckCheck);
    }

    #[test]
    fn twist_against_identity() {
        let w = collapse_witness_l(&t("pair(hk2<p,p>, hk1<p,p>)"), &t("id<p /\\ p>")).unwrap();
        assert_eq!(w.equation, CollapseEquation::HatHat);
        assert!(!w.swapped);
        assert_eq!(w.separating_pair, (1, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(collapse_witness_l(&t("id<p>"), &t("id<p>")), Err(MaximalityError::SameImage));
        assert!(matches!(
            collapse_witness_l(&t("hk1<p,q>"), &t("hk1<p,q>")),
            Err(MaximalityError::NotMonoletter(_))
        ));
        assert_eq!(
            collapse_witness_dicart(&t("id<p \\/ top>"), &t("id<p \\/ top>"), false),
            Err(MaximalityError::SameImage)
        );
    }

    #[test]
    fn dicartesian_example() {
        let (f1, f2) = (t("hk1<p,bot>"), t("ckap<p> . hk2<p,bot>"));
        let w = collapse_witness_dicart(&f1, &f2, false).unwrap();
        assert_eq!(w.equation, CollapseEquation::HatCheck);
        let part = |name| w.parts.iter().find(|(n, _)| *n == name).unwrap().1.clone();
        assert_eq!(part("h_source"), t("(hk1<p,bot> /\\ id<bot>)"));
        assert_eq!(part("h_target"), t("ck1<p,top>"));
        assert!(w.check_images.1.is_empty());
        let src = g_of(&part("j_source"), System::Ltopbot).unwrap();
        assert_eq!(src.pairs.iter().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        let w = collapse_witness_dicart(&f1, &f2, true).unwrap();
        assert_eq!(w.equation, CollapseEquation::HatKappaCheck);
    }

    #[test]
    fn isomorphisms_compose_to_identities() {
        let w = collapse_witness_dicart(
            &t("hk1<(p \\/ q) /\\ r, (p \\/ q) /\\ r>"),
            &t("hk2<(p \\/ q) /\\ r, (p \\/ q) /\\ r>"),
            false,
        );
        let w = w.unwrap();
        let part = |name| w.parts.iter().find(|(n, _)| *n == name).unwrap().1.clone();
        for (j, inv) in [("j_source", "j_source_inverse"), ("j_target", "j_target_inverse")] {
            let (j, inv) = (part(j), part(inv));
            for round in [Term::comp(inv.clone(), j.clone()), Term::comp(j.clone(), inv.clone())] {
                let ty = typecheck(&round, System::Ltopbot).unwrap();
                let v = decide(&round, &Term::Id(ty.source.clone()), System::Ltopbot).unwrap();
                assert!(v.is_equal(), "{round}: {v}");
            }
        }
    }

    #[test]
    fn consequences() {
        let w = collapse_witness_l(&t("hk1<p,p>"), &t("hk2<p,p>")).unwrap();
        assert_eq!(derived_consequences(&w)[0].name, "preorder");
        let w = collapse_witness_dicart(&t("hk1<p,bot>"), &t("ckap<p> . hk2<p,bot>"), false).unwrap();
        let c = derived_consequences(&w);
        assert_eq!(c[0].name, "hk-ck-fg");
        assert!(c[0].statement.contains("hk1<(p /\\ bot), bot>"), "{}", c[0].statement);
    }
}
