use crate::formulas::{Formula, Side};
use crate::relfun::image;
use crate::terms::{dualize_term, typecheck, System, Term};

use super::{eliminate_composition, NormalizeError};

/// For `f: A1 /\ A2 |- B` whose relation only uses source occurrences inside
/// `Ai`, finds `f'` with `f = HK<i>(f')`.
pub fn invert_conj(f: &Term, side: Side, system: System) -> Result<Term, NormalizeError> {
    let ty = typecheck(f, system)?;
    let Some((a1, a2)) = ty.source.as_conj() else {
        return Err(NormalizeError::Inapplicable(format!("source {} is not a conjunction", ty.source)));
    };
    let relation = image(f)?;
    let n1 = a1.occ_count();
    let inside = |x: usize| match side {
        Side::Left => x <= n1,
        Side::Right => x > n1,
    };
    if let Some((x, _)) = relation.pairs.iter().find(|(x, _)| !inside(*x)) {
        return Err(NormalizeError::Inapplicable(format!(
            "source occurrence {x} lies outside conjunct {}",
            side.index()
        )));
    }
    let kept = side.pick(a1, a2).clone();
    let other = side.pick(a2, a1).clone();
    let (free, _) = eliminate_composition(f, system)?;
    let out = strip(&free, side, &kept, system)?;
    let check = Term::hproj(side, other, out.clone());
    if image(&check)? != relation {
        return Err(NormalizeError::Inapplicable("inversion changed the relation".into()));
    }
    Ok(out)
}

fn strip(t: &Term, side: Side, kept: &Formula, system: System) -> Result<Term, NormalizeError> {
    let rec = |x: &Term| strip(x, side, kept, system);
    match t {
        Term::HProj(j, _, g) if *j == side => Ok((**g).clone()),
        Term::HProj(_, _, g) => {
            if g.infer()?.target == Formula::Top && system.allows_top() {
                Ok(Term::Hkappa(kept.clone()))
            } else {
                Err(NormalizeError::Inapplicable(format!("{t} projects onto the other conjunct")))
            }
        }
        Term::Pair(f1, f2) => Ok(Term::pair(rec(f1)?, rec(f2)?)),
        Term::CInj(j, o, g) => Ok(Term::cinj(*j, o.clone(), rec(g)?)),
        Term::Hkappa(_) => Ok(Term::Hkappa(kept.clone())),
        Term::Id(a) => {
            let (a1, a2) = a.as_conj().expect("source is a conjunction");
            rec(&Term::pair(
                Term::hproj(Side::Left, a2.clone(), Term::Id(a1.clone())),
                Term::hproj(Side::Right, a1.clone(), Term::Id(a2.clone())),
            ))
        }
        Term::Conj(f1, f2) => {
            let a1 = f1.infer()?.source;
            let a2 = f2.infer()?.source;
            rec(&Term::pair(
                Term::hproj(Side::Left, a2, (**f1).clone()),
                Term::hproj(Side::Right, a1, (**f2).clone()),
            ))
        }
        other => Err(NormalizeError::Inapplicable(format!("unexpected subterm {other}"))),
    }
}

/// Dual of [`invert_conj`]: for `f: A |- B1 \/ B2` whose relation only uses
/// target occurrences inside `Bi`, finds `f'` with `f = CK<i>(f')`.
pub fn invert_disj(f: &Term, side: Side, system: System) -> Result<Term, NormalizeError> {
    typecheck(f, system)?;
    let dual = invert_conj(&dualize_term(f), side, system.dual())?;
    Ok(dualize_term(&dual))
}

/// For `f: A |- B1 \/ B2` with a nonempty relation, no disjunction in `A` and
/// every target occurrence inside `B1`, finds `g: A |- B1` whose left
/// injection has the same relation as `f`.
pub fn lemma3_factor(f: &Term, system: System) -> Result<Term, NormalizeError> {
    let ty = typecheck(f, system)?;
    let Some((b1, b2)) = ty.target.as_disj() else {
        return Err(NormalizeError::Inapplicable(format!("target {} is not a disjunction", ty.target)));
    };
    if ty.source.contains_disj() {
        return Err(NormalizeError::Inapplicable(format!("source {} contains a disjunction", ty.source)));
    }
    let relation = image(f)?;
    if relation.is_empty() {
        return Err(NormalizeError::Inapplicable("the relation is empty".into()));
    }
    if relation.pairs.iter().any(|&(_, y)| y > b1.occ_count()) {
        return Err(NormalizeError::Inapplicable("a target occurrence lies in the right disjunct".into()));
    }
    let (free, _) = eliminate_composition(f, system)?;
    let out = peel(&free)?;
    if image(&Term::cinj(Side::Left, b2.clone(), out.clone()))? != relation {
        return Err(NormalizeError::Inapplicable("factorization changed the relation".into()));
    }
    Ok(out)
}

fn peel(t: &Term) -> Result<Term, NormalizeError> {
    match t {
        Term::CInj(Side::Left, _, g) => Ok((**g).clone()),
        Term::HProj(i, o, g) => Ok(Term::hproj(*i, o.clone(), peel(g)?)),
        other => Err(NormalizeError::Inapplicable(format!("unexpected subterm {other}"))),
    }
}
