use crate::terms::{typecheck, System, Term, TypeError};

use super::{NormalizeError, RewriteStep, RewriteTrace, TermPath};

/// Step budget for a term of the given size: the cube of its node count.
pub fn step_budget(t: &Term) -> usize {
    t.size().pow(3).max(8)
}

/// Removes every composition. Arrow primitives are first replaced by their
/// Gentzen definitions; then the leftmost innermost composition is reduced
/// until none is left.
pub fn eliminate_composition(t: &Term, system: System) -> Result<(Term, RewriteTrace), NormalizeError> {
    typecheck(t, system)?;
    let budget = step_budget(t);
    let mut trace = RewriteTrace::default();
    let mut current = t.clone();
    let mut record = |current: &mut Term, rule, path: Vec<usize>, after: Term| -> Result<(), NormalizeError> {
        let before = current.subterm_at(&path).cloned().expect("path found by search");
        *current = current.replace_at(&path, after.clone()).expect("path found by search");
        trace.steps.push(RewriteStep {
            rule,
            path: TermPath(path),
            before,
            after,
        });
        if trace.steps.len() > budget {
            return Err(NormalizeError::BudgetExceeded { budget });
        }
        Ok(())
    };
    while let Some(path) = find(&current, &is_arrow_primitive) {
        let node = current.subterm_at(&path).expect("path found by search");
        let after = primitive_definition(node);
        record(&mut current, "dn", path, after)?;
    }
    while let Some(path) = find_cut(&current) {
        let node = current.subterm_at(&path).expect("path found by search");
        let (rule, after) = reduce_cut(node)?;
        record(&mut current, rule, path, after)?;
    }
    Ok((current, trace))
}

fn is_arrow_primitive(t: &Term) -> bool {
    matches!(t, Term::Hw(_) | Term::Cw(_) | Term::Hk(..) | Term::Ck(..))
}

fn primitive_definition(t: &Term) -> Term {
    match t {
        Term::Hw(a) => Term::pair(Term::Id(a.clone()), Term::Id(a.clone())),
        Term::Cw(a) => Term::copair(Term::Id(a.clone()), Term::Id(a.clone())),
        Term::Hk(i, a1, a2) => Term::hproj(*i, i.pick(a2, a1).clone(), Term::Id(i.pick(a1, a2).clone())),
        Term::Ck(i, a1, a2) => Term::cinj(*i, i.pick(a2, a1).clone(), Term::Id(i.pick(a1, a2).clone())),
        other => other.clone(),
    }
}

fn find(t: &Term, pred: &dyn Fn(&Term) -> bool) -> Option<Vec<usize>> {
    if pred(t) {
        return Some(Vec::new());
    }
    for (i, c) in t.children().into_iter().enumerate() {
        if let Some(mut rest) = find(c, pred) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

/// Leftmost composition whose two sides are composition-free.
fn find_cut(t: &Term) -> Option<Vec<usize>> {
    for (i, c) in t.children().into_iter().enumerate() {
        if c.has_composition() {
            let mut rest = find_cut(c)?;
            rest.insert(0, i);
            return Some(rest);
        }
    }
    matches!(t, Term::Comp(..)).then(Vec::new)
}

fn reduce_cut(node: &Term) -> Result<(&'static str, Term), NormalizeError> {
    let Term::Comp(g, f) = node else {
        return Err(TypeError::MalformedTerm(format!("{node} is not a composition")).into());
    };
    let (g, f) = (&**g, &**f);
    let c = |x: &Term, y: &Term| Term::comp(x.clone(), y.clone());
    Ok(match (g, f) {
        (g, Term::Id(_)) => ("cat1", g.clone()),
        (Term::Id(_), f) => ("cat1", f.clone()),
        (Term::Hkappa(_), f) => ("hkappa", Term::Hkappa(f.infer()?.source)),
        (g, Term::Ckappa(_)) => ("ckappa", Term::Ckappa(g.infer()?.target)),
        (g, Term::HProj(i, o, f1)) => ("HK1", Term::hproj(*i, o.clone(), c(g, f1))),
        (Term::Pair(g1, g2), f) => ("HK3", Term::pair(c(g1, f), c(g2, f))),
        (Term::CInj(i, o, g1), f) => ("CK1", Term::cinj(*i, o.clone(), c(g1, f))),
        (g, Term::Copair(f1, f2)) => ("CK3", Term::copair(c(g, f1), c(g, f2))),
        (Term::HProj(i, _, g1), Term::Pair(f1, f2)) => ("HK2", c(g1, i.pick(f1, f2))),
        (Term::Conj(g1, g2), Term::Pair(f1, f2)) => ("conj-pair", Term::pair(c(g1, f1), c(g2, f2))),
        (Term::Copair(g1, g2), Term::CInj(i, _, f1)) => ("CK2", c(i.pick(g1, g2), f1)),
        (Term::Disj(g1, g2), Term::CInj(i, _, f1)) => {
            let other = i.pick(g2, g1).infer()?.target;
            ("disj-inj", Term::cinj(*i, other, c(i.pick(g1, g2), f1)))
        }
        (Term::Conj(g1, g2), Term::Conj(f1, f2)) => ("xi2", Term::conj(c(g1, f1), c(g2, f2))),
        (Term::HProj(i, _, g1), Term::Conj(f1, f2)) => {
            let other = i.pick(f2, f1).infer()?.source;
            ("hk-nat", Term::hproj(*i, other, c(g1, i.pick(f1, f2))))
        }
        (Term::Disj(g1, g2), Term::Disj(f1, f2)) => ("xi2", Term::disj(c(g1, f1), c(g2, f2))),
        (Term::Copair(g1, g2), Term::Disj(f1, f2)) => ("disj-copair", Term::copair(c(g1, f1), c(g2, f2))),
        _ => {
            return Err(TypeError::MalformedTerm(format!("no reduction for the composition {node}")).into());
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relfun::image;
    use crate::syntax::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn elim(s: &str, system: System) -> Term {
        eliminate_composition(&t(s), system).unwrap().0
    }

    #[test]
    fn worked_cut_examples() {
        assert_eq!(elim("HK1<p>(id<p>) . pair(id<p>, id<p>)", System::L), t("id<p>"));
        assert_eq!(elim("HK2<p>(id<q>) . id<p /\\ q>", System::L), t("HK2<p>(id<q>)"));
        assert_eq!(elim("copair(id<p>, id<p>) . CK1<p>(id<p>)", System::L), t("id<p>"));
        assert_eq!(elim("hkap<top> . ckap<top>", System::Ltopbot), t("hkap<bot>"));
        assert!(image(&t("hkap<top> . ckap<top>")).unwrap().is_empty());
    }

    #[test]
    fn arrow_input_is_expanded_then_reduced() {
        let (out, trace) = eliminate_composition(&t("hk1<p,p> . hw<p>"), System::L).unwrap();
        assert_eq!(out, t("id<p>"));
        assert_eq!(trace.steps[0].rule, "dn");
        assert_eq!(trace.replay(&t("hk1<p,p> . hw<p>")), Some(out));
    }

    #[test]
    fn functorial_nodes_are_reduced() {
        let s = "HK1<q>(hk1<p,p>) . (pair(id<p>, id<p>) /\\ id<q>)";
        let out = elim(s, System::L);
        assert!(!out.has_composition());
        assert_eq!(image(&out).unwrap(), image(&t(s)).unwrap());
    }

    #[test]
    fn trace_lines_render() {
        let (_, trace) = eliminate_composition(&t("id<p> . id<p>"), System::L).unwrap();
        assert_eq!(trace.to_string(), "cat1 @ root: id<p> . id<p> => id<p>\n");
    }
}
