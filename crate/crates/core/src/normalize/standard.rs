use crate::formulas::{Formula, OccPath, Side};
use crate::terms::{to_arrow, typecheck, System, Term, TypeError};

use super::{NormalizeError, RewriteStep, RewriteTrace, TermPath};

/// A single primitive acting at one subformula position, with identities
/// everywhere else.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub source: Formula,
    pub path: OccPath,
    pub prim: Term,
}

impl Factor {
    fn new(source: Formula, path: OccPath, prim: Term) -> Factor {
        Factor { source, path, prim }
    }

    pub fn target(&self) -> Formula {
        let local = self.prim.infer().expect("primitive factors are typed").target;
        self.source.replace_at(&self.path, local).expect("factor path resolves")
    }

    /// Whether the primitive belongs to the hat side (diagonal, projection,
    /// terminal arrow).
    pub fn is_hat(&self) -> bool {
        matches!(self.prim, Term::Hw(_) | Term::Hk(..) | Term::Hkappa(_))
    }

    pub fn to_term(&self) -> Term {
        wrap(&self.source, &self.path.0, self.prim.clone())
    }

    fn at(&self, path: &OccPath) -> Formula {
        self.source.subformula_at(path).expect("factor path resolves").clone()
    }
}

fn wrap(source: &Formula, steps: &[Side], prim: Term) -> Term {
    let Some((first, rest)) = steps.split_first() else {
        return prim;
    };
    let (conn, l, r) = source.as_binary().expect("factor path resolves");
    match first {
        Side::Left => Term::xi(conn, wrap(l, rest, prim), Term::Id(r.clone())),
        Side::Right => Term::xi(conn, Term::Id(l.clone()), wrap(r, rest, prim)),
    }
}

/// Splits an arrow term into single-primitive factors in application order,
/// dropping identities.
pub fn factorize(t: &Term) -> Result<Vec<Factor>, TypeError> {
    t.infer()?;
    fact(t)
}

fn fact(t: &Term) -> Result<Vec<Factor>, TypeError> {
    Ok(match t {
        Term::Id(_) => Vec::new(),
        Term::Hw(_) | Term::Cw(_) | Term::Hk(..) | Term::Ck(..) | Term::Hkappa(_) | Term::Ckappa(_) => {
            vec![Factor::new(t.infer()?.source, OccPath::root(), t.clone())]
        }
        Term::Comp(g, f) => {
            let mut out = fact(f)?;
            out.extend(fact(g)?);
            out
        }
        Term::Conj(f1, f2) | Term::Disj(f1, f2) => {
            let (conn, _, _) = t.infer()?.source.as_binary().map(|(c, l, r)| (c, l.clone(), r.clone())).expect("binary");
            let a2 = f2.infer()?.source;
            let b1 = f1.infer()?.target;
            let lift = |side: Side, sibling: &Formula, x: Factor| {
                let source = match side {
                    Side::Left => Formula::binary(conn, x.source, sibling.clone()),
                    Side::Right => Formula::binary(conn, sibling.clone(), x.source),
                };
                Factor::new(source, OccPath(vec![side]).join(&x.path), x.prim)
            };
            let mut out: Vec<Factor> = fact(f1)?.into_iter().map(|x| lift(Side::Left, &a2, x)).collect();
            out.extend(fact(f2)?.into_iter().map(|x| lift(Side::Right, &b1, x)));
            out
        }
        other => {
            return Err(TypeError::MalformedTerm(format!("{other} is not an arrow term")));
        }
    })
}

/// The pieces `t = check . hat` with the hat part free of codiagonals,
/// injections and initial arrows and the check part free of diagonals,
/// projections and terminal arrows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardForm {
    pub hat: Term,
    pub check: Term,
    pub trace: RewriteTrace,
}

impl StandardForm {
    pub fn composite(&self) -> Term {
        Term::comp(self.check.clone(), self.hat.clone())
    }
}

const SWAP_LIMIT: usize = 200_000;

pub fn standard_form(t: &Term, system: System) -> Result<StandardForm, NormalizeError> {
    let ty = typecheck(t, system)?;
    let arrow = if t.is_arrow() { t.clone() } else { to_arrow(t)? };
    let mut factors = factorize(&arrow)?;
    let mut trace = RewriteTrace::default();
    while let Some(k) = (0..factors.len().saturating_sub(1)).find(|&k| !factors[k].is_hat() && factors[k + 1].is_hat()) {
        let (a, b) = (&factors[k], &factors[k + 1]);
        let (rule, replacement) = exchange(a, b)?;
        trace.steps.push(RewriteStep {
            rule,
            path: TermPath(vec![k]),
            before: Term::comp(b.to_term(), a.to_term()),
            after: Term::compose_chain(replacement.iter().map(Factor::to_term).collect(), a.source.clone()),
        });
        factors.splice(k..k + 2, replacement);
        if trace.len() > SWAP_LIMIT {
            return Err(NormalizeError::BudgetExceeded { budget: SWAP_LIMIT });
        }
    }
    let split = factors.iter().position(|f| !f.is_hat()).unwrap_or(factors.len());
    let hat = Term::compose_chain(compact(&factors[..split]), ty.source.clone());
    let check = Term::compose_chain(compact(&factors[split..]), ty.target.clone());
    Ok(StandardForm { hat, check, trace })
}

fn disjoint(p: &OccPath, q: &OccPath) -> bool {
    !p.is_prefix_of(q) && !q.is_prefix_of(p)
}

/// Rewrites `b . a`, with `a` on the check side and `b` on the hat side, into
/// factors with every hat factor first.
fn exchange(a: &Factor, b: &Factor) -> Result<(&'static str, Vec<Factor>), NormalizeError> {
    let (pa, pb) = (&a.path, &b.path);
    let middle = a.target();
    if matches!(b.prim, Term::Hkappa(_)) && pb.is_prefix_of(pa) {
        let prim = Term::Hkappa(a.at(pb));
        return Ok(("hkappa", vec![Factor::new(a.source.clone(), pb.clone(), prim)]));
    }
    if matches!(a.prim, Term::Ckappa(_)) && pa.is_prefix_of(pb) {
        let prim = Term::Ckappa(b.target().subformula_at(pa).expect("path").clone());
        return Ok(("ckappa", vec![Factor::new(a.source.clone(), pa.clone(), prim)]));
    }
    if disjoint(pa, pb) {
        let b2 = Factor::new(a.source.clone(), pb.clone(), b.prim.clone());
        let a2 = Factor::new(b2.target(), pa.clone(), a.prim.clone());
        return Ok(("swap", vec![b2, a2]));
    }
    if matches!(b.prim, Term::Hw(_)) && pb.is_prefix_of(pa) {
        let r = pb.strip_from(pa).expect("prefix");
        let b2 = Factor::new(a.source.clone(), pb.clone(), Term::Hw(a.at(pb)));
        let a1 = Factor::new(b2.target(), pb.child(Side::Left).join(&r), a.prim.clone());
        let a2 = Factor::new(a1.target(), pb.child(Side::Right).join(&r), a.prim.clone());
        return Ok(("hw-nat", vec![b2, a1, a2]));
    }
    if matches!(a.prim, Term::Cw(_)) && pa.is_prefix_of(pb) {
        let r = pa.strip_from(pb).expect("prefix");
        let merged = b.target().subformula_at(pa).expect("path").clone();
        let b1 = Factor::new(a.source.clone(), pa.child(Side::Left).join(&r), b.prim.clone());
        let b2 = Factor::new(b1.target(), pa.child(Side::Right).join(&r), b.prim.clone());
        let a2 = Factor::new(b2.target(), pa.clone(), Term::Cw(merged));
        return Ok(("cw-nat", vec![b1, b2, a2]));
    }
    if let Term::Hk(i, _, _) = b.prim {
        if pb.is_prefix_of(pa) && pb != pa {
            let rest = pb.strip_from(pa).expect("prefix");
            let (x, r) = (rest.0[0], OccPath(rest.0[1..].to_vec()));
            let here = a.at(pb);
            let (c1, c2) = here.as_conj().expect("projection source is a conjunction");
            let b2 = Factor::new(a.source.clone(), pb.clone(), Term::Hk(i, c1.clone(), c2.clone()));
            if x == i {
                let a2 = Factor::new(b2.target(), pb.join(&r), a.prim.clone());
                return Ok(("hk-nat", vec![b2, a2]));
            }
            return Ok(("hk-nat", vec![b2]));
        }
    }
    if let Term::Ck(i, _, _) = a.prim {
        if pa.is_prefix_of(pb) && pa != pb {
            let rest = pa.strip_from(pb).expect("prefix");
            let (x, r) = (rest.0[0], OccPath(rest.0[1..].to_vec()));
            let sides = |kept: Formula, other: Formula| match i {
                Side::Left => (kept, other),
                Side::Right => (other, kept),
            };
            if x == i {
                let b2 = Factor::new(a.source.clone(), pa.join(&r), b.prim.clone());
                let kept = b2.target().subformula_at(pa).expect("path").clone();
                let other = middle.subformula_at(&pa.child(i.other())).expect("path").clone();
                let (c1, c2) = sides(kept, other);
                let a2 = Factor::new(b2.target(), pa.clone(), Term::Ck(i, c1, c2));
                return Ok(("ck-nat", vec![b2, a2]));
            }
            let kept = a.at(pa);
            let other = b.target().subformula_at(&pa.child(x)).expect("path").clone();
            let (c1, c2) = sides(kept, other);
            return Ok(("ck-nat", vec![Factor::new(a.source.clone(), pa.clone(), Term::Ck(i, c1, c2))]));
        }
    }
    Err(NormalizeError::Inapplicable(format!(
        "no exchange for {} after {}",
        b.to_term(),
        a.to_term()
    )))
}

/// Merges consecutive factors at pairwise disjoint positions into one term.
fn compact(factors: &[Factor]) -> Vec<Term> {
    let mut runs: Vec<Vec<&Factor>> = Vec::new();
    for f in factors {
        match runs.last_mut() {
            Some(run) if run.iter().all(|g| disjoint(&g.path, &f.path)) => run.push(f),
            _ => runs.push(vec![f]),
        }
    }
    runs.into_iter()
        .map(|run| build(&run[0].source, &OccPath::root(), &run))
        .collect()
}

fn build(source: &Formula, at: &OccPath, run: &[&Factor]) -> Term {
    if let Some(f) = run.iter().find(|f| &f.path == at) {
        return f.prim.clone();
    }
    let here = source.subformula_at(at).expect("path").clone();
    if run.iter().any(|f| at.is_prefix_of(&f.path)) {
        let (conn, _, _) = here.as_binary().expect("binary above a factor");
        Term::xi(
            conn,
            build(source, &at.child(Side::Left), run),
            build(source, &at.child(Side::Right), run),
        )
    } else {
        Term::Id(here)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relfun::{image, rel_compose};
    use crate::syntax::parse_term;
    use crate::terms::fragment_of;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn check_form(s: &str) -> StandardForm {
        let term = t(s);
        let sf = standard_form(&term, System::Ltopbot).unwrap();
        assert!(fragment_of(&sf.hat).within_hat(), "{}", sf.hat);
        assert!(fragment_of(&sf.check).within_check(), "{}", sf.check);
        let composite = rel_compose(&image(&sf.hat).unwrap(), &image(&sf.check).unwrap()).unwrap();
        assert_eq!(composite, image(&term).unwrap());
        sf
    }

    #[test]
    fn diagonal_after_codiagonal() {
        let sf = check_form("hw<p> . cw<p>");
        assert_eq!(sf.hat, t("hw<p \\/ p>"));
        assert_eq!(sf.check, t("(cw<p> /\\ cw<p>)"));
        assert_eq!(sf.trace.steps[0].rule, "hw-nat");
    }

    #[test]
    fn already_a_hat_factor() {
        let sf = check_form("hk1<p,q>");
        assert_eq!(sf.hat, t("hk1<p,q>"));
        assert_eq!(sf.check, t("id<p>"));
    }

    #[test]
    fn projection_after_codiagonal_in_context() {
        let sf = check_form("hk1<p,q> . (cw<p> /\\ id<q>)");
        assert_eq!(sf.hat, t("hk1<p \\/ p, q>"));
        assert_eq!(sf.check, t("cw<p>"));
    }

    #[test]
    fn constants_absorb() {
        let sf = check_form("hkap<p \\/ q> . ck1<p,q> . hk1<p,r>");
        assert!(matches!(sf.check, Term::Id(_)));
        check_form("ck2<q,p> . ckap<p> . hk2<q,bot>");
        check_form("(hk2<q,p> \\/ id<r>) . ck1<q /\\ p, r>");
        check_form("hk1<p \\/ q, r> . (ck1<p,q> /\\ id<r>)");
        check_form("hk2<p \\/ q, r> . (ck1<p,q> /\\ id<r>)");
        check_form("(id<p> \\/ hk1<q,q>) . ck2<p, q /\\ q>");
    }
}
