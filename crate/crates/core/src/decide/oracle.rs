//! Breadth-first search over single equational rewrites. It uses none of the
//! occurrence-relation machinery, so it can check the deciders independently.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::formulas::{Formula, Side};
use crate::terms::{typecheck, System, Term, TermType};

use super::DecideError;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest term (in nodes) the search may visit. `None` means three times
    /// the larger input.
    pub size_cap: Option<usize>,
    /// Total number of distinct terms the search may hold before giving up.
    pub max_visited: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            size_cap: None,
            max_visited: 4_000_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleResult {
    /// A chain of this many rewrites joins the two terms.
    ConnectedWithin(usize),
    /// The searched neighbourhoods are disjoint up to this depth.
    NotConnectedWithin(usize),
    /// The visited budget ran out before either outcome was established.
    CapExceeded { visited: usize },
}

impl OracleResult {
    pub fn is_connected(self) -> bool {
        matches!(self, OracleResult::ConnectedWithin(_))
    }
}

/// A 128-bit digest standing in for a term in visited sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fingerprint(pub u64, pub u64);

impl Fingerprint {
    pub fn of(t: &Term) -> Self {
        let mut a = DefaultHasher::new();
        t.hash(&mut a);
        let mut b = DefaultHasher::new();
        0x9e37_79b9_u32.hash(&mut b);
        t.hash(&mut b);
        Fingerprint(a.finish(), b.finish())
    }
}

/// Every term within `radius` rewrites of a centre, with its distance.
#[derive(Clone, Debug)]
pub struct Ball {
    pub dist: HashMap<Fingerprint, usize>,
    pub radius: usize,
    /// True when the visited budget cut the search short.
    pub truncated: bool,
}

impl Ball {
    pub fn contains(&self, t: &Term) -> bool {
        self.dist.contains_key(&Fingerprint::of(t))
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Shortest joint distance through a term in both balls.
    pub fn meet(&self, other: &Ball) -> Option<usize> {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .dist
            .iter()
            .filter_map(|(t, d)| large.dist.get(t).map(|e| d + e))
            .min()
    }
}

struct Search {
    dist: HashMap<Fingerprint, usize>,
    frontier: Vec<Term>,
    level: usize,
    /// The search never goes past this level.
    radius: usize,
}

enum Step {
    /// The new level, stored.
    Advanced,
    /// A term of the new level lies in the other search at this distance.
    Met(usize),
    OverBudget,
}

impl Search {
    fn new(t: &Term, radius: usize) -> Self {
        Search {
            dist: HashMap::from([(Fingerprint::of(t), 0)]),
            frontier: vec![t.clone()],
            level: 0,
            radius,
        }
    }

    fn done(&self) -> bool {
        self.level >= self.radius || self.frontier.is_empty()
    }

    /// Advances one level, checking new terms against `other`. When `last`
    /// is set nothing is stored, since no later level or search will look.
    fn step(
        &mut self,
        system: System,
        size_cap: usize,
        budget: usize,
        other: Option<&HashMap<Fingerprint, usize>>,
        last: bool,
    ) -> Step {
        let level = self.level + 1;
        let keep_frontier = level < self.radius;
        let mut next = Vec::new();
        let mut met: Option<usize> = None;
        for t in std::mem::take(&mut self.frontier) {
            for (_, u) in neighbors(&t, system) {
                if u.size() > size_cap {
                    continue;
                }
                let key = Fingerprint::of(&u);
                if self.dist.contains_key(&key) {
                    continue;
                }
                if let Some(d) = other.and_then(|o| o.get(&key)) {
                    met = Some(met.map_or(*d, |m| m.min(*d)));
                }
                if last {
                    continue;
                }
                self.dist.insert(key, level);
                if keep_frontier {
                    next.push(u);
                }
                if self.dist.len() > budget {
                    return Step::OverBudget;
                }
            }
        }
        self.level = level;
        self.frontier = next;
        match met {
            Some(d) => Step::Met(level + d),
            None => Step::Advanced,
        }
    }
}

/// All terms reachable from `t` in at most `radius` rewrites, never exceeding
/// `size_cap` nodes.
pub fn ball(t: &Term, system: System, radius: usize, size_cap: usize, max_visited: usize) -> Ball {
    let mut s = Search::new(t, radius);
    let mut truncated = false;
    while !s.done() {
        if let Step::OverBudget = s.step(system, size_cap, max_visited, None, false) {
            truncated = true;
            break;
        }
    }
    Ball {
        dist: s.dist,
        radius,
        truncated,
    }
}

/// Searches for a chain of at most `depth` rewrites between `f` and `g`,
/// growing neighbourhoods from both ends, each to half the depth.
pub fn oracle_equal(
    f: &Term,
    g: &Term,
    system: System,
    depth: usize,
    config: OracleConfig,
) -> Result<OracleResult, DecideError> {
    let tf = typecheck(f, system)?;
    let tg = typecheck(g, system)?;
    if tf != tg {
        return Err(DecideError::TypeMismatch { left: tf, right: tg });
    }
    if f == g {
        return Ok(OracleResult::ConnectedWithin(0));
    }
    let cap = config.size_cap.unwrap_or(3 * f.size().max(g.size()));
    let mut sides = [Search::new(f, depth.div_ceil(2)), Search::new(g, depth / 2)];
    loop {
        let which = match (sides[0].done(), sides[1].done()) {
            (true, true) => return Ok(OracleResult::NotConnectedWithin(depth)),
            (false, true) => 0,
            (true, false) => 1,
            (false, false) => usize::from(sides[1].frontier.len() < sides[0].frontier.len()),
        };
        let last = sides[1 - which].done() && sides[which].level + 1 == sides[which].radius;
        let [a, b] = &mut sides;
        let (this, that) = if which == 0 { (a, b) } else { (b, a) };
        let budget = config.max_visited.saturating_sub(that.dist.len());
        match this.step(system, cap, budget, Some(&that.dist), last) {
            Step::Met(d) => return Ok(OracleResult::ConnectedWithin(d)),
            Step::OverBudget => {
                let visited = this.dist.len() + that.dist.len();
                return Ok(OracleResult::CapExceeded { visited });
            }
            Step::Advanced => {}
        }
    }
}

/// Every single rewrite of `t` at any position, as whole terms.
pub fn neighbors(t: &Term, system: System) -> Vec<(&'static str, Term)> {
    let mut out = local_moves(t, system);
    let kids: Vec<Term> = t.children().into_iter().cloned().collect();
    for (i, kid) in kids.iter().enumerate() {
        for (rule, new_kid) in neighbors(kid, system) {
            let mut rebuilt = kids.clone();
            rebuilt[i] = new_kid;
            out.push((rule, t.with_children(rebuilt)));
        }
    }
    out
}

/// Rewrites at the root of `t`, in both directions of each equation where the
/// other side is determined. Only results of the same type that belong to
/// `system` are returned.
pub fn local_moves(t: &Term, system: System) -> Vec<(&'static str, Term)> {
    let Ok(ty) = t.infer() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    constant_moves(t, &ty, system, &mut out);
    match t {
        Term::Comp(g, f) => composition_moves(g, f, &ty, &mut out),
        Term::Id(a) => identity_moves(a, &mut out),
        Term::Conj(a, b) | Term::Disj(a, b) => {
            let conj = matches!(t, Term::Conj(..));
            let rebuild = |x: Term, y: Term| if conj { Term::conj(x, y) } else { Term::disj(x, y) };
            if let (Term::Id(x), Term::Id(y)) = (&**a, &**b) {
                let joined = if conj {
                    Formula::conj(x.clone(), y.clone())
                } else {
                    Formula::disj(x.clone(), y.clone())
                };
                out.push((if conj { "xi1-conj" } else { "xi1-disj" }, Term::Id(joined)));
            }
            if let (Ok(ta), Ok(tb)) = (a.infer(), b.infer()) {
                out.push((
                    "dn",
                    if conj {
                        Term::pair(
                            Term::hproj(Side::Left, tb.source, arc(a)),
                            Term::hproj(Side::Right, ta.source, arc(b)),
                        )
                    } else {
                        Term::copair(
                            Term::cinj(Side::Left, tb.target, arc(a)),
                            Term::cinj(Side::Right, ta.target, arc(b)),
                        )
                    },
                ));
            }
            if let (Term::Comp(g1, f1), Term::Comp(g2, f2)) = (&**a, &**b) {
                out.push((
                    if conj { "xi2-conj" } else { "xi2-disj" },
                    Term::comp(rebuild(arc(g1), arc(g2)), rebuild(arc(f1), arc(f2))),
                ));
            }
        }
        Term::Pair(a, b) => {
            out.push(("dn", Term::comp(Term::conj(arc(a), arc(b)), Term::Hw(ty.source.clone()))));
            if let (Term::Id(x), Term::Id(y)) = (&**a, &**b) {
                if x == y {
                    out.push(("dn", Term::Hw(x.clone())));
                }
            }
            if let (Term::HProj(Side::Left, _, x), Term::HProj(Side::Right, _, y)) = (&**a, &**b) {
                out.push(("dn", Term::conj(arc(x), arc(y))));
            }
            match (&**a, &**b) {
                (Term::HProj(Side::Left, c, x), Term::HProj(Side::Right, b2, y)) => {
                    if let (Term::Id(b1), Term::Id(c2)) = (&**x, &**y) {
                        if b1 == b2 && c == c2 {
                            out.push(("HK4", Term::Id(Formula::conj(b1.clone(), c.clone()))));
                        }
                    }
                }
                _ => {}
            }
            if let (Term::Comp(g1, f1), Term::Comp(g2, f2)) = (&**a, &**b) {
                if f1 == f2 {
                    out.push(("HK3", Term::comp(Term::pair(arc(g1), arc(g2)), arc(f1))));
                }
            }
            if let (Term::HProj(i, d, f1), Term::HProj(j, e, f2)) = (&**a, &**b) {
                if i == j && d == e {
                    out.push(("HK5", Term::hproj(*i, d.clone(), Term::pair(arc(f1), arc(f2)))));
                }
            }
        }
        Term::Copair(a, b) => {
            out.push(("dn", Term::comp(Term::Cw(ty.target.clone()), Term::disj(arc(a), arc(b)))));
            if let (Term::Id(x), Term::Id(y)) = (&**a, &**b) {
                if x == y {
                    out.push(("dn", Term::Cw(x.clone())));
                }
            }
            if let (Term::CInj(Side::Left, _, x), Term::CInj(Side::Right, _, y)) = (&**a, &**b) {
                out.push(("dn", Term::disj(arc(x), arc(y))));
            }
            if let (Term::CInj(Side::Left, c, x), Term::CInj(Side::Right, b2, y)) = (&**a, &**b) {
                if let (Term::Id(b1), Term::Id(c2)) = (&**x, &**y) {
                    if b1 == b2 && c == c2 {
                        out.push(("CK4", Term::Id(Formula::disj(b1.clone(), c.clone()))));
                    }
                }
            }
            if let (Term::Comp(g1, f1), Term::Comp(g2, f2)) = (&**a, &**b) {
                if g1 == g2 {
                    out.push(("CK3", Term::comp(arc(g1), Term::copair(arc(f1), arc(f2)))));
                }
            }
            if let (Term::CInj(i, d, g1), Term::CInj(j, e, g2)) = (&**a, &**b) {
                if i == j && d == e {
                    out.push(("CK5", Term::cinj(*i, d.clone(), Term::copair(arc(g1), arc(g2)))));
                }
            }
        }
        Term::HProj(i, o, g) => {
            let Ok(inner) = g.infer() else { return Vec::new() };
            let (a1, a2) = i.pick((inner.source.clone(), o.clone()), (o.clone(), inner.source.clone()));
            out.push(("dn", Term::comp(arc(g), Term::Hk(*i, a1.clone(), a2.clone()))));
            if let Term::Id(_) = &**g {
                out.push(("dn", Term::Hk(*i, a1, a2)));
            }
            match &**g {
                Term::Comp(g1, f) => out.push(("HK1", Term::comp(arc(g1), Term::hproj(*i, o.clone(), arc(f))))),
                Term::Pair(f1, f2) => out.push((
                    "HK5",
                    Term::pair(Term::hproj(*i, o.clone(), arc(f1)), Term::hproj(*i, o.clone(), arc(f2))),
                )),
                Term::CInj(j, d, h) => out.push(("HKCK", Term::cinj(*j, d.clone(), Term::hproj(*i, o.clone(), arc(h))))),
                _ => {}
            }
        }
        Term::CInj(i, o, f) => {
            let Ok(inner) = f.infer() else { return Vec::new() };
            let (b1, b2) = i.pick((inner.target.clone(), o.clone()), (o.clone(), inner.target.clone()));
            out.push(("dn", Term::comp(Term::Ck(*i, b1.clone(), b2.clone()), arc(f))));
            if let Term::Id(_) = &**f {
                out.push(("dn", Term::Ck(*i, b1, b2)));
            }
            match &**f {
                Term::Comp(g, f1) => out.push(("CK1", Term::comp(Term::cinj(*i, o.clone(), arc(g)), arc(f1)))),
                Term::Copair(g1, g2) => out.push((
                    "CK5",
                    Term::copair(Term::cinj(*i, o.clone(), arc(g1)), Term::cinj(*i, o.clone(), arc(g2))),
                )),
                Term::HProj(j, c, h) => out.push(("HKCK", Term::hproj(*j, c.clone(), Term::cinj(*i, o.clone(), arc(h))))),
                _ => {}
            }
        }
        Term::Hw(a) => out.push(("dn", Term::pair(Term::Id(a.clone()), Term::Id(a.clone())))),
        Term::Cw(a) => out.push(("dn", Term::copair(Term::Id(a.clone()), Term::Id(a.clone())))),
        Term::Hk(i, a1, a2) => out.push(("dn", Term::hproj(*i, i.pick(a2, a1).clone(), Term::Id(i.pick(a1, a2).clone())))),
        Term::Ck(i, b1, b2) => out.push(("dn", Term::cinj(*i, i.pick(b2, b1).clone(), Term::Id(i.pick(b1, b2).clone())))),
        Term::Hkappa(_) | Term::Ckappa(_) => {}
    }
    if !matches!(t, Term::Id(_)) {
        out.push(("cat1", Term::comp(t.clone(), Term::Id(ty.source.clone()))));
        out.push(("cat1", Term::comp(Term::Id(ty.target.clone()), t.clone())));
    }
    out.retain(|(_, u)| u != t && u.check_system(system).is_ok() && u.infer().ok().as_ref() == Some(&ty));
    out
}

fn arc(t: &std::sync::Arc<Term>) -> Term {
    (**t).clone()
}

fn constant_moves(t: &Term, ty: &TermType, system: System, out: &mut Vec<(&'static str, Term)>) {
    if system.allows_top() && ty.target == Formula::Top {
        out.push(("hkappa", Term::Hkappa(ty.source.clone())));
    }
    if system.allows_bot() && ty.source == Formula::Bot {
        out.push(("ckappa", Term::Ckappa(ty.target.clone())));
    }
    let collapse_bot = system.allows_bot() && system != System::Bicart;
    let collapse_top = system.allows_top() && system != System::Bicart;
    match t {
        Term::Hk(i, Formula::Bot, Formula::Bot) if collapse_bot => {
            out.push(("hk-bot", Term::Hk(i.other(), Formula::Bot, Formula::Bot)));
        }
        Term::Ck(i, Formula::Top, Formula::Top) if collapse_top => {
            out.push(("ck-top", Term::Ck(i.other(), Formula::Top, Formula::Top)));
        }
        Term::HProj(i, Formula::Bot, g) if collapse_bot && **g == Term::Id(Formula::Bot) => {
            out.push(("HK-bot", Term::hproj(i.other(), Formula::Bot, Term::Id(Formula::Bot))));
        }
        Term::CInj(i, Formula::Top, f) if collapse_top && **f == Term::Id(Formula::Top) => {
            out.push(("CK-top", Term::cinj(i.other(), Formula::Top, Term::Id(Formula::Top))));
        }
        _ => {}
    }
}

fn identity_moves(a: &Formula, out: &mut Vec<(&'static str, Term)>) {
    let id = Term::Id;
    for i in [Side::Left, Side::Right] {
        out.push(("hw-hk", Term::comp(Term::Hk(i, a.clone(), a.clone()), Term::Hw(a.clone()))));
        out.push(("cw-ck", Term::comp(Term::Cw(a.clone()), Term::Ck(i, a.clone(), a.clone()))));
    }
    match a {
        Formula::Conj(b, c) => {
            let (b, c) = ((**b).clone(), (**c).clone());
            out.push(("xi1-conj", Term::conj(id(b.clone()), id(c.clone()))));
            out.push((
                "hw-hk-hk",
                Term::comp(
                    Term::conj(Term::Hk(Side::Left, b.clone(), c.clone()), Term::Hk(Side::Right, b.clone(), c.clone())),
                    Term::Hw(a.clone()),
                ),
            ));
            out.push((
                "HK4",
                Term::pair(Term::hproj(Side::Left, c.clone(), id(b.clone())), Term::hproj(Side::Right, b, id(c))),
            ));
        }
        Formula::Disj(b, c) => {
            let (b, c) = ((**b).clone(), (**c).clone());
            out.push(("xi1-disj", Term::disj(id(b.clone()), id(c.clone()))));
            out.push((
                "cw-ck-ck",
                Term::comp(
                    Term::Cw(a.clone()),
                    Term::disj(Term::Ck(Side::Left, b.clone(), c.clone()), Term::Ck(Side::Right, b.clone(), c.clone())),
                ),
            ));
            out.push((
                "CK4",
                Term::copair(Term::cinj(Side::Left, c.clone(), id(b.clone())), Term::cinj(Side::Right, b, id(c))),
            ));
        }
        _ => {}
    }
}

fn composition_moves(g: &Term, f: &Term, ty: &TermType, out: &mut Vec<(&'static str, Term)>) {
    let c = |x: &Term, y: &Term| Term::comp(x.clone(), y.clone());
    let src = |x: &Term| x.infer().map(|t| t.source);
    let tgt = |x: &Term| x.infer().map(|t| t.target);
    if let Term::Id(_) = f {
        out.push(("cat1", g.clone()));
    }
    if let Term::Id(_) = g {
        out.push(("cat1", f.clone()));
    }
    if let Term::Comp(h, g1) = g {
        out.push(("cat2", Term::comp(arc(h), c(g1, f))));
    }
    if let Term::Comp(g1, f1) = f {
        out.push(("cat2", Term::comp(c(g, g1), arc(f1))));
    }
    match (g, f) {
        (Term::Conj(g1, g2), Term::Conj(f1, f2)) => {
            out.push(("xi2-conj", Term::conj(c(g1, f1), c(g2, f2))));
        }
        (Term::Disj(g1, g2), Term::Disj(f1, f2)) => {
            out.push(("xi2-disj", Term::disj(c(g1, f1), c(g2, f2))));
        }
        _ => {}
    }
    // Diagonal and codiagonal.
    if let (Term::Conj(a, b), Term::Hw(_)) = (g, f) {
        if a == b {
            if let Ok(t) = tgt(a) {
                out.push(("hw-nat", Term::comp(Term::Hw(t), arc(a))));
            }
        }
        out.push(("dn", Term::pair(arc(a), arc(b))));
        if let (Term::Hk(Side::Left, x1, y1), Term::Hk(Side::Right, x2, y2)) = (&**a, &**b) {
            if x1 == x2 && y1 == y2 {
                out.push(("hw-hk-hk", Term::Id(ty.source.clone())));
            }
        }
    }
    if let Term::Hw(_) = g {
        if let Ok(s) = src(f) {
            out.push(("hw-nat", Term::comp(Term::conj(f.clone(), f.clone()), Term::Hw(s))));
        }
    }
    if let (Term::Cw(_), Term::Disj(a, b)) = (g, f) {
        if a == b {
            if let Ok(s) = src(a) {
                out.push(("cw-nat", Term::comp(arc(a), Term::Cw(s))));
            }
        }
        out.push(("dn", Term::copair(arc(a), arc(b))));
        if let (Term::Ck(Side::Left, x1, y1), Term::Ck(Side::Right, x2, y2)) = (&**a, &**b) {
            if x1 == x2 && y1 == y2 {
                out.push(("cw-ck-ck", Term::Id(ty.target.clone())));
            }
        }
    }
    if let Term::Cw(_) = f {
        if let Ok(t) = tgt(g) {
            out.push(("cw-nat", Term::comp(Term::Cw(t), Term::disj(g.clone(), g.clone()))));
        }
    }
    // Projections and injections.
    if let (Term::Hk(i, _, _), Term::Conj(f1, f2)) = (g, f) {
        if let (Ok(a1), Ok(a2)) = (src(f1), src(f2)) {
            out.push(("hk-nat", Term::comp(arc(i.pick(f1, f2)), Term::Hk(*i, a1, a2))));
        }
    }
    if let Term::Hk(i, a1, a2) = f {
        if let Ok(b) = tgt(g) {
            let other = Term::Id(i.pick(a2, a1).clone());
            let (f1, f2) = i.pick((g.clone(), other.clone()), (other, g.clone()));
            let (b1, b2) = i.pick((b.clone(), a2.clone()), (a1.clone(), b));
            out.push(("hk-nat", Term::comp(Term::Hk(*i, b1, b2), Term::conj(f1, f2))));
        }
        if let Term::Hw(_) = g {
            if a1 == a2 {
                out.push(("hw-hk", Term::Id(a1.clone())));
            }
        }
        out.push(("dn", Term::hproj(*i, i.pick(a2, a1).clone(), g.clone())));
    }
    if let (Term::Disj(g1, g2), Term::Ck(i, _, _)) = (g, f) {
        if let (Ok(b1), Ok(b2)) = (tgt(g1), tgt(g2)) {
            out.push(("ck-nat", Term::comp(Term::Ck(*i, b1, b2), arc(i.pick(g1, g2)))));
        }
    }
    if let Term::Ck(i, b1, b2) = g {
        if let Ok(a) = src(f) {
            let other = Term::Id(i.pick(b2, b1).clone());
            let (f1, f2) = i.pick((f.clone(), other.clone()), (other, f.clone()));
            let (a1, a2) = i.pick((a.clone(), b2.clone()), (b1.clone(), a));
            out.push(("ck-nat", Term::comp(Term::disj(f1, f2), Term::Ck(*i, a1, a2))));
        }
        if let Term::Cw(_) = f {
            if b1 == b2 {
                out.push(("cw-ck", Term::Id(b1.clone())));
            }
        }
        out.push(("dn", Term::cinj(*i, i.pick(b2, b1).clone(), f.clone())));
    }
    // Gentzen constructors.
    if let Term::HProj(i, o, f1) = f {
        out.push(("HK1", Term::hproj(*i, o.clone(), c(g, f1))));
    }
    if let Term::CInj(i, o, g1) = g {
        out.push(("CK1", Term::cinj(*i, o.clone(), c(g1, f))));
    }
    if let (Term::HProj(i, _, g1), Term::Pair(f1, f2)) = (g, f) {
        out.push(("HK2", c(g1, i.pick(f1, f2))));
    }
    if let (Term::Copair(g1, g2), Term::CInj(i, _, f1)) = (g, f) {
        out.push(("CK2", c(i.pick(g1, g2), f1)));
    }
    if let Term::Pair(g1, g2) = g {
        out.push(("HK3", Term::pair(c(g1, f), c(g2, f))));
    }
    if let Term::Copair(f1, f2) = f {
        out.push(("CK3", Term::copair(c(g, f1), c(g, f2))));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relfun::image;
    use crate::syntax::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn moves_preserve_type_and_image() {
        for s in [
            "hk1<p /\\ q, p /\\ q> . hw<p /\\ q>",
            "pair(HK1<q>(id<p>), HK2<p>(id<q>)) . id<p /\\ q>",
            "copair(CK1<p>(id<p>), CK2<p>(id<p>))",
            "HK1<bot>(id<bot>)",
            "hkap<top> . ckap<top>",
        ] {
            let term = t(s);
            let ty = term.infer().unwrap();
            for (rule, u) in neighbors(&term, System::Ltopbot) {
                assert_eq!(u.infer().unwrap(), ty, "{rule}: {u}");
                assert_eq!(image(&u).unwrap(), image(&term).unwrap(), "{rule}: {u}");
            }
        }
    }

    #[test]
    fn connects_axiom_sides() {
        let cfg = OracleConfig::default();
        let r = oracle_equal(&t("(hk1<p,q> /\\ hk2<p,q>) . hw<p /\\ q>"), &t("id<p /\\ q>"), System::L, 2, cfg).unwrap();
        assert_eq!(r, OracleResult::ConnectedWithin(1));
        let r = oracle_equal(&t("hk1<bot,bot>"), &t("hk2<bot,bot>"), System::Lbot, 2, cfg).unwrap();
        assert_eq!(r, OracleResult::ConnectedWithin(1));
        let r = oracle_equal(&t("hk1<bot,bot>"), &t("hk2<bot,bot>"), System::Bicart, 3, cfg).unwrap();
        assert_eq!(r, OracleResult::NotConnectedWithin(3));
    }

    #[test]
    fn pair_of_copairs_needs_six_steps() {
        let f = t("copair(pair(id<p>, id<p>), pair(id<p>, id<p>))");
        let g = t("pair(copair(id<p>, id<p>), copair(id<p>, id<p>))");
        let r = oracle_equal(&f, &g, System::L, 8, OracleConfig::default()).unwrap();
        assert!(r.is_connected(), "{r:?}");
    }

    #[test]
    fn different_images_never_connect() {
        let r = oracle_equal(&t("hk1<p,p>"), &t("hk2<p,p>"), System::L, 4, OracleConfig::default()).unwrap();
        assert_eq!(r, OracleResult::NotConnectedWithin(4));
    }

    #[test]
    fn balls_grow_with_radius() {
        let term = t("pair(id<p>, id<p>)");
        let b1 = ball(&term, System::L, 1, 9, 10_000);
        let b2 = ball(&term, System::L, 2, 9, 10_000);
        assert!(b1.len() < b2.len());
        assert_eq!(b1.meet(&b2), Some(0));
        assert!(b2.contains(&t("hw<p>")));
    }
}
