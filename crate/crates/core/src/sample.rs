//! Random formulas and terms, cut-free provability, random synthesis of
//! composition-free terms of a given type, and exhaustive enumeration of
//! such terms.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formulas::{Formula, Side};
use crate::terms::{System, Term};

const LETTERS: [&str; 4] = ["p", "q", "r", "s"];

/// Bounds for random generation.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub system: System,
    /// How many distinct letters may appear, at most 4.
    pub letters: usize,
    /// Maximum number of leaves (letters and constants) of a formula.
    pub max_leaves: usize,
    /// Probability that a leaf is a constant, when the system has one.
    pub constant_rate: f64,
}

impl SampleConfig {
    pub fn new(system: System) -> Self {
        SampleConfig {
            system,
            letters: 4,
            max_leaves: 6,
            constant_rate: 0.25,
        }
    }

    pub fn letters(mut self, n: usize) -> Self {
        self.letters = n.clamp(1, LETTERS.len());
        self
    }

    pub fn max_leaves(mut self, n: usize) -> Self {
        self.max_leaves = n.max(1);
        self
    }
}

/// Which constructors random terms may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Arrow,
    Gentzen,
    Mixed,
}

pub fn random_formula<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> Formula {
    let leaves = rng.gen_range(1..=cfg.max_leaves);
    formula_with_leaves(rng, cfg, leaves)
}

pub fn formula_with_leaves<R: Rng>(rng: &mut R, cfg: &SampleConfig, leaves: usize) -> Formula {
    if leaves <= 1 {
        return random_leaf(rng, cfg);
    }
    let left = rng.gen_range(1..leaves);
    let l = formula_with_leaves(rng, cfg, left);
    let r = formula_with_leaves(rng, cfg, leaves - left);
    if rng.gen_bool(0.5) {
        Formula::conj(l, r)
    } else {
        Formula::disj(l, r)
    }
}

fn random_leaf<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> Formula {
    let mut constants = Vec::new();
    if cfg.system.allows_top() {
        constants.push(Formula::Top);
    }
    if cfg.system.allows_bot() {
        constants.push(Formula::Bot);
    }
    if !constants.is_empty() && rng.gen_bool(cfg.constant_rate) {
        return constants.choose(rng).expect("nonempty").clone();
    }
    Formula::letter(LETTERS[rng.gen_range(0..cfg.letters.clamp(1, LETTERS.len()))])
}

/// Cut-free provability with memoization, and random or exhaustive
/// construction of composition-free terms.
pub struct Prover {
    system: System,
    memo: HashMap<(Formula, Formula), bool>,
}

impl Prover {
    pub fn new(system: System) -> Self {
        Prover {
            system,
            memo: HashMap::new(),
        }
    }

    pub fn system(&self) -> System {
        self.system
    }

    /// Whether some term of type `a |- b` exists in the system.
    pub fn provable(&mut self, a: &Formula, b: &Formula) -> bool {
        if let Some(&known) = self.memo.get(&(a.clone(), b.clone())) {
            return known;
        }
        let result = self.search(a, b);
        self.memo.insert((a.clone(), b.clone()), result);
        result
    }

    fn search(&mut self, a: &Formula, b: &Formula) -> bool {
        if a == b {
            return true;
        }
        if (*b == Formula::Top && self.system.allows_top()) || (*a == Formula::Bot && self.system.allows_bot()) {
            return true;
        }
        if let Some((b1, b2)) = b.as_conj() {
            return self.provable(a, b1) && self.provable(a, b2);
        }
        if let Some((a1, a2)) = a.as_disj() {
            return self.provable(a1, b) && self.provable(a2, b);
        }
        if let Some((a1, a2)) = a.as_conj() {
            if self.provable(a1, b) || self.provable(a2, b) {
                return true;
            }
        }
        if let Some((b1, b2)) = b.as_disj() {
            if self.provable(a, b1) || self.provable(a, b2) {
                return true;
            }
        }
        false
    }

    /// A random composition-free term of type `a |- b`, if one exists.
    pub fn synthesize<R: Rng>(&mut self, rng: &mut R, a: &Formula, b: &Formula) -> Option<Term> {
        if !self.provable(a, b) {
            return None;
        }
        let mut options: Vec<u8> = Vec::new();
        if a == b {
            options.push(0);
        }
        if *b == Formula::Top && self.system.allows_top() {
            options.push(1);
        }
        if *a == Formula::Bot && self.system.allows_bot() {
            options.push(2);
        }
        if let Some((b1, b2)) = b.as_conj() {
            if self.provable(a, b1) && self.provable(a, b2) {
                options.push(3);
            }
        }
        if let Some((a1, a2)) = a.as_disj() {
            if self.provable(a1, b) && self.provable(a2, b) {
                options.push(4);
            }
        }
        if let Some((a1, a2)) = a.as_conj() {
            if self.provable(a1, b) {
                options.push(5);
            }
            if self.provable(a2, b) {
                options.push(6);
            }
        }
        if let Some((b1, b2)) = b.as_disj() {
            if self.provable(a, b1) {
                options.push(7);
            }
            if self.provable(a, b2) {
                options.push(8);
            }
        }
        let choice = *options.choose(rng)?;
        Some(match choice {
            0 => Term::Id(a.clone()),
            1 => Term::Hkappa(a.clone()),
            2 => Term::Ckappa(b.clone()),
            3 => {
                let (b1, b2) = b.as_conj()?;
                Term::pair(self.synthesize(rng, a, b1)?, self.synthesize(rng, a, b2)?)
            }
            4 => {
                let (a1, a2) = a.as_disj()?;
                Term::copair(self.synthesize(rng, a1, b)?, self.synthesize(rng, a2, b)?)
            }
            5 | 6 => {
                let side = if choice == 5 { Side::Left } else { Side::Right };
                let (a1, a2) = a.as_conj()?;
                let (kept, other) = (side.pick(a1, a2), side.pick(a2, a1));
                Term::hproj(side, other.clone(), self.synthesize(rng, kept, b)?)
            }
            _ => {
                let side = if choice == 7 { Side::Left } else { Side::Right };
                let (b1, b2) = b.as_disj()?;
                let (kept, other) = (side.pick(b1, b2), side.pick(b2, b1));
                Term::cinj(side, other.clone(), self.synthesize(rng, a, kept)?)
            }
        })
    }

    /// Every composition-free Gentzen term of type `a |- b`, without
    /// conjunctions or disjunctions of terms.
    pub fn enumerate(&mut self, a: &Formula, b: &Formula) -> Vec<Term> {
        let mut out = Vec::new();
        if !self.provable(a, b) {
            return out;
        }
        if a == b {
            out.push(Term::Id(a.clone()));
        }
        if *b == Formula::Top && self.system.allows_top() {
            out.push(Term::Hkappa(a.clone()));
        }
        if *a == Formula::Bot && self.system.allows_bot() {
            out.push(Term::Ckappa(b.clone()));
        }
        if let Some((b1, b2)) = b.as_conj() {
            let lefts = self.enumerate(a, b1);
            let rights = self.enumerate(a, b2);
            for l in &lefts {
                for r in &rights {
                    out.push(Term::pair(l.clone(), r.clone()));
                }
            }
        }
        if let Some((a1, a2)) = a.as_disj() {
            let lefts = self.enumerate(a1, b);
            let rights = self.enumerate(a2, b);
            for l in &lefts {
                for r in &rights {
                    out.push(Term::copair(l.clone(), r.clone()));
                }
            }
        }
        if let Some((a1, a2)) = a.as_conj() {
            for side in [Side::Left, Side::Right] {
                let other = side.pick(a2, a1).clone();
                for g in self.enumerate(side.pick(a1, a2), b) {
                    out.push(Term::hproj(side, other.clone(), g));
                }
            }
        }
        if let Some((b1, b2)) = b.as_disj() {
            for side in [Side::Left, Side::Right] {
                let other = side.pick(b2, b1).clone();
                for f in self.enumerate(a, side.pick(b1, b2)) {
                    out.push(Term::cinj(side, other.clone(), f));
                }
            }
        }
        out
    }
}

/// Every formula over the single letter `p` with exactly `n` occurrences and
/// no constants.
pub fn monoletter_formulas(n: usize) -> Vec<Formula> {
    if n == 1 {
        return vec![Formula::letter("p")];
    }
    let mut out = Vec::new();
    for k in 1..n {
        let lefts = monoletter_formulas(k);
        let rights = monoletter_formulas(n - k);
        for l in &lefts {
            for r in &rights {
                out.push(Formula::conj(l.clone(), r.clone()));
                out.push(Formula::disj(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Random well-typed terms built forward from a given source.
pub struct TermSampler<'a, R: Rng> {
    pub rng: &'a mut R,
    pub cfg: SampleConfig,
    pub style: Style,
    prover: Prover,
}

impl<'a, R: Rng> TermSampler<'a, R> {
    pub fn new(rng: &'a mut R, cfg: SampleConfig, style: Style) -> Self {
        TermSampler {
            rng,
            cfg,
            style,
            prover: Prover::new(cfg.system),
        }
    }

    pub fn formula(&mut self) -> Formula {
        random_formula(self.rng, &self.cfg)
    }

    fn small_formula(&mut self) -> Formula {
        let leaves = self.rng.gen_range(1..=2);
        formula_with_leaves(self.rng, &self.cfg, leaves)
    }

    pub fn synthesize(&mut self, a: &Formula, b: &Formula) -> Option<Term> {
        self.prover.synthesize(self.rng, a, b)
    }

    /// A random term with the given source and roughly `budget` nodes.
    pub fn term_from(&mut self, source: &Formula, budget: usize) -> Term {
        if budget <= 1 {
            return self.leaf_from(source);
        }
        let gentzen = self.style != Style::Arrow;
        let arrow = self.style != Style::Gentzen;
        let mut options: Vec<u8> = vec![0, 0, 1];
        if source.as_conj().is_some() && (arrow || gentzen) {
            options.push(2);
        }
        if source.as_disj().is_some() {
            options.push(3);
        }
        if gentzen {
            options.extend([4, 6]);
            if source.as_conj().is_some() {
                options.push(5);
            }
            if source.as_disj().is_some() {
                options.push(7);
            }
        }
        let rest = budget - 1;
        let split = self.rng.gen_range(1..=rest.max(1));
        match *options.choose(self.rng).expect("nonempty") {
            0 => {
                let f = self.term_from(source, split);
                let mid = f.infer().expect("sampled terms are typed").target;
                let g = self.term_from(&mid, rest.saturating_sub(split).max(1));
                Term::comp(g, f)
            }
            1 => self.leaf_from(source),
            2 | 3 => {
                let (conn, a1, a2) = source.as_binary().expect("binary");
                let (a1, a2) = (a1.clone(), a2.clone());
                let f1 = self.term_from(&a1, split);
                let f2 = self.term_from(&a2, rest.saturating_sub(split).max(1));
                Term::xi(conn, f1, f2)
            }
            4 => {
                let f1 = self.term_from(source, split);
                let f2 = self.term_from(source, rest.saturating_sub(split).max(1));
                Term::pair(f1, f2)
            }
            5 => {
                let (a1, a2) = source.as_conj().expect("conjunction");
                let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                let (kept, other) = (side.pick(a1, a2).clone(), side.pick(a2, a1).clone());
                Term::hproj(side, other, self.term_from(&kept, rest))
            }
            6 => {
                let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                let other = self.small_formula();
                Term::cinj(side, other, self.term_from(source, rest))
            }
            _ => {
                let (a1, a2) = source.as_disj().expect("disjunction");
                let (a1, a2) = (a1.clone(), a2.clone());
                let g1 = self.term_from(&a1, split);
                let c = g1.infer().expect("sampled terms are typed").target;
                match self.synthesize(&a2, &c) {
                    Some(g2) => Term::copair(g1, g2),
                    None => {
                        let g2 = self.term_from(&a2, rest.saturating_sub(split).max(1));
                        Term::disj(g1, g2)
                    }
                }
            }
        }
    }

    fn leaf_from(&mut self, source: &Formula) -> Term {
        let gentzen = self.style == Style::Gentzen;
        let mut options: Vec<u8> = vec![0];
        if !gentzen {
            options.extend([1, 3]);
            if source.as_conj().is_some() {
                options.push(2);
            }
            if let Some((a1, a2)) = source.as_disj() {
                if a1 == a2 {
                    options.push(4);
                }
            }
        }
        if self.cfg.system.allows_top() {
            options.push(5);
        }
        if *source == Formula::Bot && self.cfg.system.allows_bot() {
            options.push(6);
        }
        match *options.choose(self.rng).expect("nonempty") {
            1 => Term::Hw(source.clone()),
            2 => {
                let (a1, a2) = source.as_conj().expect("conjunction");
                let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                Term::Hk(side, a1.clone(), a2.clone())
            }
            3 => {
                let other = self.small_formula();
                if self.rng.gen_bool(0.5) {
                    Term::Ck(Side::Left, source.clone(), other)
                } else {
                    Term::Ck(Side::Right, other, source.clone())
                }
            }
            4 => {
                let (a1, _) = source.as_disj().expect("disjunction");
                Term::Cw(a1.clone())
            }
            5 => Term::Hkappa(source.clone()),
            6 => Term::Ckappa(self.small_formula()),
            _ => Term::Id(source.clone()),
        }
    }

    /// A random term from a fresh random source, with `ckap` available at
    /// `bot` sources when the system has it.
    pub fn term(&mut self, budget: usize) -> Term {
        let source = self.formula();
        if source == Formula::Bot && self.cfg.system.allows_bot() && self.rng.gen_bool(0.5) {
            let target = self.formula();
            return Term::Ckappa(target);
        }
        self.term_from(&source, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::typecheck;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn provability_in_lattices() {
        let mut prover = Prover::new(System::L);
        let p = Formula::letter("p");
        let q = Formula::letter("q");
        assert!(prover.provable(&Formula::conj(p.clone(), q.clone()), &p));
        assert!(!prover.provable(&p, &Formula::conj(p.clone(), q.clone())));
        assert!(prover.provable(&p, &Formula::disj(q.clone(), p.clone())));
        let mut prover = Prover::new(System::Ltopbot);
        assert!(prover.provable(&Formula::conj(p.clone(), Formula::Bot), &q));
    }

    #[test]
    fn enumeration_counts() {
        let mut prover = Prover::new(System::L);
        let p = Formula::letter("p");
        let pp = Formula::conj(p.clone(), p.clone());
        assert_eq!(prover.enumerate(&p, &p).len(), 1);
        assert_eq!(prover.enumerate(&pp, &p).len(), 2);
        assert_eq!(prover.enumerate(&pp, &pp).len(), 7);
        assert_eq!(monoletter_formulas(3).len(), 8);
    }

    #[test]
    fn sampled_terms_typecheck() {
        let mut rng = StdRng::seed_from_u64(7);
        for system in System::ALL {
            for style in [Style::Arrow, Style::Gentzen, Style::Mixed] {
                let mut sampler = TermSampler::new(&mut rng, SampleConfig::new(system), style);
                for _ in 0..50 {
                    let t = sampler.term(10);
                    typecheck(&t, system).unwrap_or_else(|e| panic!("{t}: {e}"));
                    match style {
                        Style::Arrow => assert!(t.is_arrow(), "{t}"),
                        Style::Gentzen => assert!(t.is_gentzen(), "{t}"),
                        Style::Mixed => {}
                    }
                }
            }
        }
    }
}
