//! Acceptance gate. Runs without the libtest harness so every criterion
//! prints exactly one PASS or FAIL line; the process fails if any does.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use bicoh_core::decide::{axiom_instances, ball, decide, oracle_equal, Ball, OracleConfig, OracleResult};
use bicoh_core::maximality::{collapse_witness_dicart, collapse_witness_l};
use bicoh_core::models::{counterexample_pair, model_equal, preserves_basepoint, Assignment, ModelObject, ModelVariant};
use bicoh_core::normalize::{normalize, step_budget};
use bicoh_core::relfun::g_of;
use bicoh_core::sample::{monoletter_formulas, Prover, SampleConfig, Style, TermSampler};
use bicoh_core::{parse_formula, parse_term, typecheck, Formula, Letter, System, Term};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const SEED: u64 = 0x5eed_c0de;

// Criterion 1 and 6.
const INSTANCES_PER_SCHEMA: usize = 200;
const MAX_LETTERS: usize = 4;
const MAX_FORMULA_LEAVES: usize = 6;
const MAX_MODEL_SET: usize = 3;
const MIXED_ASSIGNMENTS: usize = 2;
const MODEL_DOMAIN_LIMIT: usize = 20_000;

// Criterion 2.
const ELIMINATION_TERMS: usize = 500;
const MAX_TERM_NODES: usize = 30;

// Criterion 3.
const LATTICE_OCCURRENCE_BOUND: usize = 4;
const LATTICE_DEPTH: usize = 8;
const BALL_VISIT_LIMIT: usize = 400_000;

// Criterion 5.
const COUNTEREXAMPLE_MAX_N: usize = 4;
const COUNTEREXAMPLE_DEPTH: usize = 6;

// Criterion 7.
const L_WITNESS_PAIRS: usize = 50;
const DICART_WITNESS_PAIRS: usize = 20;

// Criterion 8.
const RESTRICTED_PAIRS: usize = 100;
const RESTRICTED_DEPTH: usize = 10;
const RESTRICTED_MAX_NODES: usize = 14;
const RESTRICTED_VISIT_LIMIT: usize = 100_000;
const RESTRICTED_MAX_EXAMINED: usize = 250;
const RESTRICTED_SYNTHESIS_TRIES: usize = 20;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t(s: &str) -> Term {
    parse_term(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn pairs(rel: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    rel.iter().copied().collect()
}

fn instance_config(system: System) -> SampleConfig {
    SampleConfig::new(system).letters(MAX_LETTERS).max_leaves(MAX_FORMULA_LEAVES)
}

/// Every axiom instance of criterion 1, per system, reproducibly.
fn criterion_one_instances() -> Vec<(System, bicoh_core::decide::AxiomInstance)> {
    let mut out = Vec::new();
    for system in [System::L, System::Ltopbot] {
        let mut rng = StdRng::seed_from_u64(SEED ^ system as u64);
        for _ in 0..INSTANCES_PER_SCHEMA {
            for inst in axiom_instances(system, &instance_config(system), &mut rng) {
                out.push((system, inst));
            }
        }
    }
    out
}

fn functoriality() -> Outcome {
    let insts = criterion_one_instances();
    let mut per_schema: BTreeMap<(System, &str), usize> = BTreeMap::new();
    for (system, inst) in &insts {
        let lt = typecheck(&inst.lhs, *system).map_err(|e| format!("{}: {e}", inst.schema))?;
        let rt = typecheck(&inst.rhs, *system).map_err(|e| format!("{}: {e}", inst.schema))?;
        check(lt == rt, || format!("{} sides have types {lt} and {rt}", inst.schema))?;
        let (gl, gr) = (g_of(&inst.lhs, *system).unwrap(), g_of(&inst.rhs, *system).unwrap());
        check(gl == gr, || format!("{}: {} = {} but {gl} != {gr}", inst.schema, inst.lhs, inst.rhs))?;
        *per_schema.entry((*system, inst.schema)).or_default() += 1;
    }
    let l = per_schema.keys().filter(|(s, _)| *s == System::L).count();
    let d = per_schema.keys().filter(|(s, _)| *s == System::Ltopbot).count();
    check(l == 25, || format!("L has {l} schemas, expected 25"))?;
    check(d == 31, || format!("Ltopbot has {d} schemas, expected 31"))?;
    let min = per_schema.values().min().copied().unwrap_or(0);
    check(min >= INSTANCES_PER_SCHEMA, || format!("a schema got only {min} instances"))?;
    Ok(format!("{} instances, {l} schemas of L, {d} of Ltopbot, >= {min} each", insts.len()))
}

fn elimination() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let mut done = 0;
    let mut worst = 0.0f64;
    let per_system = ELIMINATION_TERMS / System::ALL.len();
    for system in System::ALL {
        let mut n = 0;
        while n < per_system {
            let style = [Style::Arrow, Style::Gentzen, Style::Mixed][rng.gen_range(0..3)];
            let cfg = SampleConfig::new(system);
            let term = {
                let mut s = TermSampler::new(&mut rng, cfg, style);
                let budget = s.rng.gen_range(2..=8);
                s.term(budget)
            };
            if term.size() > MAX_TERM_NODES || !term.has_composition() {
                continue;
            }
            n += 1;
            let ty = typecheck(&term, system).map_err(|e| format!("sampled {term}: {e}"))?;
            let (out, trace) = normalize(&term, system).map_err(|e| format!("{term} in {system}: {e}"))?;
            check(!out.has_composition(), || format!("{term} left {out}"))?;
            check(typecheck(&out, system).as_ref() == Ok(&ty), || format!("{term} changed type to {out}"))?;
            check(g_of(&out, system) == g_of(&term, system), || format!("{term} changed relation"))?;
            let budget = step_budget(&term);
            check(trace.len() <= budget, || format!("{term}: {} steps over budget {budget}", trace.len()))?;
            check(term.size().pow(3) >= budget || budget == 8, || format!("budget {budget} is not cubic"))?;
            worst = worst.max(trace.len() as f64 / budget as f64);
            done += 1;
        }
    }
    Ok(format!("{done} terms over 5 systems, worst step use {:.1}% of size^3", worst * 100.0))
}

/// Types `A |- B` over `p` with at most `bound` occurrences in total.
fn small_lattice_types(bound: usize) -> Vec<(Formula, Formula)> {
    let mut out = Vec::new();
    for a in 1..bound {
        for b in 1..=bound - a {
            for x in monoletter_formulas(a) {
                for y in monoletter_formulas(b) {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out
}

fn lattice_cross_check() -> Outcome {
    let mut prover = Prover::new(System::L);
    let radius = LATTICE_DEPTH / 2;
    let (mut types, mut terms, mut pairs_checked, mut equal_pairs) = (0, 0, 0, 0);
    let mut deepest = 0;
    let mut inconclusive = 0;
    for (a, b) in small_lattice_types(LATTICE_OCCURRENCE_BOUND) {
        let ts = prover.enumerate(&a, &b);
        if ts.is_empty() {
            continue;
        }
        types += 1;
        terms += ts.len();
        let cap = 3 * ts.iter().map(Term::size).max().unwrap();
        let balls: Vec<Ball> = ts
            .par_iter()
            .map(|x| ball(x, System::L, radius, cap, BALL_VISIT_LIMIT))
            .collect();
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                pairs_checked += 1;
                let equal = decide(&ts[i], &ts[j], System::L).unwrap().is_equal();
                let meet = balls[i].meet(&balls[j]);
                if let Some(d) = meet {
                    deepest = deepest.max(d);
                }
                match (equal, meet) {
                    (true, Some(_)) => equal_pairs += 1,
                    (false, None) => {}
                    (false, Some(d)) => {
                        return Err(format!("{} and {} are joined in {d} steps but decided apart", ts[i], ts[j]))
                    }
                    (true, None) if balls[i].truncated || balls[j].truncated => {
                        equal_pairs += 1;
                        inconclusive += 1;
                    }
                    (true, None) => {
                        return Err(format!(
                            "{} and {} are decided equal but not joined within {LATTICE_DEPTH}",
                            ts[i], ts[j]
                        ))
                    }
                }
            }
        }
    }
    check(inconclusive == 0, || format!("{inconclusive} equal pairs hit the search budget"))?;
    Ok(format!(
        "{types} types, {terms} terms, {pairs_checked} pairs, {equal_pairs} equal, all joined within {deepest} steps"
    ))
}

fn figures() -> Outcome {
    let cases = [
        ("hw<(p /\\ q) \\/ p>", vec![(1, 1), (1, 4), (2, 2), (2, 5), (3, 3), (3, 6)]),
        ("ck2<(q \\/ r) /\\ p, p /\\ (q \\/ p)>", vec![(1, 4), (2, 5), (3, 6)]),
        ("hk1<p \\/ q, (q /\\ p) /\\ r>", vec![(1, 1), (2, 2)]),
    ];
    for (src, expected) in &cases {
        let rel = g_of(&t(src), System::L).map_err(|e| e.to_string())?;
        check(rel.pairs == pairs(expected), || format!("{src} gives {rel}"))?;
    }
    Ok(format!("{} relations match", cases.len()))
}

/// The endpoints of the counterexample family, built from their description.
fn tower_type(n: usize) -> (Formula, Formula) {
    let mut src = f("((p /\\ bot) \\/ top) /\\ bot");
    let mut tgt = f("((p \\/ top) /\\ bot) \\/ top");
    for _ in 0..n {
        src = Formula::conj(Formula::disj(src, Formula::Top), Formula::Bot);
        tgt = Formula::disj(Formula::conj(tgt, Formula::Bot), Formula::Top);
    }
    (src, tgt)
}

fn counterexamples() -> Outcome {
    let p = Formula::letter("p");
    let mut notes = Vec::new();
    for n in 0..=COUNTEREXAMPLE_MAX_N {
        let (fc, gc) = counterexample_pair(n, &p);
        let (src, tgt) = tower_type(n);
        for x in [&fc, &gc] {
            let ty = typecheck(&x.term, System::Ltopbot).map_err(|e| format!("n={n}: {e}"))?;
            check(ty.source == src && ty.target == tgt, || format!("n={n}: type {ty}"))?;
        }
        let (gf, gg) = (g_of(&fc.term, System::Ltopbot).unwrap(), g_of(&gc.term, System::Ltopbot).unwrap());
        check(gf == gg, || format!("n={n}: relations {gf} and {gg}"))?;
        check(!src.is_dnf() && !src.is_bot_normal(), || format!("n={n}: source is normal"))?;
        check(!tgt.is_cnf() && !tgt.is_top_normal(), || format!("n={n}: target is normal"))?;
        let v = decide(&fc.term, &gc.term, System::Ltopbot).unwrap();
        check(v.is_unknown(), || format!("n={n}: decided {v}"))?;
        let r = oracle_equal(
            &fc.term,
            &gc.term,
            System::Ltopbot,
            COUNTEREXAMPLE_DEPTH,
            OracleConfig::default(),
        )
        .unwrap();
        check(r == OracleResult::NotConnectedWithin(COUNTEREXAMPLE_DEPTH), || format!("n={n}: oracle {r:?}"))?;
        notes.push(format!("{}", gf.pairs.len()));
    }
    Ok(format!(
        "n=0..={COUNTEREXAMPLE_MAX_N}: equal relations of size [{}], unknown, apart at depth {COUNTEREXAMPLE_DEPTH}",
        notes.join(",")
    ))
}

/// Size of the pointed set a formula denotes, counted without building it.
fn cardinality(a: &Formula, asg: &Assignment, variant: ModelVariant) -> usize {
    match a {
        Formula::Letter(l) => asg[l].len(),
        Formula::Top => 1,
        Formula::Bot => usize::from(variant == ModelVariant::Star),
        Formula::Conj(x, y) => cardinality(x, asg, variant).saturating_mul(cardinality(y, asg, variant)),
        Formula::Disj(x, y) => match (cardinality(x, asg, variant), cardinality(y, asg, variant)) {
            (0, n) | (n, 0) => n,
            (m, n) => m + n - 1,
        },
    }
}

/// Uniform assignments of every size up to the bound, plus random mixed ones.
fn assignments<R: Rng>(letters: &[Letter], rng: &mut R) -> Vec<Assignment> {
    let make = |sizes: &mut dyn FnMut() -> usize| -> Assignment {
        letters
            .iter()
            .map(|l| (l.clone(), ModelObject::of_size(l.as_str(), sizes())))
            .collect()
    };
    let mut out: Vec<Assignment> = (1..=MAX_MODEL_SET).map(|n| make(&mut || n)).collect();
    for _ in 0..MIXED_ASSIGNMENTS {
        out.push(make(&mut || rng.gen_range(1..=MAX_MODEL_SET)));
    }
    out
}

fn letters_of(x: &Term, y: &Term) -> Vec<Letter> {
    let mut ls = x.letters();
    ls.extend(y.letters());
    ls.sort();
    ls.dedup();
    ls
}

fn separation_and_soundness() -> Outcome {
    let lhs = t("hk1<p,bot>");
    let rhs = t("ckap<p> . hk2<p,bot>");
    for size in 1..=MAX_MODEL_SET {
        let asg = Assignment::from([(Letter::new("p"), ModelObject::of_size("a", size))]);
        let eq = model_equal(&lhs, &rhs, &asg, ModelVariant::StarEmpty).map_err(|e| e.to_string())?;
        check(eq, || format!("the two arrows differ on a set of size {size}"))?;
    }
    let v = decide(&lhs, &rhs, System::Ltopbot).unwrap();
    check(v.is_not_equal(), || format!("decided {v}"))?;

    let insts = criterion_one_instances();
    let mut rng = StdRng::seed_from_u64(SEED + 6);
    let (mut checked, mut skipped) = (0usize, 0usize);
    for (_, inst) in &insts {
        let source = inst.lhs.infer().unwrap().source;
        for asg in assignments(&letters_of(&inst.lhs, &inst.rhs), &mut rng) {
            for variant in ModelVariant::ALL {
                if cardinality(&source, &asg, variant) > MODEL_DOMAIN_LIMIT {
                    skipped += 1;
                    continue;
                }
                for side in [&inst.lhs, &inst.rhs] {
                    let ok = preserves_basepoint(side, &asg, variant).map_err(|e| e.to_string())?;
                    check(ok, || format!("{}: {side} moves the basepoint", inst.schema))?;
                }
                let eq = model_equal(&inst.lhs, &inst.rhs, &asg, variant).map_err(|e| e.to_string())?;
                check(eq, || {
                    format!("{} fails in {}: {} vs {}", inst.schema, variant.name(), inst.lhs, inst.rhs)
                })?;
                checked += 1;
            }
        }
    }
    let per_instance = (MAX_MODEL_SET + MIXED_ASSIGNMENTS) * 2;
    check(skipped * 10 < insts.len() * per_instance, || format!("{skipped} interpretations over the domain limit"))?;
    Ok(format!(
        "separating equation holds in star-empty and is decided not_equal; {} instances sound in {checked} interpretations ({skipped} over {MODEL_DOMAIN_LIMIT} elements skipped)",
        insts.len()
    ))
}

/// Pairs of composition-free terms of one type whose relations differ.
fn distinct_pairs(system: System, types: &[(Formula, Formula)], want: usize) -> Vec<(Term, Term)> {
    let mut prover = Prover::new(system);
    let mut out = Vec::new();
    for (a, b) in types {
        let ts = prover.enumerate(a, b);
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                if g_of(&ts[i], system).unwrap() != g_of(&ts[j], system).unwrap() {
                    out.push((ts[i].clone(), ts[j].clone()));
                }
            }
        }
        if out.len() >= want * 4 {
            break;
        }
    }
    out
}

fn maximality() -> Outcome {
    let types = small_lattice_types(5);
    let lpairs = distinct_pairs(System::L, &types, L_WITNESS_PAIRS);
    check(lpairs.len() >= L_WITNESS_PAIRS, || format!("only {} lattice pairs", lpairs.len()))?;
    let pp = f("p /\\ p");
    let p_or_p = f("p \\/ p");
    let p = f("p");
    let (mut conj_side, mut disj_side) = (0, 0);
    for (x, y) in &lpairs {
        let w = collapse_witness_l(x, y).map_err(|e| format!("{x} vs {y}: {e}"))?;
        let ty0 = typecheck(&w.composites.0, System::L).map_err(|e| e.to_string())?;
        let ty1 = typecheck(&w.composites.1, System::L).map_err(|e| e.to_string())?;
        check(ty0 == ty1, || format!("{x} vs {y}: composites of types {ty0} and {ty1}"))?;
        let g0 = g_of(&w.composites.0, System::L).unwrap().pairs;
        let g1 = g_of(&w.composites.1, System::L).unwrap().pairs;
        if ty0.source == pp && ty0.target == p {
            check(g0 == pairs(&[(1, 1)]) && g1 == pairs(&[(2, 1)]), || format!("{x} vs {y}: {g0:?} {g1:?}"))?;
            conj_side += 1;
        } else if ty0.source == p && ty0.target == p_or_p {
            check(g0 == pairs(&[(1, 1)]) && g1 == pairs(&[(1, 2)]), || format!("{x} vs {y}: {g0:?} {g1:?}"))?;
            disj_side += 1;
        } else {
            return Err(format!("{x} vs {y}: composites have type {ty0}"));
        }
    }

    let dtypes: Vec<(Formula, Formula)> = [
        ("p /\\ p", "p"),
        ("p", "p \\/ p"),
        ("p /\\ bot", "p \\/ top"),
        ("(p /\\ top) /\\ p", "p \\/ bot"),
        ("p /\\ (p \\/ bot)", "(p /\\ top) \\/ p"),
        ("(p \\/ p) /\\ p", "p \\/ (top /\\ p)"),
        ("p /\\ p", "p \\/ p"),
    ]
    .iter()
    .map(|(a, b)| (f(a), f(b)))
    .collect();
    let dpairs = distinct_pairs(System::Ltopbot, &dtypes, DICART_WITNESS_PAIRS);
    check(dpairs.len() >= DICART_WITNESS_PAIRS, || format!("only {} dicartesian pairs", dpairs.len()))?;
    let (src, tgt) = (f("p /\\ bot"), f("p \\/ top"));
    for (x, y) in &dpairs {
        let w = collapse_witness_dicart(x, y, false).map_err(|e| format!("{x} vs {y}: {e}"))?;
        for c in [&w.composites.0, &w.composites.1] {
            let ty = typecheck(c, System::Ltopbot).map_err(|e| e.to_string())?;
            check(ty.source == src && ty.target == tgt, || format!("{x} vs {y}: composite type {ty}"))?;
        }
        let g0 = g_of(&w.composites.0, System::Ltopbot).unwrap().pairs;
        let g1 = g_of(&w.composites.1, System::Ltopbot).unwrap().pairs;
        check(g0 == pairs(&[(1, 1)]) && g1.is_empty(), || format!("{x} vs {y}: {g0:?} {g1:?}"))?;
    }
    Ok(format!(
        "{} lattice pairs ({conj_side} on p/\\p |- p, {disj_side} on p |- p\\/p), {} dicartesian pairs",
        lpairs.len(),
        dpairs.len()
    ))
}

/// Random `dnf |- cnf` pairs with the same nonempty relation: a random term
/// against its composition-free form or a random composition-free term of
/// its type.
struct RestrictedPairs {
    rng: StdRng,
    prover: Prover,
    seen: BTreeSet<(Term, Term)>,
}

impl RestrictedPairs {
    fn new() -> Self {
        RestrictedPairs {
            rng: StdRng::seed_from_u64(SEED + 8),
            prover: Prover::new(System::Ltopbot),
            seen: BTreeSet::new(),
        }
    }
}

impl Iterator for RestrictedPairs {
    type Item = (Term, Term);

    fn next(&mut self) -> Option<(Term, Term)> {
        let cfg = SampleConfig::new(System::Ltopbot).letters(2).max_leaves(4);
        loop {
            let term = TermSampler::new(&mut self.rng, cfg, Style::Mixed).term(4);
            let ty = term.infer().unwrap();
            if !ty.source.is_dnf() || !ty.target.is_cnf() || term.size() > RESTRICTED_MAX_NODES {
                continue;
            }
            let rel = g_of(&term, System::Ltopbot).unwrap();
            if rel.is_empty() {
                continue;
            }
            let mut candidates: Vec<Term> = Vec::new();
            if let Ok((nf, _)) = normalize(&term, System::Ltopbot) {
                candidates.push(nf);
            }
            for _ in 0..RESTRICTED_SYNTHESIS_TRIES {
                if let Some(x) = self.prover.synthesize(&mut self.rng, &ty.source, &ty.target) {
                    if g_of(&x, System::Ltopbot).unwrap() == rel {
                        candidates.push(x);
                    }
                }
            }
            candidates.retain(|x| *x != term);
            if candidates.is_empty() {
                continue;
            }
            let other = candidates.swap_remove(self.rng.gen_range(0..candidates.len()));
            if self.seen.insert((term.clone(), other.clone())) {
                return Some((term, other));
            }
        }
    }
}

fn restricted_coherence() -> Outcome {
    let config = OracleConfig {
        max_visited: RESTRICTED_VISIT_LIMIT,
        ..OracleConfig::default()
    };
    let (mut examined, mut joined, mut deepest) = (0, 0, 0);
    let mut capped = Vec::new();
    for (x, y) in RestrictedPairs::new() {
        if joined >= RESTRICTED_PAIRS || examined >= RESTRICTED_MAX_EXAMINED {
            break;
        }
        examined += 1;
        let v = decide(&x, &y, System::Ltopbot).unwrap();
        check(v.is_equal(), || format!("{x} and {y}: {v}"))?;
        match oracle_equal(&x, &y, System::Ltopbot, RESTRICTED_DEPTH, config).unwrap() {
            OracleResult::ConnectedWithin(d) => {
                joined += 1;
                deepest = deepest.max(d);
            }
            OracleResult::CapExceeded { .. } => capped.push(format!("{x} ~ {y}")),
            OracleResult::NotConnectedWithin(d) => {
                return Err(format!("{x} and {y} are decided equal but apart within {d}"))
            }
        }
    }
    check(joined >= RESTRICTED_PAIRS, || {
        format!("only {joined} of {examined} pairs confirmed, {} at the search budget", capped.len())
    })?;
    Ok(format!(
        "{examined} pairs decided equal; oracle joined {joined} within {deepest} steps; \
         {} hit the budget of {RESTRICTED_VISIT_LIMIT} terms (not disproofs), e.g. {}",
        capped.len(),
        capped.first().map_or("none", String::as_str)
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 relation functoriality on axiom instances", functoriality),
        ("2 composition elimination", elimination),
        ("3 lattice coherence against bounded search", lattice_cross_check),
        ("4 relation figures", figures),
        ("5 counterexample family", counterexamples),
        ("6 separation in pointed sets and model soundness", separation_and_soundness),
        ("7 maximality witnesses", maximality),
        ("8 restricted coherence", restricted_coherence),
    ];
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filters.is_empty() && !filters.iter().any(|f| name.starts_with(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("no criterion failed");
}
