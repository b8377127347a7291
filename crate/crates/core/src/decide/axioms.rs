use rand::Rng;

use crate::formulas::{Formula, Side};
use crate::sample::{SampleConfig, Style, TermSampler};
use crate::terms::{dualize_term, System, Term};

/// One instance of an equation schema.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomInstance {
    pub schema: &'static str,
    pub lhs: Term,
    pub rhs: Term,
}

/// Schemas stated directly, paired with the name of their mirror image.
const SCHEMAS: &[(&str, &str)] = &[
    ("cat1", "cat1"),
    ("cat2", "cat2"),
    ("xi1-conj", "xi1-disj"),
    ("xi2-conj", "xi2-disj"),
    ("hw-nat", "cw-nat"),
    ("hk-nat", "ck-nat"),
    ("hw-hk", "cw-ck"),
    ("hw-hk-hk", "cw-ck-ck"),
    ("HK1", "CK1"),
    ("HK2", "CK2"),
    ("HK3", "CK3"),
    ("HK4", "CK4"),
    ("HK5", "CK5"),
    ("HKCK", "HKCK"),
    ("hkappa", "ckappa"),
    ("hk-bot", "ck-top"),
    ("HK-bot", "CK-top"),
];

/// Whether a directly stated schema belongs to the theory of `system`.
fn hat_schema_in(name: &str, system: System) -> bool {
    match name {
        "hkappa" => system.allows_top(),
        "hk-bot" | "HK-bot" => system.allows_bot() && system != System::Bicart,
        _ => true,
    }
}

/// Names of every schema of the equational theory of `system`.
pub fn schemas_for(system: System) -> Vec<&'static str> {
    let mut out = Vec::new();
    for &(hat, check) in SCHEMAS {
        if hat_schema_in(hat, system) {
            out.push(hat);
        }
        if check != hat && hat_schema_in(hat, system.dual()) {
            out.push(check);
        }
    }
    out
}

/// One random instance of every schema of `system`. Mirror-image schemas are
/// instantiated in the dual system and dualized.
pub fn axiom_instances<R: Rng>(system: System, cfg: &SampleConfig, rng: &mut R) -> Vec<AxiomInstance> {
    let mut out = Vec::new();
    for &(hat, check) in SCHEMAS {
        if hat_schema_in(hat, system) {
            let mut sampler = TermSampler::new(rng, SampleConfig { system, ..*cfg }, Style::Mixed);
            let (lhs, rhs) = instantiate(hat, &mut sampler);
            out.push(AxiomInstance { schema: hat, lhs, rhs });
        }
        if check != hat && hat_schema_in(hat, system.dual()) {
            let mut sampler = TermSampler::new(rng, SampleConfig { system: system.dual(), ..*cfg }, Style::Mixed);
            let (lhs, rhs) = instantiate(hat, &mut sampler);
            out.push(AxiomInstance {
                schema: check,
                lhs: dualize_term(&lhs),
                rhs: dualize_term(&rhs),
            });
        }
    }
    out
}

const BUDGET: usize = 4;

fn side<R: Rng>(s: &mut TermSampler<'_, R>) -> Side {
    if s.rng.gen_bool(0.5) {
        Side::Left
    } else {
        Side::Right
    }
}

fn target(t: &Term) -> Formula {
    t.infer().expect("sampled terms are typed").target
}

fn instantiate<R: Rng>(name: &str, s: &mut TermSampler<'_, R>) -> (Term, Term) {
    let id = Term::Id;
    let comp = Term::comp;
    match name {
        "cat1" => {
            let a = s.formula();
            let f = s.term_from(&a, BUDGET);
            if s.rng.gen_bool(0.5) {
                (comp(f.clone(), id(a)), f)
            } else {
                (comp(id(target(&f)), f.clone()), f)
            }
        }
        "cat2" => {
            let a = s.formula();
            let f = s.term_from(&a, BUDGET);
            let g = s.term_from(&target(&f), BUDGET);
            let h = s.term_from(&target(&g), BUDGET);
            (
                comp(h.clone(), comp(g.clone(), f.clone())),
                comp(comp(h, g), f),
            )
        }
        "xi1-conj" => {
            let (a, b) = (s.formula(), s.formula());
            (Term::conj(id(a.clone()), id(b.clone())), id(Formula::conj(a, b)))
        }
        "xi2-conj" => {
            let (a1, a2) = (s.formula(), s.formula());
            let f1 = s.term_from(&a1, BUDGET);
            let f2 = s.term_from(&a2, BUDGET);
            let g1 = s.term_from(&target(&f1), BUDGET);
            let g2 = s.term_from(&target(&f2), BUDGET);
            (
                Term::conj(comp(g1.clone(), f1.clone()), comp(g2.clone(), f2.clone())),
                comp(Term::conj(g1, g2), Term::conj(f1, f2)),
            )
        }
        "hw-nat" => {
            let a = s.formula();
            let f = s.term_from(&a, BUDGET);
            (
                comp(Term::conj(f.clone(), f.clone()), Term::Hw(a)),
                comp(Term::Hw(target(&f)), f),
            )
        }
        "hk-nat" => {
            let (a1, a2) = (s.formula(), s.formula());
            let f1 = s.term_from(&a1, BUDGET);
            let f2 = s.term_from(&a2, BUDGET);
            let i = side(s);
            let (b1, b2) = (target(&f1), target(&f2));
            (
                comp(i.pick(&f1, &f2).clone(), Term::Hk(i, a1, a2)),
                comp(Term::Hk(i, b1, b2), Term::conj(f1, f2)),
            )
        }
        "hw-hk" => {
            let a = s.formula();
            let i = side(s);
            (comp(Term::Hk(i, a.clone(), a.clone()), Term::Hw(a.clone())), id(a))
        }
        "hw-hk-hk" => {
            let (a, b) = (s.formula(), s.formula());
            let ab = Formula::conj(a.clone(), b.clone());
            (
                comp(
                    Term::conj(Term::Hk(Side::Left, a.clone(), b.clone()), Term::Hk(Side::Right, a, b)),
                    Term::Hw(ab.clone()),
                ),
                id(ab),
            )
        }
        "HK1" => {
            let x = s.formula();
            let f = s.term_from(&x, BUDGET);
            let g = s.term_from(&target(&f), BUDGET);
            let other = s.formula();
            let i = side(s);
            (
                comp(g.clone(), Term::hproj(i, other.clone(), f.clone())),
                Term::hproj(i, other, comp(g, f)),
            )
        }
        "HK2" => {
            let c = s.formula();
            let f1 = s.term_from(&c, BUDGET);
            let f2 = s.term_from(&c, BUDGET);
            let i = side(s);
            let (kept, other) = (i.pick(&f1, &f2).clone(), i.pick(&f2, &f1).clone());
            let g = s.term_from(&target(&kept), BUDGET);
            (
                comp(Term::hproj(i, target(&other), g.clone()), Term::pair(f1, f2)),
                comp(g, kept),
            )
        }
        "HK3" => {
            let a = s.formula();
            let f = s.term_from(&a, BUDGET);
            let g1 = s.term_from(&target(&f), BUDGET);
            let g2 = s.term_from(&target(&f), BUDGET);
            (
                comp(Term::pair(g1.clone(), g2.clone()), f.clone()),
                Term::pair(comp(g1, f.clone()), comp(g2, f)),
            )
        }
        "HK4" => {
            let (a, b) = (s.formula(), s.formula());
            (
                id(Formula::conj(a.clone(), b.clone())),
                Term::pair(
                    Term::hproj(Side::Left, b.clone(), id(a.clone())),
                    Term::hproj(Side::Right, a, id(b)),
                ),
            )
        }
        "HK5" => {
            let c = s.formula();
            let f1 = s.term_from(&c, BUDGET);
            let f2 = s.term_from(&c, BUDGET);
            let d = s.formula();
            let i = side(s);
            (
                Term::hproj(i, d.clone(), Term::pair(f1.clone(), f2.clone())),
                Term::pair(Term::hproj(i, d.clone(), f1), Term::hproj(i, d, f2)),
            )
        }
        "HKCK" => {
            let x = s.formula();
            let h = s.term_from(&x, BUDGET);
            let (c, d) = (s.formula(), s.formula());
            let (i, j) = (side(s), side(s));
            (
                Term::hproj(i, c.clone(), Term::cinj(j, d.clone(), h.clone())),
                Term::cinj(j, d, Term::hproj(i, c, h)),
            )
        }
        "hkappa" => {
            let a = s.formula();
            let t = s.term_from(&a, BUDGET);
            let h = s
                .synthesize(&target(&t), &Formula::Top)
                .expect("every formula reaches top");
            (comp(h, t), Term::Hkappa(a))
        }
        "hk-bot" => (
            Term::Hk(Side::Left, Formula::Bot, Formula::Bot),
            Term::Hk(Side::Right, Formula::Bot, Formula::Bot),
        ),
        "HK-bot" => (
            Term::hproj(Side::Left, Formula::Bot, id(Formula::Bot)),
            Term::hproj(Side::Right, Formula::Bot, id(Formula::Bot)),
        ),
        other => unreachable!("unknown schema {other}"),
    }
}
