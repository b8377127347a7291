//! Relations between letter occurrences and the functor sending each proof
//! term to the relation linking the occurrences it identifies.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::formulas::{Connective, Formula, Side};
use crate::terms::{typecheck, System, Term, TypeError};

/// A set of pairs `(j, k)` of 1-based occurrence indices, typed by a source
/// and a target formula.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OccurrenceRelation {
    pub source: Formula,
    pub target: Formula,
    pub pairs: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelError {
    #[error("cannot compose: {left} is not {right}")]
    TypeMismatch { left: Formula, right: Formula },
    #[error(transparent)]
    Type(#[from] TypeError),
}

impl OccurrenceRelation {
    pub fn new(source: Formula, target: Formula, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        OccurrenceRelation {
            source,
            target,
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn empty(source: Formula, target: Formula) -> Self {
        OccurrenceRelation::new(source, target, [])
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs flipped, endpoints swapped and dualized, matching the image of
    /// the dual term.
    pub fn converse_dual(&self) -> OccurrenceRelation {
        OccurrenceRelation::new(
            self.target.dual(),
            self.source.dual(),
            self.pairs.iter().map(|&(j, k)| (k, j)),
        )
    }

    /// Every pair links occurrences of one and the same letter.
    pub fn is_letter_consistent(&self) -> bool {
        let src = self.source.occurrences();
        let tgt = self.target.occurrences();
        self.pairs.iter().all(|&(j, k)| {
            j >= 1 && k >= 1 && j <= src.len() && k <= tgt.len() && src[j - 1].1 == tgt[k - 1].1
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "source": self.source.to_string(),
            "target": self.target.to_string(),
            "pairs": self.pairs.iter().map(|&(j, k)| [j, k]).collect::<Vec<_>>(),
        })
    }

    /// Bipartite digraph with source occurrences on the top rank and target
    /// occurrences on the bottom rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        let row = |prefix: &str, formula: &Formula| {
            let nodes: Vec<String> = formula
                .occurrences()
                .into_iter()
                .map(|(i, l)| format!("{prefix}{i} [label=\"{l}\"];"))
                .collect();
            let names: Vec<String> = (1..=formula.occ_count()).map(|i| format!("{prefix}{i}")).collect();
            (nodes, names)
        };
        for (prefix, formula, rank) in [("s", &self.source, "min"), ("t", &self.target, "max")] {
            let (nodes, names) = row(prefix, formula);
            out.push_str(&format!("  subgraph {prefix} {{\n    rank={rank};\n"));
            for n in nodes {
                out.push_str(&format!("    {n}\n"));
            }
            if names.len() > 1 {
                out.push_str(&format!("    {} [style=invis];\n", names.join(" -> ")));
            }
            out.push_str("  }\n");
        }
        for (j, k) in &self.pairs {
            out.push_str(&format!("  s{j} -> t{k} [dir=none];\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for OccurrenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|(j, k)| format!("({j},{k})")).collect();
        write!(f, "{{{}}} : {} |- {}", pairs.join(","), self.source, self.target)
    }
}

pub fn rel_identity(a: &Formula) -> OccurrenceRelation {
    OccurrenceRelation::new(a.clone(), a.clone(), (1..=a.occ_count()).map(|j| (j, j)))
}

/// `r1` followed by `r2`.
pub fn rel_compose(r1: &OccurrenceRelation, r2: &OccurrenceRelation) -> Result<OccurrenceRelation, RelError> {
    if r1.target != r2.source {
        return Err(RelError::TypeMismatch {
            left: r1.target.clone(),
            right: r2.source.clone(),
        });
    }
    let mut by_middle: Vec<Vec<usize>> = vec![Vec::new(); r1.target.occ_count() + 1];
    for &(z, y) in &r2.pairs {
        by_middle[z].push(y);
    }
    let pairs = r1
        .pairs
        .iter()
        .flat_map(|&(x, z)| by_middle[z].iter().map(move |&y| (x, y)));
    Ok(OccurrenceRelation::new(r1.source.clone(), r2.target.clone(), pairs))
}

pub fn rel_xi(r1: &OccurrenceRelation, r2: &OccurrenceRelation, conn: Connective) -> OccurrenceRelation {
    let (da, db) = (r1.source.occ_count(), r1.target.occ_count());
    OccurrenceRelation::new(
        Formula::binary(conn, r1.source.clone(), r2.source.clone()),
        Formula::binary(conn, r1.target.clone(), r2.target.clone()),
        r1.pairs
            .iter()
            .copied()
            .chain(r2.pairs.iter().map(|&(j, k)| (j + da, k + db))),
    )
}

/// Image of a term under the occurrence-relation functor, after checking it
/// in `system`.
pub fn g_of(term: &Term, system: System) -> Result<OccurrenceRelation, RelError> {
    typecheck(term, system)?;
    image(term)
}

/// Image of a term without the system membership check.
pub fn image(t: &Term) -> Result<OccurrenceRelation, RelError> {
    Ok(match t {
        Term::Id(a) => rel_identity(a),
        Term::Hw(a) => {
            let n = a.occ_count();
            OccurrenceRelation::new(
                a.clone(),
                Formula::conj(a.clone(), a.clone()),
                (1..=n).flat_map(|j| [(j, j), (j, j + n)]),
            )
        }
        Term::Cw(a) => {
            let n = a.occ_count();
            OccurrenceRelation::new(
                Formula::disj(a.clone(), a.clone()),
                a.clone(),
                (1..=n).flat_map(|j| [(j, j), (j + n, j)]),
            )
        }
        Term::Hk(i, a1, a2) => {
            let shift = if *i == Side::Left { 0 } else { a1.occ_count() };
            let kept = i.pick(a1, a2);
            OccurrenceRelation::new(
                Formula::conj(a1.clone(), a2.clone()),
                kept.clone(),
                (1..=kept.occ_count()).map(|j| (j + shift, j)),
            )
        }
        Term::Ck(i, a1, a2) => {
            let shift = if *i == Side::Left { 0 } else { a1.occ_count() };
            let kept = i.pick(a1, a2);
            OccurrenceRelation::new(
                kept.clone(),
                Formula::disj(a1.clone(), a2.clone()),
                (1..=kept.occ_count()).map(|j| (j, j + shift)),
            )
        }
        Term::Hkappa(a) => OccurrenceRelation::empty(a.clone(), Formula::Top),
        Term::Ckappa(a) => OccurrenceRelation::empty(Formula::Bot, a.clone()),
        Term::Comp(g, f) => rel_compose(&image(f)?, &image(g)?)?,
        Term::Conj(f1, f2) => rel_xi(&image(f1)?, &image(f2)?, Connective::Conj),
        Term::Disj(f1, f2) => rel_xi(&image(f1)?, &image(f2)?, Connective::Disj),
        Term::Pair(f1, f2) => {
            let (r1, r2) = (image(f1)?, image(f2)?);
            if r1.source != r2.source {
                return Err(TypeError::EndpointMismatch {
                    expected: r1.source,
                    found: r2.source,
                }
                .into());
            }
            let shift = r1.target.occ_count();
            OccurrenceRelation::new(
                r1.source.clone(),
                Formula::conj(r1.target.clone(), r2.target.clone()),
                r1.pairs.iter().copied().chain(r2.pairs.iter().map(|&(j, k)| (j, k + shift))),
            )
        }
        Term::Copair(g1, g2) => {
            let (r1, r2) = (image(g1)?, image(g2)?);
            if r1.target != r2.target {
                return Err(TypeError::EndpointMismatch {
                    expected: r1.target,
                    found: r2.target,
                }
                .into());
            }
            let shift = r1.source.occ_count();
            OccurrenceRelation::new(
                Formula::disj(r1.source.clone(), r2.source.clone()),
                r1.target.clone(),
                r1.pairs.iter().copied().chain(r2.pairs.iter().map(|&(j, k)| (j + shift, k))),
            )
        }
        Term::HProj(i, other, g) => {
            let r = image(g)?;
            let (source, shift) = match i {
                Side::Left => (Formula::conj(r.source.clone(), other.clone()), 0),
                Side::Right => (Formula::conj(other.clone(), r.source.clone()), other.occ_count()),
            };
            OccurrenceRelation::new(source, r.target.clone(), r.pairs.iter().map(|&(j, k)| (j + shift, k)))
        }
        Term::CInj(i, other, f) => {
            let r = image(f)?;
            let (target, shift) = match i {
                Side::Left => (Formula::disj(r.target.clone(), other.clone()), 0),
                Side::Right => (Formula::disj(other.clone(), r.target.clone()), other.occ_count()),
            };
            OccurrenceRelation::new(r.source.clone(), target, r.pairs.iter().map(|&(j, k)| (j, k + shift)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_term};
    use crate::terms::{dualize_term, to_arrow, to_gentzen};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn img(s: &str) -> BTreeSet<(usize, usize)> {
        g_of(&parse_term(s).unwrap(), System::Ltopbot).unwrap().pairs
    }

    fn set(v: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        v.iter().copied().collect()
    }

    #[test]
    fn identities() {
        assert_eq!(rel_identity(&f("p/\\q")).pairs, set(&[(1, 1), (2, 2)]));
        assert!(rel_identity(&Formula::Bot).is_empty());
        assert_eq!(rel_identity(&f("(p/\\q)\\/p")).pairs, set(&[(1, 1), (2, 2), (3, 3)]));
    }

    #[test]
    fn composition() {
        let w = g_of(&parse_term("hw<p>").unwrap(), System::L).unwrap();
        let k = g_of(&parse_term("hk1<p,p>").unwrap(), System::L).unwrap();
        assert_eq!(w.pairs, set(&[(1, 1), (1, 2)]));
        assert_eq!(rel_compose(&w, &k).unwrap().pairs, set(&[(1, 1)]));
        assert_eq!(rel_compose(&w, &rel_identity(&w.target)).unwrap(), w);
        let to_top = OccurrenceRelation::empty(f("p"), Formula::Top);
        assert!(rel_compose(&rel_identity(&f("p")), &to_top).unwrap().is_empty());
        assert!(rel_compose(&w, &w).is_err());
    }

    #[test]
    fn xi_shifts_the_second_relation() {
        let r = rel_xi(&rel_identity(&f("p")), &rel_identity(&f("q")), Connective::Conj);
        assert_eq!(r.pairs, set(&[(1, 1), (2, 2)]));
        let r = rel_xi(
            &rel_identity(&f("p")),
            &OccurrenceRelation::empty(Formula::Bot, f("q")),
            Connective::Disj,
        );
        assert_eq!((r.pairs, r.source, r.target), (set(&[(1, 1)]), f("p\\/bot"), f("p\\/q")));
        let r = rel_xi(
            &OccurrenceRelation::empty(f("q"), Formula::Top),
            &rel_identity(&f("p")),
            Connective::Conj,
        );
        assert_eq!((r.pairs, r.target), (set(&[(2, 1)]), f("top/\\p")));
    }

    #[test]
    fn primitive_images() {
        assert_eq!(
            img("hw<(p/\\q)\\/p>"),
            set(&[(1, 1), (1, 4), (2, 2), (2, 5), (3, 3), (3, 6)])
        );
        assert_eq!(img("ck2<(q\\/r)/\\p, p/\\(q\\/p)>"), set(&[(1, 4), (2, 5), (3, 6)]));
        assert_eq!(img("hk1<p\\/q, (q/\\p)/\\r>"), set(&[(1, 1), (2, 2)]));
        assert!(img("hkap<p/\\q>").is_empty());
    }

    #[test]
    fn gentzen_images_match_expansions() {
        for s in [
            "pair(HK2<p>(id<q>), HK1<q>(id<p>))",
            "copair(CK2<q>(id<p>), CK1<p>(id<q>))",
            "HK2<p \\/ q>(CK1<r>(id<s>))",
            "CK2<p>(HK1<q>(pair(id<p>, id<p>)))",
        ] {
            let t = parse_term(s).unwrap();
            let arrow = to_arrow(&t).unwrap();
            assert_eq!(image(&t).unwrap(), image(&arrow).unwrap(), "{s}");
            assert_eq!(image(&to_gentzen(&arrow).unwrap()).unwrap(), image(&t).unwrap());
        }
    }

    #[test]
    fn dual_image_is_converse() {
        let t = parse_term("(hk2<p,q> \\/ ck1<r,p>) . cw<(p/\\q)\\/r>").unwrap();
        let r = image(&t).unwrap();
        assert_eq!(image(&dualize_term(&t)).unwrap(), r.converse_dual());
    }

    #[test]
    fn dot_output_lists_every_occurrence() {
        let dot = g_of(&parse_term("id<p>").unwrap(), System::L).unwrap().to_dot();
        assert!(dot.contains("s1 [label=\"p\"]"));
        assert!(dot.contains("t1 [label=\"p\"]"));
        assert_eq!(dot.matches("->").count(), 1);
    }
}
