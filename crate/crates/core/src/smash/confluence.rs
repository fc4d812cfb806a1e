//! Local confluence of the rewriting system: every overlap or inclusion of two
//! left-hand sides is rewritten both ways and the normal forms compared.

use serde::{Deserialize, Serialize};

use crate::smash::element::SmashElement;
use crate::smash::presentation::{PresentedAlgebra, Rule};
use crate::smash::word::Word;

/// An ambiguity whose two resolutions have different normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfluenceReport {
    pub degree_bound: usize,
    pub ambiguities_checked: usize,
    pub divergences: Vec<Divergence>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.divergences.is_empty()
    }
}

fn apply(alg: &PresentedAlgebra, w: &Word, rule: &Rule, pos: usize) -> SmashElement {
    let e = alg.group().identity();
    let mut out = SmashElement::zero();
    for (r, c) in &rule.rhs {
        out.add_assign(&alg.normal_monomial(&w.splice(pos, rule.lhs.len(), r), &e, c));
    }
    out
}

pub(crate) fn check_local_confluence(alg: &PresentedAlgebra, bound: usize) -> ConfluenceReport {
    let rules = alg.rules();
    let mut report = ConfluenceReport { degree_bound: bound, ..Default::default() };
    let mut ambiguities: Vec<(Word, usize, usize, usize, usize)> = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        for (j, rj) in rules.iter().enumerate() {
            let (li, lj) = (&ri.lhs.0, &rj.lhs.0);
            // proper overlaps: suffix of li equals prefix of lj
            for k in 1..li.len().min(lj.len()) {
                if li[li.len() - k..] == lj[..k] {
                    let w = Word(li.iter().chain(&lj[k..]).copied().collect());
                    if w.len() <= bound {
                        ambiguities.push((w, i, 0, j, li.len() - k));
                    }
                }
            }
            // inclusions: lj inside li
            if i != j && lj.len() <= li.len() && li.len() <= bound {
                for p in ri.lhs.occurrences(&rj.lhs) {
                    ambiguities.push((ri.lhs.clone(), i, 0, j, p));
                }
            }
        }
    }
    let gamma = alg.group();
    for (w, i, pi, j, pj) in ambiguities {
        report.ambiguities_checked += 1;
        let left = apply(alg, &w, &rules[i], pi);
        let right = apply(alg, &w, &rules[j], pj);
        if left != right {
            report.divergences.push(Divergence {
                word: w.to_string(),
                left: left.format(gamma),
                right: right.format(gamma),
            });
        }
    }
    report
}
