use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::cyclotomic::CycloNumber;
use crate::group::{AbelianGroup, GroupElement};
use crate::smash::word::Word;

/// A PBW-style monomial `x^w · g` of the smash product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub word: Word,
    pub group: GroupElement,
}

impl Monomial {
    pub fn new(word: Word, group: GroupElement) -> Monomial {
        Monomial { word, group }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn format(&self, gamma: &AbelianGroup) -> String {
        match (self.word.is_empty(), self.group.is_identity()) {
            (true, _) => gamma.format_element(&self.group),
            (false, true) => self.word.to_string(),
            (false, false) => format!("{}·{}", self.word, gamma.format_element(&self.group)),
        }
    }
}

/// Finitely supported linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmashElement {
    terms: BTreeMap<Monomial, CycloNumber>,
}

impl SmashElement {
    pub fn zero() -> SmashElement {
        SmashElement::default()
    }

    pub fn monomial(m: Monomial, coeff: CycloNumber) -> SmashElement {
        let mut e = SmashElement::zero();
        e.add_term(m, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&CycloNumber> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: CycloNumber) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SmashElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &SmashElement, s: &CycloNumber) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn sub(&self, other: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &CycloNumber) -> SmashElement {
        let mut out = SmashElement::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// If `self = c · m`, returns `(m, c)`.
    pub fn as_single_term(&self) -> Option<(&Monomial, &CycloNumber)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn format(&self, gamma: &AbelianGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.format(gamma)
                } else {
                    format!("({c})·{}", m.format(gamma))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(Monomial, CycloNumber)> for SmashElement {
    fn from_iter<I: IntoIterator<Item = (Monomial, CycloNumber)>>(iter: I) -> SmashElement {
        let mut e = SmashElement::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

/// Element of a tensor power `A^{⊗n}`, keyed by one monomial per leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, CycloNumber>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Tensor {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, legs: Vec<Monomial>, coeff: CycloNumber) {
        debug_assert_eq!(legs.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `coeff · (e_1 ⊗ ... ⊗ e_n)`.
    pub fn add_product(&mut self, legs: &[&SmashElement], coeff: &CycloNumber) {
        debug_assert_eq!(legs.len(), self.arity);
        let mut partial: Vec<(Vec<Monomial>, CycloNumber)> = vec![(Vec::new(), coeff.clone())];
        for leg in legs {
            let mut next = Vec::with_capacity(partial.len() * leg.len());
            for (ms, c) in &partial {
                for (m, d) in leg.terms() {
                    let mut ms2 = ms.clone();
                    ms2.push(m.clone());
                    next.push((ms2, c * d));
                }
            }
            partial = next;
        }
        for (ms, c) in partial {
            self.add_term(ms, c);
        }
    }

    pub fn format(&self, gamma: &AbelianGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let body = legs.iter().map(|m| m.format(gamma)).collect::<Vec<_>>().join(" ⊗ ");
                if c.is_one() {
                    body
                } else {
                    format!("({c})·{body}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
