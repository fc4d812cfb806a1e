use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rand::Rng;

use crate::cyclotomic::CycloNumber;
use crate::datum::CartanDatum;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Character, GroupElement};
use crate::smash::confluence::{check_local_confluence, ConfluenceReport};
use crate::smash::element::{Monomial, SmashElement};
use crate::smash::word::Word;

/// Default bound on the total `x`-degree of every symbolic computation.
pub const DEFAULT_DEGREE_BOUND: usize = 4;

/// A relation `lhs = Σ c_w w` as supplied by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Vec<(Word, CycloNumber)>,
}

/// A relation oriented so that every word on the right is smaller than `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, CycloNumber)>,
}

type NormalForm = Arc<[(Word, CycloNumber)]>;

/// The braided Hopf algebra `R` (generators graded by `Γ` and acted on by characters),
/// together with the rewriting system that presents it.
#[derive(Debug)]
pub struct PresentedAlgebra {
    group: AbelianGroup,
    degrees: Vec<GroupElement>,
    actions: Vec<Character>,
    rules: Vec<Rule>,
    order: u32,
    degree_bound: usize,
    confluence: ConfluenceReport,
    cache: RwLock<HashMap<Word, NormalForm>>,
}

impl PresentedAlgebra {
    /// Builds the algebra, orienting and validating every relation, then checks local
    /// confluence up to `degree_bound`.
    pub fn new(
        group: AbelianGroup,
        degrees: Vec<GroupElement>,
        actions: Vec<Character>,
        relations: Vec<Relation>,
        degree_bound: usize,
    ) -> Result<PresentedAlgebra> {
        if degree_bound == 0 {
            return Err(Error::InvalidDatum("degree bound must be at least 1".into()));
        }
        if degrees.len() != actions.len() {
            return Err(Error::InvalidDatum(format!(
                "{} degrees but {} actions",
                degrees.len(),
                actions.len()
            )));
        }
        for g in &degrees {
            group.check_element(g)?;
        }
        for c in &actions {
            group.check_character(c)?;
        }
        let order = group.exponent();
        let mut alg = PresentedAlgebra {
            group,
            degrees,
            actions,
            rules: Vec::new(),
            order,
            degree_bound,
            confluence: ConfluenceReport::default(),
            cache: RwLock::new(HashMap::new()),
        };
        let mut rules = Vec::with_capacity(relations.len());
        for rel in relations {
            rules.push(alg.orient(rel)?);
        }
        alg.rules = rules;
        alg.confluence = check_local_confluence(&alg, degree_bound);
        Ok(alg)
    }

    /// Quantum affine space `x_i x_j = q_ij x_j x_i` (`i < j`, `q_ij = χ_j(g_i)`).
    pub fn quantum_affine(
        group: AbelianGroup,
        degrees: Vec<GroupElement>,
        actions: Vec<Character>,
        degree_bound: usize,
    ) -> Result<PresentedAlgebra> {
        let t = degrees.len();
        let m = group.exponent();
        let mut relations = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                let q = group.eval(&actions[j], &degrees[i])?;
                relations.push(Relation {
                    lhs: Word(vec![i as u16, j as u16]),
                    rhs: vec![(Word(vec![j as u16, i as u16]), q.lift(m)?)],
                });
            }
        }
        PresentedAlgebra::new(group, degrees, actions, relations, degree_bound)
    }

    /// Quantum affine space attached to a datum of type `A_1 x ... x A_1`.
    pub fn from_quantum_affine_datum(d: &CartanDatum, degree_bound: usize) -> Result<PresentedAlgebra> {
        if !d.cartan().is_a1_power() {
            return Err(Error::WrongCartanType);
        }
        PresentedAlgebra::quantum_affine(d.group().clone(), d.degrees().to_vec(), d.characters().to_vec(), degree_bound)
    }

    /// The algebra generated by a datum's `x_i` subject to user relations.
    pub fn from_datum(d: &CartanDatum, relations: Vec<Relation>, degree_bound: usize) -> Result<PresentedAlgebra> {
        PresentedAlgebra::new(d.group().clone(), d.degrees().to_vec(), d.characters().to_vec(), relations, degree_bound)
    }

    fn coerce(&self, c: &CycloNumber) -> Result<CycloNumber> {
        if c.order() == self.order {
            Ok(c.clone())
        } else if self.order.is_multiple_of(c.order()) {
            c.lift(self.order)
        } else {
            Err(Error::InvalidRule(format!(
                "coefficient {c} does not lie in the cyclotomic field of order {}",
                self.order
            )))
        }
    }

    fn orient(&self, rel: Relation) -> Result<Rule> {
        let t = self.generators();
        let mut terms: BTreeMap<Word, CycloNumber> = BTreeMap::new();
        let mut push = |w: Word, c: CycloNumber| {
            let entry = terms.entry(w).or_insert_with(|| CycloNumber::zero(self.order));
            *entry = &*entry + &c;
        };
        push(rel.lhs.clone(), CycloNumber::one(self.order));
        for (w, c) in &rel.rhs {
            push(w.clone(), -&self.coerce(c)?);
        }
        terms.retain(|_, c| !c.is_zero());
        for w in terms.keys() {
            if w.letters().iter().any(|&x| x as usize >= t) {
                return Err(Error::InvalidRule(format!("word {w} uses an undefined generator")));
            }
        }
        let (lead, lead_c) = terms.pop_last().ok_or_else(|| Error::InvalidRule(format!("relation for {} is trivial", rel.lhs)))?;
        let (deg, chi) = (self.word_degree(&lead), self.word_character(&lead));
        for w in terms.keys() {
            if self.word_degree(w) != deg {
                return Err(Error::InvalidRule(format!("relation is not Γ-homogeneous: {lead} vs {w}")));
            }
            if self.word_character(w) != chi {
                return Err(Error::InvalidRule(format!("relation is not χ-equivariant: {lead} vs {w}")));
            }
        }
        let scale = -&lead_c.inverse()?;
        let rhs = terms.into_iter().rev().map(|(w, c)| (w, &c * &scale)).collect();
        Ok(Rule { lhs: lead, rhs })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn generators(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn actions(&self) -> &[Character] {
        &self.actions
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn confluence(&self) -> &ConfluenceReport {
        &self.confluence
    }

    pub fn is_confluent(&self) -> bool {
        self.confluence.is_confluent()
    }

    /// Notes to attach to any verdict computed with this algebra.
    pub fn status_notes(&self) -> Vec<String> {
        let mut notes = vec![format!("checks run up to x-degree {}", self.degree_bound)];
        if !self.is_confluent() {
            notes.push(format!("NonConfluent at bound {}: normal forms may depend on rewrite order", self.degree_bound));
        }
        notes
    }

    pub fn one(&self) -> CycloNumber {
        CycloNumber::one(self.order)
    }

    pub fn root(&self, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(k, self.order)
    }

    /// `Γ`-degree of a word: the product of its letters' degrees.
    pub fn word_degree(&self, w: &Word) -> GroupElement {
        w.letters()
            .iter()
            .fold(self.group.identity(), |acc, &x| self.group.mul(&acc, &self.degrees[x as usize]))
    }

    /// Character by which `Γ` acts on a word.
    pub fn word_character(&self, w: &Word) -> Character {
        w.letters().iter().fold(self.group.trivial_character(), |acc, &x| {
            self.group.char_mul(&acc, &self.actions[x as usize]).expect("validated character")
        })
    }

    /// `k` with `g ▷ x^w = ζ_m^k x^w`.
    pub fn action_exponent(&self, g: &GroupElement, w: &Word) -> i64 {
        w.letters().iter().map(|&x| self.group.pairing(&self.actions[x as usize], g) as i64).sum()
    }

    /// Degree-bound guard shared by every public entry point.
    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.degree_bound {
            return Err(Error::DegreeBoundExceeded { degree, bound: self.degree_bound });
        }
        Ok(())
    }

    fn first_redex(&self, w: &Word) -> Option<(&Rule, usize)> {
        self.rules.iter().find_map(|r| w.find(&r.lhs).map(|p| (r, p)))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.first_redex(w).is_none()
    }

    /// Normal form of a single word, rewriting the largest pending word first.
    pub fn reduce_word(&self, w: &Word) -> NormalForm {
        if let Some(nf) = self.cache.read().unwrap().get(w) {
            return nf.clone();
        }
        let mut pending: BTreeMap<Word, CycloNumber> = BTreeMap::new();
        pending.insert(w.clone(), self.one());
        let mut out: Vec<(Word, CycloNumber)> = Vec::new();
        while let Some((word, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.first_redex(&word) {
                None => out.push((word, c)),
                Some((rule, pos)) => {
                    for (r, rc) in &rule.rhs {
                        let next = word.splice(pos, rule.lhs.len(), r);
                        let entry = pending.entry(next).or_insert_with(|| CycloNumber::zero(self.order));
                        *entry = &*entry + &(&c * rc);
                    }
                }
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        let nf: NormalForm = out.into();
        self.cache.write().unwrap().insert(w.clone(), nf.clone());
        nf
    }

    /// Normal form using a random redex at every step.
    pub fn reduce_word_randomly<R: Rng>(&self, w: &Word, rng: &mut R) -> Vec<(Word, CycloNumber)> {
        let mut pending: Vec<(Word, CycloNumber)> = vec![(w.clone(), self.one())];
        let mut out: BTreeMap<Word, CycloNumber> = BTreeMap::new();
        while !pending.is_empty() {
            let (word, c) = pending.swap_remove(rng.gen_range(0..pending.len()));
            let redexes: Vec<(&Rule, usize)> =
                self.rules.iter().flat_map(|r| word.occurrences(&r.lhs).map(move |p| (r, p))).collect();
            if redexes.is_empty() {
                let e = out.entry(word).or_insert_with(|| CycloNumber::zero(self.order));
                *e = &*e + &c;
                continue;
            }
            let (rule, pos) = redexes[rng.gen_range(0..redexes.len())];
            for (r, rc) in &rule.rhs {
                pending.push((word.splice(pos, rule.lhs.len(), r), &c * rc));
            }
        }
        let mut v: Vec<_> = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.reverse();
        v
    }

    /// `c · x^w · g` written in normal form.
    pub fn normal_monomial(&self, w: &Word, g: &GroupElement, c: &CycloNumber) -> SmashElement {
        self.reduce_word(w)
            .iter()
            .map(|(v, d)| (Monomial::new(v.clone(), g.clone()), c * d))
            .collect()
    }

    /// Rewrites every word of `a` into normal form.
    pub fn normalize(&self, a: &SmashElement) -> Result<SmashElement> {
        self.check_degree(a.max_degree())?;
        if !self.is_confluent() {
            return Err(Error::NonConfluent(self.degree_bound));
        }
        Ok(self.normalize_lenient(a))
    }

    /// Like [`Self::normalize`] but tolerates a non-confluent system.
    pub fn normalize_lenient(&self, a: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for (m, c) in a.terms() {
            out.add_assign(&self.normal_monomial(&m.word, &m.group, c));
        }
        out
    }

    /// Normal words of degree at most `bound`, by degree then monomial order.
    pub fn normal_words(&self, bound: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        let mut all = vec![Word::empty()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &layer {
                for x in 0..self.generators() {
                    let mut v = w.0.clone();
                    v.push(x as u16);
                    let cand = Word(v);
                    // prefixes are normal, so only suffixes can contain a redex
                    if self.rules.iter().all(|r| !cand.0.ends_with(&r.lhs.0)) {
                        next.push(cand);
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    /// All normal monomials `x^w g` with `|w| <= bound`.
    pub fn normal_monomials(&self, bound: usize) -> Result<Vec<Monomial>> {
        let elements = self.group.elements()?;
        Ok(self
            .normal_words(bound)
            .into_iter()
            .flat_map(|w| elements.iter().map(move |g| Monomial::new(w.clone(), g.clone())))
            .collect())
    }
}
