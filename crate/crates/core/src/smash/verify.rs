//! Bounded verification of the Hopf structure and of the `S²`, `φ` and `ψ` identities.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{Character, GroupElement};
use crate::report::{CheckEntry, CheckReport, Status};
use crate::smash::element::{Monomial, SmashElement, Tensor};
use crate::smash::presentation::PresentedAlgebra;
use crate::smash::word::Word;

/// An algebra map `x_i ↦ c_i x_i`, `g ↦ ψ(g) g` with `ψ` a character of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalAutomorphism {
    pub generator_scalars: Vec<CycloNumber>,
    pub group_character: Character,
}

impl DiagonalAutomorphism {
    /// Scalar by which the map multiplies the monomial `x^w g`.
    pub fn scalar(&self, alg: &PresentedAlgebra, m: &Monomial) -> CycloNumber {
        let g = alg.root(alg.group().pairing(&self.group_character, &m.group) as i64);
        m.word
            .letters()
            .iter()
            .fold(g, |acc, &x| &acc * &self.generator_scalars[x as usize])
    }

    pub fn apply(&self, alg: &PresentedAlgebra, a: &SmashElement) -> SmashElement {
        a.terms().map(|(m, c)| (m.clone(), c * &self.scalar(alg, m))).collect()
    }

    /// The map respects every rewrite rule, hence descends to the presented algebra.
    pub fn respects_rules(&self, alg: &PresentedAlgebra) -> bool {
        let e = alg.group().identity();
        alg.rules().iter().all(|r| {
            let s = self.scalar(alg, &Monomial::new(r.lhs.clone(), e.clone()));
            r.rhs.iter().all(|(w, _)| self.scalar(alg, &Monomial::new(w.clone(), e.clone())) == s)
        })
    }

    pub fn is_identity(&self, alg: &PresentedAlgebra) -> bool {
        self.generator_scalars.iter().all(CycloNumber::is_one) && alg.group().is_trivial(&self.group_character)
    }
}

/// Runs `f` on every item, returning the first failure in item order.
fn sweep<T, F>(name: &str, items: &[T], f: F) -> CheckEntry
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let counterexample = items.par_iter().find_map_first(f);
    CheckEntry {
        check: name.into(),
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        cases: items.len(),
        counterexample,
    }
}

fn describe_err(e: Error) -> Option<String> {
    Some(format!("error: {e}"))
}

impl PresentedAlgebra {
    fn tensor_of(&self, e: &SmashElement) -> Tensor {
        let mut t = Tensor::zero(1);
        for (m, c) in e.terms() {
            t.add_term(vec![m.clone()], c.clone());
        }
        t
    }

    fn mismatch(&self, m: &Monomial, lhs: &str, rhs: &str) -> Option<String> {
        Some(format!("{}: {lhs} != {rhs}", m.format(self.group())))
    }

    fn check_coassociative(&self, m: &Monomial) -> Option<String> {
        let run = || -> Result<Option<String>> {
            let d = self.comultiply(&self.monomial_element(m.clone()))?;
            let l = self.comultiply_leg(&d, 0)?;
            let r = self.comultiply_leg(&d, 1)?;
            Ok((l != r).then(|| self.mismatch(m, &l.format(self.group()), &r.format(self.group()))).flatten())
        };
        run().unwrap_or_else(describe_err)
    }

    fn check_counit(&self, m: &Monomial) -> Option<String> {
        let run = || -> Result<Option<String>> {
            let e = self.monomial_element(m.clone());
            let d = self.comultiply(&e)?;
            let expect = self.tensor_of(&e);
            for leg in [0, 1] {
                let got = self.counit_leg(&d, leg);
                if got != expect {
                    return Ok(self.mismatch(m, &got.format(self.group()), &expect.format(self.group())));
                }
            }
            Ok(None)
        };
        run().unwrap_or_else(describe_err)
    }

    fn check_antipode(&self, m: &Monomial, on_left: bool) -> Option<String> {
        let run = || -> Result<Option<String>> {
            let e = self.monomial_element(m.clone());
            let got = self.convolve_with_antipode(&self.comultiply(&e)?, on_left)?;
            let expect = self.unit().scale(&self.counit(&e));
            Ok((got != expect).then(|| self.mismatch(m, &got.format(self.group()), &expect.format(self.group()))).flatten())
        };
        run().unwrap_or_else(describe_err)
    }

    fn check_multiplicative(&self, a: &Monomial, b: &Monomial, deltas: &HashMap<&Monomial, Tensor>) -> Option<String> {
        let run = || -> Result<Option<String>> {
            let delta = |m: &Monomial| -> Result<Tensor> {
                match deltas.get(m) {
                    Some(d) => Ok(d.clone()),
                    None => self.comultiply(&self.monomial_element(m.clone())),
                }
            };
            let ab = self.multiply_monomials(a, b, &self.one());
            self.check_degree(a.degree() + b.degree())?;
            let mut lhs = Tensor::zero(2);
            for (m, c) in ab.terms() {
                for (legs, d) in delta(m)?.terms() {
                    lhs.add_term(legs.clone(), c * d);
                }
            }
            let rhs = self.multiply_tensors(&delta(a)?, &delta(b)?)?;
            if lhs == rhs {
                return Ok(None);
            }
            Ok(Some(format!(
                "({})·({}): Δ(ab) = {} but Δ(a)Δ(b) = {}",
                a.format(self.group()),
                b.format(self.group()),
                lhs.format(self.group()),
                rhs.format(self.group())
            )))
        };
        run().unwrap_or_else(describe_err)
    }

    /// Checks the Hopf algebra axioms on every normal monomial `x^w g` with `|w|` up to the
    /// degree bound, and multiplicativity of `Δ` on every pair of total degree within it.
    pub fn verify_hopf_axioms(&self) -> Result<CheckReport> {
        let bound = self.degree_bound();
        let basis = self.normal_monomials(bound)?;
        let mut report = CheckReport::new("verify-hopf", bound);
        report.notes = self.status_notes();
        report.checks.push(sweep("coassociativity", &basis, |m| self.check_coassociative(m)));
        report.checks.push(sweep("counit", &basis, |m| self.check_counit(m)));
        report.checks.push(sweep("antipode-left", &basis, |m| self.check_antipode(m, true)));
        report.checks.push(sweep("antipode-right", &basis, |m| self.check_antipode(m, false)));
        let pairs: Vec<(&Monomial, &Monomial)> = basis
            .iter()
            .flat_map(|a| basis.iter().filter(move |b| a.degree() + b.degree() <= bound).map(move |b| (a, b)))
            .collect();
        let deltas: HashMap<&Monomial, Tensor> = basis
            .par_iter()
            .map(|m| Ok((m, self.comultiply(&self.monomial_element(m.clone()))?)))
            .collect::<Result<_>>()?;
        report.checks.push(sweep("comultiplication-multiplicative", &pairs, |(a, b)| self.check_multiplicative(a, b, &deltas)));
        Ok(report)
    }

    /// `S_R(r)` for `r ∈ R` homogeneous of degree `g`, read off from `S_A(r) = g^{-1} S_R(r)`.
    pub fn braided_antipode_from_smash(&self, w: &Word) -> Result<SmashElement> {
        let r = self.normal_monomial(w, &self.group().identity(), &self.one());
        let mut out = SmashElement::zero();
        for (m, c) in r.terms() {
            let g = self.word_degree(&m.word);
            let s = self.multiply(&self.group_element(&g), &self.antipode_monomial(m)?)?;
            out.add_scaled(&s, c);
        }
        if out.terms().any(|(m, _)| !m.group.is_identity()) {
            return Err(Error::InvariantViolation(format!("S_R({w}) left R")));
        }
        Ok(out)
    }

    fn braided_antipode_square_from_smash(&self, w: &Word) -> Result<SmashElement> {
        let mut out = SmashElement::zero();
        for (m, c) in self.braided_antipode_from_smash(w)?.terms() {
            out.add_scaled(&self.braided_antipode_from_smash(&m.word)?, c);
        }
        Ok(out)
    }

    fn check_s2(&self, w: &Word) -> Option<String> {
        let run = || -> Result<Option<String>> {
            let e = self.group().identity();
            let r = self.monomial_element(Monomial::new(w.clone(), e));
            let lhs = self.antipode(&self.antipode(&r)?)?;
            let g_inv = self.group().inverse(&self.word_degree(w));
            let rhs = self.act(&g_inv, &self.braided_antipode_square_from_smash(w)?);
            let closed = self.act(&g_inv, &self.braided_antipode(&self.braided_antipode(&r)?)?);
            if lhs != rhs {
                return Ok(Some(format!("{w}: S²(r) = {} but deg(r)⁻¹ ▷ S_R²(r) = {}", lhs.format(self.group()), rhs.format(self.group()))));
            }
            if rhs != closed {
                return Ok(Some(format!("{w}: S_R² from the smash antipode {} differs from the closed form {}", rhs.format(self.group()), closed.format(self.group()))));
            }
            Ok(None)
        };
        run().unwrap_or_else(describe_err)
    }

    /// `φ` read off from `S_A²` on generators (the group part is fixed since `S_H² = id`).
    pub fn phi_from_antipode(&self) -> Result<DiagonalAutomorphism> {
        let mut scalars = Vec::with_capacity(self.generators());
        for i in 0..self.generators() {
            let x = self.generator(i)?;
            let s2 = self.antipode(&self.antipode(&x)?)?;
            scalars.push(self.diagonal_coefficient(&s2, &x)?);
        }
        Ok(DiagonalAutomorphism { generator_scalars: scalars, group_character: self.group().trivial_character() })
    }

    /// `φ(r) = deg(r)^{-1} ▷ S_R²(r)`, with `S_R` in closed form.
    pub fn phi_from_braided_antipode(&self) -> Result<DiagonalAutomorphism> {
        let mut scalars = Vec::with_capacity(self.generators());
        for i in 0..self.generators() {
            let x = self.generator(i)?;
            let s2 = self.braided_antipode(&self.braided_antipode(&x)?)?;
            let phi = self.act(&self.group().inverse(&self.degrees()[i]), &s2);
            scalars.push(self.diagonal_coefficient(&phi, &x)?);
        }
        Ok(DiagonalAutomorphism { generator_scalars: scalars, group_character: self.group().trivial_character() })
    }

    /// `c` with `image = c · x`, for `x` a single monomial.
    fn diagonal_coefficient(&self, image: &SmashElement, x: &SmashElement) -> Result<CycloNumber> {
        let (mx, _) = x.as_single_term().expect("generator is a monomial");
        match image.as_single_term() {
            Some((m, c)) if m == mx => Ok(c.clone()),
            _ if image.is_zero() => Ok(CycloNumber::zero(self.order())),
            _ => Err(Error::InvariantViolation(format!(
                "image {} of {} is not diagonal",
                image.format(self.group()),
                mx.format(self.group())
            ))),
        }
    }

    /// Checks `S²(r) = deg(r)^{-1} ▷ S_R²(r)` on every normal word of `R` up to the bound,
    /// and that both formulas for `φ` agree on generators.
    pub fn verify_antipode_square(&self) -> Result<CheckReport> {
        let bound = self.degree_bound();
        let words = self.normal_words(bound);
        let mut report = CheckReport::new("verify-s2", bound);
        report.notes = self.status_notes();
        report.checks.push(sweep("antipode-square", &words, |w| self.check_s2(w)));
        let from_s = self.phi_from_antipode()?;
        let from_r = self.phi_from_braided_antipode()?;
        let agree = from_s == from_r;
        report.checks.push(CheckEntry {
            check: "phi-agreement".into(),
            status: if agree { Status::Pass } else { Status::Fail },
            cases: self.generators(),
            counterexample: (!agree).then(|| {
                format!(
                    "from S_A²: [{}], from S_R²: [{}]",
                    crate::datum::fmt_scalars(&from_s.generator_scalars),
                    crate::datum::fmt_scalars(&from_r.generator_scalars)
                )
            }),
        });
        Ok(report)
    }

    /// `ψ = [ξ] ∘ S²` on generators and group elements, computed by composition.
    pub fn nakayama_by_composition(&self, xi: &Character) -> Result<(DiagonalAutomorphism, Vec<GroupElement>)> {
        self.group().check_character(xi)?;
        let mut scalars = Vec::with_capacity(self.generators());
        for i in 0..self.generators() {
            let x = self.generator(i)?;
            let psi = self.winding(xi, &self.antipode(&self.antipode(&x)?)?)?;
            scalars.push(self.diagonal_coefficient(&psi, &x)?);
        }
        // ψ(g) = ξ(g) g on every group element; collect the ones where that fails
        let mut bad = Vec::new();
        for g in self.group().elements()? {
            let e = self.group_element(&g);
            let psi = self.winding(xi, &self.antipode(&self.antipode(&e)?)?)?;
            if psi != e.scale(&self.root(self.group().pairing(xi, &g) as i64)) {
                bad.push(g);
            }
        }
        Ok((DiagonalAutomorphism { generator_scalars: scalars, group_character: xi.clone() }, bad))
    }

    /// `x_i ↦ ξ(g_i) χ_i(g_i)^{-1} x_i`, `g ↦ ξ(g) g`.
    pub fn nakayama_closed_form(&self, xi: &Character) -> DiagonalAutomorphism {
        let gamma = self.group();
        let scalars = (0..self.generators())
            .map(|i| {
                let g = &self.degrees()[i];
                let k = gamma.pairing(xi, g) as i64 - gamma.pairing(&self.actions()[i], g) as i64;
                self.root(k)
            })
            .collect();
        DiagonalAutomorphism { generator_scalars: scalars, group_character: xi.clone() }
    }

    /// Computes `ψ = [ξ]S²` and compares it with its closed form.
    pub fn nakayama_a(&self, xi: &Character) -> Result<(DiagonalAutomorphism, CheckReport)> {
        let (psi, bad) = self.nakayama_by_composition(xi)?;
        let closed = self.nakayama_closed_form(xi);
        let mut report = CheckReport::new("nakayama", self.degree_bound());
        report.notes = self.status_notes();
        let gamma = self.group();
        let order = gamma.order() as usize;
        report.checks.push(CheckEntry {
            check: "psi-on-group".into(),
            status: if bad.is_empty() { Status::Pass } else { Status::Fail },
            cases: order,
            counterexample: bad.first().map(|g| gamma.format_element(g)),
        });
        let mismatch = (0..self.generators()).find(|&i| psi.generator_scalars[i] != closed.generator_scalars[i]);
        report.checks.push(CheckEntry {
            check: "psi-closed-form".into(),
            status: if mismatch.is_none() { Status::Pass } else { Status::Fail },
            cases: self.generators(),
            counterexample: mismatch.map(|i| {
                format!("x{}: {} != {}", i + 1, psi.generator_scalars[i], closed.generator_scalars[i])
            }),
        });
        let respects = psi.respects_rules(self);
        report.checks.push(CheckEntry {
            check: "psi-respects-relations".into(),
            status: if respects { Status::Pass } else { Status::Fail },
            cases: self.rules().len(),
            counterexample: None,
        });
        Ok((psi, report))
    }

    /// `[ε] = id` on every normal monomial and `[ξ][ξ'] = [ξξ']` on generators and group elements.
    pub fn verify_winding(&self, pairs: &[(Character, Character)]) -> Result<CheckReport> {
        let bound = self.degree_bound();
        let basis = self.normal_monomials(bound)?;
        let eps = self.group().trivial_character();
        let mut report = CheckReport::new("winding", bound);
        report.notes = self.status_notes();
        report.checks.push(sweep("winding-counit-identity", &basis, |m| {
            let e = self.monomial_element(m.clone());
            match self.winding(&eps, &e) {
                Ok(w) if w == e => None,
                Ok(w) => self.mismatch(m, &w.format(self.group()), &e.format(self.group())),
                Err(err) => describe_err(err),
            }
        }));
        let mut gens: Vec<SmashElement> = (0..self.generators()).map(|i| self.generator(i)).collect::<Result<_>>()?;
        gens.extend(self.group().elements()?.iter().map(|g| self.group_element(g)));
        let cases: Vec<(&(Character, Character), &SmashElement)> =
            pairs.iter().flat_map(|p| gens.iter().map(move |a| (p, a))).collect();
        report.checks.push(sweep("winding-composition", &cases, |((xi, eta), a)| {
            let run = || -> Result<Option<String>> {
                let lhs = self.winding(xi, &self.winding(eta, a)?)?;
                let rhs = self.winding(&self.group().char_mul(xi, eta)?, a)?;
                Ok((lhs != rhs).then(|| format!("{}: {} != {}", a.format(self.group()), lhs.format(self.group()), rhs.format(self.group()))))
            };
            run().unwrap_or_else(describe_err)
        }));
        Ok(report)
    }
}
