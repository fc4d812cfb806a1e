//! Data of finite Cartan type `D(Γ, (g_i), (χ_i), (a_ij))` and the
//! character-level Calabi-Yau criteria built on them.
//!
//! All criteria reduce to identities between characters of `Γ`, so the
//! computations run on exponents modulo the group exponent `m` and only
//! convert to [`CycloNumber`]s for reporting.

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, ReducedWord, Root, TieBreak};
use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Character, GroupElement};
use crate::report::{Criterion, CyReport, InnerWitness, SCHEMA, UNIT_GROUP_NOTE};

/// A linking parameter `λ_ij` attached to a pair `i < j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingParameter {
    pub pair: (usize, usize),
    pub value: CycloNumber,
}

/// Values asserted by the author of a datum file, compared against the computed verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    #[serde(default)]
    pub cy_smash: Option<bool>,
    #[serde(default, rename = "cy_R")]
    pub cy_r: Option<bool>,
    #[serde(default)]
    pub cy_dimension: Option<usize>,
    #[serde(default)]
    pub shift: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    group: AbelianGroup,
    g: Vec<GroupElement>,
    chi: Vec<Character>,
    cartan: CartanMatrix,
    lambda: Vec<LinkingParameter>,
    claims: Claims,
}

/// Outcome of the quantum affine space balance test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub holds: bool,
    /// `(q_1i ⋯ q_(i-1)i) / (q_i(i+1) ⋯ q_it)` for each `i`.
    pub residuals: Vec<CycloNumber>,
}

/// Outcome of the integral-character and `S²`-inner test for `U(D, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashVerdict {
    pub cy: bool,
    pub integral_character: Character,
    pub integral_trivial: bool,
    /// Scalars of `S²` on the generators, `χ_i(g_i)^{-1}`.
    pub s2_diag: Vec<CycloNumber>,
    pub witness: Option<InnerWitness>,
    pub dimension: usize,
    pub betas: Vec<Root>,
    pub word: ReducedWord,
}

/// Outcome of the CY test for `R` via the Nakayama automorphism of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraVerdict {
    pub cy: bool,
    pub diag: Vec<CycloNumber>,
    /// `j_k`: position (0-based) of `α_k` in the β-sequence.
    pub simple_positions: Vec<usize>,
}

impl CartanDatum {
    /// Builds and validates a datum: `q_ii ≠ 1`, `q_ij q_ji = q_ii^{a_ij}`, and linking pairs
    /// `i < j` with `a_ij = 0`.
    pub fn new(
        group: AbelianGroup,
        g: Vec<GroupElement>,
        chi: Vec<Character>,
        cartan: CartanMatrix,
        lambda: Vec<LinkingParameter>,
    ) -> Result<CartanDatum> {
        let t = cartan.rank();
        if g.len() != t || chi.len() != t {
            return Err(Error::InvalidDatum(format!(
                "rank {t} needs {t} group elements and {t} characters, got {} and {}",
                g.len(),
                chi.len()
            )));
        }
        for x in &g {
            group.check_element(x)?;
        }
        for c in &chi {
            group.check_character(c)?;
        }
        let d = CartanDatum { group, g, chi, cartan, lambda, claims: Claims::default() };
        let m = d.order() as i64;
        let q = d.braiding_exponents();
        for i in 0..t {
            if q[i][i] == 0 {
                return Err(Error::InvalidDatum(format!("q_{0}{0} = χ_{0}(g_{0}) must not be 1", i + 1)));
            }
            for j in 0..t {
                if i == j {
                    continue;
                }
                let lhs = (q[i][j] as i64 + q[j][i] as i64).rem_euclid(m);
                let rhs = (q[i][i] as i64 * d.cartan.entry(i, j)).rem_euclid(m);
                if lhs != rhs {
                    return Err(Error::InvalidDatum(format!(
                        "Cartan compatibility q_{0}{1} q_{1}{0} = q_{0}{0}^a_{0}{1} fails",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for lp in &d.lambda {
            let (i, j) = lp.pair;
            if i >= j || j >= t {
                return Err(Error::InvalidDatum(format!("linking pair ({}, {}) must satisfy i < j <= t", i + 1, j + 1)));
            }
            if d.cartan.entry(i, j) != 0 {
                return Err(Error::InvalidDatum(format!("linking pair ({}, {}) has a_ij ≠ 0", i + 1, j + 1)));
            }
        }
        Ok(d)
    }

    pub fn with_claims(mut self, claims: Claims) -> CartanDatum {
        self.claims = claims;
        self
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.g
    }

    pub fn characters(&self) -> &[Character] {
        &self.chi
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn lambda(&self) -> &[LinkingParameter] {
        &self.lambda
    }

    pub fn claims(&self) -> &Claims {
        &self.claims
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Session cyclotomic order: the exponent of `Γ`.
    pub fn order(&self) -> u32 {
        self.group.exponent()
    }

    fn root(&self, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(k, self.order())
    }

    /// `q_ij = χ_j(g_i)` as exponents of `ζ_m`.
    pub fn braiding_exponents(&self) -> Vec<Vec<u32>> {
        self.g
            .iter()
            .map(|gi| self.chi.iter().map(|cj| self.group.pairing(cj, gi)).collect())
            .collect()
    }

    /// `q_ij = χ_j(g_i)`.
    pub fn braiding_matrix(&self) -> Vec<Vec<CycloNumber>> {
        self.braiding_exponents()
            .into_iter()
            .map(|row| row.into_iter().map(|k| self.root(k as i64)).collect())
            .collect()
    }

    /// `χ_β = χ_1^{m_1} ⋯ χ_t^{m_t}`.
    pub fn chi_beta(&self, beta: &Root) -> Result<Character> {
        if beta.0.len() != self.rank() {
            return Err(Error::InvalidCartan(format!("root has {} coordinates, rank is {}", beta.0.len(), self.rank())));
        }
        if beta.0.iter().any(|&m| m < 0) {
            return Err(Error::NegativeRoot);
        }
        let mut acc = self.group.trivial_character();
        for (chi, &m) in self.chi.iter().zip(&beta.0) {
            acc = self.group.char_mul(&acc, &self.group.char_pow(chi, m)?)?;
        }
        Ok(acc)
    }

    fn betas(&self, tie: TieBreak) -> Result<(ReducedWord, Vec<Root>)> {
        let w = self.cartan.longest_word(tie)?;
        let betas = self.cartan.beta_sequence(&w)?;
        Ok((w, betas))
    }

    fn product_of(&self, chars: impl IntoIterator<Item = Character>) -> Result<Character> {
        chars
            .into_iter()
            .try_fold(self.group.trivial_character(), |acc, c| self.group.char_mul(&acc, &c))
    }

    /// `∏_{k=1}^p χ_{β_k}` over the β-sequence of the longest word.
    pub fn integral_character_u(&self, tie: TieBreak) -> Result<Character> {
        let (_, betas) = self.betas(tie)?;
        self.product_of(betas.iter().map(|b| self.chi_beta(b)).collect::<Result<Vec<_>>>()?)
    }

    /// `hdet(g) = ∏_i χ_i(g^{-1})` for quantum affine space.
    pub fn hdet_quantum_affine(&self) -> Result<Character> {
        if !self.cartan.is_a1_power() {
            return Err(Error::WrongCartanType);
        }
        self.group.char_inverse(&self.product_of(self.chi.iter().cloned())?)
    }

    /// Balance condition `q_1i ⋯ q_(i-1)i = q_i(i+1) ⋯ q_it` for every `i`.
    pub fn check_cy_r_quantum_affine(&self) -> Result<BalanceVerdict> {
        if !self.cartan.is_a1_power() {
            return Err(Error::WrongCartanType);
        }
        let q = self.braiding_exponents();
        let t = self.rank();
        let residuals: Vec<CycloNumber> = (0..t)
            .map(|i| {
                let left: i64 = (0..i).map(|k| q[k][i] as i64).sum();
                let right: i64 = (i + 1..t).map(|k| q[i][k] as i64).sum();
                self.root(left - right)
            })
            .collect();
        Ok(BalanceVerdict { holds: residuals.iter().all(CycloNumber::is_one), residuals })
    }

    /// Searches `Γ` for `g` with `χ_k(g) = diag_k` for all `k`; conjugation by such a `g`
    /// realizes the diagonal automorphism `x_k ↦ diag_k x_k`.
    pub fn inner_witness_search(&self, diag: &[CycloNumber]) -> Result<Option<InnerWitness>> {
        if diag.len() != self.rank() {
            return Err(Error::InvalidDatum(format!("expected {} scalars, got {}", self.rank(), diag.len())));
        }
        let m = self.order();
        let mut targets = Vec::with_capacity(diag.len());
        for d in diag {
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let lifted = if d.order() == m { Some(d.clone()) } else { d.lift(m).ok() };
            match lifted.and_then(|d| d.root_exponent()) {
                Some(k) => targets.push(k),
                None => return Ok(None),
            }
        }
        for g in self.group.elements()? {
            if self.chi.iter().zip(&targets).all(|(c, &k)| self.group.pairing(c, &g) == k) {
                return Ok(Some(InnerWitness {
                    scalar: CycloNumber::one(m),
                    element_word: self.group.format_element(&g),
                    element: g,
                }));
            }
        }
        Ok(None)
    }

    /// `χ_i(g_i)^{-1}`, the scalars of `S²` on the generators.
    pub fn s2_diag(&self) -> Vec<CycloNumber> {
        let q = self.braiding_exponents();
        (0..self.rank()).map(|i| self.root(-(q[i][i] as i64))).collect()
    }

    /// `U(D, λ)` is CY iff `∏ χ_β` is trivial and `S²` is inner.
    pub fn check_cy_u(&self, tie: TieBreak) -> Result<SmashVerdict> {
        let (word, betas) = self.betas(tie)?;
        let integral_character = self.product_of(betas.iter().map(|b| self.chi_beta(b)).collect::<Result<Vec<_>>>()?)?;
        let integral_trivial = self.group.is_trivial(&integral_character);
        let s2_diag = self.s2_diag();
        let witness = self.inner_witness_search(&s2_diag)?;
        if let Some(w) = &witness {
            for (i, c) in self.chi.iter().enumerate() {
                if self.group.eval(c, &w.element)? != s2_diag[i] {
                    return Err(Error::InvariantViolation(format!("witness {} fails on x{}", w.element_word, i + 1)));
                }
            }
        }
        Ok(SmashVerdict {
            cy: integral_trivial && witness.is_some(),
            integral_character,
            integral_trivial,
            s2_diag,
            witness,
            dimension: betas.len(),
            betas,
            word,
        })
    }

    /// `R` is CY iff `c_k = ∏_{i ≠ j_k} χ_{β_i}(g_k) = 1` for every `k`.
    pub fn check_cy_r_from_smash(&self, tie: TieBreak) -> Result<AlgebraVerdict> {
        let (_, betas) = self.betas(tie)?;
        let t = self.rank();
        let chars = betas.iter().map(|b| self.chi_beta(b)).collect::<Result<Vec<_>>>()?;
        let mut diag = Vec::with_capacity(t);
        let mut positions = Vec::with_capacity(t);
        for k in 0..t {
            let jk = betas
                .iter()
                .position(|b| *b == Root::simple(k, t))
                .ok_or_else(|| Error::InvariantViolation(format!("α{} missing from the β-sequence", k + 1)))?;
            let prod = self.product_of(chars.iter().enumerate().filter(|(i, _)| *i != jk).map(|(_, c)| c.clone()))?;
            diag.push(self.group.eval(&prod, &self.g[k])?);
            positions.push(jk);
        }
        Ok(AlgebraVerdict { cy: diag.iter().all(CycloNumber::is_one), diag, simple_positions: positions })
    }

    /// Full verdict for `R` and `U(D, 0) = R#kΓ`.
    pub fn check_cy(&self, tie: TieBreak) -> Result<CyReport> {
        let smash = self.check_cy_u(tie)?;
        let alg = self.check_cy_r_from_smash(tie)?;
        if smash.cy && alg.cy {
            return Err(Error::InvariantViolation("R and R#kΓ reported CY simultaneously".into()));
        }
        let m = self.order();
        let mut criteria = vec![
            Criterion::new(
                "integral-character-trivial",
                smash.integral_trivial,
                format!("∏χ_β = {} over β = {}", smash.integral_character, fmt_roots(&smash.betas)),
            ),
            Criterion::new(
                "antipode-square-inner",
                smash.witness.is_some(),
                match &smash.witness {
                    Some(w) => format!("conjugation by {} realizes S²", w.element_word),
                    None => "no unit c·g realizes S²".to_string(),
                },
            ),
            Criterion::new("nakayama-of-R-trivial", alg.cy, format!("φ(x_k) = c_k x_k with c = {}", fmt_scalars(&alg.diag))),
        ];
        let mut notes = vec![
            UNIT_GROUP_NOTE.to_string(),
            format!("reduced word for w0: {:?} (1-based)", smash.word.one_based()),
            "linking parameters do not enter the criteria".to_string(),
        ];
        let mut hdet = None;
        if self.cartan.is_a1_power() {
            let balance = self.check_cy_r_quantum_affine()?;
            let h = self.hdet_quantum_affine()?;
            let phi_inner = self.inner_witness_search(&self.s2_diag())?.is_some();
            criteria.push(Criterion::new("quantum-affine-balance", balance.holds, format!("residuals {}", fmt_scalars(&balance.residuals))));
            criteria.push(Criterion::new("hdet-trivial", self.group.is_trivial(&h), format!("hdet = {h}")));
            criteria.push(Criterion::new("phi-inner", phi_inner, ""));
            if balance.holds != alg.cy {
                return Err(Error::InvariantViolation("balance condition disagrees with the Nakayama test".into()));
            }
            hdet = Some(h);
        }
        let p = smash.dimension;
        self.apply_claims(p, smash.cy, alg.cy, &mut notes);
        Ok(CyReport {
            schema: SCHEMA.into(),
            command: "check-cy".into(),
            family: "pointed".into(),
            cy_r: alg.cy,
            cy_smash: smash.cy,
            cy_dimension: p,
            shift: p,
            integral_character: smash.integral_character,
            integral_trivial: smash.integral_trivial,
            integral_on_generators: vec![CycloNumber::zero(m); self.rank()],
            hdet,
            nakayama_diag: alg.diag,
            inner_witness: smash.witness,
            criteria,
            degree_bound: None,
            notes,
        })
    }

    /// Three-condition report for quantum affine space: the balance condition, trivial
    /// hdet, and innerness of `φ(x_j) = χ_j(g_j^{-1}) x_j`.
    pub fn quantum_affine_report(&self) -> Result<CyReport> {
        let balance = self.check_cy_r_quantum_affine()?;
        let hdet = self.hdet_quantum_affine()?;
        let hdet_trivial = self.group.is_trivial(&hdet);
        let phi = self.s2_diag();
        let witness = self.inner_witness_search(&phi)?;
        let cy_smash = hdet_trivial && witness.is_some();
        if balance.holds && cy_smash {
            return Err(Error::InvariantViolation("R and R#kΓ reported CY simultaneously".into()));
        }
        let t = self.rank();
        let q = self.braiding_exponents();
        // φ of R: x_i ↦ ∏_{k≠i} q_ik x_i
        let nakayama: Vec<CycloNumber> = (0..t)
            .map(|i| self.root((0..t).filter(|&k| k != i).map(|k| q[i][k] as i64).sum()))
            .collect();
        let mut notes = vec![UNIT_GROUP_NOTE.to_string()];
        self.apply_claims(t, cy_smash, balance.holds, &mut notes);
        Ok(CyReport {
            schema: SCHEMA.into(),
            command: "check-cy".into(),
            family: "quantum-affine".into(),
            cy_r: balance.holds,
            cy_smash,
            cy_dimension: t,
            shift: t,
            integral_character: self.group.char_inverse(&hdet)?,
            integral_trivial: hdet_trivial,
            integral_on_generators: vec![CycloNumber::zero(self.order()); t],
            hdet: Some(hdet.clone()),
            nakayama_diag: nakayama,
            inner_witness: witness.clone(),
            criteria: vec![
                Criterion::new("quantum-affine-balance", balance.holds, format!("residuals {}", fmt_scalars(&balance.residuals))),
                Criterion::new("hdet-trivial", hdet_trivial, format!("hdet = {hdet}")),
                Criterion::new(
                    "phi-inner",
                    witness.is_some(),
                    format!("φ(x_j) = χ_j(g_j^-1) x_j with scalars {}", fmt_scalars(&phi)),
                ),
            ],
            degree_bound: None,
            notes,
        })
    }

    fn apply_claims(&self, p: usize, cy_smash: bool, cy_r: bool, notes: &mut Vec<String>) {
        let c = &self.claims;
        if let Some(s) = c.shift {
            if s != p {
                notes.push(format!(
                    "shift discrepancy: the input claims a rigid dualizing complex of R shifted by [{s}], \
                     but the injective dimension of R is p = {p}; reporting shift {p}"
                ));
            }
        }
        if let Some(d) = c.cy_dimension {
            if d != p {
                notes.push(format!("claimed CY dimension {d} differs from computed {p}"));
            }
        }
        if let Some(b) = c.cy_smash {
            if b != cy_smash {
                notes.push(format!("claimed cy_smash = {b} differs from computed {cy_smash}"));
            }
        }
        if let Some(b) = c.cy_r {
            if b != cy_r {
                notes.push(format!("claimed cy_R = {b} differs from computed {cy_r}"));
            }
        }
    }
}

pub(crate) fn fmt_scalars(v: &[CycloNumber]) -> String {
    format!("[{}]", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}

fn fmt_roots(v: &[Root]) -> String {
    format!("({})", v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Γ = Z2 x Z2, type A2, χ1 = (-1, 1), χ2 = (-1, -1) on (y1, y2).
    fn klein_a2() -> CartanDatum {
        let gr = AbelianGroup::product(&[2, 2]).unwrap();
        let g = vec![gr.element(&[1, 0]).unwrap(), gr.element(&[0, 1]).unwrap()];
        let chi = vec![gr.character(&[1, 0]).unwrap(), gr.character(&[1, 1]).unwrap()];
        CartanDatum::new(gr, g, chi, CartanMatrix::type_a(2), vec![]).unwrap()
    }

    /// Γ = Zn x Zn, type A1 x A1, χ1(y_i) = q, χ2(y_i) = q^-1 with q = ζ_n.
    fn zn_square(n: u32) -> CartanDatum {
        let gr = AbelianGroup::product(&[n, n]).unwrap();
        let g = vec![gr.element(&[1, 0]).unwrap(), gr.element(&[0, 1]).unwrap()];
        let chi = vec![gr.character(&[1, 1]).unwrap(), gr.character(&[-1, -1]).unwrap()];
        let lambda = vec![LinkingParameter { pair: (0, 1), value: CycloNumber::one(n) }];
        CartanDatum::new(gr, g, chi, CartanMatrix::a1_power(2), lambda).unwrap()
    }

    #[test]
    fn braiding_of_the_examples() {
        let d = klein_a2();
        let q = d.braiding_matrix();
        assert_eq!(q[0][0], CycloNumber::from_int(-1, 2));
        let d = zn_square(5);
        let q = d.braiding_matrix();
        assert_eq!(q[0][1], CycloNumber::root_of_unity(-1, 5));
        assert_eq!(q[1][0], CycloNumber::root_of_unity(1, 5));
    }

    #[test]
    fn validation_rejects_bad_data() {
        let gr = AbelianGroup::product(&[2]).unwrap();
        let triv = CartanDatum::new(
            gr.clone(),
            vec![gr.element(&[1]).unwrap()],
            vec![gr.trivial_character()],
            CartanMatrix::type_a(1),
            vec![],
        );
        assert!(matches!(triv, Err(Error::InvalidDatum(_))));
        // Klein data with A1 x A1 fails compatibility: q12 q21 = -1 ≠ 1
        let k = klein_a2();
        let bad = CartanDatum::new(
            k.group().clone(),
            k.degrees().to_vec(),
            k.characters().to_vec(),
            CartanMatrix::a1_power(2),
            vec![],
        );
        assert!(matches!(bad, Err(Error::InvalidDatum(_))));
        // linking pair on a connected pair
        let bad = CartanDatum::new(
            k.group().clone(),
            k.degrees().to_vec(),
            k.characters().to_vec(),
            CartanMatrix::type_a(2),
            vec![LinkingParameter { pair: (0, 1), value: CycloNumber::one(2) }],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn chi_beta_cases() {
        let d = klein_a2();
        assert_eq!(d.chi_beta(&Root(vec![1, 0])).unwrap(), d.characters()[0]);
        let c = d.chi_beta(&Root(vec![1, 1])).unwrap();
        assert!(d.group().eval(&c, &d.degrees()[0]).unwrap().is_one());
        assert!(d.group().is_trivial(&d.chi_beta(&Root(vec![0, 0])).unwrap()));
        assert!(matches!(d.chi_beta(&Root(vec![1, -1])), Err(Error::NegativeRoot)));
    }

    #[test]
    fn klein_a2_verdict() {
        let d = klein_a2();
        let u = d.check_cy_u(TieBreak::Min).unwrap();
        assert!(u.cy && u.integral_trivial);
        assert_eq!(u.dimension, 3);
        assert_eq!(u.witness.unwrap().element_word, "y1");
        let r = d.check_cy_r_from_smash(TieBreak::Min).unwrap();
        assert!(!r.cy);
        assert_eq!(r.diag, vec![CycloNumber::from_int(-1, 2); 2]);
        assert_eq!(r.simple_positions, vec![0, 2]);
        assert!(matches!(d.hdet_quantum_affine(), Err(Error::WrongCartanType)));
    }

    #[test]
    fn zn_square_verdict() {
        for n in 3..=5 {
            let d = zn_square(n);
            assert!(d.group().is_trivial(&d.integral_character_u(TieBreak::Min).unwrap()));
            let u = d.check_cy_u(TieBreak::Min).unwrap();
            assert!(u.cy);
            assert_eq!(u.dimension, 2);
            let w = u.witness.unwrap();
            assert_eq!(d.group().eval(&d.characters()[0], &w.element).unwrap(), CycloNumber::root_of_unity(-1, n));
            let r = d.check_cy_r_from_smash(TieBreak::Min).unwrap();
            assert_eq!(r.diag, vec![CycloNumber::root_of_unity(-1, n), CycloNumber::root_of_unity(1, n)]);
            let b = d.check_cy_r_quantum_affine().unwrap();
            assert!(!b.holds);
        }
    }

    #[test]
    fn single_root_is_not_cy() {
        let gr = AbelianGroup::product(&[2]).unwrap();
        let d = CartanDatum::new(
            gr.clone(),
            vec![gr.element(&[1]).unwrap()],
            vec![gr.character(&[1]).unwrap()],
            CartanMatrix::type_a(1),
            vec![],
        )
        .unwrap();
        let u = d.check_cy_u(TieBreak::Min).unwrap();
        assert!(!u.cy && !u.integral_trivial);
        assert_eq!(u.integral_character, d.characters()[0]);
        assert!(d.check_cy_r_quantum_affine().unwrap().holds);
        // hdet(g1) = χ1(g1)^-1 = -1
        let h = d.hdet_quantum_affine().unwrap();
        assert_eq!(d.group().eval(&h, &d.degrees()[0]).unwrap(), CycloNumber::from_int(-1, 2));
    }

    #[test]
    fn witness_search_edge_cases() {
        let d = klein_a2();
        let ones = vec![CycloNumber::one(2); 2];
        assert!(d.inner_witness_search(&ones).unwrap().unwrap().element.is_identity());
        let half = vec![CycloNumber::from_rational(crate::rational::Q::new(1, 2), 2); 2];
        assert!(d.inner_witness_search(&half).unwrap().is_none());
        // χ1(g) = -1 and χ2(g) = 1 needs y1 y2... χ2(y1y2) = 1, χ1(y1y2) = -1
        let mixed = vec![CycloNumber::from_int(-1, 2), CycloNumber::one(2)];
        assert_eq!(d.inner_witness_search(&mixed).unwrap().unwrap().element_word, "y1*y2");
    }

    #[test]
    fn claims_produce_notes() {
        let d = zn_square(3).with_claims(Claims { shift: Some(3), cy_dimension: Some(2), ..Default::default() });
        let rep = d.check_cy(TieBreak::Min).unwrap();
        assert_eq!(rep.shift, 2);
        assert!(rep.notes.iter().any(|n| n.starts_with("shift discrepancy")));
        assert!(!rep.notes.iter().any(|n| n.contains("CY dimension")));
    }

    #[test]
    fn quantum_affine_report_on_commuting_generators() {
        // Z3 x Z3, g_i = y_i, χ1 = (1,0), χ2 = (0,1): q12 = q21 = 1, q_ii = ζ3
        let gr = AbelianGroup::product(&[3, 3]).unwrap();
        let d = CartanDatum::new(
            gr.clone(),
            vec![gr.element(&[1, 0]).unwrap(), gr.element(&[0, 1]).unwrap()],
            vec![gr.character(&[1, 0]).unwrap(), gr.character(&[0, 1]).unwrap()],
            CartanMatrix::a1_power(2),
            vec![],
        )
        .unwrap();
        let rep = d.quantum_affine_report().unwrap();
        assert!(rep.cy_r);
        assert!(!rep.cy_smash);
        assert!(rep.nakayama_diag.iter().all(CycloNumber::is_one));
        assert!(!rep.integral_trivial);
        let full = d.check_cy(TieBreak::Min).unwrap();
        assert_eq!(full.cy_r, rep.cy_r);
        assert_eq!(full.cy_smash, rep.cy_smash);
    }
}
