//! Machine-readable verdicts and verification reports.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;
use crate::group::{Character, GroupElement};

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA: &str = "cy-hopf/1";

/// Note attached to every verdict that relies on the inner-automorphism search.
pub const UNIT_GROUP_NOTE: &str = "inner automorphisms are searched among units c·g (scalar times group-like); \
     this is complete when R is a connected graded domain, whose smash product has unit group k^× × Γ";

/// A unit `c·g` whose conjugation realizes a diagonal automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerWitness {
    pub scalar: CycloNumber,
    pub element: GroupElement,
    /// Multiplicative form, e.g. `y1^2*y3`.
    pub element_word: String,
}

/// One evaluated criterion of a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub name: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Criterion {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> Criterion {
        Criterion { name: name.into(), holds, detail: detail.into() }
    }
}

/// CY verdict for `R` and for the smash product `R#kΓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyReport {
    pub schema: String,
    pub command: String,
    /// Which family of criteria produced the verdict.
    pub family: String,
    #[serde(rename = "cy_R")]
    pub cy_r: bool,
    pub cy_smash: bool,
    pub cy_dimension: usize,
    /// Shift of the rigid dualizing complex of `R`.
    pub shift: usize,
    /// Restriction of the integral character to `Γ`.
    pub integral_character: Character,
    pub integral_trivial: bool,
    /// Integral character on the algebra generators (zero for pointed data, `tr ad` for Lie data).
    pub integral_on_generators: Vec<CycloNumber>,
    /// Homological determinant of the group action, where a formula is available.
    pub hdet: Option<Character>,
    /// Scalars `c_k` of the Nakayama automorphism `x_k ↦ c_k x_k` of `R`.
    pub nakayama_diag: Vec<CycloNumber>,
    pub inner_witness: Option<InnerWitness>,
    pub criteria: Vec<Criterion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of one family of symbolic checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub status: Status,
    /// Number of instances examined.
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckEntry {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A list of check results plus the context they were computed in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub command: String,
    pub degree_bound: usize,
    pub checks: Vec<CheckEntry>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(command: &str, degree_bound: usize) -> CheckReport {
        CheckReport {
            schema: SCHEMA.into(),
            command: command.into(),
            degree_bound,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckEntry::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Values of a homological determinant on the generators of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HdetReport {
    pub schema: String,
    pub command: String,
    pub family: String,
    pub hdet: Character,
    /// `hdet(γ_i)` for each generator `γ_i`.
    pub on_generators: Vec<CycloNumber>,
    pub trivial: bool,
    pub notes: Vec<String>,
}

/// Nakayama-type automorphisms of `R` and of the smash product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaReport {
    pub schema: String,
    pub command: String,
    pub degree_bound: usize,
    /// Character of `Γ` used for the winding map.
    pub xi: Character,
    /// `c_k` with `φ_R(x_k) = c_k x_k`, when a Cartan datum is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nakayama_diag: Option<Vec<CycloNumber>>,
    /// `φ` read off from `S²` of the smash product.
    pub phi: crate::smash::DiagonalAutomorphism,
    /// `ψ = [ξ]S²`, computed by composition.
    pub psi: crate::smash::DiagonalAutomorphism,
    pub checks: Vec<CheckEntry>,
    pub notes: Vec<String>,
}

/// Positive roots and the convex order given by a reduced word for `w0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub schema: String,
    pub command: String,
    pub cartan: crate::cartan::CartanMatrix,
    pub tie_break: crate::cartan::TieBreak,
    pub num_positive_roots: usize,
    /// 1-based reduced expression `s_{i_1} ⋯ s_{i_p}`.
    pub reduced_word: Vec<usize>,
    /// `β_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})`, as coefficient vectors.
    pub betas: Vec<crate::cartan::Root>,
    pub betas_display: Vec<String>,
    /// Whether the `β`s are exactly the roots found by reflection closure.
    pub matches_closure: bool,
}

/// Orientation and local confluence of a rewriting system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfluenceOutput {
    pub schema: String,
    pub command: String,
    pub degree_bound: usize,
    pub confluent: bool,
    /// Oriented rules, `lhs -> rhs`.
    pub rules: Vec<String>,
    pub ambiguities_checked: usize,
    pub divergences: Vec<crate::smash::Divergence>,
    /// Number of normal words in each degree `0..=bound`.
    pub normal_words_by_degree: Vec<usize>,
    pub checks: Vec<CheckEntry>,
    pub notes: Vec<String>,
}
