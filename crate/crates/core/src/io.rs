//! JSON input documents: Cartan data, presentations of `R`, and Lie algebra data.
//!
//! Indices in files are 1-based (`x1`, `y1`, linking pair `[1, 2]`, bracket `i = 1`).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cartan::CartanMatrix;
use crate::cyclotomic::CycloNumber;
use crate::datum::{CartanDatum, Claims, LinkingParameter};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Character, GroupElement};
use crate::lie::{GroupActionData, LieAlgebraData, Matrix};
use crate::rational::Q;
use crate::smash::{PresentedAlgebra, Relation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Factors(Vec<u32>),
    Object { invariant_factors: Vec<u32> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<AbelianGroup> {
        match self {
            GroupSpec::Factors(f) | GroupSpec::Object { invariant_factors: f } => AbelianGroup::new(f.clone()),
        }
    }
}

/// A group element as `{"exp": [..]}`, a bare exponent list, or a word such as `"y1^2*y2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Object { exp: Vec<i64> },
    Exponents(Vec<i64>),
    Word(String),
}

impl ElementSpec {
    pub fn build(&self, gr: &AbelianGroup) -> Result<GroupElement> {
        match self {
            ElementSpec::Object { exp } | ElementSpec::Exponents(exp) => gr.element(exp),
            ElementSpec::Word(s) => gr.parse_element(s),
        }
    }
}

/// A character as `{"exp": [..]}` or a bare exponent list: `γ_i ↦ ζ_{n_i}^{exp_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharacterSpec {
    Object { exp: Vec<i64> },
    Exponents(Vec<i64>),
}

impl CharacterSpec {
    pub fn build(&self, gr: &AbelianGroup) -> Result<Character> {
        match self {
            CharacterSpec::Object { exp } | CharacterSpec::Exponents(exp) => gr.character(exp),
        }
    }
}

/// A scalar: an integer, a rational string `"p/q"`, `{"zeta": k}` (optionally with `"order"`),
/// or an explicit cyclotomic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    Int(i64),
    Rational(String),
    Zeta {
        zeta: i64,
        #[serde(default)]
        order: Option<u32>,
    },
    Number(CycloNumber),
}

impl CoeffSpec {
    /// Value in the field of order `m` (a `zeta` with its own order is kept at that order).
    pub fn build(&self, m: u32) -> Result<CycloNumber> {
        match self {
            CoeffSpec::Int(n) => Ok(CycloNumber::from_int(*n, m)),
            CoeffSpec::Rational(s) => Ok(CycloNumber::from_rational(parse_rational(s)?, m)),
            CoeffSpec::Zeta { zeta, order } => Ok(CycloNumber::root_of_unity(*zeta, order.unwrap_or(m))),
            CoeffSpec::Number(c) => Ok(c.clone()),
        }
    }
}

/// A rational entry: an integer or `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalSpec {
    Int(i64),
    Str(String),
}

impl RationalSpec {
    pub fn build(&self) -> Result<Q> {
        match self {
            RationalSpec::Int(n) => Ok(Q::from_int(*n)),
            RationalSpec::Str(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    Q::from_strings(n.trim(), d.trim()).ok_or_else(|| Error::Parse(format!("not a rational number: {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaSpec {
    pub pair: (usize, usize),
    pub value: CoeffSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub word: String,
    pub coeff: CoeffSpec,
}

/// A relation `lhs = Σ coeff · word`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSpec {
    pub lhs: String,
    #[serde(default)]
    pub rhs: Vec<TermSpec>,
}

fn build_relations(rules: &[RuleSpec], t: usize, m: u32) -> Result<Vec<Relation>> {
    rules
        .iter()
        .map(|r| {
            Ok(Relation {
                lhs: Word::parse(&r.lhs, t)?,
                rhs: r
                    .rhs
                    .iter()
                    .map(|term| Ok((Word::parse(&term.word, t)?, term.coeff.build(m)?)))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub group: GroupSpec,
    pub g: Vec<ElementSpec>,
    pub chi: Vec<CharacterSpec>,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default)]
    pub lambda: Vec<LambdaSpec>,
    #[serde(default)]
    pub claims: Option<Claims>,
    /// Relations of `R`; without them only quantum affine space (type `A_1^t`) is available.
    #[serde(default)]
    pub relations: Option<Vec<RuleSpec>>,
    #[serde(default)]
    pub degree_bound: Option<usize>,
    #[serde(default)]
    pub description: Option<String>,
}

impl DatumFile {
    pub fn datum(&self) -> Result<CartanDatum> {
        let gr = self.group.build()?;
        let m = gr.exponent();
        let g = self.g.iter().map(|e| e.build(&gr)).collect::<Result<_>>()?;
        let chi = self.chi.iter().map(|c| c.build(&gr)).collect::<Result<_>>()?;
        let cartan = CartanMatrix::new(self.cartan.clone())?;
        let lambda = self
            .lambda
            .iter()
            .map(|l| {
                let (i, j) = l.pair;
                if i == 0 || j == 0 {
                    return Err(Error::InvalidDatum("linking pairs are 1-based".into()));
                }
                Ok(LinkingParameter { pair: (i - 1, j - 1), value: l.value.build(m)? })
            })
            .collect::<Result<_>>()?;
        let d = CartanDatum::new(gr, g, chi, cartan, lambda)?;
        Ok(match &self.claims {
            Some(c) => d.with_claims(c.clone()),
            None => d,
        })
    }

    /// The algebra `R` of the datum: the given relations, or quantum affine space for type
    /// `A_1^t` when none are given.
    pub fn algebra(&self, degree_bound: usize) -> Result<PresentedAlgebra> {
        let d = self.datum()?;
        match &self.relations {
            Some(rules) => {
                let rels = build_relations(rules, d.rank(), d.order())?;
                PresentedAlgebra::from_datum(&d, rels, degree_bound)
            }
            None if d.cartan().is_a1_power() => PresentedAlgebra::from_quantum_affine_datum(&d, degree_bound),
            None => Err(Error::InvalidDatum(
                "relations are required for Cartan types other than A1 x ... x A1".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub group: GroupSpec,
    pub generators: usize,
    pub degrees: Vec<ElementSpec>,
    pub actions: Vec<CharacterSpec>,
    #[serde(default)]
    pub rules: Vec<RuleSpec>,
    #[serde(default)]
    pub degree_bound: Option<usize>,
    #[serde(default)]
    pub description: Option<String>,
}

impl PresentationFile {
    pub fn algebra(&self, degree_bound: usize) -> Result<PresentedAlgebra> {
        let gr = self.group.build()?;
        let t = self.generators;
        if self.degrees.len() != t || self.actions.len() != t {
            return Err(Error::InvalidDatum(format!("{t} generators need {t} degrees and {t} actions")));
        }
        let degrees = self.degrees.iter().map(|e| e.build(&gr)).collect::<Result<_>>()?;
        let actions = self.actions.iter().map(|c| c.build(&gr)).collect::<Result<_>>()?;
        let rels = build_relations(&self.rules, t, gr.exponent())?;
        PresentedAlgebra::new(gr, degrees, actions, rels, degree_bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<RationalSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub group: GroupSpec,
    pub matrices: Vec<Vec<Vec<RationalSpec>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieFile {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
    #[serde(default)]
    pub action: Option<ActionSpec>,
    #[serde(default)]
    pub description: Option<String>,
}

impl LieFile {
    pub fn build(&self) -> Result<(LieAlgebraData, GroupActionData)> {
        let brackets = self
            .brackets
            .iter()
            .map(|b| {
                if b.i == 0 || b.j == 0 {
                    return Err(Error::InvalidLie("bracket indices are 1-based".into()));
                }
                Ok((b.i - 1, b.j - 1, b.coeffs.iter().map(RationalSpec::build).collect::<Result<_>>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        let lie = LieAlgebraData::from_brackets(self.dim, &brackets)?;
        let action = match &self.action {
            None => GroupActionData::trivial(AbelianGroup::new(vec![1])?, self.dim),
            Some(a) => {
                let matrices: Vec<Matrix> = a
                    .matrices
                    .iter()
                    .map(|m| m.iter().map(|row| row.iter().map(RationalSpec::build).collect()).collect())
                    .collect::<Result<_>>()?;
                GroupActionData::new(a.group.build()?, matrices, &lie)?
            }
        };
        Ok((lie, action))
    }
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::File { path: path.display().to_string(), source })
}

/// Any input document, recognised by its keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Datum(DatumFile),
    Presentation(PresentationFile),
    Lie(LieFile),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let v: Value = serde_json::from_str(text)?;
        let obj = v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        if obj.contains_key("cartan") {
            Ok(Document::Datum(serde_json::from_value(v)?))
        } else if obj.contains_key("generators") {
            Ok(Document::Presentation(serde_json::from_value(v)?))
        } else if obj.contains_key("dim") {
            Ok(Document::Lie(serde_json::from_value(v)?))
        } else {
            Err(Error::Parse("unrecognised document: expected a datum (\"cartan\"), a presentation (\"generators\") or a Lie algebra (\"dim\")".into()))
        }
    }

    pub fn read(path: &std::path::Path) -> Result<Document> {
        Document::parse(&read_file(path)?)
    }

    pub fn degree_bound(&self) -> Option<usize> {
        match self {
            Document::Datum(d) => d.degree_bound,
            Document::Presentation(p) => p.degree_bound,
            Document::Lie(_) => None,
        }
    }

    pub fn algebra(&self, degree_bound: usize) -> Result<PresentedAlgebra> {
        match self {
            Document::Datum(d) => d.algebra(degree_bound),
            Document::Presentation(p) => p.algebra(degree_bound),
            Document::Lie(_) => Err(Error::InvalidDatum("a Lie algebra document has no braided presentation".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_in_every_form() {
        let parse = |s: &str| serde_json::from_str::<CoeffSpec>(s).unwrap().build(4).unwrap();
        assert_eq!(parse("-1"), CycloNumber::from_int(-1, 4));
        assert_eq!(parse("\"1/2\""), CycloNumber::from_rational(Q::new(1, 2), 4));
        assert_eq!(parse("{\"zeta\": 3}"), CycloNumber::root_of_unity(3, 4));
        let z = CycloNumber::root_of_unity(1, 4);
        assert_eq!(parse(&serde_json::to_string(&z).unwrap()), z);
    }

    #[test]
    fn datum_document() {
        let text = r#"{"group":[2,2],"g":["y1",{"exp":[0,1]}],"chi":[[1,0],{"exp":[1,1]}],
            "cartan":[[2,-1],[-1,2]],
            "relations":[{"lhs":"x1^2*x2","rhs":[{"word":"x2*x1^2","coeff":1}]}]}"#;
        let Document::Datum(d) = Document::parse(text).unwrap() else { panic!() };
        let datum = d.datum().unwrap();
        assert_eq!(datum.rank(), 2);
        let a = d.algebra(4).unwrap();
        assert_eq!(a.rules().len(), 1);
    }

    #[test]
    fn unknown_fields_and_documents_are_rejected() {
        assert!(Document::parse(r#"{"cartan":[[2]],"group":[2],"g":["y1"],"chi":[[1]],"bogus":1}"#).is_err());
        assert!(Document::parse(r#"{"foo":1}"#).is_err());
        assert!(Document::parse("[1,2]").is_err());
    }

    #[test]
    fn lie_document() {
        let text = r#"{"dim":2,"brackets":[{"i":1,"j":2,"coeffs":[0,1]}]}"#;
        let Document::Lie(l) = Document::parse(text).unwrap() else { panic!() };
        let (lie, _) = l.build().unwrap();
        assert_eq!(lie.adjoint_trace(0), Q::one());
    }
}
