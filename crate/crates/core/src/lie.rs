//! Enveloping algebras of finite-dimensional Lie algebras with an abelian group acting by
//! Lie automorphisms.

use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Character, GroupElement};
use crate::rational::Q;
use crate::report::{Criterion, CyReport, InnerWitness, SCHEMA};

/// Square matrix over `Q`; column `a` holds the coordinates of the image of `x_a`.
pub type Matrix = Vec<Vec<Q>>;

pub fn identity_matrix(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(Q::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn mat_pow(a: &Matrix, e: u32) -> Matrix {
    (0..e).fold(identity_matrix(a.len()), |acc, _| mat_mul(&acc, a))
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(a: &Matrix) -> Q {
    let mut m = a.clone();
    let d = m.len();
    let mut det = Q::one();
    for col in 0..d {
        let Some(p) = (col..d).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            m.swap(p, col);
            det = det.neg();
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.recip().expect("nonzero pivot");
        for r in col + 1..d {
            let f = m[r][col].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for c in col..d {
                let v = m[r][c].sub(&f.mul(&m[col][c]));
                m[r][c] = v;
            }
        }
    }
    det
}

/// Structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    dim: usize,
    c: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebraData {
    /// Validates antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(c: Vec<Vec<Vec<Q>>>) -> Result<LieAlgebraData> {
        let dim = c.len();
        if c.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::InvalidLie(format!("structure constants must form a {dim}x{dim}x{dim} array")));
        }
        let l = LieAlgebraData { dim, c };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if l.c[i][j][k] != l.c[j][i][k].neg() {
                        return Err(Error::InvalidLie(format!(
                            "antisymmetry fails: [x{0},x{1}] and [x{1},x{0}] disagree on x{2}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        if let Some((i, j, k)) = l.jacobi_failure() {
            return Err(Error::InvalidLie(format!("Jacobi identity fails on (x{}, x{}, x{})", i + 1, j + 1, k + 1)));
        }
        Ok(l)
    }

    /// Builds the constants from brackets `[x_i, x_j]` (0-based) listed once per pair;
    /// unlisted pairs bracket to zero.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Q>)]) -> Result<LieAlgebraData> {
        let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        let mut seen = vec![vec![false; dim]; dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || v.len() != dim {
                return Err(Error::InvalidLie(format!("bracket [x{}, x{}] does not fit dimension {dim}", i + 1, j + 1)));
            }
            if seen[i][j] || seen[j][i] {
                return Err(Error::InvalidLie(format!("bracket [x{}, x{}] given twice", i + 1, j + 1)));
            }
            seen[i][j] = true;
            c[i][j] = v.clone();
            if i != j {
                c[j][i] = v.iter().map(Q::neg).collect();
            }
        }
        LieAlgebraData::new(c)
    }

    fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for m in 0..d {
                        let mut s = Q::zero();
                        for l in 0..d {
                            s = s
                                .add(&self.c[i][j][l].mul(&self.c[l][k][m]))
                                .add(&self.c[j][k][l].mul(&self.c[l][i][m]))
                                .add(&self.c[k][i][l].mul(&self.c[l][j][m]));
                        }
                        if !s.is_zero() {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Vec<Vec<Q>>] {
        &self.c
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.mul(b);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = o.add(&ab.mul(&self.c[i][j][k]));
                }
            }
        }
        out
    }

    /// `tr(ad x_i) = Σ_j c[i][j][j]`.
    pub fn adjoint_trace(&self, i: usize) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, j| acc.add(&self.c[i][j][j]))
    }

    /// Trace of `ad` of an arbitrary element, from its full matrix.
    pub fn adjoint_trace_of(&self, u: &[Q]) -> Q {
        (0..self.dim).fold(Q::zero(), |acc, j| {
            let mut e = vec![Q::zero(); self.dim];
            e[j] = Q::one();
            acc.add(&self.bracket(u, &e)[j])
        })
    }
}

/// `ν(γ_i)` for each generator `γ_i` of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupActionData {
    group: AbelianGroup,
    matrices: Vec<Matrix>,
}

fn apply(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc.add(&a.mul(b)))).collect()
}

fn column(m: &Matrix, a: usize) -> Vec<Q> {
    m.iter().map(|row| row[a].clone()).collect()
}

impl GroupActionData {
    /// Validates `ν(γ_i)^{n_i} = I`, pairwise commutation, and that every `ν(γ_i)` is a Lie
    /// automorphism of `lie`.
    pub fn new(group: AbelianGroup, matrices: Vec<Matrix>, lie: &LieAlgebraData) -> Result<GroupActionData> {
        let d = lie.dim();
        if matrices.len() != group.rank() {
            return Err(Error::InvalidLie(format!("{} generators need {} matrices, got {}", group.rank(), group.rank(), matrices.len())));
        }
        if matrices.iter().any(|m| m.len() != d || m.iter().any(|r| r.len() != d)) {
            return Err(Error::InvalidLie(format!("action matrices must be {d}x{d}")));
        }
        let id = identity_matrix(d);
        for (i, (m, &n)) in matrices.iter().zip(group.invariant_factors()).enumerate() {
            if mat_pow(m, n) != id {
                return Err(Error::InvalidLie(format!("ν(γ{})^{n} is not the identity", i + 1)));
            }
            for a in 0..d {
                for b in 0..d {
                    let mut ea = vec![Q::zero(); d];
                    let mut eb = vec![Q::zero(); d];
                    ea[a] = Q::one();
                    eb[b] = Q::one();
                    let lhs = apply(m, &lie.bracket(&ea, &eb));
                    let rhs = lie.bracket(&column(m, a), &column(m, b));
                    if lhs != rhs {
                        return Err(Error::InvalidLie(format!(
                            "ν(γ{}) is not a Lie automorphism on (x{}, x{})",
                            i + 1,
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
        }
        for i in 0..matrices.len() {
            for j in i + 1..matrices.len() {
                if mat_mul(&matrices[i], &matrices[j]) != mat_mul(&matrices[j], &matrices[i]) {
                    return Err(Error::InvalidLie(format!("ν(γ{}) and ν(γ{}) do not commute", i + 1, j + 1)));
                }
            }
        }
        Ok(GroupActionData { group, matrices })
    }

    /// Trivial action of `group` on a `d`-dimensional algebra.
    pub fn trivial(group: AbelianGroup, d: usize) -> GroupActionData {
        let matrices = vec![identity_matrix(d); group.rank()];
        GroupActionData { group, matrices }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `ν(g)` as the product of generator matrices.
    pub fn matrix(&self, g: &GroupElement) -> Result<Matrix> {
        self.group.check_element(g)?;
        let d = self.matrices.first().map_or(0, Vec::len);
        Ok(g.exponents()
            .iter()
            .zip(&self.matrices)
            .fold(identity_matrix(d), |acc, (&e, m)| mat_mul(&acc, &mat_pow(m, e))))
    }

    /// `hdet(g) = det ν(g)`.
    pub fn hdet(&self, g: &GroupElement) -> Result<Q> {
        Ok(determinant(&self.matrix(g)?))
    }

    /// `det ∘ ν` as a character of `Γ`; each `det ν(γ_i)` is a rational root of unity.
    pub fn hdet_character(&self) -> Result<Character> {
        let mut exps = Vec::with_capacity(self.matrices.len());
        for (m, &n) in self.matrices.iter().zip(self.group.invariant_factors()) {
            let det = determinant(m);
            if det.is_one() {
                exps.push(0);
            } else if det == Q::from_int(-1) && n % 2 == 0 {
                exps.push(n as i64 / 2);
            } else {
                return Err(Error::InvariantViolation(format!("det ν has value {det} on a generator of order {n}")));
            }
        }
        self.group.character(&exps)
    }
}

/// CY verdict for `U(g)` and `U(g)#kΓ`.
pub fn check_cy_lie_smash(lie: &LieAlgebraData, action: &GroupActionData) -> Result<CyReport> {
    let d = lie.dim();
    let gamma = action.group();
    let m = gamma.exponent();
    let traces: Vec<Q> = (0..d).map(|i| lie.adjoint_trace(i)).collect();
    let cy_r = traces.iter().all(Q::is_zero);
    let hdet = action.hdet_character()?;
    let in_sl = gamma.is_trivial(&hdet);
    let cy_smash = cy_r && in_sl;
    let dets: Vec<String> = action.matrices().iter().map(|a| determinant(a).to_string()).collect();
    let witness = cy_smash.then(|| InnerWitness {
        scalar: CycloNumber::one(m),
        element: gamma.identity(),
        element_word: gamma.format_element(&gamma.identity()),
    });
    Ok(CyReport {
        schema: SCHEMA.into(),
        command: "check-cy".into(),
        family: "lie".into(),
        cy_r,
        cy_smash,
        cy_dimension: d,
        shift: d,
        integral_character: hdet.clone(),
        integral_trivial: cy_r && in_sl,
        integral_on_generators: traces.iter().map(|q| CycloNumber::from_rational(q.clone(), m)).collect(),
        hdet: Some(hdet),
        nakayama_diag: vec![CycloNumber::one(m); d],
        inner_witness: witness,
        criteria: vec![
            Criterion::new(
                "adjoint-traces-vanish",
                cy_r,
                format!("tr(ad x_i) = [{}]", traces.iter().map(Q::to_string).collect::<Vec<_>>().join(", ")),
            ),
            Criterion::new("action-in-SL", in_sl, format!("det ν(γ_i) = [{}]", dets.join(", "))),
        ],
        degree_bound: None,
        notes: vec!["trivial coaction: the twisting automorphism of U(g) is the identity".into()],
    })
}
