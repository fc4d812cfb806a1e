//! Finite-type Cartan matrices, simple reflections, positive roots and a
//! reduced word for the longest Weyl group element.
//!
//! Reflections use `s_i(α_j) = α_j - a_ij α_i`. Finite type is detected by
//! letting the orbit of the simple roots under all reflections run up to a
//! fixed bound instead of consulting classification tables.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closure size at which a Cartan matrix is declared not of finite type.
pub const ROOT_CLOSURE_BOUND: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

/// A word in the simple reflections; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<usize>);

/// Which simple index to peel first when several are available.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieBreak {
    #[default]
    Min,
    Max,
}

impl Root {
    pub fn simple(i: usize, rank: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && self.0.iter().any(|&m| m > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|m| -m).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &m) in self.0.iter().enumerate() {
            match m {
                0 => {}
                1 => parts.push(format!("α{}", i + 1)),
                -1 => parts.push(format!("-α{}", i + 1)),
                _ => parts.push(format!("{m}α{}", i + 1)),
            }
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+").replace("+-", "-"))
        }
    }
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based indices, as printed in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl TryFrom<Vec<Vec<i64>>> for CartanMatrix {
    type Error = Error;
    fn try_from(entries: Vec<Vec<i64>>) -> Result<CartanMatrix> {
        CartanMatrix::new(entries)
    }
}

impl From<CartanMatrix> for Vec<Vec<i64>> {
    fn from(c: CartanMatrix) -> Vec<Vec<i64>> {
        c.entries
    }
}

impl CartanMatrix {
    /// Validates `a_ii = 2`, `a_ij <= 0` off the diagonal and `a_ij = 0 <=> a_ji = 0`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<CartanMatrix> {
        let t = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != t {
                return Err(Error::InvalidCartan(format!("row {} has length {}, expected {t}", i + 1, row.len())));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry a_{0}{0} = {a}", i + 1)));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!("positive off-diagonal entry a_{}{} = {a}", i + 1, j + 1)));
                }
                if i != j && (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a_{0}{1} and a_{1}{0} must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Type `A_1 x ... x A_1` of rank `t` (twice the identity).
    pub fn a1_power(t: usize) -> CartanMatrix {
        CartanMatrix::block_diagonal(&vec![CartanMatrix::type_a(1); t])
    }

    pub fn type_a(n: usize) -> CartanMatrix {
        let mut e = vec![vec![0; n]; n];
        for i in 0..n {
            e[i][i] = 2;
            if i + 1 < n {
                e[i][i + 1] = -1;
                e[i + 1][i] = -1;
            }
        }
        CartanMatrix { entries: e }
    }

    /// `B_n` with the short simple root last.
    pub fn type_b(n: usize) -> CartanMatrix {
        let mut c = CartanMatrix::type_a(n);
        if n >= 2 {
            c.entries[n - 1][n - 2] = -2;
        }
        c
    }

    pub fn type_c(n: usize) -> CartanMatrix {
        let mut c = CartanMatrix::type_a(n);
        if n >= 2 {
            c.entries[n - 2][n - 1] = -2;
        }
        c
    }

    pub fn type_d(n: usize) -> CartanMatrix {
        assert!(n >= 3);
        let mut c = CartanMatrix::type_a(n);
        c.entries[n - 2][n - 1] = 0;
        c.entries[n - 1][n - 2] = 0;
        c.entries[n - 3][n - 1] = -1;
        c.entries[n - 1][n - 3] = -1;
        c
    }

    pub fn type_g2() -> CartanMatrix {
        CartanMatrix { entries: vec![vec![2, -1], vec![-3, 2]] }
    }

    pub fn type_f4() -> CartanMatrix {
        CartanMatrix {
            entries: vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
        }
    }

    pub fn block_diagonal(blocks: &[CartanMatrix]) -> CartanMatrix {
        let t: usize = blocks.iter().map(CartanMatrix::rank).sum();
        let mut e = vec![vec![0; t]; t];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    e[off + i][off + j] = b.entries[i][j];
                }
            }
            off += b.rank();
        }
        CartanMatrix { entries: e }
    }

    pub fn is_a1_power(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &a)| a == if i == j { 2 } else { 0 }))
    }

    fn check_root(&self, r: &Root) -> Result<()> {
        if r.0.len() != self.rank() {
            return Err(Error::InvalidCartan(format!(
                "root has {} coordinates, rank is {}",
                r.0.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `s_i(r) = r - (Σ_j a_ij r_j) α_i`.
    pub fn simple_reflection(&self, i: usize, r: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        self.check_root(r)?;
        Ok(self.reflect(i, r))
    }

    fn reflect(&self, i: usize, r: &Root) -> Root {
        let pairing: i64 = self.entries[i].iter().zip(&r.0).map(|(a, m)| a * m).sum();
        let mut out = r.0.clone();
        out[i] -= pairing;
        Root(out)
    }

    /// Positive roots, found as the orbit of the simple roots under all simple reflections.
    pub fn positive_roots_closure(&self) -> Result<BTreeSet<Root>> {
        let t = self.rank();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = (0..t).map(|i| Root::simple(i, t)).collect();
        seen.extend(queue.iter().cloned());
        while let Some(r) = queue.pop_front() {
            for j in 0..t {
                let s = self.reflect(j, &r);
                if seen.insert(s.clone()) {
                    if seen.len() > ROOT_CLOSURE_BOUND {
                        return Err(Error::NotFiniteType(ROOT_CLOSURE_BOUND));
                    }
                    queue.push_back(s);
                }
            }
        }
        Ok(seen.into_iter().filter(Root::is_positive).collect())
    }

    /// Reduced word for the longest element, by peeling simple roots off the inversion set.
    pub fn longest_word(&self, tie: TieBreak) -> Result<ReducedWord> {
        self.longest_word_traced(tie).map(|(w, _)| w)
    }

    /// Like [`Self::longest_word`], also returning the size of the remaining inversion set
    /// after each step.
    pub fn longest_word_traced(&self, tie: TieBreak) -> Result<(ReducedWord, Vec<usize>)> {
        let t = self.rank();
        let mut remaining: BTreeSet<Root> = self.positive_roots_closure()?;
        let mut word = Vec::with_capacity(remaining.len());
        let mut sizes = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let simple = |i: &usize| remaining.contains(&Root::simple(*i, t));
            let pick = match tie {
                TieBreak::Min => (0..t).find(simple),
                TieBreak::Max => (0..t).rev().find(simple),
            }
            .ok_or_else(|| Error::NotReduced("inversion set contains no simple root".into()))?;
            let alpha = Root::simple(pick, t);
            remaining.remove(&alpha);
            let next: BTreeSet<Root> = remaining.iter().map(|r| self.reflect(pick, r)).collect();
            if let Some(bad) = next.iter().find(|r| !r.is_positive()) {
                return Err(Error::NotReduced(format!("peeling produced non-positive root {bad}")));
            }
            remaining = next;
            word.push(pick);
            sizes.push(remaining.len());
        }
        Ok((ReducedWord(word), sizes))
    }

    /// `β_k = s_{i_1} ... s_{i_{k-1}}(α_{i_k})`.
    pub fn beta_sequence(&self, w: &ReducedWord) -> Result<Vec<Root>> {
        let t = self.rank();
        let mut seen = HashSet::new();
        let mut betas = Vec::with_capacity(w.len());
        for (k, &ik) in w.0.iter().enumerate() {
            if ik >= t {
                return Err(Error::IndexOutOfRange { index: ik, rank: t });
            }
            let mut beta = Root::simple(ik, t);
            for &i in w.0[..k].iter().rev() {
                beta = self.reflect(i, &beta);
            }
            if !beta.is_positive() {
                return Err(Error::NotReduced(format!("β{} = {beta} is not positive", k + 1)));
            }
            if !seen.insert(beta.clone()) {
                return Err(Error::NotReduced(format!("β{} = {beta} repeats", k + 1)));
            }
            betas.push(beta);
        }
        Ok(betas)
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> Result<usize> {
        Ok(self.positive_roots_closure()?.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![-1, 2]]).is_ok());
        assert!(CartanMatrix::new(vec![vec![1, -1], vec![-1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1]]).is_err());
    }

    #[test]
    fn reflections() {
        let a2 = CartanMatrix::type_a(2);
        let a1 = Root::simple(0, 2);
        let a2r = Root::simple(1, 2);
        assert_eq!(a2.simple_reflection(0, &a1).unwrap(), a1.negated());
        assert_eq!(a2.simple_reflection(0, &a2r).unwrap(), Root(vec![1, 1]));
        let r = Root(vec![3, -2]);
        for i in 0..2 {
            let s = a2.simple_reflection(i, &r).unwrap();
            assert_eq!(a2.simple_reflection(i, &s).unwrap(), r);
        }
        assert!(matches!(a2.simple_reflection(2, &r), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn closures() {
        let a1a1 = CartanMatrix::a1_power(2);
        let roots: Vec<_> = a1a1.positive_roots_closure().unwrap().into_iter().collect();
        assert_eq!(roots, vec![Root(vec![0, 1]), Root(vec![1, 0])]);
        let a2: Vec<_> = CartanMatrix::type_a(2).positive_roots_closure().unwrap().into_iter().collect();
        assert_eq!(a2.len(), 3);
        assert!(a2.contains(&Root(vec![1, 1])));
        assert_eq!(CartanMatrix::type_b(2).num_positive_roots().unwrap(), 4);
        assert_eq!(CartanMatrix::type_g2().num_positive_roots().unwrap(), 6);
        assert_eq!(CartanMatrix::type_f4().num_positive_roots().unwrap(), 24);
        assert_eq!(CartanMatrix::type_d(4).num_positive_roots().unwrap(), 12);
        // affine A1
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(affine.positive_roots_closure(), Err(Error::NotFiniteType(_))));
        assert!(matches!(affine.longest_word(TieBreak::Min), Err(Error::NotFiniteType(_))));
    }

    #[test]
    fn longest_words() {
        assert_eq!(CartanMatrix::type_a(1).longest_word(TieBreak::Min).unwrap().0, vec![0]);
        assert_eq!(CartanMatrix::a1_power(2).longest_word(TieBreak::Min).unwrap().0, vec![0, 1]);
        assert_eq!(CartanMatrix::a1_power(2).longest_word(TieBreak::Max).unwrap().0, vec![1, 0]);
        let a2 = CartanMatrix::type_a(2);
        let w = a2.longest_word(TieBreak::Min).unwrap();
        assert_eq!(w.0, vec![0, 1, 0]);
        let betas = a2.beta_sequence(&w).unwrap();
        assert_eq!(betas, vec![Root(vec![1, 0]), Root(vec![1, 1]), Root(vec![0, 1])]);
    }

    #[test]
    fn peeling_shrinks_by_one() {
        for c in [CartanMatrix::type_a(3), CartanMatrix::type_b(3), CartanMatrix::type_g2(), CartanMatrix::type_f4()] {
            let p = c.num_positive_roots().unwrap();
            let (w, sizes) = c.longest_word_traced(TieBreak::Min).unwrap();
            assert_eq!(w.len(), p);
            let expect: Vec<usize> = (0..p).rev().collect();
            assert_eq!(sizes, expect);
        }
    }

    #[test]
    fn non_reduced_words_are_rejected() {
        let a2 = CartanMatrix::type_a(2);
        assert!(matches!(a2.beta_sequence(&ReducedWord(vec![0, 0])), Err(Error::NotReduced(_))));
        assert!(matches!(a2.beta_sequence(&ReducedWord(vec![0, 1, 0, 1])), Err(Error::NotReduced(_))));
        let a1a1 = CartanMatrix::a1_power(2);
        assert_eq!(a1a1.beta_sequence(&ReducedWord(vec![0, 1])).unwrap(), vec![Root(vec![1, 0]), Root(vec![0, 1])]);
    }

    #[test]
    fn json_shape() {
        let c: CartanMatrix = serde_json::from_str("[[2,-1],[-1,2]]").unwrap();
        assert_eq!(c, CartanMatrix::type_a(2));
        assert!(serde_json::from_str::<CartanMatrix>("[[2,1],[1,2]]").is_err());
    }
}
