//! Finite abelian groups in invariant-factor form and their characters.
//!
//! Elements and characters are both exponent vectors. A character with
//! exponents `(a_1, ..., a_r)` sends the `i`-th generator to `ζ_{n_i}^{a_i}`,
//! so all values live in the cyclotomic field whose order is the group
//! exponent.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};

/// Default cap on `|Γ|` for anything that enumerates the group.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    invariant_factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    exp: Vec<u32>,
}

impl GroupElement {
    pub fn exponents(&self) -> &[u32] {
        &self.exp
    }

    pub fn is_identity(&self) -> bool {
        self.exp.iter().all(|&e| e == 0)
    }
}

impl Character {
    pub fn exponents(&self) -> &[u32] {
        &self.exp
    }
}

impl AbelianGroup {
    pub fn new(invariant_factors: Vec<u32>) -> Result<AbelianGroup> {
        if invariant_factors.contains(&0) {
            return Err(Error::InvalidDatum("invariant factors must be at least 1".into()));
        }
        Ok(AbelianGroup { invariant_factors })
    }

    /// `Z_n1 x ... x Z_nr`.
    pub fn product(factors: &[u32]) -> Result<AbelianGroup> {
        AbelianGroup::new(factors.to_vec())
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&n| n as u128).product()
    }

    /// lcm of the invariant factors; the cyclotomic order of every character value.
    pub fn exponent(&self) -> u32 {
        self.invariant_factors.iter().fold(1u32, |acc, &n| acc.lcm(&n))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { exp: vec![0; self.rank()] }
    }

    pub fn trivial_character(&self) -> Character {
        Character { exp: vec![0; self.rank()] }
    }

    fn reduce(&self, raw: &[i64]) -> Result<Vec<u32>> {
        if raw.len() != self.rank() {
            return Err(Error::GroupMismatch(format!(
                "expected {} exponents, got {}",
                self.rank(),
                raw.len()
            )));
        }
        Ok(raw
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&e, &n)| e.rem_euclid(n as i64) as u32)
            .collect())
    }

    pub fn element(&self, exponents: &[i64]) -> Result<GroupElement> {
        Ok(GroupElement { exp: self.reduce(exponents)? })
    }

    pub fn character(&self, exponents: &[i64]) -> Result<Character> {
        Ok(Character { exp: self.reduce(exponents)? })
    }

    /// The `i`-th generator (0-based).
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        let mut exp = vec![0u32; self.rank()];
        exp[i] = 1 % self.invariant_factors[i];
        Ok(GroupElement { exp })
    }

    fn check(&self, exp: &[u32]) -> Result<()> {
        if exp.len() != self.rank() || exp.iter().zip(&self.invariant_factors).any(|(&e, &n)| e >= n) {
            return Err(Error::GroupMismatch(format!(
                "exponents {exp:?} do not belong to Z{:?}",
                self.invariant_factors
            )));
        }
        Ok(())
    }

    pub fn check_element(&self, g: &GroupElement) -> Result<()> {
        self.check(&g.exp)
    }

    pub fn check_character(&self, chi: &Character) -> Result<()> {
        self.check(&chi.exp)
    }

    fn combine(&self, a: &[u32], b: &[u32], sign: i64) -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&self.invariant_factors)
            .map(|((&x, &y), &n)| (x as i64 + sign * y as i64).rem_euclid(n as i64) as u32)
            .collect()
    }

    fn scale(&self, a: &[u32], k: i64) -> Vec<u32> {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &n)| ((x as i128 * k as i128).rem_euclid(n as i128)) as u32)
            .collect()
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement { exp: self.combine(&g.exp, &h.exp, 1) }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement { exp: self.scale(&g.exp, -1) }
    }

    pub fn pow(&self, g: &GroupElement, k: i64) -> GroupElement {
        GroupElement { exp: self.scale(&g.exp, k) }
    }

    /// `k` such that `χ(g) = ζ_m^k` with `m` the group exponent.
    pub fn eval_exponent(&self, chi: &Character, g: &GroupElement) -> Result<u32> {
        self.check_character(chi)?;
        self.check_element(g)?;
        Ok(self.pairing(chi, g))
    }

    /// Unchecked pairing; callers guarantee both vectors belong to this group.
    pub(crate) fn pairing(&self, chi: &Character, g: &GroupElement) -> u32 {
        let m = self.exponent() as u64;
        let mut k = 0u64;
        for ((&a, &e), &n) in chi.exp.iter().zip(&g.exp).zip(&self.invariant_factors) {
            k += (a as u64 * e as u64 % n as u64) * (m / n as u64);
        }
        (k % m) as u32
    }

    pub fn eval(&self, chi: &Character, g: &GroupElement) -> Result<CycloNumber> {
        let k = self.eval_exponent(chi, g)?;
        Ok(CycloNumber::root_of_unity(k as i64, self.exponent()))
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Result<Character> {
        self.check_character(a)?;
        self.check_character(b)?;
        Ok(Character { exp: self.combine(&a.exp, &b.exp, 1) })
    }

    pub fn char_pow(&self, a: &Character, k: i64) -> Result<Character> {
        self.check_character(a)?;
        Ok(Character { exp: self.scale(&a.exp, k) })
    }

    pub fn char_inverse(&self, a: &Character) -> Result<Character> {
        self.char_pow(a, -1)
    }

    pub fn is_trivial(&self, chi: &Character) -> bool {
        chi.exp.iter().all(|&a| a == 0)
    }

    /// All elements in lexicographic order of their exponent vectors.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        self.elements_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<GroupElement>> {
        let order = self.order();
        if order > bound as u128 {
            return Err(Error::GroupTooLarge { order, bound });
        }
        Ok(lex_vectors(&self.invariant_factors).into_iter().map(|exp| GroupElement { exp }).collect())
    }

    /// All characters, in the same lexicographic order.
    pub fn characters(&self) -> Result<Vec<Character>> {
        Ok(self.elements()?.into_iter().map(|g| Character { exp: g.exp }).collect())
    }

    pub fn format_element(&self, g: &GroupElement) -> String {
        format_word(&g.exp, 'y')
    }

    /// Parses `"y1^2*y3"`, `"1"` or `"e"`; exponents may be negative.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let mut raw = vec![0i64; self.rank()];
        for (idx, e) in parse_power_product(s, 'y')? {
            if idx == 0 || idx > self.rank() {
                return Err(Error::Parse(format!("generator y{idx} out of range in {s:?}")));
            }
            raw[idx - 1] += e;
        }
        self.element(&raw)
    }
}

fn lex_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &n in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

pub(crate) fn format_word(exp: &[u32], letter: char) -> String {
    let parts: Vec<String> = exp
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| if e == 1 { format!("{letter}{}", i + 1) } else { format!("{letter}{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parses a product like `y1^2*y3^-1` into `(index, exponent)` factors (1-based indices).
pub(crate) fn parse_power_product(s: &str, letter: char) -> Result<Vec<(usize, i64)>> {
    let s = s.trim();
    if s.is_empty() || s == "1" || s == "e" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix(letter)
                .ok_or_else(|| Error::Parse(format!("expected {letter}<index> in {factor:?}")))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, i64::from_str(e.trim()).map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                None => (rest, 1),
            };
            let idx = usize::from_str(idx.trim()).map_err(|_| Error::Parse(format!("bad index in {factor:?}")))?;
            Ok((idx, exp))
        })
        .collect()
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.exp, 'y'))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{:?}", self.exp)
    }
}
