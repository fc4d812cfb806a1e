use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::parse_power_product;

/// A word in the generators `x_1, ..., x_t`, stored with 0-based letters.
///
/// Words are ordered by length first, then lexicographically reading from the
/// right end with `x_1 < x_2 < ... < x_t`. This is a monomial order (compatible
/// with concatenation on both sides), and for quantum affine space it makes the
/// normal words the descending products `x_t^{a_t} ⋯ x_1^{a_1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Word {
        Word(vec![i as u16])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Replaces `self[pos..pos + len]` by `middle`.
    pub fn splice(&self, pos: usize, len: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + middle.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    /// Positions where `pattern` occurs as a contiguous subword.
    pub fn occurrences<'a>(&'a self, pattern: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pattern.len();
        (0..(self.len() + 1).saturating_sub(n)).filter(move |&p| self.0[p..p + n] == pattern.0[..])
    }

    pub fn find(&self, pattern: &Word) -> Option<usize> {
        self.occurrences(pattern).next()
    }

    /// Parses `"x2*x1"`, `"x1^2*x2"` or `"1"` for a given number of generators.
    pub fn parse(s: &str, generators: usize) -> Result<Word> {
        let mut v = Vec::new();
        for (idx, e) in parse_power_product(s, 'x')? {
            if idx == 0 || idx > generators {
                return Err(Error::Parse(format!("generator x{idx} out of range in {s:?}")));
            }
            if e < 0 {
                return Err(Error::Parse(format!("negative power in {s:?}")));
            }
            v.extend(std::iter::repeat_n((idx - 1) as u16, e as usize));
        }
        Ok(Word(v))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == x {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "x{}", x + 1)?;
            } else {
                write!(f, "x{}^{}", x + 1, j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    #[test]
    fn order_is_graded_then_right_to_left() {
        assert!(w("x2*x1") < w("x1*x2"));
        assert!(w("x2*x1^2") < w("x1^2*x2"));
        assert!(w("x3") < w("x1*x1"));
        assert!(w("1") < w("x1"));
    }

    #[test]
    fn order_is_compatible_with_concatenation() {
        let (a, b) = (w("x2*x1"), w("x1*x2"));
        for c in [w("x3"), w("x1*x1"), w("1")] {
            assert!(c.concat(&a) < c.concat(&b));
            assert!(a.concat(&c) < b.concat(&c));
        }
    }

    #[test]
    fn parse_format_splice() {
        let x = w("x1^2*x3*x2");
        assert_eq!(x.0, vec![0, 0, 2, 1]);
        assert_eq!(x.to_string(), "x1^2*x3*x2");
        assert_eq!(x.splice(1, 2, &w("x2")).to_string(), "x1*x2^2");
        assert_eq!(x.occurrences(&w("x1")).collect::<Vec<_>>(), vec![0, 1]);
        assert!(Word::parse("x4", 3).is_err());
        assert!(w("1").is_empty());
    }
}
