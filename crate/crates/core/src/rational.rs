//! Exact rationals with a machine-word fast path.
//!
//! Almost every coefficient that shows up in the symbolic engine is a small
//! integer, so values are kept as `Ratio<i64>` and promoted to `BigRational`
//! only when a checked operation overflows. Results are demoted again whenever
//! they fit, which keeps the representation canonical.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

type Small = Ratio<i64>;

#[derive(Clone)]
pub enum Q {
    Small(Small),
    Big(BigRational),
}

impl Q {
    pub fn zero() -> Q {
        Q::Small(Small::zero())
    }

    pub fn one() -> Q {
        Q::Small(Small::one())
    }

    pub fn from_int(n: i64) -> Q {
        Q::Small(Small::from_integer(n))
    }

    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q::Small(Small::new(num, den))
    }

    pub fn from_big(r: BigRational) -> Q {
        let (n, d) = (r.numer(), r.denom());
        match (n.to_i64(), d.to_i64()) {
            // i64::MIN is excluded so that negation never overflows.
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Q::Small(Small::new_raw(n, d)),
            _ => Q::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Q::Small(r) => r.is_one(),
            Q::Big(r) => r.is_one(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(r) => r.is_integer(),
            Q::Big(r) => r.is_integer(),
        }
    }

    /// Numerator and denominator as decimal strings.
    pub fn to_strings(&self) -> (String, String) {
        match self {
            Q::Small(r) => (r.numer().to_string(), r.denom().to_string()),
            Q::Big(r) => (r.numer().to_string(), r.denom().to_string()),
        }
    }

    pub fn from_strings(num: &str, den: &str) -> Option<Q> {
        let n = BigInt::from_str(num.trim()).ok()?;
        let d = BigInt::from_str(den.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::from_big(BigRational::new(n, d)))
    }

    pub fn recip(&self) -> Option<Q> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(r.recip()),
            _ => Q::from_big(self.to_big().recip()),
        })
    }

    fn binop(
        &self,
        other: &Q,
        small: impl Fn(&Small, &Small) -> Option<Small>,
        big: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, other) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i64::MIN && *r.denom() != i64::MIN {
                    return Q::Small(r);
                }
            }
        }
        Q::from_big(big(&self.to_big(), &other.to_big()))
    }

    pub fn add(&self, other: &Q) -> Q {
        self.binop(other, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn sub(&self, other: &Q) -> Q {
        self.binop(other, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    pub fn mul(&self, other: &Q) -> Q {
        if self.is_zero() || other.is_zero() {
            return Q::zero();
        }
        self.binop(other, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    pub fn mul_int(&self, k: i64) -> Q {
        match k {
            0 => Q::zero(),
            1 => self.clone(),
            -1 => self.neg(),
            _ => self.mul(&Q::from_int(k)),
        }
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(r) => Q::Small(-*r),
            Q::Big(r) => Q::from_big(-r.clone()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(r) => r.is_negative(),
            Q::Big(r) => r.is_negative(),
        }
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Q) -> bool {
        match (self, other) {
            (Q::Small(a), Q::Small(b)) => a == b,
            // Canonical form: a Big value never fits in Small.
            (Q::Big(a), Q::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Q {}

impl Hash for Q {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let (n, d) = self.to_strings();
        n.hash(state);
        d.hash(state);
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::Small(a), Q::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(r) => write!(f, "{r}"),
            Q::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::from_int(i64::MAX);
        let sum = big.add(&big);
        assert!(matches!(sum, Q::Big(_)));
        let back = sum.sub(&big);
        assert!(matches!(back, Q::Small(_)));
        assert_eq!(back, big);
    }

    #[test]
    fn products_stay_exact() {
        let a = Q::new(i64::MAX, 3);
        let b = Q::new(3, i64::MAX);
        assert!(a.mul(&b).is_one());
        let sq = a.mul(&a);
        assert_eq!(sq.mul(&b).mul(&b), Q::one());
    }

    #[test]
    fn string_roundtrip() {
        let q = Q::from_strings("123456789012345678901234567890", "7").unwrap();
        let (n, d) = q.to_strings();
        assert_eq!(Q::from_strings(&n, &d).unwrap(), q);
        assert!(Q::from_strings("1", "0").is_none());
    }
}
