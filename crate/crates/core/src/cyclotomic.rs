//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! A [`CycloNumber`] is a polynomial in `ζ_m` of degree below `φ(m)`, i.e. the
//! unique residue modulo the cyclotomic polynomial `Φ_m`. Because the residue
//! is canonical, equality and zero testing are coefficient-wise.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Reduction data for one order `m`.
#[derive(Debug)]
struct CycloTable {
    order: u32,
    degree: usize,
    /// `powers[k]` is `x^k mod Φ_m` for `0 <= k < m`, stored sparsely.
    powers: Vec<Vec<(usize, i64)>>,
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            poly = divide_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

impl CycloTable {
    fn build(order: u32) -> CycloTable {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        if degree > 0 {
            cur[0] = 1;
        }
        for _ in 0..order {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect(),
            );
            // multiply by x, then reduce the overflow coefficient with Φ_m (monic)
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c = c.checked_sub(top.checked_mul(phi[i]).expect("overflow")).expect("overflow");
                }
            }
        }
        CycloTable { order, degree, powers }
    }
}

fn table(order: u32) -> Arc<CycloTable> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&order) {
        return t.clone();
    }
    let t = Arc::new(CycloTable::build(order));
    tables.write().unwrap().entry(order).or_insert(t).clone()
}

/// Euler's totient, the degree of `Φ_m`.
pub fn totient(m: u32) -> usize {
    table(m).degree
}

/// An element of the cyclotomic field of order `m`.
#[derive(Clone)]
pub struct CycloNumber {
    table: Arc<CycloTable>,
    coeffs: Vec<Q>,
}

impl CycloNumber {
    pub fn zero(order: u32) -> CycloNumber {
        assert!(order >= 1, "cyclotomic order must be positive");
        let table = table(order);
        let coeffs = vec![Q::zero(); table.degree];
        CycloNumber { table, coeffs }
    }

    pub fn one(order: u32) -> CycloNumber {
        CycloNumber::from_rational(Q::one(), order)
    }

    pub fn from_int(n: i64, order: u32) -> CycloNumber {
        CycloNumber::from_rational(Q::from_int(n), order)
    }

    pub fn from_rational(q: Q, order: u32) -> CycloNumber {
        let mut z = CycloNumber::zero(order);
        z.coeffs[0] = q;
        z
    }

    /// Builds a number from a coefficient vector of length `φ(order)`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Q>) -> Result<CycloNumber> {
        if order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let table = table(order);
        if coeffs.len() != table.degree {
            return Err(Error::Parse(format!(
                "order {order} needs {} coefficients, got {}",
                table.degree,
                coeffs.len()
            )));
        }
        Ok(CycloNumber { table, coeffs })
    }

    /// `ζ_m^k` in reduced form.
    pub fn root_of_unity(k: i64, m: u32) -> CycloNumber {
        assert!(m >= 1, "cyclotomic order must be positive");
        let table = table(m);
        let k = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![Q::zero(); table.degree];
        for &(i, c) in &table.powers[k] {
            coeffs[i] = Q::from_int(c);
        }
        CycloNumber { table, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.table.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Q::is_zero)
    }

    /// The rational value, if this number lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        self.coeffs[1..].iter().all(Q::is_zero).then(|| self.coeffs[0].clone())
    }

    /// `(i, a)` when `self = a ζ^i` is a single power-basis term.
    fn single_term(&self) -> Option<(usize, &Q)> {
        let mut it = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    fn check_order(&self, other: &CycloNumber) {
        assert_eq!(
            self.order(),
            other.order(),
            "cyclotomic operands must share an order; lift them to a common order first"
        );
    }

    pub fn try_add(&self, other: &CycloNumber) -> Result<CycloNumber> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &CycloNumber) -> Result<CycloNumber> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(self * other)
    }

    /// Multiplies by `ζ_m^k` without a full polynomial product.
    pub fn mul_root(&self, k: i64) -> CycloNumber {
        let m = self.order() as i64;
        let k = k.rem_euclid(m) as usize;
        if k == 0 {
            return self.clone();
        }
        let mut out = vec![Q::zero(); self.table.degree];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, c) in &self.table.powers[(i + k) % m as usize] {
                out[j] = out[j].add(&a.mul_int(c));
            }
        }
        CycloNumber { table: self.table.clone(), coeffs: out }
    }

    pub fn scale(&self, q: &Q) -> CycloNumber {
        CycloNumber {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(q)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<CycloNumber> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNumber::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse, by solving the linear system of multiplication by `self`.
    pub fn inverse(&self) -> Result<CycloNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycloNumber::from_rational(q.recip().unwrap(), self.order()));
        }
        if let Some(k) = self.root_exponent() {
            return Ok(CycloNumber::root_of_unity(-(k as i64), self.order()));
        }
        let n = self.table.degree;
        // column j of the matrix is self * x^j
        let mut cols = Vec::with_capacity(n);
        let mut basis = CycloNumber::one(self.order());
        for _ in 0..n {
            cols.push((self * &basis).coeffs);
            basis = basis.mul_root(1);
        }
        // augmented rows [M | e_0]
        let mut rows: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = cols.iter().map(|c| c[i].clone()).collect();
                row.push(if i == 0 { Q::one() } else { Q::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !rows[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip().unwrap();
            for v in rows[col].iter_mut() {
                *v = v.mul(&inv);
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = v.sub(&f.mul(p));
                }
            }
        }
        let coeffs = rows.into_iter().map(|mut r| r.pop().unwrap()).collect();
        Ok(CycloNumber { table: self.table.clone(), coeffs })
    }

    /// Returns `k` with `self == ζ_m^k`, if `self` is an `m`-th root of unity.
    pub fn root_exponent(&self) -> Option<u32> {
        let m = self.order();
        (0..m).find(|&k| *self == CycloNumber::root_of_unity(k as i64, m))
    }

    /// Re-expresses `self` in the field of order `target`, which must be a multiple of the
    /// current order.
    pub fn lift(&self, target: u32) -> Result<CycloNumber> {
        let m = self.order();
        if target == 0 || !target.is_multiple_of(m) {
            return Err(Error::OrderMismatch(m, target));
        }
        let step = (target / m) as i64;
        let mut out = CycloNumber::zero(target);
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out = &out + &CycloNumber::root_of_unity(step * i as i64, target).scale(a);
            }
        }
        Ok(out)
    }

    /// Lifts both operands to the lcm of their orders.
    pub fn coerce(a: &CycloNumber, b: &CycloNumber) -> (CycloNumber, CycloNumber) {
        let l = a.order().lcm(&b.order());
        (a.lift(l).unwrap(), b.lift(l).unwrap())
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &CycloNumber) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, other: &CycloNumber) -> CycloNumber {
        self.check_order(other);
        CycloNumber {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, other: &CycloNumber) -> CycloNumber {
        self.check_order(other);
        CycloNumber {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, other: &CycloNumber) -> CycloNumber {
        self.check_order(other);
        for (x, y) in [(self, other), (other, self)] {
            if let Some((i, a)) = y.single_term() {
                let rotated = x.mul_root(i as i64);
                return if a.is_one() { rotated } else { rotated.scale(a) };
            }
        }
        if self.is_zero() || other.is_zero() {
            return CycloNumber::zero(self.order());
        }
        let m = self.order() as usize;
        let mut out = vec![Q::zero(); self.table.degree];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for &(k, c) in &self.table.powers[(i + j) % m] {
                    out[k] = out[k].add(&ab.mul_int(c));
                }
            }
        }
        CycloNumber { table: self.table.clone(), coeffs: out }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(Q::neg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, other: CycloNumber) -> CycloNumber {
                (&self).$method(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let zeta = |k: usize| if k == 1 { format!("ζ{}", self.order()) } else { format!("ζ{}^{k}", self.order()) };
        if let Some(k) = self.root_exponent() {
            return f.write_str(&zeta(k as usize));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.neg()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&zeta(i))?,
                (_, false) => write!(f, "{mag}·{}", zeta(i))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(Q::to_strings).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|(n, d)| Q::from_strings(n, d).ok_or_else(|| D::Error::custom(format!("bad rational {n}/{d}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycloNumber::from_coeffs(repr.order, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, m: u32) -> CycloNumber {
        CycloNumber::root_of_unity(k, m)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(105), 48);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(z(0, 4).is_one());
        assert_eq!(z(2, 4), CycloNumber::from_int(-1, 4));
        assert_eq!(z(-3, 7), z(4, 7));
        // ζ3 is reduced to a residue satisfying x^2 + x + 1 = 0
        let w = z(1, 3);
        let lhs = &(&(&w * &w) + &w) + &CycloNumber::one(3);
        assert!(lhs.is_zero());
        assert!((&z(1, 3) + &(&z(2, 3) + &CycloNumber::one(3))).is_zero());
    }

    #[test]
    fn order_one_field_is_rationals() {
        assert_eq!(totient(1), 1);
        assert!(z(5, 1).is_one());
        assert_eq!(totient(2), 1);
        assert_eq!(z(1, 2), CycloNumber::from_int(-1, 2));
    }

    #[test]
    fn inverses() {
        assert!(CycloNumber::one(5).inverse().unwrap().is_one());
        let m1 = CycloNumber::from_int(-1, 6);
        assert_eq!(m1.inverse().unwrap(), m1);
        for n in 2..13 {
            assert_eq!(z(1, n).inverse().unwrap(), z(n as i64 - 1, n));
        }
        assert!(matches!(CycloNumber::zero(5).inverse(), Err(Error::DivisionByZero)));
        // a non-unit-looking element: 2 + ζ5
        let a = &CycloNumber::from_int(2, 5) + &z(1, 5);
        assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn lifting_preserves_roots() {
        for k in 0..6 {
            assert_eq!(z(k, 6).lift(12).unwrap(), z(2 * k, 12));
        }
        let (a, b) = CycloNumber::coerce(&z(1, 4), &z(1, 6));
        assert_eq!(a.order(), 12);
        assert_eq!(&a * &b, z(5, 12));
        assert!(z(1, 4).lift(6).is_err());
    }

    #[test]
    #[should_panic]
    fn mixed_orders_panic() {
        let _ = &z(1, 4) + &z(1, 6);
    }

    #[test]
    fn pow_and_mul_root() {
        assert_eq!(z(1, 4).pow(2).unwrap(), CycloNumber::from_int(-1, 4));
        assert!(z(3, 9).pow(9).unwrap().is_one());
        assert_eq!(z(1, 5).pow(-1).unwrap(), z(4, 5));
        let a = &CycloNumber::from_int(3, 8) + &z(3, 8);
        assert_eq!(a.mul_root(5), &a * &z(5, 8));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(z(1, 3)).unwrap();
        assert_eq!(v, serde_json::json!({"order": 3, "coeffs": [["0", "1"], ["1", "1"]]}));
        let back: CycloNumber = serde_json::from_value(v).unwrap();
        assert_eq!(back, z(1, 3));
        let bad = serde_json::json!({"order": 3, "coeffs": [["1", "1"]]});
        assert!(serde_json::from_value::<CycloNumber>(bad).is_err());
    }
}
