//! Structure maps of the smash product `A = R#kΓ`.
//!
//! Multiplication uses the smash relation `g x_i = χ_i(g) x_i g` to push group
//! elements to the right. The coproduct and antipode are fixed on generators,
//! `Δ(x_i) = x_i ⊗ 1 + g_i ⊗ x_i`, `Δ(g) = g ⊗ g`, `S(x_i) = -g_i^{-1} x_i`,
//! `S(g) = g^{-1}`, and extended as an algebra map and an anti-algebra map.

use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{Character, GroupElement};
use crate::smash::element::{Monomial, SmashElement, Tensor};
use crate::smash::presentation::PresentedAlgebra;
use crate::smash::word::Word;

impl PresentedAlgebra {
    pub fn monomial_element(&self, m: Monomial) -> SmashElement {
        SmashElement::monomial(m, self.one())
    }

    /// `1 # g`.
    pub fn group_element(&self, g: &GroupElement) -> SmashElement {
        self.monomial_element(Monomial::new(Word::empty(), g.clone()))
    }

    /// `x_i # e` (0-based `i`).
    pub fn generator(&self, i: usize) -> Result<SmashElement> {
        if i >= self.generators() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.generators() });
        }
        Ok(self.monomial_element(Monomial::new(Word::letter(i), self.group().identity())))
    }

    pub fn unit(&self) -> SmashElement {
        self.group_element(&self.group().identity())
    }

    /// `(x^u g)(x^v h) = χ_v(g) · x^u x^v · gh`, in normal form.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial, coeff: &CycloNumber) -> SmashElement {
        let k = self.action_exponent(&a.group, &b.word);
        let c = coeff.mul_root(k);
        self.normal_monomial(&a.word.concat(&b.word), &self.group().mul(&a.group, &b.group), &c)
    }

    pub fn multiply(&self, a: &SmashElement, b: &SmashElement) -> Result<SmashElement> {
        self.check_degree(a.max_degree() + b.max_degree())?;
        let mut out = SmashElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_assign(&self.multiply_monomials(ma, mb, &(ca * cb)));
            }
        }
        Ok(out)
    }

    /// Coproduct of a monomial, expanded over the subsets of letters sent to the right leg.
    fn comultiply_monomial(&self, m: &Monomial, coeff: &CycloNumber, out: &mut Tensor) {
        let letters = m.word.letters();
        let k = letters.len();
        let gamma = self.group();
        for mask in 0u32..(1 << k) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut group = gamma.identity();
            let mut exponent = 0i64;
            for (p, &x) in letters.iter().enumerate() {
                if mask & (1 << p) != 0 {
                    right.push(x);
                    group = gamma.mul(&group, &self.degrees()[x as usize]);
                } else {
                    // g_{w_q} (q < p, on the right leg) moves past x_{w_p}
                    exponent += gamma.pairing(&self.actions()[x as usize], &group) as i64;
                    left.push(x);
                }
            }
            let c = coeff.mul_root(exponent);
            let l = self.normal_monomial(&Word(left), &gamma.mul(&group, &m.group), &c);
            let r = self.normal_monomial(&Word(right), &m.group, &self.one());
            out.add_product(&[&l, &r], &self.one());
        }
    }

    pub fn comultiply(&self, a: &SmashElement) -> Result<Tensor> {
        self.check_degree(a.max_degree())?;
        let mut out = Tensor::zero(2);
        for (m, c) in a.terms() {
            self.comultiply_monomial(m, c, &mut out);
        }
        Ok(out)
    }

    /// Applies `Δ` to leg `leg` of a tensor, raising its arity by one.
    pub fn comultiply_leg(&self, t: &Tensor, leg: usize) -> Result<Tensor> {
        let mut out = Tensor::zero(t.arity() + 1);
        for (legs, c) in t.terms() {
            let mut inner = Tensor::zero(2);
            self.comultiply_monomial(&legs[leg], c, &mut inner);
            for (pair, d) in inner.terms() {
                let mut v = Vec::with_capacity(legs.len() + 1);
                v.extend_from_slice(&legs[..leg]);
                v.extend(pair.iter().cloned());
                v.extend_from_slice(&legs[leg + 1..]);
                out.add_term(v, d.clone());
            }
        }
        Ok(out)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> CycloNumber {
        if m.word.is_empty() {
            self.one()
        } else {
            CycloNumber::zero(self.order())
        }
    }

    /// `ε(x^w g) = 1` if `w` is empty, else `0`.
    pub fn counit(&self, a: &SmashElement) -> CycloNumber {
        a.terms()
            .filter(|(m, _)| m.word.is_empty())
            .fold(CycloNumber::zero(self.order()), |acc, (_, c)| &acc + c)
    }

    /// Applies `ε` to leg `leg`.
    pub fn counit_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut out = Tensor::zero(t.arity() - 1);
        for (legs, c) in t.terms() {
            if legs[leg].word.is_empty() {
                let mut v = legs.clone();
                v.remove(leg);
                out.add_term(v, c.clone());
            }
        }
        out
    }

    /// Collapses a 1-tensor into an element.
    pub fn tensor_to_element(&self, t: &Tensor) -> SmashElement {
        debug_assert_eq!(t.arity(), 1);
        t.terms().map(|(legs, c)| (legs[0].clone(), c.clone())).collect()
    }

    /// `S(x^w g) = g^{-1} S(x_{w_k}) ⋯ S(x_{w_1})`.
    pub fn antipode_monomial(&self, m: &Monomial) -> Result<SmashElement> {
        let gamma = self.group();
        let mut acc = self.group_element(&gamma.inverse(&m.group));
        let minus_one = CycloNumber::from_int(-1, self.order());
        for &x in m.word.letters().iter().rev() {
            let gi = gamma.inverse(&self.degrees()[x as usize]);
            let s = SmashElement::monomial(Monomial::new(Word::empty(), gi), minus_one.clone());
            let s = self.multiply(&s, &self.monomial_element(Monomial::new(Word::letter(x as usize), gamma.identity())))?;
            acc = self.multiply(&acc, &s)?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, a: &SmashElement) -> Result<SmashElement> {
        self.check_degree(a.max_degree())?;
        let mut out = SmashElement::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.antipode_monomial(m)?, c);
        }
        Ok(out)
    }

    /// Multiplies the legs of a 2-tensor after applying `S` to the chosen leg.
    pub fn convolve_with_antipode(&self, t: &Tensor, antipode_on_left: bool) -> Result<SmashElement> {
        let mut out = SmashElement::zero();
        for (legs, c) in t.terms() {
            let l = self.monomial_element(legs[0].clone());
            let r = self.monomial_element(legs[1].clone());
            let prod = if antipode_on_left {
                self.multiply(&self.antipode(&l)?, &r)?
            } else {
                self.multiply(&l, &self.antipode(&r)?)?
            };
            out.add_scaled(&prod, c);
        }
        Ok(out)
    }

    /// Product in `A ⊗ A`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply_tensors(&self, s: &Tensor, t: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero(s.arity());
        for (ls, cs) in s.terms() {
            for (lt, ct) in t.terms() {
                let mut exponent = 0i64;
                let mut legs = Vec::with_capacity(ls.len());
                for (a, b) in ls.iter().zip(lt) {
                    self.check_degree(a.degree() + b.degree())?;
                    exponent += self.action_exponent(&a.group, &b.word);
                    legs.push((self.reduce_word(&a.word.concat(&b.word)), self.group().mul(&a.group, &b.group)));
                }
                let mut partial: Vec<(Vec<Monomial>, CycloNumber)> = vec![(Vec::new(), (cs * ct).mul_root(exponent))];
                for (nf, g) in &legs {
                    let mut next = Vec::with_capacity(partial.len() * nf.len());
                    for (ms, c) in &partial {
                        for (w, d) in nf.iter() {
                            let mut ms2 = ms.clone();
                            ms2.push(Monomial::new(w.clone(), g.clone()));
                            next.push((ms2, if d.is_one() { c.clone() } else { c * d }));
                        }
                    }
                    partial = next;
                }
                for (ms, c) in partial {
                    out.add_term(ms, c);
                }
            }
        }
        Ok(out)
    }

    /// Value of the character `ξ` of `A` with `ξ(x_i) = 0` and `ξ|_Γ = xi`.
    pub fn character_value(&self, xi: &Character, m: &Monomial) -> CycloNumber {
        if m.word.is_empty() {
            self.root(self.group().pairing(xi, &m.group) as i64)
        } else {
            CycloNumber::zero(self.order())
        }
    }

    /// Winding homomorphism `[ξ](a) = Σ ξ(a_1) a_2`.
    pub fn winding(&self, xi: &Character, a: &SmashElement) -> Result<SmashElement> {
        self.group().check_character(xi)?;
        let delta = self.comultiply(a)?;
        let mut out = SmashElement::zero();
        for (legs, c) in delta.terms() {
            let v = self.character_value(xi, &legs[0]);
            if !v.is_zero() {
                out.add_term(legs[1].clone(), &v * c);
            }
        }
        Ok(out)
    }

    /// Braided antipode of `R` on a word, in closed form:
    /// `S_R(x_{w_1} ⋯ x_{w_k}) = (-1)^k ∏_{a<b} q_{w_a w_b} · x_{w_k} ⋯ x_{w_1}`.
    pub fn braided_antipode_word(&self, w: &Word) -> SmashElement {
        let letters = w.letters();
        let gamma = self.group();
        let mut exponent = 0i64;
        for a in 0..letters.len() {
            for b in a + 1..letters.len() {
                let (i, j) = (letters[a] as usize, letters[b] as usize);
                exponent += gamma.pairing(&self.actions()[j], &self.degrees()[i]) as i64;
            }
        }
        let sign = if letters.len().is_multiple_of(2) { 1 } else { -1 };
        let c = CycloNumber::from_int(sign, self.order()).mul_root(exponent);
        self.normal_monomial(&w.reversed(), &gamma.identity(), &c)
    }

    /// Linear extension of [`Self::braided_antipode_word`] to elements of `R`.
    pub fn braided_antipode(&self, r: &SmashElement) -> Result<SmashElement> {
        let mut out = SmashElement::zero();
        for (m, c) in r.terms() {
            if !m.group.is_identity() {
                return Err(Error::InvalidDatum("braided antipode is defined on R only".into()));
            }
            out.add_scaled(&self.braided_antipode_word(&m.word), c);
        }
        Ok(out)
    }

    /// `g ▷ r` for `r ∈ R`.
    pub fn act(&self, g: &GroupElement, r: &SmashElement) -> SmashElement {
        r.terms()
            .map(|(m, c)| (m.clone(), c.mul_root(self.action_exponent(g, &m.word))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroup;

    fn klein_quantum_plane() -> PresentedAlgebra {
        // Z2 x Z2 with the A2 example's characters but only the x1 generator's rules unused
        let gr = AbelianGroup::product(&[2, 2]).unwrap();
        let degrees = vec![gr.element(&[1, 0]).unwrap(), gr.element(&[0, 1]).unwrap()];
        let actions = vec![gr.character(&[1, 0]).unwrap(), gr.character(&[1, 1]).unwrap()];
        PresentedAlgebra::new(gr, degrees, actions, vec![], 4).unwrap()
    }

    #[test]
    fn smash_relation() {
        let a = klein_quantum_plane();
        let gamma = a.group().clone();
        let y1 = a.group_element(&gamma.element(&[1, 0]).unwrap());
        let x1 = a.generator(0).unwrap();
        // (1#y1)(x1#e) = χ1(y1) x1#y1 = -x1#y1
        let p = a.multiply(&y1, &x1).unwrap();
        let expect = SmashElement::monomial(Monomial::new(Word::letter(0), gamma.element(&[1, 0]).unwrap()), CycloNumber::from_int(-1, 2));
        assert_eq!(p, expect);
        // (x1#e)(1#g) = x1#g
        let q = a.multiply(&x1, &y1).unwrap();
        assert_eq!(q, a.monomial_element(Monomial::new(Word::letter(0), gamma.element(&[1, 0]).unwrap())));
        // x1 x1 stays as it is
        let sq = a.multiply(&x1, &x1).unwrap();
        assert_eq!(sq, a.monomial_element(Monomial::new(Word(vec![0, 0]), gamma.identity())));
    }

    #[test]
    fn generator_coproduct_and_antipode() {
        let a = klein_quantum_plane();
        let gamma = a.group().clone();
        let x1 = a.generator(0).unwrap();
        let d = a.comultiply(&x1).unwrap();
        let mut expect = Tensor::zero(2);
        expect.add_term(vec![Monomial::new(Word::letter(0), gamma.identity()), Monomial::new(Word::empty(), gamma.identity())], a.one());
        expect.add_term(vec![Monomial::new(Word::empty(), gamma.element(&[1, 0]).unwrap()), Monomial::new(Word::letter(0), gamma.identity())], a.one());
        assert_eq!(d, expect);
        // S(x1) = -g1^{-1} x1 = -χ1(g1^{-1}) x1 g1^{-1} = x1·y1
        let s = a.antipode(&x1).unwrap();
        assert_eq!(s, a.monomial_element(Monomial::new(Word::letter(0), gamma.element(&[1, 0]).unwrap())));
        let y = gamma.element(&[1, 1]).unwrap();
        assert_eq!(a.antipode(&a.group_element(&y)).unwrap(), a.group_element(&gamma.inverse(&y)));
    }

    #[test]
    fn counit_values() {
        let a = klein_quantum_plane();
        let gamma = a.group().clone();
        let g = gamma.element(&[0, 1]).unwrap();
        assert!(a.counit(&a.group_element(&g)).is_one());
        assert!(a.counit(&a.monomial_element(Monomial::new(Word::letter(0), g))).is_zero());
        let mut e = a.generator(0).unwrap();
        e.add_term(Monomial::new(Word::empty(), gamma.identity()), CycloNumber::from_int(3, 2));
        assert_eq!(a.counit(&e), CycloNumber::from_int(3, 2));
    }

    #[test]
    fn winding_on_generators() {
        let a = klein_quantum_plane();
        let gamma = a.group().clone();
        let xi = gamma.character(&[1, 1]).unwrap();
        let x1 = a.generator(0).unwrap();
        // [ξ](x1) = ξ(g1) x1 = -x1
        assert_eq!(a.winding(&xi, &x1).unwrap(), x1.scale(&CycloNumber::from_int(-1, 2)));
        let g = gamma.element(&[0, 1]).unwrap();
        assert_eq!(a.winding(&xi, &a.group_element(&g)).unwrap(), a.group_element(&g).scale(&CycloNumber::from_int(-1, 2)));
        assert_eq!(a.winding(&gamma.trivial_character(), &x1).unwrap(), x1);
    }

    #[test]
    fn braided_antipode_closed_form() {
        let a = klein_quantum_plane();
        // S_R(x1 x2) = q12 x2 x1, q12 = χ2(y1) = -1
        let s = a.braided_antipode_word(&Word(vec![0, 1]));
        assert_eq!(s, a.monomial_element(Monomial::new(Word(vec![1, 0]), a.group().identity())).scale(&CycloNumber::from_int(-1, 2)));
        let x1 = a.generator(0).unwrap();
        assert_eq!(a.braided_antipode(&a.braided_antipode(&x1).unwrap()).unwrap(), x1);
    }

    #[test]
    fn degree_bound_guards() {
        let a = klein_quantum_plane();
        let w = a.monomial_element(Monomial::new(Word(vec![0, 1, 0]), a.group().identity()));
        assert!(matches!(a.multiply(&w, &w), Err(Error::DegreeBoundExceeded { degree: 6, bound: 4 })));
    }
}
