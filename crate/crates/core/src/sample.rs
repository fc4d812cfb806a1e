//! Seeded random data of type `A_1 x ... x A_1` over small abelian groups.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::CartanMatrix;
use crate::datum::CartanDatum;
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Character};

/// Invariant factors of every nontrivial abelian group of order at most 16.
pub const SMALL_GROUPS: &[&[u32]] = &[
    &[2], &[3], &[4], &[5], &[6], &[7], &[8], &[9], &[10], &[11], &[12], &[13], &[14], &[15], &[16],
    &[2, 2], &[2, 4], &[2, 6], &[2, 8], &[3, 3], &[4, 4], &[2, 2, 2], &[2, 2, 4], &[2, 2, 2, 2],
];

const MAX_ATTEMPTS: usize = 100_000;

/// A valid datum of Cartan type `A_1^t`: `q_ii ≠ 1` and `q_ij q_ji = 1` for `i ≠ j`.
/// Characters are drawn one at a time among those compatible with the earlier ones.
fn try_quantum_affine<R: Rng>(rng: &mut R, group: &AbelianGroup, t: usize) -> Result<Option<CartanDatum>> {
    let elements = group.elements()?;
    let characters = group.characters()?;
    let g: Vec<_> = (0..t).map(|_| elements.choose(rng).unwrap().clone()).collect();
    let m = group.exponent();
    let mut chi: Vec<Character> = Vec::with_capacity(t);
    for j in 0..t {
        let allowed: Vec<&Character> = characters
            .iter()
            .filter(|c| group.pairing(c, &g[j]) != 0)
            .filter(|c| (0..j).all(|i| (group.pairing(c, &g[i]) + group.pairing(&chi[i], &g[j])).is_multiple_of(m)))
            .collect();
        match allowed.choose(rng) {
            Some(c) => chi.push((*c).clone()),
            None => return Ok(None),
        }
    }
    CartanDatum::new(group.clone(), g, chi, CartanMatrix::a1_power(t), vec![]).map(Some)
}

/// One random datum with `t ≤ max_rank`; with `balanced` the balance condition is imposed.
pub fn random_quantum_affine<R: Rng>(rng: &mut R, max_rank: usize, balanced: bool) -> Result<CartanDatum> {
    for _ in 0..MAX_ATTEMPTS {
        let factors = SMALL_GROUPS.choose(rng).unwrap();
        let group = AbelianGroup::new(factors.to_vec())?;
        let t = rng.gen_range(1..=max_rank);
        if let Some(d) = try_quantum_affine(rng, &group, t)? {
            if !balanced || d.check_cy_r_quantum_affine()?.holds {
                return Ok(d);
            }
        }
    }
    Err(Error::InvariantViolation("random datum search did not terminate".into()))
}

/// `count` random data drawn from a ChaCha stream seeded with `seed`.
pub fn quantum_affine_family(seed: u64, count: usize, max_rank: usize, balanced: bool) -> Result<Vec<CartanDatum>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_quantum_affine(&mut rng, max_rank, balanced)).collect()
}

/// Random datum of an arbitrary finite Cartan type over a random small group, when one exists.
pub fn random_datum<R: Rng>(rng: &mut R, cartan: &CartanMatrix) -> Result<Option<CartanDatum>> {
    let t = cartan.rank();
    for _ in 0..1_000 {
        let factors = SMALL_GROUPS.choose(rng).unwrap();
        let group = AbelianGroup::new(factors.to_vec())?;
        let elements = group.elements()?;
        let characters = group.characters()?;
        let g: Vec<_> = (0..t).map(|_| elements.choose(rng).unwrap().clone()).collect();
        let chi: Vec<_> = (0..t).map(|_| characters.choose(rng).unwrap().clone()).collect();
        if let Ok(d) = CartanDatum::new(group, g, chi, cartan.clone(), vec![]) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_reproducible_and_valid() {
        let a = quantum_affine_family(11, 30, 3, false).unwrap();
        let b = quantum_affine_family(11, 30, 3, false).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().any(|d| d.rank() == 3));
        for d in quantum_affine_family(5, 30, 3, true).unwrap() {
            assert!(d.check_cy_r_quantum_affine().unwrap().holds);
            assert!(d.group().order() <= 16);
        }
    }
}
