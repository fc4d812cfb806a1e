//! Traces, determinants and CY verdicts for U(g)#kΓ on random solvable algebras.

use cy_hopf::group::AbelianGroup;
use cy_hopf::lie::{check_cy_lie_smash, determinant, identity_matrix, mat_mul, GroupActionData, LieAlgebraData, Matrix};
use cy_hopf::rational::Q;
use proptest::prelude::*;

fn q(n: i64) -> Q {
    Q::from_int(n)
}

/// Leibniz expansion over all permutations.
fn leibniz(a: &[Vec<i64>]) -> i64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut v = p.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }
    let n = a.len();
    perms(n)
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..n).map(|i| a[i][p[i]]).product::<i64>()
        })
        .sum()
}

fn to_q(a: &[Vec<i64>]) -> Matrix {
    a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, n), n)
}

/// `x, y_1, ..., y_k` with `[x, y_i] = a_i y_i` and the `y_i` commuting.
fn solvable(a: &[i64]) -> LieAlgebraData {
    let d = a.len() + 1;
    let brackets: Vec<_> = a
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let mut v = vec![Q::zero(); d];
            v[i + 1] = q(ai);
            (0, i + 1, v)
        })
        .collect();
    LieAlgebraData::from_brackets(d, &brackets).unwrap()
}

fn diagonal(signs: &[i64]) -> Matrix {
    let mut m = identity_matrix(signs.len() + 1);
    for (i, &s) in signs.iter().enumerate() {
        m[i + 1][i + 1] = q(s);
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn determinant_agrees_with_leibniz(a in (1usize..=4).prop_flat_map(square)) {
        prop_assert_eq!(determinant(&to_q(&a)), q(leibniz(&a)));
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        let (a, b) = (to_q(&a), to_q(&b));
        prop_assert_eq!(determinant(&mat_mul(&a, &b)), determinant(&a).mul(&determinant(&b)));
    }

    #[test]
    fn adjoint_trace_is_linear(a in prop::collection::vec(-3i64..=3, 1..=4), u in prop::collection::vec(-5i64..=5, 5), v in prop::collection::vec(-5i64..=5, 5), s in -3i64..=3, t in -3i64..=3) {
        let g = solvable(&a);
        let d = g.dim();
        let (u, v): (Vec<Q>, Vec<Q>) = (u[..d].iter().map(|&x| q(x)).collect(), v[..d].iter().map(|&x| q(x)).collect());
        let w: Vec<Q> = u.iter().zip(&v).map(|(x, y)| x.mul_int(s).add(&y.mul_int(t))).collect();
        let lhs = g.adjoint_trace_of(&w);
        let rhs = g.adjoint_trace_of(&u).mul_int(s).add(&g.adjoint_trace_of(&v).mul_int(t));
        prop_assert_eq!(lhs, rhs);
        // tr ad x = Σ a_i, tr ad y_i = 0
        prop_assert_eq!(g.adjoint_trace(0), q(a.iter().sum()));
        for i in 1..d {
            prop_assert_eq!(g.adjoint_trace(i), Q::zero());
        }
    }

    #[test]
    fn sign_actions_on_solvable_algebras(
        a in prop::collection::vec(-2i64..=2, 1..=3),
        signs in prop::collection::vec(prop::collection::vec(prop::bool::ANY, 3), 1..=2),
    ) {
        let g = solvable(&a);
        let k = a.len();
        let sign_rows: Vec<Vec<i64>> = signs.iter().map(|r| r[..k].iter().map(|&b| if b { -1 } else { 1 }).collect()).collect();
        let gr = AbelianGroup::new(vec![2; sign_rows.len()]).unwrap();
        let nu = GroupActionData::new(gr.clone(), sign_rows.iter().map(|r| diagonal(r)).collect(), &g).unwrap();
        // hdet is a character: hdet(gh) = hdet(g) hdet(h)
        let elements = gr.elements().unwrap();
        for x in &elements {
            for y in &elements {
                prop_assert_eq!(nu.hdet(&gr.mul(x, y)).unwrap(), nu.hdet(x).unwrap().mul(&nu.hdet(y).unwrap()));
            }
        }
        let r = check_cy_lie_smash(&g, &nu).unwrap();
        let unimodular = a.iter().sum::<i64>() == 0;
        let in_sl = sign_rows.iter().all(|r| r.iter().product::<i64>() == 1);
        prop_assert_eq!(r.cy_r, unimodular);
        prop_assert_eq!(r.cy_smash, unimodular && in_sl);
        prop_assert_eq!(r.cy_dimension, k + 1);
        prop_assert!(!(r.cy_smash && !r.cy_r));
    }
}

#[test]
fn non_automorphisms_are_rejected() {
    let g = solvable(&[1, 1]);
    let gr = AbelianGroup::new(vec![2]).unwrap();
    // swapping x and y1 does not preserve [x, y1] = y1
    let swap: Matrix = to_q(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
    assert!(GroupActionData::new(gr, vec![swap], &g).is_err());
}
