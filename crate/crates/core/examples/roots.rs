//! Positive roots, reduced words for w0 and the convex order β_1, ..., β_p.
use cy_hopf::cartan::{CartanMatrix, TieBreak};

fn main() -> Result<(), cy_hopf::error::Error> {
    let types = [
        ("A1", CartanMatrix::type_a(1)),
        ("A1xA1", CartanMatrix::a1_power(2)),
        ("A2", CartanMatrix::type_a(2)),
        ("A3", CartanMatrix::type_a(3)),
        ("B2", CartanMatrix::type_b(2)),
        ("G2", CartanMatrix::type_g2()),
    ];
    for (name, c) in &types {
        for tie in [TieBreak::Min, TieBreak::Max] {
            let w = c.longest_word(tie)?;
            let betas = c.beta_sequence(&w)?;
            let shown: Vec<String> = betas.iter().map(ToString::to_string).collect();
            println!("{name:6} {tie:?}: w0 = {:?}  β = ({})", w.one_based(), shown.join(", "));
        }
        println!("{name:6} |Φ+| = {}", c.positive_roots_closure()?.len());
    }

    // affine A1 has infinitely many roots
    let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]])?;
    println!("affine A1: {}", affine.positive_roots_closure().unwrap_err());
    Ok(())
}
