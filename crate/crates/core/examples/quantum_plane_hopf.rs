//! The smash product of the quantum plane with kΓ: structure maps and the axiom sweep.
use cy_hopf::group::AbelianGroup;
use cy_hopf::smash::{PresentedAlgebra, Relation};

fn main() -> Result<(), cy_hopf::error::Error> {
    let gr = AbelianGroup::product(&[3, 3])?;
    let degrees = vec![gr.element(&[1, 0])?, gr.element(&[0, 1])?];
    let actions = vec![gr.character(&[1, 1])?, gr.character(&[2, 2])?];
    let a = PresentedAlgebra::quantum_affine(gr.clone(), degrees, actions, 4)?;

    let x1 = a.generator(0)?;
    let x2 = a.generator(1)?;
    let x1x2 = a.multiply(&x1, &x2)?;
    println!("x1·x2 = {}", x1x2.format(&gr));
    println!("Δ(x1·x2) = {}", a.comultiply(&x1x2)?.format(&gr));
    println!("S(x1) = {}", a.antipode(&x1)?.format(&gr));
    println!("S²(x2) = {}", a.antipode(&a.antipode(&x2)?)?.format(&gr));

    let r = a.verify_hopf_axioms()?;
    for c in &r.checks {
        println!("{:32} {:?} ({} cases)", c.check, c.status, c.cases);
    }

    // squaring q12 breaks multiplicativity of Δ
    let rule = &a.rules()[0];
    let q = &rule.rhs[0].1;
    let bad = Relation { lhs: rule.lhs.clone(), rhs: vec![(rule.rhs[0].0.clone(), q * q)] };
    let b = PresentedAlgebra::new(gr, a.degrees().to_vec(), a.actions().to_vec(), vec![bad], 4)?;
    let r = b.verify_hopf_axioms()?;
    if let Some(f) = r.first_failure() {
        println!("corrupted rule: {} fails at {}", f.check, f.counterexample.as_deref().unwrap_or("?"));
    }
    Ok(())
}
