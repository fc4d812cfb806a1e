//! Orienting user relations and checking overlaps: the A2 relations over Z2 x Z2.
use cy_hopf::io::Document;

fn main() -> Result<(), cy_hopf::error::Error> {
    let doc = Document::parse(include_str!("../data/klein_a2.json"))?;
    for bound in [4, 6, 8] {
        let a = doc.algebra(bound)?;
        let words = a.normal_words(bound);
        let counts: Vec<usize> = (0..=bound).map(|d| words.iter().filter(|w| w.len() == d).count()).collect();
        println!(
            "bound {bound}: confluent = {}, ambiguities = {}, normal words by degree {:?}",
            a.is_confluent(),
            a.confluence().ambiguities_checked,
            counts
        );
    }
    let a = doc.algebra(4)?;
    for r in a.rules() {
        println!("rule {} -> {}", r.lhs, r.rhs[0].0);
    }
    Ok(())
}
