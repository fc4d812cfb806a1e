//! Exact arithmetic in Q(ζ_m).
use cy_hopf::cyclotomic::{cyclotomic_polynomial, CycloNumber};

fn main() {
    for m in [3, 4, 8, 12] {
        println!("Φ_{m} coefficients: {:?}", cyclotomic_polynomial(m));
    }

    let z = CycloNumber::root_of_unity(1, 12);
    let w = &z + &CycloNumber::from_int(2, 12);
    println!("z = {z}, w = z + 2 = {w}");
    println!("w^3 = {}", w.pow(3).unwrap());
    let inv = w.inverse().unwrap();
    println!("1/w = {inv}");
    assert!((&w * &inv).is_one());

    // orders are never mixed silently
    let i = CycloNumber::root_of_unity(1, 4);
    let omega = CycloNumber::root_of_unity(1, 3);
    let (a, b) = CycloNumber::coerce(&i, &omega);
    println!("i·ω in Q(ζ_12): {}", &a * &b);
    println!("i + ω in Q(ζ_12): {}", &a + &b);
}
