//! Quantum affine space over random small groups: how often R, R#kΓ or neither is CY.
use cy_hopf::cartan::TieBreak;
use cy_hopf::sample::quantum_affine_family;

fn main() -> Result<(), cy_hopf::error::Error> {
    let (mut r_only, mut smash_only, mut neither) = (0, 0, 0);
    for d in quantum_affine_family(7, 300, 3, false)? {
        let rep = d.check_cy(TieBreak::Min)?;
        match (rep.cy_r, rep.cy_smash) {
            (true, false) => r_only += 1,
            (false, true) => smash_only += 1,
            (false, false) => neither += 1,
            (true, true) => unreachable!("check_cy rejects this case"),
        }
    }
    println!("R CY only: {r_only}, R#kΓ CY only: {smash_only}, neither: {neither}");
    Ok(())
}
