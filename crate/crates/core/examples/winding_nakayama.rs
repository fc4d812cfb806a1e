//! Winding automorphisms [ξ] and ψ = [ξ]S² on random quantum affine data.
use cy_hopf::sample::quantum_affine_family;
use cy_hopf::smash::PresentedAlgebra;

fn main() -> Result<(), cy_hopf::error::Error> {
    for d in quantum_affine_family(2024, 5, 3, false)? {
        let a = PresentedAlgebra::from_quantum_affine_datum(&d, 3)?;
        let gr = a.group();
        let xi = d.hdet_quantum_affine()?;
        let x1 = a.generator(0)?;
        println!("Γ = {:?}, t = {}, ξ = hdet = {}", gr.invariant_factors(), d.rank(), xi);
        println!("  [ξ](x1) = {}", a.winding(&xi, &x1)?.format(gr));
        let (psi, report) = a.nakayama_a(&xi)?;
        let shown: Vec<String> = psi.generator_scalars.iter().map(ToString::to_string).collect();
        println!("  ψ on generators: [{}], checks pass: {}", shown.join(", "), report.all_passed());
    }
    Ok(())
}
