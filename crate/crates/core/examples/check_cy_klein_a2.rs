//! CY verdicts for the two bundled data files: Z2 x Z2 with type A2, and Z3 x Z3 with
//! type A1 x A1 and a linking parameter.
use cy_hopf::cartan::TieBreak;
use cy_hopf::io::Document;

fn report(name: &str, text: &str) -> Result<(), cy_hopf::error::Error> {
    let Document::Datum(file) = Document::parse(text)? else {
        unreachable!("bundled file is a datum")
    };
    let datum = file.datum()?;
    let r = datum.check_cy(TieBreak::Min)?;
    println!("== {name}");
    println!("cy_R = {}, cy_smash = {}, dimension {}", r.cy_r, r.cy_smash, r.cy_dimension);
    let diag: Vec<String> = r.nakayama_diag.iter().map(ToString::to_string).collect();
    println!("φ on generators: [{}]", diag.join(", "));
    if let Some(w) = &r.inner_witness {
        println!("S² is conjugation by {}", w.element_word);
    }
    for n in &r.notes {
        println!("note: {n}");
    }
    Ok(())
}

fn main() -> Result<(), cy_hopf::error::Error> {
    report("Z2 x Z2, A2", include_str!("../data/klein_a2.json"))?;
    report("Z3 x Z3, A1 x A1", include_str!("../data/zn_plane_3.json"))?;
    Ok(())
}
