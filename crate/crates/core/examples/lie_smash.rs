//! U(g)#kΓ for small Lie algebras.
use cy_hopf::io::Document;
use cy_hopf::lie::check_cy_lie_smash;

fn main() -> Result<(), cy_hopf::error::Error> {
    let files = [
        ("sl2, sign action", include_str!("../data/sl2_sign.json")),
        ("[x,y] = y", include_str!("../data/solvable_plane.json")),
        ("line, ν = -1", include_str!("../data/line_sign.json")),
    ];
    for (name, text) in files {
        let Document::Lie(l) = Document::parse(text)? else {
            unreachable!()
        };
        let (lie, action) = l.build()?;
        let r = check_cy_lie_smash(&lie, &action)?;
        let traces: Vec<String> = r.integral_on_generators.iter().map(ToString::to_string).collect();
        println!(
            "{name:18} tr ad = [{}], hdet = {}, U(g) CY: {}, smash CY: {}",
            traces.join(", "),
            r.hdet.as_ref().unwrap(),
            r.cy_r,
            r.cy_smash
        );
    }
    Ok(())
}
