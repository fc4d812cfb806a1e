//! End-to-end acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values come either from the two worked examples or from small oracles written
//! here against raw exponent vectors, independent of the library's own evaluation code.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cy_hopf::cartan::{CartanMatrix, Root, TieBreak};
use cy_hopf::cyclotomic::CycloNumber;
use cy_hopf::datum::CartanDatum;
use cy_hopf::io::Document;
use cy_hopf::lie::{check_cy_lie_smash, determinant};
use cy_hopf::rational::Q;
use cy_hopf::sample::{quantum_affine_family, random_datum};
use cy_hopf::smash::PresentedAlgebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn load(name: &str) -> Document {
    Document::read(std::path::Path::new(&format!("{DATA}/{name}"))).expect(name)
}

fn datum(name: &str) -> CartanDatum {
    match load(name) {
        Document::Datum(d) => d.datum().expect(name),
        _ => panic!("{name} is not a datum"),
    }
}

/// `χ(g)` as an exponent of `ζ_m`, from the raw exponent vectors.
fn pairing(factors: &[u32], chi: &[u32], g: &[u32]) -> i64 {
    let m = factors.iter().fold(1u64, |a, &n| num_lcm(a, n as u64));
    let s: u64 = factors.iter().zip(chi.iter().zip(g)).map(|(&n, (&c, &x))| c as u64 * x as u64 * (m / n as u64)).sum();
    (s % m) as i64
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn exponent(d: &CartanDatum) -> u32 {
    d.group().invariant_factors().iter().fold(1u64, |a, &n| num_lcm(a, n as u64)) as u32
}

/// `q_ij = χ_j(g_i)` as exponents of `ζ_m`.
fn braiding(d: &CartanDatum) -> Vec<Vec<i64>> {
    let f = d.group().invariant_factors();
    let t = d.rank();
    (0..t)
        .map(|i| (0..t).map(|j| pairing(f, d.characters()[j].exponents(), d.degrees()[i].exponents())).collect())
        .collect()
}

fn criterion_1() -> Outcome {
    let d = datum("klein_a2.json");
    let r = d.check_cy(TieBreak::Min).map_err(|e| e.to_string())?;
    let minus = CycloNumber::from_int(-1, 2);
    ensure(r.cy_smash, || "smash product not reported CY".into())?;
    ensure(!r.cy_r, || "R reported CY".into())?;
    ensure(r.cy_dimension == 3, || format!("dimension {}", r.cy_dimension))?;
    ensure(r.integral_trivial, || format!("integral character {}", r.integral_character))?;
    ensure(r.inner_witness.is_some(), || "no inner witness".into())?;
    ensure(r.nakayama_diag == vec![minus.clone(), minus], || format!("diag {:?}", r.nakayama_diag))?;
    Ok(format!("cy_smash, dim 3, φ = -id, witness {}", r.inner_witness.unwrap().element_word))
}

fn criterion_2() -> Outcome {
    for n in [3u32, 4, 5] {
        let d = datum(&format!("zn_plane_{n}.json"));
        let r = d.check_cy(TieBreak::Min).map_err(|e| e.to_string())?;
        let q = braiding(&d)[1][0];
        ensure(num_gcd(q as u64, n as u64) == 1, || format!("n={n}: q = ζ^{q} not primitive"))?;
        let expect = vec![CycloNumber::root_of_unity(-q, n), CycloNumber::root_of_unity(q, n)];
        ensure(r.cy_smash && r.cy_dimension == 2, || format!("n={n}: cy_smash {} dim {}", r.cy_smash, r.cy_dimension))?;
        ensure(r.nakayama_diag == expect, || format!("n={n}: diag {:?} expected {:?}", r.nakayama_diag, expect))?;
        ensure(r.notes.iter().any(|s| s.contains("shift discrepancy")), || format!("n={n}: no shift note"))?;
    }
    Ok("n = 3, 4, 5: dim 2, φ = (q^-1, q), shift note present".into())
}

fn num_gcd(a: u64, b: u64) -> u64 {
    a * b / num_lcm(a, b)
}

fn criterion_3() -> Outcome {
    let family = quantum_affine_family(3, 200, 3, true).map_err(|e| e.to_string())?;
    let mut smash_cy = 0;
    for (k, d) in family.iter().enumerate() {
        let q = braiding(d);
        let m = exponent(d);
        let f = d.group().invariant_factors();
        let h = d.hdet_quantum_affine().map_err(|e| e.to_string())?;
        for j in 0..d.rank() {
            let got = pairing(f, h.exponents(), d.degrees()[j].exponents());
            let expect = (m as i64 - q[j][j]).rem_euclid(m as i64);
            ensure(got == expect, || format!("datum {k}: hdet(g{}) = ζ^{got}, expected ζ^{expect}", j + 1))?;
        }
        let r = d.check_cy(TieBreak::Min).map_err(|e| format!("datum {k}: {e}"))?;
        ensure(r.cy_r, || format!("datum {k}: balanced but R not CY"))?;
        ensure(!(r.cy_r && r.cy_smash), || format!("datum {k}: both CY"))?;
        let c = d.quantum_affine_report().map_err(|e| format!("datum {k}: {e}"))?;
        ensure(!(c.cy_r && c.cy_smash), || format!("datum {k}: both CY (quantum affine report)"))?;
        smash_cy += r.cy_smash as usize;
    }
    Ok(format!("{} balanced data, hdet(g_j) = χ_j(g_j)^-1, smash CY in {smash_cy}", family.len()))
}

fn hopf_family() -> Result<Vec<PresentedAlgebra>, String> {
    let family = quantum_affine_family(4, 20, 3, false).map_err(|e| e.to_string())?;
    family.iter().map(|d| PresentedAlgebra::from_quantum_affine_datum(d, 4).map_err(|e| e.to_string())).collect()
}

fn criterion_4() -> Outcome {
    let algebras = hopf_family()?;
    let mut cases = 0;
    for (k, a) in algebras.iter().enumerate() {
        ensure(a.group().order() <= 16 && a.generators() <= 3, || format!("datum {k} out of range"))?;
        let r = a.verify_hopf_axioms().map_err(|e| e.to_string())?;
        ensure(r.checks.len() == 5, || format!("datum {k}: {} checks", r.checks.len()))?;
        if let Some(f) = r.first_failure() {
            return Err(format!("datum {k}: {} fails: {:?}", f.check, f.counterexample));
        }
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    let bad = load("zn_plane_3_corrupted.json").algebra(4).map_err(|e| e.to_string())?;
    let r = bad.verify_hopf_axioms().map_err(|e| e.to_string())?;
    let f = r.first_failure().ok_or("corrupted control passed")?;
    let ce = f.counterexample.clone().ok_or("no counterexample")?;
    ensure(ce.contains('x'), || format!("counterexample without a monomial: {ce}"))?;
    Ok(format!("{} data, {cases} cases; control fails {} at {}", algebras.len(), f.check, ce.split(':').next().unwrap()))
}

fn criterion_5() -> Outcome {
    let algebras = hopf_family()?;
    let mut words = 0;
    for (k, a) in algebras.iter().enumerate() {
        let r = a.verify_antipode_square().map_err(|e| e.to_string())?;
        if let Some(f) = r.first_failure() {
            return Err(format!("datum {k}: {} fails: {:?}", f.check, f.counterexample));
        }
        ensure(r.checks.iter().any(|c| c.check == "phi-agreement"), || "phi check missing".into())?;
        words += r.checks[0].cases;
    }
    Ok(format!("{} data, {words} words, φ formulas agree", algebras.len()))
}

/// Positive roots as the orbit of the simple roots under the Weyl group, intersected with
/// the positive cone.
fn weyl_orbit_roots(c: &CartanMatrix) -> BTreeSet<Vec<i64>> {
    let t = c.rank();
    let mut seen: BTreeSet<Vec<i64>> = (0..t).map(|i| (0..t).map(|j| (i == j) as i64).collect()).collect();
    let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(r) = frontier.pop() {
        for i in 0..t {
            // s_i(r) = r - <r, α_i^∨> α_i with <α_j, α_i^∨> = a_ij
            let pairing: i64 = (0..t).map(|j| r[j] * c.entry(i, j)).sum();
            let mut s = r.clone();
            s[i] -= pairing;
            if seen.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

fn criterion_6() -> Outcome {
    let types = [
        ("A1", CartanMatrix::type_a(1), 1),
        ("A1xA1", CartanMatrix::a1_power(2), 2),
        ("A2", CartanMatrix::type_a(2), 3),
        ("A3", CartanMatrix::type_a(3), 6),
        ("B2", CartanMatrix::type_b(2), 4),
        ("G2", CartanMatrix::type_g2(), 6),
    ];
    for (name, c, count) in &types {
        let closure: BTreeSet<Root> = c.positive_roots_closure().map_err(|e| e.to_string())?;
        let oracle = weyl_orbit_roots(c);
        let as_vecs: BTreeSet<Vec<i64>> = closure.iter().map(|r| r.0.clone()).collect();
        ensure(as_vecs == oracle, || format!("{name}: closure differs from the Weyl orbit"))?;
        for tie in [TieBreak::Min, TieBreak::Max] {
            let w = c.longest_word(tie).map_err(|e| e.to_string())?;
            let betas = c.beta_sequence(&w).map_err(|e| e.to_string())?;
            let set: BTreeSet<Root> = betas.iter().cloned().collect();
            ensure(betas.len() == *count && set.len() == *count, || format!("{name}: {} betas", betas.len()))?;
            ensure(set == closure, || format!("{name} {tie:?}: β-set differs from the closure"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 60 {
        attempts += 1;
        ensure(attempts < 10_000, || format!("only {tested} random data found"))?;
        let (_, c, _) = &types[attempts % types.len()];
        if let Some(d) = random_datum(&mut rng, c).map_err(|e| e.to_string())? {
            let a = d.integral_character_u(TieBreak::Min).map_err(|e| e.to_string())?;
            let b = d.integral_character_u(TieBreak::Max).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("∏χ_β depends on the tie-break: {a} vs {b}"))?;
            tested += 1;
        }
    }
    Ok(format!("|Φ+| = 1, 2, 3, 6, 4, 6; ∏χ_β tie-break invariant on {tested} data"))
}

fn criterion_7() -> Outcome {
    let lie = |name: &str| match load(name) {
        Document::Lie(l) => l.build().expect(name),
        _ => panic!("{name} is not a Lie file"),
    };
    let zero = Q::zero();
    let (g, nu) = lie("sl2_sign.json");
    let r = check_cy_lie_smash(&g, &nu).map_err(|e| e.to_string())?;
    ensure((0..3).all(|i| g.adjoint_trace(i) == zero), || "sl2 traces nonzero".into())?;
    ensure(determinant(&nu.matrices()[0]) == Q::one(), || "det ν ≠ 1".into())?;
    ensure(r.cy_r && r.cy_smash, || format!("sl2: cy_R {} cy_smash {}", r.cy_r, r.cy_smash))?;

    let (g, nu) = lie("solvable_plane.json");
    let r = check_cy_lie_smash(&g, &nu).map_err(|e| e.to_string())?;
    // [x, y] = y: ad x = diag(0, 1)
    ensure(g.adjoint_trace(0) == Q::one(), || "tr ad x ≠ 1".into())?;
    ensure(!r.cy_r && !r.cy_smash, || "solvable plane reported CY".into())?;

    let (g, nu) = lie("line_sign.json");
    let r = check_cy_lie_smash(&g, &nu).map_err(|e| e.to_string())?;
    ensure(g.adjoint_trace(0) == zero, || "line trace nonzero".into())?;
    ensure(determinant(&nu.matrices()[0]) == Q::from_int(-1), || "det ν ≠ -1".into())?;
    ensure(r.cy_r && !r.cy_smash, || format!("line: cy_R {} cy_smash {}", r.cy_r, r.cy_smash))?;
    Ok("sl2: both CY; [x,y]=y: neither; line with ν = -1: R only".into())
}

fn criterion_8() -> Outcome {
    let family = quantum_affine_family(8, 20, 3, false).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut monomials = 0;
    for (k, d) in family.iter().enumerate() {
        let a = PresentedAlgebra::from_quantum_affine_datum(d, 4).map_err(|e| e.to_string())?;
        let gr = d.group();
        let chars = gr.characters().map_err(|e| e.to_string())?;
        let pick = |rng: &mut ChaCha8Rng| {
            use rand::seq::SliceRandom;
            chars.choose(rng).unwrap().clone()
        };
        let pairs: Vec<_> = (0..3).map(|_| (pick(&mut rng), pick(&mut rng))).collect();
        let w = a.verify_winding(&pairs).map_err(|e| e.to_string())?;
        if let Some(f) = w.first_failure() {
            return Err(format!("datum {k}: {} fails: {:?}", f.check, f.counterexample));
        }
        monomials += w.checks[0].cases;
        let f = gr.invariant_factors();
        let m = exponent(d) as i64;
        for xi in [d.hdet_quantum_affine().map_err(|e| e.to_string())?, pick(&mut rng)] {
            let (psi, report) = a.nakayama_a(&xi).map_err(|e| e.to_string())?;
            if let Some(f) = report.first_failure() {
                return Err(format!("datum {k}: {} fails: {:?}", f.check, f.counterexample));
            }
            for i in 0..d.rank() {
                let g = d.degrees()[i].exponents();
                let e = pairing(f, xi.exponents(), g) - pairing(f, d.characters()[i].exponents(), g);
                let expect = CycloNumber::root_of_unity(e.rem_euclid(m), m as u32);
                ensure(psi.generator_scalars[i] == expect, || {
                    format!("datum {k}: ψ(x{}) = {} but closed form gives {expect}", i + 1, psi.generator_scalars[i])
                })?;
            }
        }
    }
    Ok(format!("{} data, [ε] = id on {monomials} monomials, ψ matches the closed form", family.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Z2xZ2 type A2 example", criterion_1, Duration::from_secs(1)),
        ("2 ZnxZn type A1xA1 example", criterion_2, Duration::from_secs(1)),
        ("3 hdet identity and mutual exclusion", criterion_3, Duration::from_secs(10)),
        ("4 Hopf axiom suite", criterion_4, Duration::from_secs(60)),
        ("5 antipode square and φ", criterion_5, Duration::from_secs(30)),
        ("6 root systems and tie-breaks", criterion_6, Duration::from_secs(5)),
        ("7 Lie case", criterion_7, Duration::from_secs(1)),
        ("8 winding and ψ", criterion_8, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
