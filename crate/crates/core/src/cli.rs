//! Command-line front end.
//!
//! Exit codes: 0 when a result was computed (whatever the verdict), 1 for invalid input,
//! 2 when an internal invariant is violated.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::cartan::{CartanMatrix, TieBreak};
use crate::cyclotomic::CycloNumber;
use crate::error::{Error, Result};
use crate::io::Document;
use crate::lie::check_cy_lie_smash;
use crate::report::{
    CheckEntry, CheckReport, ConfluenceOutput, CyReport, HdetReport, NakayamaReport, RootsReport, Status, SCHEMA,
};
use crate::smash::{PresentedAlgebra, Word, DEFAULT_DEGREE_BOUND};

pub const DEGREE_BOUND_ENV: &str = "CY_HOPF_DEGREE_BOUND";

/// Words sampled by the randomized rewrite-order check of `confluence`.
const RANDOM_WORDS: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    Min,
    Max,
}

impl From<TieArg> for TieBreak {
    fn from(t: TieArg) -> TieBreak {
        match t {
            TieArg::Min => TieBreak::Min,
            TieArg::Max => TieBreak::Max,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cy-hopf", version, about = "Calabi-Yau checks for smash products of braided Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Bound on the x-degree of symbolic checks (overrides CY_HOPF_DEGREE_BOUND and the file).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub degree_bound: Option<u64>,
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Index picked when several simple roots can be peeled off the inversion set.
    #[arg(long, global = true, value_enum, default_value = "min")]
    pub tie_break: TieArg,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// CY verdict for R and for R#kΓ (Cartan datum or Lie algebra file).
    CheckCy { file: PathBuf },
    /// Homological determinant of the group action.
    Hdet { file: PathBuf },
    /// Nakayama automorphisms φ and ψ = [ξ]S² on generators.
    Nakayama { file: PathBuf },
    /// Positive roots and the β-sequence of a reduced word for w0.
    Roots { file: PathBuf },
    /// Hopf algebra axioms of R#kΓ up to the degree bound.
    VerifyHopf { file: PathBuf },
    /// S² of R#kΓ against the braided antipode of R, and the two φ formulas.
    VerifyS2 { file: PathBuf },
    /// Orientation and local confluence of the relations.
    Confluence { file: PathBuf },
    /// CY verdict for U(g) and U(g)#kΓ.
    LieCheck { file: PathBuf },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::CheckCy { .. } => "check-cy",
            Verb::Hdet { .. } => "hdet",
            Verb::Nakayama { .. } => "nakayama",
            Verb::Roots { .. } => "roots",
            Verb::VerifyHopf { .. } => "verify-hopf",
            Verb::VerifyS2 { .. } => "verify-s2",
            Verb::Confluence { .. } => "confluence",
            Verb::LieCheck { .. } => "lie-check",
        }
    }

    fn file(&self) -> &Path {
        match self {
            Verb::CheckCy { file }
            | Verb::Hdet { file }
            | Verb::Nakayama { file }
            | Verb::Roots { file }
            | Verb::VerifyHopf { file }
            | Verb::VerifyS2 { file }
            | Verb::Confluence { file }
            | Verb::LieCheck { file } => file,
        }
    }
}

/// Any report a verb can produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Cy(CyReport),
    Check(CheckReport),
    Hdet(HdetReport),
    Nakayama(NakayamaReport),
    Roots(RootsReport),
    Confluence(ConfluenceOutput),
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) => 2,
        _ => 1,
    }
}

/// Bound from the flag, then the environment, then the file, then the default.
fn degree_bound(cli: &Cli, doc: Option<&Document>) -> Result<usize> {
    if let Some(b) = cli.degree_bound {
        return Ok(b as usize);
    }
    if let Ok(v) = std::env::var(DEGREE_BOUND_ENV) {
        return match v.trim().parse::<usize>() {
            Ok(b) if b >= 1 => Ok(b),
            _ => Err(Error::Parse(format!("{DEGREE_BOUND_ENV} must be a positive integer, got {v:?}"))),
        };
    }
    Ok(doc.and_then(Document::degree_bound).unwrap_or(DEFAULT_DEGREE_BOUND))
}

/// Runs one invocation and returns its report.
pub fn execute(cli: &Cli) -> Result<Output> {
    let tie: TieBreak = cli.tie_break.into();
    if let Verb::Roots { file } = &cli.verb {
        return roots(&crate::io::read_file(file)?, tie).map(Output::Roots);
    }
    let doc = Document::read(cli.verb.file())?;
    let bound = degree_bound(cli, Some(&doc))?;
    match &cli.verb {
        Verb::CheckCy { .. } => match &doc {
            Document::Datum(d) => {
                let mut report = d.datum()?.check_cy(tie)?;
                if d.relations.is_some() {
                    let alg = doc.algebra(bound)?;
                    report.degree_bound = Some(bound);
                    report.notes.push(confluence_note(&alg));
                }
                Ok(Output::Cy(report))
            }
            Document::Lie(l) => {
                let (lie, action) = l.build()?;
                Ok(Output::Cy(check_cy_lie_smash(&lie, &action)?))
            }
            Document::Presentation(_) => Err(Error::InvalidDatum("check-cy needs a Cartan datum or a Lie algebra".into())),
        },
        Verb::LieCheck { .. } => match &doc {
            Document::Lie(l) => {
                let (lie, action) = l.build()?;
                let mut report = check_cy_lie_smash(&lie, &action)?;
                report.command = "lie-check".into();
                Ok(Output::Cy(report))
            }
            _ => Err(Error::InvalidLie("lie-check needs a Lie algebra file".into())),
        },
        Verb::Hdet { .. } => hdet(&doc).map(Output::Hdet),
        Verb::Nakayama { .. } => nakayama(&doc, bound, tie).map(Output::Nakayama),
        Verb::VerifyHopf { .. } => Ok(Output::Check(doc.algebra(bound)?.verify_hopf_axioms()?)),
        Verb::VerifyS2 { .. } => Ok(Output::Check(doc.algebra(bound)?.verify_antipode_square()?)),
        Verb::Confluence { .. } => confluence(&doc.algebra(bound)?, cli.seed).map(Output::Confluence),
        Verb::Roots { .. } => unreachable!(),
    }
}

fn confluence_note(alg: &PresentedAlgebra) -> String {
    if alg.is_confluent() {
        format!("relations are locally confluent up to degree {}", alg.degree_bound())
    } else {
        format!("NonConfluent at bound {}: normal forms may depend on rewrite order", alg.degree_bound())
    }
}

fn roots(text: &str, tie: TieBreak) -> Result<RootsReport> {
    let v: Value = serde_json::from_str(text)?;
    let entries = v.get("cartan").ok_or_else(|| Error::Parse("expected a \"cartan\" key".into()))?;
    let cartan = CartanMatrix::new(serde_json::from_value(entries.clone())?)?;
    let word = cartan.longest_word(tie)?;
    let betas = cartan.beta_sequence(&word)?;
    let closure = cartan.positive_roots_closure()?;
    let matches_closure = betas.len() == closure.len() && betas.iter().all(|b| closure.contains(b));
    if !matches_closure {
        return Err(Error::InvariantViolation("β-sequence differs from the positive roots".into()));
    }
    Ok(RootsReport {
        schema: SCHEMA.into(),
        command: "roots".into(),
        cartan,
        tie_break: tie,
        num_positive_roots: betas.len(),
        reduced_word: word.one_based(),
        betas_display: betas.iter().map(ToString::to_string).collect(),
        betas,
        matches_closure,
    })
}

fn hdet(doc: &Document) -> Result<HdetReport> {
    match doc {
        Document::Datum(d) => {
            let datum = d.datum()?;
            let h = datum.hdet_quantum_affine()?;
            let gr = datum.group();
            let on_generators = (0..gr.rank()).map(|i| gr.eval(&h, &gr.generator(i)?)).collect::<Result<_>>()?;
            Ok(HdetReport {
                schema: SCHEMA.into(),
                command: "hdet".into(),
                family: "quantum-affine".into(),
                trivial: gr.is_trivial(&h),
                hdet: h,
                on_generators,
                notes: vec!["hdet(g) = ∏_i χ_i(g)^-1 on quantum affine space".into()],
            })
        }
        Document::Lie(l) => {
            let (_, action) = l.build()?;
            let h = action.hdet_character()?;
            let gr = action.group();
            let m = gr.exponent();
            let on_generators = (0..gr.rank())
                .map(|i| Ok(CycloNumber::from_rational(action.hdet(&gr.generator(i)?)?, m)))
                .collect::<Result<_>>()?;
            Ok(HdetReport {
                schema: SCHEMA.into(),
                command: "hdet".into(),
                family: "lie".into(),
                trivial: gr.is_trivial(&h),
                hdet: h,
                on_generators,
                notes: vec!["hdet(g) = det ν(g)".into()],
            })
        }
        Document::Presentation(_) => Err(Error::InvalidDatum("hdet needs a Cartan datum or a Lie algebra".into())),
    }
}

fn nakayama(doc: &Document, bound: usize, tie: TieBreak) -> Result<NakayamaReport> {
    let alg = doc.algebra(bound)?;
    let (xi, diag, mut notes) = match doc {
        Document::Datum(d) => {
            let datum = d.datum()?;
            let xi = datum.integral_character_u(tie)?;
            let diag = datum.check_cy_r_from_smash(tie)?.diag;
            (xi, Some(diag), vec!["ξ is the integral character ∏χ_β of the datum".to_string()])
        }
        _ => (alg.group().trivial_character(), None, vec!["no datum given: ξ = ε".to_string()]),
    };
    notes.extend(alg.status_notes());
    let phi = alg.phi_from_antipode()?;
    let (psi, report) = alg.nakayama_a(&xi)?;
    Ok(NakayamaReport {
        schema: SCHEMA.into(),
        command: "nakayama".into(),
        degree_bound: bound,
        xi,
        nakayama_diag: diag,
        phi,
        psi,
        checks: report.checks,
        notes,
    })
}

fn confluence(alg: &PresentedAlgebra, seed: u64) -> Result<ConfluenceOutput> {
    let bound = alg.degree_bound();
    let report = alg.confluence().clone();
    let words = alg.normal_words(bound);
    let normal_words_by_degree = (0..=bound).map(|d| words.iter().filter(|w| w.len() == d).count()).collect();
    let gamma = alg.group();
    let rules = alg
        .rules()
        .iter()
        .map(|r| {
            let rhs: crate::smash::SmashElement = r
                .rhs
                .iter()
                .map(|(w, c)| (crate::smash::Monomial::new(w.clone(), gamma.identity()), c.clone()))
                .collect();
            format!("{} -> {}", r.lhs, rhs.format(gamma))
        })
        .collect();
    // rewrite random words with random redex choices and compare with the fixed strategy
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = alg.generators() as u16;
    let mut counterexample = None;
    if t > 0 {
        for _ in 0..RANDOM_WORDS {
            let len = rng.gen_range(0..=bound);
            let w = Word((0..len).map(|_| rng.gen_range(0..t)).collect());
            let fixed = alg.reduce_word(&w).to_vec();
            if alg.reduce_word_randomly(&w, &mut rng) != fixed {
                counterexample = Some(w.to_string());
                break;
            }
        }
    }
    let checks = vec![CheckEntry {
        check: "rewrite-order-independence".into(),
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        cases: if t > 0 { RANDOM_WORDS } else { 0 },
        counterexample,
    }];
    Ok(ConfluenceOutput {
        schema: SCHEMA.into(),
        command: "confluence".into(),
        degree_bound: bound,
        confluent: report.is_confluent(),
        rules,
        ambiguities_checked: report.ambiguities_checked,
        divergences: report.divergences,
        normal_words_by_degree,
        checks,
        notes: vec![confluence_note(alg), format!("random rewrite orders drawn with seed {seed}")],
    })
}

fn scalars(v: &[CycloNumber]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn render_checks(out: &mut String, checks: &[CheckEntry]) {
    for c in checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {status:4} {} ({} cases)", c.check, c.cases);
        if let Some(x) = &c.counterexample {
            let _ = writeln!(out, "       counterexample: {x}");
        }
    }
}

fn render_notes(out: &mut String, notes: &[String]) {
    for n in notes {
        let _ = writeln!(out, "note: {n}");
    }
}

/// Text rendering of a report; carries the same data as the JSON form.
pub fn render_text(o: &Output) -> String {
    let mut out = String::new();
    match o {
        Output::Cy(r) => {
            let _ = writeln!(out, "family: {}", r.family);
            let _ = writeln!(out, "cy_R: {}", r.cy_r);
            let _ = writeln!(out, "cy_smash: {}", r.cy_smash);
            let _ = writeln!(out, "cy_dimension: {}", r.cy_dimension);
            let _ = writeln!(out, "shift: {}", r.shift);
            let _ = writeln!(out, "integral_character: {}", r.integral_character);
            let _ = writeln!(out, "integral_trivial: {}", r.integral_trivial);
            let _ = writeln!(out, "integral_on_generators: {}", scalars(&r.integral_on_generators));
            match &r.hdet {
                Some(h) => {
                    let _ = writeln!(out, "hdet: {h}");
                }
                None => {
                    let _ = writeln!(out, "hdet: n/a");
                }
            }
            let _ = writeln!(out, "nakayama_diag: {}", scalars(&r.nakayama_diag));
            match &r.inner_witness {
                Some(w) => {
                    let _ = writeln!(out, "inner_witness: {}·{}", w.scalar, w.element_word);
                }
                None => {
                    let _ = writeln!(out, "inner_witness: none");
                }
            }
            if let Some(b) = r.degree_bound {
                let _ = writeln!(out, "degree_bound: {b}");
            }
            let _ = writeln!(out, "criteria:");
            for c in &r.criteria {
                let _ = write!(out, "  {:5} {}", c.holds, c.name);
                if !c.detail.is_empty() {
                    let _ = write!(out, ": {}", c.detail);
                }
                out.push('\n');
            }
            render_notes(&mut out, &r.notes);
        }
        Output::Check(r) => {
            let _ = writeln!(out, "{} (degree bound {})", r.command, r.degree_bound);
            render_checks(&mut out, &r.checks);
            let _ = writeln!(out, "result: {}", if r.all_passed() { "all checks pass" } else { "FAILED" });
            render_notes(&mut out, &r.notes);
        }
        Output::Hdet(r) => {
            let _ = writeln!(out, "family: {}", r.family);
            let _ = writeln!(out, "hdet: {} (trivial: {})", r.hdet, r.trivial);
            let _ = writeln!(out, "on generators: {}", scalars(&r.on_generators));
            render_notes(&mut out, &r.notes);
        }
        Output::Nakayama(r) => {
            let _ = writeln!(out, "nakayama (degree bound {})", r.degree_bound);
            let _ = writeln!(out, "xi: {}", r.xi);
            if let Some(d) = &r.nakayama_diag {
                let _ = writeln!(out, "nakayama_diag of R: {}", scalars(d));
            }
            let _ = writeln!(out, "phi on generators: {}", scalars(&r.phi.generator_scalars));
            let _ = writeln!(out, "psi on generators: {}", scalars(&r.psi.generator_scalars));
            let _ = writeln!(out, "psi on group: g -> xi(g) g with xi = {}", r.psi.group_character);
            render_checks(&mut out, &r.checks);
            render_notes(&mut out, &r.notes);
        }
        Output::Roots(r) => {
            let _ = writeln!(out, "positive roots: {}", r.num_positive_roots);
            let _ = writeln!(out, "reduced word ({:?} tie-break): {:?}", r.tie_break, r.reduced_word);
            for (k, b) in r.betas_display.iter().enumerate() {
                let _ = writeln!(out, "  β{} = {b}", k + 1);
            }
            let _ = writeln!(out, "matches closure: {}", r.matches_closure);
        }
        Output::Confluence(r) => {
            let _ = writeln!(out, "confluent: {} (degree bound {})", r.confluent, r.degree_bound);
            for rule in &r.rules {
                let _ = writeln!(out, "  {rule}");
            }
            let _ = writeln!(out, "ambiguities checked: {}", r.ambiguities_checked);
            for d in &r.divergences {
                let _ = writeln!(out, "  divergence at {}: {} vs {}", d.word, d.left, d.right);
            }
            let _ = writeln!(out, "normal words by degree: {:?}", r.normal_words_by_degree);
            render_checks(&mut out, &r.checks);
            render_notes(&mut out, &r.notes);
        }
    }
    out
}

fn error_json(e: &Error) -> String {
    let v = serde_json::json!({
        "schema": SCHEMA,
        "error": { "exit_code": exit_code(e), "message": e.to_string() },
    });
    serde_json::to_string_pretty(&v).expect("serializable")
}

/// Parses `args`, runs the verb and writes the report; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{}", e.render()) } else { write!(stdout, "{}", e.render()) };
            return code;
        }
    };
    let result = execute(&cli);
    match result {
        Ok(output) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&output).expect("serializable") + "\n"
            } else {
                render_text(&output)
            };
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", error_json(&e));
            }
            let _ = writeln!(stderr, "error ({}): {e}", cli.verb.name());
            exit_code(&e)
        }
    }
}
