//! Each command produces its stdout text and an exit status.

use crate::input::{choose_field, InputDocument, LoadedInput};
use crate::verify::{run_corpus, CorpusOptions};
use crate::CliError;
use gentle_bases::{alt_basis, center_basis, hh1_basis, hh1_dual_basis, CohomologyElement};
use gentle_cochain::SummandDims;
use gentle_core::{Field, GentlePresentation};
use gentle_lie::{classify_algebras, constants_csv, constants_json, structure_constants, LieAlgebra, Target};
use gentle_ribbon::{
    admissible_cuts, brauer_dot, euler_report, find_alt_free_cut, marked_ribbon_dot, ribbon_graph, rotation_system_json,
    round_trip_holds, trivial_extension_quiver,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write;
use std::path::Path;
use std::time::Instant;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Format {
    Json,
    Text,
}

/// What a command prints and how the process exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, ok: bool) -> Outcome {
        Outcome { stdout, code: if ok { 0 } else { 3 } }
    }
}

/// Options shared by commands that read an input document.
#[derive(Clone, Debug, Default)]
pub struct Common {
    pub field: Option<String>,
    pub timing: bool,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn header(name: &str, args: Value, input: &LoadedInput, field: Field) -> Value {
    let d = &input.document;
    json!({
        "schema": SCHEMA,
        "command": { "name": name, "args": args },
        "input": {
            "sha256": input.digest,
            "vertices": d.vertices.len(),
            "arrows": d.arrows.len(),
            "relations": d.relations.len(),
        },
        "field": field.label(),
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    let (Value::Object(b), Value::Object(e)) = (&mut base, extra) else { unreachable!("objects") };
    b.extend(e);
    base
}

fn finish(report: Value, common: &Common, started: Instant) -> Value {
    if common.timing {
        merge(report, json!({ "timing_ms": started.elapsed().as_millis() as u64 }))
    } else {
        report
    }
}

fn load(file: &Path, common: &Common) -> Result<(LoadedInput, GentlePresentation, Field), CliError> {
    let input = InputDocument::read(file)?;
    let g = input.document.presentation().map_err(CliError::Invalid)?;
    let field = choose_field(common.field.as_deref(), &input.document)?;
    Ok((input, g, field))
}

fn error_record(kind: &str, message: String) -> Value {
    json!({ "kind": kind, "message": message })
}

/// Exit 0 iff the document is a gentle presentation; otherwise exit 2
/// with the error list.
pub fn validate(file: &Path) -> Result<Outcome, CliError> {
    let input = InputDocument::read(file);
    let (digest, errors) = match &input {
        Err(CliError::Schema(message)) => (Value::Null, vec![error_record("Schema", message.clone())]),
        Err(e) => return Err(e.clone()),
        Ok(input) => {
            let errors = match input.document.presentation() {
                Ok(_) => vec![],
                Err(e) => vec![error_record(e.kind(), e.to_string())],
            };
            let errors = match &input.document.field {
                Some(spec) => match spec.resolve() {
                    Ok(_) => errors,
                    Err(e) => [errors, vec![error_record("Field", e.to_string())]].concat(),
                },
                None => errors,
            };
            (json!(input.digest), errors)
        }
    };
    let valid = errors.is_empty();
    let report = json!({
        "schema": SCHEMA,
        "command": { "name": "validate", "args": {} },
        "input": { "sha256": digest },
        "valid": valid,
        "errors": errors,
    });
    Ok(Outcome { stdout: pretty(&report), code: if valid { 0 } else { 2 } })
}

#[derive(Clone, Debug, Serialize)]
struct ElementRecord {
    tag: &'static str,
    arguments: Vec<String>,
    label: String,
}

#[derive(Clone, Debug, Serialize)]
struct SummandRecord {
    name: &'static str,
    dim: usize,
    oracle_dim: usize,
    #[serde(rename = "match")]
    matches: bool,
    basis: Vec<ElementRecord>,
}

fn summand(g: &GentlePresentation, name: &'static str, basis: Vec<CohomologyElement>, oracle_dim: usize) -> SummandRecord {
    let basis: Vec<ElementRecord> = basis
        .iter()
        .map(|e| ElementRecord { tag: e.kind(), arguments: e.arguments(g), label: e.label(g) })
        .collect();
    SummandRecord { name, dim: basis.len(), oracle_dim, matches: basis.len() == oracle_dim, basis }
}

fn summands(g: &GentlePresentation, field: Field, which: Target) -> Vec<SummandRecord> {
    let dims = SummandDims::of(g, field);
    let h1 = summand(g, "hh1", hh1_basis(g, field), dims.hh1);
    match which {
        Target::Algebra => vec![h1],
        Target::TrivialExtension => vec![
            summand(g, "center", center_basis(g, field), dims.center),
            summand(g, "hh1_dual", hh1_dual_basis(g, field), dims.hh1_dual),
            h1,
            summand(g, "alt", alt_basis(g, field), dims.alt),
        ],
    }
}

fn target_name(which: Target) -> &'static str {
    match which {
        Target::Algebra => "A",
        Target::TrivialExtension => "TA",
    }
}

/// Bases of `HH¹(A)` or of the four summands of `HH¹(TA)`, cross-checked
/// against the cochain complexes.
pub fn hh1(file: &Path, which: Target, format: Format, common: &Common) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (input, g, field) = load(file, common)?;
    let parts = summands(&g, field, which);
    let dim: usize = parts.iter().map(|s| s.dim).sum();
    let oracle_dim: usize = parts.iter().map(|s| s.oracle_dim).sum();
    let ok = parts.iter().all(|s| s.matches);
    let report = merge(
        header("hh1", json!({ "of": target_name(which), "format": format }), &input, field),
        json!({ "dim": dim, "oracle_dim": oracle_dim, "match": ok, "summands": parts }),
    );
    let report = finish(report, common, started);
    let stdout = match format {
        Format::Json => pretty(&report),
        Format::Text => {
            let mut out = String::new();
            let space = if which == Target::Algebra { "HH¹(A)" } else { "HH¹(TA)" };
            let verdict = if ok { "match" } else { "MISMATCH" };
            writeln!(out, "{space} over {field}: dim {dim} (oracle {oracle_dim}, {verdict})").unwrap();
            for s in &parts {
                let labels: Vec<&str> = s.basis.iter().map(|e| e.label.as_str()).collect();
                let listed = if labels.is_empty() { "none".to_string() } else { labels.join(", ") };
                writeln!(out, "  {} [{}; oracle {}]: {listed}", s.name, s.dim, s.oracle_dim).unwrap();
            }
            out
        }
    };
    Ok(Outcome::new(stdout, ok))
}

fn lie_flags(l: &LieAlgebra) -> Value {
    json!({
        "dim": l.dim(),
        "abelian": l.is_abelian(),
        "solvable": l.is_solvable(),
        "nilpotent": l.is_nilpotent(),
        "center_dim": l.center_dim(),
        "derived_series": l.derived_series(),
        "lower_central_series": l.lower_central_series(),
    })
}

/// Structure constants, derived and lower central series and the
/// classification flags.
pub fn lie(file: &Path, which: Target, format: Format, csv: Option<&Path>, common: &Common) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (input, g, field) = load(file, common)?;
    let l = structure_constants(&g, field, which).map_err(|e| CliError::Invariant(e.to_string()))?;
    if let Some(path) = csv {
        write_file(path, &constants_csv(&l))?;
    }
    let classification = match which {
        Target::Algebra => Value::Null,
        Target::TrivialExtension => {
            let a = structure_constants(&g, field, Target::Algebra).map_err(|e| CliError::Invariant(e.to_string()))?;
            serde_json::to_value(classify_algebras(&g, field, &a, &l)).expect("serializable")
        }
    };
    let report = merge(
        header("lie", json!({ "of": target_name(which), "format": format }), &input, field),
        json!({
            "algebra": lie_flags(&l),
            "structure_constants": constants_json(&l),
            "classification": classification,
        }),
    );
    let report = finish(report, common, started);
    let stdout = match format {
        Format::Json => pretty(&report),
        Format::Text => {
            let mut out = String::new();
            let space = if which == Target::Algebra { "HH¹(A)" } else { "HH¹(TA)" };
            writeln!(out, "{space} over {field}: dim {}", l.dim()).unwrap();
            for (i, label) in l.labels().iter().enumerate() {
                writeln!(out, "  x{i} = {label}").unwrap();
            }
            for i in 0..l.dim() {
                for j in i + 1..l.dim() {
                    let v = l.constant(i, j);
                    if v.iter().any(|c| !c.is_zero()) {
                        writeln!(out, "  [x{i}, x{j}] = {}", render_coordinates(v)).unwrap();
                    }
                }
            }
            let d = l.derived_series();
            let c = l.lower_central_series();
            writeln!(out, "abelian: {}", l.is_abelian()).unwrap();
            writeln!(out, "derived series: {:?} (solvable: {})", d.dims, d.terminated).unwrap();
            writeln!(out, "lower central series: {:?} (nilpotent: {})", c.dims, c.terminated).unwrap();
            if let Some(flag) = report["classification"]["gl2_flag"].as_bool() {
                writeln!(out, "gl(2) invariants: {flag}").unwrap();
            }
            out
        }
    };
    Ok(Outcome::new(stdout, true))
}

fn render_coordinates(v: &[gentle_core::Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match c {
            c if c.is_one() => format!("x{k}"),
            c if (-c).is_one() => format!("-x{k}"),
            c => format!("{c}·x{k}"),
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// The marked ribbon graph: DOT and rotation-system exports plus the
/// Euler identities.
pub fn ribbon(file: &Path, dot: Option<&Path>, json_out: Option<&Path>, common: &Common) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (input, g, field) = load(file, common)?;
    let marked = ribbon_graph(&g);
    let graph = marked.graph();
    let dot_text = marked_ribbon_dot(&marked);
    if let Some(path) = dot {
        write_file(path, &dot_text)?;
    }
    let rotation = rotation_system_json(graph, Some(&marked));
    if let Some(path) = json_out {
        write_file(path, &pretty(&rotation))?;
    }
    if dot.is_none() && json_out.is_none() {
        return Ok(Outcome::new(dot_text, true));
    }
    let euler = euler_report(&g);
    let ok = euler.identities_hold(&g);
    let report = merge(
        header("ribbon", json!({ "dot": dot, "json": json_out }), &input, field),
        json!({
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "euler": euler,
            "identities_hold": ok,
        }),
    );
    Ok(Outcome::new(pretty(&finish(report, common, started)), ok))
}

/// Quiver and relations of the trivial extension as a Brauer graph algebra.
pub fn trivext(file: &Path, dot: Option<&Path>, common: &Common) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (input, g, field) = load(file, common)?;
    let brauer = trivial_extension_quiver(&g);
    if let Some(path) = dot {
        write_file(path, &brauer_dot(&brauer))?;
    }
    let ok = round_trip_holds(&g);
    let report = merge(
        header("trivext", json!({ "dot": dot }), &input, field),
        json!({ "brauer": brauer.summary(), "round_trip": ok }),
    );
    Ok(Outcome::new(pretty(&finish(report, common, started)), ok))
}

fn shape(g: &GentlePresentation) -> Value {
    if g.is_kronecker() {
        json!("kronecker")
    } else if g.is_nakayama_two_cycle() {
        json!("nakayama-two-cycle")
    } else if g.is_ground_field() {
        json!("ground-field")
    } else if g.is_loop_square_zero() {
        json!("loop-square-zero")
    } else {
        Value::Null
    }
}

fn cut_record(cut: &gentle_ribbon::Cut, field: Field) -> Value {
    let g = &cut.algebra;
    json!({
        "removed": cut.removed,
        "algebra": InputDocument::from_presentation(g, None),
        "shape": shape(g),
        "alt_dim": alt_basis(g, field).len(),
    })
}

/// Admissible cuts of the (unmarked) ribbon graph of the input.
pub fn cuts(file: &Path, alt_free: bool, common: &Common) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let (input, g, field) = load(file, common)?;
    let gamma = ribbon_graph(&g).unmark();
    let (records, ok) = if alt_free {
        match find_alt_free_cut(&gamma, field) {
            Ok(cut) => (vec![cut_record(&cut, field)], true),
            Err(_) => (vec![], false),
        }
    } else {
        (admissible_cuts(&gamma).map(|c| cut_record(&c, field)).collect(), true)
    };
    let report = merge(
        header("cuts", json!({ "alt_free": alt_free }), &input, field),
        json!({ "count": records.len(), "cuts": records }),
    );
    Ok(Outcome::new(pretty(&finish(report, common, started)), ok))
}

/// The invariant suite over every gentle presentation within the bounds.
pub fn corpus(options: &CorpusOptions, format: Format, common: &Common) -> Outcome {
    let started = Instant::now();
    let summary = run_corpus(options);
    let ok = summary.all_passed;
    let report = finish(serde_json::to_value(&summary).expect("serializable"), common, started);
    let stdout = match format {
        Format::Json => pretty(&report),
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{} algebras (≤ {} vertices, ≤ {} arrows) over {}",
                summary.algebras,
                summary.max_vertices,
                summary.max_arrows,
                summary.fields.join(", ")
            )
            .unwrap();
            for s in &summary.invariants {
                let verdict = if s.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} ({} checked, {} failed)", s.name, s.checked, s.failures).unwrap();
                if let Some(c) = &s.counterexample {
                    writeln!(out, "  counterexample: {c}").unwrap();
                }
            }
            let c = &summary.char_two;
            writeln!(
                out,
                "characteristic 2 elements: {} Char2Loop, {} Char2LoopDual, {} Psi",
                c.char2_loops, c.char2_loop_duals, c.psi_elements
            )
            .unwrap();
            out
        }
    };
    Outcome::new(stdout, ok)
}
