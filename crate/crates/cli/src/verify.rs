//! The invariant suite run over an enumerated corpus.

use crate::input::InputDocument;
use gentle_bases::{
    alt_basis, center_basis, hh1_basis, hh1_dual_basis, trivial_extension_hh1_basis, CohomologyElement, Summand,
};
use gentle_cochain::{d0_matrix, d1_matrix, homology_dual_matrices, SummandDims};
use gentle_core::{corpus, fundamental_cycles, Field, GentlePresentation};
use gentle_lie::{
    classify_algebras, structure_constants, trivial_extension_oracle, Classification, CohomologyBracket, LieAlgebra,
    Target,
};
use gentle_ribbon::{euler_report, find_alt_free_cut, ribbon_graph, round_trip_holds};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub type Verdict = Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Structural basis sizes equal the cochain-complex dimensions, summand by summand.
pub fn oracle_dimensions(g: &GentlePresentation, field: Field) -> Verdict {
    let oracle = SummandDims::of(g, field);
    let structural = SummandDims {
        center: center_basis(g, field).len(),
        hh1_dual: hh1_dual_basis(g, field).len(),
        hh1: hh1_basis(g, field).len(),
        alt: alt_basis(g, field).len(),
    };
    ensure(structural == oracle, || format!("structural {structural:?} vs oracle {oracle:?}"))
}

/// `d¹∘d⁰ = 0` and `d₁∘d₀ = 0`.
pub fn complexes_square_to_zero(g: &GentlePresentation, field: Field) -> Verdict {
    ensure(d1_matrix(g, field).after(&d0_matrix(g, field)).is_zero(), || "d¹∘d⁰ ≠ 0".into())?;
    let (e0, e1) = homology_dual_matrices(g, field);
    ensure(e1.after(&e0).is_zero(), || "d₁∘d₀ ≠ 0".into())
}

/// Both Lie algebras; construction checks antisymmetry and Jacobi.
pub fn lie_algebras(g: &GentlePresentation, field: Field) -> Result<(LieAlgebra, LieAlgebra), String> {
    let a = structure_constants(g, field, Target::Algebra).map_err(|e| format!("HH¹(A): {e}"))?;
    let ta = structure_constants(g, field, Target::TrivialExtension).map_err(|e| format!("HH¹(TA): {e}"))?;
    Ok((a, ta))
}

fn indices(l: &LieAlgebra, summands: &[Summand]) -> Vec<usize> {
    (0..l.dim()).filter(|&i| summands.contains(&l.basis()[i].summand())).collect()
}

fn brackets_within(l: &LieAlgebra, left: &[usize], right: &[usize], target: &[usize]) -> Option<(usize, usize)> {
    left.iter().flat_map(|&i| right.iter().map(move |&j| (i, j))).find(|&(i, j)| {
        l.constant(i, j).iter().enumerate().any(|(k, c)| !c.is_zero() && !target.contains(&k))
    })
}

/// `HH¹(A)` and `L = Z(A) ⊕ HH¹(A)` are subalgebras, `[L, P] ⊆ P` and
/// `[P, P] ⊆ L` for `P = HH₁(A)* ⊕ Alt_A(DA)`.
pub fn summand_closure(ta: &LieAlgebra) -> Verdict {
    use Summand::*;
    let h1 = indices(ta, &[H1]);
    let even = indices(ta, &[Center, H1]);
    let odd = indices(ta, &[H1Dual, Alt]);
    let checks = [
        ("[HH¹, HH¹] ⊆ HH¹", &h1, &h1, &h1),
        ("[L, L] ⊆ L", &even, &even, &even),
        ("[L, P] ⊆ P", &even, &odd, &odd),
        ("[P, P] ⊆ L", &odd, &odd, &even),
    ];
    for (name, left, right, target) in checks {
        if let Some((i, j)) = brackets_within(ta, left, right, target) {
            return Err(format!("{name} fails at [{}, {}]", ta.labels()[i], ta.labels()[j]));
        }
    }
    Ok(())
}

/// The substitution formula agrees with the derivation commutator on all
/// pairs of basis cocycles.
pub fn bracket_oracle_agrees(g: &GentlePresentation, field: Field) -> Verdict {
    let br = CohomologyBracket::new(g, field);
    let basis = hh1_basis(g, field);
    for x in &basis {
        for y in &basis {
            let (cx, cy) = (x.cochain(g, field).unwrap(), y.cochain(g, field).unwrap());
            let formula = br.bracket(&cx, &cy).map_err(|e| e.to_string())?;
            let oracle = br.oracle(&cx, &cy).map_err(|e| e.to_string())?;
            ensure(formula == oracle, || format!("[{}, {}] differs", x.label(g), y.label(g)))?;
        }
    }
    Ok(())
}

/// `χ(Q) = χ(Γ)`, `|M̄| = 2|Q₀| − |Q₁|` and `#fundamental cycles = 1 − χ(Q)`.
pub fn graph_identities(g: &GentlePresentation) -> Verdict {
    let report = euler_report(g);
    ensure(report.identities_hold(g), || format!("{report:?}"))?;
    let cycles = fundamental_cycles(g.quiver()).cycle_count as i64;
    ensure(cycles == 1 - report.quiver, || format!("{cycles} fundamental cycles, χ = {}", report.quiver))
}

/// The Brauer algebra of the unmarked ribbon graph has quiver `Q ∪ {β_m}`.
pub fn trivial_extension_round_trip(g: &GentlePresentation) -> Verdict {
    ensure(round_trip_holds(g), || "Brauer quiver differs from Q ∪ {β_m}".into())
}

/// Away from characteristic 2, `HH¹(A)` is solvable iff `A` is not the
/// Kronecker algebra; in characteristic 2 it is always solvable.
pub fn solvability_dichotomy(g: &GentlePresentation, field: Field, c: &Classification) -> Verdict {
    let expected = field.is_char_two() || !g.is_kronecker();
    ensure(c.solvable_a == expected, || format!("solvable(HH¹(A)) = {}", c.solvable_a))
}

/// `HH¹(TA)` is nilpotent iff the four structural conditions hold.
pub fn nilpotency_conditions(c: &Classification) -> Verdict {
    ensure(c.conditions_agree(), || {
        format!("nilpotent = {}, conditions {:?}", c.nilpotent_ta, c.nilpotency_conditions)
    })
}

pub fn nilpotent_implies_abelian(c: &Classification) -> Verdict {
    ensure(!c.nilpotent_ta || c.abelian_ta, || "nilpotent but not abelian".into())
}

/// Away from characteristic 2, `HH¹(TA)` is non-solvable exactly for the
/// Kronecker algebra and the Nakayama 2-cycle, and then has the invariants of `gl(2)`.
pub fn gl2_dichotomy(g: &GentlePresentation, field: Field, c: &Classification) -> Option<Verdict> {
    if field.is_char_two() {
        return None;
    }
    let exceptional = g.is_kronecker() || g.is_nakayama_two_cycle();
    Some(ensure(c.solvable_ta != exceptional && c.gl2_flag == exceptional, || {
        format!("solvable(HH¹(TA)) = {}, gl(2) invariants = {}", c.solvable_ta, c.gl2_flag)
    }))
}

/// Some admissible cut of the ribbon graph has `Alt = 0`.
pub fn alt_free_cut(g: &GentlePresentation, field: Field) -> Verdict {
    find_alt_free_cut(&ribbon_graph(g).unmark(), field).map(|_| ()).map_err(|e| e.to_string())
}

/// The tabulated brackets of `HH¹(TA)` equal commutators of derivations of `TA`.
pub fn rules_match_derivations(g: &GentlePresentation, field: Field, ta: &LieAlgebra) -> Verdict {
    let oracle = trivial_extension_oracle(g, field).map_err(|e| e.to_string())?;
    ensure(&oracle == ta, || "structure constants differ from the derivation commutators".into())
}

/// Names of the invariants, in report order.
pub const INVARIANTS: [&str; 13] = [
    "oracle-dimensions",
    "complexes-square-to-zero",
    "lie-axioms",
    "summand-closure",
    "bracket-oracle",
    "graph-identities",
    "trivial-extension-round-trip",
    "solvability-dichotomy",
    "nilpotency-conditions",
    "nilpotent-implies-abelian",
    "gl2-dichotomy",
    "alt-free-cut",
    "rules-match-derivations",
];

/// Verdicts aligned with [`INVARIANTS`]; `None` where a check does not apply.
pub fn check_algebra(g: &GentlePresentation, field: Field, field_independent: bool, deep: bool) -> Vec<Option<Verdict>> {
    let mut out: Vec<Option<Verdict>> = vec![None; INVARIANTS.len()];
    out[0] = Some(oracle_dimensions(g, field));
    out[1] = Some(complexes_square_to_zero(g, field));
    let algebras = lie_algebras(g, field);
    out[2] = Some(algebras.as_ref().map(|_| ()).map_err(Clone::clone));
    out[4] = Some(bracket_oracle_agrees(g, field));
    if field_independent {
        out[5] = Some(graph_identities(g));
        out[6] = Some(trivial_extension_round_trip(g));
    }
    out[11] = Some(alt_free_cut(g, field));
    if let Ok((a, ta)) = &algebras {
        let c = classify_algebras(g, field, a, ta);
        out[3] = Some(summand_closure(ta));
        out[7] = Some(solvability_dichotomy(g, field, &c));
        out[8] = Some(nilpotency_conditions(&c));
        out[9] = Some(nilpotent_implies_abelian(&c));
        out[10] = gl2_dichotomy(g, field, &c);
        if deep {
            out[12] = Some(rules_match_derivations(g, field, ta));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantSummary {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub passed: bool,
    /// The first failure in corpus order.
    pub counterexample: Option<Value>,
}

/// How often the characteristic-2 elements occur in the canonical bases.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CharTwoCounts {
    pub char2_loops: usize,
    pub char2_loop_duals: usize,
    pub psi_elements: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub schema: u32,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub fields: Vec<String>,
    pub deep: bool,
    pub algebras: usize,
    pub invariants: Vec<InvariantSummary>,
    pub char_two: CharTwoCounts,
    pub all_passed: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub fields: Vec<Field>,
    /// Also compare against the derivation model of `TA`.
    pub deep: bool,
}

fn count_char_two(basis: &[CohomologyElement], counts: &mut CharTwoCounts) {
    for e in basis {
        match e {
            CohomologyElement::Char2Loop(_) => counts.char2_loops += 1,
            CohomologyElement::Char2LoopDual(_) => counts.char2_loop_duals += 1,
            CohomologyElement::PsiEP(..) | CohomologyElement::PsiPP(_) => counts.psi_elements += 1,
            _ => {}
        }
    }
}

/// Runs every invariant on every algebra and field; results merge in corpus order.
pub fn run_corpus(options: &CorpusOptions) -> CorpusSummary {
    let algebras = corpus::enumerate(options.max_vertices, options.max_arrows);
    let per_algebra: Vec<(Vec<Vec<Option<Verdict>>>, CharTwoCounts)> = algebras
        .par_iter()
        .map(|g| {
            let mut counts = CharTwoCounts::default();
            let verdicts = options
                .fields
                .iter()
                .enumerate()
                .map(|(i, &field)| {
                    if field.is_char_two() {
                        count_char_two(&trivial_extension_hh1_basis(g, field), &mut counts);
                    }
                    check_algebra(g, field, i == 0, options.deep)
                })
                .collect();
            (verdicts, counts)
        })
        .collect();

    let mut invariants: Vec<InvariantSummary> = INVARIANTS
        .iter()
        .map(|&name| InvariantSummary { name, checked: 0, failures: 0, passed: true, counterexample: None })
        .collect();
    let mut char_two = CharTwoCounts::default();
    for (g, (verdicts, counts)) in algebras.iter().zip(per_algebra) {
        char_two.char2_loops += counts.char2_loops;
        char_two.char2_loop_duals += counts.char2_loop_duals;
        char_two.psi_elements += counts.psi_elements;
        for (&field, row) in options.fields.iter().zip(verdicts) {
            for (summary, verdict) in invariants.iter_mut().zip(row) {
                let Some(verdict) = verdict else { continue };
                summary.checked += 1;
                if let Err(detail) = verdict {
                    summary.failures += 1;
                    summary.passed = false;
                    summary.counterexample.get_or_insert_with(|| {
                        json!({
                            "algebra": InputDocument::from_presentation(g, Some(field)),
                            "field": field.label(),
                            "detail": detail,
                        })
                    });
                }
            }
        }
    }
    if !options.deep {
        invariants.retain(|s| s.name != "rules-match-derivations");
    }
    let all_passed = invariants.iter().all(|s| s.passed);
    CorpusSummary {
        schema: crate::commands::SCHEMA,
        max_vertices: options.max_vertices,
        max_arrows: options.max_arrows,
        fields: options.fields.iter().map(|f| f.label()).collect(),
        deep: options.deep,
        algebras: algebras.len(),
        invariants,
        char_two,
        all_passed,
    }
}
