//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

use gentle_bases::{alt_basis, center_basis, hh1_basis, hh1_dual_basis, trivial_extension_hh1_basis, CohomologyElement};
use gentle_cli::verify;
use gentle_cochain::SummandDims;
use gentle_core::{catalog, corpus, Field, GentlePresentation, Scalar};
use gentle_lie::{classify, hh1_algebra_on, structure_constants, LieAlgebra, Target};
use gentle_ribbon::{admissible_cuts, star_graph};
use std::time::{Duration, Instant};

const Q: Field = Field::Rational;
const F2: Field = Field::Prime(2);
const F3: Field = Field::Prime(3);
const CORPUS_FIELDS: [Field; 3] = [Q, F2, F3];
const MAX_VERTICES: usize = 3;
const MAX_ARROWS: usize = 4;
/// Lower bound for "several hundred labeled instances".
const MIN_CORPUS_SIZE: usize = 200;
const ORACLE_RUNTIME_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn check(ok: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(failure())
    }
}

fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

fn describe(g: &GentlePresentation) -> String {
    let q = g.quiver();
    let arrows: Vec<_> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    format!("{} vertices, arrows {arrows:?}, relations {:?}", q.vertex_count(), g.relations())
}

fn compare_table(l: &LieAlgebra, expected: &[[[i64; 3]; 3]; 3], what: &str) -> Result<(), String> {
    for i in 0..3 {
        for j in 0..3 {
            let want = ints(l.field(), &expected[i][j]);
            check(l.constant(i, j) == want.as_slice(), || {
                format!("{what}: [{}, {}] = {:?}, expected {:?}", l.labels()[i], l.labels()[j], l.constant(i, j), want)
            })?;
        }
    }
    Ok(())
}

fn kronecker_golden() -> Outcome {
    let g = catalog::kronecker();
    let q = g.quiver();
    let (b1, b2) = (q.arrow_index("b1").unwrap(), q.arrow_index("b2").unwrap());
    // (b1,b2), (b2,b1), (b1,b1)
    let basis = vec![
        CohomologyElement::Shortcut(b1, q.arrow_path(b2)),
        CohomologyElement::Shortcut(b2, q.arrow_path(b1)),
        CohomologyElement::FundCycle(b1),
    ];
    let l = hh1_algebra_on(&g, Q, basis).map_err(|e| e.to_string())?;
    check(hh1_basis(&g, Q).len() == 3, || "canonical basis is not 3-dimensional".into())?;
    let table = [
        [[0, 0, 0], [0, 0, -2], [1, 0, 0]],
        [[0, 0, 2], [0, 0, 0], [0, -1, 0]],
        [[-1, 0, 0], [0, 1, 0], [0, 0, 0]],
    ];
    compare_table(&l, &table, "golden table")?;
    let derived = l.derived_series();
    check(!derived.terminated && derived.dims == [3, 3], || format!("derived series {:?}", derived.dims))?;

    // (b1,b1) ↦ h/2, (b1,b2) ↦ f, (b2,b1) ↦ e, so h = 2(b1,b1), e = (b2,b1), f = (b1,b2)
    let m = vec![ints(Q, &[0, 0, 2]), ints(Q, &[0, 1, 0]), ints(Q, &[1, 0, 0])];
    let sl2 = l.change_basis(&m, vec!["h".into(), "e".into(), "f".into()]).ok_or("singular basis change")?;
    let standard = [
        [[0, 0, 0], [0, 2, 0], [0, 0, -2]],
        [[0, -2, 0], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 2], [-1, 0, 0], [0, 0, 0]],
    ];
    compare_table(&sl2, &standard, "sl(2) table")?;

    let ta = structure_constants(&g, Q, Target::TrivialExtension).map_err(|e| e.to_string())?;
    check(ta.dim() == 4 && ta.center_dim() == 1, || format!("HH¹(TA): dim {}, centre {}", ta.dim(), ta.center_dim()))?;
    Ok("dim 3, golden table exact, derived series (3, 3), sl(2) table exact, HH¹(TA) dim 4 with 1-dim centre".into())
}

fn structural_dims(g: &GentlePresentation, field: Field) -> [usize; 4] {
    [
        center_basis(g, field).len(),
        hh1_dual_basis(g, field).len(),
        hh1_basis(g, field).len(),
        alt_basis(g, field).len(),
    ]
}

fn oracle_dims(g: &GentlePresentation, field: Field) -> [usize; 4] {
    let d = SummandDims::of(g, field);
    [d.center, d.hh1_dual, d.hh1, d.alt]
}

fn degenerate_cases() -> Outcome {
    let k = catalog::ground_field();
    for (field, dim) in [(Q, 1), (F2, 2)] {
        let structural = trivial_extension_hh1_basis(&k, field).len();
        let oracle = SummandDims::of(&k, field).total();
        check(structural == dim && oracle == dim, || {
            format!("A = K over {field}: structural {structural}, oracle {oracle}, expected {dim}")
        })?;
    }
    let x = catalog::loop_square_zero();
    for (field, dims) in [(Q, [2, 1, 1, 0]), (F2, [2, 2, 2, 2])] {
        let (s, o) = (structural_dims(&x, field), oracle_dims(&x, field));
        check(s == dims && o == dims, || format!("loop over {field}: structural {s:?}, oracle {o:?}, expected {dims:?}"))?;
    }
    Ok("A = K: 1 / 2; loop x² = 0: (2,1,1,0) / (2,2,2,2)".into())
}

fn worked_examples() -> Outcome {
    let c = classify(&catalog::triangle_with_tail(), Q).map_err(|e| e.to_string())?;
    check(c.dim_ta == 2 && c.nilpotent_ta && c.abelian_ta, || {
        format!("I = {{ba, db}}: dim {}, nilpotent {}, abelian {}", c.dim_ta, c.nilpotent_ta, c.abelian_ta)
    })?;
    let g = catalog::loop_cycle();
    for (field, dim) in [(F2, 2), (Q, 0)] {
        let (s, o) = (alt_basis(&g, field).len(), SummandDims::of(&g, field).alt);
        check(s == dim && o == dim, || format!("loop-cycle Alt over {field}: structural {s}, oracle {o}"))?;
    }
    let mut cuts = 0;
    for k in [3, 4] {
        let gamma = star_graph(k);
        for cut in admissible_cuts(&gamma) {
            cuts += 1;
            for field in CORPUS_FIELDS {
                check(!hh1_dual_basis(&cut.algebra, field).is_empty(), || {
                    format!("star k = {k}: cut {:?} has HH₁* = 0 over {field}", cut.removed)
                })?;
            }
        }
    }
    Ok(format!("I = {{ba, db}} abelian of dim 2; loop-cycle Alt 2 / 0; {cuts} star cuts with HH₁* ≠ 0"))
}

/// Runs `test` over every corpus algebra and field; returns the number of
/// instances checked or the first failure.
fn over_corpus(
    algebras: &[GentlePresentation],
    fields: &[Field],
    mut test: impl FnMut(&GentlePresentation, Field) -> Result<(), String>,
) -> Result<usize, String> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for g in algebras {
        for &field in fields {
            checked += 1;
            if let Err(e) = test(g, field) {
                failures.push(format!("over {field} on {}: {e}", describe(g)));
            }
        }
    }
    if failures.is_empty() {
        Ok(checked)
    } else {
        Err(format!("{} of {checked} instances fail; {}", failures.len(), failures.join("; ")))
    }
}

fn oracle_equivalence(algebras: &[GentlePresentation]) -> Outcome {
    check(algebras.len() >= MIN_CORPUS_SIZE, || format!("only {} algebras", algebras.len()))?;
    let started = Instant::now();
    let checked = over_corpus(algebras, &CORPUS_FIELDS, |g, field| {
        let (s, o) = (structural_dims(g, field), oracle_dims(g, field));
        check(s[2] == o[2] && s[1] == o[1], || format!("HH¹/HH₁* structural {s:?} vs oracle {o:?}"))
    })?;
    let elapsed = started.elapsed();
    check(elapsed <= ORACLE_RUNTIME_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} algebras, {checked} instances, 100% agreement in {:.1} s", algebras.len(), elapsed.as_secs_f64()))
}

fn axioms(algebras: &[GentlePresentation]) -> Outcome {
    let checked = over_corpus(algebras, &CORPUS_FIELDS, |g, field| {
        verify::complexes_square_to_zero(g, field)?;
        let (_, ta) = verify::lie_algebras(g, field)?;
        verify::summand_closure(&ta)?;
        verify::bracket_oracle_agrees(g, field)
    })?;
    Ok(format!("{checked} instances over Q, F2, F3"))
}

fn graph_identities(algebras: &[GentlePresentation]) -> Outcome {
    let checked = over_corpus(algebras, &[Q], |g, _| {
        verify::graph_identities(g)?;
        verify::trivial_extension_round_trip(g)
    })?;
    Ok(format!("{checked} algebras"))
}

fn dichotomies(algebras: &[GentlePresentation]) -> Outcome {
    let mut kronecker_char_two = 0;
    let checked = over_corpus(algebras, &CORPUS_FIELDS, |g, field| {
        let c = classify(g, field).map_err(|e| e.to_string())?;
        verify::solvability_dichotomy(g, field, &c)?;
        verify::nilpotency_conditions(&c)?;
        verify::nilpotent_implies_abelian(&c)?;
        if field.is_char_two() && g.is_kronecker() {
            kronecker_char_two += 1;
        }
        Ok(())
    })?;
    check(kronecker_char_two > 0, || "no Kronecker algebra in characteristic 2".into())?;
    Ok(format!("{checked} instances, zero exceptions"))
}

fn alt_free_cuts(algebras: &[GentlePresentation]) -> Outcome {
    let checked = over_corpus(algebras, &CORPUS_FIELDS, verify::alt_free_cut)?;
    Ok(format!("{checked} instances"))
}

#[test]
fn acceptance() {
    let algebras = corpus::enumerate(MAX_VERTICES, MAX_ARROWS);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Kronecker golden test", Box::new(kronecker_golden)),
        ("degenerate cases", Box::new(degenerate_cases)),
        ("worked examples", Box::new(worked_examples)),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&algebras))),
        ("complex and Lie axioms", Box::new(|| axioms(&algebras))),
        ("graph identities", Box::new(|| graph_identities(&algebras))),
        ("classification dichotomies", Box::new(|| dichotomies(&algebras))),
        ("Alt-free cut", Box::new(|| alt_free_cuts(&algebras))),
    ];
    let mut failed = Vec::new();
    for (number, (name, run)) in criteria.iter().enumerate() {
        let number = number + 1;
        match run() {
            Ok(detail) => println!("PASS {number} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {number} {name}: {detail}");
                failed.push(number);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
