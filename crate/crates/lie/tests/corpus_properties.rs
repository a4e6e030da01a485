use gentle_bases::{hh1_basis, trivial_extension_hh1_basis, Summand};
use gentle_cochain::FirstCohomology;
use gentle_core::linalg::{Matrix, RowSpace};
use gentle_core::{corpus, Field, GentlePresentation, Pair, Scalar, SparseVector};
use gentle_lie::*;
use proptest::prelude::*;
use std::sync::OnceLock;

fn small_corpus() -> &'static [GentlePresentation] {
    static CORPUS: OnceLock<Vec<GentlePresentation>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::enumerate(3, 4))
}

const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

fn describe(g: &GentlePresentation) -> String {
    let q = g.quiver();
    let arrows: Vec<_> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    format!("{} vertices, arrows {:?}, relations {:?}", q.vertex_count(), arrows, g.relations())
}

/// Indices of basis elements in the given summands.
fn indices(l: &LieAlgebra, summands: &[Summand]) -> Vec<usize> {
    (0..l.dim()).filter(|&i| summands.contains(&l.basis()[i].summand())).collect()
}

/// Whether `[xᵢ, xⱼ]` lies in the span of `target` for all `i ∈ left`, `j ∈ right`.
fn brackets_within(l: &LieAlgebra, left: &[usize], right: &[usize], target: &[usize]) -> bool {
    left.iter().all(|&i| {
        right.iter().all(|&j| l.constant(i, j).iter().enumerate().all(|(k, c)| c.is_zero() || target.contains(&k)))
    })
}

#[test]
fn both_algebras_satisfy_jacobi_on_corpus() {
    for g in small_corpus() {
        for field in FIELDS {
            // `LieAlgebra::new` checks antisymmetry and Jacobi
            let a = structure_constants(g, field, Target::Algebra).unwrap_or_else(|e| panic!("{e}: {}", describe(g)));
            assert_eq!(a.dim(), FirstCohomology::new(g, field).dim());
            structure_constants(g, field, Target::TrivialExtension).unwrap_or_else(|e| panic!("{e}: {}", describe(g)));
        }
    }
}

#[test]
fn summand_structure_of_trivial_extension() {
    use Summand::*;
    for g in small_corpus() {
        for field in FIELDS {
            let l = structure_constants(g, field, Target::TrivialExtension).unwrap();
            let center = indices(&l, &[Center]);
            let h1 = indices(&l, &[H1]);
            let even = indices(&l, &[Center, H1]);
            let odd = indices(&l, &[H1Dual, Alt]);
            let all: Vec<usize> = (0..l.dim()).collect();
            assert!(brackets_within(&l, &center, &center, &[]), "{}", describe(g));
            assert!(brackets_within(&l, &h1, &h1, &h1), "{}", describe(g));
            assert!(brackets_within(&l, &even, &even, &even), "{}", describe(g));
            assert!(brackets_within(&l, &odd, &odd, &even), "{}", describe(g));
            assert!(brackets_within(&l, &even, &odd, &odd), "{}", describe(g));
            assert!(brackets_within(&l, &all, &all, &all));
        }
    }
}

#[test]
fn algebra_embeds_in_trivial_extension() {
    for g in small_corpus() {
        for field in FIELDS {
            let a = structure_constants(g, field, Target::Algebra).unwrap();
            let ta = structure_constants(g, field, Target::TrivialExtension).unwrap();
            let h1 = indices(&ta, &[Summand::H1]);
            assert_eq!(h1.len(), a.dim());
            for (i, &ti) in h1.iter().enumerate() {
                for (j, &tj) in h1.iter().enumerate() {
                    let embedded: Vec<&Scalar> = h1.iter().map(|&k| &ta.constant(ti, tj)[k]).collect();
                    let direct: Vec<&Scalar> = a.constant(i, j).iter().collect();
                    assert_eq!(embedded, direct, "{}", describe(g));
                }
            }
        }
    }
}

#[test]
fn oracle_matches_formula_on_basis_pairs() {
    for g in small_corpus() {
        for field in FIELDS {
            let br = CohomologyBracket::new(g, field);
            let reps: Vec<SparseVector<Pair>> = hh1_basis(g, field).iter().map(|e| e.cochain(g, field).unwrap()).collect();
            for x in &reps {
                for y in &reps {
                    assert_eq!(br.bracket(x, y).unwrap(), br.oracle(x, y).unwrap(), "{}", describe(g));
                }
            }
        }
    }
}

#[test]
fn rules_match_derivation_oracle() {
    for g in small_corpus() {
        for field in FIELDS {
            let rules = structure_constants(g, field, Target::TrivialExtension).unwrap();
            let oracle = trivial_extension_oracle(g, field).unwrap_or_else(|e| panic!("{e}: {}", describe(g)));
            assert_eq!(rules, oracle, "over {field}: {}", describe(g));
        }
    }
}

#[test]
fn classification_dichotomies() {
    for g in small_corpus() {
        for field in FIELDS {
            let c = classify(g, field).unwrap();
            assert!(c.conditions_agree(), "over {field}: {}", describe(g));
            if c.nilpotent_ta {
                assert!(c.abelian_ta, "over {field}: {}", describe(g));
            }
            if field == Field::Prime(2) {
                continue;
            }
            assert_eq!(c.solvable_a, !g.is_kronecker(), "over {field}: {}", describe(g));
            let exceptional = g.is_kronecker() || g.is_nakayama_two_cycle();
            assert_eq!(c.solvable_ta, !exceptional, "over {field}: {}", describe(g));
            assert_eq!(c.gl2_flag, exceptional, "over {field}: {}", describe(g));
        }
    }
}

/// `dim Der(TA) − dim Inn(TA)`, computed directly from the multiplication table.
fn outer_derivation_dim(g: &GentlePresentation, field: Field) -> usize {
    let ta = TrivialExtension::new(g, field);
    let n = ta.dim();
    let var = |u: usize, w: usize| u * n + w;
    let mut rows = Vec::new();
    for u in 0..n {
        for v in 0..n {
            // coordinate w of D(uv) − D(u)v − uD(v)
            let mut by_output: Vec<Vec<Scalar>> = vec![vec![field.zero(); n * n]; n];
            if let Some(uv) = ta.product_index(u, v) {
                for (w, row) in by_output.iter_mut().enumerate() {
                    row[var(uv, w)] = &row[var(uv, w)] + &field.one();
                }
            }
            for t in 0..n {
                if let Some(w) = ta.product_index(t, v) {
                    by_output[w][var(u, t)] = &by_output[w][var(u, t)] - &field.one();
                }
                if let Some(w) = ta.product_index(u, t) {
                    by_output[w][var(v, t)] = &by_output[w][var(v, t)] - &field.one();
                }
            }
            rows.extend(by_output.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
    }
    let der = n * n - Matrix::from_rows(field, n * n, rows).rank();
    let inner: Vec<Vec<Scalar>> = (0..n).map(|t| ta.inner(t).into_iter().flatten().collect()).collect();
    der - RowSpace::spanned_by(field, n * n, &inner).dim()
}

#[test]
fn basis_of_trivial_extension_is_complete() {
    for g in corpus::enumerate(2, 3).iter().filter(|g| g.basis().len() <= 7) {
        for field in FIELDS {
            assert_eq!(
                trivial_extension_hh1_basis(g, field).len(),
                outer_derivation_dim(g, field),
                "over {field}: {}",
                describe(g)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_independent_of_representatives(
        index in 0usize..1000,
        which in 0usize..3,
        coefficients in proptest::collection::vec(-3i64..4, 24),
    ) {
        let g = &small_corpus()[index % small_corpus().len()];
        let field = FIELDS[which];
        let br = CohomologyBracket::new(g, field);
        let space = &br.complex().space;
        let mut seed = coefficients.iter().cycle().map(|&c| field.from_i64(c));
        let mut combine = |rows: &[Vec<Scalar>]| -> SparseVector<Pair> {
            let mut dense = vec![field.zero(); space.ambient().len()];
            for row in rows {
                let c = seed.next().unwrap();
                for (d, r) in dense.iter_mut().zip(row) {
                    *d = &*d + &(r * &c);
                }
            }
            space.ambient().sparse(&dense)
        };
        let x = combine(space.kernel().rows());
        let y = combine(space.kernel().rows());
        let bx = combine(space.image().rows());
        let by = combine(space.image().rows());
        let expected = br.bracket(&x, &y).unwrap();
        prop_assert_eq!(br.bracket(&x.plus(&bx), &y.plus(&by)).unwrap(), expected.clone());
        let swapped = br.bracket(&y, &x).unwrap();
        prop_assert_eq!(swapped.plus(&expected), SparseVector::zero());
    }
}
