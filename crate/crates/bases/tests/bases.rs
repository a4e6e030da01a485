use gentle_bases::*;
use gentle_cochain::{alt_space, d0_matrix, DualFirstHomology, FirstCohomology};
use gentle_core::{catalog, corpus, Field, GentlePresentation, Pair, Path, SparseVector};
use std::sync::OnceLock;

const Q: Field = Field::Rational;
const F2: Field = Field::Prime(2);
const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

fn small_corpus() -> &'static [GentlePresentation] {
    static CORPUS: OnceLock<Vec<GentlePresentation>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::enumerate(3, 4))
}

fn labels(g: &GentlePresentation, xs: &[CohomologyElement]) -> Vec<String> {
    xs.iter().map(|x| x.label(g)).collect()
}

#[test]
fn center_examples() {
    let k = catalog::kronecker();
    assert_eq!(labels(&k, &center_basis(&k, Q)), ["Identity"]);
    let x = catalog::loop_square_zero();
    assert_eq!(labels(&x, &center_basis(&x, Q)), ["Identity", "CentralCycle(x)"]);
    let n = catalog::nakayama_two_cycle();
    assert_eq!(labels(&n, &center_basis(&n, Q)), ["Identity"]);
}

#[test]
fn hh1_examples() {
    let k = catalog::kronecker();
    assert_eq!(labels(&k, &hh1_basis(&k, Q)), ["Shortcut(b1, b2)", "Shortcut(b2, b1)", "FundCycle(b2)"]);
    let n = catalog::nakayama_two_cycle();
    assert_eq!(labels(&n, &hh1_basis(&n, Q)), ["FundCycle(a2)"]);
    let x = catalog::loop_square_zero();
    assert_eq!(labels(&x, &hh1_basis(&x, F2)), ["FundCycle(x)", "Char2Loop(x)"]);
}

#[test]
fn hh1_dual_examples() {
    let n = catalog::nakayama_two_cycle();
    assert_eq!(labels(&n, &hh1_dual_basis(&n, Q)), ["SkewPair(a1, a2)"]);
    let k = catalog::kronecker();
    assert!(hh1_dual_basis(&k, Q).is_empty());
    let x = catalog::loop_square_zero();
    assert_eq!(labels(&x, &hh1_dual_basis(&x, F2)), ["LoopAtIdempotent(x, e)", "Char2LoopDual(x)"]);
}

#[test]
fn alt_examples() {
    let g = catalog::loop_cycle();
    assert_eq!(labels(&g, &alt_basis(&g, F2)), ["Psi_PP(c·b·a)", "Psi_eP(e1, c·b·a)"]);
    assert!(alt_basis(&g, Q).is_empty());
    let n = catalog::nakayama_two_cycle();
    assert_eq!(labels(&n, &alt_basis(&n, Q)), ["Phi(a1, a2)"]);
}

#[test]
fn trivial_extension_examples() {
    assert_eq!(trivial_extension_hh1_basis(&catalog::kronecker(), Q).len(), 4);
    assert_eq!(trivial_extension_hh1_basis(&catalog::nakayama_two_cycle(), Q).len(), 4);
    let t = catalog::triangle_with_tail();
    assert_eq!(labels(&t, &trivial_extension_hh1_basis(&t, Q)), ["Identity", "FundCycle(b)"]);
}

#[test]
fn trivial_extension_order_is_by_summand() {
    for g in small_corpus() {
        let summands: Vec<Summand> = trivial_extension_hh1_basis(g, F2).iter().map(|x| x.summand()).collect();
        assert!(summands.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn special_cases() {
    let k = catalog::ground_field();
    assert_eq!(special_case_report(&k, Q).unwrap().total, 1);
    assert_eq!(special_case_report(&k, F2).unwrap().total, 2);
    let x = catalog::loop_square_zero();
    let r = special_case_report(&x, F2).unwrap();
    assert_eq!((r.center, r.hh1_dual, r.hh1, r.alt), (2, 2, 2, 2));
    let r = special_case_report(&x, Q).unwrap();
    assert_eq!((r.center, r.hh1_dual, r.hh1, r.alt), (2, 1, 1, 0));
    assert_eq!(special_case_report(&catalog::kronecker(), Q), Err(NotSpecialCase));
}

#[test]
fn special_cases_agree_with_structural_bases() {
    for g in [catalog::ground_field(), catalog::loop_square_zero()] {
        for field in FIELDS {
            let r = special_case_report(&g, field).unwrap();
            let dims = (
                center_basis(&g, field).len(),
                hh1_dual_basis(&g, field).len(),
                hh1_basis(&g, field).len(),
                alt_basis(&g, field).len(),
            );
            assert_eq!(dims, (r.center, r.hh1_dual, r.hh1, r.alt));
        }
    }
}

#[test]
fn structural_dimensions_match_oracle_on_corpus() {
    for g in small_corpus() {
        for field in FIELDS {
            let h = FirstCohomology::new(g, field);
            let ctx = format!("{:?} over {field}", g.relations());
            assert_eq!(center_basis(g, field).len(), h.center_dim(), "centre {ctx}");
            assert_eq!(hh1_basis(g, field).len(), h.dim(), "HH1 {ctx}");
            assert_eq!(hh1_dual_basis(g, field).len(), DualFirstHomology::new(g, field).dim(), "dual {ctx}");
            assert_eq!(alt_basis(g, field).len(), alt_space(g, field).dim(), "Alt {ctx}");
        }
    }
}

#[test]
fn hh1_elements_are_independent_cocycles() {
    for g in small_corpus() {
        for field in FIELDS {
            let h = FirstCohomology::new(g, field);
            let reps: Vec<SparseVector<Pair>> =
                hh1_basis(g, field).iter().map(|x| x.cochain(g, field).unwrap()).collect();
            assert!(reps.iter().all(|r| h.is_cocycle(r)));
            assert_eq!(h.space.rank_of_classes(&reps), reps.len());
        }
    }
}

#[test]
fn dual_elements_are_independent_cycles() {
    for g in small_corpus() {
        for field in FIELDS {
            let h = DualFirstHomology::new(g, field);
            let reps: Vec<SparseVector<Pair>> =
                hh1_dual_basis(g, field).iter().map(|x| x.dual_chain(g, field).unwrap()).collect();
            assert!(reps.iter().all(|r| h.space.is_cycle(r)));
            assert_eq!(h.space.rank_of_classes(&reps), reps.len());
        }
    }
}

#[test]
fn center_elements_are_independent_and_central() {
    for g in small_corpus() {
        for field in [Q, F2] {
            let d0 = d0_matrix(g, field);
            let vs: Vec<SparseVector<Pair>> =
                center_basis(g, field).iter().map(|x| x.center_vector(g, field).unwrap()).collect();
            assert!(vs.iter().all(|v| d0.apply(v).is_zero()));
            let rank = gentle_core::linalg::RowSpace::spanned_by(
                field,
                d0.domain().len(),
                &vs.iter().map(|v| d0.domain().dense(v, field)).collect::<Vec<_>>(),
            )
            .dim();
            assert_eq!(rank, vs.len());
        }
    }
}

/// `α(f, g) = g(φ(f))` on dual basis elements.
fn form(map: &SparseVector<Pair>, field: Field, f: &Path, g: &Path) -> gentle_core::Scalar {
    map.coefficient(&(f.clone(), g.clone()), field)
}

#[test]
fn alt_elements_are_skew_balanced_and_independent() {
    for g in small_corpus() {
        for field in [Q, F2, Field::Prime(3)] {
            let space = alt_space(g, field);
            let maps: Vec<SparseVector<Pair>> =
                alt_basis(g, field).iter().map(|x| x.alt_map(g, field).unwrap()).collect();
            assert_eq!(space.rank_of(&maps), maps.len());
            let q = g.quiver();
            for m in &maps {
                assert!(space.contains(m));
                for f in g.basis() {
                    for h in g.basis() {
                        let skew = &form(m, field, f, h) + &form(m, field, h, f);
                        assert!(skew.is_zero());
                    }
                    // α(f·a, h) = α(f, a·h), with p*·a = (p without its last a)*
                    // and a·h* = (h without its first a)*.
                    for a in 0..q.arrow_count() {
                        let arrow = q.arrow_path(a);
                        for h in g.basis() {
                            let lhs = f.strip_suffix(q, &arrow).map_or(field.zero(), |f2| form(m, field, &f2, h));
                            let rhs = h.strip_prefix(q, &arrow).map_or(field.zero(), |h2| form(m, field, f, &h2));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
