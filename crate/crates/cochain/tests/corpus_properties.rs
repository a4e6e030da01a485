use gentle_cochain::*;
use gentle_core::{corpus, Field, GentlePresentation, Pair, SparseVector};
use proptest::prelude::*;
use std::sync::OnceLock;

fn small_corpus() -> &'static [GentlePresentation] {
    static CORPUS: OnceLock<Vec<GentlePresentation>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::enumerate(3, 4))
}

const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

#[test]
fn differentials_square_to_zero_on_corpus() {
    for g in small_corpus() {
        for field in FIELDS {
            let d0 = d0_matrix(g, field);
            let d1 = d1_matrix(g, field);
            assert!(d1.after(&d0).is_zero(), "d1 d0 on {:?}", g.relations());
            let (e0, e1) = homology_dual_matrices(g, field);
            assert!(e1.after(&e0).is_zero(), "dual d1 d0 on {:?}", g.relations());
        }
    }
}

#[test]
fn rational_and_ternary_dimensions_agree() {
    for g in small_corpus() {
        assert_eq!(
            SummandDims::of(g, Field::Rational),
            SummandDims::of(g, Field::Prime(3)),
            "relations {:?}",
            g.relations()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_idempotent_and_class_preserving(
        index in 0usize..425,
        which in 0usize..3,
        seed in proptest::collection::vec(-4i64..5, 32),
    ) {
        let g = &small_corpus()[index % small_corpus().len()];
        let field = FIELDS[which];
        let h = FirstCohomology::new(g, field);
        let keys = h.d0.codomain().keys().to_vec();
        let v: SparseVector<Pair> = keys
            .iter()
            .zip(seed.iter().cycle())
            .map(|(k, &c)| (k.clone(), field.from_i64(c)))
            .collect();
        let r = h.reduce(&v);
        prop_assert_eq!(h.reduce(&r), r.clone());
        prop_assert!(h.space.is_boundary(&v.minus(&r)));
    }

    #[test]
    fn coboundaries_reduce_to_zero(index in 0usize..425, which in 0usize..3, seed in proptest::collection::vec(-4i64..5, 16)) {
        let g = &small_corpus()[index % small_corpus().len()];
        let field = FIELDS[which];
        let h = FirstCohomology::new(g, field);
        let mut v = SparseVector::zero();
        for (pair, &c) in h.d0.domain().keys().iter().zip(seed.iter().cycle()) {
            v.add_scaled(&h.d0.column(pair), &field.from_i64(c));
        }
        prop_assert!(h.reduce(&v).is_zero());
        prop_assert!(h.is_cocycle(&v));
    }
}
