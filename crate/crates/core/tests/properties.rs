use gentle_core::linalg::{Matrix, RowSpace};
use gentle_core::{corpus, Field, GentlePresentation, Scalar};
use proptest::prelude::*;
use std::sync::OnceLock;

const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

fn small_corpus() -> &'static [GentlePresentation] {
    static CORPUS: OnceLock<Vec<GentlePresentation>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::enumerate(3, 4))
}

fn scalars(field: Field, values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&x| field.from_i64(x)).collect()
}

proptest! {
    #[test]
    fn field_axioms(which in 0usize..3, a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let field = FIELDS[which];
        let (a, b, c) = (field.from_i64(a), field.from_i64(b), field.from_i64(c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
    }

    #[test]
    fn rank_plus_nullity(which in 0usize..3, cols in 1usize..6, entries in proptest::collection::vec(-2i64..3, 0..30)) {
        let field = FIELDS[which];
        let rows: Vec<Vec<Scalar>> = entries.chunks_exact(cols).map(|r| scalars(field, r)).collect();
        let m = Matrix::from_rows(field, cols, rows.clone());
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        let span = RowSpace::spanned_by(field, cols, &rows);
        prop_assert_eq!(span.dim(), m.rank());
        prop_assert!(rows.iter().all(|r| span.contains(r)));
    }

    #[test]
    fn path_product_is_associative(index in 0usize..1000, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let g = &small_corpus()[index % small_corpus().len()];
        let basis = g.basis();
        let (p, q, r) = (&basis[i % basis.len()], &basis[j % basis.len()], &basis[k % basis.len()]);
        let left = g.product(p, q).and_then(|pq| g.product(&pq, r));
        let right = g.product(q, r).and_then(|qr| g.product(p, &qr));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn corpus_members_have_consistent_bases() {
    let algebras = small_corpus();
    assert_eq!(algebras.len(), 425);
    for g in algebras {
        assert!(g.basis().iter().all(|p| g.in_basis(p)));
        assert!(g.maximal_paths().iter().all(|p| g.right_extensions(p).is_empty() && g.left_extensions(p).is_empty()));
    }
}
