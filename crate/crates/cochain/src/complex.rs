//! The low-degree cochain complexes of a monomial algebra.
//!
//! Parallel pairs `(x, y)` carry the Hochschild cochains; cyclic pairs
//! `(x, y)` stand for `(x, y*)` in the dual of the Hochschild chains.

use crate::matrix::ExactMatrix;
use gentle_core::{cyclic_pairs, parallel_pairs, Field, GentlePresentation, Pair, Path, SparseVector};

/// `K(Q₀||B) → K(Q₁||B)`, `(e, p) ↦ Σ_{s(a)=e} (a, a·p) − Σ_{t(a)=e} (a, p·a)`.
pub fn d0_matrix(g: &GentlePresentation, field: Field) -> ExactMatrix {
    let q = g.quiver();
    let domain = parallel_pairs(&g.vertex_paths(), g.basis());
    let codomain = parallel_pairs(&g.arrow_paths(), g.basis());
    ExactMatrix::from_images(field, domain, codomain, |(e, p)| {
        let v = e.source();
        let mut out = SparseVector::zero();
        for a in q.arrows_from(v) {
            if let Some(ap) = g.product(p, &q.arrow_path(a)) {
                out.add_term((q.arrow_path(a), ap), field.one());
            }
        }
        for a in q.arrows_into(v) {
            if let Some(pa) = g.product(&q.arrow_path(a), p) {
                out.add_term((q.arrow_path(a), pa), -field.one());
            }
        }
        out
    })
}

/// `K(Q₁||B) → K(R||B)`, `(a, p) ↦ Σ_{r∈R} (r, r^(a,p))`.
pub fn d1_matrix(g: &GentlePresentation, field: Field) -> ExactMatrix {
    let relations = g.relation_paths();
    let domain = parallel_pairs(&g.arrow_paths(), g.basis());
    let codomain = parallel_pairs(&relations, g.basis());
    ExactMatrix::from_images(field, domain, codomain, |(a, p)| {
        let a = a.single_arrow().expect("domain pairs start with an arrow");
        let mut out = SparseVector::zero();
        for r in &relations {
            for term in g.substitution_terms(r, a, p) {
                out.add_term((r.clone(), term), field.one());
            }
        }
        out
    })
}

/// `d₀ : K(Q₀⊙B*) → K(Q₁⊙B*)` and `d₁ : K(Q₁⊙B*) → K(R⊙B*)`.
///
/// `d₀(e, p*) = Σ_{p = p′·a} (a, p′*) − Σ_{p = a·p″} (a, p″*)` and
/// `d₁(a, p*)` sums `(r, θp*ν)` over relations `r = θ·a·ν`, that is
/// `(a then y, u*)` when `p` starts with `y` and `(x then a, u*)` when `p`
/// ends with `x`, `u` being the rest of `p`.
pub fn homology_dual_matrices(g: &GentlePresentation, field: Field) -> (ExactMatrix, ExactMatrix) {
    let q = g.quiver();
    let arrows = g.arrow_paths();
    let relations = g.relation_paths();
    let c0 = cyclic_pairs(&g.vertex_paths(), g.basis());
    let c1 = cyclic_pairs(&arrows, g.basis());
    let c2 = cyclic_pairs(&relations, g.basis());

    let d0 = ExactMatrix::from_images(field, c0, c1.clone(), |(_, p)| {
        let mut out = SparseVector::zero();
        if let (Some(first), Some(last)) = (p.first(), p.last()) {
            let a = q.arrow_path(first);
            out.add_term((a.clone(), p.strip_prefix(q, &a).unwrap()), field.one());
            let b = q.arrow_path(last);
            out.add_term((b.clone(), p.strip_suffix(q, &b).unwrap()), -field.one());
        }
        out
    });

    let d1 = ExactMatrix::from_images(field, c1, c2, |(a_path, p)| {
        let a = a_path.single_arrow().expect("domain pairs start with an arrow");
        let mut out = SparseVector::zero();
        if let Some(y) = p.first() {
            if g.is_relation(a, y) {
                let rest = p.strip_prefix(q, &q.arrow_path(y)).unwrap();
                out.add_term((relation(g, a, y), rest), field.one());
            }
        }
        if let Some(x) = p.last() {
            if g.is_relation(x, a) {
                let rest = p.strip_suffix(q, &q.arrow_path(x)).unwrap();
                out.add_term((relation(g, x, a), rest), field.one());
            }
        }
        out
    });
    (d0, d1)
}

fn relation(g: &GentlePresentation, first: usize, second: usize) -> Path {
    g.quiver().path(&[first, second]).expect("relations are composable")
}

/// Pairs of `K(Q₁||B)`, the coordinates of degree-one cochains.
pub fn degree_one_pairs(g: &GentlePresentation) -> Vec<Pair> {
    parallel_pairs(&g.arrow_paths(), g.basis())
}

/// Pairs of `K(Q₁⊙B*)`, the coordinates of degree-one dual chains.
pub fn dual_degree_one_pairs(g: &GentlePresentation) -> Vec<Pair> {
    cyclic_pairs(&g.arrow_paths(), g.basis())
}
