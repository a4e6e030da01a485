use crate::element::CohomologyElement;
use gentle_core::{fundamental_cycles, Field, GentlePresentation, Path};

/// The identity, then every cycle `p ∈ B` at a vertex of valency 2 whose
/// last arrow followed by its first arrow is a relation.
pub fn center_basis(g: &GentlePresentation, _field: Field) -> Vec<CohomologyElement> {
    let mut out = vec![CohomologyElement::Identity];
    for p in g.basis() {
        let (Some(first), Some(last)) = (p.first(), p.last()) else { continue };
        if p.is_cycle() && g.is_relation(last, first) && g.valency(p.source()) == 2 {
            out.push(CohomologyElement::CentralCycle(p.clone()));
        }
    }
    out
}

/// Shortcuts, deviations, fundamental cycles and, in characteristic 2,
/// loops paired with their idempotent.
pub fn hh1_basis(g: &GentlePresentation, field: Field) -> Vec<CohomologyElement> {
    let q = g.quiver();
    let mut shortcuts = Vec::new();
    let mut deviations = Vec::new();
    for a in (0..q.arrow_count()).filter(|&a| !g.arrow_in_relation(a)) {
        let arrow = q.arrow_path(a);
        for p in g.basis().iter().filter(|p| p.is_parallel_to(&arrow) && **p != arrow) {
            if !p.contains_arrow(a) {
                shortcuts.push(CohomologyElement::Shortcut(a, p.clone()));
            } else if p.first() != Some(a) && p.last() != Some(a) {
                deviations.push(CohomologyElement::Deviation(a, p.clone()));
            }
        }
    }
    let mut out = shortcuts;
    out.extend(deviations);
    out.extend(fundamental_cycles(q).cotree.into_iter().map(CohomologyElement::FundCycle));
    if field.is_char_two() {
        out.extend(g.loops().into_iter().map(CohomologyElement::Char2Loop));
    }
    out
}

/// Skew pairs of arrows composing to zero both ways, loops against their
/// idempotent and, in characteristic 2, loops against themselves.
pub fn hh1_dual_basis(g: &GentlePresentation, field: Field) -> Vec<CohomologyElement> {
    let q = g.quiver();
    let mut out = Vec::new();
    for a in 0..q.arrow_count() {
        for b in a + 1..q.arrow_count() {
            if g.is_relation(a, b) && g.is_relation(b, a) {
                out.push(CohomologyElement::SkewPair(a, b));
            }
        }
    }
    for a in g.loops() {
        out.push(CohomologyElement::LoopAtIdempotent(a, q.arrow(a).source));
    }
    if field.is_char_two() {
        out.extend(g.loops().into_iter().map(CohomologyElement::Char2LoopDual));
    }
    out
}

/// `φ_{p,q}` for cyclic pairs of basis paths composing to zero both ways
/// between vertices of valency 2; in characteristic 2 also `ψ_{p,p}` and
/// `ψ_{e,p}` for every nontrivial cycle at a vertex of valency 2.
///
/// For the algebra `K` in characteristic 2 the single map `e* ↦ e` is
/// returned as `ψ_{e,e}`.
pub fn alt_basis(g: &GentlePresentation, field: Field) -> Vec<CohomologyElement> {
    let mut out = Vec::new();
    let basis = g.basis();
    for (i, p) in basis.iter().enumerate() {
        for r in &basis[i + 1..] {
            if p.is_cyclic_with(r)
                && !p.is_trivial()
                && !r.is_trivial()
                && g.product(p, r).is_none()
                && g.product(r, p).is_none()
                && g.valency(p.source()) == 2
                && g.valency(r.source()) == 2
            {
                out.push(CohomologyElement::Phi(p.clone(), r.clone()));
            }
        }
    }
    if field.is_char_two() {
        if g.is_ground_field() {
            out.push(CohomologyElement::PsiEP(0, Path::vertex(0)));
        }
        for p in basis.iter().filter(|p| !p.is_trivial() && p.is_cycle() && g.valency(p.source()) == 2) {
            out.push(CohomologyElement::PsiPP(p.clone()));
            out.push(CohomologyElement::PsiEP(p.source(), p.clone()));
        }
    }
    out
}

/// Basis of `HH¹(TA)`: centre, then `HH₁(A)*`, then `HH¹(A)`, then `Alt_A(DA)`.
pub fn trivial_extension_hh1_basis(g: &GentlePresentation, field: Field) -> Vec<CohomologyElement> {
    let mut out = center_basis(g, field);
    out.extend(hh1_dual_basis(g, field));
    out.extend(hh1_basis(g, field));
    out.extend(alt_basis(g, field));
    out
}
