//! The bracket on `HH¹(A)` and its derivation-commutator oracle.

use crate::LieError;
use gentle_cochain::FirstCohomology;
use gentle_core::{Field, GentlePresentation, Pair, Path, Scalar, SparseVector};
use std::collections::BTreeMap;

/// `[(a,p),(b,q)] = (b, q^{(a,p)}) − (a, p^{(b,q)})`, extended bilinearly,
/// before reduction.
pub fn raw_bracket(g: &GentlePresentation, x: &SparseVector<Pair>, y: &SparseVector<Pair>) -> SparseVector<Pair> {
    let mut out = SparseVector::zero();
    for ((a, p), cx) in x.iter() {
        let a_arrow = a.single_arrow().expect("degree-one coordinate");
        for ((b, q), cy) in y.iter() {
            let b_arrow = b.single_arrow().expect("degree-one coordinate");
            let c = cx * cy;
            for t in g.substitution_terms(q, a_arrow, p) {
                out.add_term((b.clone(), t), c.clone());
            }
            for t in g.substitution_terms(p, b_arrow, q) {
                out.add_term((a.clone(), t), -c.clone());
            }
        }
    }
    out
}

/// Bracket and oracle on `K(Q₁||B)` sharing one cohomology complex.
#[derive(Clone, Debug)]
pub struct CohomologyBracket<'g> {
    g: &'g GentlePresentation,
    complex: FirstCohomology,
}

impl<'g> CohomologyBracket<'g> {
    pub fn new(g: &'g GentlePresentation, field: Field) -> Self {
        CohomologyBracket { g, complex: FirstCohomology::new(g, field) }
    }

    pub fn complex(&self) -> &FirstCohomology {
        &self.complex
    }

    pub fn field(&self) -> Field {
        self.complex.space.field()
    }

    fn check_cocycles(&self, x: &SparseVector<Pair>, y: &SparseVector<Pair>) -> Result<(), LieError> {
        if self.complex.is_cocycle(x) && self.complex.is_cocycle(y) {
            Ok(())
        } else {
            Err(LieError::NotACocycle)
        }
    }

    /// Canonical representative of the bracket of two cocycles.
    pub fn bracket(&self, x: &SparseVector<Pair>, y: &SparseVector<Pair>) -> Result<SparseVector<Pair>, LieError> {
        self.check_cocycles(x, y)?;
        Ok(self.complex.reduce(&raw_bracket(self.g, x, y)))
    }

    /// The commutator of the derivations `ε ↦ ε^{(a,α)}`, read off on arrows
    /// and reduced.
    pub fn oracle(&self, x: &SparseVector<Pair>, y: &SparseVector<Pair>) -> Result<SparseVector<Pair>, LieError> {
        self.check_cocycles(x, y)?;
        let field = self.field();
        let dx = Derivation::new(self.g, x);
        let dy = Derivation::new(self.g, y);
        let commutator = |v: &SparseVector<Path>| dx.apply(&dy.apply(v)).minus(&dy.apply(&dx.apply(v)));

        let basis = self.g.basis();
        let images: BTreeMap<&Path, SparseVector<Path>> =
            basis.iter().map(|p| (p, commutator(&SparseVector::unit(p.clone(), field)))).collect();
        for p in basis {
            for q in basis.iter().filter(|q| p.target() == q.source()) {
                let lhs = match self.g.product(p, q) {
                    Some(w) => images[&w].clone(),
                    None => SparseVector::zero(),
                };
                let rhs = multiply(self.g, &SparseVector::unit(p.clone(), field), &images[q])
                    .plus(&multiply(self.g, &images[p], &SparseVector::unit(q.clone(), field)));
                if lhs != rhs {
                    return Err(LieError::NotADerivation);
                }
            }
        }

        let mut out = SparseVector::zero();
        for a in self.g.arrow_paths() {
            for (alpha, c) in images[&a].iter() {
                out.add_term((a.clone(), alpha.clone()), c.clone());
            }
        }
        Ok(self.complex.reduce(&out))
    }
}

/// Canonical representative of `[x, y]` for cocycles `x, y ∈ K(Q₁||B)`.
pub fn bracket_hh1(
    x: &SparseVector<Pair>,
    y: &SparseVector<Pair>,
    g: &GentlePresentation,
    field: Field,
) -> Result<SparseVector<Pair>, LieError> {
    CohomologyBracket::new(g, field).bracket(x, y)
}

/// The same bracket computed as a commutator of derivations of `A`.
pub fn bracket_oracle(
    x: &SparseVector<Pair>,
    y: &SparseVector<Pair>,
    g: &GentlePresentation,
    field: Field,
) -> Result<SparseVector<Pair>, LieError> {
    CohomologyBracket::new(g, field).oracle(x, y)
}

/// `before` followed by `after` in `A`, bilinearly.
pub(crate) fn multiply(g: &GentlePresentation, before: &SparseVector<Path>, after: &SparseVector<Path>) -> SparseVector<Path> {
    let mut out = SparseVector::zero();
    for (p, c) in before.iter() {
        for (q, d) in after.iter() {
            if let Some(w) = g.product(p, q) {
                out.add_term(w, c * d);
            }
        }
    }
    out
}

/// A linear map on `A` given on arrows and extended by the Leibniz rule.
pub(crate) struct Derivation<'g> {
    g: &'g GentlePresentation,
    on_arrows: BTreeMap<usize, Vec<(Path, Scalar)>>,
}

impl<'g> Derivation<'g> {
    pub(crate) fn new(g: &'g GentlePresentation, x: &SparseVector<Pair>) -> Self {
        let mut on_arrows: BTreeMap<usize, Vec<(Path, Scalar)>> = BTreeMap::new();
        for ((a, alpha), c) in x.iter() {
            let arrow = a.single_arrow().expect("degree-one coordinate");
            on_arrows.entry(arrow).or_default().push((alpha.clone(), c.clone()));
        }
        Derivation { g, on_arrows }
    }

    /// Image of a basis path.
    pub(crate) fn on_path(&self, p: &Path) -> SparseVector<Path> {
        let q = self.g.quiver();
        let mut out = SparseVector::zero();
        for (i, a) in p.arrows().iter().enumerate() {
            let Some(images) = self.on_arrows.get(a) else { continue };
            let head = p.segment(q, 0, i);
            let tail = p.segment(q, i + 1, p.len());
            for (alpha, c) in images {
                let w = self.g.product(&head, alpha).and_then(|w| self.g.product(&w, &tail));
                if let Some(w) = w {
                    out.add_term(w, c.clone());
                }
            }
        }
        out
    }

    pub(crate) fn apply(&self, v: &SparseVector<Path>) -> SparseVector<Path> {
        let mut out = SparseVector::zero();
        for (p, c) in v.iter() {
            out.add_scaled(&self.on_path(p), c);
        }
        out
    }
}
