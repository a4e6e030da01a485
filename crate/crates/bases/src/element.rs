use gentle_core::{Field, GentlePresentation, Pair, Path, SparseVector};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// The four summands of `HH¹(TA) ≅ Z(A) ⊕ HH₁(A)* ⊕ HH¹(A) ⊕ Alt_A(DA)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Summand {
    Center,
    H1Dual,
    H1,
    Alt,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Summand::Center => "Center",
            Summand::H1Dual => "H1Dual",
            Summand::H1 => "H1",
            Summand::Alt => "Alt",
        })
    }
}

/// A basis element together with its combinatorial type.
///
/// Arrows are arrow indices; paths are basis paths of the presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CohomologyElement {
    /// `Σ_e (e, e)`.
    Identity,
    /// `(s(p), p)` for a cycle `p` whose ends compose to zero.
    CentralCycle(Path),
    /// `(a, q)` with `a ∉ q` and `a` in no relation.
    Shortcut(usize, Path),
    /// `(a, q)` with `q = q₂·a·q₁`, both `qᵢ` nontrivial.
    Deviation(usize, Path),
    /// `(a, a)` for an arrow outside the spanning tree.
    FundCycle(usize),
    /// `(a, s(a))` for a loop, characteristic 2 only.
    Char2Loop(usize),
    /// `(a, b*) − (b, a*)` with `ab, ba ∈ I`, `a < b`.
    SkewPair(usize, usize),
    /// `(a, e*)` for a loop `a` at `e`.
    LoopAtIdempotent(usize, usize),
    /// `(a, a*)` for a loop, characteristic 2 only.
    Char2LoopDual(usize),
    /// `p* ↦ q`, `q* ↦ −p`.
    Phi(Path, Path),
    /// `q* ↦ r` whenever the cycle `p` at `e` factors as `qr` or `rq`.
    PsiEP(usize, Path),
    /// `p* ↦ p`.
    PsiPP(Path),
}

impl CohomologyElement {
    pub fn summand(&self) -> Summand {
        use CohomologyElement::*;
        match self {
            Identity | CentralCycle(_) => Summand::Center,
            Shortcut(..) | Deviation(..) | FundCycle(_) | Char2Loop(_) => Summand::H1,
            SkewPair(..) | LoopAtIdempotent(..) | Char2LoopDual(_) => Summand::H1Dual,
            Phi(..) | PsiEP(..) | PsiPP(_) => Summand::Alt,
        }
    }

    pub fn kind(&self) -> &'static str {
        use CohomologyElement::*;
        match self {
            Identity => "Identity",
            CentralCycle(_) => "CentralCycle",
            Shortcut(..) => "Shortcut",
            Deviation(..) => "Deviation",
            FundCycle(_) => "FundCycle",
            Char2Loop(_) => "Char2Loop",
            SkewPair(..) => "SkewPair",
            LoopAtIdempotent(..) => "LoopAtIdempotent",
            Char2LoopDual(_) => "Char2LoopDual",
            Phi(..) => "Phi",
            PsiEP(..) => "Psi_eP",
            PsiPP(_) => "Psi_PP",
        }
    }

    /// Human-readable arguments, e.g. `["b1", "b2"]`.
    pub fn arguments(&self, g: &GentlePresentation) -> Vec<String> {
        use CohomologyElement::*;
        let q = g.quiver();
        let arrow = |a: &usize| q.arrow(*a).name.clone();
        let path = |p: &Path| g.render(p);
        match self {
            Identity => vec![],
            CentralCycle(p) | PsiPP(p) => vec![path(p)],
            Shortcut(a, p) | Deviation(a, p) => vec![arrow(a), path(p)],
            FundCycle(a) | Char2Loop(a) | Char2LoopDual(a) => vec![arrow(a)],
            SkewPair(a, b) => vec![arrow(a), arrow(b)],
            LoopAtIdempotent(a, e) => vec![arrow(a), q.vertex_name(*e).to_string()],
            Phi(p, r) => vec![path(p), path(r)],
            PsiEP(e, p) => vec![q.vertex_name(*e).to_string(), path(p)],
        }
    }

    /// `Kind(arg, …)`.
    pub fn label(&self, g: &GentlePresentation) -> String {
        let args = self.arguments(g);
        if args.is_empty() {
            self.kind().to_string()
        } else {
            format!("{}({})", self.kind(), args.join(", "))
        }
    }

    /// Representative in `K(Q₀||B)` of a centre element.
    pub fn center_vector(&self, g: &GentlePresentation, field: Field) -> Option<SparseVector<Pair>> {
        match self {
            CohomologyElement::Identity => Some(
                g.vertex_paths().into_iter().map(|e| ((e.clone(), e), field.one())).collect(),
            ),
            CohomologyElement::CentralCycle(p) => Some(SparseVector::unit((Path::vertex(p.source()), p.clone()), field)),
            _ => None,
        }
    }

    /// Representative cocycle in `K(Q₁||B)` of an `HH¹(A)` element.
    pub fn cochain(&self, g: &GentlePresentation, field: Field) -> Option<SparseVector<Pair>> {
        let q = g.quiver();
        let pair = match self {
            CohomologyElement::Shortcut(a, p) | CohomologyElement::Deviation(a, p) => (q.arrow_path(*a), p.clone()),
            CohomologyElement::FundCycle(a) => (q.arrow_path(*a), q.arrow_path(*a)),
            CohomologyElement::Char2Loop(a) => (q.arrow_path(*a), Path::vertex(q.arrow(*a).source)),
            _ => return None,
        };
        Some(SparseVector::unit(pair, field))
    }

    /// Representative in `K(Q₁⊙B*)` of an `HH₁(A)*` element; `(x, y)` stands for `(x, y*)`.
    pub fn dual_chain(&self, g: &GentlePresentation, field: Field) -> Option<SparseVector<Pair>> {
        let q = g.quiver();
        match self {
            CohomologyElement::SkewPair(a, b) => Some(SparseVector::from_terms([
                ((q.arrow_path(*a), q.arrow_path(*b)), field.one()),
                ((q.arrow_path(*b), q.arrow_path(*a)), -field.one()),
            ])),
            CohomologyElement::LoopAtIdempotent(a, e) => {
                Some(SparseVector::unit((q.arrow_path(*a), Path::vertex(*e)), field))
            }
            CohomologyElement::Char2LoopDual(a) => Some(SparseVector::unit((q.arrow_path(*a), q.arrow_path(*a)), field)),
            _ => None,
        }
    }

    /// The map `DA → A` of an `Alt` element; a term `(p, r)` means `p* ↦ r`.
    pub fn alt_map(&self, g: &GentlePresentation, field: Field) -> Option<SparseVector<Pair>> {
        match self {
            CohomologyElement::Phi(p, r) => Some(SparseVector::from_terms([
                ((p.clone(), r.clone()), field.one()),
                ((r.clone(), p.clone()), -field.one()),
            ])),
            CohomologyElement::PsiEP(_, p) => {
                let q = g.quiver();
                let mut terms = BTreeSet::new();
                for i in 0..=p.len() {
                    let head = p.segment(q, i, p.len());
                    let tail = p.segment(q, 0, i);
                    terms.insert((head.clone(), tail.clone()));
                    terms.insert((tail, head));
                }
                Some(terms.into_iter().map(|t| (t, field.one())).collect())
            }
            CohomologyElement::PsiPP(p) => Some(SparseVector::unit((p.clone(), p.clone()), field)),
            _ => None,
        }
    }
}
