//! Independent computation of the low-degree Hochschild invariants of a
//! gentle algebra by exact linear algebra.
//!
//! `HH¹(A)` is the cohomology of `K(Q₀||B) → K(Q₁||B) → K(R||B)`, the dual
//! `HH₁(A)*` that of `K(Q₀⊙B*) → K(Q₁⊙B*) → K(R⊙B*)`, the centre is the
//! kernel of the first map, and `Alt_A(DA)` is solved for directly.

pub mod alt;
pub mod complex;
pub mod matrix;
pub mod quotient;

pub use alt::{alt_space, AltSpace};
pub use complex::{d0_matrix, d1_matrix, degree_one_pairs, dual_degree_one_pairs, homology_dual_matrices};
pub use matrix::ExactMatrix;
pub use quotient::{quotient, CochainError, QuotientSpace};

use gentle_core::{Field, GentlePresentation, Pair, SparseVector};

/// The complex computing `HH¹(A)` with its degree-one quotient.
#[derive(Clone, Debug)]
pub struct FirstCohomology {
    pub d0: ExactMatrix,
    pub d1: ExactMatrix,
    pub space: QuotientSpace,
}

impl FirstCohomology {
    pub fn new(g: &GentlePresentation, field: Field) -> FirstCohomology {
        let d0 = d0_matrix(g, field);
        let d1 = d1_matrix(g, field);
        let space = quotient(&d1, &d0).expect("d¹∘d⁰ vanishes for a monomial algebra");
        FirstCohomology { d0, d1, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_cocycle(&self, v: &SparseVector<Pair>) -> bool {
        self.space.is_cycle(v)
    }

    pub fn reduce(&self, v: &SparseVector<Pair>) -> SparseVector<Pair> {
        self.space.reduce(v)
    }

    /// `dim ker d⁰`, the dimension of the centre.
    pub fn center_dim(&self) -> usize {
        self.d0.matrix().kernel().len()
    }
}

/// The complex computing `HH₁(A)*` with its degree-one quotient.
#[derive(Clone, Debug)]
pub struct DualFirstHomology {
    pub d0: ExactMatrix,
    pub d1: ExactMatrix,
    pub space: QuotientSpace,
}

impl DualFirstHomology {
    pub fn new(g: &GentlePresentation, field: Field) -> DualFirstHomology {
        let (d0, d1) = homology_dual_matrices(g, field);
        let space = quotient(&d1, &d0).expect("d₁∘d₀ vanishes for a monomial algebra");
        DualFirstHomology { d0, d1, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Canonical representative of `v ∈ K(Q₁||B)` modulo `Im d⁰`.
pub fn reduce_mod_coboundaries(v: &SparseVector<Pair>, g: &GentlePresentation, field: Field) -> SparseVector<Pair> {
    FirstCohomology::new(g, field).reduce(v)
}

pub fn hh1_dimension(g: &GentlePresentation, field: Field) -> usize {
    FirstCohomology::new(g, field).dim()
}

pub fn hh1_dual_dimension(g: &GentlePresentation, field: Field) -> usize {
    DualFirstHomology::new(g, field).dim()
}

pub fn center_dimension(g: &GentlePresentation, field: Field) -> usize {
    d0_matrix(g, field).matrix().kernel().len()
}

pub fn alt_dimension(g: &GentlePresentation, field: Field) -> usize {
    alt_space(g, field).dim()
}

/// Oracle dimensions of the four summands of `HH¹(TA)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SummandDims {
    pub center: usize,
    pub hh1_dual: usize,
    pub hh1: usize,
    pub alt: usize,
}

impl SummandDims {
    pub fn of(g: &GentlePresentation, field: Field) -> SummandDims {
        SummandDims {
            center: center_dimension(g, field),
            hh1_dual: hh1_dual_dimension(g, field),
            hh1: hh1_dimension(g, field),
            alt: alt_dimension(g, field),
        }
    }

    pub fn total(&self) -> usize {
        self.center + self.hh1_dual + self.hh1 + self.alt
    }
}
