use crate::algebra::{structure_constants, LieAlgebra, SeriesReport, Target};
use crate::LieError;
use gentle_bases::{alt_basis, center_basis, hh1_basis, hh1_dual_basis, CohomologyElement};
use gentle_core::{Field, GentlePresentation};
use serde::Serialize;

/// The four structural conditions characterizing nilpotency of `HH¹(TA)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyConditions {
    pub center_is_field: bool,
    pub dual_vanishes: bool,
    pub alt_vanishes: bool,
    pub only_fundamental_cycles: bool,
}

impl NilpotencyConditions {
    pub fn of(g: &GentlePresentation, field: Field) -> NilpotencyConditions {
        NilpotencyConditions {
            center_is_field: center_basis(g, field).len() == 1,
            dual_vanishes: hh1_dual_basis(g, field).is_empty(),
            alt_vanishes: alt_basis(g, field).is_empty(),
            only_fundamental_cycles: hh1_basis(g, field).iter().all(|e| matches!(e, CohomologyElement::FundCycle(_))),
        }
    }

    pub fn all(&self) -> bool {
        self.center_is_field && self.dual_vanishes && self.alt_vanishes && self.only_fundamental_cycles
    }
}

/// Lie-theoretic summary of `HH¹(A)` and `HH¹(TA)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub field: String,
    pub kronecker_shaped: bool,
    pub dim_a: usize,
    pub dim_ta: usize,
    pub solvable_a: bool,
    pub solvable_ta: bool,
    pub nilpotent_ta: bool,
    pub abelian_ta: bool,
    /// `HH¹(TA)` is not solvable, has dimension 4, a derived algebra of
    /// dimension 3 and a centre of dimension 1.
    pub gl2_flag: bool,
    pub derived_a: SeriesReport,
    pub derived_ta: SeriesReport,
    pub lower_central_ta: SeriesReport,
    pub center_dim_ta: usize,
    pub nilpotency_conditions: NilpotencyConditions,
}

impl Classification {
    /// Whether the series-based nilpotency matches the structural conditions.
    pub fn conditions_agree(&self) -> bool {
        self.nilpotent_ta == self.nilpotency_conditions.all()
    }
}

fn gl2_invariants(l: &LieAlgebra, derived: &SeriesReport) -> bool {
    !derived.terminated && l.dim() == 4 && derived.dims.get(1) == Some(&3) && l.center_dim() == 1
}

pub fn classify_algebras(
    g: &GentlePresentation,
    field: Field,
    a: &LieAlgebra,
    ta: &LieAlgebra,
) -> Classification {
    let derived_a = a.derived_series();
    let derived_ta = ta.derived_series();
    let lower_central_ta = ta.lower_central_series();
    Classification {
        field: field.label(),
        kronecker_shaped: g.is_kronecker(),
        dim_a: a.dim(),
        dim_ta: ta.dim(),
        solvable_a: derived_a.terminated,
        solvable_ta: derived_ta.terminated,
        nilpotent_ta: lower_central_ta.terminated,
        abelian_ta: ta.is_abelian(),
        gl2_flag: gl2_invariants(ta, &derived_ta),
        center_dim_ta: ta.center_dim(),
        nilpotency_conditions: NilpotencyConditions::of(g, field),
        derived_a,
        derived_ta,
        lower_central_ta,
    }
}

pub fn classify(g: &GentlePresentation, field: Field) -> Result<Classification, LieError> {
    let a = structure_constants(g, field, Target::Algebra)?;
    let ta = structure_constants(g, field, Target::TrivialExtension)?;
    Ok(classify_algebras(g, field, &a, &ta))
}
