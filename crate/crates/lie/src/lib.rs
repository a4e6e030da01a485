//! Lie structure of the first Hochschild cohomology of a gentle algebra `A`
//! and of its trivial extension `TA`.
//!
//! Brackets on `HH¹(A)` come from substitution of parallel paths; brackets
//! on `HH¹(TA)` from a rule list keyed by the kinds of basis elements. Both
//! have independent oracles built from commutators of derivations.

mod algebra;
mod classify;
mod export;
mod hh1;
mod model;
mod rules;

pub use algebra::{
    derived_series, hh1_algebra_on, lower_central_series, structure_constants, trivial_extension_oracle, LieAlgebra,
    SeriesKind, SeriesReport, Target,
};
pub use classify::{classify, classify_algebras, Classification, NilpotencyConditions};
pub use export::{constants_csv, constants_json, render_vector};
pub use hh1::{bracket_hh1, bracket_oracle, raw_bracket, CohomologyBracket};
pub use model::{DerivationOracle, Endomorphism, TrivialExtension};
pub use rules::{bracket_tga, find_rule, Mixed, Rule, RuleContext, TaCoordinates, RULES};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("argument is not a cocycle")]
    NotACocycle,
    #[error("commutator violates the Leibniz rule")]
    NotADerivation,
    #[error("basis element {0} is not realized by a derivation")]
    NotADerivationAt(usize),
    #[error("basis representatives are linearly dependent")]
    DependentBasis,
    #[error("element has no coordinates in the basis")]
    OutsideSpan,
    #[error("element belongs to a different summand")]
    WrongSummand,
    #[error("no bracket rule for {0} with {1}")]
    UnknownTagPair(&'static str, &'static str),
    #[error("bracket is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
}
