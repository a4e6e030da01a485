//! Combinatorial bases of `Z(A)`, `HH¹(A)`, `HH₁(A)*` and `Alt_A(DA)` for a
//! gentle algebra `A`, whose concatenation is a basis of `HH¹(TA)`.

mod basis;
mod element;
mod special;

pub use basis::{alt_basis, center_basis, hh1_basis, hh1_dual_basis, trivial_extension_hh1_basis};
pub use element::{CohomologyElement, Summand};
pub use special::{special_case_report, NotSpecialCase, SpecialCaseReport};
