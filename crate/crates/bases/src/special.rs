use gentle_core::{Field, GentlePresentation};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSpecialCase;

impl fmt::Display for NotSpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("the algebra is neither K nor K[x]/(x²)")
    }
}

impl std::error::Error for NotSpecialCase {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialCaseReport {
    pub algebra: &'static str,
    pub field: String,
    pub center: usize,
    pub hh1_dual: usize,
    pub hh1: usize,
    pub alt: usize,
    pub total: usize,
    pub notes: Vec<&'static str>,
}

/// Known summand dimensions for `A = K` and `A = K[x]/(x²)`.
pub fn special_case_report(g: &GentlePresentation, field: Field) -> Result<SpecialCaseReport, NotSpecialCase> {
    let two = field.is_char_two();
    let (algebra, dims, notes) = if g.is_ground_field() {
        let notes = if two {
            vec!["TA = K[α]/(α²)", "Z(A) = K", "Alt_A(DA) = K·ψ_{e,e} with e* ↦ e"]
        } else {
            vec!["TA = K[α]/(α²)", "Z(A) = K", "HH₁(A)*, HH¹(A) and Alt_A(DA) vanish"]
        };
        ("K", [1, 0, 0, usize::from(two)], notes)
    } else if g.is_loop_square_zero() {
        let notes = if two {
            vec!["Z(A) = A", "HH₁(A)* = K(x, e*) ⊕ K(x, x*)", "HH¹(A) = K(x, x) ⊕ K(x, e)", "Alt_A(DA) = K·ψ_{x,x} ⊕ K·ψ_{e,x}"]
        } else {
            vec!["Z(A) = A", "HH₁(A)* = K(x, e*)", "HH¹(A) = K(x, x)", "Alt_A(DA) = 0"]
        };
        let k = if two { 2 } else { 1 };
        ("K[x]/(x²)", [2, k, k, if two { 2 } else { 0 }], notes)
    } else {
        return Err(NotSpecialCase);
    };
    Ok(SpecialCaseReport {
        algebra,
        field: field.label(),
        center: dims[0],
        hh1_dual: dims[1],
        hh1: dims[2],
        alt: dims[3],
        total: dims.iter().sum(),
        notes,
    })
}
