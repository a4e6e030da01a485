use crate::matrix::ExactMatrix;
use gentle_core::linalg::{solve_combination, Coordinates, RowSpace};
use gentle_core::{Field, Pair, Scalar, SparseVector};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CochainError {
    #[error("the composite of consecutive differentials is nonzero")]
    ComplexNotExact,
    #[error("the maps do not share the middle space")]
    NotComposable,
}

/// `ker(ker_of) / im(im_of)` inside the shared middle space.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: Coordinates<Pair>,
    field: Field,
    kernel: RowSpace,
    image: RowSpace,
}

/// Builds the quotient, checking that `ker_of ∘ im_of = 0`.
pub fn quotient(ker_of: &ExactMatrix, im_of: &ExactMatrix) -> Result<QuotientSpace, CochainError> {
    if ker_of.domain().keys() != im_of.codomain().keys() {
        return Err(CochainError::NotComposable);
    }
    if !ker_of.after(im_of).is_zero() {
        return Err(CochainError::ComplexNotExact);
    }
    let field = ker_of.field();
    let n = ker_of.domain().len();
    Ok(QuotientSpace {
        ambient: ker_of.domain().clone(),
        field,
        kernel: RowSpace::spanned_by(field, n, &ker_of.matrix().kernel()),
        image: RowSpace::spanned_by(field, n, &im_of.columns()),
    })
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.kernel.dim() - self.image.dim()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn image_dim(&self) -> usize {
        self.image.dim()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> &Coordinates<Pair> {
        &self.ambient
    }

    pub fn kernel(&self) -> &RowSpace {
        &self.kernel
    }

    pub fn image(&self) -> &RowSpace {
        &self.image
    }

    fn dense(&self, v: &SparseVector<Pair>) -> Vec<Scalar> {
        self.ambient.dense(v, self.field)
    }

    /// Whether every pair of `v` is a coordinate of the ambient space.
    pub fn is_ambient(&self, v: &SparseVector<Pair>) -> bool {
        v.iter().all(|(k, _)| self.ambient.index_of(k).is_some())
    }

    pub fn is_cycle(&self, v: &SparseVector<Pair>) -> bool {
        self.is_ambient(v) && self.kernel.contains(&self.dense(v))
    }

    pub fn is_boundary(&self, v: &SparseVector<Pair>) -> bool {
        self.is_ambient(v) && self.image.contains(&self.dense(v))
    }

    /// Canonical coset representative: pivot coordinates of the image cleared.
    pub fn reduce(&self, v: &SparseVector<Pair>) -> SparseVector<Pair> {
        self.ambient.sparse(&self.image.reduce(&self.dense(v)))
    }

    /// Dimension of the span of the classes of `vs`.
    pub fn rank_of_classes(&self, vs: &[SparseVector<Pair>]) -> usize {
        let mut rows: Vec<Vec<Scalar>> = self.image.rows().to_vec();
        rows.extend(vs.iter().map(|v| self.dense(v)));
        RowSpace::spanned_by(self.field, self.ambient.len(), &rows).dim() - self.image.dim()
    }

    /// Coefficients `c` with `v ≡ Σ cᵢ repsᵢ` modulo the image, if any.
    pub fn coordinates(&self, v: &SparseVector<Pair>, reps: &[SparseVector<Pair>]) -> Option<Vec<Scalar>> {
        let mut columns: Vec<Vec<Scalar>> = reps.iter().map(|r| self.dense(r)).collect();
        columns.extend(self.image.rows().iter().cloned());
        let x = solve_combination(self.field, &columns, &self.dense(v))?;
        Some(x[..reps.len()].to_vec())
    }
}
