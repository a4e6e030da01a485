use gentle_core::linalg::{Coordinates, Matrix};
use gentle_core::{Field, Pair, Scalar, SparseVector};

/// A linear map between spaces with ordered bases of pairs.
///
/// Column `j` holds the image of the `j`-th domain pair.
#[derive(Clone, Debug)]
pub struct ExactMatrix {
    domain: Coordinates<Pair>,
    codomain: Coordinates<Pair>,
    matrix: Matrix,
}

impl ExactMatrix {
    /// Tabulates `image` on every domain pair.
    pub fn from_images(
        field: Field,
        domain: Vec<Pair>,
        codomain: Vec<Pair>,
        image: impl Fn(&Pair) -> SparseVector<Pair>,
    ) -> ExactMatrix {
        let domain = Coordinates::new(domain);
        let codomain = Coordinates::new(codomain);
        let mut matrix = Matrix::zeros(field, codomain.len(), domain.len());
        for (j, pair) in domain.keys().iter().enumerate() {
            for (key, c) in image(pair).iter() {
                let i = codomain.index_of(key).expect("image outside the codomain");
                matrix.add_to(i, j, c);
            }
        }
        ExactMatrix { domain, codomain, matrix }
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn domain(&self) -> &Coordinates<Pair> {
        &self.domain
    }

    pub fn codomain(&self) -> &Coordinates<Pair> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Image of a single domain pair.
    pub fn column(&self, pair: &Pair) -> SparseVector<Pair> {
        match self.domain.index_of(pair) {
            Some(j) => self.codomain.sparse(&self.matrix.column(j)),
            None => SparseVector::zero(),
        }
    }

    pub fn apply(&self, v: &SparseVector<Pair>) -> SparseVector<Pair> {
        let dense = self.domain.dense(v, self.field());
        self.codomain.sparse(&self.matrix.apply(&dense))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ExactMatrix) -> Matrix {
        assert_eq!(self.domain.keys(), first.codomain.keys(), "maps are not composable");
        self.matrix.mul(&first.matrix)
    }

    /// Every domain column, as dense vectors in codomain coordinates.
    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.matrix.cols()).map(|j| self.matrix.column(j)).collect()
    }
}
