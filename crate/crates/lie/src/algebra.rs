use crate::hh1::CohomologyBracket;
use crate::model::DerivationOracle;
use crate::rules::TaCoordinates;
use crate::LieError;
use gentle_bases::{hh1_basis, trivial_extension_hh1_basis, CohomologyElement};
use gentle_core::linalg::{solve_combination, RowSpace};
use gentle_core::{Field, GentlePresentation, Pair, Scalar, SparseVector};
use serde::Serialize;

/// Which first cohomology to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    /// `HH¹(A)`.
    Algebra,
    /// `HH¹(TA)`.
    TrivialExtension,
}

/// A finite-dimensional Lie algebra with a labelled basis and its full
/// table of structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    basis: Vec<CohomologyElement>,
    labels: Vec<String>,
    /// `constants[i][j]` are the coordinates of `[xᵢ, xⱼ]`.
    constants: Vec<Vec<Vec<Scalar>>>,
}

impl LieAlgebra {
    /// Checks antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(
        field: Field,
        basis: Vec<CohomologyElement>,
        labels: Vec<String>,
        constants: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<LieAlgebra, LieError> {
        let l = LieAlgebra { field, basis, labels, constants };
        let n = l.dim();
        for i in 0..n {
            if l.constants[i][i].iter().any(|c| !c.is_zero()) {
                return Err(LieError::NotAntisymmetric(i, i));
            }
            for j in 0..i {
                let neg: Vec<Scalar> = l.constants[j][i].iter().map(|c| -c).collect();
                if l.constants[i][j] != neg {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (l.unit(i), l.unit(j), l.unit(k));
                    let a = l.bracket(&x, &l.bracket(&y, &z));
                    let b = l.bracket(&y, &l.bracket(&z, &x));
                    let c = l.bracket(&z, &l.bracket(&x, &y));
                    if a.iter().zip(&b).zip(&c).any(|((a, b), c)| !(&(a + b) + c).is_zero()) {
                        return Err(LieError::JacobiViolation(i, j, k));
                    }
                }
            }
        }
        Ok(l)
    }

    /// Tabulates `bracket` on all pairs `i < j` and fills in the rest.
    pub fn tabulate(
        field: Field,
        basis: Vec<CohomologyElement>,
        labels: Vec<String>,
        mut bracket: impl FnMut(usize, usize) -> Result<Vec<Scalar>, LieError>,
    ) -> Result<LieAlgebra, LieError> {
        let n = basis.len();
        let mut constants = vec![vec![vec![field.zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = bracket(i, j)?;
                constants[j][i] = c.iter().map(|x| -x).collect();
                constants[i][j] = c;
            }
        }
        LieAlgebra::new(field, basis, labels, constants)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[CohomologyElement] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[xᵢ, xⱼ]`.
    pub fn constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.constants[i][j]
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|k| if k == i { self.field.one() } else { self.field.zero() }).collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.constants[i][j]) {
                    if !c.is_zero() {
                        *o = &*o + &(c * &ab);
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// Dimension of `{x : [x, L] = 0}`.
    pub fn center_dim(&self) -> usize {
        let n = self.dim();
        // rows indexed by (j, k): coefficient of x_i is c_{ij}^k
        let rows: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.constants[i][j][k].clone()).collect())
            .collect();
        n - RowSpace::spanned_by(self.field, n, &rows).dim()
    }

    fn span(&self, vectors: &[Vec<Scalar>]) -> RowSpace {
        RowSpace::spanned_by(self.field, self.dim(), vectors)
    }

    fn brackets_of(&self, xs: &[Vec<Scalar>], ys: &[Vec<Scalar>]) -> RowSpace {
        let products: Vec<Vec<Scalar>> = xs.iter().flat_map(|x| ys.iter().map(move |y| self.bracket(x, y))).collect();
        self.span(&products)
    }

    fn all(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.unit(i)).collect()
    }

    /// `L ⊇ [L, L] ⊇ [[L, L], [L, L]] ⊇ …`.
    pub fn derived_series(&self) -> SeriesReport {
        self.series(SeriesKind::Derived, |current| self.brackets_of(current, current))
    }

    /// `L ⊇ [L, L] ⊇ [L, [L, L]] ⊇ …`.
    pub fn lower_central_series(&self) -> SeriesReport {
        let all = self.all();
        self.series(SeriesKind::LowerCentral, |current| self.brackets_of(&all, current))
    }

    fn series(&self, kind: SeriesKind, step: impl Fn(&[Vec<Scalar>]) -> RowSpace) -> SeriesReport {
        let mut current = self.all();
        let mut dims = vec![self.dim()];
        while *dims.last().unwrap() > 0 {
            let next = step(&current);
            dims.push(next.dim());
            if next.dim() == dims[dims.len() - 2] {
                break;
            }
            current = next.rows().to_vec();
        }
        SeriesReport::new(kind, dims)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().terminated
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().terminated
    }

    /// The constants in the basis `yᵢ = Σₖ m[i][k] xₖ`, if `m` is invertible.
    pub fn change_basis(&self, m: &[Vec<Scalar>], labels: Vec<String>) -> Option<LieAlgebra> {
        let n = self.dim();
        if self.span(m).dim() < n {
            return None;
        }
        let columns: Vec<Vec<Scalar>> = m.to_vec();
        let mut constants = vec![vec![vec![self.field.zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let target = self.bracket(&m[i], &m[j]);
                constants[i][j] = solve_combination(self.field, &columns, &target)?;
            }
        }
        LieAlgebra::new(self.field, self.basis.clone(), labels, constants).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Dimensions of a descending series, stopped at 0 or at the first repeat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub dims: Vec<usize>,
    /// Whether the series reaches 0.
    pub terminated: bool,
    /// Number of steps taken.
    pub depth: usize,
}

impl SeriesReport {
    fn new(kind: SeriesKind, dims: Vec<usize>) -> SeriesReport {
        let terminated = dims.last() == Some(&0);
        SeriesReport { kind, depth: dims.len() - 1, dims, terminated }
    }
}

pub fn derived_series(l: &LieAlgebra) -> SeriesReport {
    l.derived_series()
}

pub fn lower_central_series(l: &LieAlgebra) -> SeriesReport {
    l.lower_central_series()
}

/// `HH¹(A)` on the given cocycle representatives.
pub fn hh1_algebra_on(
    g: &GentlePresentation,
    field: Field,
    basis: Vec<CohomologyElement>,
) -> Result<LieAlgebra, LieError> {
    let br = CohomologyBracket::new(g, field);
    let reps: Vec<SparseVector<Pair>> =
        basis.iter().map(|e| e.cochain(g, field).ok_or(LieError::WrongSummand)).collect::<Result<_, _>>()?;
    if br.complex().space.rank_of_classes(&reps) != reps.len() {
        return Err(LieError::DependentBasis);
    }
    let labels = basis.iter().map(|e| e.label(g)).collect();
    LieAlgebra::tabulate(field, basis, labels, |i, j| {
        let v = br.bracket(&reps[i], &reps[j])?;
        br.complex().space.coordinates(&v, &reps).ok_or(LieError::OutsideSpan)
    })
}

/// Structure constants of `HH¹(A)` or `HH¹(TA)` on the canonical basis.
pub fn structure_constants(g: &GentlePresentation, field: Field, which: Target) -> Result<LieAlgebra, LieError> {
    match which {
        Target::Algebra => hh1_algebra_on(g, field, hh1_basis(g, field)),
        Target::TrivialExtension => {
            let coords = TaCoordinates::new(g, field, trivial_extension_hh1_basis(g, field));
            let basis = coords.basis().to_vec();
            let labels = basis.iter().map(|e| e.label(g)).collect();
            LieAlgebra::tabulate(field, basis.clone(), labels, |i, j| coords.bracket(&basis[i], &basis[j]))
        }
    }
}

/// `HH¹(TA)` tabulated from commutators of derivations of `TA`.
pub fn trivial_extension_oracle(g: &GentlePresentation, field: Field) -> Result<LieAlgebra, LieError> {
    let basis = trivial_extension_hh1_basis(g, field);
    let oracle = DerivationOracle::new(g, field, &basis)?;
    let labels = basis.iter().map(|e| e.label(g)).collect();
    LieAlgebra::tabulate(field, basis, labels, |i, j| oracle.bracket(i, j))
}
