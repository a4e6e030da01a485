//! `TA = A ⋉ DA` on the basis `B ∪ B*`, with every `HH¹(TA)` basis element
//! realized as a derivation and brackets read off modulo inner derivations.

use crate::hh1::Derivation;
use crate::LieError;
use gentle_bases::{CohomologyElement, Summand};
use gentle_core::linalg::RowSpace;
use gentle_core::{Field, GentlePresentation, Path, Scalar};

/// Multiplication table of `TA`: index `i < n` is the path `B[i]`, index
/// `n + i` its dual `B[i]*`.
#[derive(Clone, Debug)]
pub struct TrivialExtension<'g> {
    g: &'g GentlePresentation,
    field: Field,
    n: usize,
    /// `product[u][v] = u·v`, where `u·v` means `v` then `u` for paths.
    product: Vec<Vec<Option<usize>>>,
}

/// A linear endomorphism of `TA`, stored by columns.
pub type Endomorphism = Vec<Vec<Scalar>>;

impl<'g> TrivialExtension<'g> {
    pub fn new(g: &'g GentlePresentation, field: Field) -> Self {
        let q = g.quiver();
        let basis = g.basis();
        let n = basis.len();
        let index = |p: &Path| g.basis_position(p).expect("subpaths of basis paths lie in B");
        let mut product = vec![vec![None; 2 * n]; 2 * n];
        for (u, x) in basis.iter().enumerate() {
            for (v, y) in basis.iter().enumerate() {
                product[u][v] = g.product(y, x).map(|w| index(&w));
                // x·y* = (y with x stripped from its start)*
                product[u][n + v] = y.strip_prefix(q, x).map(|w| n + index(&w));
                // y*·x = (y with x stripped from its end)*
                product[n + v][u] = y.strip_suffix(q, x).map(|w| n + index(&w));
            }
        }
        TrivialExtension { g, field, n, product }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// Index of `u·v` for basis elements, `None` when the product is 0.
    pub fn product_index(&self, u: usize, v: usize) -> Option<usize> {
        self.product[u][v]
    }

    /// `x·y` for vectors in `TA`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (u, cx) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (v, cy) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some(w) = self.product[u][v] {
                    out[w] = &out[w] + &(cx * cy);
                }
            }
        }
        out
    }

    fn unit(&self, u: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[u] = self.field.one();
        v
    }

    fn position(&self, p: &Path) -> usize {
        self.g.basis_position(p).expect("basis path")
    }

    /// The derivation of `TA` attached to a basis element of `HH¹(TA)`:
    /// `z` acts by `f ↦ z·f` on `DA`; `δ ∈ Der(A)` by `(x, f) ↦ (δx, −f∘δ)`;
    /// `g ∈ Der(A, DA)` by `x ↦ g(x)`; `ψ ∈ Alt_A(DA)` by `f ↦ ψ(f)`.
    pub fn realize(&self, e: &CohomologyElement) -> Endomorphism {
        let g = self.g;
        let q = g.quiver();
        let n = self.n;
        let mut columns = vec![self.zero_vector(); self.dim()];
        match e.summand() {
            Summand::Center => {
                let z = e.center_vector(g, self.field).expect("centre element");
                let mut zv = self.zero_vector();
                for ((_, p), c) in z.iter() {
                    let i = self.position(p);
                    zv[i] = &zv[i] + c;
                }
                for i in 0..n {
                    columns[n + i] = self.multiply(&zv, &self.unit(n + i));
                }
            }
            Summand::H1 => {
                let delta = Derivation::new(g, &e.cochain(g, self.field).expect("HH¹ element"));
                for (i, p) in g.basis().iter().enumerate() {
                    for (w, c) in delta.on_path(p).iter() {
                        let j = self.position(w);
                        columns[i][j] = &columns[i][j] + c;
                        // (f∘δ)(p) picks up the coefficient of w in δ(p)
                        columns[n + j][n + i] = &columns[n + j][n + i] - c;
                    }
                }
            }
            Summand::H1Dual => {
                let chain = e.dual_chain(g, self.field).expect("HH₁* element");
                for (i, p) in g.basis().iter().enumerate() {
                    for (k, &a) in p.arrows().iter().enumerate() {
                        let before = self.unit(self.position(&p.segment(q, 0, k)));
                        let after = self.unit(self.position(&p.segment(q, k + 1, p.len())));
                        for ((b, alpha), c) in chain.iter() {
                            if b.single_arrow() != Some(a) {
                                continue;
                            }
                            let image = self.multiply(&self.multiply(&after, &self.unit(n + self.position(alpha))), &before);
                            for (j, x) in image.iter().enumerate() {
                                columns[i][j] = &columns[i][j] + &(x * c);
                            }
                        }
                    }
                }
            }
            Summand::Alt => {
                let map = e.alt_map(g, self.field).expect("Alt element");
                for ((p, r), c) in map.iter() {
                    let (i, j) = (self.position(p), self.position(r));
                    columns[n + i][j] = &columns[n + i][j] + c;
                }
            }
        }
        columns
    }

    /// `u ↦ t·u − u·t`.
    pub fn inner(&self, t: usize) -> Endomorphism {
        let tv = self.unit(t);
        (0..self.dim())
            .map(|u| {
                let uv = self.unit(u);
                let left = self.multiply(&tv, &uv);
                let right = self.multiply(&uv, &tv);
                left.iter().zip(&right).map(|(a, b)| a - b).collect()
            })
            .collect()
    }

    fn apply(&self, d: &Endomorphism, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (u, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, y) in out.iter_mut().zip(&d[u]) {
                if !y.is_zero() {
                    *o = &*o + &(y * c);
                }
            }
        }
        out
    }

    /// Whether `d(uv) = d(u)v + u d(v)` on all pairs of basis elements.
    pub fn is_derivation(&self, d: &Endomorphism) -> bool {
        (0..self.dim()).all(|u| {
            (0..self.dim()).all(|v| {
                let lhs = match self.product[u][v] {
                    Some(w) => d[w].clone(),
                    None => self.zero_vector(),
                };
                let rhs_left = self.multiply(&d[u], &self.unit(v));
                let rhs_right = self.multiply(&self.unit(u), &d[v]);
                lhs.iter().zip(rhs_left.iter().zip(&rhs_right)).all(|(l, (a, b))| *l == a + b)
            })
        })
    }

    /// `d₁∘d₂ − d₂∘d₁`.
    pub fn commutator(&self, d1: &Endomorphism, d2: &Endomorphism) -> Endomorphism {
        (0..self.dim())
            .map(|u| {
                let a = self.apply(d1, &d2[u]);
                let b = self.apply(d2, &d1[u]);
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect()
    }
}

fn flatten(d: &Endomorphism) -> Vec<Scalar> {
    d.iter().flatten().cloned().collect()
}

/// Brackets of a basis of `HH¹(TA)` computed as commutators of derivations.
pub struct DerivationOracle<'g> {
    ta: TrivialExtension<'g>,
    derivations: Vec<Endomorphism>,
    inner: RowSpace,
    /// Rows `[d_k mod inner | e_k]` in reduced echelon form.
    tracked: RowSpace,
}

impl<'g> DerivationOracle<'g> {
    /// Realizes every basis element, checks the Leibniz rule and checks
    /// linear independence modulo inner derivations.
    pub fn new(g: &'g GentlePresentation, field: Field, basis: &[CohomologyElement]) -> Result<Self, LieError> {
        let ta = TrivialExtension::new(g, field);
        let size = ta.dim() * ta.dim();
        let derivations: Vec<Endomorphism> = basis.iter().map(|e| ta.realize(e)).collect();
        if let Some(bad) = derivations.iter().position(|d| !ta.is_derivation(d)) {
            return Err(LieError::NotADerivationAt(bad));
        }
        let inner_rows: Vec<Vec<Scalar>> = (0..ta.dim()).map(|t| flatten(&ta.inner(t))).collect();
        let inner = RowSpace::spanned_by(field, size, &inner_rows);
        let k = basis.len();
        let rows: Vec<Vec<Scalar>> = derivations
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = inner.reduce(&flatten(d));
                row.extend((0..k).map(|j| if i == j { field.one() } else { field.zero() }));
                row
            })
            .collect();
        let tracked = RowSpace::spanned_by(field, size + k, &rows);
        if tracked.pivots().iter().any(|&p| p >= size) {
            return Err(LieError::DependentBasis);
        }
        Ok(DerivationOracle { ta, derivations, inner, tracked })
    }

    pub fn trivial_extension(&self) -> &TrivialExtension<'g> {
        &self.ta
    }

    /// Coordinates of the class of a derivation in the realized basis.
    pub fn coordinates(&self, d: &Endomorphism) -> Result<Vec<Scalar>, LieError> {
        let field = self.ta.field();
        let size = self.ta.dim() * self.ta.dim();
        let mut row = self.inner.reduce(&flatten(d));
        row.extend((0..self.derivations.len()).map(|_| field.zero()));
        let reduced = self.tracked.reduce(&row);
        if reduced[..size].iter().any(|x| !x.is_zero()) {
            return Err(LieError::OutsideSpan);
        }
        Ok(reduced[size..].iter().map(|x| -x).collect())
    }

    /// Coordinates of `[basis[i], basis[j]]`.
    pub fn bracket(&self, i: usize, j: usize) -> Result<Vec<Scalar>, LieError> {
        let c = self.ta.commutator(&self.derivations[i], &self.derivations[j]);
        if !self.ta.is_derivation(&c) {
            return Err(LieError::NotADerivation);
        }
        self.coordinates(&c)
    }
}
