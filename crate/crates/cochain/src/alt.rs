//! Brute-force description of `Alt_A(DA)`.
//!
//! A map `φ : DA → A` is recorded by the coefficients `c(p, r)` of
//! `φ(p*) = Σ c(p, r)·r`; only cyclic pairs `(p, r)` of basis paths can be
//! nonzero for a bimodule map. The space is cut out by left and right
//! `A`-linearity and skew-symmetry `c(p, r) + c(r, p) = 0`.

use gentle_core::linalg::{Coordinates, Matrix, RowSpace};
use gentle_core::{cyclic_pairs, Field, GentlePresentation, Pair, Path, Scalar, SparseVector};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct AltSpace {
    field: Field,
    unknowns: Coordinates<Pair>,
    constraints: Matrix,
    basis: Vec<SparseVector<Pair>>,
}

type Row = BTreeMap<usize, Scalar>;

fn push(row: &mut Row, i: usize, c: Scalar) {
    let v = match row.remove(&i) {
        Some(old) => &old + &c,
        None => c,
    };
    if !v.is_zero() {
        row.insert(i, v);
    }
}

/// Linearity and skew-symmetry equations on the coefficients `c(p, r)`.
pub fn alt_space(g: &GentlePresentation, field: Field) -> AltSpace {
    let q = g.quiver();
    let unknowns = Coordinates::new(cyclic_pairs(g.basis(), g.basis()));
    let mut rows: Vec<Row> = Vec::new();

    for a in 0..q.arrow_count() {
        let arrow = q.arrow_path(a);
        for p in g.basis() {
            // φ(a·p*) = a·φ(p*) and φ(p*·a) = φ(p*)·a, coefficientwise in A.
            for left in [true, false] {
                let mut eqs: BTreeMap<Path, Row> = BTreeMap::new();
                let acted = if left { p.strip_prefix(q, &arrow) } else { p.strip_suffix(q, &arrow) };
                if let Some(rest) = acted {
                    for x in g.basis() {
                        if let Some(i) = unknowns.index_of(&(rest.clone(), x.clone())) {
                            push(eqs.entry(x.clone()).or_default(), i, field.one());
                        }
                    }
                }
                for r in g.basis() {
                    let Some(i) = unknowns.index_of(&(p.clone(), r.clone())) else { continue };
                    let moved = if left { g.product(r, &arrow) } else { g.product(&arrow, r) };
                    if let Some(x) = moved {
                        push(eqs.entry(x).or_default(), i, -field.one());
                    }
                }
                rows.extend(eqs.into_values());
            }
        }
    }

    for (i, (p, r)) in unknowns.keys().iter().enumerate() {
        let j = unknowns.index_of(&(r.clone(), p.clone())).expect("cyclic pairs are symmetric");
        if i <= j {
            let mut row = Row::new();
            push(&mut row, i, field.one());
            push(&mut row, j, field.one());
            rows.push(row);
        }
    }

    let n = unknowns.len();
    let dense: Vec<Vec<Scalar>> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut v = vec![field.zero(); n];
            for (i, c) in r {
                v[i] = c;
            }
            v
        })
        .collect();
    let constraints = Matrix::from_rows(field, n, dense);
    let basis = constraints.kernel().iter().map(|v| unknowns.sparse(v)).collect();
    AltSpace { field, unknowns, constraints, basis }
}

impl AltSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVector<Pair>] {
        &self.basis
    }

    pub fn unknowns(&self) -> &[Pair] {
        self.unknowns.keys()
    }

    /// Whether `map` (terms `(p, r)` meaning `p* ↦ r`) is a skew bimodule map.
    pub fn contains(&self, map: &SparseVector<Pair>) -> bool {
        if map.keys().any(|k| self.unknowns.index_of(k).is_none()) {
            return false;
        }
        let v = self.unknowns.dense(map, self.field);
        self.constraints.apply(&v).iter().all(Scalar::is_zero)
    }

    /// Dimension of the span of `maps`.
    pub fn rank_of(&self, maps: &[SparseVector<Pair>]) -> usize {
        let rows: Vec<Vec<Scalar>> = maps.iter().map(|m| self.unknowns.dense(m, self.field)).collect();
        RowSpace::spanned_by(self.field, self.unknowns.len(), &rows).dim()
    }
}
