//! Finite formal sums of basis keys with exact coefficients.

use crate::field::{Field, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// A vector stored as its nonzero terms, ordered by key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for SparseVector<K> {
    fn default() -> Self {
        SparseVector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(key: K, field: Field) -> Self {
        let mut v = Self::zero();
        v.add_term(key, field.one());
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVector<K>, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn plus(&self, other: &SparseVector<K>) -> SparseVector<K> {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &SparseVector<K>) -> SparseVector<K> {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, factor: &Scalar) -> SparseVector<K> {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn negated(&self) -> SparseVector<K> {
        SparseVector {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn coefficient(&self, key: &K, field: Field) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> SparseVector<L> {
        SparseVector::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Applies a linear map given on basis keys.
    pub fn apply<L: Ord + Clone>(&self, f: impl Fn(&K) -> SparseVector<L>) -> SparseVector<L> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVector<K> {
    fn from_iter<T: IntoIterator<Item = (K, Scalar)>>(iter: T) -> Self {
        SparseVector::from_terms(iter)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for SparseVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{mag}{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let f = Field::Rational;
        let mut v = SparseVector::unit("x", f);
        v.add_term("y", f.from_i64(2));
        v.add_term("x", f.from_i64(-1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&"y"), Some(&f.from_i64(2)));
        assert!(v.minus(&v).is_zero());
    }

    #[test]
    fn char_two_doubling_vanishes() {
        let f = Field::Prime(2);
        let v = SparseVector::unit(1u8, f);
        assert!(v.plus(&v).is_zero());
    }

    #[test]
    fn display_signs() {
        let f = Field::Rational;
        let v = SparseVector::from_terms([("a", f.from_i64(-2)), ("b", f.from_i64(1))]);
        assert_eq!(v.to_string(), "-2a + b");
    }
}
