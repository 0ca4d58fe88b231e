//! Exact row reduction over the scalar field.
//!
//! Rows are kept in echelon form keyed by pivot, where the pivot of a row is
//! the smallest key in its support and carries coefficient one. Reducing a
//! vector is a single pass over the rows in pivot order.

use std::collections::BTreeMap;

use super::sparse::LinComb;
use crate::scalars::CycloScalar;

#[derive(Clone, Debug)]
pub struct Subspace<K: Ord + Clone> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Subspace<K> {
    fn default() -> Self {
        Subspace { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Subspace<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn span<'a>(vectors: impl IntoIterator<Item = &'a LinComb<K>>) -> Self
    where
        K: 'a,
    {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    /// Remainder of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                v.add_scaled(row, &c.neg());
            }
        }
        v
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: LinComb<K>) -> bool {
        let r = self.reduce(&v);
        match r.leading() {
            None => false,
            Some((p, c)) => {
                let p = p.clone();
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.rows.insert(p, r.scale(&inv));
                true
            }
        }
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values()
    }
}

/// Kernel of the linear map sending the `i`-th coordinate vector to
/// `columns[i]`, as combinations of column positions.
pub fn kernel<K: Ord + Clone>(columns: &[LinComb<K>]) -> Vec<LinComb<usize>> {
    // each row carries its image together with the combination producing it
    let mut rows: BTreeMap<K, (LinComb<K>, LinComb<usize>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        let mut img = col.clone();
        let mut combo = LinComb::term(i, CycloScalar::one());
        for (p, (row, rc)) in &rows {
            if let Some(c) = img.get(p).cloned() {
                let c = c.neg();
                img.add_scaled(row, &c);
                combo.add_scaled(rc, &c);
            }
        }
        match img.leading() {
            None => out.push(combo),
            Some((p, c)) => {
                let p = p.clone();
                let inv = c.inv().expect("nonzero pivot");
                rows.insert(p, (img.scale(&inv), combo.scale(&inv)));
            }
        }
    }
    out
}

/// Rank of a set of vectors.
pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    Subspace::span(vectors.iter()).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BasisIndex, Element};
    use crate::scalars::root_of_unity;

    fn y() -> Element {
        Element::basis(BasisIndex::yx(1, 0))
    }
    fn x() -> Element {
        Element::basis(BasisIndex::yx(0, 1))
    }

    #[test]
    fn empty_span_has_dimension_zero() {
        assert_eq!(Subspace::<BasisIndex>::span([]).dim(), 0);
    }

    #[test]
    fn membership_is_linear() {
        let s = Subspace::span([&y(), &x()]);
        let v = y().scale(&CycloScalar::from_int(2)).sub(&x().scale(&CycloScalar::from_int(3)));
        assert!(s.contains(&v));
        let other = Element::basis(BasisIndex::yx(2, 0));
        assert!(!s.contains(&other));
    }

    #[test]
    fn proportional_vectors() {
        let q = root_of_unity(5, 2);
        let s = Subspace::span([&y(), &y().scale(&q)]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let cols = vec![y(), x(), y().add(&x())];
        let k = kernel(&cols);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let mut total = Element::zero();
        for (i, c) in v.iter() {
            total.add_scaled(&cols[*i], c);
        }
        assert!(total.is_zero());
    }
}
