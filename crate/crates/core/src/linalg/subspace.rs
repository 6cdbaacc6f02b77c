use super::mat::{Mat, Vector};
use crate::scalar::TauScalar;

/// A subspace of ℚ(τ)^n, stored by the nonzero rows of its reduced echelon basis so that
/// equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &Mat::identity(ambient).to_rows())
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Mat::from_rows(vectors.to_vec()).rref();
        Self {
            ambient,
            basis: (0..pivots.len()).map(|i| r.row(i)).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[TauScalar]) -> bool {
        if v.iter().all(TauScalar::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Mat::from_rows(rows).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        let a = Mat::from_cols(self.ambient, &self.basis);
        let b = Mat::from_cols(self.ambient, &other.basis);
        let stacked = a.hcat(&b.scale(&-TauScalar::one()));
        let k = self.dim();
        let vectors: Vec<Vector> = stacked
            .nullspace()
            .into_iter()
            .map(|x| a.mul_vec(&x[..k]))
            .collect();
        Self::span(self.ambient, &vectors)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Mat) -> Self {
        let vectors: Vec<Vector> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.rows(), &vectors)
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[&str]) -> Vector {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, &[v(&["1", "1", "0"]), v(&["0", "1", "0"])]);
        let b = Subspace::span(3, &[v(&["2", "0", "0"]), v(&["0", "tau", "0"])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&["1", "0", "0"]), v(&["0", "1", "0"])]);
        let b = Subspace::span(3, &[v(&["0", "1", "0"]), v(&["0", "0", "1"])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&["0", "1", "0"])]));
        let line = Subspace::span(3, &[v(&["1", "tau", "0"])]);
        assert!(line.is_subspace_of(&a));
        assert!(line.intersect(&b).is_zero());
    }
}
