use std::fmt;

use nalgebra::DMatrix;

use crate::scalar::TauScalar;

pub type Vector = Vec<TauScalar>;

pub fn vzero(n: usize) -> Vector {
    vec![TauScalar::zero(); n]
}

pub fn vadd(a: &[TauScalar], b: &[TauScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[TauScalar], b: &[TauScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vscale(c: &TauScalar, a: &[TauScalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// Dense row-major matrix over ℚ(τ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<TauScalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![TauScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                TauScalar::one()
            } else {
                TauScalar::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> TauScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors of length `height`.
    pub fn from_cols(height: usize, cols: &[Vector]) -> Self {
        Self::from_fn(height, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TauScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: TauScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn to_cols(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[TauScalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !v[j].is_zero() && !self.get(i, j).is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: vadd(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: vsub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &TauScalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: vscale(c, &self.data),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(TauScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vcat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hcat(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    pub fn det(&self) -> TauScalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = TauScalar::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return TauScalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let x = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, x);
                }
            }
        }
        det
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[TauScalar]) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let aug = self.hcat(&Self::from_cols(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vzero(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vzero(self.cols);
                x[f] = TauScalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(i, f);
                }
                x
            })
            .collect()
    }

    /// The pivot columns of `self`, a basis of its column space.
    pub fn column_space_basis(&self) -> Vec<Vector> {
        self.rref().1.into_iter().map(|c| self.col(c)).collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_f64())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&["1", "tau"], &["2", "3"]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.det(), "3-2*tau".parse().unwrap());
        assert!(m(&[&["1", "tau"], &["2", "2*tau"]]).inverse().is_none());
    }

    #[test]
    fn nullspace_and_solve() {
        let a = m(&[&["1", "2", "tau"], &["0", "1", "1"]]);
        for x in a.nullspace() {
            assert!(a.mul_vec(&x).iter().all(TauScalar::is_zero));
        }
        assert_eq!(a.nullspace().len(), 1);
        let b: Vector = vec!["1".parse().unwrap(), "tau".parse().unwrap()];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let singular = m(&[&["1", "1"], &["1", "1"]]);
        assert!(singular
            .solve(&[TauScalar::one(), TauScalar::zero()])
            .is_none());
    }
}
