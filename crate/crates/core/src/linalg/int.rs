use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use crate::scalar::{Poly, Rational};

/// `(g, x, y)` with `x·a + y·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (x0, x1) = (x1.clone(), &x0 - &q * &x1);
        (y0, y1) = (y1.clone(), &y0 - &q * &y1);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum();
                out.set(i, j, s);
            }
        }
        out
    }

    /// Determinant by cofactor-free fraction-free elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.data.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    fn combine_cols(&mut self, p: usize, q: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        // (col_p, col_q) ← (a·col_p + b·col_q, c·col_p + d·col_q)
        for i in 0..self.rows {
            let (x, y) = (self.get(i, p).clone(), self.get(i, q).clone());
            self.set(i, p, a * &x + b * &y);
            self.set(i, q, c * &x + d * &y);
        }
    }

    fn axpy_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, target) - factor * self.get(i, source);
            self.set(i, target, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Column Hermite normal form: returns `(H, U)` with `A·U = H`, `U` unimodular, `H` lower
/// echelon with positive pivots, entries left of each pivot reduced into `[0, pivot)`, and
/// all zero columns on the right (these columns of `U` span the integer kernel).
pub fn column_hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.cols);
    let mut pc = 0;
    for r in 0..h.rows {
        if pc == h.cols {
            break;
        }
        for j in pc + 1..h.cols {
            if h.get(r, j).is_zero() {
                continue;
            }
            let (x, y) = (h.get(r, pc).clone(), h.get(r, j).clone());
            let (g, s, t) = ext_gcd(&x, &y);
            let (c, d) = (-(&y / &g), &x / &g);
            h.combine_cols(pc, j, &s, &t, &c, &d);
            u.combine_cols(pc, j, &s, &t, &c, &d);
        }
        if h.get(r, pc).is_zero() {
            continue;
        }
        if h.get(r, pc).is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let pivot = h.get(r, pc).clone();
        for c in 0..pc {
            let q = h.get(r, c).div_floor(&pivot);
            if !q.is_zero() {
                h.axpy_col(c, pc, &q);
                u.axpy_col(c, pc, &q);
            }
        }
        pc += 1;
    }
    (h, u)
}

/// Integer matrix `R` with `{a ∈ ℤ^k : M·a = 0} = {a ∈ ℤ^k : R·a = 0}`.
///
/// Each row of `M` is brought to a common polynomial denominator and split into its
/// τ-power coefficients; since τ is transcendental, an integer relation holds iff it
/// holds coefficientwise.
pub fn integer_relations(m: &Mat) -> IntMatrix {
    let k = m.cols();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for row in m.to_rows() {
        let common = row.iter().fold(Poly::one(), |acc, x| {
            let den = x.denominator();
            let g = Poly::gcd(&acc, den);
            acc.mul(&den.divrem(&g).0)
        });
        let numerators: Vec<Poly> = row
            .iter()
            .map(|x| x.numerator().mul(&common.divrem(x.denominator()).0))
            .collect();
        let degree = numerators.iter().filter_map(Poly::degree).max();
        let Some(degree) = degree else { continue };
        for p in 0..=degree {
            let coeffs: Vec<Rational> = numerators
                .iter()
                .map(|n| n.coeffs().get(p).cloned().unwrap_or_else(Rational::zero))
                .collect();
            if coeffs.iter().all(Zero::is_zero) {
                continue;
            }
            let lcm = coeffs
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            out.push(
                coeffs
                    .iter()
                    .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            );
        }
    }
    if out.is_empty() {
        return IntMatrix::zeros(0, k);
    }
    IntMatrix::from_rows(out)
}

/// A basis of the integer kernel of `M` together with a complement: `(U, r)` where `U` is
/// unimodular, the first `r` columns span a complement and the rest span the kernel.
pub fn integer_kernel(m: &Mat) -> (IntMatrix, usize) {
    let r = integer_relations(m);
    let k = m.cols();
    if r.rows() == 0 {
        return (IntMatrix::identity(k), 0);
    }
    let (h, u) = column_hnf(&r);
    let rank = (0..k)
        .filter(|&j| h.col(j).iter().any(|x| !x.is_zero()))
        .count();
    (u, rank)
}
