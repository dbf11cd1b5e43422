//! Small dense complex matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub type C64 = Complex64;

/// Row-major square or rectangular complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, C64::new(1.0, 0.0))
    }

    pub fn scalar(n: usize, value: C64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value;
        }
        m
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Panics if `rows` is ragged.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        CMatrix { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let rows: Vec<Vec<C64>> = rows.iter().map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&rows)
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

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<C64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Largest entry modulus. All residuals in this crate use this norm.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// `max |self - other|`, or infinity when shapes differ.
    pub fn distance(&self, other: &CMatrix) -> f64 {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return f64::INFINITY;
        }
        self.data.iter().zip(&other.data).fold(0.0, |acc, (a, b)| acc.max((a - b).norm()))
    }

    /// `‖U U* − I‖`
    pub fn unitarity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.matmul(&self.adjoint()).distance(&Self::identity(self.rows))
    }

    /// `max(‖J − J*‖, ‖J² − I‖)`
    pub fn signature_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let herm = self.distance(&self.adjoint());
        let inv = self.matmul(self).distance(&Self::identity(self.rows));
        herm.max(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Copies block `(bi, bj)` of size `m × m`.
    pub fn block(&self, bi: usize, bj: usize, m: usize) -> CMatrix {
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self[(bi * m + i, bj * m + j)];
            }
        }
        out
    }

    pub fn set_block(&mut self, bi: usize, bj: usize, block: &CMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(bi * block.rows + i, bj * block.cols + j)] = block[(i, j)];
            }
        }
    }

    /// Block-diagonal matrix from equally sized square blocks.
    pub fn block_diagonal(blocks: &[CMatrix]) -> CMatrix {
        let m = blocks.first().map_or(0, CMatrix::rows);
        let mut out = Self::zeros(m * blocks.len(), m * blocks.len());
        for (k, b) in blocks.iter().enumerate() {
            out.set_block(k, k, b);
        }
        out
    }

    /// Integer power; negative exponents use the adjoint (unitary inputs only).
    pub fn unitary_pow(&self, e: i64) -> CMatrix {
        let base = if e < 0 { self.adjoint() } else { self.clone() };
        let mut out = Self::identity(self.rows);
        let mut acc = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = out.matmul(&acc);
            }
            acc = acc.matmul(&acc);
            k >>= 1;
        }
        out
    }

    /// Orthonormalises the columns (modified Gram–Schmidt, two passes).
    /// Used to turn a generic matrix into a unitary one.
    pub fn orthonormalize_columns(&self) -> CMatrix {
        let mut q = self.clone();
        for j in 0..self.cols {
            for _ in 0..2 {
                for p in 0..j {
                    let dot: C64 = (0..self.rows).map(|i| q[(i, p)].conj() * q[(i, j)]).sum();
                    for i in 0..self.rows {
                        let v = q[(i, p)];
                        q[(i, j)] -= dot * v;
                    }
                }
            }
            let norm = (0..self.rows).map(|i| q[(i, j)].norm_sqr()).sum::<f64>().sqrt();
            for i in 0..self.rows {
                q[(i, j)] /= norm;
            }
        }
        q
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn adjoint_and_product() {
        let a = CMatrix::from_rows(&[vec![c(1.0, 1.0), c(0.0, 2.0)], vec![c(3.0, 0.0), c(0.0, -1.0)]]);
        let aa = a.matmul(&a.adjoint());
        assert_eq!(aa[(0, 0)], c(6.0, 0.0));
        assert_eq!(aa[(0, 1)], c(1.0, 3.0));
        assert_eq!(aa.distance(&aa.adjoint()), 0.0);
    }

    #[test]
    fn gram_schmidt_gives_unitary() {
        let a = CMatrix::from_rows(&[
            vec![c(1.0, 0.3), c(-0.2, 2.0), c(0.5, 0.5)],
            vec![c(0.1, 0.0), c(1.0, -1.0), c(2.0, 0.0)],
            vec![c(0.0, 1.0), c(0.7, 0.2), c(-1.0, 0.4)],
        ]);
        assert!(a.orthonormalize_columns().unitarity_residual() < 1e-14);
    }

    #[test]
    fn signature_residuals() {
        let j = CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(j.signature_residual(), 0.0);
        let not = CMatrix::from_real_rows(&[&[2.0, 0.0], &[0.0, 1.0]]);
        assert_eq!(not.signature_residual(), 3.0);
    }

    #[test]
    fn blocks_and_powers() {
        let u = CMatrix::diagonal(&[c(0.0, 1.0), c(1.0, 0.0)]);
        assert!(u.unitary_pow(4).distance(&CMatrix::identity(2)) < 1e-15);
        assert!(u.unitary_pow(-1).distance(&u.adjoint()) < 1e-15);
        let big = CMatrix::block_diagonal(&[u.clone(), CMatrix::identity(2)]);
        assert_eq!(big.block(0, 0, 2), u);
        assert!(big.block(0, 1, 2).is_zero());
        assert_eq!(big.trace(), c(3.0, 1.0));
    }
}
