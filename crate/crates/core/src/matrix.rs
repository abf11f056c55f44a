//! Small dense square matrices (row-major) and a cyclic Jacobi eigensolver
//! for real symmetric matrices. Everything in this crate is at most 20×20.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Matrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Builds a matrix from row-major data; `data.len()` must be a square.
    pub fn from_row_major(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Numeric("row-major data does not match dimension"));
        }
        Ok(Matrix { dim, data })
    }

    pub fn from_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Matrix { dim: N, data }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let mut t = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// `S·M·Sᵀ`.
    pub fn congruence(&self, s: &Matrix) -> Matrix {
        &(s * self) * &s.transpose()
    }

    /// Principal submatrix on the given row/column indices, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Matrix {
        let k = indices.len();
        let mut m = Matrix::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    /// Largest `|m_ij − m_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    /// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
    ///
    /// Returns the eigenvalues (unsorted) and the matrix whose columns are
    /// the matching orthonormal eigenvectors. Only the upper triangle is
    /// trusted to be symmetric with the lower one.
    pub fn symmetric_eigen(&self) -> Result<(Vec<f64>, Matrix)> {
        let n = self.dim;
        let mut a = self.clone();
        let mut v = Matrix::identity(n);
        if n <= 1 {
            return Ok((a.data.clone(), v));
        }

        let scale = a.max_abs();
        if scale == 0.0 {
            return Ok((vec![0.0; n], v));
        }
        if !scale.is_finite() {
            return Err(Error::Numeric("non-finite matrix entry"));
        }

        for _sweep in 0..64 {
            let mut rotated = false;
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    // Negligible relative to the diagonal (or to the whole
                    // matrix, while diagonals are still zero).
                    let diag = libm::sqrt((a[(p, p)] * a[(q, q)]).abs());
                    if apq.abs() <= 0.5 * f64::EPSILON * diag || apq.abs() <= 1e-18 * scale {
                        continue;
                    }
                    rotated = true;
                    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                    let t = if theta.is_finite() {
                        let sign = if theta < 0.0 { -1.0 } else { 1.0 };
                        sign / (theta.abs() + libm::sqrt(theta * theta + 1.0))
                    } else {
                        0.0
                    };
                    let c = 1.0 / libm::sqrt(t * t + 1.0);
                    let s = t * c;

                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = c * apk - s * aqk;
                        a[(q, k)] = s * apk + c * aqk;
                    }
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;

                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
            if !rotated {
                let values = (0..n).map(|i| a[(i, i)]).collect();
                return Ok((values, v));
            }
        }
        Err(Error::Numeric("Jacobi eigensolver did not converge"))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_recovers_known_spectrum() {
        let m = Matrix::from_rows([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 5.0]]);
        let (mut vals, vecs) = m.symmetric_eigen().unwrap();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 3.0).abs() < 1e-14);
        assert!((vals[2] - 5.0).abs() < 1e-14);

        // V·diag·Vᵀ reconstructs the input.
        let (vals, _) = m.symmetric_eigen().unwrap();
        let rebuilt = Matrix::diagonal(&vals).congruence(&vecs);
        assert!(rebuilt.max_abs_diff(&m) < 1e-14);
    }

    #[test]
    fn principal_submatrix_keeps_order() {
        let m = Matrix::from_rows([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]);
        let s = m.principal_submatrix(&[2, 0]);
        assert_eq!(s.as_slice(), &[9.0, 7.0, 3.0, 1.0]);
    }

    #[test]
    fn rejects_bad_row_major_length() {
        assert!(Matrix::from_row_major(2, vec![1.0; 3]).is_err());
    }
}
