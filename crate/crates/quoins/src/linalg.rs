//! Small dense complex matrices and a Jacobi eigensolver.
//!
//! Everything quantum in this crate lives in dimension 2 or 4, so the
//! matrix type is a plain dense buffer and the eigensolver is cyclic
//! Jacobi on the real-symmetric embedding of a Hermitian matrix —
//! robust at these sizes and free of external solver dependencies.

use num_complex::Complex64;

use crate::{Error, Result};

/// Complex scalar used for amplitudes and matrix entries.
pub type ComplexScalar = Complex64;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            data: vec![Complex64::new(0.0, 0.0); n_rows * n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from rows; panics on a ragged table (caller bug).
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "empty matrix");
        let n_cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == n_cols),
            "ragged matrix rows"
        );
        Self {
            n_rows: rows.len(),
            n_cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// Real matrix convenience constructor.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Outer product |v><v| of a (not necessarily normalized) ket.
    pub fn from_outer(v: &[Complex64]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, v[i] * v[j].conj());
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n_cols + j] = v;
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n_cols, other.n_rows, "matrix product shape mismatch");
        let mut out = CMatrix::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.n_cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(
            (self.n_rows, self.n_cols),
            (other.n_rows, other.n_cols),
            "matrix sum shape mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= factor;
        }
        out
    }

    pub fn scale_re(&self, factor: f64) -> CMatrix {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.n_rows, self.n_cols, "trace of non-square matrix");
        (0..self.n_rows).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker product with the left factor owning the major index:
    /// (A (x) B)[i*p + k, j*q + l] = A[i,j] B[k,l] for B of shape p x q.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (p, q) = (other.n_rows, other.n_cols);
        let mut out = CMatrix::zeros(self.n_rows * p, self.n_cols * q);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                let a = self.get(i, j);
                for k in 0..p {
                    for l in 0..q {
                        out.set(i * p + k, j * q + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Largest entry-wise absolute deviation from Hermitian symmetry.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(
            (self.n_rows, self.n_cols),
            (other.n_rows, other.n_cols),
            "matrix comparison shape mismatch"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// The Pauli matrices and the 2x2 identity.
pub fn pauli_x() -> CMatrix {
    CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_rows(&[
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, -1.0)],
        vec![Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)],
    ])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]])
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The matrix must be Hermitian within 1e-8 (max entry deviation); the
/// computation symmetrizes the residual drift away and runs cyclic Jacobi
/// rotations on the real 2n x 2n embedding [[A, -B], [B, A]] of H = A + iB,
/// whose spectrum is that of H with every eigenvalue doubled.
pub fn hermitian_eigenvalues(h: &CMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigenpairs(h)?.0)
}

/// Eigenvalues (ascending) and matching normalized eigenvectors.
pub fn hermitian_eigenpairs(h: &CMatrix) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    if h.n_rows() != h.n_cols() {
        return Err(Error::DimensionMismatch {
            context: format!("eigenvalues of a {}x{} matrix", h.n_rows(), h.n_cols()),
        });
    }
    let deviation = h.hermiticity_deviation();
    if deviation > 1e-8 {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.n_rows();
    let m = 2 * n;
    // Embed H = A + iB as [[A, -B], [B, A]], symmetrizing each block so the
    // embedded matrix is exactly symmetric despite input drift.
    let mut a = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let sym = 0.5 * (h.get(i, j) + h.get(j, i).conj());
            a[i * m + j] = sym.re;
            a[(i + n) * m + (j + n)] = sym.re;
            a[i * m + (j + n)] = -sym.im;
            a[(i + n) * m + j] = sym.im;
        }
    }

    let (eigs, vecs) = jacobi_symmetric(&mut a, m);
    // Eigenvalues come doubled; each complex eigenvector (x + iy) appears
    // as both (x; y) and (-y; x). Take every second sorted entry.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| eigs[i].total_cmp(&eigs[j]));
    let mut values = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for pair in 0..n {
        let idx = order[2 * pair];
        values.push(eigs[idx]);
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(Complex64::new(vecs[i * m + idx], vecs[(i + n) * m + idx]));
        }
        let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            v.iter_mut().for_each(|c| *c /= norm);
        }
        vectors.push(v);
    }
    Ok((values, vectors))
}

/// Cyclic Jacobi for a real symmetric matrix stored row-major in `a`.
/// Returns (diagonal, accumulated rotation matrix with eigenvector columns).
/// Sweeps until the off-diagonal Frobenius norm drops to 1e-12, capped at
/// 100 sweeps (quadratic convergence makes the cap generous at n <= 8).
fn jacobi_symmetric(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i * n + j] * a[i * n + j];
                }
            }
        }
        if off.sqrt() <= 1e-12 {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    (diag, v)
}
