//! Small dense complex linear algebra: a cyclic Jacobi eigensolver for
//! Hermitian matrices and a few helpers shared by the band models.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

pub type CMatrix = DMatrix<Complex64>;

/// Largest matrix accepted by [`eig_hermitian`].
pub const MAX_EIG_SIZE: usize = 64;
/// Relative tolerance for the Hermiticity precondition.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Sweeps stop once the off-diagonal Frobenius norm falls below this
/// fraction of the full norm.
pub const JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EigError {
    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix size {0} exceeds {MAX_EIG_SIZE}")]
    TooLarge(usize),
    #[error("Jacobi sweeps did not converge (off-diagonal norm {off:e})")]
    NoConvergence { off: f64 },
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl EigDecomposition {
    /// `V Λ V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.eigenvalues.len();
        let lambda = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(self.eigenvalues[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        &self.eigenvectors * lambda * self.eigenvectors.adjoint()
    }

    /// Columns for the given band indices.
    pub fn columns(&self, bands: &[usize]) -> CMatrix {
        let n = self.eigenvectors.nrows();
        CMatrix::from_fn(n, bands.len(), |i, j| self.eigenvectors[(i, bands[j])])
    }
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry of `|M - M†|`.
pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Largest entry of `|A - B|`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Deterministic: fixed pivot order and a fixed eigenvector phase
/// convention (largest-modulus component real and positive).
pub fn eig_hermitian(h: &CMatrix) -> Result<EigDecomposition, EigError> {
    let n = h.nrows();
    if h.ncols() != n {
        return Err(EigError::NotSquare { rows: n, cols: h.ncols() });
    }
    if n > MAX_EIG_SIZE {
        return Err(EigError::TooLarge(n));
    }
    let norm = frobenius(h);
    let deviation = hermitian_deviation(h);
    if deviation > HERMITIAN_TOL * norm.max(1.0) {
        return Err(EigError::NotHermitian { deviation });
    }
    // symmetrize so rounding in the input cannot accumulate
    let mut a = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(h[(i, i)].re, 0.0)
        } else {
            (h[(i, j)] + h[(j, i)].conj()) * 0.5
        }
    });
    let mut v = CMatrix::identity(n, n);
    let scale = norm.max(f64::MIN_POSITIVE);

    let off_norm = |a: &CMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= JACOBI_TOL * scale {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(EigError::NoConvergence { off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G = diag(1, e^{-iα}) · [[c, s], [-s, c]]
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;
                // A <- A G
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                // A <- G† A
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    for c in 0..n {
        let mut best = 0;
        for r in 1..n {
            if eigenvectors[(r, c)].norm() > eigenvectors[(best, c)].norm() + 1e-12 {
                best = r;
            }
        }
        let z = eigenvectors[(best, c)];
        if z.norm() > 0.0 {
            let phase = z.conj() / z.norm();
            for r in 0..n {
                eigenvectors[(r, c)] *= phase;
            }
        }
    }
    Ok(EigDecomposition { eigenvalues, eigenvectors })
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli matrix `σ_i` for `i = 0..3` (`σ_0` is the identity).
pub fn pauli(i: usize) -> CMatrix {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let ii = c(0.0, 1.0);
    match i {
        0 => CMatrix::from_row_slice(2, 2, &[one, z, z, one]),
        1 => CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        2 => CMatrix::from_row_slice(2, 2, &[z, -ii, ii, z]),
        3 => CMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
        _ => panic!("Pauli index {i} out of range"),
    }
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Element-wise complex conjugate.
pub fn conj(m: &CMatrix) -> CMatrix {
    m.map(|z| z.conj())
}
