//! Dense symmetric eigensolver (cyclic Jacobi) and a small LU solver.

use crate::error::{Error, Result};

/// Convergence threshold on `‖offdiag(A)‖_F / ‖A‖_F`.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Row-major dense symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
        self.data[j * self.n + i] = x;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }
}

/// Eigenvalues (unsorted, diagonal order) and optionally the eigenvector
/// matrix, column `k` belonging to eigenvalue `k`, row-major.
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<f64>>,
}

/// Cyclic Jacobi: sweep all `(p, q)` pairs with plane rotations that
/// annihilate `a_pq` until the off-diagonal mass is negligible.
pub fn jacobi(matrix: &SymmetricMatrix, want_vectors: bool) -> Result<Eigen> {
    let n = matrix.n;
    let mut a = matrix.data.clone();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let scale = matrix.frobenius();
    let threshold = JACOBI_TOLERANCE * scale;
    let mut off = matrix.off_diagonal_norm();
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        // early sweeps only rotate the larger entries
        let skip_below = if sweeps < 4 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= skip_below {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                if sweeps > 4 && 100.0 * apq.abs() + app.abs() == app.abs() && 100.0 * apq.abs() + aqq.abs() == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
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
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s += a[i * n + j] * a[i * n + j];
                    }
                }
            }
            s.sqrt()
        };
    }
    Ok(Eigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
    })
}

/// Solves `(M − shift·I) y = b` by Gaussian elimination with partial
/// pivoting. Zero pivots are nudged to a tiny value, which is what
/// inverse iteration wants near an eigenvalue.
pub fn shifted_solve(matrix: &SymmetricMatrix, shift: f64, b: &[f64]) -> Vec<f64> {
    let n = matrix.n;
    let mut m = matrix.data.clone();
    for i in 0..n {
        m[i * n + i] -= shift;
    }
    let mut x = b.to_vec();
    let tiny = f64::EPSILON * matrix.frobenius().max(1.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i * n + col].abs().total_cmp(&m[j * n + col].abs()))
            .unwrap();
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            x.swap(col, pivot);
        }
        if m[col * n + col].abs() < tiny {
            m[col * n + col] = tiny;
        }
        let d = m[col * n + col];
        for r in col + 1..n {
            let f = m[r * n + col] / d;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[r * n + k] -= f * m[col * n + k];
            }
            x[r] -= f * x[col];
        }
    }
    for col in (0..n).rev() {
        let mut s = x[col];
        for k in col + 1..n {
            s -= m[col * n + k] * x[k];
        }
        x[col] = s / m[col * n + col];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_needs_no_sweep() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 0, 3.0);
        m.set(1, 1, -1.0);
        let e = jacobi(&m, true).unwrap();
        assert_eq!(e.values, vec![3.0, -1.0, 0.0]);
    }

    #[test]
    fn two_by_two() {
        let mut m = SymmetricMatrix::zeros(2);
        m.set(0, 0, 2.0);
        m.set(1, 1, 2.0);
        m.set(0, 1, 1.0);
        let e = jacobi(&m, true).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenpairs_reconstruct() {
        let n = 6;
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, ((i * 7 + j * 3) % 5) as f64 - 2.0);
            }
        }
        let e = jacobi(&m, true).unwrap();
        let v = e.vectors.unwrap();
        for k in 0..n {
            let col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
            let av = m.mul_vec(&col);
            for i in 0..n {
                assert!((av[i] - e.values[k] * col[i]).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn shifted_solve_matches_direct() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 0, 4.0);
        m.set(0, 1, 1.0);
        m.set(1, 1, 3.0);
        m.set(2, 2, 2.0);
        let x = shifted_solve(&m, 1.0, &[1.0, 2.0, 3.0]);
        // (M - I) x = b
        let mx = m.mul_vec(&x);
        for i in 0..3 {
            assert!((mx[i] - x[i] - [1.0, 2.0, 3.0][i]).abs() < 1e-12);
        }
    }
}
