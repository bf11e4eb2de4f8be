//! Floating-point eigenvalues of symmetric matrices by cyclic Jacobi
//! rotations, used for reporting next to the exact path.

use super::matrix::SquareMatrix;
use crate::{Error, Result};

/// Relative off-diagonal Frobenius tolerance at convergence.
pub const JACOBI_REL_TOL: f64 = 1e-10;
/// Sweep budget before giving up.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Sorted eigenvalues with multiplicity-cluster ids and the final residual.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues sorted ascending.
    pub values: Vec<f64>,
    /// Cluster id per eigenvalue; ids increase with the values and two
    /// eigenvalues share an id when their gap is within the cluster
    /// tolerance `1e-8 * max(1, ||M||_F)`.
    pub clusters: Vec<usize>,
    /// Relative off-diagonal Frobenius norm at exit.
    pub residual: f64,
    /// `vectors[k]` is a unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

impl Spectrum {
    /// Sign counts `(plus, minus, zero)` with the given zero threshold.
    pub fn sign_counts(&self, zero_threshold: f64) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for &x in &self.values {
            if x > zero_threshold {
                counts.0 += 1;
            } else if x < -zero_threshold {
                counts.1 += 1;
            } else {
                counts.2 += 1;
            }
        }
        counts
    }
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigen(m: &SquareMatrix<f64>) -> Result<Spectrum> {
    let n = m.n();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let frob: f64 = a
        .iter()
        .flatten()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    let tol = JACOBI_REL_TOL * frob;

    let mut residual = if frob > 0.0 {
        off_diagonal_norm(&a) / frob
    } else {
        0.0
    };
    let mut converged = frob == 0.0 || off_diagonal_norm(&a) <= tol;
    if !converged {
        for _sweep in 0..JACOBI_MAX_SWEEPS {
            for p in 0..n.saturating_sub(1) {
                for q in (p + 1)..n {
                    let apq = a[p][q];
                    if apq == 0.0 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                    let t = if theta == 0.0 {
                        1.0
                    } else {
                        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                    };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        if k != p && k != q {
                            let akp = a[k][p];
                            let akq = a[k][q];
                            a[k][p] = c * akp - s * akq;
                            a[p][k] = a[k][p];
                            a[k][q] = s * akp + c * akq;
                            a[q][k] = a[k][q];
                        }
                    }
                    let app = a[p][p];
                    let aqq = a[q][q];
                    a[p][p] = app - t * apq;
                    a[q][q] = aqq + t * apq;
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    for row in v.iter_mut() {
                        let vkp = row[p];
                        let vkq = row[q];
                        row[p] = c * vkp - s * vkq;
                        row[q] = s * vkp + c * vkq;
                    }
                }
            }
            let off = off_diagonal_norm(&a);
            residual = off / frob;
            if off <= tol {
                converged = true;
                break;
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            residual,
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row][col]).collect())
        .collect();

    let cluster_tol = 1e-8 * frob.max(1.0);
    let mut clusters = Vec::with_capacity(n);
    let mut id = 0;
    for k in 0..n {
        if k > 0 && (values[k] - values[k - 1]).abs() > cluster_tol {
            id += 1;
        }
        clusters.push(id);
    }

    Ok(Spectrum {
        values,
        clusters,
        residual,
        vectors,
    })
}
