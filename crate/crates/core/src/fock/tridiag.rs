//! `exp(−iT)·e₀` for a real symmetric tridiagonal `T`.
//!
//! Implicit QL with Wilkinson shifts diagonalises `T = Z Λ Zᵀ` as a product
//! of Givens rotations `Z = R₁ R₂ ⋯ R_N`. Only the rotation sequence is
//! kept: the first row of `Z` is accumulated as the rotations are generated,
//! and `Z w` is formed afterwards by replaying them in reverse. Memory is
//! `O(N)` rotations instead of a dense `n × n` eigenvector matrix.

use num_complex::Complex64;

/// Rotation acting on coordinates `(i, i+1)`.
#[derive(Clone, Copy, Debug)]
struct Rotation {
    i: u32,
    c: f64,
    s: f64,
}

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Failure of the QL iteration to converge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoConvergence;

/// Evolve `e₀` under `exp(−iT)` with `T = tridiag(off, diag, off)`.
/// `diag.len() == off.len() + 1`.
pub fn expm_i_tridiag_e0(diag: &[f64], off: &[f64]) -> Result<Vec<Complex64>, NoConvergence> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n.max(1));
    if n == 0 {
        return Ok(vec![]);
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut first_row = vec![0.0; n];
    first_row[0] = 1.0;
    let mut log: Vec<Rotation> = Vec::new();

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = (g * g + 1.0).sqrt();
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = (f * f + g * g).sqrt();
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let (zi, zj) = (first_row[i], first_row[i + 1]);
                first_row[i + 1] = s * zi + c * zj;
                first_row[i] = c * zi - s * zj;
                log.push(Rotation { i: i as u32, c, s });
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // w = e^{−iΛ} Zᵀ e₀, then u = Z w = R₁(R₂(⋯(R_N w))).
    let mut u: Vec<Complex64> = d
        .iter()
        .zip(&first_row)
        .map(|(&lambda, &z0)| Complex64::from_polar(1.0, -lambda) * z0)
        .collect();
    for rot in log.iter().rev() {
        let i = rot.i as usize;
        let (a, b) = (u[i], u[i + 1]);
        u[i] = a * rot.c + b * rot.s;
        u[i + 1] = b * rot.c - a * rot.s;
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{DMatrix, DVector, SymmetricEigen};

    fn dense_reference(diag: &[f64], off: &[f64]) -> Vec<Complex64> {
        let n = diag.len();
        let t = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                diag[i]
            } else if i + 1 == j {
                off[i]
            } else if j + 1 == i {
                off[j]
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(t);
        let q = eig.eigenvectors;
        let w: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(1.0, -eig.eigenvalues[k]) * q[(0, k)])
            .collect();
        let w = DVector::from_vec(w);
        let qc = q.map(|x| Complex64::new(x, 0.0));
        (qc * w).iter().copied().collect()
    }

    #[test]
    fn two_level_rotation() {
        let u = expm_i_tridiag_e0(&[0.0, 0.0], &[0.3]).unwrap();
        assert!((u[0] - Complex64::new(0.3f64.cos(), 0.0)).norm() < 1e-15);
        assert!((u[1] - Complex64::new(0.0, -0.3f64.sin())).norm() < 1e-15);
    }

    #[test]
    fn one_by_one() {
        assert_eq!(expm_i_tridiag_e0(&[0.0], &[]).unwrap(), vec![Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn matches_dense_eigensolver() {
        for n in [3usize, 7, 20, 64] {
            let diag: Vec<f64> = (0..n).map(|k| ((k * 7 % 5) as f64 - 2.0) * 0.3).collect();
            let off: Vec<f64> = (0..n - 1).map(|k| 0.2 + 0.05 * ((k * 3 % 4) as f64)).collect();
            let got = expm_i_tridiag_e0(&diag, &off).unwrap();
            let want = dense_reference(&diag, &off);
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).norm() < 1e-12, "n={n}: {g} vs {w}");
            }
        }
    }
}
