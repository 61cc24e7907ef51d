//! Invariant sectors of the trilinear Hamiltonian.
//!
//! `H = χ(a†b†c + abc†)` conserves `n_a − n_b` and `n_a + n_c`. Starting
//! from `|0,0,m⟩` the state stays in `span{|k,k,m−k⟩ : 0 ≤ k ≤ m}`, where
//! `H` is tridiagonal with zero diagonal and `h_k = χ(k+1)√(m−k)`.

use num_complex::Complex64;

use super::tridiag::expm_i_tridiag_e0;
use crate::error::OracleError;

/// Amplitude allowed on the last two retained basis states.
pub const BOUNDARY_TOL: f64 = 1e-30;

/// Off-diagonal elements `h_0 … h_{dim−2}` of sector `m`, truncated to the
/// first `dim` basis states.
pub fn build_sector(m: usize, chi: f64, dim: usize) -> Vec<f64> {
    let dim = dim.min(m + 1);
    (0..dim.saturating_sub(1)).map(|k| chi * (k + 1) as f64 * ((m - k) as f64).sqrt()).collect()
}

/// `exp(−iH)|0,0,m⟩`, as amplitudes `u_k` on `|k,k,m−k⟩`.
#[derive(Clone, Debug)]
pub struct SectorState {
    pub m: usize,
    pub amplitudes: Vec<Complex64>,
}

impl SectorState {
    /// `u_k`, zero beyond the truncation.
    pub fn amp(&self, k: usize) -> Complex64 {
        self.amplitudes.get(k).copied().unwrap_or_default()
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }
}

/// Initial truncation guess from the undepleted thermal distribution at
/// the sector's own gain `χ√m`.
fn initial_dim(m: usize, chi: f64) -> usize {
    let t2 = (chi * (m as f64).sqrt()).tanh().powi(2);
    let guess = if t2 <= 0.0 {
        8
    } else if t2 >= 1.0 {
        m + 1
    } else {
        (BOUNDARY_TOL.ln() / t2.ln()).ceil() as usize + 16
    };
    guess.max(8).min(m + 1)
}

/// Evolve sector `m`, doubling the truncation until the boundary amplitude
/// is negligible or the full sector is used.
pub fn evolve_sector(m: usize, chi: f64) -> Result<SectorState, OracleError> {
    let mut dim = initial_dim(m, chi);
    loop {
        let off = build_sector(m, chi, dim);
        let diag = vec![0.0; off.len() + 1];
        let u = expm_i_tridiag_e0(&diag, &off).map_err(|_| OracleError::Eigensolver { sector: m })?;
        let n = u.len();
        let boundary: f64 = u[n.saturating_sub(2)..].iter().map(|z| z.norm_sqr()).sum();
        if n == m + 1 || boundary < BOUNDARY_TOL {
            return Ok(SectorState { m, amplitudes: u });
        }
        dim = (2 * dim).min(m + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sector_one() {
        // |0,0,1⟩ ↔ |1,1,0⟩ with coupling χ.
        let chi = 0.3;
        let s = evolve_sector(1, chi).unwrap();
        assert!((s.amp(0) - Complex64::new(chi.cos(), 0.0)).norm() < 1e-15);
        assert!((s.amp(1) - Complex64::new(0.0, -chi.sin())).norm() < 1e-15);
    }

    #[test]
    fn truncation_is_unitary_and_converged() {
        let s = evolve_sector(900, 0.05).unwrap();
        assert!(s.dim() < 901);
        let norm: f64 = s.amplitudes.iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        let full = {
            let off = build_sector(900, 0.05, 901);
            expm_i_tridiag_e0(&vec![0.0; 901], &off).unwrap()
        };
        for (k, f) in full.iter().enumerate().take(s.dim()) {
            assert!((s.amp(k) - f).norm() < 1e-12);
        }
    }
}
