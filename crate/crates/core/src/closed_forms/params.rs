use serde::Serialize;

use crate::error::DomainError;

/// Above this value of the validity indicator results carry a warning.
pub const VALIDITY_WARNING: f64 = 0.1;

/// Pump amplitude `α` and coupling `χ`, both dimensionless.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModelParams {
    pub alpha: f64,
    pub chi: f64,
}

impl ModelParams {
    /// `χ = 0` is accepted and describes the non-interacting limit.
    pub fn new(alpha: f64, chi: f64) -> Result<Self, DomainError> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(DomainError::Params(format!("alpha must be finite and non-negative, got {alpha}")));
        }
        if !chi.is_finite() || !(0.0..1.0).contains(&chi) {
            return Err(DomainError::Params(format!("chi must lie in [0, 1), got {chi}")));
        }
        Ok(Self { alpha, chi })
    }

    /// Parameters at fixed `χ′`, with `α = χ′/χ`.
    pub fn from_chi_prime(chi_prime: f64, chi: f64) -> Result<Self, DomainError> {
        if chi <= 0.0 {
            return Err(DomainError::Params("chi must be positive to fix chi_prime".into()));
        }
        Self::new(chi_prime / chi, chi)
    }

    pub fn chi_prime(&self) -> f64 {
        self.alpha * self.chi
    }

    /// `v = χ² e^{4χ′} / (16 χ′²)`, the ratio of the neglected-order size to one.
    pub fn validity(&self) -> f64 {
        if self.chi == 0.0 {
            return 0.0;
        }
        let x = self.chi_prime();
        if x == 0.0 {
            return f64::INFINITY;
        }
        // Computed in log space so large χ′ does not overflow early.
        (2.0 * self.chi.ln() + 4.0 * x - 16f64.ln() - 2.0 * x.ln()).exp()
    }

    pub fn warning(&self) -> bool {
        self.validity() > VALIDITY_WARNING
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity_indicator() {
        let p = ModelParams::new(20.0, 0.025).unwrap();
        assert!((p.chi_prime() - 0.5).abs() < 1e-15);
        let expected = 0.025f64.powi(2) * 2f64.exp() / 4.0;
        assert!((p.validity() - expected).abs() < 1e-13 * expected);
        assert!(!p.warning());
        assert_eq!(ModelParams::new(10.0, 0.0).unwrap().validity(), 0.0);
        assert!(ModelParams::new(30.0, 0.1).unwrap().validity() > 0.1);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(ModelParams::new(-1.0, 0.1).is_err());
        assert!(ModelParams::new(1.0, 1.0).is_err());
        assert!(ModelParams::new(f64::NAN, 0.1).is_err());
        assert!(ModelParams::from_chi_prime(1.0, 0.0).is_err());
    }
}
