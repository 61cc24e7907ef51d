//! Poisson weights of the coherent pump, restricted to a window.

use serde::Serialize;

use crate::error::OracleError;

/// Largest pump amplitude the oracle accepts.
pub const ALPHA_CAP: f64 = 60.0;

/// Default probability discarded outside the window.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Amplitudes `c_m = e^{−α²/2} α^m / √m!` for `m_min ≤ m ≤ m_max`.
#[derive(Clone, Debug, Serialize)]
pub struct CoherentWeights {
    pub m_min: usize,
    pub m_max: usize,
    pub weights: Vec<f64>,
    /// Poisson probability outside `[m_min, m_max]`.
    pub tail_mass: f64,
}

impl CoherentWeights {
    pub fn get(&self, m: usize) -> Option<f64> {
        (self.m_min..=self.m_max).contains(&m).then(|| self.weights[m - self.m_min])
    }
}

/// Poisson probabilities `P(m)` for all `m` where they are representable,
/// generated by the ratio recurrence outwards from the mode and normalised
/// by their sum.
fn poisson(alpha: f64) -> Vec<f64> {
    let mean = alpha * alpha;
    let mode = mean.floor() as usize;
    let peak = 1.0;
    let mut up = vec![peak];
    let mut p = peak;
    let mut m = mode;
    while p > f64::MIN_POSITIVE * 1e16 {
        m += 1;
        p *= mean / m as f64;
        up.push(p);
    }
    let mut down = Vec::new();
    p = peak;
    let mut m = mode;
    while m > 0 && p > f64::MIN_POSITIVE * 1e16 {
        p *= m as f64 / mean;
        m -= 1;
        down.push(p);
    }
    let mut out = vec![0.0; mode - down.len()];
    out.extend(down.into_iter().rev());
    out.extend(up);
    let total: f64 = out.iter().sum();
    out.iter_mut().for_each(|p| *p /= total);
    out
}

/// Smallest symmetric-in-mass window whose discarded Poisson tails sum to
/// at most `tail_tol`.
pub fn coherent_weights(alpha: f64, tail_tol: f64) -> Result<CoherentWeights, OracleError> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(OracleError::Params(format!("alpha must be finite and non-negative, got {alpha}")));
    }
    if alpha > ALPHA_CAP {
        return Err(OracleError::AlphaCap { alpha, cap: ALPHA_CAP });
    }
    if !(tail_tol > 0.0 && tail_tol < 1.0) {
        return Err(OracleError::Params(format!("tail tolerance must lie in (0, 1), got {tail_tol}")));
    }
    if alpha == 0.0 {
        return Ok(CoherentWeights { m_min: 0, m_max: 0, weights: vec![1.0], tail_mass: 0.0 });
    }
    let p = poisson(alpha);
    let half = tail_tol / 2.0;
    let mut lo = 0;
    let mut left = 0.0;
    while lo + 1 < p.len() && left + p[lo] <= half {
        left += p[lo];
        lo += 1;
    }
    let mut hi = p.len() - 1;
    let mut right = 0.0;
    while hi > lo && right + p[hi] <= half {
        right += p[hi];
        hi -= 1;
    }
    Ok(CoherentWeights {
        m_min: lo,
        m_max: hi,
        weights: p[lo..=hi].iter().map(|q| q.sqrt()).collect(),
        tail_mass: left + right,
    })
}
