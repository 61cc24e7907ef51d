//! Error scaling of the closed forms against the oracle at fixed χ′.
//!
//! At fixed χ′ the closed forms are exact through χ², so every error
//! `e(χ) = |analytic − oracle|` should fall like χ³.

use serde_json::{json, Value};

use super::coherent::ALPHA_CAP;
use super::oracle::oracle_moments;
use crate::closed_forms::{ModelParams, MomentId, Quantity, VarianceId};
use crate::error::OracleError;
use crate::report::{analytic_report, num};

pub const REQUIRED_SLOPE: f64 = 2.7;

/// Quantities whose closed forms are claimed through χ².
pub const CLAIMED: [Quantity; 12] = [
    Quantity::Moment(MomentId::NPump),
    Quantity::Moment(MomentId::NSignal),
    Quantity::Moment(MomentId::Ab),
    Quantity::Moment(MomentId::Dcdc),
    Quantity::Moment(MomentId::Dcdagdc),
    Quantity::Moment(MomentId::Abdc),
    Quantity::Moment(MomentId::Abdcdag),
    Quantity::Variance(VarianceId::Vxc),
    Quantity::Variance(VarianceId::Vpc),
    Quantity::Variance(VarianceId::VxpPlus),
    Quantity::Variance(VarianceId::VxpMinus),
    Quantity::Variance(VarianceId::Vabc),
];

/// Reported for audit but not gated.
pub const INFORMATIONAL: [Quantity; 3] = [
    Quantity::Moment(MomentId::AlphaOut),
    Quantity::Variance(VarianceId::Vxa),
    Quantity::Variance(VarianceId::Vpa),
];

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingPoint {
    pub alpha: f64,
    pub chi: f64,
    pub validity: f64,
    /// `(quantity, |analytic − oracle|)` in the order of [`CLAIMED`] then
    /// [`INFORMATIONAL`].
    pub errors: Vec<(Quantity, f64)>,
    pub aa_magnitude: f64,
    pub tail_mass: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantitySlope {
    pub quantity: Quantity,
    /// Least-squares slope of `ln e` against `ln χ`; `None` when every
    /// error is exactly zero.
    pub slope: Option<f64>,
    pub claimed: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingReport {
    pub chi_prime: f64,
    pub tail_tol: f64,
    pub points: Vec<ScalingPoint>,
    pub slopes: Vec<QuantitySlope>,
    pub passed: bool,
}

/// The triplet `(χ, χ/2, χ/4)` at fixed χ′, starting from `base_alpha` and
/// doubling α, with α capped at the oracle limit.
pub fn scaling_chis(chi_prime: f64, base_alpha: f64) -> Vec<f64> {
    [1.0, 2.0, 4.0].iter().map(|f| chi_prime / (base_alpha * f).min(ALPHA_CAP)).collect()
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn slope_of(points: &[ScalingPoint], idx: usize) -> Option<f64> {
    let es: Vec<f64> = points.iter().map(|p| p.errors[idx].1).collect();
    if es.iter().all(|&e| e == 0.0) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|p| p.chi.ln()).collect();
    let ys: Vec<f64> = es.iter().map(|e| e.ln()).collect();
    Some(fit_slope(&xs, &ys))
}

/// Compare closed forms and oracle at each χ with `α = χ′/χ`.
pub fn compare(chi_prime: f64, chis: &[f64], tail_tol: f64) -> Result<ScalingReport, OracleError> {
    let mut distinct: Vec<f64> = chis.to_vec();
    distinct.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(OracleError::Params(format!("need at least three distinct χ values, got {}", distinct.len())));
    }
    if !(chi_prime > 0.0 && chi_prime.is_finite()) {
        return Err(OracleError::Params(format!("χ′ must be positive, got {chi_prime}")));
    }
    let quantities: Vec<Quantity> = CLAIMED.iter().chain(INFORMATIONAL.iter()).copied().collect();
    let mut points = Vec::new();
    for &chi in &distinct {
        let params = ModelParams::from_chi_prime(chi_prime, chi).map_err(|e| OracleError::Params(e.to_string()))?;
        let oracle = oracle_moments(params.alpha, chi, tail_tol)?;
        let analytic = analytic_report(&params);
        let errors = quantities.iter().map(|&q| (q, (analytic.quantity(q) - oracle.quantity(q)).norm())).collect();
        points.push(ScalingPoint {
            alpha: params.alpha,
            chi,
            validity: params.validity(),
            errors,
            aa_magnitude: oracle.aa.map(|z| z.norm()).unwrap_or(0.0),
            tail_mass: oracle.truncation.as_ref().map(|t| t.tail_mass).unwrap_or(0.0),
        });
    }
    let slopes: Vec<QuantitySlope> = quantities
        .iter()
        .enumerate()
        .map(|(i, &q)| {
            let slope = slope_of(&points, i);
            let claimed = i < CLAIMED.len();
            let passed = !claimed || slope.is_none_or(|s| s >= REQUIRED_SLOPE);
            QuantitySlope { quantity: q, slope, claimed, passed }
        })
        .collect();
    let passed = slopes.iter().all(|s| s.passed);
    Ok(ScalingReport { chi_prime, tail_tol, points, slopes, passed })
}

impl ScalingReport {
    pub fn to_json(&self) -> Value {
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                let errors: serde_json::Map<String, Value> =
                    p.errors.iter().map(|(q, e)| (q.name().to_string(), num(*e))).collect();
                json!({
                    "alpha": num(p.alpha),
                    "chi": num(p.chi),
                    "validity": num(p.validity),
                    "tail_mass": num(p.tail_mass),
                    "aa_magnitude": num(p.aa_magnitude),
                    "errors": errors,
                })
            })
            .collect();
        let slopes: Vec<Value> = self
            .slopes
            .iter()
            .map(|s| {
                json!({
                    "quantity": s.quantity.name(),
                    "slope": s.slope.map_or(Value::Null, num),
                    "claimed": s.claimed,
                    "passed": s.passed,
                })
            })
            .collect();
        json!({
            "chi_prime": num(self.chi_prime),
            "tail_tol": num(self.tail_tol),
            "required_slope": num(REQUIRED_SLOPE),
            "delta_c_reference": "oracle mean",
            "points": points,
            "slopes": slopes,
            "passed": self.passed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let xs: Vec<f64> = [0.1f64, 0.05, 0.025].iter().map(|x| x.ln()).collect();
        let ys: Vec<f64> = [0.1f64, 0.05, 0.025].iter().map(|x| (7.0 * x.powi(3)).ln()).collect();
        assert!((fit_slope(&xs, &ys) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn triplet_respects_cap() {
        assert_eq!(scaling_chis(1.0, 10.0), vec![0.1, 0.05, 0.025]);
        assert_eq!(scaling_chis(1.0, 20.0)[2], 1.0 / 60.0);
    }

    #[test]
    fn needs_three_points() {
        assert!(compare(0.5, &[0.05, 0.025], 1e-12).is_err());
    }
}
