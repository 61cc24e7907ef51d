//! Moment reports shared by the closed-form and oracle paths, and the
//! 17-significant-digit number formatting used by every output.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Number, Value};

use crate::closed_forms::{energy_residual, moment, variance, ModelParams, MomentId, Quantity, VarianceId};

/// Round-trip-safe decimal rendering with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.16e}")
}

/// JSON number with 17 significant digits; `null` if not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(fmt17(x).parse::<Number>().expect("formatted float is valid JSON"))
}

pub fn complex_json(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Analytic,
    Oracle,
}

/// Sector window and truncation of an oracle run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Truncation {
    pub m_min: usize,
    pub m_max: usize,
    pub tail_mass: f64,
    /// Largest retained basis size over all sectors.
    pub max_sector_dim: usize,
    /// Norm of the assembled state, `1 − tail_mass` up to rounding.
    pub norm: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentReport {
    pub source: Source,
    pub alpha: f64,
    pub chi: f64,
    pub chi_prime: f64,
    pub validity: f64,
    pub warning: bool,
    pub moments: BTreeMap<MomentId, Complex64>,
    pub variances: BTreeMap<VarianceId, f64>,
    /// `|⟨c†c⟩ + (⟨a†a⟩ + ⟨b†b⟩)/2 − α²|`.
    pub energy_residual: f64,
    /// `⟨aa⟩`, evaluated only by the oracle.
    pub aa: Option<Complex64>,
    pub truncation: Option<Truncation>,
}

impl MomentReport {
    pub fn quantity(&self, q: Quantity) -> Complex64 {
        match q {
            Quantity::Moment(m) => self.moments[&m],
            Quantity::Variance(v) => Complex64::new(self.variances[&v], 0.0),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut moments = Map::new();
        for (id, z) in &self.moments {
            let v = if id.is_real() { num(z.re) } else { complex_json(*z) };
            moments.insert(id.name().to_string(), v);
        }
        let mut variances = Map::new();
        for (id, v) in &self.variances {
            variances.insert(id.name().to_string(), num(*v));
        }
        let mut out = json!({
            "source": self.source,
            "alpha": num(self.alpha),
            "chi": num(self.chi),
            "chi_prime": num(self.chi_prime),
            "validity": num(self.validity),
            "warning": self.warning,
            "moments": moments,
            "variances": variances,
            "energy_residual": num(self.energy_residual),
        });
        if let Some(aa) = self.aa {
            out["aa"] = complex_json(aa);
        }
        if let Some(t) = &self.truncation {
            out["truncation"] = json!({
                "m_min": t.m_min,
                "m_max": t.m_max,
                "tail_mass": num(t.tail_mass),
                "max_sector_dim": t.max_sector_dim,
                "norm": num(t.norm),
            });
        }
        out
    }
}

/// Closed-form report at `params`.
pub fn analytic_report(params: &ModelParams) -> MomentReport {
    MomentReport {
        source: Source::Analytic,
        alpha: params.alpha,
        chi: params.chi,
        chi_prime: params.chi_prime(),
        validity: params.validity(),
        warning: params.warning(),
        moments: MomentId::ALL.iter().map(|&id| (id, moment(id, params).value)).collect(),
        variances: VarianceId::ALL.iter().map(|&id| (id, variance(id, params).value)).collect(),
        energy_residual: energy_residual(params),
        aa: None,
        truncation: None,
    }
}
