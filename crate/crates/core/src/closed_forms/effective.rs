//! Operator-pattern catalog of the Heisenberg operators to second order in
//! the depletion corrections.
//!
//! A pattern is a normal-ordered monomial in `a, b, δc` (the `c` slots of
//! [`BosonMonomial`] stand for `δc`). An entry at suborder `s` contributes
//! `unit · f(χ′) · χ^s · pattern` to the output operator.

use num_complex::Complex64;
use serde::Serialize;

use super::catalog::{ClosedFormId, Phase};
use super::params::ModelParams;
use crate::algebra::{BosonMonomial, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub pattern: BosonMonomial,
    pub suborder: i32,
    pub unit: Phase,
    pub id: ClosedFormId,
}

/// Render a pattern with `δc` in place of `c`.
pub fn pattern_label(pattern: &BosonMonomial) -> String {
    pattern.to_string().replace('c', "δc")
}

fn entry(exps: [u32; 6], suborder: i32, unit: Phase, id: ClosedFormId) -> CatalogEntry {
    CatalogEntry { pattern: BosonMonomial::new(exps), suborder, unit, id }
}

fn signal_catalog() -> Vec<CatalogEntry> {
    use ClosedFormId::*;
    let full = |exps, id: ClosedFormId| entry(exps, 2, id.phase(), id);
    vec![
        entry([0, 1, 0, 0, 0, 0], 0, Phase::One, Cosh),
        entry([0, 0, 1, 0, 0, 0], 0, Phase::MinusI, Sinh),
        entry([0, 1, 0, 0, 0, 1], 1, Phase::One, HalfSinh),
        entry([0, 1, 0, 0, 1, 0], 1, Phase::One, HalfSinh),
        entry([0, 0, 1, 0, 0, 1], 1, Phase::MinusI, SignalIdlerDc),
        entry([0, 0, 1, 0, 1, 0], 1, Phase::MinusI, SignalIdlerDcDag),
        full([0, 1, 0, 0, 0, 0], SignalA),
        full([0, 0, 1, 0, 0, 0], SignalBdag),
        full([0, 2, 0, 1, 0, 0], SignalA2B),
        full([0, 1, 1, 1, 0, 0], SignalABdagB),
        full([1, 1, 1, 0, 0, 0], SignalAdagABdag),
        full([1, 0, 2, 0, 0, 0], SignalAdagBdag2),
        full([1, 2, 0, 0, 0, 0], SignalAdagA2),
        full([0, 1, 0, 0, 0, 2], SignalADc2),
        full([0, 1, 0, 0, 2, 0], SignalADcdag2),
        full([0, 1, 0, 0, 1, 1], SignalADcdagDc),
        full([0, 0, 2, 1, 0, 0], SignalBdag2B),
        full([0, 0, 1, 0, 0, 2], SignalBdagDc2),
        full([0, 0, 1, 0, 1, 1], SignalBdagDcdagDc),
        full([0, 0, 1, 0, 2, 0], SignalBdagDcdag2),
    ]
}

fn pump_catalog() -> Vec<CatalogEntry> {
    use ClosedFormId::*;
    let full = |exps, id: ClosedFormId| entry(exps, 2, id.phase(), id);
    vec![
        entry([0; 6], -1, Phase::One, PumpAmplitude),
        entry([0, 0, 0, 0, 0, 1], 0, Phase::One, Unity),
        entry([0; 6], 1, Phase::MinusOne, PumpDepletion),
        entry([1, 1, 0, 0, 0, 0], 1, Phase::MinusOne, PumpDepletion),
        entry([0, 0, 1, 1, 0, 0], 1, Phase::MinusOne, PumpDepletion),
        entry([1, 0, 1, 0, 0, 0], 1, Phase::MinusI, PumpPairCreation),
        entry([0, 1, 0, 1, 0, 0], 1, Phase::MinusI, PumpPairAnnihilation),
        full([0, 0, 0, 0, 0, 1], PumpDc),
        full([1, 1, 0, 0, 0, 1], PumpAdagADc),
        full([0, 0, 1, 1, 0, 1], PumpBdagBDc),
        full([0, 1, 0, 1, 0, 1], PumpAbDc),
        full([0, 1, 0, 1, 1, 0], PumpAbDcdag),
        full([1, 0, 1, 0, 0, 1], PumpAdagBdagDc),
        full([0, 0, 0, 0, 1, 0], PumpDcdag),
        full([1, 1, 0, 0, 1, 0], PumpAdagADcdag),
        full([0, 0, 1, 1, 1, 0], PumpBdagBDcdag),
        full([1, 0, 1, 0, 1, 0], PumpAdagBdagDcdag),
        // The χ³ amplitude correction sits one suborder above the rest.
        entry([0; 6], 3, Phase::One, PumpAlpha),
    ]
}

/// Every cataloged `(pattern, suborder)` of the output operator of `mode`.
/// The idler catalog is the signal catalog with `a` and `b` exchanged.
pub fn catalog(mode: Mode) -> Vec<CatalogEntry> {
    match mode {
        Mode::A => signal_catalog(),
        Mode::B => signal_catalog()
            .into_iter()
            .map(|e| CatalogEntry { pattern: e.pattern.swap_ab(), ..e })
            .collect(),
        Mode::C => pump_catalog(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermValue {
    pub pattern: String,
    pub suborder: i32,
    pub coefficient_id: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EffectiveOperator {
    pub mode: Mode,
    pub chi_prime: f64,
    pub terms: Vec<TermValue>,
}

impl EffectiveOperator {
    /// Sum of all identity-pattern terms; for the pump this is `α_o`.
    pub fn amplitude(&self) -> Complex64 {
        self.terms
            .iter()
            .filter(|t| t.pattern == "1")
            .map(|t| Complex64::new(t.re, t.im))
            .sum()
    }

    /// Total coefficient of one pattern over all suborders.
    pub fn pattern_total(&self, pattern: &BosonMonomial) -> Complex64 {
        let label = pattern_label(pattern);
        self.terms
            .iter()
            .filter(|t| t.pattern == label)
            .map(|t| Complex64::new(t.re, t.im))
            .sum()
    }
}

/// Numeric coefficient of every term of the full second-order operator.
pub fn effective_operator_coefficients(mode: Mode, params: &ModelParams) -> EffectiveOperator {
    let x = params.chi_prime();
    let terms = catalog(mode)
        .into_iter()
        .map(|e| {
            let scale = if e.suborder < 0 { params.alpha } else { params.chi.powi(e.suborder) };
            let magnitude = if e.id == ClosedFormId::PumpAmplitude { 1.0 } else { e.id.magnitude(x) };
            let v = e.unit.to_complex() * magnitude * scale;
            TermValue {
                pattern: pattern_label(&e.pattern),
                suborder: e.suborder,
                coefficient_id: e.id.label().to_string(),
                re: v.re,
                im: v.im,
            }
        })
        .collect();
    EffectiveOperator { mode, chi_prime: x, terms }
}
