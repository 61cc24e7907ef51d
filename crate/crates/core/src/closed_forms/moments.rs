//! Moments, variances and third-order correlations of the output fields.
//!
//! Every formula is split into its undepleted part plus `χ^k` times a
//! bracket in χ′ alone; the brackets go through [`RegularFunction`] so the
//! removable singularities at χ′ = 0 are handled once.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::catalog::ClosedFormId;
use super::params::ModelParams;
use super::regular::RegularFunction;
use crate::taylor::PowerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentId {
    NPump,
    NSignal,
    NIdler,
    Ab,
    Dcdc,
    Dcdagdc,
    AlphaOut,
    Abdc,
    Abdcdag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarianceId {
    #[serde(rename = "V_xc")]
    Vxc,
    #[serde(rename = "V_pc")]
    Vpc,
    #[serde(rename = "V_xa")]
    Vxa,
    #[serde(rename = "V_pa")]
    Vpa,
    #[serde(rename = "V_xp_plus")]
    VxpPlus,
    #[serde(rename = "V_xp_minus")]
    VxpMinus,
    #[serde(rename = "V_abc")]
    Vabc,
}

impl MomentId {
    pub const ALL: [MomentId; 9] = [
        MomentId::NPump,
        MomentId::NSignal,
        MomentId::NIdler,
        MomentId::Ab,
        MomentId::Dcdc,
        MomentId::Dcdagdc,
        MomentId::AlphaOut,
        MomentId::Abdc,
        MomentId::Abdcdag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MomentId::NPump => "n_pump",
            MomentId::NSignal => "n_signal",
            MomentId::NIdler => "n_idler",
            MomentId::Ab => "ab",
            MomentId::Dcdc => "dcdc",
            MomentId::Dcdagdc => "dcdagdc",
            MomentId::AlphaOut => "alpha_out",
            MomentId::Abdc => "abdc",
            MomentId::Abdcdag => "abdcdag",
        }
    }

    /// Whether the moment is real for real `α`.
    pub fn is_real(self) -> bool {
        !matches!(self, MomentId::Ab | MomentId::Abdc | MomentId::Abdcdag)
    }
}

impl VarianceId {
    pub const ALL: [VarianceId; 7] = [
        VarianceId::Vxc,
        VarianceId::Vpc,
        VarianceId::Vxa,
        VarianceId::Vpa,
        VarianceId::VxpPlus,
        VarianceId::VxpMinus,
        VarianceId::Vabc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarianceId::Vxc => "V_xc",
            VarianceId::Vpc => "V_pc",
            VarianceId::Vxa => "V_xa",
            VarianceId::Vpa => "V_pa",
            VarianceId::VxpPlus => "V_xp_plus",
            VarianceId::VxpMinus => "V_xp_minus",
            VarianceId::Vabc => "V_abc",
        }
    }
}

/// Either kind of observable, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    Moment(MomentId),
    Variance(VarianceId),
}

impl Quantity {
    pub fn all() -> impl Iterator<Item = Quantity> {
        MomentId::ALL
            .into_iter()
            .map(Quantity::Moment)
            .chain(VarianceId::ALL.into_iter().map(Quantity::Variance))
    }

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Moment(m) => m.name(),
            Quantity::Variance(v) => v.name(),
        }
    }

    pub fn is_real(self) -> bool {
        match self {
            Quantity::Moment(m) => m.is_real(),
            Quantity::Variance(_) => true,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Quantity::all()
            .find(|q| q.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown quantity '{s}'"))
    }
}

/// A value together with the validity indicator of its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluated<T> {
    pub value: T,
    pub validity: f64,
    pub warning: bool,
}

impl<T> Evaluated<T> {
    fn new(value: T, params: &ModelParams) -> Self {
        Self { value, validity: params.validity(), warning: params.warning() }
    }
}

/// χ′-only brackets multiplying the depletion corrections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bracket {
    /// χ² part of `⟨a†a⟩`.
    Signal,
    /// χ² part of `⟨c†c⟩`.
    Pump,
    /// `⟨δc†δc⟩ / χ²`.
    DcdagDc,
    /// χ² part of `Im⟨ab⟩`.
    Ab,
    /// `⟨δcδc⟩ / χ²`.
    DcDc,
    /// `Im⟨abδc⟩ / χ`.
    AbDc,
    /// `Im⟨abδc†⟩ / χ`.
    AbDcdag,
    /// χ² part of `V_xc`.
    Vxc,
    /// χ² part of `V_pc`.
    Vpc,
    /// `V_abc / χ`.
    Vabc,
}

impl Bracket {
    pub const ALL: [Bracket; 10] = [
        Bracket::Signal,
        Bracket::Pump,
        Bracket::DcdagDc,
        Bracket::Ab,
        Bracket::DcDc,
        Bracket::AbDc,
        Bracket::AbDcdag,
        Bracket::Vxc,
        Bracket::Vpc,
        Bracket::Vabc,
    ];

    fn singularity(self) -> usize {
        match self {
            Bracket::AbDc | Bracket::AbDcdag | Bracket::Vabc => 1,
            Bracket::Ab | Bracket::DcDc | Bracket::Vxc | Bracket::Vpc => 2,
            // Composites of catalog entries; singular through their parts.
            Bracket::Signal | Bracket::Pump | Bracket::DcdagDc => 0,
        }
    }
}

impl RegularFunction for Bracket {
    fn all() -> &'static [Self] {
        &Self::ALL
    }

    fn index(self) -> usize {
        self as usize
    }

    fn direct(self, x: f64) -> f64 {
        use ClosedFormId as F;
        let (sh, ch) = (x.sinh(), x.cosh());
        let (sh2, ch2, sh4, ch4) = ((2.0 * x).sinh(), (2.0 * x).cosh(), (4.0 * x).sinh(), (4.0 * x).cosh());
        let x2 = x * x;
        match self {
            Bracket::Signal => F::SignalIdlerDcDag.eval(x).powi(2) - 2.0 * sh * F::MainA.eval(x),
            Bracket::Pump => {
                F::PumpDepletion.eval(x).powi(2) + 2.0 * x * F::MainC.eval(x) + F::PumpPairCreation.eval(x).powi(2)
            }
            Bracket::DcdagDc => F::PumpPairCreation.eval(x).powi(2),
            Bracket::Ab => (-4.0 * x - 6.0 * x * ch2 + (1.0 - 4.0 * x2) * sh2 + 2.0 * sh4) / (16.0 * x2),
            Bracket::DcDc => (-8.0 * x2 - 8.0 * x * sh2 + 8.0 * ch2 + ch4 - 9.0) / (32.0 * x2),
            Bracket::AbDc => (sh * ch.powi(3) - x * ch * ch) / (2.0 * x),
            Bracket::AbDcdag => (sh.powi(3) * ch - x * sh * sh) / (2.0 * x),
            Bracket::Vxc => (-8.0 * x * sh2 - 5.0 + 4.0 * ch2 + ch4) / (8.0 * x2),
            Bracket::Vpc => (x2 - sh * sh) / x2,
            Bracket::Vabc => (sh * ch - x) * (ch * ch + sh * sh) / x,
        }
    }

    fn taylor(self, degree: usize) -> PowerSeries {
        use ClosedFormId as F;
        let m = self.singularity();
        let d = degree + m;
        let x = |k: usize| PowerSeries::x_pow(k, d);
        let ch = |k: i64| PowerSeries::cosh(k, d);
        let sh = |k: i64| PowerSeries::sinh(k, d);
        let one = || PowerSeries::one(d);
        let over = |num: PowerSeries, den: i64| num.div_x_pow(m).expect("removable singularity").scale_ratio(1, den);
        match self {
            Bracket::Signal => {
                let s = F::SignalIdlerDcDag.taylor_series(d);
                s.clone() * s - sh(1) * F::MainA.taylor_series(d) * 2
            }
            Bracket::Pump => {
                let pd = F::PumpDepletion.taylor_series(d);
                let pc = F::PumpPairCreation.taylor_series(d);
                pd.clone() * pd + x(1) * F::MainC.taylor_series(d) * 2 + pc.clone() * pc
            }
            Bracket::DcdagDc => {
                let pc = F::PumpPairCreation.taylor_series(d);
                pc.clone() * pc
            }
            Bracket::Ab => over(
                x(1) * -4 - x(1) * ch(2) * 6 + (one() - x(2) * 4) * sh(2) + sh(4) * 2,
                16,
            ),
            Bracket::DcDc => over(x(2) * -8 - x(1) * sh(2) * 8 + ch(2) * 8 + ch(4) - one() * 9, 32),
            Bracket::AbDc => over(sh(1) * ch(1) * ch(1) * ch(1) - x(1) * ch(1) * ch(1), 2),
            Bracket::AbDcdag => over(sh(1) * sh(1) * sh(1) * ch(1) - x(1) * sh(1) * sh(1), 2),
            Bracket::Vxc => over(x(1) * sh(2) * -8 - one() * 5 + ch(2) * 4 + ch(4), 8),
            Bracket::Vpc => over(x(2) - sh(1) * sh(1), 1),
            Bracket::Vabc => over((sh(1) * ch(1) - x(1)) * (ch(1) * ch(1) + sh(1) * sh(1)), 1),
        }
    }

    fn is_singular(self) -> bool {
        self.singularity() > 0
    }

    fn fallback_table() -> &'static OnceLock<Vec<Vec<f64>>> {
        static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
        &TABLE
    }
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn imag(v: f64) -> Complex64 {
    Complex64::new(0.0, v)
}

fn moment_value(id: MomentId, p: &ModelParams) -> Complex64 {
    let (chi, x) = (p.chi, p.chi_prime());
    let chi2 = chi * chi;
    match id {
        MomentId::NPump => real(p.alpha * p.alpha - x.sinh().powi(2) + chi2 * Bracket::Pump.eval(x)),
        MomentId::NSignal | MomentId::NIdler => real(x.sinh().powi(2) + chi2 * Bracket::Signal.eval(x)),
        MomentId::Ab => imag(-0.5 * (2.0 * x).sinh() + chi2 * Bracket::Ab.eval(x)),
        MomentId::Dcdc => real(chi2 * Bracket::DcDc.eval(x)),
        MomentId::Dcdagdc => real(chi2 * Bracket::DcdagDc.eval(x)),
        MomentId::AlphaOut => real(
            p.alpha - chi * ClosedFormId::PumpDepletion.eval(x) + chi2 * chi * ClosedFormId::MainC.eval(x),
        ),
        MomentId::Abdc => imag(chi * Bracket::AbDc.eval(x)),
        MomentId::Abdcdag => imag(chi * Bracket::AbDcdag.eval(x)),
    }
}

fn variance_value(id: VarianceId, p: &ModelParams) -> f64 {
    let (chi, x) = (p.chi, p.chi_prime());
    let chi2 = chi * chi;
    match id {
        VarianceId::Vxc => 1.0 + chi2 * Bracket::Vxc.eval(x),
        VarianceId::Vpc => 1.0 + chi2 * Bracket::Vpc.eval(x),
        VarianceId::Vxa | VarianceId::Vpa => 1.0 + 2.0 * moment_value(MomentId::NSignal, p).re,
        // 2⟨a†a⟩ ∓ 2i⟨ab⟩ + 1, with the undepleted part folded into e^{∓2χ′}.
        VarianceId::VxpPlus => (-2.0 * x).exp() + chi2 * (2.0 * Bracket::Signal.eval(x) + 2.0 * Bracket::Ab.eval(x)),
        VarianceId::VxpMinus => (2.0 * x).exp() + chi2 * (2.0 * Bracket::Signal.eval(x) - 2.0 * Bracket::Ab.eval(x)),
        // −2i(⟨abδc⟩ + ⟨abδc†⟩)
        VarianceId::Vabc => chi * Bracket::Vabc.eval(x),
    }
}

/// Closed-form moment of the output state.
pub fn moment(id: MomentId, params: &ModelParams) -> Evaluated<Complex64> {
    Evaluated::new(moment_value(id, params), params)
}

/// Closed-form quadrature variance or correlation.
pub fn variance(id: VarianceId, params: &ModelParams) -> Evaluated<f64> {
    Evaluated::new(variance_value(id, params), params)
}

pub fn quantity(q: Quantity, params: &ModelParams) -> Evaluated<Complex64> {
    match q {
        Quantity::Moment(m) => moment(m, params),
        Quantity::Variance(v) => {
            let e = variance(v, params);
            Evaluated { value: real(e.value), validity: e.validity, warning: e.warning }
        }
    }
}

/// `|⟨c†c⟩ + (⟨a†a⟩ + ⟨b†b⟩)/2 − α²|`.
pub fn energy_residual(params: &ModelParams) -> f64 {
    let n = |id| moment_value(id, params).re;
    (n(MomentId::NPump) + 0.5 * (n(MomentId::NSignal) + n(MomentId::NIdler)) - params.alpha * params.alpha).abs()
}

/// The sum/difference squeezing variances exactly as the factored closed
/// form is printed, for cross-checking the bracket decomposition.
pub fn vxp_factored(params: &ModelParams, plus: bool) -> f64 {
    let (chi, x) = (params.chi, params.chi_prime());
    let s = if plus { 1.0 } else { -1.0 };
    let (sh, ch) = (x.sinh(), x.cosh());
    let c2 = chi * chi;
    (ch - s * sh) / 16.0
        * (-3.0 * c2 / (x * x) * (3.0 * x).cosh()
            + (3.0 * c2 / (x * x) - s * 20.0 * c2 / x + 8.0 * (2.0 + c2)) * ch
            + 2.0 * (s * 5.0 * c2 / (x * x) * (1.0 + (2.0 * x).cosh()) + 2.0 * c2 / x - s * 4.0 * (2.0 + c2)) * sh)
}
