//! Named coefficient functions of the effective Heisenberg operators.
//!
//! Each id carries a phase (`1`, `i` or `-i`) and a real magnitude `f(χ′)`;
//! the operator coefficient is `phase · f(χ′)`. The magnitude has two
//! separate codings: a floating-point closed form and an exact Taylor
//! expansion built from the cosh/sinh defining series.

use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::regular::RegularFunction;
use crate::scalar::GaussianRational;
use crate::taylor::PowerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phase {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Phase {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Phase::One => Complex64::new(1.0, 0.0),
            Phase::MinusOne => Complex64::new(-1.0, 0.0),
            Phase::I => Complex64::new(0.0, 1.0),
            Phase::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    pub fn to_exact(self) -> GaussianRational {
        match self {
            Phase::One => GaussianRational::one(),
            Phase::MinusOne => -GaussianRational::one(),
            Phase::I => GaussianRational::i(),
            Phase::MinusI => -GaussianRational::i(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClosedFormId {
    // Structural first-order coefficients.
    Unity,
    /// `χ′` itself; the bare pump amplitude is `α = χ′/χ`.
    PumpAmplitude,
    Cosh,
    Sinh,
    /// `sinh χ′ / 2`, coefficient of `χ a δc` and `χ a δc†`.
    HalfSinh,
    /// `cosh χ′/2 + sinh χ′/(2χ′)`, coefficient of `-iχ b† δc`.
    SignalIdlerDc,
    /// `cosh χ′/2 − sinh χ′/(2χ′)`, coefficient of `-iχ b† δc†`.
    SignalIdlerDcDag,
    /// `sinh²χ′/(2χ′)`, depletion of the amplitude and of `a†a`, `b†b` in `c_o`.
    PumpDepletion,
    /// `(1 − sinh χ′ cosh χ′/χ′)/2`, coefficient of `-iχ a†b†` in `c_o`.
    PumpPairCreation,
    /// `(1 + sinh χ′ cosh χ′/χ′)/2`, coefficient of `-iχ ab` in `c_o`.
    PumpPairAnnihilation,
    // Second-order coefficients of the compact effective operators.
    MainA,
    MainB,
    MainC,
    MainD,
    // Full second-order signal catalog.
    SignalA,
    SignalBdag,
    SignalA2B,
    SignalABdagB,
    SignalAdagABdag,
    SignalAdagBdag2,
    SignalAdagA2,
    SignalADc2,
    SignalADcdag2,
    SignalADcdagDc,
    SignalBdag2B,
    SignalBdagDc2,
    SignalBdagDcdagDc,
    SignalBdagDcdag2,
    // Full second-order pump catalog.
    PumpAlpha,
    PumpDc,
    PumpAdagADc,
    PumpBdagBDc,
    PumpAbDc,
    PumpAbDcdag,
    PumpAdagBdagDc,
    PumpDcdag,
    PumpAdagADcdag,
    PumpBdagBDcdag,
    PumpAdagBdagDcdag,
}

use ClosedFormId::*;

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 39] = [
        Unity,
        PumpAmplitude,
        Cosh,
        Sinh,
        HalfSinh,
        SignalIdlerDc,
        SignalIdlerDcDag,
        PumpDepletion,
        PumpPairCreation,
        PumpPairAnnihilation,
        MainA,
        MainB,
        MainC,
        MainD,
        SignalA,
        SignalBdag,
        SignalA2B,
        SignalABdagB,
        SignalAdagABdag,
        SignalAdagBdag2,
        SignalAdagA2,
        SignalADc2,
        SignalADcdag2,
        SignalADcdagDc,
        SignalBdag2B,
        SignalBdagDc2,
        SignalBdagDcdagDc,
        SignalBdagDcdag2,
        PumpAlpha,
        PumpDc,
        PumpAdagADc,
        PumpBdagBDc,
        PumpAbDc,
        PumpAbDcdag,
        PumpAdagBdagDc,
        PumpDcdag,
        PumpAdagADcdag,
        PumpBdagBDcdag,
        PumpAdagBdagDcdag,
    ];

    /// The 25 second-order coefficients of the full signal and pump operators.
    pub const SECOND_ORDER: [ClosedFormId; 25] = [
        SignalA,
        SignalBdag,
        SignalA2B,
        SignalABdagB,
        SignalAdagABdag,
        SignalAdagBdag2,
        SignalAdagA2,
        SignalADc2,
        SignalADcdag2,
        SignalADcdagDc,
        SignalBdag2B,
        SignalBdagDc2,
        SignalBdagDcdagDc,
        SignalBdagDcdag2,
        PumpAlpha,
        PumpDc,
        PumpAdagADc,
        PumpBdagBDc,
        PumpAbDc,
        PumpAbDcdag,
        PumpAdagBdagDc,
        PumpDcdag,
        PumpAdagADcdag,
        PumpBdagBDcdag,
        PumpAdagBdagDcdag,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Unity => "1",
            PumpAmplitude => "χ′",
            Cosh => "cosh χ′",
            Sinh => "sinh χ′",
            HalfSinh => "sinh χ′/2",
            SignalIdlerDc => "cosh χ′/2 + sinh χ′/(2χ′)",
            SignalIdlerDcDag => "cosh χ′/2 - sinh χ′/(2χ′)",
            PumpDepletion => "sinh²χ′/(2χ′)",
            PumpPairCreation => "(1 - sinh χ′ cosh χ′/χ′)/2",
            PumpPairAnnihilation => "(1 + sinh χ′ cosh χ′/χ′)/2",
            MainA => "A",
            MainB => "B",
            MainC => "C",
            MainD => "D",
            SignalA => "A_a",
            SignalBdag => "A_b†",
            SignalA2B => "A_a²b",
            SignalABdagB => "A_ab†b",
            SignalAdagABdag => "A_a†ab†",
            SignalAdagBdag2 => "A_a†b†²",
            SignalAdagA2 => "A_a†a²",
            SignalADc2 => "A_aδc²",
            SignalADcdag2 => "A_aδc†²",
            SignalADcdagDc => "A_aδc†δc",
            SignalBdag2B => "A_b†²b",
            SignalBdagDc2 => "A_b†δc²",
            SignalBdagDcdagDc => "A_b†δc†δc",
            SignalBdagDcdag2 => "A_b†δc†²",
            PumpAlpha => "C_α",
            PumpDc => "C_δc",
            PumpAdagADc => "C_a†aδc",
            PumpBdagBDc => "C_b†bδc",
            PumpAbDc => "C_abδc",
            PumpAbDcdag => "C_abδc†",
            PumpAdagBdagDc => "C_a†b†δc",
            PumpDcdag => "C_δc†",
            PumpAdagADcdag => "C_a†aδc†",
            PumpBdagBDcdag => "C_b†bδc†",
            PumpAdagBdagDcdag => "C_a†b†δc†",
        }
    }

    pub fn phase(self) -> Phase {
        match self {
            SignalBdag | SignalAdagABdag | SignalBdag2B | PumpAdagBdagDc | PumpAdagBdagDcdag => Phase::I,
            SignalA2B | SignalBdagDc2 | SignalBdagDcdagDc | SignalBdagDcdag2 | PumpAbDc | PumpAbDcdag => Phase::MinusI,
            _ => Phase::One,
        }
    }

    /// Power of χ′ divided out in the direct formula (0 for entire forms).
    pub fn singularity(self) -> u32 {
        match self {
            Unity | PumpAmplitude | Cosh | Sinh | HalfSinh => 0,
            SignalIdlerDc | SignalIdlerDcDag | PumpDepletion | PumpPairCreation | PumpPairAnnihilation => 1,
            SignalADc2 | SignalADcdag2 | SignalADcdagDc => 1,
            MainC | PumpAlpha => 3,
            _ => 2,
        }
    }

    /// Real magnitude at χ′, with Taylor fallback near zero.
    pub fn magnitude(self, chi_prime: f64) -> f64 {
        self.eval(chi_prime)
    }

    /// Full (phase-carrying) coefficient at χ′.
    pub fn coefficient(self, chi_prime: f64) -> Complex64 {
        self.phase().to_complex() * self.magnitude(chi_prime)
    }

    /// Exact Taylor series of the magnitude through `degree`.
    pub fn taylor_series(self, degree: usize) -> PowerSeries {
        exact_taylor(self, degree)
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl RegularFunction for ClosedFormId {
    fn all() -> &'static [Self] {
        &Self::ALL
    }

    fn index(self) -> usize {
        self as usize
    }

    fn direct(self, x: f64) -> f64 {
        direct_formula(self, x)
    }

    fn taylor(self, degree: usize) -> PowerSeries {
        exact_taylor(self, degree)
    }

    fn is_singular(self) -> bool {
        self.singularity() > 0
    }

    fn fallback_table() -> &'static OnceLock<Vec<Vec<f64>>> {
        static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
        &TABLE
    }
}

fn direct_formula(id: ClosedFormId, x: f64) -> f64 {
    let (sh, ch) = (x.sinh(), x.cosh());
    let (sh2, ch2) = ((2.0 * x).sinh(), (2.0 * x).cosh());
    let (sh3, ch3) = ((3.0 * x).sinh(), (3.0 * x).cosh());
    let ch4 = (4.0 * x).cosh();
    let x2 = x * x;
    match id {
        Unity => 1.0,
        PumpAmplitude => x,
        Cosh => ch,
        Sinh => sh,
        HalfSinh => sh / 2.0,
        SignalIdlerDc => ch / 2.0 + sh / (2.0 * x),
        SignalIdlerDcDag => ch / 2.0 - sh / (2.0 * x),
        PumpDepletion => sh * sh / (2.0 * x),
        PumpPairCreation => 0.5 * (1.0 - sh * ch / x),
        PumpPairAnnihilation => 0.5 * (1.0 + sh * ch / x),
        MainA | SignalBdag => (-5.0 * x * ch + 2.0 * sh - x2 * sh + sh3) / (8.0 * x2),
        MainB | SignalA => -(-ch - x2 * ch + ch3 - 3.0 * x * sh) / (8.0 * x2),
        MainC | PumpAlpha => {
            (-3.0 - 4.0 * x2 + (2.0 - 4.0 * x2) * ch2 + ch4 - 2.0 * x * sh2) / (32.0 * x2 * x)
        }
        MainD | PumpDcdag | PumpAdagADcdag | PumpBdagBDcdag => -(1.0 - ch2 + x * sh2) / (4.0 * x2),
        SignalA2B => (4.0 * x * ch - 7.0 * sh + sh3) / (16.0 * x2),
        SignalABdagB => (ch - ch3) / (8.0 * x2),
        SignalAdagABdag => (-4.0 * x * ch + sh + sh3) / (8.0 * x2),
        SignalAdagBdag2 => (-ch + ch3 - 4.0 * x * sh) / (16.0 * x2),
        SignalAdagA2 => -(-ch + ch3 - 4.0 * x * sh) / (16.0 * x2),
        SignalADc2 | SignalADcdag2 => (x * ch - sh) / (8.0 * x),
        SignalADcdagDc => (x * ch + sh) / (4.0 * x),
        SignalBdag2B => (-4.0 * x * ch + sh + sh3) / (16.0 * x2),
        SignalBdagDc2 => (x * ch - sh + x2 * sh) / (8.0 * x2),
        SignalBdagDcdagDc => 2.0 * (x * ch - sh + x2 * sh) / (8.0 * x2),
        SignalBdagDcdag2 => (-3.0 * x * ch + 3.0 * sh + x2 * sh) / (8.0 * x2),
        PumpDc | PumpAdagADc | PumpBdagBDc => -(1.0 - ch2 + 2.0 * sh * sh + x * sh2) / (4.0 * x2),
        PumpAbDc | PumpAbDcdag => (2.0 * x * ch2 - sh2) / (8.0 * x2),
        PumpAdagBdagDc => (-4.0 * x + 2.0 * x * ch2 + sh2) / (8.0 * x2),
        PumpAdagBdagDcdag => (4.0 * x + 2.0 * x * ch2 - 3.0 * sh2) / (8.0 * x2),
    }
}

fn exact_taylor(id: ClosedFormId, degree: usize) -> PowerSeries {
    // Numerators are expanded far enough that dividing by χ′^m still
    // leaves `degree` exact coefficients.
    let m = id.singularity() as usize;
    let d = degree + m;
    let x = |k: usize| PowerSeries::x_pow(k, d);
    let ch = |k: i64| PowerSeries::cosh(k, d);
    let sh = |k: i64| PowerSeries::sinh(k, d);
    let one = || PowerSeries::one(d);
    let over = |num: PowerSeries, den: i64| -> PowerSeries {
        num.div_x_pow(m)
            .unwrap_or_else(|| panic!("{id:?}: numerator does not vanish to order {m}"))
            .scale_ratio(1, den)
    };
    match id {
        Unity => one(),
        PumpAmplitude => x(1),
        Cosh => ch(1),
        Sinh => sh(1),
        HalfSinh => sh(1).scale_ratio(1, 2),
        SignalIdlerDc => over(x(1) * ch(1) + sh(1), 2),
        SignalIdlerDcDag => over(x(1) * ch(1) - sh(1), 2),
        PumpDepletion => over(sh(1) * sh(1), 2),
        PumpPairCreation => over(x(1) - sh(1) * ch(1), 2),
        PumpPairAnnihilation => over(x(1) + sh(1) * ch(1), 2),
        MainA | SignalBdag => over(x(1) * ch(1) * -5 + sh(1) * 2 - x(2) * sh(1) + sh(3), 8),
        MainB | SignalA => over(-(-ch(1) - x(2) * ch(1) + ch(3) - x(1) * sh(1) * 3), 8),
        MainC | PumpAlpha => over(
            one() * -3 - x(2) * 4 + (one() * 2 - x(2) * 4) * ch(2) + ch(4) - x(1) * sh(2) * 2,
            32,
        ),
        MainD | PumpDcdag | PumpAdagADcdag | PumpBdagBDcdag => over(-(one() - ch(2) + x(1) * sh(2)), 4),
        SignalA2B => over(x(1) * ch(1) * 4 - sh(1) * 7 + sh(3), 16),
        SignalABdagB => over(ch(1) - ch(3), 8),
        SignalAdagABdag => over(x(1) * ch(1) * -4 + sh(1) + sh(3), 8),
        SignalAdagBdag2 => over(-ch(1) + ch(3) - x(1) * sh(1) * 4, 16),
        SignalAdagA2 => over(-(-ch(1) + ch(3) - x(1) * sh(1) * 4), 16),
        SignalADc2 | SignalADcdag2 => over(x(1) * ch(1) - sh(1), 8),
        SignalADcdagDc => over(x(1) * ch(1) + sh(1), 4),
        SignalBdag2B => over(x(1) * ch(1) * -4 + sh(1) + sh(3), 16),
        SignalBdagDc2 => over(x(1) * ch(1) - sh(1) + x(2) * sh(1), 8),
        SignalBdagDcdagDc => over((x(1) * ch(1) - sh(1) + x(2) * sh(1)) * 2, 8),
        SignalBdagDcdag2 => over(x(1) * ch(1) * -3 + sh(1) * 3 + x(2) * sh(1), 8),
        PumpDc | PumpAdagADc | PumpBdagBDc => over(-(one() - ch(2) + sh(1) * sh(1) * 2 + x(1) * sh(2)), 4),
        PumpAbDc | PumpAbDcdag => over(x(1) * ch(2) * 2 - sh(2), 8),
        PumpAdagBdagDc => over(x(1) * -4 + x(1) * ch(2) * 2 + sh(2), 8),
        PumpAdagBdagDcdag => over(x(1) * 4 + x(1) * ch(2) * 2 - sh(2) * 3, 8),
    }
}
