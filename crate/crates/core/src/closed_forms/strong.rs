//! Strong-pump asymptotics: only the dominant growing exponentials of each
//! closed form are kept.

use super::moments::{Evaluated, MomentId, Quantity, VarianceId};
use super::params::ModelParams;

/// Below this χ′ the dropped exponentials are not negligible.
pub const STRONG_PUMP_MIN_CHI_PRIME: f64 = 3.0;

/// `χ² e^{4χ′} / (16 χ′²)`, the common correction factor.
fn correction(p: &ModelParams) -> f64 {
    let x = p.chi_prime();
    p.chi * p.chi * (4.0 * x).exp() / (16.0 * x * x)
}

fn value(q: Quantity, p: &ModelParams) -> Option<f64> {
    let (chi, x) = (p.chi, p.chi_prime());
    let k = correction(p);
    let e2 = (2.0 * x).exp();
    Some(match q {
        Quantity::Moment(MomentId::NPump) => p.alpha * p.alpha - e2 / 4.0 + k,
        Quantity::Moment(MomentId::NSignal | MomentId::NIdler) => e2 / 4.0 - k,
        Quantity::Variance(VarianceId::Vxc) => 1.0 + k,
        Quantity::Variance(VarianceId::Vpc) => 1.0,
        Quantity::Variance(VarianceId::Vxa | VarianceId::Vpa) => 1.0 + 2.0 * (e2 / 4.0 - k),
        Quantity::Variance(VarianceId::VxpPlus) => (-2.0 * x).exp() + k / e2,
        Quantity::Variance(VarianceId::VxpMinus) => e2 - 4.0 * k,
        Quantity::Variance(VarianceId::Vabc) => chi * (4.0 * x).exp() / (8.0 * x) - chi * e2 / 2.0,
        _ => return None,
    })
}

/// Asymptotic value, or `None` where no strong-pump form exists. The
/// warning flag is also raised when χ′ is below [`STRONG_PUMP_MIN_CHI_PRIME`].
pub fn strong_pump(q: Quantity, params: &ModelParams) -> Option<Evaluated<f64>> {
    let v = value(q, params)?;
    let validity = params.validity();
    Some(Evaluated {
        value: v,
        validity,
        warning: params.warning() || params.chi_prime() < STRONG_PUMP_MIN_CHI_PRIME,
    })
}

/// `V_xp⁺ V_xp⁻` in the strong-pump limit: `1 + χ² e^{4χ′}/(16χ′²)`.
pub fn uncertainty_product(params: &ModelParams) -> f64 {
    1.0 + correction(params)
}
