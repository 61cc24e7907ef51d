//! Floating-point evaluation of the closed-form coefficient functions,
//! moments, variances and strong-pump limits.

mod catalog;
mod effective;
mod moments;
mod params;
pub mod regular;
mod strong;

pub use catalog::{ClosedFormId, Phase};
pub use effective::{catalog, effective_operator_coefficients, pattern_label, CatalogEntry, EffectiveOperator, TermValue};
pub use moments::{
    energy_residual, moment, quantity, variance, vxp_factored, Bracket, Evaluated, MomentId, Quantity, VarianceId,
};
pub use params::{ModelParams, VALIDITY_WARNING};
pub use regular::RegularFunction;
pub use strong::{strong_pump, uncertainty_product, STRONG_PUMP_MIN_CHI_PRIME};
