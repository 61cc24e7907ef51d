//! Two-mode parametric amplification with pump depletion.
//!
//! * [`algebra`]: exact normal-ordered operator algebra and BCH evolution.
//! * [`series`]: pump displacement `c = α + δc`, suborder classification and
//!   exact series verification against closed forms.
//! * [`closed_forms`]: numerical evaluation of the coefficient catalog,
//!   moments, variances and strong-pump limits.
//! * [`fock`]: sector-blocked exact Fock-space evolution used as an oracle.
//! * [`report`]: moment reports and number formatting shared by both paths.

pub mod algebra;
pub mod closed_forms;
pub mod error;
pub mod fock;
pub mod scalar;
pub mod series;
pub mod report;
pub mod taylor;

pub use error::{AlgebraError, DomainError, FormatError, OracleError};
pub use scalar::GaussianRational;
