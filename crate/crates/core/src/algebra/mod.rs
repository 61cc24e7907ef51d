//! Exact symbolic algebra over the three bosonic modes `a`, `b`, `c`.
//!
//! Operators are kept normal-ordered per mode with Gaussian-rational
//! coefficients and an integer χ grade. Heisenberg operators come from the
//! nested-commutator series `e^G X e^{-G} = Σ ad_G^n(X)/n!`.

mod bch;
pub mod json;
mod monomial;
mod polynomial;

pub use bch::{
    bch_evolve, heisenberg, heisenberg_with_cap, trilinear_generator, verify_commutator_order,
    verify_cross_commutators, CommutatorReport, DEFAULT_TERM_CAP,
};
pub use monomial::{BosonMonomial, Mode};
pub use polynomial::{commutator, multiply, normalize, OperatorPolynomial, TermKey};

pub(crate) use monomial::binomial;
