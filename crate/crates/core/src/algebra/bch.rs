use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::monomial::{BosonMonomial, Mode};
use super::polynomial::{commutator, OperatorPolynomial};
use crate::error::AlgebraError;
use crate::scalar::GaussianRational;

/// Default ceiling on the number of stored terms during a BCH expansion.
pub const DEFAULT_TERM_CAP: usize = 10_000_000;

/// The interaction generator `G = iχ(a†b†c + abc†)`, so that the Heisenberg
/// operator is `X_o = e^G X e^{-G}`.
pub fn trilinear_generator() -> OperatorPolynomial {
    let pair_creation = BosonMonomial::new([1, 0, 1, 0, 0, 1]);
    let pair_annihilation = BosonMonomial::new([0, 1, 0, 1, 1, 0]);
    &OperatorPolynomial::term(pair_creation, 1, GaussianRational::i())
        + &OperatorPolynomial::term(pair_annihilation, 1, GaussianRational::i())
}

/// `Σ_{n=0}^{N} ad_G^n(seed) / n!` with a term-count ceiling.
///
/// `generator` must be homogeneous of χ-order one, so the n-th nested
/// commutator is exactly of order n and the result is exact through `order`.
pub fn bch_evolve(
    generator: &OperatorPolynomial,
    seed: &OperatorPolynomial,
    order: u32,
    term_cap: usize,
) -> Result<OperatorPolynomial, AlgebraError> {
    if generator.iter().any(|(k, _)| k.order != 1) {
        return Err(AlgebraError::GeneratorNotFirstOrder);
    }
    let max_order = seed.max_order().unwrap_or(0) + order;
    let mut nested = seed.clone();
    let mut result = seed.clone();
    for n in 1..=order {
        let inv_n = BigRational::new(BigInt::from(1), BigInt::from(n));
        nested = commutator(generator, &nested, max_order).scale_rational(&inv_n);
        for (k, v) in nested.iter() {
            result.add_term(*k, v.clone());
        }
        if nested.len() > term_cap || result.len() > term_cap {
            return Err(AlgebraError::TermCap { cap: term_cap, order_reached: n, terms: result.len().max(nested.len()) });
        }
    }
    Ok(result)
}

/// Heisenberg operator of a single annihilator, `e^G x e^{-G}` through χ^order.
pub fn heisenberg(mode: Mode, order: u32) -> Result<OperatorPolynomial, AlgebraError> {
    heisenberg_with_cap(mode, order, DEFAULT_TERM_CAP)
}

pub fn heisenberg_with_cap(mode: Mode, order: u32, term_cap: usize) -> Result<OperatorPolynomial, AlgebraError> {
    bch_evolve(
        &trilinear_generator(),
        &OperatorPolynomial::monomial(BosonMonomial::annihilator(mode)),
        order,
        term_cap,
    )
}

/// Outcome of checking `[X_o, X_o†] = 1` (or a vanishing cross commutator)
/// on a truncated Heisenberg operator.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub label: String,
    pub order: u32,
    /// Lowest χ-order carrying a nonzero residual, if any.
    pub lowest_residual_order: Option<u32>,
    pub residual_terms: usize,
    pub passed: bool,
}

impl CommutatorReport {
    fn from_residual(label: String, order: u32, residual: &OperatorPolynomial) -> Self {
        let lowest = residual.min_order();
        Self {
            label,
            order,
            lowest_residual_order: lowest,
            residual_terms: residual.len(),
            passed: lowest.is_none_or(|l| l > order),
        }
    }
}

/// Residual of `[X_o, X_o†] − 1` for `X_o` truncated at `order`. The full
/// (untruncated-product) residual is kept so its lowest order can be read off.
pub fn verify_commutator_order(mode: Mode, order: u32) -> Result<CommutatorReport, AlgebraError> {
    let xo = heisenberg(mode, order)?;
    let residual = &commutator(&xo, &xo.dagger(), 2 * order) - &OperatorPolynomial::identity();
    Ok(CommutatorReport::from_residual(format!("[{m}_o, {m}_o†] - 1", m = mode), order, &residual))
}

/// All commutators between distinct modes, `[X_o, Y_o]` and `[X_o, Y_o†]`,
/// which must vanish through `order`.
pub fn verify_cross_commutators(order: u32) -> Result<Vec<CommutatorReport>, AlgebraError> {
    let ops: Vec<(Mode, OperatorPolynomial)> =
        Mode::ALL.iter().map(|&m| heisenberg(m, order).map(|p| (m, p))).collect::<Result<_, _>>()?;
    let mut reports = Vec::new();
    for (i, (mx, x)) in ops.iter().enumerate() {
        for (my, y) in ops.iter().skip(i + 1) {
            let plain = commutator(x, y, 2 * order);
            reports.push(CommutatorReport::from_residual(format!("[{mx}_o, {my}_o]"), order, &plain));
            let mixed = commutator(x, &y.dagger(), 2 * order);
            reports.push(CommutatorReport::from_residual(format!("[{mx}_o, {my}_o†]"), order, &mixed));
        }
    }
    Ok(reports)
}
