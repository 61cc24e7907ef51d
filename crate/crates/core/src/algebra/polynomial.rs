use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::monomial::BosonMonomial;
use crate::scalar::GaussianRational;

/// Canonical key of one term: χ-order first, then the exponent tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub order: u32,
    pub monomial: BosonMonomial,
}

/// Sum of χ-graded normal-ordered monomials with exact coefficients.
///
/// χ is never stored as a symbol: each term carries its power of χ as an
/// integer grade. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorPolynomial {
    terms: BTreeMap<TermKey, GaussianRational>,
}

/// Products with fewer pairwise multiplications than this stay on one thread.
const PARALLEL_THRESHOLD: usize = 4096;

impl OperatorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term(BosonMonomial::IDENTITY, 0, GaussianRational::one())
    }

    pub fn monomial(m: BosonMonomial) -> Self {
        Self::term(m, 0, GaussianRational::one())
    }

    pub fn term(monomial: BosonMonomial, order: u32, coeff: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(TermKey { order, monomial }, coeff);
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, order: u32, monomial: &BosonMonomial) -> Option<&GaussianRational> {
        self.terms.get(&TermKey { order, monomial: *monomial })
    }

    pub fn max_order(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.order).max()
    }

    pub fn min_order(&self) -> Option<u32> {
        self.terms.keys().next().map(|k| k.order)
    }

    /// Accumulate `coeff` into the term at `key`, dropping it if it cancels.
    pub fn add_term(&mut self, key: TermKey, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn truncate(&self, max_order: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.order <= max_order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Terms of exactly one χ-order.
    pub fn order_slice(&self, order: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.order == order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&GaussianRational::from_real(r.clone()))
    }

    /// Hermitian adjoint: conjugate every coefficient and adjoint every monomial.
    pub fn dagger(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (TermKey { order: k.order, monomial: k.monomial.dagger() }, v.conj()))
                .collect(),
        }
    }

    /// Relabel `a ↔ b`.
    pub fn swap_ab(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (TermKey { order: k.order, monomial: k.monomial.swap_ab() }, v.clone()))
                .collect(),
        }
    }

    /// Normal-ordered product truncated to χ-order `max_order`.
    pub fn multiply(&self, rhs: &Self, max_order: u32) -> Self {
        multiply(self, rhs, max_order)
    }

    pub fn commutator(&self, rhs: &Self, max_order: u32) -> Self {
        commutator(self, rhs, max_order)
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{v}·χ^{}·{}", k.order, k.monomial)?;
        }
        Ok(())
    }
}

impl Add for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn add(self, rhs: Self) -> OperatorPolynomial {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Sub for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn sub(self, rhs: Self) -> OperatorPolynomial {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v);
        }
        out
    }
}

impl Neg for &OperatorPolynomial {
    type Output = OperatorPolynomial;
    fn neg(self) -> OperatorPolynomial {
        OperatorPolynomial { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

fn accumulate_products(
    lhs: &[(&TermKey, &GaussianRational)],
    rhs: &OperatorPolynomial,
    max_order: u32,
) -> HashMap<TermKey, GaussianRational> {
    let mut acc: HashMap<TermKey, GaussianRational> = HashMap::new();
    for (kp, cp) in lhs {
        for (kq, cq) in &rhs.terms {
            let order = kp.order + kq.order;
            if order > max_order {
                continue;
            }
            let c = *cp * cq;
            for (w, m) in kp.monomial.product(&kq.monomial) {
                let term = if w == 1 { c.clone() } else { c.scale_int(&BigInt::from(w)) };
                *acc.entry(TermKey { order, monomial: m }).or_default() += term;
            }
        }
    }
    acc
}

/// Normal-ordered product `P·Q`, dropping every term above `max_order`.
///
/// Work is split over chunks of `P`; partial sums are merged in chunk
/// order, and exact arithmetic makes the result independent of scheduling.
pub fn multiply(p: &OperatorPolynomial, q: &OperatorPolynomial, max_order: u32) -> OperatorPolynomial {
    let lhs: Vec<_> = p.terms.iter().collect();
    let partials: Vec<HashMap<TermKey, GaussianRational>> = if lhs.len() * q.len() < PARALLEL_THRESHOLD {
        vec![accumulate_products(&lhs, q, max_order)]
    } else {
        let chunk = (lhs.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
        lhs.par_chunks(chunk).map(|c| accumulate_products(c, q, max_order)).collect()
    };
    let mut out = OperatorPolynomial::zero();
    for part in partials {
        for (k, v) in part {
            out.add_term(k, v);
        }
    }
    out
}

/// `P·Q − Q·P`, truncated.
pub fn commutator(p: &OperatorPolynomial, q: &OperatorPolynomial, max_order: u32) -> OperatorPolynomial {
    &multiply(p, q, max_order) - &multiply(q, p, max_order)
}

/// Normal-order the ordered product `scalar · χ^chi_order · f₁ f₂ … fₙ`.
pub fn normalize(factors: &[BosonMonomial], scalar: &GaussianRational, chi_order: u32) -> OperatorPolynomial {
    let mut acc = OperatorPolynomial::term(BosonMonomial::IDENTITY, chi_order, scalar.clone());
    for f in factors {
        acc = multiply(&acc, &OperatorPolynomial::monomial(*f), u32::MAX);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mode;

    fn a() -> BosonMonomial {
        BosonMonomial::annihilator(Mode::A)
    }
    fn ad() -> BosonMonomial {
        BosonMonomial::creator(Mode::A)
    }

    #[test]
    fn canonical_commutator() {
        let p = normalize(&[a(), ad()], &GaussianRational::one(), 0);
        let expected = &OperatorPolynomial::monomial(BosonMonomial::new([1, 1, 0, 0, 0, 0])) + &OperatorPolynomial::identity();
        assert_eq!(p, expected);
    }

    #[test]
    fn pump_rewrite() {
        let c = BosonMonomial::annihilator(Mode::C);
        let cd = BosonMonomial::creator(Mode::C);
        let p = normalize(&[c, cd, c], &GaussianRational::one(), 0);
        let expected = &OperatorPolynomial::monomial(BosonMonomial::new([0, 0, 0, 0, 1, 2])) + &OperatorPolynomial::monomial(c);
        assert_eq!(p, expected);
    }

    #[test]
    fn identity_is_neutral_and_truncation_applies() {
        let q = OperatorPolynomial::term(BosonMonomial::new([0, 1, 1, 0, 0, 2]), 3, GaussianRational::i());
        assert_eq!(multiply(&OperatorPolynomial::identity(), &q, 10), q);
        assert!(multiply(&q, &q, 5).is_zero());
        assert_eq!(multiply(&q, &q, 6).max_order(), Some(6));
    }

    #[test]
    fn self_commutator_vanishes() {
        let p = &OperatorPolynomial::term(BosonMonomial::new([1, 0, 1, 0, 0, 1]), 1, GaussianRational::i())
            + &OperatorPolynomial::term(BosonMonomial::new([0, 1, 0, 1, 1, 0]), 1, GaussianRational::i());
        assert!(commutator(&p, &p, 4).is_zero());
    }
}
