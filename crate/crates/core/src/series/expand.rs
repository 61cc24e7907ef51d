//! The pump displacement `c = α + δc` applied to exact operator polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{binomial, BosonMonomial, OperatorPolynomial, TermKey};
use crate::scalar::GaussianRational;

/// An operator monomial in `a, b, δc` times `α^alpha_degree`. The `c`
/// slots of `ops` hold the `δc†, δc` exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpandedMonomial {
    pub ops: BosonMonomial,
    pub alpha_degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpandedKey {
    pub chi_order: u32,
    pub monomial: ExpandedMonomial,
}

impl ExpandedKey {
    /// `s = chi_order − alpha_degree`.
    pub fn suborder(&self) -> i32 {
        self.chi_order as i32 - self.monomial.alpha_degree as i32
    }
}

/// Sum of `χ^n α^d` times normal-ordered monomials, exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpandedPolynomial {
    terms: BTreeMap<ExpandedKey, GaussianRational>,
}

impl ExpandedPolynomial {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExpandedKey, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, chi_order: u32, ops: BosonMonomial, alpha_degree: u32) -> Option<&GaussianRational> {
        self.terms.get(&ExpandedKey { chi_order, monomial: ExpandedMonomial { ops, alpha_degree } })
    }

    fn add(&mut self, key: ExpandedKey, c: GaussianRational) {
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Interpret the `δc` slots as `c` and drop α; `None` if any term
    /// still carries a power of α.
    pub fn into_operator(&self) -> Option<OperatorPolynomial> {
        let mut p = OperatorPolynomial::zero();
        for (k, c) in &self.terms {
            if k.monomial.alpha_degree != 0 {
                return None;
            }
            p.add_term(TermKey { order: k.chi_order, monomial: k.monomial.ops }, c.clone());
        }
        Some(p)
    }
}

fn big(n: u128) -> BigInt {
    BigInt::from(n)
}

/// Replace `c†^t c^u` by `(α + δc†)^t (α + δc)^u`. The result is already
/// normal-ordered since α is a c-number.
pub fn substitute_pump(p: &OperatorPolynomial) -> ExpandedPolynomial {
    let mut out = ExpandedPolynomial::default();
    for (k, c) in p.iter() {
        let e = k.monomial.exponents();
        let (t, u) = (e[4], e[5]);
        for i in 0..=t {
            for j in 0..=u {
                let weight = big(binomial(t, i)) * big(binomial(u, j));
                let ops = BosonMonomial::new([e[0], e[1], e[2], e[3], i, j]);
                let key = ExpandedKey {
                    chi_order: k.order,
                    monomial: ExpandedMonomial { ops, alpha_degree: (t - i) + (u - j) },
                };
                out.add(key, c.scale_int(&weight));
            }
        }
    }
    out
}

/// Inverse substitution `δc = c − α`. Returns a polynomial whose operator
/// slots hold `c`; terms with α left over signal a broken round trip.
pub fn back_substitute(e: &ExpandedPolynomial) -> ExpandedPolynomial {
    let mut out = ExpandedPolynomial::default();
    for (k, c) in e.iter() {
        let ex = k.monomial.ops.exponents();
        let (t, u) = (ex[4], ex[5]);
        for i in 0..=t {
            for j in 0..=u {
                let removed = (t - i) + (u - j);
                let mut weight = big(binomial(t, i)) * big(binomial(u, j));
                if removed % 2 == 1 {
                    weight = -weight;
                }
                let ops = BosonMonomial::new([ex[0], ex[1], ex[2], ex[3], i, j]);
                let key = ExpandedKey {
                    chi_order: k.chi_order,
                    monomial: ExpandedMonomial { ops, alpha_degree: k.monomial.alpha_degree + removed },
                };
                out.add(key, c.scale_int(&weight));
            }
        }
    }
    out
}
