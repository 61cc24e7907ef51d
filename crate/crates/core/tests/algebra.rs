//! Operator algebra: worked examples, commutators of the truncated
//! operators, and property tests against a dense Fock-space representation.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use trilin_core::algebra::json::{from_json, to_json};
use trilin_core::algebra::{
    bch_evolve, commutator, heisenberg, multiply, normalize, trilinear_generator, verify_commutator_order,
    verify_cross_commutators, BosonMonomial, Mode, OperatorPolynomial,
};
use trilin_core::GaussianRational;

fn mono(e: [u32; 6]) -> BosonMonomial {
    BosonMonomial::new(e)
}

fn op(e: [u32; 6]) -> OperatorPolynomial {
    OperatorPolynomial::monomial(mono(e))
}

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

fn fact(n: i64) -> i64 {
    (1..=n).product()
}

#[test]
fn normalize_examples() {
    let a = mono([0, 1, 0, 0, 0, 0]);
    let ad = mono([1, 0, 0, 0, 0, 0]);
    let expected = &op([1, 1, 0, 0, 0, 0]) + &OperatorPolynomial::identity();
    assert_eq!(normalize(&[a, ad], &GaussianRational::one(), 0), expected);

    let c = mono([0, 0, 0, 0, 0, 1]);
    let cd = mono([0, 0, 0, 0, 1, 0]);
    let expected = &op([0, 0, 0, 0, 1, 2]) + &op([0, 0, 0, 0, 0, 1]);
    assert_eq!(normalize(&[c, cd, c], &GaussianRational::one(), 0), expected);
}

#[test]
fn double_commutator_of_signal() {
    let g = trilinear_generator();
    let a = op([0, 1, 0, 0, 0, 0]);
    let dd = commutator(&g, &commutator(&g, &a, 2), 2).scale(&q(1, 2));
    let expected = &OperatorPolynomial::term(mono([0, 1, 1, 1, 0, 0]), 2, q(-1, 2))
        + &OperatorPolynomial::term(mono([0, 1, 0, 0, 1, 1]), 2, q(1, 2));
    assert_eq!(dd, expected);
}

#[test]
fn first_commutators_with_generator() {
    let g = trilinear_generator();
    let mi = -GaussianRational::i();
    assert_eq!(commutator(&g, &op([0, 1, 0, 0, 0, 0]), 1), OperatorPolynomial::term(mono([0, 0, 1, 0, 0, 1]), 1, mi.clone()));
    assert_eq!(commutator(&g, &op([0, 0, 0, 0, 0, 1]), 1), OperatorPolynomial::term(mono([0, 1, 0, 1, 0, 0]), 1, mi));
    assert!(commutator(&g, &g, 2).is_zero());
}

#[test]
fn trilinear_pair_products() {
    let up = op([1, 0, 1, 0, 0, 1]);
    let down = op([0, 1, 0, 1, 1, 0]);
    // a†a b†b c c† = a†a b†b (c†c + 1)
    let ud = multiply(&up, &down, 0);
    assert_eq!(ud, &op([1, 1, 1, 1, 1, 1]) + &op([1, 1, 1, 1, 0, 0]));
    // a a† b b† c†c = (a†a + 1)(b†b + 1) c†c
    let du = multiply(&down, &up, 0);
    assert_eq!(du.len(), 4);
    let d = 5;
    for (prod, l, r) in [(&ud, &up, &down), (&du, &down, &up)] {
        let lhs = matrix(prod, d);
        let rhs = matrix(l, d) * matrix(r, d);
        for &col in &low_states(d, 2) {
            for row in 0..d * d * d {
                assert!((lhs[(row, col)] - rhs[(row, col)]).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn eighth_order_signal_coefficients() {
    let ao = heisenberg(Mode::A, 8).unwrap();
    assert_eq!(ao.coefficient(8, &mono([0, 1, 0, 0, 4, 4])), Some(&q(1, fact(8))));
    assert_eq!(ao.coefficient(6, &mono([0, 1, 1, 1, 2, 2])), Some(&q(-91, fact(6))));
    assert_eq!(ao.coefficient(4, &mono([0, 1, 1, 1, 1, 1])), Some(&q(-10, fact(4))));
}

#[test]
fn dagger_examples() {
    let t = OperatorPolynomial::term(mono([0, 0, 1, 0, 0, 1]), 1, -GaussianRational::i());
    assert_eq!(t.dagger(), OperatorPolynomial::term(mono([0, 0, 0, 1, 1, 0]), 1, GaussianRational::i()));
    assert_eq!(op([1, 1, 0, 0, 0, 0]).dagger(), op([1, 1, 0, 0, 0, 0]));
    let g = trilinear_generator();
    let ao = bch_evolve(&g, &op([0, 1, 0, 0, 0, 0]), 8, usize::MAX).unwrap();
    let adag_o = bch_evolve(&g, &op([1, 0, 0, 0, 0, 0]), 8, usize::MAX).unwrap();
    assert_eq!(ao.dagger(), adag_o);
}

#[test]
fn canonical_commutators_hold_through_truncation_order() {
    for n in [2, 8] {
        for m in Mode::ALL {
            let r = verify_commutator_order(m, n).unwrap();
            assert!(r.passed, "{r:?}");
            assert!(r.lowest_residual_order.is_none_or(|l| l > n));
        }
        for r in verify_cross_commutators(n).unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }
    let r = verify_commutator_order(Mode::C, 0).unwrap();
    assert_eq!(r.lowest_residual_order, None);
}

#[test]
fn monomial_commutators_have_integer_coefficients() {
    for e in [[2, 1, 0, 3, 1, 1], [0, 2, 2, 0, 3, 0], [1, 1, 1, 1, 1, 1]] {
        let m = op(e);
        let c = commutator(&m, &m.dagger(), 0);
        assert!(c.iter().all(|(_, v)| v.is_gaussian_integer()));
    }
}

/// Dense matrix of `p` with χ set to 1 on the cutoff-`d` space of three modes.
fn matrix(p: &OperatorPolynomial, d: usize) -> DMatrix<Complex64> {
    let lower = DMatrix::from_fn(d, d, |i, j| if j == i + 1 { Complex64::new((j as f64).sqrt(), 0.0) } else { Complex64::default() });
    let raise = lower.adjoint();
    let pow = |m: &DMatrix<Complex64>, k: u32| (0..k).fold(DMatrix::identity(d, d), |acc, _| acc * m);
    let mut out = DMatrix::zeros(d * d * d, d * d * d);
    for (k, c) in p.iter() {
        let e = k.monomial.exponents();
        let factor = |i: usize| pow(&raise, e[2 * i]) * pow(&lower, e[2 * i + 1]);
        let (re, im) = c.to_f64_pair();
        out += factor(0).kronecker(&factor(1)).kronecker(&factor(2)) * Complex64::new(re, im);
    }
    out
}

/// Indices of basis states with every occupation at most `max`.
fn low_states(d: usize, max: usize) -> Vec<usize> {
    (0..d * d * d).filter(|i| i / (d * d) <= max && (i / d) % d <= max && i % d <= max).collect()
}

fn small_poly() -> impl Strategy<Value = OperatorPolynomial> {
    let term = (prop::array::uniform6(0u32..=1), 0u32..=2, -3i64..=3, -3i64..=3, 1i64..=3);
    prop::collection::vec(term, 1..=3).prop_map(|terms| {
        let mut p = OperatorPolynomial::zero();
        for (e, order, re, im, den) in terms {
            let c = GaussianRational::new(
                BigRational::new(BigInt::from(re), BigInt::from(den)),
                BigRational::new(BigInt::from(im), BigInt::from(den)),
            );
            p = &p + &OperatorPolynomial::term(mono(e), order, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiply_is_associative(p in small_poly(), q in small_poly(), r in small_poly(), n in 0u32..=6) {
        let left = multiply(&multiply(&p, &q, n), &r, n);
        let right = multiply(&p, &multiply(&q, &r, n), n);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_respect_truncation(p in small_poly(), q in small_poly(), n in 0u32..=4) {
        let prod = multiply(&p, &q, n);
        prop_assert!(prod.max_order().is_none_or(|m| m <= n));
        prop_assert!(prod.iter().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn dagger_is_an_involution(p in small_poly()) {
        prop_assert_eq!(p.dagger().dagger(), p);
    }

    #[test]
    fn commutator_is_antisymmetric(p in small_poly(), q in small_poly()) {
        prop_assert_eq!(commutator(&p, &q, 8), -&commutator(&q, &p, 8));
    }

    #[test]
    fn json_round_trip(p in small_poly()) {
        prop_assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn product_is_a_matrix_homomorphism(p in small_poly(), q in small_poly()) {
        // Occupations stay ≤ 1 + 2 + 2 < d on the tested columns, so the
        // cutoff is never touched.
        let d = 6;
        let lhs = matrix(&multiply(&p, &q, 8), d);
        let rhs = matrix(&p, d) * matrix(&q, d);
        for &col in &low_states(d, 1) {
            for row in 0..d * d * d {
                prop_assert!((lhs[(row, col)] - rhs[(row, col)]).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn heisenberg_prefix_stability() {
    for m in Mode::ALL {
        let long = heisenberg(m, 9).unwrap();
        for n in [0, 3, 8] {
            assert_eq!(long.truncate(n), heisenberg(m, n).unwrap(), "{m} at order {n}");
        }
    }
}
