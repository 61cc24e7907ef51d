//! Explicit power-sum forms of the second-order coefficients, written with
//! the integer sequences. They are a third coding of each coefficient,
//! independent of both the BCH series and the hyperbolic closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sequences::Sequence;
use crate::closed_forms::ClosedFormId;
use crate::taylor::PowerSeries;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(n: i64) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * k))
}

fn pow(base: i64, e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(base).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn seq(s: Sequence, n: i64) -> BigRational {
    s.value(n).expect("index in domain")
}

/// `Σ_{n ≥ start} weight(n) · x^{power(n)} / fact(n)!` through `degree`.
fn power_sum(
    degree: usize,
    start: i64,
    power: impl Fn(i64) -> i64,
    fact: impl Fn(i64) -> i64,
    weight: impl Fn(i64) -> BigRational,
) -> PowerSeries {
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    let mut n = start;
    while power(n) <= degree as i64 {
        let p = power(n);
        assert!(p >= 0);
        coeffs[p as usize] += weight(n) / factorial(fact(n));
        n += 1;
    }
    PowerSeries::from_fn(degree, |k| coeffs[k].clone())
}

fn nine(n: i64) -> BigRational {
    (pow(9, n) - int(1)) / int(8)
}

fn tri(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n * (n + 1)), BigInt::from(2))
}

/// Sum form of the real magnitude of `id`, or `None` if it has none.
pub fn sum_form(id: ClosedFormId, degree: usize) -> Option<PowerSeries> {
    use ClosedFormId::*;
    let d = degree;
    Some(match id {
        SignalA | MainB => -power_sum(d, 2, |n| 2 * n - 2, |n| 2 * n, |n| nine(n) - tri(n)),
        SignalBdag | MainA => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, |n| seq(Sequence::Y, n)),
        SignalA2B => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, |n| seq(Sequence::A, n) + int(n)),
        SignalABdagB => -power_sum(d, 1, |n| 2 * n - 2, |n| 2 * n, nine),
        SignalAdagABdag => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, |n| seq(Sequence::Y, n) + tri(n)),
        SignalAdagBdag2 => power_sum(d, 2, |n| 2 * n - 2, |n| 2 * n, |n| nine(n) / int(2) - BigRational::new(n.into(), 2.into())),
        SignalAdagA2 => -power_sum(d, 2, |n| 2 * n - 2, |n| 2 * n, |n| nine(n) / int(2) - BigRational::new(n.into(), 2.into())),
        SignalADc2 | SignalADcdag2 => power_sum(d, 1, |n| 2 * n, |n| 2 * n + 2, tri),
        SignalADcdagDc => power_sum(d, 0, |n| 2 * n, |n| 2 * n + 2, |n| int((n + 1) * (n + 1))),
        SignalBdag2B => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, |n| seq(Sequence::A, n)),
        SignalBdagDc2 => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, tri),
        SignalBdagDcdagDc => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, tri) * 2,
        SignalBdagDcdag2 => power_sum(d, 1, |n| 2 * n + 1, |n| 2 * n + 3, tri),
        PumpAlpha | MainC => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 2, |n| seq(Sequence::Z, n)),
        PumpDc | PumpAdagADc | PumpBdagBDc => {
            -power_sum(d, 0, |n| 2 * n, |n| 2 * n + 2, |n| pow(2, 2 * n - 1) * int(2 * n + 2))
        }
        PumpAbDc | PumpAbDcdag => power_sum(d, 1, |n| 2 * n - 1, |n| 2 * n + 1, |n| pow(2, 2 * n - 2) * int(2 * n)),
        PumpAdagBdagDc => power_sum(d, 2, |n| 2 * n - 3, |n| 2 * n - 1, |n| pow(2, 2 * n - 2) * int(n) / int(2)),
        PumpDcdag | PumpAdagADcdag | PumpBdagBDcdag | MainD => {
            -power_sum(d, 1, |n| 2 * n, |n| 2 * n + 2, |n| pow(2, 2 * n) * int(n))
        }
        PumpAdagBdagDcdag => power_sum(d, 1, |n| 2 * n + 1, |n| 2 * n + 3, |n| pow(2, 2 * n) * int(2 * n)),
        _ => return None,
    })
}
