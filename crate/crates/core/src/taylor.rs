//! Truncated power series in χ′ with exact rational coefficients.
//!
//! cosh and sinh are expanded from their defining series, so every closed
//! form built here has exactly known Taylor coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::ratio_to_f64;

/// Coefficients `c[0..=degree]` of `Σ c_k x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl PowerSeries {
    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); degree + 1] }
    }

    pub fn constant(value: BigRational, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = value;
        s
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(BigRational::one(), degree)
    }

    /// `x^power`, truncated at `degree`.
    pub fn x_pow(power: usize, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if power <= degree {
            s.coeffs[power] = BigRational::one();
        }
        s
    }

    /// Build from an explicit coefficient generator `k ↦ c_k`.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> BigRational) -> Self {
        Self { coeffs: (0..=degree).map(f).collect() }
    }

    /// `cosh(k·x) = Σ k^{2n} x^{2n} / (2n)!`.
    pub fn cosh(k: i64, degree: usize) -> Self {
        Self::from_fn(degree, |j| {
            if j % 2 == 0 {
                BigRational::new(BigInt::from(k).pow(j as u32), fact(j))
            } else {
                BigRational::zero()
            }
        })
    }

    /// `sinh(k·x) = Σ k^{2n+1} x^{2n+1} / (2n+1)!`.
    pub fn sinh(k: i64, degree: usize) -> Self {
        Self::from_fn(degree, |j| {
            if j % 2 == 1 {
                BigRational::new(BigInt::from(k).pow(j as u32), fact(j))
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&BigRational::new(num.into(), den.into()))
    }

    /// Divide by `x^m`. The removable singularity must be genuine: the
    /// first `m` coefficients have to vanish, otherwise `None`.
    pub fn div_x_pow(&self, m: usize) -> Option<Self> {
        if self.coeffs.len() <= m || self.coeffs[..m].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self { coeffs: self.coeffs[m..].to_vec() })
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, BigRational::zero());
        Self { coeffs }
    }

    /// Leading nonzero `(power, coefficient)`, if any.
    pub fn leading(&self) -> Option<(usize, BigRational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone()))
    }

    /// Horner evaluation of the truncated series in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + ratio_to_f64(c))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(ratio_to_f64).collect()
    }
}

impl Add for PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> Self {
        let d = self.degree().min(rhs.degree());
        Self { coeffs: (0..=d).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> Self {
        let d = self.degree().min(rhs.degree());
        Self { coeffs: (0..=d).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> Self {
        let d = self.degree().min(rhs.degree());
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }
}

impl Mul<i64> for PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: i64) -> Self {
        self.scale(&BigRational::from_integer(rhs.into()))
    }
}
