//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `x^0 ..= x^N`. Every operation between series of the same order returns a
//! series of that order whose coefficients equal those of the true
//! (untruncated) result.
//!
//! The `checked_*` methods report order mismatches and invertibility
//! failures as [`SeriesError`]. The operator impls on references call the
//! checked versions and panic on a mismatched order, which is always a
//! programming error at the call site.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::factorial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("non-invertible series: constant term is zero")]
    NonInvertible,
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{op} requires constant term {expected}, found {found}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
        found: BigRational,
    },
    #[error("coefficient of x^{degree} is {value}, not an integer")]
    NotIntegral { degree: usize, value: BigRational },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order() + 1)
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    /// Builds a series of order `order` from leading coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut coeffs: Vec<_> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers<I>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Self::from_coeffs(
            order,
            coeffs.into_iter().map(|c| BigRational::from_integer(c.into())),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        Self::from_coeffs(order, [c])
    }

    /// `c * x^degree`, which is the zero series when `degree > order`.
    pub fn monomial(order: usize, degree: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, BigRational::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^n`. Degrees beyond the truncation order are unknown,
    /// so this returns `None` for them.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-truncates to a lower order, or pads with zeros.
    ///
    /// Padding is only meaningful for series that are known to be
    /// polynomials of degree at most the current order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Coefficients as integers, failing on the first non-integral one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(degree, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NotIntegral { degree, value: c.clone() })
                }
            })
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs })
    }

    pub fn checked_div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        self.check_order(divisor)?;
        self.checked_mul(&divisor.reciprocal()?)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`, dropping coefficients pushed past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate().take((n + 1).saturating_sub(k)) {
            coeffs[i + k] = c.clone();
        }
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        // the top coefficient of the derivative is unknown; it is padded with 0
        // and callers only rely on degrees < order
        let n = self.order();
        let mut coeffs: Vec<_> = (1..=n).map(|i| &self.coeffs[i] * q(i as i64)).collect();
        coeffs.push(BigRational::zero());
        Self { coeffs }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `exp(self)`; requires constant term 0.
    ///
    /// Uses `n E_n = sum_{j=1}^{n} j s_j E_{n-j}` with `E_0 = 1`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::ConstantTerm {
                op: "exp",
                expected: "0",
                found: self.constant_term().clone(),
            });
        }
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(BigRational::one());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                let s = &self.coeffs[j];
                if !s.is_zero() {
                    acc += s * q(j as i64) * &out[k - j];
                }
            }
            out.push(acc / q(k as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(self)`; requires constant term 1.
    ///
    /// From `A L' = A'`: `n L_n = n a_n - sum_{j=1}^{n-1} j L_j a_{n-j}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTerm {
                op: "log",
                expected: "1",
                found: self.constant_term().clone(),
            });
        }
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            let mut acc = &self.coeffs[k] * q(k as i64);
            for j in 1..k {
                let a = &self.coeffs[k - j];
                if !a.is_zero() {
                    acc -= &out[j] * q(j as i64) * a;
                }
            }
            out[k] = acc / q(k as i64);
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term 1; requires constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTerm {
                op: "sqrt",
                expected: "1",
                found: self.constant_term().clone(),
            });
        }
        let n = self.order();
        let two = q(2);
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(BigRational::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &out[j] * &out[k - j];
            }
            out.push(acc / &two);
        }
        Ok(Self { coeffs: out })
    }

    /// `outer(inner(x))`; `inner` must have constant term 0.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_order(inner)?;
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::ConstantTerm {
                op: "compose",
                expected: "0",
                found: inner.constant_term().clone(),
            });
        }
        let n = self.order();
        let mut acc = Self::constant(n, self.coeffs[n].clone());
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Catalan numbers through degree `order`, from `C = 1 + x C^2`.
    pub fn catalan(order: usize) -> Self {
        let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
        c.push(BigRational::one());
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 0..k {
                acc += &c[j] * &c[k - 1 - j];
            }
            c.push(acc);
        }
        Self { coeffs: c }
    }

    /// Reads `self` as an exponential generating function and returns the
    /// ordinary series of counts `n! * [x^n]`.
    pub fn egf_to_counts(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * BigRational::from_integer(factorial(n as u64)))
                .collect(),
        }
    }

    /// Inverse of [`egf_to_counts`](Self::egf_to_counts).
    pub fn counts_to_egf(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / BigRational::from_integer(factorial(n as u64)))
                .collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.checked_add(rhs).expect("series add")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.checked_sub(rhs).expect("series sub")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.checked_mul(rhs).expect("series mul")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
