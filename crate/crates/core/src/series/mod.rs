//! Exact truncated power series.
//!
//! A [`Series`] of order `N` stores the ordinary coefficients `c_0..=c_N` of
//! `Σ c_k z^k`; exponential generating functions are read off with
//! [`Series::egf_terms`]. Coefficients live in any [`Coeff`] ring: exact
//! rationals, or polynomials in the markers of [`poly::Marker`].

pub mod catalog;
pub mod cf;
pub mod formulas;
pub mod numbers;
pub mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, CudError, Result};
use numbers::factorial;

pub use poly::{MPoly, Marker, Monomial};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficient ring for [`Series`]. Rational scalars act on every ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when the element is a unit.
    fn inverse(&self) -> Option<Self>;

    fn negated(&self) -> Self {
        Self::ring_zero().minus(self)
    }

    fn is_ring_one(&self) -> bool {
        *self == Self::ring_one()
    }
}

impl Coeff for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| C::ring_zero())
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::ring_one(), order)
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = C::ring_one();
        }
        s
    }

    /// `Σ a_k z^k / k!` from EGF terms `a_k`.
    pub fn from_egf(terms: Vec<C>) -> Self {
        let coeffs = terms
            .into_iter()
            .enumerate()
            .map(|(k, a)| a.scaled(&Rational::new(BigInt::one(), factorial(k))))
            .collect();
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `k! c_k` for every `k`.
    pub fn egf_terms(&self) -> Vec<C> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scaled(&Rational::from_integer(factorial(k))))
            .collect()
    }

    pub fn egf_term(&self, k: usize) -> C {
        self.coeffs[k].scaled(&Rational::from_integer(factorial(k)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order by truncation");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return domain(format!(
                "series orders differ ({} vs {})",
                self.order(),
                other.order()
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect() })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_ring_zero() && !other.coeffs[k - i].is_ring_zero())
                    .fold(C::ring_zero(), |acc, i| acc.plus(&self.coeffs[i].times(&other.coeffs[k - i])))
            })
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|a| a.scaled(r))
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or_else(|| CudError::Domain("reciprocal needs a unit constant term".into()))?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let s = (1..=n)
                .filter(|&k| !self.coeffs[k].is_ring_zero())
                .fold(C::ring_zero(), |acc, k| acc.plus(&self.coeffs[k].times(&out[n - k])));
            out.push(s.times(&inv0).negated());
        }
        Ok(Self { coeffs: out })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.reciprocal()?)
    }

    /// Formal derivative; the order drops by one (stays 0 for order 0).
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..=self.order())
                .map(|k| self.coeffs[k].scaled(&int(k as i64)))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![C::ring_zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scaled(&rat(1, k as i64 + 1))),
        );
        Self { coeffs }
    }

    /// `exp(a)` for `a` with zero constant term, via `b' = a' b`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_ring_zero() {
            return domain("exp needs a zero constant term");
        }
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(C::ring_one());
        for m in 1..=n {
            let s = (1..=m)
                .filter(|&k| !self.coeffs[k].is_ring_zero())
                .fold(C::ring_zero(), |acc, k| {
                    acc.plus(&self.coeffs[k].times(&out[m - k]).scaled(&int(k as i64)))
                });
            out.push(s.scaled(&rat(1, m as i64)));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(a)` for `a` with constant term 1, as `∫ a'/a`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_ring_one() {
            return domain("log needs constant term 1");
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        let inv = self.truncate(self.order() - 1).reciprocal()?;
        Ok(self.differentiate().checked_mul(&inv)?.integrate())
    }

    /// `a^e = exp(e log a)` for `a` with constant term 1 and any exponent in
    /// the coefficient ring.
    pub fn pow(&self, e: &C) -> Result<Self> {
        if !self.coeffs[0].is_ring_one() {
            return domain("powers need a base with constant term 1");
        }
        self.log()?.scale(e).exp()
    }

    /// `a(s z)`.
    pub fn dilate(&self, s: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.scaled(&pow);
                pow = &pow * s;
                out
            })
            .collect();
        Self { coeffs }
    }
}

impl Series<Rational> {
    pub fn lift(&self) -> Series<MPoly> {
        self.map(|c| MPoly::constant(c.clone()))
    }

    /// Integer EGF terms; `None` if some term is not an integer.
    pub fn integer_egf_terms(&self) -> Option<Vec<BigInt>> {
        self.egf_terms()
            .into_iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }

    pub fn sin(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k % 2 == 1 {
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                Rational::new(BigInt::from(sign), factorial(k))
            } else {
                Rational::zero()
            }
        })
    }

    pub fn cos(order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k % 2 == 0 {
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                Rational::new(BigInt::from(sign), factorial(k))
            } else {
                Rational::zero()
            }
        })
    }

    pub fn sec(order: usize) -> Self {
        Self::cos(order).reciprocal().expect("cos(0) = 1")
    }

    pub fn tan(order: usize) -> Self {
        &Self::sin(order) * &Self::sec(order)
    }

    /// `e^{c z}`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        Self::from_fn(order, |k| {
            num_traits::pow(c.clone(), k) / Rational::from_integer(factorial(k))
        })
    }

    /// `1 / (1 - z)`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::one())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Series<MPoly> {
    /// Substitutes a rational value for one marker.
    pub fn eval_marker(&self, m: Marker, value: &Rational) -> Self {
        self.map(|c| c.eval(m, value))
    }

    /// The rational series, if no marker remains.
    pub fn to_rational(&self) -> Option<Series<Rational>> {
        self.coeffs
            .iter()
            .map(MPoly::as_constant)
            .collect::<Option<Vec<_>>>()
            .map(Series::new)
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Series<C> {
        self.checked_add(rhs).expect("series orders must match")
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Series<C> {
        self.checked_sub(rhs).expect("series orders must match")
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Series<C> {
        self.checked_mul(rhs).expect("series orders must match")
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.map(C::negated)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = Series<Rational>;

    #[test]
    fn product_of_conjugates() {
        let a = S::new(vec![int(1), int(1), int(0)]);
        let b = S::new(vec![int(1), int(-1), int(0)]);
        assert_eq!(&a * &b, S::new(vec![int(1), int(0), int(-1)]));
    }

    #[test]
    fn sec_times_cos_is_one() {
        assert_eq!(&S::sec(10) * &S::cos(10), S::one(10));
    }

    #[test]
    fn tan_times_cos_is_sin() {
        assert_eq!(&S::tan(10) * &S::cos(10), S::sin(10));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert!(S::one(3).checked_add(&S::one(4)).is_err());
        assert!(S::one(3).checked_mul(&S::one(4)).is_err());
    }

    #[test]
    fn exp_and_log_preconditions() {
        assert_eq!(S::zero(5).exp().unwrap(), S::one(5));
        assert!(S::one(5).exp().is_err());
        assert!(S::zero(5).log().is_err());
        assert!(S::zero(5).reciprocal().is_err());
        assert!(S::constant(int(2), 5).pow(&int(3)).is_err());
    }

    #[test]
    fn exp_of_integrals() {
        // exp(∫ sec) = sec + tan and exp(∫ tan) = sec
        let n = 9;
        let e = &S::sec(n) + &S::tan(n);
        assert_eq!(S::sec(n - 1).integrate().exp().unwrap(), e);
        let n = 10;
        assert_eq!(S::tan(n - 1).integrate().exp().unwrap(), S::sec(n));
    }

    #[test]
    fn exp_log_roundtrip() {
        let a = &S::one(12) - &S::sin(12);
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
    }

    #[test]
    fn pow_with_marker_exponent() {
        // (1 - sin z)^{-t}: 2! [z^2] = t + t^2
        let base = (&S::one(4) - &S::sin(4)).lift();
        let t = MPoly::var(Marker::T);
        let s = base.pow(&t.negated()).unwrap();
        let expected = t.plus(&t.times(&t));
        assert_eq!(s.egf_term(2), expected);
        assert_eq!(base.pow(&MPoly::zero()).unwrap(), Series::one(4));
    }

    #[test]
    fn dilation() {
        let s = S::exp_linear(&int(1), 6).dilate(&int(2));
        assert_eq!(s, S::exp_linear(&int(2), 6));
    }

    #[test]
    fn calculus_orders() {
        let s = S::sec(6);
        assert_eq!(s.integrate().order(), 7);
        assert_eq!(s.differentiate().order(), 5);
        assert_eq!(s.integrate().differentiate(), s);
    }
}
