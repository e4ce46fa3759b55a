//! Closed formulas derived from the catalog: the excedance distribution on
//! CUD permutations, expected numbers of up-down cycles, and permutations
//! without up-down cycles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::catalog::{catalog_with_cap, SequenceId};
use super::numbers::{euler_numbers, factorial};
use super::{MPoly, Marker, Monomial, Rational, Series};
use crate::error::{domain, Result};

/// `Σ_{π ∈ CUD_n} t^{exc(π)}`, read off the odd/even cycle polynomial through
/// `c_o + 2 exc = n`.
pub fn exc_polynomial(n: usize) -> Result<MPoly> {
    let s = catalog_with_cap(SequenceId::CudOddEven, n, n.max(1))?;
    let poly = s.marked().expect("marked entry").egf_term(n);
    let mut out = MPoly::zero();
    for (mono, c) in poly.terms() {
        let odd = mono.exponent(Marker::To) as usize;
        if odd > n || !(n - odd).is_multiple_of(2) {
            return domain(format!("odd-cycle count {odd} incompatible with n = {n}"));
        }
        out.add_term(Monomial::one().with(Marker::T, ((n - odd) / 2) as u16), c.clone());
    }
    Ok(out)
}

/// EGF terms of `[sec(sz) + tan(sz)]^{1/s} / cos(sz)` for a rational
/// `s = √t`, computed exactly. Term `n` equals the excedance polynomial
/// evaluated at `t = s²`.
pub fn exc_closed_form_terms(s: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    if s.is_zero() {
        return domain("need a nonzero square root");
    }
    let sec = Series::<Rational>::sec(n_max).dilate(s);
    let tan = Series::<Rational>::tan(n_max).dilate(s);
    let base = &sec + &tan;
    let power = base.pow(&s.recip())?;
    Ok((&power * &sec).egf_terms())
}

/// `E_0/1! + E_1/2! + ... + E_{n-1}/n!`.
pub fn expected_ud_cycles(n: usize) -> Rational {
    let euler = euler_numbers(n);
    (1..=n).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(euler[k - 1].clone(), factorial(k))
    })
}

/// The same quantity as the ordinary coefficient of `z^n` in
/// `-ln(1 - sin z)/(1 - z)`.
pub fn expected_ud_cycles_from_series(n: usize) -> Result<Rational> {
    let s = catalog_with_cap(SequenceId::AvgUdCycles, n, n)?;
    Ok(s.plain().expect("plain entry").coeff(n).clone())
}

/// `-ln(1 - sin 1)`.
pub fn expected_ud_cycles_limit() -> f64 {
    -(1.0 - 1f64.sin()).ln()
}

/// `r_n`, the number of permutations of `[n]` without up-down cycles, as
/// `n! [z^n] (1 - sin z)/(1 - z)`.
pub fn no_ud_cycles_count(n: usize) -> Result<BigInt> {
    let s = catalog_with_cap(SequenceId::NoUdCycles, n, n)?;
    let term = s.plain().expect("plain entry").egf_term(n);
    debug_assert!(term.is_integer());
    Ok(term.to_integer())
}

/// `r_n / n! = 1/3! - 1/5! + ... + (-1)^m/(2m-1)!` with `n ∈ {2m-1, 2m}`;
/// the sum is empty for `m = 1`.
pub fn no_ud_cycles_ratio(n: usize) -> Rational {
    let m = n.div_ceil(2);
    (2..=m).fold(Rational::zero(), |acc, i| {
        let term = Rational::new(BigInt::one(), factorial(2 * i - 1));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `1 - sin 1`.
pub fn no_ud_cycles_limit() -> f64 {
    1.0 - 1f64.sin()
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Coefficient of `t^k` in a univariate polynomial in `t`.
pub fn t_coefficient(p: &MPoly, k: u16) -> Rational {
    p.coefficient(&Monomial::one().with(Marker::T, k))
}

#[allow(dead_code)]
fn evaluate_t(p: &MPoly, t: &Rational) -> Rational {
    p.eval(Marker::T, t).as_constant().unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat, Coeff};

    #[test]
    fn exc_small() {
        // CUD_2 = {(1)(2), (1,2)}: 1 + t
        let p = exc_polynomial(2).unwrap();
        assert_eq!(p, MPoly::one().plus(&MPoly::var(Marker::T)));
        assert_eq!(exc_polynomial(0).unwrap(), MPoly::one());
        assert_eq!(exc_polynomial(8).unwrap().total(), int(7936));
    }

    #[test]
    fn exc_closed_form_agrees() {
        for s in [rat(1, 2), int(2), int(1)] {
            let terms = exc_closed_form_terms(&s, 8).unwrap();
            let t = &s * &s;
            for (n, term) in terms.iter().enumerate() {
                assert_eq!(*term, evaluate_t(&exc_polynomial(n).unwrap(), &t), "n={n}");
            }
        }
    }

    #[test]
    fn expected_cycles_small() {
        assert_eq!(expected_ud_cycles(3), rat(5, 3));
        assert_eq!(expected_ud_cycles(1), int(1));
        for n in 1..=12 {
            assert_eq!(expected_ud_cycles(n), expected_ud_cycles_from_series(n).unwrap());
        }
    }

    #[test]
    fn no_ud_cycles_small() {
        assert_eq!(no_ud_cycles_count(1).unwrap(), BigInt::zero());
        assert_eq!(no_ud_cycles_count(2).unwrap(), BigInt::zero());
        assert_eq!(no_ud_cycles_count(3).unwrap(), BigInt::one());
        let r8 = Rational::new(no_ud_cycles_count(8).unwrap(), factorial(8));
        let r7 = Rational::new(no_ud_cycles_count(7).unwrap(), factorial(7));
        let formula = rat(1, 6) - rat(1, 120) + rat(1, 5040);
        assert_eq!(r8, formula);
        assert_eq!(r7, formula);
        for n in 1..=20 {
            let r = Rational::new(no_ud_cycles_count(n).unwrap(), factorial(n));
            assert_eq!(r, no_ud_cycles_ratio(n), "n={n}");
        }
    }
}
