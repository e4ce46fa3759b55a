//! Convergents of the continued fraction
//! `1/(1 - 1²z/(1 - 2²z/(1 - 3²z/...)))` for `Σ E_{2m} z^m`.

use num_traits::{One, Zero};

use super::{int, Rational, Series};
use crate::series::numbers::euler_numbers;

/// Depth-`depth` convergent as an ordinary power series truncated at `n_max`.
/// Depth 1 is `1/(1 - z)`.
pub fn secant_cf_convergent(depth: usize, n_max: usize) -> Series<Rational> {
    let z = Series::<Rational>::variable(n_max);
    let one = Series::<Rational>::one(n_max);
    let mut tail = one.clone();
    for j in (1..=depth).rev() {
        let j2 = int((j * j) as i64);
        let denom = &one - &(&z.scale_rational(&j2) * &tail);
        tail = denom.reciprocal().expect("constant term 1");
    }
    tail
}

/// Largest `m` such that the convergent matches `E_0, E_2, ..., E_{2m}`
/// coefficientwise through `z^m` (looking no further than `n_max`).
pub fn agreement_order(depth: usize, n_max: usize) -> usize {
    let conv = secant_cf_convergent(depth, n_max);
    let euler = euler_numbers(2 * n_max);
    (0..=n_max)
        .take_while(|&m| *conv.coeff(m) == Rational::from_integer(euler[2 * m].clone()))
        .last()
        .unwrap_or(0)
}

/// Sanity helper: the convergent has nonnegative integer coefficients.
pub fn has_integer_coefficients(s: &Series<Rational>) -> bool {
    s.coeffs().iter().all(|c| c.is_integer() && (c.is_zero() || *c >= Rational::one()))
}
