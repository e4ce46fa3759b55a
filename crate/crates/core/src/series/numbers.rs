//! Integer sequences computed by recurrences, independent of the series
//! arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `E_0..=E_{n_max}` from the Seidel–Entringer (boustrophedon) triangle:
/// `e(0,0) = 1`, `e(n,0) = 0`, `e(n,k) = e(n,k-1) + e(n-1,n-k)`, `E_n = e(n,n)`.
pub fn euler_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[n - k];
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

/// Signless Stirling numbers of the first kind; zero when `k > n`.
pub fn stirling_c(n: usize, k: usize) -> BigInt {
    stirling_row(n).get(k).cloned().unwrap_or_default()
}

/// `c(n, 0..=n)` via `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
pub fn stirling_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let carried = if k < m { &row[k] * (m - 1) } else { BigInt::zero() };
            next[k] = &row[k - 1] + carried;
        }
        row = next;
    }
    row
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_euler_numbers() {
        assert_eq!(euler_numbers(7), ints(&[1, 1, 1, 2, 5, 16, 61, 272]));
        assert_eq!(euler_numbers(9)[8], BigInt::from(1385));
        assert_eq!(euler_numbers(9)[9], BigInt::from(7936));
        assert_eq!(euler_numbers(1)[1], BigInt::one());
        assert_eq!(euler_numbers(0), ints(&[1]));
    }

    #[test]
    fn stirling_small() {
        assert_eq!(stirling_row(3), ints(&[0, 2, 3, 1]));
        assert_eq!(stirling_row(3).iter().sum::<BigInt>(), factorial(3));
        for n in 0..10 {
            assert_eq!(stirling_c(n, n), BigInt::one());
            assert_eq!(stirling_row(n).iter().sum::<BigInt>(), factorial(n));
        }
        assert_eq!(stirling_c(3, 5), BigInt::zero());
        assert_eq!(stirling_c(0, 0), BigInt::one());
        assert_eq!(stirling_c(4, 0), BigInt::zero());
    }
}
