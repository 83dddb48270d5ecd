//! Generalized binomial coefficients and integer rounding helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// `t (t-1) ... (t-k+1) / k!` for any integer `t`, including negative ones.
///
/// `binom(-1, 2) == 1` and `binom(0, 2) == 0`.
pub fn binom(t: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= t - i;
        den *= i + 1;
    }
    // the falling factorial of k consecutive integers is divisible by k!
    num / den
}

/// Ceiling of `a / b` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_ceil(&a, &b)
}

/// Floor of `a / b` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_floor(&a, &b)
}
