//! Exact integer helpers shared by the face-vector and bound modules.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient `C(a, b)` with the convention `C(a, b) = 0` when
/// `b < 0` or `b > a`.
///
/// Panics if `a < 0`; every summation in this crate keeps the upper index
/// nonnegative, so a negative one is a logic error.
pub fn binomial(a: i64, b: i64) -> BigInt {
    assert!(a >= 0, "binomial C({a}, {b}) with negative upper index");
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    BigInt::from(acc)
}

/// `2^e` as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}
