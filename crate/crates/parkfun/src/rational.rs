//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the crate.

use num::bigint::BigInt;
use num::{BigRational, One, Signed};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Convenience constructor for integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for `n/d`. Panics if `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_is_nonnegative_integer(r: &Rat) -> bool {
    rat_is_integer(r) && !r.numer().is_negative()
}

/// Render a rational as `num` when integral and `num/den` otherwise, so the
/// exact value survives serialization.
pub fn format_rat(r: &Rat) -> String {
    if rat_is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// base^exp for an integer base, exact.
pub fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}
