//! Arbitrary-precision rationals and a few helpers used throughout.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Converts a rational to a nonnegative integer if it is one.
pub fn to_natural(r: &Rational) -> Option<BigUint> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_biguint()
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Greatest common divisor of the (integer) values, always nonnegative.
pub fn content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow2_both_signs() {
        assert_eq!(pow2(0), rat(1));
        assert_eq!(pow2(3), rat(8));
        assert_eq!(pow2(-3), ratio(1, 8));
    }

    #[test]
    fn lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(rat(5).to_string(), "5");
    }

    #[test]
    fn naturals() {
        assert_eq!(to_natural(&rat(7)), Some(BigUint::from(7u32)));
        assert_eq!(to_natural(&rat(-7)), None);
        assert_eq!(to_natural(&ratio(7, 2)), None);
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
