//! Binomial coefficients with rational or polynomial upper argument.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{Polynomial, Var};
use crate::rational::{factorial, Rational};

/// `top·(top-1)···(top-k+1) / k!`
pub fn binom_rational(top: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = top.clone();
    for j in 1..=k {
        acc *= &factor;
        acc /= Rational::from_integer(BigInt::from(j));
        factor -= Rational::one();
    }
    acc
}

/// Integer binomial with the usual convention that it vanishes unless `0 <= k <= n`.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// The degree-`k` polynomial `∏_{j<k} (scale·n + shift - j) / k!` in `n`.
pub fn binom_poly_in_n(shift: &Rational, scale: &Rational, k: u32) -> Polynomial {
    let mut acc = Polynomial::one(Var::N);
    for j in 0..k {
        let factor = Polynomial::linear(
            Var::N,
            shift - Rational::from_integer(BigInt::from(j)),
            scale.clone(),
        );
        acc = &acc * &factor;
    }
    let kf = Rational::from_integer(factorial(k as u64).into());
    acc.scale(&(Rational::one() / kf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn half_integer_tops() {
        assert_eq!(binom_rational(&ratio(-3, 2), 0), rat(1));
        assert_eq!(binom_rational(&ratio(-3, 2), 1), ratio(-3, 2));
        assert_eq!(binom_rational(&ratio(5, 2), 2), ratio(15, 8));
    }

    #[test]
    fn polynomial_form() {
        let half = ratio(1, 2);
        let shift = ratio(-3, 2);
        assert_eq!(binom_poly_in_n(&shift, &half, 0), Polynomial::one(Var::N));
        // (n-3)/2
        assert_eq!(
            binom_poly_in_n(&shift, &half, 1),
            Polynomial::new(Var::N, vec![ratio(-3, 2), ratio(1, 2)])
        );
        // (n-3)(n-5)/8 = (n^2 - 8n + 15)/8
        assert_eq!(
            binom_poly_in_n(&shift, &half, 2),
            Polynomial::new(Var::N, vec![ratio(15, 8), rat(-1), ratio(1, 8)])
        );
    }

    #[test]
    fn integer_binomials() {
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(2, 3), BigInt::zero());
        assert_eq!(binom_int(4, -1), BigInt::zero());
        assert_eq!(binom_int(0, 0), BigInt::one());
    }

    proptest! {
        #[test]
        fn rational_agrees_with_integer(m in 0i64..30, k in 0i64..30) {
            prop_assume!(k <= m);
            prop_assert_eq!(binom_rational(&rat(m), k as u32), Rational::from_integer(binom_int(m, k)));
        }

        #[test]
        fn polynomial_agrees_with_rational(
            num in -50i64..50, den in 1i64..7,
            shift_n in -7i64..7, shift_d in 1i64..4,
            scale_n in -4i64..4, scale_d in 1i64..4,
            k in 0u32..7,
        ) {
            let n0 = ratio(num, den);
            let shift = ratio(shift_n, shift_d);
            let scale = ratio(scale_n, scale_d);
            let p = binom_poly_in_n(&shift, &scale, k);
            prop_assert_eq!(p.eval(&n0), binom_rational(&(&scale * &n0 + &shift), k));
        }
    }
}
