//! Power series truncated at a fixed order.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::poly::{Polynomial, Var};
use crate::rational::Rational;

/// `c_0 + c_1 v + … + c_M v^M + O(v^{M+1})`.
///
/// Binary operations between series of different orders truncate to the
/// smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(var: Var, order: usize) -> Self {
        TruncatedSeries {
            var,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn from_coeffs(var: Var, order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(var, order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_coeffs(p.var(), order, p.coeffs().iter().cloned())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.var, order, self.coeffs.iter().cloned())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn check(&self, other: &Self) -> usize {
        assert_eq!(self.var, other.var, "series variable mismatch");
        self.order().min(other.order())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.var, self.order()), |acc, _| &acc * self)
    }

    /// `self^alpha` for a series with constant term 1, via the coefficient
    /// recurrence obtained from `f · (f^α)' = α f' · f^α`.
    pub fn pow_rational(&self, alpha: &Rational) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "pow_rational needs constant term 1"
        );
        let order = self.order();
        let mut g = Self::zero(self.var, order);
        g.coeffs[0] = Rational::one();
        for m in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let f = &self.coeffs[k];
                if f.is_zero() {
                    continue;
                }
                let weight = alpha * Rational::from_integer(k.into())
                    - Rational::from_integer((m - k).into());
                acc += weight * f * &g.coeffs[m - k];
            }
            g.coeffs[m] = acc / Rational::from_integer(m.into());
        }
        g
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn reciprocal(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "reciprocal needs constant term 1");
        let order = self.order();
        let mut q = Self::zero(self.var, order);
        q.coeffs[0] = Rational::one();
        for m in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc -= &self.coeffs[k] * &q.coeffs[m - k];
                }
            }
            q.coeffs[m] = acc;
        }
        q
    }
}

/// Series `q` with `p · q ≡ 1 (mod v^{order+1})`. Panics unless `p(0) = 1`.
pub fn series_reciprocal(p: &Polynomial, order: usize) -> TruncatedSeries {
    assert!(
        p.coeff(0).is_one(),
        "series_reciprocal requires constant term 1, got {}",
        p.coeff(0)
    );
    TruncatedSeries::from_polynomial(p, order).reciprocal()
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.check(rhs);
        TruncatedSeries::from_coeffs(
            self.var,
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.check(rhs);
        TruncatedSeries::from_coeffs(
            self.var,
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b),
        )
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.check(rhs);
        let mut out = TruncatedSeries::zero(self.var, order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<Rational> {
        s.coeffs().to_vec()
    }

    #[test]
    fn geometric_series() {
        let q = series_reciprocal(&Polynomial::from_integers(Var::X, &[1, -1]), 4);
        assert_eq!(ints(&q), vec![rat(1); 5]);
        let q = series_reciprocal(&Polynomial::from_integers(Var::X, &[1, -2]), 3);
        assert_eq!(ints(&q), vec![rat(1), rat(2), rat(4), rat(8)]);
    }

    #[test]
    fn reciprocal_of_delta_2() {
        // (1-2x)(1-x) = 1 - 3x + 2x^2; by hand 1/(1-2x) * 1/(1-x) = Σ (2^{n+1}-1) x^n
        let d = Polynomial::from_integers(Var::X, &[1, -3, 2]);
        let q = series_reciprocal(&d, 3);
        assert_eq!(ints(&q), vec![rat(1), rat(3), rat(7), rat(15)]);
    }

    #[test]
    #[should_panic(expected = "constant term 1")]
    fn reciprocal_rejects_bad_constant() {
        series_reciprocal(&Polynomial::from_integers(Var::X, &[2, 1]), 3);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = TruncatedSeries::one(Var::X, 5);
        let b = TruncatedSeries::one(Var::X, 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn square_root_of_one_minus_x() {
        // sqrt(1 - x) = 1 - x/2 - x^2/8 - x^3/16 - ...
        let f = TruncatedSeries::from_polynomial(&Polynomial::from_integers(Var::X, &[1, -1]), 3);
        let g = f.pow_rational(&ratio(1, 2));
        assert_eq!(
            ints(&g),
            vec![rat(1), ratio(-1, 2), ratio(-1, 8), ratio(-1, 16)]
        );
        assert_eq!(&g * &g, f);
    }

    proptest! {
        #[test]
        fn reciprocal_round_trip(tail in prop::collection::vec((-9i64..=9, 1i64..=5), 0..6), order in 0usize..12) {
            let mut cs = vec![rat(1)];
            cs.extend(tail.into_iter().map(|(a, b)| ratio(a, b)));
            let p = Polynomial::new(Var::X, cs);
            let prod = &TruncatedSeries::from_polynomial(&p, order) * &series_reciprocal(&p, order);
            prop_assert_eq!(prod, TruncatedSeries::one(Var::X, order));
        }

        #[test]
        fn rational_power_matches_integer_power(tail in prop::collection::vec(-5i64..=5, 0..4), e in 0u32..5) {
            let mut cs = vec![rat(1)];
            cs.extend(tail.into_iter().map(rat));
            let f = TruncatedSeries::from_polynomial(&Polynomial::new(Var::X, cs), 8);
            prop_assert_eq!(f.pow_rational(&rat(e as i64)), f.pow(e));
        }
    }
}
