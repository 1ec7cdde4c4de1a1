//! Explicit polynomials `a_k(n)`, `b_m(t)`, `p_j(n, t)`, the parts of
//! `φ_i(n, t)` and `ψ_i(n, s)`, and the closed-form sum for `P(n, s)`.
//!
//! The non-polynomial factor `K(t) = 2^{2-t}` is kept out of every stored
//! object: `φ_i(n, t) = K(t) · part(φ_i)(n, t)` and
//! `ψ_i(n, s) = K(s - i) · Q_i(n, s)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::binomial::binom_poly_in_n;
use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Var};
use crate::rational::{factorial, pow2, rat, ratio, Rational};
use crate::series::TruncatedSeries;
use crate::triangle::RunCountTriangle;

pub const NT: (Var, Var) = (Var::N, Var::T);
pub const NS: (Var, Var) = (Var::N, Var::S);

/// `K(s) = 2^{2-s}`.
pub fn k_factor(s: i64) -> Rational {
    pow2(2 - s)
}

/// `a_k(n) = (-1)^k binom((n-3)/2, k)`, a degree-`k` polynomial in `n`.
pub fn a_poly(k: u32) -> Polynomial {
    let p = binom_poly_in_n(&ratio(-3, 2), &ratio(1, 2), k);
    if k % 2 == 1 {
        -&p
    } else {
        p
    }
}

/// `b_m(t) = t (2m+t-1)! / (m! (m+t)! 4^m)` from the factorial definition.
pub fn b_value(m: u64, t: u64) -> Rational {
    assert!(t >= 1, "b_m(t) needs t >= 1");
    let num = BigUint::from(t) * factorial(2 * m + t - 1);
    let den = factorial(m) * factorial(m + t) * (BigUint::one() << (2 * m));
    Rational::new(num.into(), den.into())
}

/// `b_m(t)` as the degree-`m` polynomial `t ∏_{j=m+1}^{2m-1} (t + j) / (m! 4^m)`
/// for `m >= 1`, and the constant 1 for `m = 0`.
pub fn b_poly(m: u32) -> Polynomial {
    if m == 0 {
        return Polynomial::one(Var::T);
    }
    let mut acc = Polynomial::linear(Var::T, Rational::zero(), Rational::one());
    for j in (m + 1)..=(2 * m).saturating_sub(1) {
        acc = &acc * &Polynomial::linear(Var::T, rat(j as i64), Rational::one());
    }
    let den = factorial(m as u64) * (BigUint::one() << (2 * m));
    acc.scale(&Rational::new(BigInt::one(), den.into()))
}

/// `p_j(n, t) = Σ_{k=0}^{j} a_k(n) b_{j-k}(t)`.
pub fn p_poly(j: u32) -> BivariatePolynomial {
    let mut acc = BivariatePolynomial::zero(NT);
    for k in 0..=j {
        let a = BivariatePolynomial::from_first(&a_poly(k), Var::T);
        let b = BivariatePolynomial::from_second(Var::N, &b_poly(j - k));
        acc = &acc + &(&a * &b);
    }
    acc
}

/// `p_0 … p_{j_max}`.
pub fn p_polys(j_max: u32) -> Vec<BivariatePolynomial> {
    (0..=j_max).map(p_poly).collect()
}

/// `g_{i,j}`: `δ_{j,i/2} + δ_{j,i/2-1}` for even `i`, `-2 δ_{j,(i-1)/2}` for odd `i`.
pub fn g_coefficient(i: u32, j: u32) -> i64 {
    if i.is_multiple_of(2) {
        let h = i / 2;
        (j == h) as i64 + (h >= 1 && j == h - 1) as i64
    } else {
        -2 * (j == (i - 1) / 2) as i64
    }
}

/// Polynomial parts of `φ_0 … φ_{i_max}`:
/// `part(φ_{2j}) = p_j + p_{j-1}`, `part(φ_{2j+1}) = -2 p_j`.
pub fn phi_parts(i_max: u32) -> Vec<BivariatePolynomial> {
    let ps = p_polys(i_max / 2);
    (0..=i_max).map(|i| phi_part_from(&ps, i)).collect()
}

fn phi_part_from(ps: &[BivariatePolynomial], i: u32) -> BivariatePolynomial {
    let mut acc = BivariatePolynomial::zero(NT);
    for j in 0..=i / 2 {
        let g = g_coefficient(i, j);
        if g != 0 {
            acc = &acc + &ps[j as usize].scale(&rat(g));
        }
    }
    acc
}

/// `ψ_i(n, s) = K(s - i) · Q_i(n, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiPolynomial {
    pub index: u32,
    pub q: BivariatePolynomial,
}

impl PsiPolynomial {
    /// Full value `K(s - i) Q_i(n, s)`.
    pub fn eval(&self, n: i64, s: i64) -> Rational {
        k_factor(s - self.index as i64) * self.q.eval(&rat(n), &rat(s))
    }
}

/// `Q_0 … Q_{i_max}`, with `Q_i(n, s) = part(φ_i)(n, s - i)`.
pub fn psi_polys(i_max: u32) -> Vec<PsiPolynomial> {
    phi_parts(i_max)
        .into_iter()
        .enumerate()
        .map(|(i, phi)| PsiPolynomial {
            index: i as u32,
            q: phi.substitute_second(Var::S, &rat(-(i as i64))),
        })
        .collect()
}

/// Closed-form evaluator for `P(n, s) = Σ_{i<s} K(s-i) (s-i)^n Q_i(n, s)`,
/// holding the `Q_i` it needs.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    psi: Vec<PsiPolynomial>,
}

impl ClosedForm {
    /// Evaluator valid for `s <= s_max`.
    pub fn new(s_max: usize) -> Self {
        ClosedForm {
            psi: psi_polys(s_max.saturating_sub(1) as u32),
        }
    }

    /// Uses a caller-supplied family, e.g. a deliberately corrupted one.
    pub fn with_family(psi: Vec<PsiPolynomial>) -> Self {
        ClosedForm { psi }
    }

    pub fn s_max(&self) -> usize {
        self.psi.len()
    }

    /// The exact rational sum, before any integrality check.
    pub fn sum(&self, n: usize, s: usize) -> Rational {
        let mut total = Rational::zero();
        for (i, psi) in self.psi.iter().take(s).enumerate() {
            let base = BigInt::from(s - i);
            let power = Rational::from_integer(num_traits::pow(base, n));
            total += power * psi.eval(n as i64, s as i64);
        }
        total
    }

    /// `P(n, s)`; zero outside `1 <= s <= n - 1`.
    pub fn count(&self, n: usize, s: usize) -> Result<BigUint> {
        if n < 2 {
            return Err(Error::OutOfDomain(format!(
                "closed form needs n >= 2, got {n}"
            )));
        }
        if s < 1 || s >= n {
            return Ok(BigUint::zero());
        }
        if s > self.s_max() {
            return Err(Error::OutOfDomain(format!(
                "closed form built for s <= {}, asked for s = {s}",
                self.s_max()
            )));
        }
        let value = self.sum(n, s);
        if !value.is_integer() {
            return Err(Error::NonIntegerResult {
                n,
                s,
                value: Box::new(value),
            });
        }
        let int = value.to_integer();
        if int.is_negative() {
            return Err(Error::NegativeResult { n, s, value: int });
        }
        Ok(int.to_biguint().expect("nonnegative"))
    }

    pub fn triangle(&self, n_max: usize) -> Result<RunCountTriangle> {
        let rows = (2..=n_max)
            .map(|n| (1..n).map(|s| self.count(n, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RunCountTriangle::from_rows(rows)
    }
}

/// `(1-x)^2 (1-x^2)^{(n-3)/2} (2/(1+√(1-x²)))^t` to `x^order`, built from
/// series powers alone. Times `K(t)` this is `Σ_i φ_i(n,t) x^i`.
pub fn f_series(n: i64, t: i64, order: usize) -> TruncatedSeries {
    let one_minus_x_sq =
        TruncatedSeries::from_polynomial(&Polynomial::from_integers(Var::X, &[1, 0, -1]), order);
    let sqrt = one_minus_x_sq.pow_rational(&ratio(1, 2));
    // (1 + √(1-x²)) / 2 has constant term 1
    let half_sum = (&TruncatedSeries::one(Var::X, order) + &sqrt).scale(&ratio(1, 2));
    let ratio_pow = half_sum.reciprocal().pow(t as u32);
    let middle = one_minus_x_sq.pow_rational(&ratio(n - 3, 2));
    let front =
        TruncatedSeries::from_polynomial(&Polynomial::from_integers(Var::X, &[1, -2, 1]), order);
    &(&front * &middle) * &ratio_pow
}

/// Same series assembled from `Σ_k a_k(n) x^{2k}` and `Σ_m b_m(t) x^{2m}`.
pub fn f_series_from_ab(n: i64, t: u64, order: usize) -> TruncatedSeries {
    let even = |f: &dyn Fn(u32) -> Rational| {
        let coeffs = (0..=order).map(|i| {
            if i.is_multiple_of(2) {
                f((i / 2) as u32)
            } else {
                Rational::zero()
            }
        });
        TruncatedSeries::from_coeffs(Var::X, order, coeffs)
    };
    let a = even(&|k| a_poly(k).eval(&rat(n)));
    let b = even(&|m| b_value(m as u64, t));
    let front =
        TruncatedSeries::from_polynomial(&Polynomial::from_integers(Var::X, &[1, -2, 1]), order);
    &(&front * &a) * &b
}

/// `P(n, s)` from the closed form.
pub fn p_closed_form(n: usize, s: usize) -> Result<BigUint> {
    ClosedForm::new(s.max(1)).count(n, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_values() {
        assert_eq!(k_factor(2), rat(1));
        assert_eq!(k_factor(1), rat(2));
        assert_eq!(k_factor(5), ratio(1, 8));
    }

    #[test]
    fn a_values() {
        assert_eq!(a_poly(0), Polynomial::one(Var::N));
        assert_eq!(
            a_poly(1),
            Polynomial::new(Var::N, vec![ratio(3, 2), ratio(-1, 2)])
        );
        assert_eq!(a_poly(2).eval(&rat(7)), rat(1));
    }

    #[test]
    fn b_values() {
        for t in 1..10 {
            assert_eq!(b_value(0, t), rat(1));
        }
        assert_eq!(b_value(1, 2), ratio(1, 2));
        assert_eq!(b_value(2, 1), ratio(1, 8));
        assert_eq!(b_poly(0), Polynomial::one(Var::T));
        assert_eq!(
            b_poly(1),
            Polynomial::new(Var::T, vec![rat(0), ratio(1, 4)])
        );
        assert_eq!(b_poly(2).eval(&rat(1)), ratio(1, 8));
    }

    #[test]
    fn b_polynomial_interpolates_factorial_form() {
        for m in 0..=12u32 {
            assert_eq!(b_poly(m).degree(), m as i64);
            for t in 1..=20u64 {
                assert_eq!(
                    b_poly(m).eval(&rat(t as i64)),
                    b_value(m as u64, t),
                    "m={m} t={t}"
                );
            }
        }
    }

    #[test]
    fn p_values() {
        assert_eq!(p_poly(0), BivariatePolynomial::one(NT));
        let p1 = p_poly(1);
        // t/4 + (3 - n)/2
        assert_eq!(p1.coeff(0, 1), ratio(1, 4));
        assert_eq!(p1.coeff(1, 0), ratio(-1, 2));
        assert_eq!(p1.coeff(0, 0), ratio(3, 2));
        assert_eq!(p1.num_terms(), 3);
        assert_eq!(p1.eval(&rat(3), &rat(2)), ratio(1, 2));
        for j in 0..6 {
            assert_eq!(p_poly(j).degree_first(), j as i64);
            assert_eq!(p_poly(j).degree_second(), j as i64);
        }
    }

    #[test]
    fn g_table() {
        assert_eq!(g_coefficient(0, 0), 1);
        assert_eq!(g_coefficient(1, 0), -2);
        assert_eq!(g_coefficient(2, 0), 1);
        assert_eq!(g_coefficient(2, 1), 1);
        assert_eq!(g_coefficient(3, 0), 0);
        assert_eq!(g_coefficient(3, 1), -2);
        assert_eq!(g_coefficient(4, 0), 0);
    }

    #[test]
    fn phi_parts_low_order() {
        let phi = phi_parts(2);
        assert_eq!(phi[0], BivariatePolynomial::one(NT));
        assert_eq!(phi[1], BivariatePolynomial::constant(NT, rat(-2)));
        assert_eq!(phi[2], &p_poly(1) + &p_poly(0));
    }

    #[test]
    fn psi_low_order() {
        let psi = psi_polys(3);
        // (-2n + s + 8)/4
        let q2 = &psi[2].q;
        assert_eq!(q2.coeff(1, 0), ratio(-1, 2));
        assert_eq!(q2.coeff(0, 1), ratio(1, 4));
        assert_eq!(q2.coeff(0, 0), rat(2));
        assert_eq!(q2.num_terms(), 3);
        // (2n - s - 3)/2
        let q3 = &psi[3].q;
        assert_eq!(q3.coeff(1, 0), rat(1));
        assert_eq!(q3.coeff(0, 1), ratio(-1, 2));
        assert_eq!(q3.coeff(0, 0), ratio(-3, 2));
        assert_eq!(q3.num_terms(), 3);
    }

    #[test]
    fn psi_degree_in_n_is_exact() {
        for psi in psi_polys(12) {
            assert_eq!(
                psi.q.degree_first(),
                (psi.index / 2) as i64,
                "i={}",
                psi.index
            );
        }
    }

    #[test]
    fn small_closed_form_values() {
        assert_eq!(p_closed_form(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(p_closed_form(3, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(p_closed_form(4, 3).unwrap(), BigUint::from(10u32));
        assert_eq!(p_closed_form(5, 5).unwrap(), BigUint::zero());
        assert_eq!(p_closed_form(5, 0).unwrap(), BigUint::zero());
        assert!(p_closed_form(1, 1).is_err());
    }

    #[test]
    fn corrupted_family_is_caught_by_integrality_or_value() {
        let mut psi = psi_polys(3);
        psi[1].q.add_term(0, 0, ratio(1, 3));
        let cf = ClosedForm::with_family(psi);
        assert!(matches!(
            cf.count(5, 2),
            Err(Error::NonIntegerResult { .. })
        ));
    }
}
