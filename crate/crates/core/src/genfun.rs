//! Rational generating functions: the auxiliary `A_k(z)` built from the
//! polynomials `Ã_k(z)` and `Φ̃_k(z)`, and the fixed-`s` generating function
//! `u_s(x) = Σ_n P(n,s) x^n = Φ_s(x) / Δ_s(x)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binomial::{binom_int, binom_rational};
use crate::closed_form::{b_value, g_coefficient, k_factor};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Var};
use crate::rational::{pow2, rat, ratio, Rational};
use crate::series::{series_reciprocal, TruncatedSeries};

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `Ã_k(z) = z^{2k+1} + binom(-3/2, k) Σ_{m=0}^{k} binom(k, m) (-1)^{k+m} / (2m+1) · z^{2k-2m}`.
pub fn atilde_poly(k: u32) -> Polynomial {
    let k_us = k as usize;
    let mut coeffs = vec![Rational::zero(); 2 * k_us + 2];
    coeffs[2 * k_us + 1] = Rational::one();
    let pre = binom_rational(&ratio(-3, 2), k);
    for m in 0..=k as i64 {
        let term = int(binom_int(k as i64, m)) * sign(k as i64 + m) / rat(2 * m + 1);
        coeffs[2 * (k_us - m as usize)] += &pre * term;
    }
    Polynomial::new(Var::Z, coeffs)
}

/// `Σ_{m=0}^{⌊k/2⌋} binom(k,m) binom(2k-2m, k-2m) (-1)^m (k+1) / (2m+1)`.
pub fn wz_sum(k: u32) -> Rational {
    let k = k as i64;
    (0..=k / 2)
        .map(|m| {
            int(binom_int(k, m) * binom_int(2 * k - 2 * m, k - 2 * m)) * sign(m) * rat(k + 1)
                / rat(2 * m + 1)
        })
        .sum()
}

/// Whether [`wz_sum`] equals `4^k` exactly.
pub fn verify_wz_sum(k: u32) -> bool {
    wz_sum(k) == pow2(2 * k as i64)
}

/// `ã_k(0..=k)` from the explicit formula
/// `(-1)^p [binom(2k+1, k+p+1) - binom(-3/2,k) Σ_{m=0}^{⌊(k-p-1)/2⌋} binom(k,m) binom(2k-2m, k+p+1) (-1)^{k+m}/(2m+1)]`.
pub fn atilde_coeffs_formula(k: u32) -> Vec<Rational> {
    let k = k as i64;
    let pre = binom_rational(&ratio(-3, 2), k as u32);
    (0..=k)
        .map(|p| {
            let upper = (k - p - 1).div_euclid(2);
            let correction: Rational = (0..=upper)
                .map(|m| {
                    int(binom_int(k, m) * binom_int(2 * k - 2 * m, k + p + 1)) * sign(k + m)
                        / rat(2 * m + 1)
                })
                .sum();
            sign(p) * (int(binom_int(2 * k + 1, k + p + 1)) - &pre * correction)
        })
        .collect()
}

/// `ã_k(0..=k)` by dividing `(1+z)^{k+1}` out of `Ã_k` and Taylor-expanding
/// the quotient about `z = -1`.
pub fn atilde_coeffs_division(k: u32) -> Result<Vec<Rational>> {
    let factor = Polynomial::from_integers(Var::Z, &[1, 1]).pow(k + 1);
    let quotient = atilde_poly(k).div_exact(&factor)?;
    let around = quotient.shift(&rat(-1));
    let s = sign(k as i64);
    Ok((0..=k as usize).map(|p| &s * around.coeff(p)).collect())
}

/// `ã_k(0..=k)`, computed both ways; disagreement is an [`Error::Mismatch`].
pub fn atilde_taylor_coeffs(k: u32) -> Result<Vec<Rational>> {
    let formula = atilde_coeffs_formula(k);
    let taylor = atilde_coeffs_division(k)?;
    for (p, (f, t)) in formula.iter().zip(&taylor).enumerate() {
        if f != t {
            return Err(Error::Mismatch {
                k: k as usize,
                p,
                formula: f.to_string(),
                taylor: t.to_string(),
            });
        }
    }
    Ok(formula)
}

/// `Φ̃_k(z) = z² Σ_p ã_k(p) (1+z)^p` from the given coefficients.
pub fn phi_tilde_from(coeffs: &[Rational]) -> Polynomial {
    let one_plus_z = Polynomial::from_integers(Var::Z, &[1, 1]);
    let mut acc = Polynomial::zero(Var::Z);
    for c in coeffs.iter().rev() {
        acc = &(&acc * &one_plus_z) + &Polynomial::constant(Var::Z, c.clone());
    }
    &acc * &Polynomial::monomial(Var::Z, Rational::one(), 2)
}

pub fn phi_tilde(k: u32) -> Result<Polynomial> {
    Ok(phi_tilde_from(&atilde_taylor_coeffs(k)?))
}

/// Everything known about `Ã_k` for one `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtildeData {
    pub k: u32,
    pub atilde: Polynomial,
    pub atilde_coeffs: Vec<Rational>,
    pub phi_tilde: Polynomial,
}

impl AtildeData {
    pub fn new(k: u32) -> Result<Self> {
        let atilde_coeffs = atilde_taylor_coeffs(k)?;
        Ok(AtildeData {
            k,
            atilde: atilde_poly(k),
            phi_tilde: phi_tilde_from(&atilde_coeffs),
            atilde_coeffs,
        })
    }

    /// `(-1)^k Σ_p ã_k(p) (1+z)^{k+p+1}`, which must equal `Ã_k`.
    pub fn reconstruct(&self) -> Polynomial {
        let one_plus_z = Polynomial::from_integers(Var::Z, &[1, 1]);
        let mut acc = Polynomial::zero(Var::Z);
        for (p, c) in self.atilde_coeffs.iter().enumerate() {
            let term = one_plus_z.pow(self.k + p as u32 + 1).scale(c);
            acc = &acc + &term;
        }
        acc.scale(&sign(self.k as i64))
    }
}

/// `∏ (1 - c·v)^e` kept in factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredDenominator {
    pub var: Var,
    pub factors: Vec<(Rational, u32)>,
}

impl FactoredDenominator {
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(self.var), |acc, (c, e)| {
                &acc * &Polynomial::one_minus(self.var, c.clone()).pow(*e)
            })
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

/// `B(v) / (1 - c·v)^e`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionTerm {
    pub numerator: Polynomial,
    pub c: Rational,
    pub e: u32,
}

impl PartialFractionTerm {
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let den = Polynomial::one_minus(self.numerator.var(), self.c.clone()).pow(self.e);
        &TruncatedSeries::from_polynomial(&self.numerator, order) * &series_reciprocal(&den, order)
    }
}

/// A rational generating function `numerator / ∏(1 - c·v)^e`, optionally
/// together with a partial-fraction form over the same denominator factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Polynomial,
    pub denominator: FactoredDenominator,
    pub partial_fractions: Option<Vec<PartialFractionTerm>>,
}

impl RationalGF {
    pub fn var(&self) -> Var {
        self.numerator.var()
    }

    /// Coefficients `0..=order` from numerator times the reciprocal denominator.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        let den = self.denominator.expand();
        &TruncatedSeries::from_polynomial(&self.numerator, order) * &series_reciprocal(&den, order)
    }

    /// Coefficients `0..=order` summed term by term from the partial fractions.
    pub fn partial_fraction_series(&self, order: usize) -> Option<TruncatedSeries> {
        let terms = self.partial_fractions.as_ref()?;
        Some(
            terms
                .iter()
                .fold(TruncatedSeries::zero(self.var(), order), |acc, t| {
                    &acc + &t.series(order)
                }),
        )
    }

    /// Numerator over the full denominator obtained by clearing the
    /// partial-fraction denominators.
    pub fn clear_denominators(&self) -> Option<Result<Polynomial>> {
        let terms = self.partial_fractions.as_ref()?;
        Some(clear_denominators(&self.denominator, terms))
    }

    /// Both forms present and clearing reproduces the numerator.
    pub fn is_consistent(&self) -> bool {
        match self.clear_denominators() {
            Some(Ok(num)) => num == self.numerator,
            Some(Err(_)) => false,
            None => true,
        }
    }
}

fn clear_denominators(
    den: &FactoredDenominator,
    terms: &[PartialFractionTerm],
) -> Result<Polynomial> {
    let full = den.expand();
    let mut acc = Polynomial::zero(den.var);
    for term in terms {
        let own = Polynomial::one_minus(den.var, term.c.clone()).pow(term.e);
        let cofactor = full.div_exact(&own)?;
        acc = &acc + &(&term.numerator * &cofactor);
    }
    Ok(acc)
}

/// `A_k(z) = Σ_{n>=2} a_k(n) z^n = Φ̃_k(z) / (1 - z)^{k+1}`.
pub fn a_k_gf(k: u32) -> Result<RationalGF> {
    Ok(RationalGF {
        numerator: phi_tilde(k)?,
        denominator: FactoredDenominator {
            var: Var::Z,
            factors: vec![(Rational::one(), k + 1)],
        },
        partial_fractions: None,
    })
}

/// Factor exponent of `(1 - (s-i)x)` in `Δ_s`.
fn delta_exponent(i: u32) -> u32 {
    i / 2 + 1
}

/// `Δ_s(x) = ∏_{i=0}^{s-1} (1 - (s-i)x)^{⌊i/2⌋+1}` in factored form.
pub fn delta(s: u32) -> FactoredDenominator {
    assert!(s >= 1, "Δ_s needs s >= 1");
    FactoredDenominator {
        var: Var::X,
        factors: (0..s)
            .map(|i| (rat((s - i) as i64), delta_exponent(i)))
            .collect(),
    }
}

pub fn delta_poly(s: u32) -> Polynomial {
    delta(s).expand()
}

/// `⌈s(s+2)/4⌉`, the degree of `Δ_s`.
pub fn delta_degree(s: u32) -> i64 {
    let s = s as i64;
    (s * (s + 2) + 3) / 4
}

/// `B_{i,k}(x, t) = K(t) Φ̃_k(t x) Σ_{j=k}^{⌊i/2⌋} g_{i,j} b_{j-k}(t)`.
pub fn b_numerator(i: u32, k: u32, t: u32, phi_tilde_k: &Polynomial) -> Polynomial {
    assert!(k <= i / 2 && t >= 1, "B_{{i,k}} needs k <= i/2 and t >= 1");
    let weight: Rational = (k..=i / 2)
        .map(|j| rat(g_coefficient(i, j)) * b_value((j - k) as u64, t as u64))
        .sum();
    phi_tilde_k
        .substitute_scaled(&rat(t as i64), Var::X)
        .scale(&(k_factor(t as i64) * weight))
}

/// `B_{i,k}(x, t)` with `Φ̃_k` computed on the spot.
pub fn b_polys(i: u32, k: u32, t: u32) -> Result<Polynomial> {
    Ok(b_numerator(i, k, t, &phi_tilde(k)?))
}

/// Terms `B_{i,k}(x, s-i) / (1 - (s-i)x)^{k+1}` of `u_s`.
pub fn u_s_partial_fractions(s: u32) -> Result<Vec<PartialFractionTerm>> {
    assert!(s >= 1, "u_s needs s >= 1");
    let tildes = (0..=(s - 1) / 2)
        .map(phi_tilde)
        .collect::<Result<Vec<_>>>()?;
    let mut terms = Vec::new();
    for i in 0..s {
        let t = s - i;
        for k in 0..=i / 2 {
            terms.push(PartialFractionTerm {
                numerator: b_numerator(i, k, t, &tildes[k as usize]),
                c: rat(t as i64),
                e: k + 1,
            });
        }
    }
    Ok(terms)
}

/// `Φ_s(x)` by clearing the partial-fraction denominators, without the degree check.
pub fn phi_s_unchecked(s: u32) -> Result<Polynomial> {
    clear_denominators(&delta(s), &u_s_partial_fractions(s)?)
}

/// `Φ_s(x)`, checked to have degree `1 + ⌈s(s+2)/4⌉`.
pub fn phi_s_poly(s: u32) -> Result<Polynomial> {
    let phi = phi_s_unchecked(s)?;
    let expected = 1 + delta_degree(s);
    if phi.degree() != expected {
        return Err(Error::DegreeMismatch {
            s: s as usize,
            expected,
            actual: phi.degree(),
        });
    }
    Ok(phi)
}

/// `u_s(x)` with both the `Φ_s / Δ_s` and the partial-fraction forms.
pub fn u_s_gf(s: u32) -> Result<RationalGF> {
    let terms = u_s_partial_fractions(s)?;
    let numerator = phi_s_poly(s)?;
    Ok(RationalGF {
        numerator,
        denominator: delta(s),
        partial_fractions: Some(terms),
    })
}

/// `u_s(x)` expanded to `x^order` as `Φ_s(x) · 1/Δ_s(x)`.
pub fn u_s_series(s: u32, order: usize) -> Result<TruncatedSeries> {
    let phi = phi_s_poly(s)?;
    Ok(series_from(&phi, s, order))
}

/// `numerator · 1/Δ_s` to `x^order`; lets callers supply their own numerator.
pub fn series_from(numerator: &Polynomial, s: u32, order: usize) -> TruncatedSeries {
    &TruncatedSeries::from_polynomial(numerator, order) * &series_reciprocal(&delta_poly(s), order)
}
