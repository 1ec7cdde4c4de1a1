//! Sparse polynomials in two variables, such as `Q_i(n, s)` or `p_j(n, t)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::poly::{Polynomial, Var};
use crate::rational::Rational;

/// Exponent pair `(first, second)` mapped to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    vars: (Var, Var),
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero(vars: (Var, Var)) -> Self {
        assert_ne!(
            vars.0, vars.1,
            "bivariate polynomial needs two distinct variables"
        );
        BivariatePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: (Var, Var), c: Rational) -> Self {
        Self::monomial(vars, c, 0, 0)
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn monomial(vars: (Var, Var), c: Rational, a: u32, b: u32) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(a, b, c);
        p
    }

    pub fn from_terms(
        vars: (Var, Var),
        terms: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    /// Embeds a univariate polynomial in the first variable.
    pub fn from_first(p: &Polynomial, second: Var) -> Self {
        Self::from_terms(
            (p.var(), second),
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(a, c)| ((a as u32, 0), c.clone())),
        )
    }

    /// Embeds a univariate polynomial in the second variable.
    pub fn from_second(first: Var, p: &Polynomial) -> Self {
        Self::from_terms(
            (first, p.var()),
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(b, c)| ((0, b as u32), c.clone())),
        )
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c` to the coefficient of `first^a second^b`, dropping it if it cancels.
    pub fn add_term(&mut self, a: u32, b: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Degree in the first variable; `-1` for the zero polynomial.
    pub fn degree_first(&self) -> i64 {
        self.terms
            .keys()
            .map(|&(a, _)| a as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_second(&self) -> i64 {
        self.terms
            .keys()
            .map(|&(_, b)| b as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Coefficient of `first^a`, as a polynomial in the second variable.
    pub fn coefficient_of_first(&self, a: u32) -> Polynomial {
        let deg = self.degree_second().max(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(ea, eb), c) in &self.terms {
            if ea == a {
                coeffs[eb as usize] = c.clone();
            }
        }
        Polynomial::new(self.vars.1, coeffs)
    }

    /// Coefficient of `second^b`, as a polynomial in the first variable.
    pub fn coefficient_of_second(&self, b: u32) -> Polynomial {
        let deg = self.degree_first().max(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(ea, eb), c) in &self.terms {
            if eb == b {
                coeffs[ea as usize] = c.clone();
            }
        }
        Polynomial::new(self.vars.0, coeffs)
    }

    pub fn eval(&self, first: &Rational, second: &Rational) -> Rational {
        // Iterated single-variable evaluation: collapse the second variable first.
        let deg = self.degree_first();
        if deg < 0 {
            return Rational::zero();
        }
        let inner: Vec<Rational> = (0..=deg as u32)
            .map(|a| self.coefficient_of_first(a).eval(second))
            .collect();
        Polynomial::new(self.vars.0, inner).eval(first)
    }

    /// Evaluates the second variable, leaving a polynomial in the first.
    pub fn eval_second(&self, second: &Rational) -> Polynomial {
        let deg = self.degree_first();
        if deg < 0 {
            return Polynomial::zero(self.vars.0);
        }
        let inner = (0..=deg as u32)
            .map(|a| self.coefficient_of_first(a).eval(second))
            .collect();
        Polynomial::new(self.vars.0, inner)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        BivariatePolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// `p(first + c, second)`
    pub fn shift_first(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars);
        for b in 0..=self.degree_second().max(0) as u32 {
            let shifted = self.coefficient_of_second(b).shift(c);
            for (a, v) in shifted.coeffs().iter().enumerate() {
                out.add_term(a as u32, b, v.clone());
            }
        }
        out
    }

    /// `p(first, new + c)`, with the second variable retagged to `new`.
    /// This is how `p_j(n, t)` becomes a polynomial in `(n, s)` via `t = s - i`.
    pub fn substitute_second(&self, new: Var, c: &Rational) -> Self {
        let mut out = Self::zero((self.vars.0, new));
        for a in 0..=self.degree_first().max(0) as u32 {
            let shifted = self.coefficient_of_first(a).shift(c);
            for (b, v) in shifted.coeffs().iter().enumerate() {
                out.add_term(a, b as u32, v.clone());
            }
        }
        out
    }

    /// `p(first, second + c)`
    pub fn shift_second(&self, c: &Rational) -> Self {
        self.substitute_second(self.vars.1, c)
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "bivariate variable mismatch: ({},{}) vs ({},{})",
            self.vars.0, self.vars.1, other.vars.0, other.vars.1
        );
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.check_vars(rhs);
        let mut out = BivariatePolynomial::zero(self.vars);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            for (v, e) in [(self.vars.0, a), (self.vars.1, b)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
