//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Name of the indeterminate a polynomial is written in.
///
/// Every polynomial carries its tag and combining two polynomials with
/// different tags is a contract violation (it panics).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Z,
    N,
    S,
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Z => 'z',
            Var::N => 'n',
            Var::S => 's',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'z' => Some(Var::Z),
            'n' => Some(Var::N),
            's' => Some(Var::S),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Coefficients are stored in ascending degree with trailing zeros stripped,
/// so the zero polynomial has no coefficients and degree `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { var, coeffs }
    }

    pub fn from_integers(var: Var, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            coeffs.iter().map(|&c| crate::rational::rat(c)).collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        Polynomial {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// `c · var^degree`
    pub fn monomial(var: Var, c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    /// `c0 + c1 · var`
    pub fn linear(var: Var, c0: Rational, c1: Rational) -> Self {
        Self::new(var, vec![c0, c1])
    }

    /// `1 - c · var`
    pub fn one_minus(var: Var, c: Rational) -> Self {
        Self::linear(var, Rational::one(), -c)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check_var(&self, other: &Polynomial) {
        assert_eq!(
            self.var, other.var,
            "polynomial variable mismatch: {} vs {}",
            self.var, other.var
        );
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.var);
        }
        Polynomial {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.var);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * a + c)
    }

    /// `q(var) = p(c · var)`: coefficient `j` is multiplied by `c^j`.
    /// The result is tagged `var`, which lets `Φ̃(z)` become `Φ̃(t·x)`.
    pub fn substitute_scaled(&self, c: &Rational, var: Var) -> Polynomial {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Polynomial::new(var, coeffs)
    }

    /// Taylor shift `p(var + c)`.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        let step = Polynomial::linear(self.var, c.clone(), Rational::one());
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(self.var), |acc, a| {
                &(&acc * &step) + &Polynomial::constant(self.var, a.clone())
            })
    }

    /// Long division, returning quotient and remainder. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        self.check_var(d);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(self.var), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if !q.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * b;
                }
            }
            quot[i] = q;
        }
        (
            Polynomial::new(self.var, quot),
            Polynomial::new(self.var, rem),
        )
    }

    /// Quotient `q` with `self = q · d`, or [`Error::NonzeroRemainder`].
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder {
                remainder: r.to_string(),
            })
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(self.var, coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(self.var, coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(self.var, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Ascending-degree human-readable form, e.g. `1 - 3/2*z^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn p(var: Var, c: &[i64]) -> Polynomial {
        Polynomial::from_integers(var, c)
    }

    #[test]
    fn difference_of_squares() {
        let a = p(Var::X, &[1, 1]);
        let b = p(Var::X, &[1, -1]);
        assert_eq!(&a * &b, p(Var::X, &[1, 0, -1]));
    }

    #[test]
    fn annihilator_and_zero_degree() {
        let a = p(Var::X, &[3, 0, 2]);
        let z = Polynomial::zero(Var::X);
        assert_eq!(&a * &z, z);
        assert_eq!(z.degree(), -1);
        assert_eq!(p(Var::X, &[0, 0, 0]).degree(), -1);
    }

    #[test]
    fn cube_of_binomial() {
        let a = p(Var::Z, &[1, 1]);
        let cube = &(&a * &a) * &a;
        assert_eq!(cube, p(Var::Z, &[1, 3, 3, 1]));
        assert_eq!(a.pow(3), cube);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(Var::X, &[1, -1]).eval(&rat(1)), rat(0));
        assert_eq!(Polynomial::zero(Var::X).eval(&ratio(7, 3)), rat(0));
        // 2x^2 at 1/2
        assert_eq!(p(Var::X, &[0, 0, 2]).eval(&ratio(1, 2)), ratio(1, 2));
    }

    #[test]
    fn scaled_substitution() {
        let q = p(Var::Z, &[1, 2, 3]);
        assert_eq!(q.substitute_scaled(&rat(1), Var::Z), q);
        let z2 = p(Var::Z, &[0, 0, 1]);
        assert_eq!(z2.substitute_scaled(&rat(3), Var::X), p(Var::X, &[0, 0, 9]));
        assert_eq!(z2.substitute_scaled(&rat(2), Var::X), p(Var::X, &[0, 0, 4]));
    }

    #[test]
    fn exact_division() {
        let q = p(Var::X, &[1, 0, -1])
            .div_exact(&p(Var::X, &[1, -1]))
            .unwrap();
        assert_eq!(q, p(Var::X, &[1, 1]));
        let err = p(Var::X, &[1, 1]).div_exact(&p(Var::X, &[1, -1]));
        assert!(matches!(err, Err(Error::NonzeroRemainder { .. })));
    }

    #[test]
    fn taylor_shift() {
        // (x)^2 shifted by -1 is x^2 - 2x + 1
        let q = p(Var::Z, &[0, 0, 1]).shift(&rat(-1));
        assert_eq!(q, p(Var::Z, &[1, -2, 1]));
    }

    #[test]
    #[should_panic(expected = "variable mismatch")]
    fn mixing_variables_panics() {
        let _ = &p(Var::X, &[1]) + &p(Var::Z, &[1]);
    }

    #[test]
    fn display() {
        assert_eq!(p(Var::X, &[1, 0, -3]).to_string(), "1 - 3*x^2");
        assert_eq!(p(Var::N, &[0, -1]).to_string(), "-n");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..6).prop_map(|cs| {
            Polynomial::new(Var::X, cs.into_iter().map(|(a, b)| ratio(a, b)).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn product_degree(a in small_poly(), b in small_poly()) {
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
            }
        }

        #[test]
        fn division_undoes_multiplication(q in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&q * &d).div_exact(&d).unwrap(), q);
        }

        #[test]
        fn shift_is_evaluation_consistent(a in small_poly(), c in -5i64..5, x in -5i64..5) {
            prop_assert_eq!(a.shift(&rat(c)).eval(&rat(x)), a.eval(&rat(x + c)));
        }
    }
}
