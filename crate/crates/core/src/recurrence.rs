//! The three-term recurrence for `P(n, s)` and exact checks of the
//! companion recurrences satisfied by the `φ` and `ψ` polynomial families.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bivariate::BivariatePolynomial;
use crate::closed_form::{PsiPolynomial, NS, NT};
use crate::error::{Error, Result};
use crate::poly::Var;
use crate::rational::rat;
use crate::triangle::RunCountTriangle;

/// Builds `P(n, s)` for `n <= n_max` from the base row `P(2, s) = 2 δ_{s,1}` and
///
/// `P(n, s) = s P(n-1, s) + 2 P(n-1, s-1) + (n-s) P(n-1, s-2)` for `n >= 3`,
///
/// with entries outside `1 <= s <= n-1` taken as zero.
pub fn build_triangle(n_max: usize) -> Result<RunCountTriangle> {
    if n_max < 2 {
        return Err(Error::OutOfDomain(format!(
            "triangle needs n_max >= 2, got {n_max}"
        )));
    }
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(2u32)]];
    for n in 3..=n_max {
        let prev = rows.last().unwrap();
        let at = |s: usize| -> BigUint {
            if s >= 1 && s <= n - 2 {
                prev[s - 1].clone()
            } else {
                BigUint::zero()
            }
        };
        let row: Vec<BigUint> = (1..n)
            .into_par_iter()
            .map(|s| {
                let mut v = at(s) * s;
                if s >= 2 {
                    v += at(s - 1) * 2u32;
                }
                if s >= 3 {
                    v += at(s - 2) * (n - s);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    RunCountTriangle::from_rows(rows)
}

/// Outcome of checking a polynomial identity for each index `1..=i_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub i_max: u32,
    /// Indices whose identity did not hold (or whose input was missing).
    pub failures: Vec<u32>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `t φ_i(n,t) = (t+i) φ_i(n-1,t) + 2 φ_{i-1}(n-1,t) + (n-t-i) φ_{i-2}(n-1,t)`
/// on the polynomial parts (the common factor `K(t)` cancels).
/// `family[i]` is `part(φ_i)`; `part(φ_0)` must be 1 and index 0 is reported otherwise.
pub fn verify_phi_recurrence(family: &[BivariatePolynomial], i_max: u32) -> IdentityReport {
    let zero = BivariatePolynomial::zero(NT);
    let get = |i: i64| -> Option<&BivariatePolynomial> {
        if i < 0 {
            Some(&zero)
        } else {
            family.get(i as usize)
        }
    };
    let t = BivariatePolynomial::monomial(NT, rat(1), 0, 1);
    let n = BivariatePolynomial::monomial(NT, rat(1), 1, 0);
    let two = BivariatePolynomial::constant(NT, rat(2));

    let mut failures = Vec::new();
    if family.first() != Some(&BivariatePolynomial::one(NT)) {
        failures.push(0);
    }
    let checks: Vec<(u32, bool)> = (1..=i_max)
        .into_par_iter()
        .map(|i| {
            let ii = i as i64;
            let (Some(cur), Some(prev1), Some(prev2)) = (get(ii), get(ii - 1), get(ii - 2)) else {
                return (i, false);
            };
            let shift = |p: &BivariatePolynomial| p.shift_first(&rat(-1));
            let t_plus_i = &t + &BivariatePolynomial::constant(NT, rat(ii));
            let n_minus = &(&n - &t) - &BivariatePolynomial::constant(NT, rat(ii));
            let lhs = &t * cur;
            let rhs = &(&(&t_plus_i * &shift(cur)) + &(&two * &shift(prev1)))
                + &(&n_minus * &shift(prev2));
            (i, (&lhs - &rhs).is_zero())
        })
        .collect();
    failures.extend(checks.into_iter().filter(|&(_, ok)| !ok).map(|(i, _)| i));
    IdentityReport { i_max, failures }
}

/// Checks `(s-i) Q_i(n,s) = s Q_i(n-1,s) + 2 Q_{i-1}(n-1,s-1) + (n-s) Q_{i-2}(n-1,s-2)`,
/// the `ψ` recurrence with the common factor `K(s-i)` cancelled.
/// `Q_0` must be 1 and index 0 is reported otherwise.
pub fn verify_psi_recurrence(family: &[PsiPolynomial], i_max: u32) -> IdentityReport {
    let zero = BivariatePolynomial::zero(NS);
    let get = |i: i64| -> Option<&BivariatePolynomial> {
        if i < 0 {
            Some(&zero)
        } else {
            family.get(i as usize).map(|p| &p.q)
        }
    };
    let s = BivariatePolynomial::monomial(NS, rat(1), 0, 1);
    let n = BivariatePolynomial::monomial(NS, rat(1), 1, 0);
    let two = BivariatePolynomial::constant(NS, rat(2));

    let mut failures = Vec::new();
    if family.first().map(|p| &p.q) != Some(&BivariatePolynomial::one(NS)) {
        failures.push(0);
    }
    let checks: Vec<(u32, bool)> = (1..=i_max)
        .into_par_iter()
        .map(|i| {
            let ii = i as i64;
            let (Some(cur), Some(prev1), Some(prev2)) = (get(ii), get(ii - 1), get(ii - 2)) else {
                return (i, false);
            };
            debug_assert_eq!(cur.vars(), (Var::N, Var::S));
            let s_minus_i = &s - &BivariatePolynomial::constant(NS, rat(ii));
            let lhs = &s_minus_i * cur;
            let term0 = &s * &cur.shift_first(&rat(-1));
            let term1 = &two * &prev1.shift_first(&rat(-1)).shift_second(&rat(-1));
            let term2 = &(&n - &s) * &prev2.shift_first(&rat(-1)).shift_second(&rat(-2));
            let rhs = &(&term0 + &term1) + &term2;
            (i, (&lhs - &rhs).is_zero())
        })
        .collect();
    failures.extend(checks.into_iter().filter(|&(_, ok)| !ok).map(|(i, _)| i));
    IdentityReport { i_max, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::brute_triangle;
    use crate::closed_form::{phi_parts, psi_polys};
    use crate::rational::{factorial, ratio};

    #[test]
    fn base_and_small_values() {
        let t = build_triangle(6).unwrap();
        assert_eq!(t.get(2, 1), BigUint::from(2u32));
        assert_eq!(t.get(2, 2), BigUint::zero());
        assert_eq!(t.get(3, 1), BigUint::from(2u32));
        assert_eq!(t.get(3, 2), BigUint::from(4u32));
        assert_eq!(t.get(4, 3), BigUint::from(10u32));
        for n in 2..=6 {
            assert_eq!(t.get(n, 1), BigUint::from(2u32));
        }
        assert!(build_triangle(1).is_err());
    }

    #[test]
    fn rows_sum_to_factorial_and_are_positive() {
        let t = build_triangle(30).unwrap();
        for n in 2..=30 {
            assert_eq!(t.row_sum(n), factorial(n as u64), "n={n}");
            assert!(t.row(n).iter().all(|v| !v.is_zero()), "n={n}");
        }
    }

    #[test]
    fn agrees_with_enumeration() {
        let brute = brute_triangle(9).unwrap();
        let rec = build_triangle(9).unwrap();
        assert_eq!(brute, rec);
    }

    #[test]
    fn phi_identity_holds_for_closed_form_family() {
        let r = verify_phi_recurrence(&phi_parts(12), 12);
        assert!(r.passed(), "{r:?}");
        // i = 1 alone
        assert!(verify_phi_recurrence(&phi_parts(1), 1).passed());
    }

    #[test]
    fn phi_mutation_is_reported() {
        let mut fam = phi_parts(4);
        fam[2].add_term(0, 0, rat(1));
        let r = verify_phi_recurrence(&fam, 4);
        assert!(r.failures.contains(&2), "{r:?}");
    }

    #[test]
    fn psi_identity_holds_for_closed_form_family() {
        let r = verify_psi_recurrence(&psi_polys(12), 12);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn psi_identity_for_reference_low_rows() {
        // Q_0 = 1, Q_1 = -2, Q_2 = (-2n + s + 8)/4
        let fam = vec![
            PsiPolynomial {
                index: 0,
                q: BivariatePolynomial::one(NS),
            },
            PsiPolynomial {
                index: 1,
                q: BivariatePolynomial::constant(NS, rat(-2)),
            },
            PsiPolynomial {
                index: 2,
                q: BivariatePolynomial::from_terms(
                    NS,
                    [
                        ((1, 0), ratio(-1, 2)),
                        ((0, 1), ratio(1, 4)),
                        ((0, 0), rat(2)),
                    ],
                ),
            },
        ];
        assert!(verify_psi_recurrence(&fam, 2).passed());
    }

    #[test]
    fn psi_mutation_is_reported() {
        let mut fam = psi_polys(5);
        fam[3].q.add_term(1, 0, rat(1));
        let r = verify_psi_recurrence(&fam, 5);
        assert!(r.failures.contains(&3), "{r:?}");
    }

    #[test]
    fn missing_members_fail() {
        let r = verify_psi_recurrence(&psi_polys(2), 4);
        assert_eq!(r.failures, vec![3, 4]);
    }
}
