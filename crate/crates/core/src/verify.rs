//! The cross-verification battery: every independently computed object is
//! checked against every other route to the same quantity.
//!
//! Objects are computed once into [`Artifacts`], optionally corrupted through
//! [`Corruption`] (a fault-injection hook for testing the battery itself),
//! and then checked. Checks run concurrently and never short-circuit.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bivariate::BivariatePolynomial;
use crate::brute::brute_triangle;
use crate::closed_form::{
    a_poly, b_poly, b_value, f_series, f_series_from_ab, phi_parts, psi_polys, ClosedForm,
    PsiPolynomial,
};
use crate::error::{Error, Result};
use crate::genfun::{
    a_k_gf, atilde_coeffs_division, atilde_coeffs_formula, atilde_poly, delta_degree, delta_poly,
    phi_s_unchecked, series_from, u_s_gf, verify_wz_sum, AtildeData,
};
use crate::poly::{Polynomial, Var};
use crate::rational::{factorial, rat, Rational};
use crate::recurrence::{build_triangle, verify_phi_recurrence, verify_psi_recurrence};
use crate::reference::{phi_reference, psi_reference, PHI_TABLE, PSI_TABLE};
use crate::triangle::RunCountTriangle;

/// Enumeration leg of the battery never goes beyond this `n`.
pub const BRUTE_LEG_CAP: usize = 10;
/// The `f(x, n, t)` series check covers `n <= 10` and `t <= 6`.
pub const F_SERIES_N_CAP: usize = 10;
pub const F_SERIES_T_MAX: i64 = 6;
/// `A_k(z)` series are compared against `a_k(n)` up to this `n`.
pub const A_K_SERIES_ORDER: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub s_max: usize,
    pub i_max: usize,
    pub k_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 20,
            s_max: 10,
            i_max: 10,
            k_max: 20,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 2 {
            return Err(Error::OutOfDomain(format!(
                "n_max must be >= 2, got {}",
                self.n_max
            )));
        }
        if self.s_max < 1 || self.i_max < 1 || self.k_max < 1 {
            return Err(Error::OutOfDomain(
                "s_max, i_max and k_max must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// A single-coefficient fault, adding one to the targeted value.
///
/// Text forms: `psi:I:A:B` (coefficient of `n^A s^B` in `Q_I`),
/// `phi:S:D` (coefficient of `x^D` in `Φ_S`), `table:N:S` (entry `P(N,S)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    Psi { i: usize, n_exp: u32, s_exp: u32 },
    Phi { s: usize, degree: usize },
    Table { n: usize, s: usize },
}

impl FromStr for Corruption {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let parts: Vec<&str> = src.split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad corruption spec `{src}`")))
        };
        match (parts.first().copied(), parts.len()) {
            (Some("psi"), 4) => Ok(Corruption::Psi {
                i: num(1)?,
                n_exp: num(2)? as u32,
                s_exp: num(3)? as u32,
            }),
            (Some("phi"), 3) => Ok(Corruption::Phi {
                s: num(1)?,
                degree: num(2)?,
            }),
            (Some("table"), 3) => Ok(Corruption::Table {
                n: num(1)?,
                s: num(2)?,
            }),
            _ => Err(Error::Parse(format!("bad corruption spec `{src}`"))),
        }
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corruption::Psi { i, n_exp, s_exp } => write!(f, "psi:{i}:{n_exp}:{s_exp}"),
            Corruption::Phi { s, degree } => write!(f, "phi:{s}:{degree}"),
            Corruption::Table { n, s } => write!(f, "table:{n}:{s}"),
        }
    }
}

/// Every object the battery inspects.
#[derive(Debug, Clone)]
pub struct Artifacts {
    /// Recurrence triangle up to `n_max`.
    pub triangle: RunCountTriangle,
    /// Enumerated triangle up to `min(n_max, BRUTE_LEG_CAP)`.
    pub brute: RunCountTriangle,
    /// `Q_0 …`, long enough for both `i_max` and the closed form at `s_max`.
    pub psi: Vec<PsiPolynomial>,
    /// `part(φ_0) … part(φ_{i_max})`.
    pub phi_parts: Vec<BivariatePolynomial>,
    /// `Φ_1 … Φ_{s_max}`.
    pub phi_s: Vec<Result<Polynomial>>,
}

impl Artifacts {
    pub fn build(cfg: &VerifyConfig) -> Result<Self> {
        cfg.validate()?;
        let psi_len = cfg.i_max.max(cfg.s_max.saturating_sub(1));
        let ((triangle, brute), (psi, (phi, phi_s))) = rayon::join(
            || {
                rayon::join(
                    || build_triangle(cfg.n_max),
                    || brute_triangle(cfg.n_max.min(BRUTE_LEG_CAP)),
                )
            },
            || {
                rayon::join(
                    || psi_polys(psi_len as u32),
                    || {
                        rayon::join(
                            || phi_parts(cfg.i_max as u32),
                            || {
                                (1..=cfg.s_max as u32)
                                    .into_par_iter()
                                    .map(phi_s_unchecked)
                                    .collect::<Vec<_>>()
                            },
                        )
                    },
                )
            },
        );
        Ok(Artifacts {
            triangle: triangle?,
            brute: brute?,
            psi,
            phi_parts: phi,
            phi_s,
        })
    }

    pub fn corrupt(&mut self, c: &Corruption) -> Result<()> {
        match *c {
            Corruption::Psi { i, n_exp, s_exp } => {
                let psi = self
                    .psi
                    .get_mut(i)
                    .ok_or_else(|| Error::OutOfDomain(format!("no Q_{i} to corrupt")))?;
                psi.q.add_term(n_exp, s_exp, Rational::one());
                Ok(())
            }
            Corruption::Phi { s, degree } => {
                let phi = s
                    .checked_sub(1)
                    .and_then(|k| self.phi_s.get_mut(k))
                    .ok_or_else(|| Error::OutOfDomain(format!("no Φ_{s} to corrupt")))?;
                let p = phi.as_mut().map_err(|e| e.clone())?;
                let mut coeffs = p.coeffs().to_vec();
                if coeffs.len() <= degree {
                    coeffs.resize(degree + 1, Rational::zero());
                }
                coeffs[degree] += Rational::one();
                *p = Polynomial::new(Var::X, coeffs);
                Ok(())
            }
            Corruption::Table { n, s } => self.triangle.perturb(n, s, 1),
        }
    }
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }
}

type CheckFn = fn(&Artifacts, &VerifyConfig) -> std::result::Result<String, String>;

/// Name, one-line description and implementation of every check.
pub const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("row-sums", "recurrence rows sum to n!", check_row_sums),
    (
        "positivity",
        "P(n,s) > 0 in range and P(n,1) = 2",
        check_positivity,
    ),
    (
        "brute-vs-recurrence",
        "enumeration equals recurrence",
        check_brute,
    ),
    (
        "closed-vs-recurrence",
        "closed-form sum equals recurrence",
        check_closed,
    ),
    (
        "series-vs-recurrence",
        "Φ_s/Δ_s coefficients equal recurrence",
        check_series,
    ),
    (
        "partial-fractions",
        "Σ B_{i,k}/(1-(s-i)x)^{k+1} equals Φ_s/Δ_s",
        check_partial_fractions,
    ),
    (
        "psi-recurrence",
        "Q_i satisfy the ψ recurrence",
        check_psi_recurrence,
    ),
    (
        "phi-recurrence",
        "φ parts satisfy the φ recurrence",
        check_phi_recurrence,
    ),
    ("psi-degree", "deg_n Q_i = ⌊i/2⌋", check_psi_degree),
    (
        "gf-degrees",
        "deg Φ_s = 1+⌈s(s+2)/4⌉, deg Δ_s = ⌈s(s+2)/4⌉",
        check_gf_degrees,
    ),
    (
        "b-polynomial",
        "b_m(t) polynomial equals factorial form",
        check_b_poly,
    ),
    (
        "f-series",
        "series of f(x,n,t) has coefficients φ_i(n,t)",
        check_f_series,
    ),
    (
        "atilde-divisibility",
        "(1+z)^{k+1} divides Ã_k(z)",
        check_divisibility,
    ),
    ("wz-sum", "binomial sum equals 4^k", check_wz),
    (
        "atilde-dual-path",
        "ã_k(p) formula equals Taylor expansion",
        check_dual_path,
    ),
    (
        "atilde-reconstruction",
        "(-1)^k Σ ã_k(p)(1+z)^{k+p+1} = Ã_k",
        check_reconstruction,
    ),
    ("phi-tilde-degree", "deg Φ̃_k = k+2", check_phi_tilde_degree),
    (
        "a-k-series",
        "A_k(z) coefficients equal a_k(n)",
        check_a_k_series,
    ),
    (
        "psi-reference",
        "Q_i match the reference table",
        check_psi_reference,
    ),
    (
        "phi-reference",
        "Φ_s match the reference table",
        check_phi_reference,
    ),
];

/// Builds the artifacts, applies `corruptions` and runs every check.
pub fn run_battery(cfg: &VerifyConfig, corruptions: &[Corruption]) -> Result<VerificationReport> {
    let mut artifacts = Artifacts::build(cfg)?;
    for c in corruptions {
        artifacts.corrupt(c)?;
    }
    Ok(run_checks(&artifacts, cfg))
}

pub fn run_checks(artifacts: &Artifacts, cfg: &VerifyConfig) -> VerificationReport {
    let checks = CHECKS
        .par_iter()
        .map(|&(name, _, check)| match check(artifacts, cfg) {
            Ok(detail) => CheckOutcome {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect();
    VerificationReport {
        config: *cfg,
        checks,
    }
}

type CheckResult = std::result::Result<String, String>;

fn check_row_sums(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    match a.triangle.row_sum_violation() {
        None => Ok(format!("n <= {}", cfg.n_max)),
        Some(n) => Err(format!(
            "row n = {n} sums to {}, not {}",
            a.triangle.row_sum(n),
            factorial(n as u64)
        )),
    }
}

fn check_positivity(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for (n, row) in a.triangle.rows() {
        if row[0] != 2u32.into() {
            return Err(format!("P({n},1) = {}", row[0]));
        }
        if let Some(s) = row.iter().position(Zero::is_zero) {
            return Err(format!("P({n},{}) = 0", s + 1));
        }
    }
    Ok(format!("n <= {}", cfg.n_max))
}

fn check_brute(a: &Artifacts, _cfg: &VerifyConfig) -> CheckResult {
    let n = a.brute.n_max();
    match a.brute.first_disagreement(&a.triangle, n, n) {
        None => Ok(format!("n <= {n}")),
        Some(d) => Err(format!(
            "P({},{}): brute {} vs recurrence {}",
            d.n, d.s, d.left, d.right
        )),
    }
}

fn check_closed(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let cf = ClosedForm::with_family(a.psi.clone());
    let cells: Vec<(usize, usize)> = (2..=cfg.n_max)
        .flat_map(|n| (1..=cfg.s_max.min(n - 1)).map(move |s| (n, s)))
        .collect();
    let bad = cells
        .par_iter()
        .find_map_first(|&(n, s)| match cf.count(n, s) {
            Ok(v) if v == a.triangle.get(n, s) => None,
            Ok(v) => Some(format!(
                "P({n},{s}): closed {v} vs recurrence {}",
                a.triangle.get(n, s)
            )),
            Err(e) => Some(e.to_string()),
        });
    match bad {
        None => Ok(format!("n <= {}, s <= {}", cfg.n_max, cfg.s_max)),
        Some(msg) => Err(msg),
    }
}

fn phi_s_of(a: &Artifacts, s: usize) -> std::result::Result<&Polynomial, String> {
    a.phi_s[s - 1].as_ref().map_err(|e| format!("Φ_{s}: {e}"))
}

fn check_series(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for s in 1..=cfg.s_max {
        let series = series_from(phi_s_of(a, s)?, s as u32, cfg.n_max);
        for n in 0..=cfg.n_max {
            let expected = Rational::from_integer(a.triangle.get(n, s).into());
            if series.coeff(n) != &expected {
                return Err(format!(
                    "[x^{n}] u_{s} = {} vs P({n},{s}) = {expected}",
                    series.coeff(n)
                ));
            }
        }
    }
    Ok(format!("s <= {}, n <= {}", cfg.s_max, cfg.n_max))
}

fn check_partial_fractions(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let order = cfg.n_max.max(30);
    (1..=cfg.s_max)
        .into_par_iter()
        .map(|s| {
            let gf = u_s_gf(s as u32).map_err(|e| e.to_string())?;
            let pf = gf
                .partial_fraction_series(order)
                .expect("u_s has partial fractions");
            let direct = series_from(phi_s_of(a, s)?, s as u32, order);
            if pf != direct {
                return Err(format!(
                    "u_{s}: partial-fraction series differs from Φ_{s}/Δ_{s}"
                ));
            }
            Ok(())
        })
        .collect::<std::result::Result<Vec<()>, String>>()?;
    Ok(format!("s <= {}, order {order}", cfg.s_max))
}

fn check_psi_recurrence(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let r = verify_psi_recurrence(&a.psi, cfg.i_max as u32);
    if r.passed() {
        Ok(format!("i <= {}", cfg.i_max))
    } else {
        Err(format!("fails at i = {:?}", r.failures))
    }
}

fn check_phi_recurrence(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let r = verify_phi_recurrence(&a.phi_parts, cfg.i_max as u32);
    if r.passed() {
        Ok(format!("i <= {}", cfg.i_max))
    } else {
        Err(format!("fails at i = {:?}", r.failures))
    }
}

fn check_psi_degree(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for psi in a.psi.iter().take(cfg.i_max + 1) {
        let expected = (psi.index / 2) as i64;
        if psi.q.degree_first() != expected {
            return Err(format!(
                "deg_n Q_{} = {}, expected {expected}",
                psi.index,
                psi.q.degree_first()
            ));
        }
    }
    Ok(format!("i <= {}", cfg.i_max))
}

fn check_gf_degrees(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for s in 1..=cfg.s_max {
        let d = delta_degree(s as u32);
        let delta = delta_poly(s as u32).degree();
        if delta != d {
            return Err(format!("deg Δ_{s} = {delta}, expected {d}"));
        }
        let phi = phi_s_of(a, s)?.degree();
        if phi != d + 1 {
            return Err(format!("deg Φ_{s} = {phi}, expected {}", d + 1));
        }
    }
    Ok(format!("s <= {}", cfg.s_max))
}

fn check_b_poly(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let m_max = cfg.i_max.max(12) as u32;
    for m in 0..=m_max {
        let p = b_poly(m);
        for t in 1..=20u64 {
            if p.eval(&rat(t as i64)) != b_value(m as u64, t) {
                return Err(format!("b_{m}({t}) differs"));
            }
        }
    }
    Ok(format!("m <= {m_max}, t <= 20"))
}

fn check_f_series(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let order = cfg.i_max;
    let cases: Vec<(i64, i64)> = (2..=cfg.n_max.min(F_SERIES_N_CAP) as i64)
        .flat_map(|n| (1..=F_SERIES_T_MAX).map(move |t| (n, t)))
        .collect();
    let bad = cases.par_iter().find_map_first(|&(n, t)| {
        let direct = f_series(n, t, order);
        if direct != f_series_from_ab(n, t as u64, order) {
            return Some(format!(
                "n={n} t={t}: a_k/b_m assembly differs from direct series"
            ));
        }
        for i in 0..=order {
            let part = a.phi_parts[i].eval(&rat(n), &rat(t));
            if direct.coeff(i) != &part {
                return Some(format!(
                    "n={n} t={t}: [x^{i}] = {} vs φ part {part}",
                    direct.coeff(i)
                ));
            }
        }
        None
    });
    match bad {
        None => Ok(format!(
            "n <= {}, t <= {F_SERIES_T_MAX}, i <= {order}",
            cfg.n_max.min(F_SERIES_N_CAP)
        )),
        Some(m) => Err(m),
    }
}

fn check_divisibility(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for k in 0..=cfg.k_max as u32 {
        let factor = Polynomial::from_integers(Var::Z, &[1, 1]).pow(k + 1);
        if let Err(e) = atilde_poly(k).div_exact(&factor) {
            return Err(format!("k={k}: {e}"));
        }
    }
    Ok(format!("k <= {}", cfg.k_max))
}

fn check_wz(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    match (0..=cfg.k_max as u32).find(|&k| !verify_wz_sum(k)) {
        None => Ok(format!("k <= {}", cfg.k_max)),
        Some(k) => Err(format!("k={k}")),
    }
}

fn check_dual_path(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for k in 0..=cfg.k_max as u32 {
        let taylor = atilde_coeffs_division(k).map_err(|e| format!("k={k}: {e}"))?;
        if atilde_coeffs_formula(k) != taylor {
            return Err(format!("k={k}: formula and Taylor paths differ"));
        }
    }
    Ok(format!("k <= {}", cfg.k_max))
}

fn check_reconstruction(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for k in 0..=cfg.k_max as u32 {
        let d = AtildeData::new(k).map_err(|e| e.to_string())?;
        if d.reconstruct() != d.atilde {
            return Err(format!("k={k}"));
        }
    }
    Ok(format!("k <= {}", cfg.k_max))
}

fn check_phi_tilde_degree(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for k in 0..=cfg.k_max as u32 {
        let d = AtildeData::new(k).map_err(|e| e.to_string())?;
        if d.phi_tilde.degree() != k as i64 + 2 {
            return Err(format!("deg Φ̃_{k} = {}", d.phi_tilde.degree()));
        }
    }
    Ok(format!("k <= {}", cfg.k_max))
}

fn check_a_k_series(_a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    for k in 0..=cfg.k_max as u32 {
        let series = a_k_gf(k)
            .map_err(|e| e.to_string())?
            .series(A_K_SERIES_ORDER);
        let a = a_poly(k);
        for n in 0..=A_K_SERIES_ORDER {
            let expected = if n < 2 {
                Rational::zero()
            } else {
                a.eval(&rat(n as i64))
            };
            if series.coeff(n) != &expected {
                return Err(format!(
                    "k={k} n={n}: {} vs a_k(n) = {expected}",
                    series.coeff(n)
                ));
            }
        }
    }
    Ok(format!("k <= {}, n <= {A_K_SERIES_ORDER}", cfg.k_max))
}

fn check_psi_reference(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.i_max.min(PSI_TABLE.len() - 1);
    for i in 0..=top {
        let expected = psi_reference(i).map_err(|e| e.to_string())?;
        if a.psi[i].q != expected {
            return Err(format!(
                "Q_{i} = {} differs from reference {expected}",
                a.psi[i].q
            ));
        }
    }
    Ok(format!("i <= {top}"))
}

fn check_phi_reference(a: &Artifacts, cfg: &VerifyConfig) -> CheckResult {
    let top = cfg.s_max.min(PHI_TABLE.len());
    for s in 1..=top {
        let expected = phi_reference(s).map_err(|e| e.to_string())?;
        if phi_s_of(a, s)? != &expected {
            return Err(format!("Φ_{s} differs from reference"));
        }
    }
    Ok(format!("s <= {top}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            n_max: 9,
            s_max: 5,
            i_max: 6,
            k_max: 6,
        }
    }

    #[test]
    fn clean_battery_passes() {
        let r = run_battery(&small(), &[]).unwrap();
        assert!(
            r.passed(),
            "{:?}",
            r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
        assert_eq!(r.checks.len(), CHECKS.len());
    }

    #[test]
    fn corruption_specs_round_trip() {
        for src in ["psi:3:1:0", "phi:4:5", "table:6:2"] {
            let c: Corruption = src.parse().unwrap();
            assert_eq!(c.to_string(), src);
        }
        assert!("psi:3".parse::<Corruption>().is_err());
        assert!("nope:1:2".parse::<Corruption>().is_err());
    }

    #[test]
    fn corrupted_inputs_fail_named_checks() {
        let r = run_battery(&small(), &["psi:3:0:0".parse().unwrap()]).unwrap();
        assert!(r.failed().contains(&"psi-recurrence"));
        assert!(r.failed().contains(&"psi-reference"));

        let r = run_battery(&small(), &["phi:4:0".parse().unwrap()]).unwrap();
        assert!(r.failed().contains(&"series-vs-recurrence"));

        let r = run_battery(&small(), &["table:7:3".parse().unwrap()]).unwrap();
        assert!(r.failed().contains(&"row-sums"));
        assert!(r.failed().contains(&"brute-vs-recurrence"));
    }

    #[test]
    fn invalid_configs() {
        let mut c = small();
        c.n_max = 1;
        assert!(run_battery(&c, &[]).is_err());
        assert!(run_battery(&small(), &["psi:40:0:0".parse().unwrap()]).is_err());
    }
}
