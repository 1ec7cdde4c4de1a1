//! Interchangeable ways of computing the `P(n, s)` triangle, registered by name.

use std::collections::BTreeMap;

use crate::brute::{brute_triangle, MAX_BRUTE_N};
use crate::closed_form::ClosedForm;
use crate::error::{Error, Result};
use crate::genfun::u_s_series;
use crate::rational::to_natural;
use crate::recurrence::build_triangle;
use crate::triangle::RunCountTriangle;

pub trait RunCountMethod: Send + Sync {
    /// Registry key, also the CLI `--method` value.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Largest `n_max` the method accepts, if bounded.
    fn max_n(&self) -> Option<usize> {
        None
    }

    fn triangle(&self, n_max: usize) -> Result<RunCountTriangle>;

    fn check_domain(&self, n_max: usize) -> Result<()> {
        if n_max < 2 {
            return Err(Error::OutOfDomain(format!(
                "n_max must be >= 2, got {n_max}"
            )));
        }
        match self.max_n() {
            Some(cap) if n_max > cap => Err(Error::OutOfDomain(format!(
                "method `{}` supports n_max <= {cap}, got {n_max}",
                self.name()
            ))),
            _ => Ok(()),
        }
    }
}

pub struct BruteForce;

impl RunCountMethod for BruteForce {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn description(&self) -> &'static str {
        "enumerate all n! permutations and count runs"
    }

    fn max_n(&self) -> Option<usize> {
        Some(MAX_BRUTE_N)
    }

    fn triangle(&self, n_max: usize) -> Result<RunCountTriangle> {
        self.check_domain(n_max)?;
        brute_triangle(n_max)
    }
}

pub struct Recurrence;

impl RunCountMethod for Recurrence {
    fn name(&self) -> &'static str {
        "recurrence"
    }

    fn description(&self) -> &'static str {
        "three-term recurrence in n from the base row n = 2"
    }

    fn triangle(&self, n_max: usize) -> Result<RunCountTriangle> {
        self.check_domain(n_max)?;
        build_triangle(n_max)
    }
}

pub struct ClosedFormSum;

impl RunCountMethod for ClosedFormSum {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn description(&self) -> &'static str {
        "explicit sum over K(s-i) (s-i)^n Q_i(n,s)"
    }

    fn triangle(&self, n_max: usize) -> Result<RunCountTriangle> {
        self.check_domain(n_max)?;
        ClosedForm::new(n_max - 1).triangle(n_max)
    }
}

pub struct SeriesCoefficients;

impl RunCountMethod for SeriesCoefficients {
    fn name(&self) -> &'static str {
        "series"
    }

    fn description(&self) -> &'static str {
        "coefficients of Φ_s(x)/Δ_s(x) for each s"
    }

    fn triangle(&self, n_max: usize) -> Result<RunCountTriangle> {
        self.check_domain(n_max)?;
        let columns = (1..n_max)
            .map(|s| u_s_series(s as u32, n_max))
            .collect::<Result<Vec<_>>>()?;
        let rows = (2..=n_max)
            .map(|n| {
                (1..n)
                    .map(|s| {
                        let c = columns[s - 1].coeff(n);
                        to_natural(c).ok_or_else(|| {
                            Error::OutOfDomain(format!(
                                "series coefficient P({n},{s}) = {c} is not a count"
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RunCountTriangle::from_rows(rows)
    }
}

/// Name-keyed collection of [`RunCountMethod`]s.
pub struct MethodRegistry {
    methods: BTreeMap<&'static str, Box<dyn RunCountMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        MethodRegistry {
            methods: BTreeMap::new(),
        }
    }

    /// Registers a method, replacing any previous one with the same name.
    pub fn register(&mut self, method: Box<dyn RunCountMethod>) {
        self.methods.insert(method.name(), method);
    }

    pub fn get(&self, name: &str) -> Option<&dyn RunCountMethod> {
        self.methods.get(name).map(|m| m.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn RunCountMethod> {
        self.methods.values().map(|m| m.as_ref())
    }

    pub fn triangle(&self, name: &str, n_max: usize) -> Result<RunCountTriangle> {
        let method = self.get(name).ok_or_else(|| {
            Error::OutOfDomain(format!(
                "unknown method `{name}` (known: {})",
                self.names().join(", ")
            ))
        })?;
        method.triangle(n_max)
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        let mut r = MethodRegistry::empty();
        r.register(Box::new(BruteForce));
        r.register(Box::new(Recurrence));
        r.register(Box::new(ClosedFormSum));
        r.register(Box::new(SeriesCoefficients));
        r
    }
}
