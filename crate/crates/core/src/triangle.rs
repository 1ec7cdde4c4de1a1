//! The table of exact counts `P(n, s)`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// `P(n, s)` for `2 <= n <= n_max` and `1 <= s <= n - 1`.
///
/// Lookups outside that range yield zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunCountTriangle {
    n_max: usize,
    rows: Vec<Vec<BigUint>>,
}

/// Location and values of the first entry where two triangles differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: usize,
    pub s: usize,
    pub left: BigUint,
    pub right: BigUint,
}

impl RunCountTriangle {
    /// `rows[k]` holds `P(k + 2, 1..=k + 1)`.
    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::OutOfDomain(
                "triangle needs at least the n = 2 row".into(),
            ));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(Error::OutOfDomain(format!(
                    "row n = {} has {} entries, expected {}",
                    k + 2,
                    row.len(),
                    k + 1
                )));
            }
        }
        Ok(RunCountTriangle {
            n_max: rows.len() + 1,
            rows,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, s: usize) -> BigUint {
        if n < 2 || n > self.n_max || s < 1 || s >= n {
            return BigUint::zero();
        }
        self.rows[n - 2][s - 1].clone()
    }

    /// `P(n, 1..=n-1)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 2]
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(k, r)| (k + 2, r.as_slice()))
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }

    /// First `n` whose row does not sum to `n!`.
    pub fn row_sum_violation(&self) -> Option<usize> {
        (2..=self.n_max).find(|&n| self.row_sum(n) != factorial(n as u64))
    }

    /// Adds `delta` to one entry; used to inject faults into verification runs.
    pub fn perturb(&mut self, n: usize, s: usize, delta: u32) -> Result<()> {
        if n < 2 || n > self.n_max || s < 1 || s >= n {
            return Err(Error::OutOfDomain(format!(
                "no entry P({n}, {s}) in triangle"
            )));
        }
        self.rows[n - 2][s - 1] += delta;
        Ok(())
    }

    /// Compares both triangles over `2 <= n <= n_max`, `1 <= s <= min(n - 1, s_max)`.
    pub fn first_disagreement(
        &self,
        other: &RunCountTriangle,
        n_max: usize,
        s_max: usize,
    ) -> Option<Disagreement> {
        for n in 2..=n_max {
            for s in 1..=s_max.min(n - 1) {
                let (left, right) = (self.get(n, s), other.get(n, s));
                if left != right {
                    return Some(Disagreement { n, s, left, right });
                }
            }
        }
        None
    }
}
