//! Ground-truth counts by exhaustive enumeration.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::triangle::RunCountTriangle;

/// Largest `n` the enumeration accepts.
pub const MAX_BRUTE_N: usize = 11;

/// A bijection on `{1, …, n}` with `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::OutOfDomain(format!("permutation length {n} < 2")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::OutOfDomain(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn runs(&self) -> usize {
        count_runs(&self.0)
    }
}

/// One plus the number of interior positions where the direction of
/// consecutive comparisons flips. Assumes distinct values and length >= 2.
pub fn count_runs(p: &[u32]) -> usize {
    debug_assert!(p.len() >= 2);
    let mut runs = 1;
    let mut rising = p[1] > p[0];
    for w in p[1..].windows(2) {
        let up = w[1] > w[0];
        if up != rising {
            runs += 1;
            rising = up;
        }
    }
    runs
}

/// Tally of run counts over all permutations of `1..=n` whose first entry is `first`.
fn tally_with_first(n: usize, first: u32) -> Vec<u64> {
    let mut buf: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    let mut tally = vec![0u64; n];
    tally[count_runs(&buf)] += 1;

    // Heap's algorithm on buf[1..].
    let m = n - 1;
    let mut c = vec![0usize; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                buf.swap(1, 1 + i);
            } else {
                buf.swap(1 + c[i], 1 + i);
            }
            tally[count_runs(&buf)] += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    tally
}

/// Tally `[_, P(n,1), …, P(n,n-1)]` for a single `n`, index 0 unused.
pub fn brute_row(n: usize) -> Vec<u64> {
    (1..=n as u32)
        .into_par_iter()
        .map(|first| tally_with_first(n, first))
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

pub fn brute_triangle(n_max: usize) -> Result<RunCountTriangle> {
    if !(2..=MAX_BRUTE_N).contains(&n_max) {
        return Err(Error::OutOfDomain(format!(
            "brute force needs 2 <= n_max <= {MAX_BRUTE_N}, got {n_max}"
        )));
    }
    let rows = (2..=n_max)
        .map(|n| {
            brute_row(n)[1..]
                .iter()
                .map(|&c| BigUint::from(c))
                .collect()
        })
        .collect();
    RunCountTriangle::from_rows(rows)
}
