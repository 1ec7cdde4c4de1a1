//! Exact enumeration of permutations of `1..=n` by their number of runs
//! (maximal monotone intervals).
//!
//! The count `P(n, s)` is computed four independent ways, each exposed as a
//! [`methods::RunCountMethod`] behind a name-keyed [`methods::MethodRegistry`]:
//!
//! - `brute`: exhaustive enumeration of all `n!` permutations,
//! - `recurrence`: the classical three-term recurrence in `n`,
//! - `closed`: the explicit sum `Σ_i K(s-i) (s-i)^n Q_i(n, s)`,
//! - `series`: coefficients of the rational generating function `Φ_s(x) / Δ_s(x)`.
//!
//! Every object is held with exact rational coefficients; there is no floating
//! point anywhere in the computational core.

pub mod binomial;
pub mod bivariate;
pub mod brute;
pub mod closed_form;
pub mod error;
pub mod expr;
pub mod genfun;
pub mod methods;
pub mod poly;
pub mod rational;
pub mod recurrence;
pub mod reference;
pub mod series;
pub mod triangle;
pub mod verify;

pub use bivariate::BivariatePolynomial;
pub use error::{Error, Result};
pub use methods::{MethodRegistry, RunCountMethod};
pub use poly::{Polynomial, Var};
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use triangle::RunCountTriangle;
