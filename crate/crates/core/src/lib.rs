//! Exact computation of psi-class intersection numbers on the moduli of
//! curves, and mechanical verification of the generating-function identities
//! that certify the non-vanishing of the degree-(g-2) kappa class.
//!
//! The crate is pure algorithm: every number is an exact rational, every
//! check is an exact equality, and nothing here does IO. The companion CLI
//! crate provides the human interface.
//!
//! - [`rational`] — arbitrary-precision rationals, factorials, binomials.
//! - [`series`] — truncated multivariate formal power series.
//! - [`bernoulli`] — Bernoulli numbers and the closed-form target values.
//! - [`linalg`] — exact sparse Gaussian elimination.
//! - [`correlators`] — the intersection-number engine (one, two, and three
//!   insertions).
//! - [`identities`] — the verification harness for the differential
//!   equations, the telescoping sums, and the final assembly.
//! - [`hodge`] — the lambda-class algebra and graded ideal membership.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bernoulli;
pub mod correlators;
pub mod hodge;
pub mod identities;
pub mod linalg;
pub mod rational;
pub mod series;

pub use correlators::{CorrelatorEngine, TauWord};
pub use rational::Rational;
pub use series::{Context, Monomial, Series, Truncation};
