//! Exact even zeta values and the machinery that certifies them.
//!
//! ζ(2l) is a rational multiple of π^{2l}. This crate computes that
//! rational exactly by four independent routes — a recurrence obtained by
//! telescoping continuous-discrete WZ pairs, Euler's Bernoulli-number
//! formula, and two classical recurrences of Srivastava — and numerically
//! verifies every identity the derivation leans on: the WZ equation and its
//! telescoped form, the Dirichlet-kernel integrals and their decay bound,
//! the Cauchy formula for repeated integration, the kernel decomposition of
//! partial cosine sums, and the alternating-series relation.
//!
//! Start from the runnable examples (`cargo run --example compute_even_zeta`)
//! or the `even-zeta` binary, which exposes the same suites as subcommands
//! with text, JSON, and CSV reports.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exact;
pub mod report;
pub mod wz;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{binomial, factorial, pi_digits, DecimalString, Rational};
pub use report::{Case, VerificationReport};
pub use zeta::{zeta_even_sequence, Route, ZetaCoefficient};
