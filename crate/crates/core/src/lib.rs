//! Exact-arithmetic tests for membership of generalized hypergeometric
//! functions `pFq` (p <= q) in the Laguerre-Polya class LP+.
//!
//! The pipeline is entirely rational:
//!
//! 1. [`hyper`] generates the Taylor coefficients of `pFq` exactly.
//! 2. The signed coefficients `(-1)^n [x^n] f'/f` form a candidate Stieltjes
//!    moment sequence; if `f` is in LP+ they must be one.
//! 3. [`sfrac`] expands that sequence as a Stieltjes continued fraction.
//!    A negative coefficient preceded by positive ones certifies `f` is not in
//!    LP+; nonnegative coefficients up to a depth are evidence only.
//!
//! [`symbolic`] repeats the same pipeline over rational functions of `b2`
//! to study the leading coefficients of the continued-fraction numerators,
//! and [`scan`] searches parameter space for sign changes.

pub mod cli;
pub mod error;
pub mod hyper;
pub mod rat;
pub mod scan;
pub mod series;
pub mod sfrac;
pub mod symbolic;

pub use error::{Error, Result};
pub use hyper::HyperParams;
pub use rat::Rat;
pub use series::{Field, PowerSeries};
pub use sfrac::{SFractionReport, SFractionStatus, Verdict};
