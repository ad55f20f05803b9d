//! Exact polynomial and rational-function algebra in `b2`, used to study the
//! continued-fraction coefficients `alpha_n` of `1F2(b1 + gamma; b1, b2; .)`
//! as functions of `b2` with `gamma` and `b1` fixed.

mod alpha;
pub mod poly;
pub mod poly3;
pub mod ratfunc;
pub mod sturm;

pub use alpha::{
    alpha_univariate, alphas_univariate, conjecture6a_point, conjecture6a_sample,
    conjecture6b_check, n3_leading_check, region_gamma_min, Conjecture6aReport, ConjectureRow,
    LeadStatus, Sample6a,
};
pub use poly::{Poly1, Var};
pub use poly3::Poly3;
pub use ratfunc::RatFunc1;
pub use sturm::{sturm_real_roots, sturm_sequence, Bound};
