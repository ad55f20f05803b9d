use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::poly::{Poly1, Var};
use super::poly3::closed_forms::{
    alpha1_den, alpha2_den, conjectured_degree, conjectured_lead, d3,
};
use super::poly3::Poly3;
use super::ratfunc::RatFunc1;
use crate::error::{Error, Result};
use crate::hyper::{pfq_coefficients, signed_logderiv};
use crate::rat::Rat;
use crate::sfrac::{sfraction_expand_generic, SFractionStatus};

/// `alpha_0 ..= alpha_depth` of `1F2(b1 + gamma; b1, b2; .)` as reduced
/// rational functions of `b2` (normalized moments, so `alpha_0 = 1`).
pub fn alphas_univariate(gamma: &Rat, b1: &Rat, depth: usize) -> Result<Vec<RatFunc1>> {
    if !b1.is_positive() {
        return Err(Error::InvalidParams(format!("b1 = {b1} must be positive")));
    }
    let a1 = b1 + gamma;
    if a1.is_nonpositive_integer() {
        return Err(Error::InvalidParams(format!(
            "a1 = b1 + gamma = {a1} is a nonpositive integer"
        )));
    }
    let c = |r: &Rat| RatFunc1::constant(Var::B2, r.clone());
    let upper = [c(&a1)];
    let lower = [c(b1), RatFunc1::var(Var::B2)];
    let f = pfq_coefficients(&upper, &lower, depth + 1);
    let moments = signed_logderiv(&f)?;
    let inv = moments[0].recip().ok_or(Error::ZeroLeadingMoment)?;
    let normalized: Vec<RatFunc1> = moments.iter().map(|m| m * &inv).collect();
    let rep = sfraction_expand_generic(&normalized, depth)?;
    match rep.status {
        SFractionStatus::Complete => Ok(rep.alphas),
        SFractionStatus::TerminatedAt(k) | SFractionStatus::DegenerateAt(k) => {
            Err(Error::DegeneratePivot(k))
        }
    }
}

/// `alpha_n` as a reduced rational function of `b2`. Coefficients past `n`
/// do not influence `alpha_n`, so the expansion stops at `n` whatever
/// `depth` is.
pub fn alpha_univariate(n: usize, gamma: &Rat, b1: &Rat, depth: usize) -> Result<RatFunc1> {
    if n > depth {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds depth = {depth}"
        )));
    }
    Ok(alphas_univariate(gamma, b1, n)?.swap_remove(n))
}

/// Lower end of the parameter region `gamma >= floor((n - 2) / 2)`.
pub fn region_gamma_min(n: usize) -> i64 {
    (n as i64 - 2).div_euclid(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LeadStatus {
    Match,
    /// The conjectured leading coefficient vanishes and the numerator degree
    /// indeed falls short of `C(n,2) + 1`.
    ConsistentWithZeroLead,
    Mismatch,
}

/// One row of a leading-coefficient check.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub gamma: Rat,
    pub b1: Rat,
    pub degree_expected: usize,
    pub degree_actual: Option<usize>,
    pub lead_expected: Rat,
    pub lead_actual: Rat,
    /// `lead_actual / lead_expected`. Exactly 1 when the numerator could be
    /// put on the closed-form denominator (n <= 3).
    pub normalization: Option<Rat>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub status: LeadStatus,
}

/// Known closed-form denominators for the first coefficients.
fn reference_denominator(n: usize) -> Option<Poly3> {
    match n {
        1 => Some(alpha1_den()),
        2 => Some(alpha2_den()),
        3 => Some(d3()),
        _ => None,
    }
}

/// Numerator of `alpha_n` on a fixed denominator scale.
///
/// For `n <= 3` the reduced function is put over the closed-form
/// denominator, which recovers the numerator polynomial exactly. Otherwise
/// the reduced denominator is scaled to take the value 1 at `b2 = 1`; the
/// numerator then agrees with any other normalization whose denominator is
/// positive at `b2 = 1` up to a positive constant.
fn normalized_numerator(
    n: usize,
    alpha: &RatFunc1,
    gamma: &Rat,
    b1: &Rat,
) -> Result<(Poly1, bool)> {
    if let Some(d) = reference_denominator(n) {
        let d = d.specialize_b2(gamma, b1);
        let num = (alpha.num() * &d).exact_div(alpha.den()).ok_or_else(|| {
            Error::NormalizationAmbiguous(format!(
                "reduced denominator of alpha_{n} does not divide the closed form"
            ))
        })?;
        return Ok((num, true));
    }
    let probe = alpha.den().eval(&Rat::one());
    if probe.is_zero() {
        return Err(Error::NormalizationAmbiguous(format!(
            "reduced denominator of alpha_{n} vanishes at b2 = 1"
        )));
    }
    Ok((alpha.num().scale(&probe.recip().unwrap()), false))
}

/// Checks the conjectured numerator degree `C(n,2) + 1` in `b2` and its
/// leading coefficient at one specialization `(gamma, b1)`.
pub fn conjecture6b_check(n: usize, gamma: &Rat, b1: &Rat) -> Result<ConjectureRow> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let alpha = alpha_univariate(n, gamma, b1, n)?;
    let (num, exact) = normalized_numerator(n, &alpha, gamma, b1)?;
    let degree_expected = conjectured_degree(n);
    let lead_expected = conjectured_lead(n).eval(gamma, b1, &Rat::zero());
    let degree_actual = num.degree();
    let lead_actual = num.leading_coeff();

    let (status, normalization) = if lead_expected.is_zero() {
        let short = degree_actual.is_none_or(|d| d < degree_expected);
        let status = if short {
            LeadStatus::ConsistentWithZeroLead
        } else {
            LeadStatus::Mismatch
        };
        (status, None)
    } else {
        let ratio = &lead_actual / &lead_expected;
        let lead_ok = if exact {
            ratio.is_one()
        } else {
            ratio.is_positive()
        };
        let status = if degree_actual == Some(degree_expected) && lead_ok {
            LeadStatus::Match
        } else {
            LeadStatus::Mismatch
        };
        (status, Some(ratio))
    };
    Ok(ConjectureRow {
        n,
        gamma: gamma.clone(),
        b1: b1.clone(),
        degree_expected,
        degree_actual,
        lead_expected,
        lead_actual,
        normalization,
        matches: status != LeadStatus::Mismatch,
        status,
    })
}

/// `[b2^4] N_3 = gamma^2 (gamma - 1)`, with `N_3` recovered exactly from the
/// closed-form denominator `D_3`.
pub fn n3_leading_check(gamma: &Rat, b1: &Rat) -> Result<ConjectureRow> {
    conjecture6b_check(3, gamma, b1)
}

#[derive(Clone, Debug, Serialize)]
pub struct Sample6a {
    pub index: usize,
    pub b1: Rat,
    pub b2: Rat,
    pub gamma: Rat,
    /// Reduced denominator of `alpha_n` is nonzero at the sample.
    pub finite: bool,
    /// Closed-form `D_3` at the sample (n = 3 only).
    pub d3: Option<Rat>,
    pub violation: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Conjecture6aReport {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub gamma_min: i64,
    /// Draws rejected because a pivot vanished identically in `b2` or the
    /// parameters were invalid, and redrawn.
    pub redrawn: usize,
    pub violations: Vec<Sample6a>,
}

/// Evaluates the denominator-positivity claim at one point.
pub fn conjecture6a_point(n: usize, b1: &Rat, b2: &Rat, gamma: &Rat) -> Result<Sample6a> {
    let alpha = alpha_univariate(n, gamma, b1, n)?;
    let finite = !alpha.den().eval(b2).is_zero();
    let d3 = (n == 3).then(|| d3().eval(gamma, b1, b2));
    let violation = !finite || d3.as_ref().is_some_and(|d| !d.is_positive());
    Ok(Sample6a {
        index: 0,
        b1: b1.clone(),
        b2: b2.clone(),
        gamma: gamma.clone(),
        finite,
        d3,
        violation,
    })
}

const MAX_REDRAWS: usize = 64;

fn draw(rng: &mut ChaCha8Rng, gamma_min: i64) -> (Rat, Rat, Rat) {
    let mut below = |max: i64| {
        let den = rng.gen_range(1..=20);
        Rat::frac(rng.gen_range(1..=max * den), den)
    };
    let (b1, b2) = (below(10), below(100));
    let den = rng.gen_range(1..=12);
    let gamma = Rat::from_int(gamma_min) + Rat::frac(rng.gen_range(0..=4 * den), den);
    (b1, b2, gamma)
}

/// Samples `(b1, b2, gamma)` with `b1 in (0, 10]`, `b2 in (0, 100]` and
/// `gamma in [floor((n-2)/2), floor((n-2)/2) + 4]`, all rational, and records
/// every sample where `alpha_n` has a pole or (n = 3) `D_3 <= 0`.
///
/// Sample `i` is drawn from its own ChaCha stream `i` of `seed`, so any
/// reported violation replays from `(seed, index)` and the report does not
/// depend on thread scheduling.
pub fn conjecture6a_sample(n: usize, samples: usize, seed: u64) -> Result<Conjecture6aReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} must lie in 1..=6")));
    }
    let gamma_min = region_gamma_min(n);
    let outcomes: Vec<(Sample6a, usize)> = (0..samples)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            for redrawn in 0..MAX_REDRAWS {
                let (b1, b2, gamma) = draw(&mut rng, gamma_min);
                match conjecture6a_point(n, &b1, &b2, &gamma) {
                    Ok(mut s) => {
                        s.index = index;
                        return Ok((s, redrawn));
                    }
                    Err(Error::DegeneratePivot(_)) | Err(Error::InvalidParams(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::InvalidArgument(format!(
                "sample {index}: no usable draw after {MAX_REDRAWS} attempts"
            )))
        })
        .collect::<Result<_>>()?;
    let redrawn = outcomes.iter().map(|(_, r)| r).sum();
    let violations = outcomes
        .into_iter()
        .filter(|(s, _)| s.violation)
        .map(|(s, _)| s)
        .collect();
    Ok(Conjecture6aReport {
        n,
        seed,
        samples,
        gamma_min,
        redrawn,
        violations,
    })
}
