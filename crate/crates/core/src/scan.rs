//! Sign evaluation of `alpha_n` for `1F2(b1 + gamma; b1, b2; .)` over
//! parameter grids, and bisection in `b2` for the point where `alpha_n`
//! turns negative. Every decision is an exact rational sign.

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::HyperParams;
use crate::rat::Rat;
use crate::sfrac::{lp_plus_report, Verdict};

/// One evaluated grid point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub b1: Rat,
    pub gamma: Rat,
    pub b2: Rat,
    pub n: usize,
    /// Sign of `alpha_n`; 0 when an earlier pivot vanished.
    pub alpha_sign: i8,
    pub verdict: Verdict,
    /// Depth the verdict covers.
    pub depth: usize,
}

impl ScanPoint {
    /// `b1,gamma,b2,n_first_negative,alpha_value,depth`
    pub const CSV_HEADER: &'static str = "b1,gamma,b2,n_first_negative,alpha_value,depth";

    pub fn csv_row(&self) -> String {
        let (k, alpha) = match &self.verdict {
            Verdict::FirstNegativeAlpha { k, alpha } => (k.to_string(), alpha.to_string()),
            Verdict::StieltjesUpTo(_) => ("none".to_string(), String::new()),
            Verdict::Degenerate(_) => ("degenerate".to_string(), String::new()),
        };
        format!(
            "{},{},{},{k},{alpha},{}",
            self.b1, self.gamma, self.b2, self.depth
        )
    }
}

impl Serialize for ScanPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ScanPoint", 8)?;
        st.serialize_field("b1", &self.b1)?;
        st.serialize_field("gamma", &self.gamma)?;
        st.serialize_field("b2", &self.b2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("alpha_sign", &self.alpha_sign)?;
        st.serialize_field("kind", self.verdict.kind())?;
        st.serialize_field("k", &self.verdict.k())?;
        let alpha = match &self.verdict {
            Verdict::FirstNegativeAlpha { alpha, .. } => Some(alpha),
            _ => None,
        };
        st.serialize_field("alpha", &alpha)?;
        st.serialize_field("depth", &self.depth)?;
        st.end()
    }
}

/// Bracket around a sign change of `alpha_n` in `b2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdResult {
    pub b1: Rat,
    pub gamma: Rat,
    pub n: usize,
    /// `alpha_n >= 0` here.
    #[serde(rename = "lo")]
    pub bracket_lo: Rat,
    /// `alpha_n < 0` here.
    #[serde(rename = "hi")]
    pub bracket_hi: Rat,
    pub width: Rat,
}

impl ThresholdResult {
    /// Whether `x` lies in `[lo, hi + slack]`.
    pub fn contains_within(&self, x: &Rat, slack: &Rat) -> bool {
        &self.bracket_lo <= x && x <= &(&self.bracket_hi + slack)
    }
}

/// Exact sign of `alpha_n` for `1F2(b1 + gamma; b1, b2; .)`, together with
/// the verdict over `alpha_1 ..= alpha_depth`. `depth` is raised to `n` if
/// smaller.
pub fn alpha_sign_at(
    b1: &Rat,
    gamma: &Rat,
    b2: &Rat,
    n: usize,
    depth: usize,
) -> Result<(i8, Verdict)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if !b1.is_positive() || !b2.is_positive() {
        return Err(Error::InvalidParams(format!(
            "b1 = {b1} and b2 = {b2} must be positive"
        )));
    }
    let params = HyperParams::f12(b1 + gamma, b1.clone(), b2.clone())?;
    let report = lp_plus_report(&params, depth.max(n))?;
    let sign = match report.verdict {
        Verdict::Degenerate(k) if k < n => 0,
        _ => report.sfraction.alphas.get(n).map_or(0, Rat::signum),
    };
    Ok((sign, report.verdict))
}

fn sign_for_bisection(b1: &Rat, gamma: &Rat, b2: &Rat, n: usize) -> Result<i8> {
    Ok(alpha_sign_at(b1, gamma, b2, n, n)?.0)
}

/// Bisects `[lo, hi]` in `b2` down to `precision`, keeping `alpha_n >= 0` at
/// the lower end and `alpha_n < 0` at the upper end. Midpoints are exact.
pub fn threshold_bisect(
    b1: &Rat,
    gamma: &Rat,
    n: usize,
    lo: &Rat,
    hi: &Rat,
    precision: &Rat,
) -> Result<ThresholdResult> {
    if !precision.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "precision {precision} must be positive"
        )));
    }
    let lo_sign = sign_for_bisection(b1, gamma, lo, n)?;
    let hi_sign = sign_for_bisection(b1, gamma, hi, n)?;
    if lo_sign < 0 || hi_sign >= 0 || lo >= hi {
        return Err(Error::BadBracket { lo_sign, hi_sign });
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    while &hi - &lo > *precision {
        let mid = lo.midpoint(&hi);
        if sign_for_bisection(b1, gamma, &mid, n)? < 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdResult {
        b1: b1.clone(),
        gamma: gamma.clone(),
        n,
        width: &hi - &lo,
        bracket_lo: lo,
        bracket_hi: hi,
    })
}

/// Evaluates every `(gamma, b2)` pair, gamma-major, in parallel on the
/// current rayon pool. Output order follows input order. A point whose
/// parameters are rejected is recorded as degenerate at index 0.
pub fn grid_scan(
    b1: &Rat,
    gammas: &[Rat],
    b2s: &[Rat],
    n_max: usize,
    depth: usize,
) -> Vec<ScanPoint> {
    let depth = depth.max(n_max);
    let pairs: Vec<(&Rat, &Rat)> = gammas
        .iter()
        .flat_map(|g| b2s.iter().map(move |b| (g, b)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(gamma, b2)| {
            let (alpha_sign, verdict) =
                alpha_sign_at(b1, gamma, b2, n_max, depth).unwrap_or((0, Verdict::Degenerate(0)));
            ScanPoint {
                b1: b1.clone(),
                gamma: gamma.clone(),
                b2: b2.clone(),
                n: n_max,
                alpha_sign,
                verdict,
                depth,
            }
        })
        .collect()
}

/// CSV rendering with header.
pub fn to_csv(points: &[ScanPoint]) -> String {
    let mut out = String::from(ScanPoint::CSV_HEADER);
    out.push('\n');
    for p in points {
        out.push_str(&p.csv_row());
        out.push('\n');
    }
    out
}
