//! Stieltjes continued fractions
//!
//! ```text
//! s_0 + s_1 t + s_2 t^2 + ... = a_0 / (1 - a_1 t / (1 - a_2 t / (1 - ...)))
//! ```
//!
//! A real sequence is a Stieltjes moment sequence exactly when all
//! `a_1, a_2, ...` are nonnegative. Combined with the signed
//! log-derivative moments of an entire function `f` this gives a one-sided
//! test for `f` in LP+:
//!
//! * [`Verdict::FirstNegativeAlpha`] certifies that `f` is **not** in LP+.
//! * [`Verdict::StieltjesUpTo`] only says nothing went wrong up to the depth
//!   examined. Membership needs every coefficient, so it is never proved here.
//! * [`Verdict::Degenerate`] means a coefficient vanished while the remainder
//!   did not, and the sign test is inconclusive at that parameter point.

mod hankel;

pub use hankel::{det_fraction_free, hankel_determinants};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hyper::{signed_logderiv_moments, HyperParams};
use crate::rat::Rat;
use crate::series::{Field, PowerSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SFractionStatus {
    /// All of `a_1 ..= a_depth` were computed and are nonzero.
    Complete,
    /// `a_k = 0` and the remainder vanishes through the available order: the
    /// fraction is finite.
    TerminatedAt(usize),
    /// `a_k = 0` but the remainder does not vanish; expansion cannot continue.
    DegenerateAt(usize),
}

/// Coefficients `a_0 ..= a_k` actually computed. For the two zero-pivot
/// statuses the last entry is the vanishing `a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFractionReport<F = Rat> {
    pub alphas: Vec<F>,
    pub depth_requested: usize,
    pub status: SFractionStatus,
}

fn check_input<F: Field>(moments: &[F], depth: usize) -> Result<()> {
    if moments.len() < depth + 1 {
        return Err(Error::TooFewMoments {
            needed: depth + 1,
            got: moments.len(),
        });
    }
    if moments[0].is_zero() {
        return Err(Error::ZeroLeadingMoment);
    }
    Ok(())
}

/// Inspects the level-`k` remainder `h` (with `h_0 = 0`). Returns the
/// coefficient `a_k = h_1`, or the terminal status when it vanishes.
fn pivot<F: Field>(h: &PowerSeries<F>, k: usize) -> std::result::Result<F, SFractionStatus> {
    let a = h.coeff(1);
    if !a.is_zero() {
        Ok(a.clone())
    } else if h.is_zero() {
        Err(SFractionStatus::TerminatedAt(k))
    } else {
        Err(SFractionStatus::DegenerateAt(k))
    }
}

/// Euler-Viscovatov expansion of `s_0 ..= s_depth` into `a_0 ..= a_depth`.
///
/// Keeps two rows `A_{k-1}, A_k` with `A_{-1} = 1`, `A_0 = S / s_0`, and
/// `A_{k+1} = (A_k - A_{k-1}) / (a_{k+1} t)`, where `a_{k+1}` is the
/// coefficient of `t` in `A_k - A_{k-1}`. Only divisions by the `a_k`
/// themselves are needed.
pub fn sfraction_expand_generic<F: Field>(
    moments: &[F],
    depth: usize,
) -> Result<SFractionReport<F>> {
    check_input(moments, depth)?;
    let a0 = moments[0].clone();
    let inv0 = F::one().over(&a0);
    let mut prev = PowerSeries::one(depth);
    let mut cur = PowerSeries::new(moments[..=depth].to_vec()).scale(&inv0);
    let mut alphas = vec![a0];
    for k in 1..=depth {
        let diff = &cur - &prev;
        let a = match pivot(&diff, k) {
            Ok(a) => a,
            Err(status) => {
                alphas.push(F::zero());
                return Ok(SFractionReport {
                    alphas,
                    depth_requested: depth,
                    status,
                });
            }
        };
        let next = diff
            .shift_down()
            .expect("order >= 1")
            .scale(&F::one().over(&a));
        alphas.push(a);
        prev = cur.truncate(next.order());
        cur = next;
    }
    Ok(SFractionReport {
        alphas,
        depth_requested: depth,
        status: SFractionStatus::Complete,
    })
}

/// Successive-division expansion: at each level invert the remainder series
/// `G_k`, read `a_{k+1}` off `1 - 1/G_k`, and recurse on the quotient.
/// Slower than [`sfraction_expand_generic`]; kept as an independent backend.
pub fn sfraction_expand_by_division<F: Field>(
    moments: &[F],
    depth: usize,
) -> Result<SFractionReport<F>> {
    check_input(moments, depth)?;
    let a0 = moments[0].clone();
    let mut g = PowerSeries::new(moments[..=depth].to_vec()).scale(&F::one().over(&a0));
    let mut alphas = vec![a0];
    for k in 1..=depth {
        let h = &PowerSeries::one(g.order()) - &g.reciprocal()?;
        let a = match pivot(&h, k) {
            Ok(a) => a,
            Err(status) => {
                alphas.push(F::zero());
                return Ok(SFractionReport {
                    alphas,
                    depth_requested: depth,
                    status,
                });
            }
        };
        g = h
            .shift_down()
            .expect("order >= 1")
            .scale(&F::one().over(&a));
        alphas.push(a);
    }
    Ok(SFractionReport {
        alphas,
        depth_requested: depth,
        status: SFractionStatus::Complete,
    })
}

/// S-fraction of a rational moment sequence.
pub fn sfraction_expand(moments: &[Rat], depth: usize) -> Result<SFractionReport> {
    sfraction_expand_generic(moments, depth)
}

/// Power series of the (finite) continued fraction in `report`, through
/// `t^order`, evaluated bottom-up. For a complete report of depth `d` the
/// result matches the input moments through `t^d`.
pub fn sfraction_to_series(report: &SFractionReport, order: usize) -> Vec<Rat> {
    let mut tail = PowerSeries::<Rat>::one(order);
    for a in report.alphas[1..].iter().rev() {
        // 1 / (1 - a t tail)
        let mut shifted = vec![Rat::zero()];
        shifted.extend(tail.coeffs()[..order].iter().map(|c| -(c * a)));
        shifted[0] = Rat::one();
        tail = PowerSeries::new(shifted)
            .reciprocal()
            .expect("unit constant term");
    }
    tail.scale(&report.alphas[0]).into_coeffs()
}

/// Outcome of the sign test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No negative coefficient through the depth; evidence, not proof.
    StieltjesUpTo(usize),
    /// `a_k < 0` with `a_1 ..= a_{k-1}` all strictly positive: not Stieltjes,
    /// so the generating function is not in LP+.
    FirstNegativeAlpha { k: usize, alpha: Rat },
    /// `a_k = 0` with a nonzero remainder.
    Degenerate(usize),
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::StieltjesUpTo(_) => "stieltjes_up_to",
            Verdict::FirstNegativeAlpha { .. } => "first_negative_alpha",
            Verdict::Degenerate(_) => "degenerate",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            Verdict::StieltjesUpTo(_) => None,
            Verdict::FirstNegativeAlpha { k, .. } | Verdict::Degenerate(k) => Some(*k),
        }
    }

    pub fn is_certified_negative(&self) -> bool {
        matches!(self, Verdict::FirstNegativeAlpha { .. })
    }
}

/// Classifies an expansion whose `a_0` is positive.
pub fn verdict_from_report(report: &SFractionReport) -> Verdict {
    for (k, a) in report.alphas.iter().enumerate().skip(1) {
        if a.is_negative() {
            return Verdict::FirstNegativeAlpha {
                k,
                alpha: a.clone(),
            };
        }
        if a.is_zero() {
            return match report.status {
                SFractionStatus::DegenerateAt(_) => Verdict::Degenerate(k),
                _ => Verdict::StieltjesUpTo(report.depth_requested),
            };
        }
    }
    Verdict::StieltjesUpTo(report.depth_requested)
}

/// Sign test on `s_0 ..= s_depth`; requires `s_0 > 0`.
pub fn stieltjes_verdict(moments: &[Rat], depth: usize) -> Result<Verdict> {
    if moments.first().is_some_and(Rat::is_negative) {
        return Err(Error::InvalidArgument(
            "leading moment must be positive".into(),
        ));
    }
    Ok(verdict_from_report(&sfraction_expand(moments, depth)?))
}

/// Verdict plus the data behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpReport {
    pub verdict: Verdict,
    pub depth: usize,
    /// Leading moment before normalization.
    pub s0: Rat,
    /// Expansion of the normalized moments, so `alphas[0] = 1`.
    pub sfraction: SFractionReport,
}

/// Runs the LP+ sign test on `pFq(params)` to the given depth: signed
/// log-derivative moments, divided by `s_0`, expanded as an S-fraction.
pub fn lp_plus_report(params: &HyperParams, depth: usize) -> Result<LpReport> {
    if !params.all_positive() {
        return Err(Error::InvalidParams(format!(
            "all parameters must be positive: {params}"
        )));
    }
    let moments = signed_logderiv_moments(params, depth)?;
    let s0 = moments[0].clone();
    let inv = s0.recip().ok_or(Error::ZeroLeadingMoment)?;
    let normalized: Vec<Rat> = moments.iter().map(|m| m * &inv).collect();
    let sfraction = sfraction_expand(&normalized, depth)?;
    Ok(LpReport {
        verdict: verdict_from_report(&sfraction),
        depth,
        s0,
        sfraction,
    })
}

pub fn lp_plus_verdict(params: &HyperParams, depth: usize) -> Result<Verdict> {
    Ok(lp_plus_report(params, depth)?.verdict)
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    kind: &'static str,
    depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<&'a Rat>,
    s0: &'a Rat,
}

/// `{"kind", "depth", "k"?, "alpha"?, "s0"}`
impl Serialize for LpReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VerdictJson {
            kind: self.verdict.kind(),
            depth: self.depth,
            k: self.verdict.k(),
            alpha: match &self.verdict {
                Verdict::FirstNegativeAlpha { alpha, .. } => Some(alpha),
                _ => None,
            },
            s0: &self.s0,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| Rat::from_int(n)).collect()
    }

    #[test]
    fn expand_examples() {
        let rep = sfraction_expand(&ints(&[1, 0, 0, 0]), 3).unwrap();
        assert_eq!(rep.alphas, ints(&[1, 0]));
        assert_eq!(rep.status, SFractionStatus::TerminatedAt(1));

        let rep = sfraction_expand(&ints(&[1, 1, 1, 1, 1]), 4).unwrap();
        assert_eq!(rep.alphas, ints(&[1, 1, 0]));
        assert_eq!(rep.status, SFractionStatus::TerminatedAt(2));
        assert_eq!(sfraction_to_series(&rep, 6), ints(&[1; 7]));

        assert_eq!(
            sfraction_expand(&ints(&[0, 1]), 1),
            Err(Error::ZeroLeadingMoment)
        );
        assert!(matches!(
            sfraction_expand(&ints(&[1, 1]), 3),
            Err(Error::TooFewMoments { .. })
        ));
    }

    #[test]
    fn alpha1_closed_form_at_2_1_1() {
        // [a(1 + b1 + b2) - b1 b2] / [b1 (b1+1) b2 (b2+1)] at (2, 1, 1) = 5/4
        let p = HyperParams::f12(r(2, 1), r(1, 1), r(1, 1)).unwrap();
        let rep = lp_plus_report(&p, 1).unwrap();
        assert_eq!(rep.sfraction.alphas, [r(1, 1), r(5, 4)]);
        assert_eq!(rep.s0, r(2, 1));
    }

    #[test]
    fn to_series_examples() {
        let rep = |alphas: Vec<Rat>| SFractionReport {
            depth_requested: alphas.len() - 1,
            alphas,
            status: SFractionStatus::Complete,
        };
        assert_eq!(
            sfraction_to_series(&rep(ints(&[1])), 4),
            ints(&[1, 0, 0, 0, 0])
        );
        assert_eq!(
            sfraction_to_series(&rep(ints(&[1, 1])), 4),
            ints(&[1, 1, 1, 1, 1])
        );
        // 1/(1 - t/(1 - t)) = (1 - t)/(1 - 2t): 1, 1, 2, 4, 8, ...
        assert_eq!(
            sfraction_to_series(&rep(ints(&[1, 1, 1])), 5),
            ints(&[1, 1, 2, 4, 8, 16])
        );
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            stieltjes_verdict(&ints(&[1, 0, 0, 0, 0]), 4).unwrap(),
            Verdict::StieltjesUpTo(4)
        );
        assert_eq!(
            stieltjes_verdict(&ints(&[1, -1, 1, -1, 1]), 4).unwrap(),
            Verdict::FirstNegativeAlpha {
                k: 1,
                alpha: r(-1, 1)
            }
        );
        assert!(stieltjes_verdict(&ints(&[-1, 0]), 1).is_err());
    }

    #[test]
    fn lp_plus_examples() {
        let p = HyperParams::f12(r(7, 2), r(3, 2), r(7, 1)).unwrap();
        assert_eq!(lp_plus_verdict(&p, 12).unwrap(), Verdict::StieltjesUpTo(12));

        let p = HyperParams::f12(r(3, 2), r(1, 1), r(60, 1)).unwrap();
        assert!(matches!(
            lp_plus_verdict(&p, 5).unwrap(),
            Verdict::FirstNegativeAlpha { k: 3, .. }
        ));

        let p = HyperParams::f12(r(1, 1), r(2, 1), r(3, 1)).unwrap();
        assert_eq!(lp_plus_verdict(&p, 5).unwrap(), Verdict::Degenerate(1));

        let p = HyperParams::f12(r(1, 1), r(-1, 2), r(3, 1)).unwrap();
        assert!(lp_plus_verdict(&p, 5).is_err());
    }

    #[test]
    fn verdict_json() {
        let p = HyperParams::f12(r(3, 2), r(1, 1), r(60, 1)).unwrap();
        let rep = lp_plus_report(&p, 5).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["kind"], "first_negative_alpha");
        assert_eq!(v["depth"], 5);
        assert_eq!(v["k"], 3);
        assert_eq!(v["s0"], "1/40");
        assert!(v["alpha"].as_str().unwrap().starts_with('-'));

        let p = HyperParams::f12(r(2, 1), r(1, 1), r(7, 1)).unwrap();
        let s = serde_json::to_string(&lp_plus_report(&p, 3).unwrap()).unwrap();
        assert_eq!(s, r#"{"kind":"stieltjes_up_to","depth":3,"s0":"2/7"}"#);
    }

    /// `a_n` from Hankel determinant ratios, an independent route:
    /// `a_{2k} = D_{k+1} E_{k-1} / (D_k E_k)`,
    /// `a_{2k+1} = D_k E_{k+1} / (D_{k+1} E_k)`,
    /// with `D_j = det[s_{i+l}]`, `E_j = det[s_{i+l+1}]` of size `j`.
    fn alphas_from_hankel(s: &[Rat], depth: usize) -> Vec<Rat> {
        let det = |shift: usize, j: usize| -> Rat {
            let m: Vec<Vec<Rat>> = (0..j)
                .map(|i| (0..j).map(|l| s[i + l + shift].clone()).collect())
                .collect();
            det_fraction_free(&m)
        };
        let mut out = vec![s[0].clone()];
        for n in 1..=depth {
            let k = n / 2;
            let a = if n % 2 == 0 {
                det(0, k + 1) * det(1, k - 1) / (det(0, k) * det(1, k))
            } else {
                det(0, k) * det(1, k + 1) / (det(0, k + 1) * det(1, k))
            };
            out.push(a);
        }
        out
    }

    fn arb_params() -> impl Strategy<Value = HyperParams> {
        let pos = || (1i64..40, 1i64..8).prop_map(|(n, d)| Rat::frac(n, d));
        (pos(), pos(), pos()).prop_map(|(a, b1, b2)| HyperParams::f12(a, b1, b2).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn backends_agree_with_each_other_and_hankel(p in arb_params()) {
            let depth = 6;
            let m = signed_logderiv_moments(&p, depth).unwrap();
            let a = sfraction_expand(&m, depth).unwrap();
            let b = sfraction_expand_by_division(&m, depth).unwrap();
            prop_assert_eq!(&a, &b);
            if a.status == SFractionStatus::Complete {
                prop_assert_eq!(a.alphas.clone(), alphas_from_hankel(&m, depth));
                prop_assert_eq!(sfraction_to_series(&a, depth), m);
            }
        }

        #[test]
        fn scaling_covariance(p in arb_params(), c in (1i64..30, 1i64..9)) {
            let c = Rat::frac(c.0, c.1);
            let depth = 5;
            let m = signed_logderiv_moments(&p, depth).unwrap();
            let scaled: Vec<Rat> = m.iter().enumerate().map(|(n, s)| s * &c.pow(n as u32)).collect();
            let a = sfraction_expand(&m, depth).unwrap();
            let b = sfraction_expand(&scaled, depth).unwrap();
            prop_assert_eq!(&a.alphas[0], &b.alphas[0]);
            for (x, y) in a.alphas[1..].iter().zip(&b.alphas[1..]) {
                prop_assert_eq!(x * &c, y.clone());
            }
            prop_assert_eq!(
                std::mem::discriminant(&verdict_from_report(&a)),
                std::mem::discriminant(&verdict_from_report(&b))
            );
        }
    }
}
