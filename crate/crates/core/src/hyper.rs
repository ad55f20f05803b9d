//! Exact Taylor coefficients of generalized hypergeometric functions and the
//! closed-form identities and limits they satisfy.
//!
//! `pFq(a; b; x) = sum_n (a_1)_n ... (a_p)_n / ((b_1)_n ... (b_q)_n n!) x^n`
//! with `(a)_n = a (a+1) ... (a+n-1)` the rising factorial.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::{parse_list, Rat};
use crate::series::{Field, PowerSeries};
use crate::symbolic::poly::{Poly1, Var};
use crate::symbolic::sturm::{sturm_real_roots, Bound};

/// Upper and lower parameters of `pFq` with `p <= q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperParams {
    upper: Vec<Rat>,
    lower: Vec<Rat>,
    #[serde(skip)]
    polynomial_mode: bool,
}

impl HyperParams {
    /// Validates `p <= q`, that no lower parameter lies in `{0, -1, -2, ...}`
    /// and that no upper parameter does either, so the series does not
    /// terminate.
    pub fn new(upper: Vec<Rat>, lower: Vec<Rat>) -> Result<Self> {
        Self::build(upper, lower, false)
    }

    /// As [`HyperParams::new`] but allows upper parameters in
    /// `{0, -1, -2, ...}`, where the series reduces to a polynomial.
    pub fn polynomial_mode(upper: Vec<Rat>, lower: Vec<Rat>) -> Result<Self> {
        Self::build(upper, lower, true)
    }

    fn build(upper: Vec<Rat>, lower: Vec<Rat>, polynomial_mode: bool) -> Result<Self> {
        if upper.len() > lower.len() {
            return Err(Error::InvalidParams(format!(
                "p = {} exceeds q = {}",
                upper.len(),
                lower.len()
            )));
        }
        if let Some(b) = lower.iter().find(|b| b.is_nonpositive_integer()) {
            return Err(Error::InvalidParams(format!(
                "lower parameter {b} is a nonpositive integer"
            )));
        }
        if !polynomial_mode {
            if let Some(a) = upper.iter().find(|a| a.is_nonpositive_integer()) {
                return Err(Error::InvalidParams(format!(
                    "upper parameter {a} is a nonpositive integer (series terminates)"
                )));
            }
        }
        Ok(HyperParams {
            upper,
            lower,
            polynomial_mode,
        })
    }

    /// `1F2(a1; b1, b2)`
    pub fn f12(a1: Rat, b1: Rat, b2: Rat) -> Result<Self> {
        Self::new(vec![a1], vec![b1, b2])
    }

    pub fn upper(&self) -> &[Rat] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rat] {
        &self.lower
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    pub fn is_polynomial_mode(&self) -> bool {
        self.polynomial_mode
    }

    pub fn all_positive(&self) -> bool {
        self.upper.iter().chain(&self.lower).all(Rat::is_positive)
    }
}

/// Parses `"a1,a2;b1,b2,b3"`. The upper list may be empty (`";1,2"`) or a
/// single `-`.
impl FromStr for HyperParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (up, low) = s.split_once(';').ok_or_else(|| Error::Parse {
            what: "hypergeometric parameters (expected \"a1,..;b1,..\")",
            input: s.to_string(),
        })?;
        HyperParams::new(parse_list(up)?, parse_list(low)?)
    }
}

impl fmt::Display for HyperParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rat]| v.iter().map(Rat::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.upper), join(&self.lower))
    }
}

/// Rising factorial `a (a+1) ... (a+n-1)`; `1` for `n = 0`.
pub fn pochhammer(a: &Rat, n: usize) -> Rat {
    (0..n).map(|k| a + Rat::from_int(k as i64)).product()
}

/// Coefficients of `pFq` over any field, via the term ratio
/// `c_{n+1} / c_n = prod(a_i + n) / (prod(b_j + n) (n + 1))`.
/// The caller guarantees no `b_j + n` vanishes.
pub fn pfq_coefficients<F: Field>(upper: &[F], lower: &[F], order: usize) -> PowerSeries<F> {
    let one = F::one();
    let mut n_f = F::zero();
    let mut term = F::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(term.clone());
    for _ in 0..order {
        let mut num = term;
        for a in upper {
            num = num.times(&a.plus(&n_f));
        }
        n_f = n_f.plus(&one);
        let mut den = n_f.clone();
        for b in lower {
            den = den.times(&b.plus(&n_f).minus(&one));
        }
        term = if num.is_zero() { num } else { num.over(&den) };
        coeffs.push(term.clone());
    }
    PowerSeries::new(coeffs)
}

/// Taylor series of `pFq(params; x)` through `x^order`.
pub fn pfq_series(params: &HyperParams, order: usize) -> PowerSeries {
    pfq_coefficients(&params.upper, &params.lower, order)
}

/// `(-1)^n [x^n] f'/f` for `n = 0 ..= f.order() - 1`.
pub fn signed_logderiv<F: Field>(f: &PowerSeries<F>) -> Result<Vec<F>> {
    let ld = f.log_derivative()?;
    Ok(ld
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| if n % 2 == 1 { c.negated() } else { c })
        .collect())
}

/// Candidate Stieltjes moments `s_0 ..= s_depth` of `pFq(params)`: if the
/// function is in LP+, this is a Stieltjes moment sequence.
pub fn signed_logderiv_moments(params: &HyperParams, depth: usize) -> Result<Vec<Rat>> {
    signed_logderiv(&pfq_series(params, depth + 1))
}

/// Extra coefficients checked for vanishing by [`laguerre_reduction`] by
/// default.
pub const LAGUERRE_GUARD: usize = 10;

/// Polynomial factor `p` in `1F1(b + m; b; x) = e^x p(x)`, of degree `m`.
///
/// `p(-x)` is a multiple of the Laguerre polynomial `L_m^(b-1)(x)`. The
/// series product is computed through `x^guard` and every coefficient past
/// `x^m` must vanish.
pub fn laguerre_reduction(b: &Rat, m: usize, guard: usize) -> Result<Poly1> {
    if !b.is_positive() {
        return Err(Error::InvalidParams(format!("b = {b} must be positive")));
    }
    if guard < m + 5 {
        return Err(Error::InvalidArgument(format!(
            "guard order {guard} must be at least m + 5 = {}",
            m + 5
        )));
    }
    let params = HyperParams::new(vec![b + Rat::from_int(m as i64)], vec![b.clone()])?;
    let prod = &pfq_series(&params, guard) * &PowerSeries::exp(&Rat::from_int(-1), guard);
    let coeffs = prod.into_coeffs();
    if let Some((degree, value)) = coeffs
        .iter()
        .enumerate()
        .skip(m + 1)
        .find(|(_, c)| !c.is_zero())
    {
        return Err(Error::ReductionFailure {
            degree,
            value: value.clone(),
        });
    }
    Ok(Poly1::new(Var::X, coeffs[..=m].to_vec()))
}

#[derive(Clone, Debug, Serialize)]
pub struct LaguerreReport {
    pub b: Rat,
    pub m: usize,
    pub polynomial: Poly1,
    pub degree: usize,
    /// Distinct real roots of `p(-x)` in `(0, inf)`.
    pub positive_roots_of_reflection: usize,
    pub ok: bool,
}

/// Runs [`laguerre_reduction`] with the default guard and checks with a
/// Sturm count that `p(-x)` has `m` distinct roots, all positive.
pub fn laguerre_check(b: &Rat, m: usize) -> Result<LaguerreReport> {
    let poly = laguerre_reduction(b, m, m + LAGUERRE_GUARD)?;
    let degree = poly.degree().unwrap_or(0);
    let roots = sturm_real_roots(&poly.reflect(), &Bound::At(Rat::zero()), &Bound::PosInf);
    Ok(LaguerreReport {
        b: b.clone(),
        m,
        ok: degree == m && roots == m,
        positive_roots_of_reflection: roots,
        degree,
        polynomial: poly,
    })
}

/// `[0F1(; a; x/4)]^2` through `x^order`.
fn f01_quarter(a: &Rat, order: usize) -> Result<PowerSeries> {
    let p = HyperParams::new(vec![], vec![a.clone()])?;
    Ok(pfq_series(&p, order).scale_arg(&Rat::frac(1, 4)))
}

/// Both sides of `1F2(a - 1/2; a, 2a - 1; x) = [0F1(; a; x/4)]^2`.
pub fn driver_sides(a: &Rat, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    if !a.is_positive() || *a == Rat::frac(1, 2) {
        return Err(Error::InvalidParams(format!(
            "need a > 0 and a != 1/2, got a = {a}"
        )));
    }
    let half = Rat::frac(1, 2);
    let lhs_params = HyperParams::new(
        vec![a - &half],
        vec![a.clone(), a * Rat::from_int(2) - Rat::one()],
    )?;
    let lhs = pfq_series(&lhs_params, order);
    let f = f01_quarter(a, order)?;
    Ok((lhs, &f * &f))
}

pub fn identity_driver_check(a: &Rat, order: usize) -> Result<bool> {
    let (lhs, rhs) = driver_sides(a, order)?;
    Ok(lhs == rhs)
}

/// Both sides of
/// `2F3((a+b)/2, (a+b-1)/2; a, b, a+b-1; x) = 0F1(; a; x/4) 0F1(; b; x/4)`.
pub fn bailey_sides(a: &Rat, b: &Rat, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidParams(format!(
            "need a, b > 0, got a = {a}, b = {b}"
        )));
    }
    let s = a + b;
    let s1 = &s - Rat::one();
    if s1.is_nonpositive_integer() {
        return Err(Error::InvalidParams(format!(
            "a + b - 1 = {s1} is a nonpositive integer"
        )));
    }
    let half = Rat::frac(1, 2);
    let lhs_params = HyperParams::new(
        vec![&s * &half, &s1 * &half],
        vec![a.clone(), b.clone(), s1.clone()],
    )?;
    let lhs = pfq_series(&lhs_params, order);
    let rhs = &f01_quarter(a, order)? * &f01_quarter(b, order)?;
    Ok((lhs, rhs))
}

pub fn identity_bailey_check(a: &Rat, b: &Rat, order: usize) -> Result<bool> {
    let (lhs, rhs) = bailey_sides(a, b, order)?;
    Ok(lhs == rhs)
}

/// For each `b2`, the largest coefficient gap through `x^order` between
/// `1F2(a; b1, b2; b2 x)` and its limit `1F1(a; b1; x)` as `b2 -> inf`.
pub fn limit_convergence_check(
    a: &Rat,
    b1: &Rat,
    b2_values: &[Rat],
    order: usize,
) -> Result<Vec<Rat>> {
    if !a.is_positive() || !b1.is_positive() || b2_values.iter().any(|b| !b.is_positive()) {
        return Err(Error::InvalidParams(
            "all parameters must be positive".into(),
        ));
    }
    let limit = pfq_series(&HyperParams::new(vec![a.clone()], vec![b1.clone()])?, order);
    b2_values
        .iter()
        .map(|b2| {
            let params = HyperParams::f12(a.clone(), b1.clone(), b2.clone())?;
            let scaled = pfq_series(&params, order).scale_arg(b2);
            Ok((&scaled - &limit)
                .coeffs()
                .iter()
                .map(Rat::abs)
                .max()
                .unwrap_or_else(Rat::zero))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn fact(n: usize) -> Rat {
        (1..=n as i64).map(Rat::from_int).product()
    }

    /// Direct evaluation of the defining formula, independent of the
    /// term-ratio recurrence.
    fn coeff_oracle(upper: &[Rat], lower: &[Rat], n: usize) -> Rat {
        let num: Rat = upper.iter().map(|a| pochhammer(a, n)).product();
        let den: Rat = lower.iter().map(|b| pochhammer(b, n)).product();
        num / (den * fact(n))
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&r(1, 1), 4), Rat::from_int(24));
        assert_eq!(pochhammer(&r(7, 3), 0), Rat::one());
        assert_eq!(pochhammer(&r(1, 2), 3), r(15, 8));
    }

    #[test]
    fn series_examples() {
        let e = HyperParams::new(vec![r(1, 1)], vec![r(1, 1)]).unwrap();
        assert_eq!(pfq_series(&e, 4), PowerSeries::exp(&Rat::one(), 4));
        let f01 = HyperParams::new(vec![], vec![r(1, 1)]).unwrap();
        assert_eq!(pfq_series(&f01, 3).coeff(3), &r(1, 36));
        let f12 = HyperParams::f12(r(3, 2), r(1, 1), r(2, 1)).unwrap();
        assert_eq!(pfq_series(&f12, 3).coeff(1), &r(3, 4));
    }

    #[test]
    fn validation() {
        assert!(HyperParams::new(vec![r(1, 1)], vec![r(0, 1), r(2, 1)]).is_err());
        assert!(HyperParams::new(vec![r(1, 1)], vec![r(-3, 1)]).is_err());
        assert!(HyperParams::new(vec![r(1, 1), r(2, 1)], vec![r(2, 1)]).is_err());
        assert!(HyperParams::new(vec![r(-2, 1)], vec![r(2, 1)]).is_err());
        let poly = HyperParams::polynomial_mode(vec![r(-2, 1)], vec![r(1, 1)]).unwrap();
        // 1F1(-2; 1; x) = 1 - 2x + x^2/2
        assert_eq!(
            pfq_series(&poly, 4).coeffs(),
            &[r(1, 1), r(-2, 1), r(1, 2), r(0, 1), r(0, 1)]
        );
        assert!(HyperParams::new(vec![r(-1, 2)], vec![r(-1, 3)]).is_ok());
    }

    #[test]
    fn parsing() {
        let p: HyperParams = "3/2;1,2".parse().unwrap();
        assert_eq!(p.upper(), &[r(3, 2)]);
        assert_eq!(p.lower(), &[r(1, 1), r(2, 1)]);
        assert_eq!(p.to_string(), "3/2;1,2");
        let q: HyperParams = ";1/2,7".parse().unwrap();
        assert_eq!(q.p(), 0);
        assert!("1;0,2".parse::<HyperParams>().is_err());
        assert!("1,2".parse::<HyperParams>().is_err());
        assert!("x;1".parse::<HyperParams>().is_err());
    }

    #[test]
    fn logderiv_moments() {
        let e = HyperParams::new(vec![r(1, 1)], vec![r(1, 1)]).unwrap();
        let s = signed_logderiv_moments(&e, 5).unwrap();
        assert_eq!(s, [r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)]);
        let (a, b1, b2) = (r(5, 3), r(7, 2), r(2, 9));
        let f = HyperParams::f12(a.clone(), b1.clone(), b2.clone()).unwrap();
        let s = signed_logderiv_moments(&f, 3).unwrap();
        assert_eq!(s[0], &a / &(&b1 * &b2));
        let one = Rat::one();
        let s1 = &a * &(&a * &(&one + &b1 + &b2) - &b1 * &b2)
            / (b1.pow(2) * (&b1 + &one) * b2.pow(2) * (&b2 + &one));
        assert_eq!(s[1], s1);
        // the displayed example 1F2(3/2; 1, 2): s0 = 3/4
        let g = HyperParams::f12(r(3, 2), r(1, 1), r(2, 1)).unwrap();
        assert_eq!(signed_logderiv_moments(&g, 0).unwrap(), [r(3, 4)]);
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(
            laguerre_reduction(&r(1, 1), 0, 10).unwrap(),
            Poly1::one(Var::X)
        );
        assert_eq!(
            laguerre_reduction(&r(1, 1), 1, 11).unwrap(),
            Poly1::from_ints(Var::X, &[1, 1])
        );
        // oracle: 1F1(3; 2; x) e^{-x} through x^8, read off by hand-rolled product
        let f = PowerSeries::from_fn(8, |n| coeff_oracle(&[r(3, 1)], &[r(2, 1)], n));
        let e = PowerSeries::from_fn(8, |n| {
            let v = fact(n).recip().unwrap();
            if n % 2 == 1 {
                -v
            } else {
                v
            }
        });
        let prod = &f * &e;
        assert_eq!(prod.coeffs()[..2], [r(1, 1), r(1, 2)]);
        assert!(prod.coeffs()[2..].iter().all(Rat::is_zero));
        assert_eq!(
            laguerre_reduction(&r(2, 1), 1, 8).unwrap(),
            Poly1::new(Var::X, vec![r(1, 1), r(1, 2)])
        );
        assert!(laguerre_reduction(&r(1, 1), 3, 7).is_err());
        assert!(laguerre_reduction(&r(0, 1), 1, 10).is_err());
    }

    #[test]
    fn laguerre_roots_are_negative() {
        for b in [r(1, 2), r(1, 1), r(5, 2)] {
            for m in 0..=4 {
                let rep = laguerre_check(&b, m).unwrap();
                assert!(rep.ok, "b = {b}, m = {m}: {rep:?}");
                assert_eq!(rep.positive_roots_of_reflection, m);
            }
        }
    }

    #[test]
    fn identities() {
        assert!(identity_driver_check(&r(1, 1), 30).unwrap());
        assert!(identity_driver_check(&r(3, 2), 30).unwrap());
        let (lhs, _) = driver_sides(&r(1, 1), 30).unwrap();
        assert_ne!(lhs, f01_quarter(&r(1, 1), 30).unwrap());
        assert!(identity_driver_check(&r(1, 2), 30).is_err());

        assert!(identity_bailey_check(&r(1, 1), &r(2, 1), 30).unwrap());
        assert!(identity_bailey_check(&r(3, 2), &r(3, 2), 30).unwrap());
        // perturb the last lower parameter from a+b-1 to a+b
        let perturbed =
            HyperParams::new(vec![r(3, 2), r(1, 1)], vec![r(1, 1), r(2, 1), r(3, 1)]).unwrap();
        let (_, rhs) = bailey_sides(&r(1, 1), &r(2, 1), 30).unwrap();
        assert_ne!(pfq_series(&perturbed, 30), rhs);
    }

    #[test]
    fn limit_deviation_oracle() {
        // a = b1 = 1, b2 = 10: coefficients 10^n / ((10)_n n!) against 1/n!
        let oracle = (0..=5)
            .map(|n| {
                let lhs = Rat::from_int(10).pow(n as u32) / (pochhammer(&r(10, 1), n) * fact(n));
                (lhs - fact(n).recip().unwrap()).abs()
            })
            .max()
            .unwrap();
        assert_eq!(oracle, r(1, 22));
        let dev = limit_convergence_check(&r(1, 1), &r(1, 1), &[r(10, 1)], 5).unwrap();
        assert_eq!(dev, [oracle]);
        let zero = limit_convergence_check(&r(1, 1), &r(1, 1), &[r(10, 1)], 0).unwrap();
        assert_eq!(zero, [Rat::zero()]);
        let devs =
            limit_convergence_check(&r(3, 2), &r(1, 1), &[r(10, 1), r(100, 1), r(1000, 1)], 10)
                .unwrap();
        assert!(devs[0] > devs[1] && devs[1] > devs[2] && devs[2].is_positive());
    }

    fn arb_pos() -> impl Strategy<Value = Rat> {
        (1i64..60, 1i64..12).prop_map(|(n, d)| Rat::frac(n, d))
    }

    proptest! {
        #[test]
        fn recurrence_matches_definition(
            up in prop::collection::vec(arb_pos(), 0..3),
            extra in prop::collection::vec(arb_pos(), 0..2),
        ) {
            let mut low = up.iter().map(|a| a + Rat::frac(1, 3)).collect::<Vec<_>>();
            low.extend(extra);
            let p = HyperParams::new(up.clone(), low.clone()).unwrap();
            let s = pfq_series(&p, 7);
            for n in 0..=7 {
                prop_assert_eq!(s.coeff(n), &coeff_oracle(&up, &low, n));
                prop_assert!(s.coeff(n).is_positive());
            }
        }

        #[test]
        fn equal_parameters_cancel(a in arb_pos(), b in arb_pos(), c in arb_pos()) {
            let full = HyperParams::new(vec![a.clone(), b.clone()], vec![a, c.clone(), b.clone() + Rat::one()]).unwrap();
            let reduced = HyperParams::new(vec![b.clone()], vec![c, b + Rat::one()]).unwrap();
            prop_assert_eq!(pfq_series(&full, 8), pfq_series(&reduced, 8));
        }

        #[test]
        fn identities_hold_at_random_points(a in arb_pos(), b in arb_pos()) {
            prop_assume!(a != Rat::frac(1, 2));
            prop_assume!(&a + &b != Rat::one());
            prop_assert!(identity_driver_check(&a, 12).unwrap());
            prop_assert!(identity_bailey_check(&a, &b, 12).unwrap());
        }
    }
}
