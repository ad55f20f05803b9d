//! Sparse polynomials in `(gamma, b1, b2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Poly1, Var};
use crate::rat::Rat;

/// Exponent triple `[deg gamma, deg b1, deg b2]`.
pub type Exps = [u32; 3];

/// Index of each variable inside an [`Exps`] triple.
pub const GAMMA: usize = 0;
pub const B1: usize = 1;
pub const B2: usize = 2;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<Exps, Rat>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly3::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn int(c: i64) -> Self {
        Poly3::constant(Rat::from_int(c))
    }

    pub fn gamma() -> Self {
        Poly3::monomial([1, 0, 0])
    }

    pub fn b1() -> Self {
        Poly3::monomial([0, 1, 0])
    }

    pub fn b2() -> Self {
        Poly3::monomial([0, 0, 1])
    }

    pub fn monomial(e: Exps) -> Self {
        let mut p = Poly3::zero();
        p.add_term(e, Rat::one());
        p
    }

    fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly3::int(1), |acc, _| &acc * self)
    }

    /// Degree in one variable, `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: usize, k: u32) -> Poly3 {
        let mut out = Poly3::zero();
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = *e;
                e2[var] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, var: usize) -> Poly3 {
        match self.degree_in(var) {
            Some(d) => self.coeff_in(var, d),
            None => Poly3::zero(),
        }
    }

    pub fn eval(&self, gamma: &Rat, b1: &Rat, b2: &Rat) -> Rat {
        let vals = [gamma, b1, b2];
        self.terms
            .iter()
            .map(|(e, c)| (0..3).fold(c.clone(), |acc, i| acc * vals[i].pow(e[i])))
            .sum()
    }

    /// Substitutes `gamma` and `b1`, leaving a polynomial in `b2`.
    pub fn specialize_b2(&self, gamma: &Rat, b1: &Rat) -> Poly1 {
        let deg = self.degree_in(B2).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[B2] as usize] += &(c * &gamma.pow(e[GAMMA]) * b1.pow(e[B1]));
        }
        Poly1::new(Var::B2, coeffs)
    }

    /// True when no coefficient is negative.
    pub fn coefficientwise_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        self + &(-rhs)
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        Poly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = ["gamma", "b1", "b2"];
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", names[v])?,
                    _ => write!(f, "*{}^{k}", names[v])?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

/// Builders for the closed forms of the first continued-fraction
/// coefficients of `1F2(b1 + gamma; b1, b2; .)`, with `a1 = b1 + gamma`.
pub mod closed_forms {
    use super::*;

    fn c(n: i64) -> Poly3 {
        Poly3::int(n)
    }

    fn a1() -> Poly3 {
        &Poly3::b1() + &Poly3::gamma()
    }

    fn shift(p: Poly3, k: i64) -> Poly3 {
        &p + &c(k)
    }

    /// `a1 (1 + b1 + b2) - b1 b2`
    pub fn alpha1_num() -> Poly3 {
        let (b1, b2) = (Poly3::b1(), Poly3::b2());
        &(&a1() * &shift(&b1 + &b2, 1)) - &(&b1 * &b2)
    }

    /// `b1 (b1 + 1) b2 (b2 + 1)`
    pub fn alpha1_den() -> Poly3 {
        let (b1, b2) = (Poly3::b1(), Poly3::b2());
        &(&(&b1 * &shift(b1.clone(), 1)) * &b2) * &shift(b2.clone(), 1)
    }

    /// `a1 (2 + 3 b1 + 3 b2 + b1^2 + b1 b2 + b2^2) - b1 b2 (3 + b1 + b2)`
    pub fn alpha2_bracket() -> Poly3 {
        let (b1, b2) = (Poly3::b1(), Poly3::b2());
        let quad = &(&(&(&(&c(2) + &(&c(3) * &b1)) + &(&c(3) * &b2)) + &b1.pow(2)) + &(&b1 * &b2))
            + &b2.pow(2);
        &(&a1() * &quad) - &(&(&b1 * &b2) * &shift(&b1 + &b2, 3))
    }

    /// `(1 + a1) * alpha2_bracket`
    pub fn alpha2_num() -> Poly3 {
        &shift(a1(), 1) * &alpha2_bracket()
    }

    /// `(b1 + 1)(b1 + 2)(b2 + 1)(b2 + 2) * alpha1_num`
    pub fn alpha2_den() -> Poly3 {
        let (b1, b2) = (Poly3::b1(), Poly3::b2());
        let f = &(&shift(b1.clone(), 1) * &shift(b1, 2)) * &(&shift(b2.clone(), 1) * &shift(b2, 2));
        &f * &alpha1_num()
    }

    /// Denominator of `alpha_3`:
    /// `(b1+2)(b1+3)(b2+2)(b2+3) [b1(b1+1) + (1+b1+b2) gamma]
    ///  [b1(b1+1)(b1+2) + ((b1+1)(b1+2) + (3+b1+b2) b2) gamma]`.
    pub fn d3() -> Poly3 {
        let (g, b1, b2) = (Poly3::gamma(), Poly3::b1(), Poly3::b2());
        let lin = &(&(&shift(b1.clone(), 2) * &shift(b1.clone(), 3)) * &shift(b2.clone(), 2))
            * &shift(b2.clone(), 3);
        let first = &(&b1 * &shift(b1.clone(), 1)) + &(&shift(&b1 + &b2, 1) * &g);
        let inner =
            &(&shift(b1.clone(), 1) * &shift(b1.clone(), 2)) + &(&shift(&b1 + &b2, 3) * &b2);
        let second = &(&(&b1 * &shift(b1.clone(), 1)) * &shift(b1.clone(), 2)) + &(&inner * &g);
        &(&lin * &first) * &second
    }

    /// Conjectured leading coefficient in `b2` of the `n`-th numerator:
    /// odd `n = 2k+1`: `(gamma - k) prod_{i<k} (gamma - i)^(2k-2i)`;
    /// even `n = 2k+2`: `(b1 + gamma + k + 1) prod_{i<=k} (gamma - i)^(2k-2i+1)`.
    /// Panics for `n = 0`.
    pub fn conjectured_lead(n: usize) -> Poly3 {
        assert!(n >= 1);
        let g = Poly3::gamma();
        let gm = |i: usize| shift(g.clone(), -(i as i64));
        if n % 2 == 1 {
            let k = (n - 1) / 2;
            (0..k).fold(gm(k), |acc, i| &acc * &gm(i).pow((2 * k - 2 * i) as u32))
        } else {
            let k = (n - 2) / 2;
            let head = shift(&Poly3::b1() + &g, (k + 1) as i64);
            (0..=k).fold(head, |acc, i| &acc * &gm(i).pow((2 * k - 2 * i + 1) as u32))
        }
    }

    /// Conjectured numerator degree in `b2`: `C(n, 2) + 1`.
    pub fn conjectured_degree(n: usize) -> usize {
        n * (n.saturating_sub(1)) / 2 + 1
    }
}
