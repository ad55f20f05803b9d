//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Variable tag carried by univariate polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    X,
    Gamma,
    B1,
    B2,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Gamma => "gamma",
            Var::B1 => "b1",
            Var::B2 => "b2",
        })
    }
}

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly1 {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly1 {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly1 { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly1::new(var, coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Poly1 {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly1::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Poly1::constant(var, Rat::one())
    }

    /// The monomial `var`.
    pub fn var(var: Var) -> Self {
        Poly1::from_ints(var, &[0, 1])
    }

    /// `var + c`
    pub fn linear(var: Var, c: Rat) -> Self {
        Poly1::new(var, vec![c, Rat::one()])
    }

    /// Product of `var - r` over the given roots.
    pub fn from_roots(var: Var, roots: &[Rat]) -> Self {
        roots
            .iter()
            .fold(Poly1::one(var), |acc, r| &acc * &Poly1::linear(var, -r))
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly1::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly1::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_int(k as i64))
                .collect(),
        )
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Poly1::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    fn same_var(&self, other: &Poly1) -> Result<Var> {
        match (self.is_constant(), other.is_constant()) {
            (true, _) => Ok(other.var),
            (_, true) => Ok(self.var),
            _ if self.var == other.var => Ok(self.var),
            _ => Err(Error::VariableMismatch(
                self.var.to_string(),
                other.var.to_string(),
            )),
        }
    }

    pub fn try_add(&self, other: &Poly1) -> Result<Poly1> {
        let var = self.same_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Poly1::new(
            var,
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        ))
    }

    pub fn try_sub(&self, other: &Poly1) -> Result<Poly1> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Poly1) -> Result<Poly1> {
        let var = self.same_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly1::zero(var));
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(Poly1::new(var, out))
    }

    pub fn pow(&self, e: u32) -> Poly1 {
        (0..e).fold(Poly1::one(self.var), |acc, _| &acc * self)
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly1) -> (Poly1, Poly1) {
        let var = self.same_var(divisor).expect("matching variables");
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lc = divisor.leading_coeff().recip().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly1::zero(var), Poly1::new(var, rem));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly1::new(var, quot), Poly1::new(var, rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly1) -> Option<Poly1> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    ///
    /// Runs the subresultant remainder sequence on integer primitive parts so
    /// coefficient size stays proportional to the subresultants.
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let var = self.same_var(other).expect("matching variables");
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (primitive_int(self), primitive_int(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let g = subresultant_gcd(a, b);
        let coeffs: Vec<Rat> = g.into_iter().map(Rat::from_int).collect();
        Poly1::new(var, coeffs).monic()
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn squarefree_part(&self) -> Poly1 {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides")
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Poly1 {
        if self.is_zero() {
            return self.clone();
        }
        let ints = primitive_int(self);
        let sign_fix = if self.leading_coeff().is_negative() == ints.last().unwrap().is_negative() {
            1
        } else {
            -1
        };
        Poly1::new(
            self.var,
            ints.into_iter()
                .map(|c| Rat::from_int(c * sign_fix))
                .collect(),
        )
    }
}

/// Clears denominators and removes the integer content. The sign of the
/// leading coefficient is made positive.
fn primitive_int(p: &Poly1) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    make_primitive(&mut ints);
    ints
}

fn make_primitive(v: &mut [BigInt]) {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return;
    }
    let content = if v.last().is_some_and(|c| c.is_negative()) {
        -content
    } else {
        content
    };
    if !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` in Z[x].
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = (a.len() - db) as u32;
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top].clone();
        for x in r.iter_mut() {
            *x *= lc;
        }
        let shift = top - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        steps -= 1;
        trim(&mut r);
    }
    if steps > 0 {
        let f = num_traits::pow(lc.clone(), steps as usize);
        for x in r.iter_mut() {
            *x *= &f;
        }
    }
    r
}

/// Collins/Brown subresultant PRS. `a` must have degree >= `b`, both
/// nonzero. Returns the primitive part of the last nonzero remainder.
fn subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            make_primitive(&mut b);
            return b;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize)
                / num_traits::pow(h.clone(), delta as usize - 1)
        };
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{mag}*{}", self.var)?,
                (_, true) => write!(f, "{}^{k}", self.var)?,
                (_, false) => write!(f, "{mag}*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl Serialize for Poly1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Poly1", 2)?;
        st.serialize_field("var", &self.var.to_string())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

// The operators panic on a variable mismatch; use the `try_` forms when the
// operands are not known to agree.
impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        self.try_add(rhs).expect("matching variables")
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        self.try_sub(rhs).expect("matching variables")
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        self.try_mul(rhs).expect("matching variables")
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn b2(c: &[i64]) -> Poly1 {
        Poly1::from_ints(Var::B2, c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&b2(&[1, 1]) * &b2(&[-1, 1]), b2(&[-1, 0, 1]));
        assert_eq!(&b2(&[1, 1]) + &b2(&[-1, -1]), Poly1::zero(Var::B2));
        assert_eq!(b2(&[3, 0, 2]).eval(&Rat::from_int(2)), Rat::from_int(11));
        assert_eq!(b2(&[1, 2, 3]).degree(), Some(2));
        assert_eq!(Poly1::zero(Var::B2).degree(), None);
        assert_eq!(b2(&[1, 2, -3]).leading_coeff(), Rat::from_int(-3));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let x = Poly1::var(Var::X);
        let y = Poly1::var(Var::B2);
        assert!(matches!(x.try_add(&y), Err(Error::VariableMismatch(..))));
        assert!(matches!(x.try_mul(&y), Err(Error::VariableMismatch(..))));
        // constants adapt to the other operand
        assert_eq!(x.try_add(&Poly1::one(Var::B2)).unwrap().variable(), Var::X);
    }

    #[test]
    fn division() {
        let (q, r) = b2(&[-1, 0, 1]).div_rem(&b2(&[-1, 1]));
        assert_eq!(q, b2(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = b2(&[1, 0, 1]).div_rem(&b2(&[0, 2]));
        assert_eq!(q, Poly1::new(Var::B2, vec![Rat::zero(), Rat::frac(1, 2)]));
        assert_eq!(r, b2(&[1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(b2(&[-1, 0, 1]).gcd(&b2(&[-1, 1])), b2(&[-1, 1]));
        let p = b2(&[4, 0, 2]);
        assert_eq!(p.gcd(&Poly1::zero(Var::B2)), b2(&[2, 0, 1]).monic());
        assert_eq!(Poly1::zero(Var::B2).gcd(&p), p.monic());
    }

    #[test]
    fn gcd_of_coprime_cubics_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            // six distinct rational roots split between two cubics
            let mut roots: Vec<Rat> = Vec::new();
            while roots.len() < 6 {
                let r = Rat::frac(rng.gen_range(-40..40), rng.gen_range(1..9));
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            let p = Poly1::from_roots(Var::B2, &roots[..3]).scale(&Rat::frac(3, 7));
            let q = Poly1::from_roots(Var::B2, &roots[3..]).scale(&Rat::from_int(-5));
            assert_eq!(p.gcd(&q), Poly1::one(Var::B2));
            // and a shared root is recovered exactly
            let shared = &p * &Poly1::linear(Var::B2, -roots[3].clone());
            assert_eq!(shared.gcd(&q), Poly1::linear(Var::B2, -roots[3].clone()));
        }
    }

    #[test]
    fn squarefree_and_reflect() {
        let p = &b2(&[-1, 1]).pow(3) * &b2(&[2, 1]);
        assert_eq!(p.squarefree_part(), b2(&[-2, 1, 1]));
        assert_eq!(b2(&[1, 2, 3]).reflect(), b2(&[1, -2, 3]));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(b2(&[-1, 0, 1]).to_string(), "b2^2 - 1");
        assert_eq!(
            serde_json::to_string(&b2(&[-1, 0, 2])).unwrap(),
            r#"{"var":"b2","coeffs":["-1","0","2"]}"#
        );
    }

    fn arb_poly() -> impl Strategy<Value = Poly1> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6).prop_map(|v| {
            Poly1::new(
                Var::B2,
                v.into_iter().map(|(n, d)| Rat::frac(n, d)).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn gcd_divides_both(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let a = &p * &r;
            let b = &q * &r;
            let g = a.gcd(&b);
            if !g.is_zero() {
                prop_assert!(a.exact_div(&g).is_some());
                prop_assert!(b.exact_div(&g).is_some());
                // the common factor divides the gcd
                if !r.is_zero() {
                    prop_assert!(g.exact_div(&r.monic()).is_some());
                }
            }
        }

        #[test]
        fn div_rem_reconstructs(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem(&q);
            prop_assert_eq!(&(&quot * &q) + &rem, p);
            prop_assert!(rem.degree() < q.degree());
        }
    }
}
