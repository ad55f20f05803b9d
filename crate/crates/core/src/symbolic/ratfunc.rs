//! Reduced univariate rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::poly::{Poly1, Var};
use crate::rat::Rat;
use crate::series::Field;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. The monic
/// denominator makes the representation unique, so structural equality is
/// field equality.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc1 {
    num: Poly1,
    den: Poly1,
}

impl RatFunc1 {
    /// Reduces `num / den`. Panics when `den` is zero.
    pub fn new(num: Poly1, den: Poly1) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc1 {
                den: Poly1::one(den.variable()),
                num,
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        Self::normalized(num, den)
    }

    /// Assumes coprime inputs; only fixes the denominator scaling.
    fn normalized(num: Poly1, den: Poly1) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc1 { num, den }
        } else {
            let inv = lc.recip().unwrap();
            RatFunc1 {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly1) -> Self {
        let var = p.variable();
        RatFunc1 {
            num: p,
            den: Poly1::one(var),
        }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Self::from_poly(Poly1::constant(var, c))
    }

    pub fn var(var: Var) -> Self {
        Self::from_poly(Poly1::var(var))
    }

    pub fn num(&self) -> &Poly1 {
        &self.num
    }

    pub fn den(&self) -> &Poly1 {
        &self.den
    }

    pub fn variable(&self) -> Var {
        if self.num.is_constant() {
            self.den.variable()
        } else {
            self.num.variable()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

impl Field for RatFunc1 {
    fn zero() -> Self {
        Self::from_poly(Poly1::zero(Var::B2))
    }
    fn one() -> Self {
        Self::from_poly(Poly1::one(Var::B2))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(Var::B2, r.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Add for &RatFunc1 {
    type Output = RatFunc1;
    fn add(self, rhs: &RatFunc1) -> RatFunc1 {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc1::new(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (ld, rd) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.exact_div(&g).unwrap(),
                rhs.den.exact_div(&g).unwrap(),
            )
        };
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        let den = &self.den * &rd;
        RatFunc1::new(num, den)
    }
}

impl Sub for &RatFunc1 {
    type Output = RatFunc1;
    fn sub(self, rhs: &RatFunc1) -> RatFunc1 {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc1 {
    type Output = RatFunc1;
    fn neg(self) -> RatFunc1 {
        RatFunc1 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc1 {
    type Output = RatFunc1;
    fn mul(self, rhs: &RatFunc1) -> RatFunc1 {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc1::from_poly(Poly1::zero(self.variable()));
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &Poly1, g: &Poly1| {
            if g.is_constant() {
                p.clone()
            } else {
                p.exact_div(g).unwrap()
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        RatFunc1::normalized(num, den)
    }
}

/// Panics on division by the zero function.
impl Div for &RatFunc1 {
    type Output = RatFunc1;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFunc1) -> RatFunc1 {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl fmt::Display for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc1({self})")
    }
}

impl Serialize for RatFunc1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFunc1", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}
