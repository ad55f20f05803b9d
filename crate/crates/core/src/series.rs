//! Truncated formal power series over an exact field.
//!
//! A series of order `N` stores the coefficients of `x^0 ..= x^N`. Binary
//! operations on series of different orders truncate to the smaller one and
//! never invent coefficients past it.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Exact field scalars: [`Rat`] and, in [`crate::symbolic`], rational
/// functions of one variable.
///
/// Arithmetic is spelled out as methods so generic code needs no
/// higher-ranked operator bounds. Division by zero panics.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &Rat) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn over(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
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

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<F = Rat> {
    coeffs: Vec<F>,
}

impl<F: Field> PowerSeries<F> {
    /// Builds a series of order `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> F) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &F {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// True when every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderTooLow);
        }
        let mut n_f = F::zero();
        let one = F::one();
        let coeffs = self.coeffs[1..]
            .iter()
            .map(|c| {
                n_f = n_f.plus(&one);
                c.times(&n_f)
            })
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// Multiplicative inverse through the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = F::one().over(c0);
        let n = self.coeffs.len();
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `f' / f`, truncated to order `f.order() - 1`.
    pub fn log_derivative(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let d = self.derivative()?;
        Ok(&d * &self.reciprocal()?)
    }

    /// Substitutes `x -> c x`.
    pub fn scale_arg(&self, c: &F) -> Self {
        let mut pow = F::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a.times(&pow);
                pow = pow.times(c);
                v
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Series of `e^{c x}` to the given order.
    pub fn exp(c: &F, order: usize) -> Self {
        let mut term = F::one();
        let mut n_f = F::zero();
        let one = F::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(term.clone());
        for _ in 0..order {
            n_f = n_f.plus(&one);
            term = term.times(c).over(&n_f);
            coeffs.push(term.clone());
        }
        PowerSeries { coeffs }
    }

    /// Drops the constant term and divides by `x`; order drops by one.
    /// Returns `None` for order-0 input.
    pub fn shift_down(&self) -> Option<Self> {
        if self.order() == 0 {
            None
        } else {
            Some(PowerSeries {
                coeffs: self.coeffs[1..].to_vec(),
            })
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }
}

impl<F: Field> Add for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn add(self, rhs: Self) -> PowerSeries<F> {
        self.zip_with(rhs, F::plus)
    }
}

impl<F: Field> Sub for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn sub(self, rhs: Self) -> PowerSeries<F> {
        self.zip_with(rhs, F::minus)
    }
}

impl<F: Field> Neg for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn neg(self) -> PowerSeries<F> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(F::negated).collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order.
impl<F: Field> Mul for &PowerSeries<F> {
    type Output = PowerSeries<F>;
    fn mul(self, rhs: Self) -> PowerSeries<F> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        PowerSeries { coeffs }
    }
}

impl<F: Serialize> Serialize for PowerSeries<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PowerSeries", 2)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.serialize_field("order", &(self.coeffs.len() - 1))?;
        st.end()
    }
}
