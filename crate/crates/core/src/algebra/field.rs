//! The scalar interface shared by point evaluation and symbolic evaluation.
//!
//! Lattice contractions and closed forms are written once, generic over
//! `Field`. `ExactRational` runs them at a sampled point; `RationalFunction`
//! runs them with variables left free.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfun::RationalFunction;
use super::rational::ExactRational;
use crate::error::{Error, Result};

pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: ExactRational) -> Self;
    fn is_zero(&self) -> bool;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// Division that is known to be exact in the underlying ring. For
    /// polynomial operands this goes through exact polynomial division and
    /// fails with `NotDivisible` when the divisor does not divide.
    fn exact_quotient(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(ExactRational::from_integer(n))
    }

    fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    fn powi(&self, exp: i32) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.powi(-exp);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        Ok(acc)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Field for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn one() -> Self {
        ExactRational::one()
    }
    fn from_rational(r: ExactRational) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        ExactRational::checked_div(self, rhs)
    }
    fn powi(&self, exp: i32) -> Result<Self> {
        self.pow(exp)
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn from_rational(r: ExactRational) -> Self {
        RationalFunction::constant(r)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        RationalFunction::checked_div(self, rhs)
    }
    fn exact_quotient(&self, rhs: &Self) -> Result<Self> {
        match (self.as_polynomial(), rhs.as_polynomial()) {
            (Some(p), Some(q)) => Ok(p.exact_divide(q)?.into()),
            _ => {
                if rhs.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.checked_div(rhs)?.normalize())
            }
        }
    }
    fn powi(&self, exp: i32) -> Result<Self> {
        self.pow(exp)
    }
}
