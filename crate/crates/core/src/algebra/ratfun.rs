//! Quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{Assignment, LaurentPolynomial};
use super::rational::ExactRational;
use super::var::Var;
use crate::error::{Error, Result};

/// `num / den` with `den` nonzero. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::tidy(num, den))
    }

    pub fn zero() -> Self {
        Self::from(LaurentPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from(LaurentPolynomial::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from(LaurentPolynomial::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from(LaurentPolynomial::var(v))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentPolynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<&ExactRational> {
        self.as_polynomial().and_then(LaurentPolynomial::as_constant)
    }

    /// Absorbs a single-term denominator into the numerator; cheap, always applied.
    fn tidy(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: LaurentPolynomial::one(),
            };
        }
        if let Some((m, c)) = den.as_single_term() {
            let c_inv = c.recip().expect("nonzero coefficient");
            let num = num.mul_term(&m.inverse(), &c_inv);
            return Self {
                num,
                den: LaurentPolynomial::one(),
            };
        }
        Self { num, den }
    }

    /// Canonical representative: exact quotient when the denominator
    /// divides, otherwise the denominator is shifted to an ordinary
    /// polynomial with leading coefficient 1.
    pub fn normalize(&self) -> Self {
        if self.den.is_one() {
            return self.clone();
        }
        if let Ok(q) = self.num.exact_divide(&self.den) {
            return Self::from(q);
        }
        let floor = self.den.floor();
        let shifted = self.den.mul_term(&floor.inverse(), &ExactRational::one());
        let lead = shifted.leading_term().map(|(_, c)| c.clone()).unwrap();
        let scale = lead.recip().expect("nonzero leading coefficient");
        Self {
            num: self.num.mul_term(&floor.inverse(), &scale),
            den: shifted.scale(&scale),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::tidy(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let e = exp as u32;
        Ok(Self::tidy(self.num.pow(e), self.den.pow(e)))
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<ExactRational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::SingularPoint(format!("{} = 0", self.den)));
        }
        let n = self.num.evaluate(point)?;
        n.checked_div(&d)
    }

    pub fn substitute(&self, point: &Assignment) -> Result<Self> {
        let d = self.den.substitute(point)?;
        if d.is_zero() {
            return Err(Error::SingularPoint(format!("{} = 0", self.den)));
        }
        Self::new(self.num.substitute(point)?, d)
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Var> {
        let mut vars = self.num.variables();
        vars.extend(self.den.variables());
        vars
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }
}

impl From<ExactRational> for RationalFunction {
    fn from(c: ExactRational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::constant(n.into())
    }
}

impl From<Var> for RationalFunction {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl<'b> Add<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::tidy(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RationalFunction::tidy(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RationalFunction::tidy(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        RationalFunction::tidy(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'b> Sub<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        if self.den == rhs.num && !self.den.is_one() {
            return RationalFunction::tidy(self.num.clone(), rhs.den.clone());
        }
        if rhs.den == self.num && !rhs.den.is_one() {
            return RationalFunction::tidy(rhs.num.clone(), self.den.clone());
        }
        RationalFunction::tidy(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Canonical text of the normalized form; a bare polynomial when the
/// denominator is 1, otherwise `(num) / (den)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalize();
        if n.den.is_one() {
            write!(f, "{}", n.num)
        } else {
            write!(f, "({}) / ({})", n.num, n.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(name: &str) -> RationalFunction {
        RationalFunction::var(name.parse().unwrap())
    }

    fn point(pairs: &[(&str, i64)]) -> Assignment {
        pairs
            .iter()
            .map(|&(n, x)| (n.parse().unwrap(), x.into()))
            .collect()
    }

    #[test]
    fn self_quotient_is_one() {
        let x = var("x1") + RationalFunction::from(3);
        assert_eq!(x.checked_div(&x).unwrap(), RationalFunction::one());
        assert_eq!(x.checked_div(&x).unwrap().to_string(), "1");
    }

    #[test]
    fn inverse_of_difference() {
        let f = (var("z1") - var("z2")).recip().unwrap();
        assert_eq!(f.evaluate(&point(&[("z1", 2), ("z2", 1)])).unwrap(), ExactRational::one());
        let err = f.evaluate(&point(&[("z1", 1), ("z2", 1)])).unwrap_err();
        assert!(matches!(err, Error::SingularPoint(_)));
        assert!(matches!(
            f.evaluate(&point(&[("z1", 1)])),
            Err(Error::MissingVariable(_))
        ));
    }

    #[test]
    fn monomial_denominators_fold_into_laurent_terms() {
        let u = var("u1");
        let f = &u + &u.recip().unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.to_string(), "u1 + u1^-1");
    }

    #[test]
    fn equality_is_by_cross_multiplication() {
        let (a, b) = (var("z1"), var("z2"));
        let lhs = (&(&a * &a) - &(&b * &b)).checked_div(&(&a - &b)).unwrap();
        assert_eq!(lhs, &a + &b);
        let s = (&a - &b).recip().unwrap() + (&a + &b).recip().unwrap();
        let t = (&a * &RationalFunction::from(2))
            .checked_div(&(&(&a * &a) - &(&b * &b)))
            .unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn canonical_text_makes_denominator_monic() {
        let f = RationalFunction::from(1)
            .checked_div(&(RationalFunction::from(2) * var("z1") - RationalFunction::from(4)))
            .unwrap();
        assert_eq!(f.to_string(), "(1/2) / (z1 - 2)");
    }

    #[test]
    fn negative_powers_need_nonzero_base() {
        assert_eq!(RationalFunction::zero().pow(-2), Err(Error::DivisionByZero));
        let u = var("u1");
        assert_eq!(u.pow(-2).unwrap() * u.pow(2).unwrap(), RationalFunction::one());
    }
}
