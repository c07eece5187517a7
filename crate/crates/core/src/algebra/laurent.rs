//! Sparse multivariate Laurent polynomials over `ExactRational`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::ExactRational;
use super::var::Var;
use crate::error::{Error, Result};

/// Values for a set of variables.
pub type Assignment = BTreeMap<Var, ExactRational>;

/// A Laurent monomial: sorted `(variable, exponent)` pairs, exponents nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: i32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut map: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by(|&(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Componentwise minimum, absent variables counting as exponent 0.
    fn meet(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<Var> = self.0.iter().chain(&other.0).map(|&(v, _)| v).collect();
        Monomial::from_pairs(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(other.exponent(v)))),
        )
    }

    /// True when `other` divides `self` as ordinary monomials.
    fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                },
            }
        }
    }

    fn evaluate(&self, point: &Assignment) -> Result<ExactRational> {
        let mut acc = ExactRational::one();
        for &(v, e) in &self.0 {
            let x = point
                .get(&v)
                .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
            if e < 0 && x.is_zero() {
                return Err(Error::SingularPoint(v.to_string()));
            }
            acc = acc * x.pow(e)?;
        }
        Ok(acc)
    }
}

/// Graded lexicographic order: total degree, then the larger exponent in
/// the earliest variable wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite sum of Laurent monomials with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), ExactRational::one())
    }

    pub fn term(m: Monomial, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ExactRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(ExactRational::is_one)
    }

    pub fn as_constant(&self) -> Option<&ExactRational> {
        match self.terms.len() {
            1 => self.terms.get(&Monomial::one()),
            _ => None,
        }
    }

    pub fn as_single_term(&self) -> Option<(&Monomial, &ExactRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    /// Largest term under graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &ExactRational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<ExactRational> {
        let mut acc = ExactRational::zero();
        for (m, c) in &self.terms {
            acc = acc + m.evaluate(point)? * c;
        }
        Ok(acc)
    }

    /// Substitutes the assigned variables and keeps the rest symbolic.
    pub fn substitute(&self, point: &Assignment) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match point.get(&v) {
                    Some(x) => {
                        if e < 0 && x.is_zero() {
                            return Err(Error::SingularPoint(v.to_string()));
                        }
                        coeff = coeff * x.pow(e)?;
                    }
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        Ok(out)
    }

    /// Componentwise minimum exponent over all terms: the largest monomial
    /// dividing every term.
    pub fn floor(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.meet(m))
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials into the ordinary polynomial
    /// ring, where a single-divisor division under a monomial order leaves a
    /// zero remainder iff the divisor divides. The quotient is checked by
    /// multiplying back.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = divisor.as_single_term() {
            return Ok(self.mul_term(&m.inverse(), &c.recip()?));
        }
        let shift_p = self.floor();
        let shift_q = divisor.floor();
        let mut rem = self.mul_term(&shift_p.inverse(), &ExactRational::one());
        let q = divisor.mul_term(&shift_q.inverse(), &ExactRational::one());
        let (lead_m, lead_c) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lead_inv = lead_c.recip()?;
        let mut quotient = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !m.divisible_by(&lead_m) {
                return Err(Error::NotDivisible);
            }
            let tm = m.mul(&lead_m.inverse());
            let tc = c * &lead_inv;
            rem = &rem - &q.mul_term(&tm, &tc);
            quotient.add_term(tm, tc);
        }
        let result = quotient.mul_term(&shift_p.mul(&shift_q.inverse()), &ExactRational::one());
        if &(&result * divisor) != self {
            return Err(Error::NotDivisible);
        }
        Ok(result)
    }
}

impl From<ExactRational> for LaurentPolynomial {
    fn from(c: ExactRational) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for LaurentPolynomial {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<'b> Add<&'b LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'b> Mul<&'b LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &'b LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// Canonical text: terms in descending graded lexicographic order,
/// coefficients as `p/q`, unit coefficients omitted.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> LaurentPolynomial {
        LaurentPolynomial::var(name.parse().unwrap())
    }

    fn c(n: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(n.into())
    }

    fn inv(name: &str) -> LaurentPolynomial {
        LaurentPolynomial::term(Monomial::var(name.parse().unwrap(), -1), ExactRational::one())
    }

    #[test]
    fn difference_of_squares_with_inverse_powers() {
        let u = v("u1");
        let lhs = (&u + &inv("u1")) * (&u - &inv("u1"));
        let u2 = LaurentPolynomial::term(Monomial::var(Var::u(1), 2), 1.into());
        let um2 = LaurentPolynomial::term(Monomial::var(Var::u(1), -2), 1.into());
        assert_eq!(lhs, &u2 - &um2);
        assert_eq!(lhs.to_string(), "u1^2 - u1^-2");
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = c(1) + v("beta") * v("z1");
        let repeated = &(&f * &f) * &f;
        assert_eq!(f.pow(3), repeated);
    }

    #[test]
    fn canonical_text_orders_by_grlex() {
        let p = v("u2") * c(3) + v("u1") * v("u1") - c(2) + v("u1");
        assert_eq!(p.to_string(), "u1^2 + u1 + 3*u2 - 2");
        let half = LaurentPolynomial::term(
            Monomial::from_pairs([(Var::u(1), 2), (Var::u(2), -1)]),
            ExactRational::new(3, 2).unwrap(),
        );
        assert_eq!(half.to_string(), "3/2*u1^2*u2^-1");
        assert_eq!((-c(1)).to_string(), "-1");
    }

    #[test]
    fn exact_division() {
        let (z1, z2) = (v("z1"), v("z2"));
        let num = &(&z1 * &z1) - &(&z2 * &z2);
        let q = num.exact_divide(&(&z1 - &z2)).unwrap();
        assert_eq!(q, &z1 + &z2);
        assert_eq!(num.exact_divide(&c(1)).unwrap(), num);
        assert_eq!((&z1 + &c(1)).exact_divide(&(&z1 - &z2)), Err(Error::NotDivisible));
        assert_eq!(num.exact_divide(&LaurentPolynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_division_with_negative_exponents() {
        // (u - u^-1)(u + 2 u^-3 v) / (u + 2 u^-3 v)
        let u = v("u1");
        let a = &u - &inv("u1");
        let b = &u + &(LaurentPolynomial::term(
            Monomial::from_pairs([(Var::u(1), -3), (Var::v(1), 1)]),
            2.into(),
        ));
        let prod = &a * &b;
        assert_eq!(prod.exact_divide(&b).unwrap(), a);
        assert_eq!(prod.exact_divide(&a).unwrap(), b);
    }

    #[test]
    fn evaluation_and_errors() {
        let p = &v("u1") * &v("u1");
        let mut pt = Assignment::new();
        pt.insert(Var::u(1), ExactRational::new(3, 2).unwrap());
        assert_eq!(p.evaluate(&pt).unwrap(), ExactRational::new(9, 4).unwrap());
        assert!(matches!(v("u2").evaluate(&pt), Err(Error::MissingVariable(_))));
        pt.insert(Var::u(1), ExactRational::zero());
        assert!(matches!(inv("u1").evaluate(&pt), Err(Error::SingularPoint(_))));
    }
}
