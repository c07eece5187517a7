//! Dense square matrices over a `Field` and their determinants.

use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    Cofactor,
    FractionFree,
    /// Cofactor expansion below dimension 4, fraction-free elimination from 4 up.
    Auto,
}

#[derive(Clone, PartialEq)]
pub struct SquareMatrix<F> {
    dim: usize,
    entries: Vec<F>,
}

impl<F: Field> SquareMatrix<F> {
    pub fn new(dim: usize, entries: Vec<F>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for dimension {dim}",
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Self { dim, entries }
    }

    pub fn try_from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Result<F>) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c)?);
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| F::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { F::one() } else { F::zero() })
    }

    pub fn diagonal(diag: Vec<F>) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F) {
        self.entries[r * self.dim + c] = value;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn map<G: Field>(&self, f: impl FnMut(&F) -> G) -> SquareMatrix<G> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(F::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Number of positions where the two matrices differ.
    pub fn count_differences(&self, other: &Self) -> usize {
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.clone() * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * n + c;
                        out.entries[idx] = out.entries[idx].clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product `self ⊗ other`; `self` indexes the outer blocks.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |r, c| {
            let a = self.get(r / m, c / m);
            if a.is_zero() {
                F::zero()
            } else {
                a.clone() * other.get(r % m, c % m)
            }
        })
    }

    /// Assembles `[[a, b], [c, d]]` from equally sized blocks.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let n = a.dim;
        Self::from_fn(2 * n, |r, col| {
            let blk = match (r < n, col < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(r % n, col % n).clone()
        })
    }

    pub fn determinant(&self, method: DetMethod) -> Result<F> {
        match method {
            DetMethod::Cofactor => Ok(self.det_cofactor()),
            DetMethod::FractionFree => self.det_bareiss(),
            DetMethod::Auto if self.dim < 4 => Ok(self.det_cofactor()),
            DetMethod::Auto => self.det_bareiss(),
        }
    }

    pub fn det(&self) -> Result<F> {
        self.determinant(DetMethod::Auto)
    }

    fn det_cofactor(&self) -> F {
        let cols: Vec<usize> = (0..self.dim).collect();
        self.minor(0, &cols)
    }

    /// Laplace expansion along `row` over the given remaining columns.
    fn minor(&self, row: usize, cols: &[usize]) -> F {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = F::zero();
        for (i, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&k| k != c).collect();
            let term = a.clone() * self.minor(row + 1, &rest);
            acc = if i % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Bareiss elimination; every division is exact.
    fn det_bareiss(&self) -> Result<F> {
        let n = self.dim;
        let mut a: Vec<Vec<F>> = (0..n)
            .map(|r| self.entries[r * n..(r + 1) * n].to_vec())
            .collect();
        let mut sign_flip = false;
        let mut prev = F::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(F::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * &a[k][k] - a[i][k].clone() * &a[k][j];
                    a[i][j] = v.exact_quotient(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }
}

impl<F: Field> fmt::Debug for SquareMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.dim {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.dim {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};

    fn z(j: usize) -> RationalFunction {
        RationalFunction::var(Var::z(j))
    }

    #[test]
    fn small_determinants() {
        let m = SquareMatrix::new(1, vec![z(1)]).unwrap();
        assert_eq!(m.det().unwrap(), z(1));
        let (a, b, c, d) = (z(1), z(2), z(3), z(4));
        let m = SquareMatrix::new(2, vec![a.clone(), b.clone(), c.clone(), d.clone()]).unwrap();
        assert_eq!(m.det().unwrap(), a * d - b * c);
        assert!(SquareMatrix::<ExactRational>::new(2, vec![ExactRational::one()]).is_err());
    }

    #[test]
    fn vandermonde_by_both_methods() {
        for n in 2..=4 {
            let m = SquareMatrix::from_fn(n, |r, c| z(c + 1).pow(r as i32).unwrap());
            let mut expected = RationalFunction::one();
            for j in 1..=n {
                for k in j + 1..=n {
                    expected = expected * (z(k) - z(j));
                }
            }
            assert_eq!(m.determinant(DetMethod::Cofactor).unwrap(), expected);
            assert_eq!(m.determinant(DetMethod::FractionFree).unwrap(), expected);
        }
    }

    #[test]
    fn bareiss_pivots_past_zero() {
        let r = |n: i64| ExactRational::from_integer(n);
        let m = SquareMatrix::new(3, vec![r(0), r(2), r(1), r(1), r(1), r(1), r(3), r(0), r(5)])
            .unwrap();
        assert_eq!(
            m.determinant(DetMethod::FractionFree).unwrap(),
            m.determinant(DetMethod::Cofactor).unwrap()
        );
        let singular = SquareMatrix::new(2, vec![r(0), r(1), r(0), r(3)]).unwrap();
        assert!(singular.determinant(DetMethod::FractionFree).unwrap().is_zero());
    }

    #[test]
    fn kron_and_block_shapes() {
        let r = |n: i64| ExactRational::from_integer(n);
        let a = SquareMatrix::new(2, vec![r(1), r(2), r(3), r(4)]).unwrap();
        let i = SquareMatrix::<ExactRational>::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.get(2, 0), &r(3));
        assert_eq!(k.get(3, 1), &r(3));
        assert_eq!(k.get(2, 1), &r(0));
        let z = SquareMatrix::zeros(2);
        let b = SquareMatrix::block(&a, &z, &z, &a);
        assert_eq!(b.det().unwrap(), r(4));
    }
}
