//! Exact scalars, polynomials, matrices and permutation sums.

pub mod field;
pub mod laurent;
pub mod matrix;
pub mod perm;
pub mod ratfun;
pub mod rational;
pub mod var;

pub use field::Field;
pub use laurent::{Assignment, LaurentPolynomial, Monomial};
pub use matrix::{DetMethod, SquareMatrix};
pub use perm::permutation_sum;
pub use ratfun::RationalFunction;
pub use rational::ExactRational;
pub use var::{Family, Var};
