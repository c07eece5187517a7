//! Seeded exact sampling of rational points.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::algebra::{Assignment, ExactRational, Field, LaurentPolynomial, RationalFunction, Var};
use crate::error::{Error, Result};

/// Attempts before a task gives up on finding a nonsingular point.
pub const RESAMPLE_LIMIT: usize = 100;

const NUMERATOR_RANGE: std::ops::RangeInclusive<i64> = -9..=9;
const DENOMINATORS: [i64; 5] = [1, 2, 3, 5, 7];

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One rational with numerator in [-9, 9] and denominator in {1, 2, 3, 5, 7}.
pub fn sample_rational(rng: &mut ChaCha8Rng) -> ExactRational {
    let n = rng.gen_range(NUMERATOR_RANGE);
    let d = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
    ExactRational::new(n, d).expect("nonzero denominator")
}

/// A point at which no forbidden polynomial vanishes.
pub fn sample_point(vars: &[Var], forbidden: &[LaurentPolynomial], seed: u64) -> Result<Assignment> {
    let mut rng = rng_from_seed(seed);
    for _ in 0..RESAMPLE_LIMIT {
        let point: Assignment = vars.iter().map(|&v| (v, sample_rational(&mut rng))).collect();
        let mut ok = true;
        for f in forbidden {
            if f.evaluate(&point)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(point);
        }
    }
    Err(Error::SamplingExhausted(RESAMPLE_LIMIT))
}

/// Supplies the value of each named variable to a task.
pub trait Source<F> {
    fn value(&mut self, v: Var) -> F;
}

/// Draws each variable lazily and remembers what it drew.
pub struct PointSource<'a> {
    rng: &'a mut ChaCha8Rng,
    pub assignment: Assignment,
}

impl<'a> PointSource<'a> {
    pub fn new(rng: &'a mut ChaCha8Rng) -> Self {
        Self {
            rng,
            assignment: Assignment::new(),
        }
    }
}

impl Source<ExactRational> for PointSource<'_> {
    fn value(&mut self, v: Var) -> ExactRational {
        if let Some(x) = self.assignment.get(&v) {
            return x.clone();
        }
        let x = sample_rational(self.rng);
        self.assignment.insert(v, x.clone());
        x
    }
}

/// Every variable stays a symbol.
pub struct SymbolicSource;

impl Source<RationalFunction> for SymbolicSource {
    fn value(&mut self, v: Var) -> RationalFunction {
        RationalFunction::var(v)
    }
}

pub(crate) fn values<F: Field>(src: &mut dyn Source<F>, make: fn(usize) -> Var, n: usize) -> Vec<F> {
    (1..=n).map(|j| src.value(make(j))).collect()
}

/// Errors that mean "this point is singular, draw another".
pub(crate) fn is_singular(e: &Error) -> bool {
    matches!(e, Error::SingularPoint(_) | Error::DivisionByZero)
}
