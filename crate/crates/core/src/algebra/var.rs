//! Variable identifiers with a fixed global ordering.
//!
//! The ordering is the derived `Ord`: family first (declaration order
//! below), then index, with the unindexed variable of a family first.
//! Term maps of every polynomial are keyed under this ordering, so two
//! polynomials built in different modules compare structurally.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    U,
    V,
    W,
    X,
    Y,
    Z,
    Q,
    Beta,
    P,
    T,
    Alpha,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::U,
        Family::V,
        Family::W,
        Family::X,
        Family::Y,
        Family::Z,
        Family::Q,
        Family::Beta,
        Family::P,
        Family::T,
        Family::Alpha,
        Family::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::U => "u",
            Family::V => "v",
            Family::W => "w",
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::Q => "q",
            Family::Beta => "beta",
            Family::P => "p",
            Family::T => "t",
            Family::Alpha => "alpha",
            Family::Gamma => "gamma",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    family: Family,
    index: Option<u16>,
}

impl Var {
    pub const Q: Var = Var::scalar(Family::Q);
    pub const BETA: Var = Var::scalar(Family::Beta);
    pub const P: Var = Var::scalar(Family::P);
    pub const T: Var = Var::scalar(Family::T);

    pub const fn scalar(family: Family) -> Var {
        Var {
            family,
            index: None,
        }
    }

    pub const fn indexed(family: Family, index: u16) -> Var {
        Var {
            family,
            index: Some(index),
        }
    }

    pub fn u(j: usize) -> Var {
        Var::indexed(Family::U, j as u16)
    }
    pub fn v(j: usize) -> Var {
        Var::indexed(Family::V, j as u16)
    }
    pub fn w(j: usize) -> Var {
        Var::indexed(Family::W, j as u16)
    }
    pub fn x(j: usize) -> Var {
        Var::indexed(Family::X, j as u16)
    }
    pub fn y(j: usize) -> Var {
        Var::indexed(Family::Y, j as u16)
    }
    pub fn z(j: usize) -> Var {
        Var::indexed(Family::Z, j as u16)
    }
    pub fn q_site(j: usize) -> Var {
        Var::indexed(Family::Q, j as u16)
    }
    pub fn alpha(j: usize) -> Var {
        Var::indexed(Family::Alpha, j as u16)
    }
    pub fn gamma(j: usize) -> Var {
        Var::indexed(Family::Gamma, j as u16)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> Option<u16> {
        self.index
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.family.name(), i),
            None => f.write_str(self.family.name()),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (head, digits) = s.split_at(split);
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == head)
            .ok_or_else(|| Error::Parse(format!("unknown variable {s:?}")))?;
        if digits.is_empty() {
            return Ok(Var::scalar(family));
        }
        let index = digits
            .parse::<u16>()
            .map_err(|_| Error::Parse(format!("bad variable index in {s:?}")))?;
        Ok(Var::indexed(family, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_follows_registry() {
        let mut vars = [Var::BETA, Var::Q, Var::v(1), Var::u(2), Var::u(1), Var::q_site(1)];
        vars.sort();
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["u1", "u2", "v1", "q", "q1", "beta"]);
    }

    #[test]
    fn parse_round_trip() {
        for name in ["u1", "beta", "alpha0", "gamma12", "q", "z3"] {
            assert_eq!(name.parse::<Var>().unwrap().to_string(), name);
        }
        assert!("k1".parse::<Var>().is_err());
        assert!("u1x".parse::<Var>().is_err());
    }
}
