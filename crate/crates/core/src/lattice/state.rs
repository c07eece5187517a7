//! Basis configurations of the spin chain.

use std::fmt;

use crate::error::{Error, Result};

/// A basis state of M sites; bit `j - 1` of `bits` is the occupation of site j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeState {
    m: usize,
    bits: u64,
}

impl LatticeState {
    pub fn vacuum(m: usize) -> Self {
        Self { m, bits: 0 }
    }

    pub fn full(m: usize) -> Self {
        Self {
            m,
            bits: (1u64 << m) - 1,
        }
    }

    pub fn from_index(m: usize, bits: u64) -> Self {
        Self { m, bits }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut b = 0;
        for (j, &x) in bits.iter().enumerate() {
            if x {
                b |= 1 << j;
            }
        }
        Self { m: bits.len(), bits: b }
    }

    /// Particles at the given 1-based, strictly increasing positions.
    pub fn from_positions(m: usize, positions: &[usize]) -> Result<Self> {
        check_positions(m, positions)?;
        let mut bits = 0;
        for &x in positions {
            bits |= 1 << (x - 1);
        }
        Ok(Self { m, bits })
    }

    /// Every site occupied except the given 1-based hole positions.
    pub fn from_holes(m: usize, holes: &[usize]) -> Result<Self> {
        let s = Self::from_positions(m, holes)?;
        Ok(Self {
            m,
            bits: !s.bits & ((1u64 << m) - 1),
        })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn index(&self) -> u64 {
        self.bits
    }

    pub fn particle_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn occupied(&self, site: usize) -> bool {
        (self.bits >> (site - 1)) & 1 == 1
    }

    pub fn positions(&self) -> Vec<usize> {
        (1..=self.m).filter(|&j| self.occupied(j)).collect()
    }

    pub fn holes(&self) -> Vec<usize> {
        (1..=self.m).filter(|&j| !self.occupied(j)).collect()
    }

    /// All states with exactly `n` particles, in increasing index order.
    pub fn sector(m: usize, n: usize) -> Vec<Self> {
        (0..1u64 << m)
            .filter(|b| b.count_ones() as usize == n)
            .map(|bits| Self { m, bits })
            .collect()
    }
}

pub(crate) fn check_positions(m: usize, positions: &[usize]) -> Result<()> {
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(positions.to_vec()));
    }
    if let Some(&bad) = positions.iter().find(|&&x| x == 0 || x > m) {
        return Err(Error::BoxViolation(format!("position {bad} outside 1..={m}")));
    }
    Ok(())
}

impl fmt::Debug for LatticeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for j in 1..=self.m {
            f.write_str(if self.occupied(j) { "1" } else { "0" })?;
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_holes() {
        let s = LatticeState::from_positions(4, &[1, 3]).unwrap();
        assert_eq!(s.index(), 0b0101);
        assert_eq!(s.positions(), [1, 3]);
        assert_eq!(s.holes(), [2, 4]);
        assert_eq!(LatticeState::from_holes(4, &[2, 4]).unwrap(), s);
        assert_eq!(format!("{s:?}"), "|1010>");
        assert!(LatticeState::from_positions(4, &[3, 1]).is_err());
        assert!(LatticeState::from_positions(4, &[5]).is_err());
        assert_eq!(LatticeState::sector(4, 2).len(), 6);
    }
}
