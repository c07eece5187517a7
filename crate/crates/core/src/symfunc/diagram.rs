//! Young diagrams and their particle, hole and occupation encodings.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::state::check_positions;

/// A weakly decreasing sequence of N nonnegative parts, optionally in a box
/// of width L.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    parts: Vec<usize>,
    width: Option<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BoxViolation(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self { parts, width: None })
    }

    pub fn in_box(parts: Vec<usize>, width: usize) -> Result<Self> {
        let d = Self::new(parts)?;
        d.with_width(width)
    }

    pub fn empty(rows: usize) -> Self {
        Self {
            parts: vec![0; rows],
            width: None,
        }
    }

    pub fn with_width(mut self, width: usize) -> Result<Self> {
        if let Some(&first) = self.parts.first() {
            if first > width {
                return Err(Error::BoxViolation(format!(
                    "first part {first} exceeds box width {width}"
                )));
            }
        }
        self.width = Some(width);
        Ok(self)
    }

    /// Zero-pads to `rows` parts.
    pub fn padded(&self, rows: usize) -> Result<Self> {
        if rows < self.parts.iter().filter(|&&p| p > 0).count() {
            return Err(Error::BoxViolation(format!(
                "{self:?} has more than {rows} nonzero rows"
            )));
        }
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(rows, 0);
        Ok(Self {
            parts,
            width: self.width,
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> Option<usize> {
        self.width
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// λ_j = x_{N-j+1} - N + j - 1 for particles at 1-based positions x on M
    /// sites; the box width is M - N.
    pub fn from_positions(x: &[usize], m: usize) -> Result<Self> {
        check_positions(m, x)?;
        let n = x.len();
        let parts = (1..=n).map(|j| x[n - j] + j - 1 - n).collect();
        Self::in_box(parts, m - n)
    }

    /// Inverse of `from_positions`: x_i = λ_{N-i+1} + i.
    pub fn to_positions(&self) -> Vec<usize> {
        let n = self.rows();
        (1..=n).map(|i| self.parts[n - i] + i).collect()
    }

    /// λ^∨_j = L - λ_{N+1-j}.
    pub fn complement(&self, width: usize) -> Result<Self> {
        let n = self.rows();
        if self.first() > width {
            return Err(Error::BoxViolation(format!(
                "{self:?} does not fit in width {width}"
            )));
        }
        Self::in_box((1..=n).map(|j| width - self.parts[n - j]).collect(), width)
    }

    /// λ̂_i = |{j : λ_j ≤ M - i}| for i = 1..M.
    pub fn hat(&self, m: usize) -> Result<Self> {
        if self.first() > m {
            return Err(Error::BoxViolation(format!("{self:?} does not fit in width {m}")));
        }
        let parts = (1..=m)
            .map(|i| self.parts.iter().filter(|&&l| l + i <= m).count())
            .collect();
        Self::in_box(parts, self.rows())
    }

    /// λ = ((M-1)^{n_{M-1}}, …, 1^{n_1}, 0^{n_0}) from site occupations n_0..n_{M-1}.
    pub fn from_occupations(n: &[usize]) -> Result<Self> {
        let m = n.len();
        let mut parts = Vec::new();
        for i in (0..m).rev() {
            parts.extend(std::iter::repeat_n(i, n[i]));
        }
        Self::in_box(parts, m.saturating_sub(1))
    }

    /// Occupations n_0..n_{M-1} with λ = from_occupations(n).
    pub fn to_occupations(&self, m: usize) -> Result<Vec<usize>> {
        let mut n = vec![0; m];
        for &p in &self.parts {
            if p >= m {
                return Err(Error::BoxViolation(format!("part {p} needs more than {m} sites")));
            }
            n[p] += 1;
        }
        Ok(n)
    }

    /// All diagrams with `rows` parts inside width `width`, in reverse
    /// lexicographic order of parts (largest first).
    pub fn all_in_box(rows: usize, width: usize) -> Vec<Self> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rows == 0 {
                out.push(prefix.clone());
                return;
            }
            for a in (0..=max).rev() {
                prefix.push(a);
                rec(rows - 1, a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, width, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|parts| Self {
                parts,
                width: Some(width),
            })
            .collect()
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consecutive_positions_give_empty_diagram() {
        let d = YoungDiagram::from_positions(&[1, 2, 3], 5).unwrap();
        assert_eq!(d.parts(), [0, 0, 0]);
        assert_eq!(d.width(), Some(2));
        assert_eq!(d.complement(2).unwrap().parts(), [2, 2, 2]);
    }

    #[test]
    fn positions_round_trip() {
        let d = YoungDiagram::from_positions(&[2, 5], 6).unwrap();
        assert_eq!(d.parts(), [3, 1]);
        assert_eq!(d.to_positions(), [2, 5]);
        assert!(matches!(
            YoungDiagram::from_positions(&[3, 2], 6),
            Err(Error::NotStrictlyIncreasing(_))
        ));
    }

    #[test]
    fn hat_of_empty_is_full() {
        let d = YoungDiagram::empty(2);
        assert_eq!(d.hat(3).unwrap().parts(), [2, 2, 2]);
        let d = YoungDiagram::new(vec![2, 0]).unwrap();
        // λ̂_i counts λ_j ≤ 2 - i: i=1 → {0}, i=2 → {0}.
        assert_eq!(d.hat(2).unwrap().parts(), [1, 1]);
    }

    #[test]
    fn occupation_labels() {
        let d = YoungDiagram::from_occupations(&[1, 0, 2]).unwrap();
        assert_eq!(d.parts(), [2, 2, 0]);
        assert_eq!(d.to_occupations(3).unwrap(), [1, 0, 2]);
    }

    #[test]
    fn box_enumeration_and_violations() {
        assert_eq!(YoungDiagram::all_in_box(2, 2).len(), 6);
        assert_eq!(YoungDiagram::all_in_box(3, 3).len(), 20);
        assert_eq!(YoungDiagram::all_in_box(0, 3).len(), 1);
        assert!(matches!(YoungDiagram::in_box(vec![3, 1], 2), Err(Error::BoxViolation(_))));
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
    }
}
