//! Sums over the symmetric group.

use super::field::Field;
use crate::error::{cap_check, Result};

pub const DEFAULT_FACTORIAL_CAP: usize = 7;
/// Overrides of the factorial cap are clamped to this.
pub const HARD_FACTORIAL_CAP: usize = 9;

/// Advances `p` to the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// +1 or -1 by inversion parity.
pub fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_σ sgn(σ)^signed · term(σ)` over permutations of `0..n`, zero-based.
pub fn permutation_sum<F: Field>(
    n: usize,
    cap: usize,
    signed: bool,
    mut term: impl FnMut(&[usize]) -> Result<F>,
) -> Result<F> {
    cap_check("permutation size", n, cap.min(HARD_FACTORIAL_CAP))?;
    let mut p: Vec<usize> = (0..n).collect();
    let mut acc = F::zero();
    loop {
        let t = term(&p)?;
        acc = if signed && sign(&p) < 0 { acc - t } else { acc + t };
        if !next_permutation(&mut p) {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix::SquareMatrix, RationalFunction, Var};
    use crate::error::Error;

    fn z(j: usize) -> RationalFunction {
        RationalFunction::var(Var::z(j))
    }

    #[test]
    fn lexicographic_order_and_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], [0, 1, 2]);
        assert_eq!(ps[1], [0, 2, 1]);
        assert_eq!(ps[5], [2, 1, 0]);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
    }

    #[test]
    fn small_sums() {
        let f = permutation_sum(1, 7, false, |_| Ok(z(1))).unwrap();
        assert_eq!(f, z(1));
        let f: RationalFunction = permutation_sum(2, 7, true, |s| Ok(z(s[0] + 1))).unwrap();
        assert_eq!(f, z(1) - z(2));
    }

    #[test]
    fn signed_sum_is_vandermonde_determinant() {
        let n = 3;
        let sum: RationalFunction = permutation_sum(n, 7, true, |s| {
            let mut t = RationalFunction::one();
            for (j, &sj) in s.iter().enumerate() {
                t = t * z(sj + 1).pow(j as i32)?;
            }
            Ok(t)
        })
        .unwrap();
        let m = SquareMatrix::from_fn(n, |r, c| z(c + 1).pow(r as i32).unwrap());
        assert_eq!(sum, m.det().unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let r: Result<RationalFunction> = permutation_sum(8, 7, false, |_| Ok(RationalFunction::one()));
        assert!(matches!(r, Err(Error::CapExceeded { .. })));
    }
}
