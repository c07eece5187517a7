//! Yang–Baxter and RLL relations as 8×8 matrix identities.

use crate::algebra::{Field, SquareMatrix};
use crate::error::Result;

use super::model::{RMatrix, VertexModel, WeightMatrix};

#[derive(Clone, Copy)]
enum Pair {
    Ab,
    Aj,
    Bj,
}

/// Embeds a 4×4 matrix into the 8-dimensional space a ⊗ b ⊗ j, index 4a + 2b + j.
fn embed<F: Field>(m: &WeightMatrix<F>, pair: Pair) -> SquareMatrix<F> {
    SquareMatrix::from_fn(8, |o, i| {
        let bits = |s: usize| ((s >> 2) & 1, (s >> 1) & 1, s & 1);
        let (ao, bo, jo) = bits(o);
        let (ai, bi, ji) = bits(i);
        match pair {
            Pair::Ab if ji == jo => m.0[2 * ao + bo][2 * ai + bi].clone(),
            Pair::Aj if bi == bo => m.0[2 * ao + jo][2 * ai + ji].clone(),
            Pair::Bj if ai == ao => m.0[2 * bo + jo][2 * bi + ji].clone(),
            _ => F::zero(),
        }
    })
}

/// Counts entries where `R_ab L_a(u1) L_b(u2)` and `L_b(u2) L_a(u1) R_ab`
/// differ at one site. Zero means the relation holds there.
pub fn rll_residual_at<F: Field>(
    model: &dyn VertexModel<F>,
    r: &RMatrix<F>,
    u1: &F,
    u2: &F,
    site: usize,
) -> Result<usize> {
    let rab = embed(&r.matrix(u1, u2)?, Pair::Ab);
    let la = embed(&model.l_operator(u1, site)?, Pair::Aj);
    let lb = embed(&model.l_operator(u2, site)?, Pair::Bj);
    let lhs = rab.mul(&la).mul(&lb);
    let rhs = lb.mul(&la).mul(&rab);
    Ok(lhs.count_differences(&rhs))
}

/// The RLL residual summed over every site the model defines (one site when
/// the L-operator does not depend on the site).
pub fn check_ybe<F: Field>(
    model: &dyn VertexModel<F>,
    r: &RMatrix<F>,
    u1: &F,
    u2: &F,
) -> Result<usize> {
    let sites = model.site_count().unwrap_or(1);
    let mut total = 0;
    for site in 0..sites {
        total += rll_residual_at(model, r, u1, u2, site)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};
    use crate::lattice::model::{ModelSpec, Perturbed};

    #[test]
    fn designated_r_matrices_intertwine() {
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        let (u1, u2) = (r(3, 7), r(-5, 2));
        for spec in crate::lattice::model::tests::sample_specs() {
            let res = check_ybe(&spec, &spec.designated_r(), &u1, &u2).unwrap();
            assert_eq!(res, 0, "{}", spec.kind());
        }
    }

    #[test]
    fn xxz_yang_baxter_symbolically() {
        let q = RationalFunction::var(Var::Q);
        let (u1, u2) = (RationalFunction::var(Var::u(1)), RationalFunction::var(Var::u(2)));
        let spec = ModelSpec::Xxz { q };
        assert_eq!(check_ybe(&spec, &spec.designated_r(), &u1, &u2).unwrap(), 0);
    }

    #[test]
    fn perturbation_breaks_felderhof() {
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        let spec = ModelSpec::Felderhof { p: r(3, 2), q: r(-1, 5) };
        let rm = spec.designated_r();
        let bad = Perturbed { base: spec, entry: (1, 2) };
        assert!(check_ybe(&bad, &rm, &r(3, 7), &r(-5, 2)).unwrap() > 0);
    }
}
