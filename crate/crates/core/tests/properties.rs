use bethe_symm::algebra::{DetMethod, ExactRational, Field, RationalFunction, SquareMatrix, Var};
use bethe_symm::symfunc::{grothendieck, schur, YoungDiagram};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = ExactRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| ExactRational::new(n, d).unwrap())
}

fn nonzero() -> impl Strategy<Value = ExactRational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// Small polynomial in z1, z2 with rational coefficients.
fn polynomial() -> impl Strategy<Value = RationalFunction> {
    prop::collection::vec((rational(), 0i32..3, 0i32..3), 1..4).prop_map(|terms| {
        let (z1, z2) = (RationalFunction::var(Var::z(1)), RationalFunction::var(Var::z(2)));
        terms.into_iter().fold(RationalFunction::zero(), |acc, (c, a, b)| {
            acc + RationalFunction::constant(c) * z1.pow(a).unwrap() * z2.pow(b).unwrap()
        })
    })
}

fn matrix(max: usize) -> impl Strategy<Value = SquareMatrix<ExactRational>> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(rational(), n * n).prop_map(move |e| SquareMatrix::new(n, e).unwrap())
    })
}

fn diagram(rows: usize, width: usize) -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(0..=width, rows).prop_map(move |mut p| {
        p.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::in_box(p, width).unwrap()
    })
}

/// h_k(z) by summing all monomials of degree k.
fn complete(k: i64, z: &[ExactRational]) -> ExactRational {
    if k < 0 {
        return ExactRational::zero();
    }
    fn rec(k: i64, z: &[ExactRational]) -> ExactRational {
        match z.split_first() {
            None => ExactRational::from_i64(i64::from(k == 0)),
            Some((first, rest)) => (0..=k).fold(ExactRational::zero(), |acc, e| {
                acc + first.powi(e as i32).unwrap() * rec(k - e, rest)
            }),
        }
    }
    rec(k, z)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in nonzero()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() * c.clone()).checked_div(&c).unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<ExactRational>().unwrap(), a);
    }

    #[test]
    fn rational_function_ring(a in polynomial(), b in polynomial()) {
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() * b.clone()).checked_div(&b).unwrap(), a.clone());
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(q * b, a);
        }
    }

    #[test]
    fn determinant_methods_agree(m in matrix(5)) {
        prop_assert_eq!(
            m.determinant(DetMethod::Cofactor).unwrap(),
            m.determinant(DetMethod::FractionFree).unwrap()
        );
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3)) {
        let b = SquareMatrix::from_fn(a.dim(), |r, c| ExactRational::from_i64((r * 3 + c * c) as i64 - 2));
        prop_assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn diagram_round_trips(lam in diagram(3, 4)) {
        let x = lam.to_positions();
        prop_assert_eq!(&YoungDiagram::from_positions(&x, 3 + 4).unwrap(), &lam);
        prop_assert_eq!(&lam.complement(4).unwrap().complement(4).unwrap(), &lam);
        let occ = lam.to_occupations(5).unwrap();
        prop_assert_eq!(occ.iter().sum::<usize>(), 3);
        prop_assert_eq!(&YoungDiagram::from_occupations(&occ).unwrap().padded(3).unwrap(), &lam);
    }

    #[test]
    fn schur_matches_jacobi_trudi(lam in diagram(3, 2), z in prop::collection::vec(nonzero(), 3)) {
        prop_assume!(z[0] != z[1] && z[1] != z[2] && z[0] != z[2]);
        let p = lam.parts();
        let jt = SquareMatrix::from_fn(3, |i, j| complete(p[i] as i64 - i as i64 + j as i64, &z));
        prop_assert_eq!(schur(&lam, &z).unwrap(), jt.det().unwrap());
    }

    #[test]
    fn grothendieck_is_symmetric(lam in diagram(3, 2), z in prop::collection::vec(nonzero(), 3), beta in rational()) {
        prop_assume!(z[0] != z[1] && z[1] != z[2] && z[0] != z[2]);
        let swapped = [z[2].clone(), z[0].clone(), z[1].clone()];
        prop_assert_eq!(grothendieck(&lam, &z, &beta).unwrap(), grothendieck(&lam, &swapped, &beta).unwrap());
    }
}
