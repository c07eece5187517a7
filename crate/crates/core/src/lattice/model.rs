//! The eight vertex models and their R-matrices.

use std::fmt;

use crate::algebra::Field;
use crate::error::{Error, Result};

/// A 4×4 vertex weight matrix on auxiliary ⊗ quantum space.
///
/// Row and column index is `2 * aux + bit`, so the order is 00, 01, 10, 11.
/// Entry `[out][in]`.
#[derive(Clone, PartialEq)]
pub struct WeightMatrix<F>(pub [[F; 4]; 4]);

impl<F: Field> WeightMatrix<F> {
    /// The six-vertex pattern with weights at (00,00), (01,01), (01,10),
    /// (10,01), (10,10), (11,11).
    pub fn six(a1: F, b1: F, c1: F, c2: F, b2: F, a2: F) -> Self {
        let z = F::zero;
        WeightMatrix([
            [a1, z(), z(), z()],
            [z(), b1, c1, z()],
            [z(), c2, b2, z()],
            [z(), z(), z(), a2],
        ])
    }

    pub fn get(&self, out: usize, inp: usize) -> &F {
        &self.0[out][inp]
    }

    /// Entry for auxiliary/quantum bits in and out.
    pub fn weight(&self, aux_out: usize, bit_out: usize, aux_in: usize, bit_in: usize) -> &F {
        &self.0[2 * aux_out + bit_out][2 * aux_in + bit_in]
    }

    /// True when only entries conserving aux + bit are nonzero.
    pub fn conserves_charge(&self) -> bool {
        (0..4).all(|r| {
            (0..4).all(|c| (r >> 1) + (r & 1) == (c >> 1) + (c & 1) || self.0[r][c].is_zero())
        })
    }
}

impl<F: Field> fmt::Debug for WeightMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|r| r.to_vec())).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Xxz,
    GeneralizedXxz,
    QBeta,
    FiveVertex,
    SixVertexBeta,
    Felderhof,
    InhomFelderhof,
    GeneralizedFelderhof,
}

impl ModelKind {
    pub const ALL: [ModelKind; 8] = [
        ModelKind::Xxz,
        ModelKind::GeneralizedXxz,
        ModelKind::QBeta,
        ModelKind::FiveVertex,
        ModelKind::SixVertexBeta,
        ModelKind::Felderhof,
        ModelKind::InhomFelderhof,
        ModelKind::GeneralizedFelderhof,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Xxz => "XXZ",
            ModelKind::GeneralizedXxz => "GeneralizedXXZ",
            ModelKind::QBeta => "QBeta",
            ModelKind::FiveVertex => "FiveVertex",
            ModelKind::SixVertexBeta => "SixVertexBeta",
            ModelKind::Felderhof => "Felderhof",
            ModelKind::InhomFelderhof => "InhomFelderhof",
            ModelKind::GeneralizedFelderhof => "GeneralizedFelderhof",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ModelKind::Xxz => "XXZ R-matrix as an L-operator; parameter q",
            ModelKind::GeneralizedXxz => {
                "XXZ-type L-operator with alpha1..alpha6 under two constraints; parameters alpha, q"
            }
            ModelKind::QBeta => "q-deformed beta L-operator; parameters q, beta",
            ModelKind::FiveVertex => "five-vertex L-operator, the q = 0 limit; parameter beta",
            ModelKind::SixVertexBeta => "free-fermionic six-vertex L-operator; parameter beta",
            ModelKind::Felderhof => "Felderhof L-operator; parameters p, q",
            ModelKind::InhomFelderhof => {
                "Felderhof L-operator with per-site q_j and spectral shifts v_j; parameter p"
            }
            ModelKind::GeneralizedFelderhof => {
                "generalized Felderhof L-operator; parameter t, per-site alpha_j, gamma_j"
            }
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the eight L-operators with its parameters bound.
///
/// Site lists are indexed by site, site 1 first.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec<F> {
    Xxz { q: F },
    GeneralizedXxz { alpha: [F; 6], q: F },
    QBeta { q: F, beta: F },
    FiveVertex { beta: F },
    SixVertexBeta { beta: F },
    Felderhof { p: F, q: F },
    InhomFelderhof { p: F, q: Vec<F>, v: Vec<F> },
    GeneralizedFelderhof { t: F, alpha: Vec<F>, gamma: Vec<F> },
}

/// Anything that supplies an L-operator per site.
pub trait VertexModel<F: Field>: Sync {
    fn l_operator(&self, u: &F, site: usize) -> Result<WeightMatrix<F>>;

    /// Number of sites the model is defined on, when it carries site lists.
    fn site_count(&self) -> Option<usize> {
        None
    }
}

impl<F: Field> ModelSpec<F> {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelSpec::Xxz { .. } => ModelKind::Xxz,
            ModelSpec::GeneralizedXxz { .. } => ModelKind::GeneralizedXxz,
            ModelSpec::QBeta { .. } => ModelKind::QBeta,
            ModelSpec::FiveVertex { .. } => ModelKind::FiveVertex,
            ModelSpec::SixVertexBeta { .. } => ModelKind::SixVertexBeta,
            ModelSpec::Felderhof { .. } => ModelKind::Felderhof,
            ModelSpec::InhomFelderhof { .. } => ModelKind::InhomFelderhof,
            ModelSpec::GeneralizedFelderhof { .. } => ModelKind::GeneralizedFelderhof,
        }
    }

    /// The generalized XXZ choice that reproduces the qβ L-operator.
    pub fn generalized_xxz_from_qbeta(q: F, beta: F) -> Result<Self> {
        let one = F::one();
        let alpha = [
            one.clone(),
            one.clone(),
            one.clone(),
            q.clone() * &beta,
            -beta.inv()?,
            -one,
        ];
        Ok(ModelSpec::GeneralizedXxz { alpha, q })
    }

    /// Constraint violations, empty when the parameters are admissible.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            ModelSpec::GeneralizedXxz { alpha, q } => {
                let [a1, a2, a3, a4, a5, a6] = alpha;
                let a12 = a1.clone() * a2;
                let a36 = a3.clone() * a6;
                let a45 = a4.clone() * a5;
                let c1 = (F::one() - q) * &a12 + &a36 - &a45;
                let q2 = q.clone() * q;
                let c2 = (q2.clone() - q) * &a12 + q2 * &a36 - &a45;
                if !c1.is_zero() {
                    out.push(format!(
                        "constraint 1: (1-q)a1a2 + a3a6 - a4a5 = {} != 0",
                        c1.to_text()
                    ));
                }
                if !c2.is_zero() {
                    out.push(format!(
                        "constraint 2: (q^2-q)a1a2 + q^2a3a6 - a4a5 = {} != 0",
                        c2.to_text()
                    ));
                }
            }
            ModelSpec::InhomFelderhof { q, v, .. } => {
                if q.len() != v.len() {
                    out.push(format!(
                        "site lists differ in length: {} q_j, {} v_j",
                        q.len(),
                        v.len()
                    ));
                }
                if v.iter().any(Field::is_zero) {
                    out.push("some v_j is zero".into());
                }
            }
            ModelSpec::GeneralizedFelderhof { alpha, gamma, .. } => {
                if alpha.len() != gamma.len() {
                    out.push(format!(
                        "site lists differ in length: {} alpha_j, {} gamma_j",
                        alpha.len(),
                        gamma.len()
                    ));
                }
            }
            ModelSpec::QBeta { beta, .. }
            | ModelSpec::FiveVertex { beta }
                if beta.is_zero() =>
            {
                out.push("beta must be nonzero".into());
            }
            ModelSpec::Felderhof { p, .. } if p.is_zero() => {
                out.push("p must be nonzero".into());
            }
            _ => {}
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidModel(v.join("; ")))
        }
    }

    /// The R-matrix this model's L-operator intertwines.
    pub fn designated_r(&self) -> RMatrix<F> {
        match self {
            ModelSpec::Xxz { q } | ModelSpec::GeneralizedXxz { q, .. } | ModelSpec::QBeta { q, .. } => {
                RMatrix::Xxz { q: q.clone() }
            }
            ModelSpec::FiveVertex { .. } => RMatrix::Xxz { q: F::zero() },
            ModelSpec::SixVertexBeta { .. } => RMatrix::SixVertexBeta,
            ModelSpec::Felderhof { p, .. } | ModelSpec::InhomFelderhof { p, .. } => {
                RMatrix::Felderhof { p: p.clone() }
            }
            ModelSpec::GeneralizedFelderhof { t, .. } => RMatrix::GeneralizedFelderhof { t: t.clone() },
        }
    }
}

fn felderhof<F: Field>(u: &F, p: &F, q: &F) -> Result<WeightMatrix<F>> {
    let one = F::one;
    let pinv = p.inv()?;
    let pq = p.clone() * q;
    let q_over_p = q.clone() * &pinv;
    Ok(WeightMatrix::six(
        one() - pq.clone() * u,
        -(p.clone() * p) * (one() - q_over_p.clone() * u),
        one() - q.clone() * q,
        (one() - p.clone() * p) * u,
        u.clone() - &q_over_p,
        u.clone() - &pq,
    ))
}

fn site_param<'a, F>(list: &'a [F], site: usize, what: &str) -> Result<&'a F> {
    list.get(site).ok_or_else(|| {
        Error::ShapeMismatch(format!("site {} has no {what} (list length {})", site + 1, list.len()))
    })
}

impl<F: Field> VertexModel<F> for ModelSpec<F> {
    fn l_operator(&self, u: &F, site: usize) -> Result<WeightMatrix<F>> {
        let one = F::one;
        Ok(match self {
            ModelSpec::Xxz { q } => {
                let ui = u.inv()?;
                WeightMatrix::six(
                    u.clone() - q.clone() * &ui,
                    q.clone() * (u.clone() - &ui),
                    one() - q,
                    one() - q,
                    u.clone() - &ui,
                    u.clone() - q.clone() * &ui,
                )
            }
            ModelSpec::GeneralizedXxz { alpha, q } => {
                let [a1, a2, a3, a4, a5, a6] = alpha;
                let ui = u.inv()?;
                WeightMatrix::six(
                    a3.clone() * u + a4.clone() * &ui,
                    a3.clone() * q * u + a4.clone() * &ui,
                    (one() - q) * a1,
                    (one() - q) * a2,
                    a5.clone() * u + a6.clone() * &ui,
                    a5.clone() * u + a6.clone() * q * &ui,
                )
            }
            ModelSpec::QBeta { q, beta } => {
                let ui = u.inv()?;
                let bi = beta.inv()?;
                WeightMatrix::six(
                    u.clone() + q.clone() * beta * &ui,
                    q.clone() * (u.clone() + beta.clone() * &ui),
                    one() - q,
                    one() - q,
                    -(bi.clone() * u) - &ui,
                    -(bi * u) - q.clone() * &ui,
                )
            }
            ModelSpec::FiveVertex { beta } => {
                let ui = u.inv()?;
                let bi = beta.inv()?;
                WeightMatrix::six(
                    u.clone(),
                    F::zero(),
                    one(),
                    one(),
                    -(bi.clone() * u) - &ui,
                    -(bi * u),
                )
            }
            ModelSpec::SixVertexBeta { beta } => WeightMatrix::six(
                one() - beta.clone() * u,
                one() + beta.clone() * u,
                F::from_i64(2) * u,
                one(),
                u.clone(),
                u.clone(),
            ),
            ModelSpec::Felderhof { p, q } => felderhof(u, p, q)?,
            ModelSpec::InhomFelderhof { p, q, v } => {
                let qj = site_param(q, site, "q_j")?;
                let vj = site_param(v, site, "v_j")?;
                felderhof(&u.checked_div(vj)?, p, qj)?
            }
            ModelSpec::GeneralizedFelderhof { t, alpha, gamma } => {
                let a = site_param(alpha, site, "alpha_j")?;
                let g = site_param(gamma, site, "gamma_j")?;
                let slope = one() - a.clone() * g;
                WeightMatrix::six(
                    one() - g.clone() * u,
                    t.clone() + g.clone() * u,
                    one(),
                    (t.clone() + one()) * u,
                    a.clone() + slope.clone() * u,
                    -(t.clone() * a) + slope * u,
                )
            }
        })
    }

    fn site_count(&self) -> Option<usize> {
        match self {
            ModelSpec::InhomFelderhof { q, .. } => Some(q.len()),
            ModelSpec::GeneralizedFelderhof { alpha, .. } => Some(alpha.len()),
            _ => None,
        }
    }
}

/// A model with one L-operator entry shifted by +1, for negative controls.
#[derive(Clone, Debug)]
pub struct Perturbed<F> {
    pub base: ModelSpec<F>,
    pub entry: (usize, usize),
}

impl<F: Field> VertexModel<F> for Perturbed<F> {
    fn l_operator(&self, u: &F, site: usize) -> Result<WeightMatrix<F>> {
        let mut l = self.base.l_operator(u, site)?;
        let (r, c) = self.entry;
        l.0[r][c] = l.0[r][c].clone() + F::one();
        Ok(l)
    }

    fn site_count(&self) -> Option<usize> {
        self.base.site_count()
    }
}

/// R-matrices acting on two auxiliary spaces.
#[derive(Clone, Debug, PartialEq)]
pub enum RMatrix<F> {
    /// The XXZ L-operator evaluated at u1/u2.
    Xxz { q: F },
    /// The Felderhof L-operator at u1/u2 with both colour parameters equal to p.
    Felderhof { p: F },
    SixVertexBeta,
    GeneralizedFelderhof { t: F },
}

impl<F: Field> RMatrix<F> {
    pub fn matrix(&self, u1: &F, u2: &F) -> Result<WeightMatrix<F>> {
        let one = F::one;
        Ok(match self {
            RMatrix::Xxz { q } => ModelSpec::Xxz { q: q.clone() }.l_operator(&u1.checked_div(u2)?, 0)?,
            RMatrix::Felderhof { p } => felderhof(&u1.checked_div(u2)?, p, p)?,
            RMatrix::SixVertexBeta => WeightMatrix::six(
                u1.clone() + u2,
                u2.clone() - u1,
                F::from_i64(2) * u1,
                F::from_i64(2) * u2,
                u1.clone() - u2,
                u1.clone() + u2,
            ),
            RMatrix::GeneralizedFelderhof { t } => WeightMatrix::six(
                t.clone() * u1 + u2,
                -(t.clone() * (u1.clone() - u2)),
                (t.clone() + one()) * u2,
                (t.clone() + one()) * u1,
                u1.clone() - u2,
                u1.clone() + t.clone() * u2,
            ),
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};

    fn var(v: Var) -> RationalFunction {
        RationalFunction::var(v)
    }

    #[test]
    fn qbeta_at_q_zero_is_five_vertex() {
        let (u, b) = (var(Var::u(1)), var(Var::BETA));
        let qb = ModelSpec::QBeta { q: RationalFunction::zero(), beta: b.clone() };
        let fv = ModelSpec::FiveVertex { beta: b };
        assert_eq!(qb.l_operator(&u, 0).unwrap(), fv.l_operator(&u, 0).unwrap());
    }

    #[test]
    fn felderhof_middle_entry() {
        let (u, p, q) = (var(Var::u(1)), var(Var::P), var(Var::Q));
        let l = ModelSpec::Felderhof { p: p.clone(), q: q.clone() }.l_operator(&u, 0).unwrap();
        let expected = -(p.clone() * &p) * (RationalFunction::one() - q * p.inv().unwrap() * &u);
        assert_eq!(l.get(1, 1), &expected);
    }

    #[test]
    fn xxz_vacuum_entry() {
        let (u, q) = (var(Var::u(1)), var(Var::Q));
        let l = ModelSpec::Xxz { q: q.clone() }.l_operator(&u, 0).unwrap();
        assert_eq!(l.get(0, 0), &(u.clone() - q * u.inv().unwrap()));
    }

    #[test]
    fn every_model_conserves_charge() {
        let u = ExactRational::new(3, 7).unwrap();
        for spec in sample_specs() {
            for site in 0..2 {
                assert!(spec.l_operator(&u, site).unwrap().conserves_charge(), "{:?}", spec.kind());
            }
        }
    }

    #[test]
    fn generalized_xxz_constraints() {
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        let (q, b) = (r(2, 5), r(-3, 7));
        let spec = ModelSpec::generalized_xxz_from_qbeta(q.clone(), b.clone()).unwrap();
        assert!(spec.validate().is_empty());
        let ones = ModelSpec::GeneralizedXxz {
            alpha: std::array::from_fn(|_| ExactRational::one()),
            q: q.clone(),
        };
        let v = ones.validate();
        assert!(v.iter().any(|s| s.starts_with("constraint 1")), "{v:?}");
        assert!(ModelSpec::Xxz { q }.validate().is_empty());
        // The qβ choice reproduces the qβ L-operator.
        let u = r(5, 3);
        let qb = ModelSpec::QBeta { q: r(2, 5), beta: b };
        assert_eq!(spec.l_operator(&u, 0).unwrap(), qb.l_operator(&u, 0).unwrap());
    }

    pub(crate) fn sample_specs() -> Vec<ModelSpec<ExactRational>> {
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        vec![
            ModelSpec::Xxz { q: r(2, 3) },
            ModelSpec::generalized_xxz_from_qbeta(r(2, 3), r(-5, 2)).unwrap(),
            ModelSpec::QBeta { q: r(2, 3), beta: r(-5, 2) },
            ModelSpec::FiveVertex { beta: r(-5, 2) },
            ModelSpec::SixVertexBeta { beta: r(4, 7) },
            ModelSpec::Felderhof { p: r(3, 2), q: r(-1, 5) },
            ModelSpec::InhomFelderhof { p: r(3, 2), q: vec![r(1, 3), r(-2, 7)], v: vec![r(5, 3), r(2, 1)] },
            ModelSpec::GeneralizedFelderhof { t: r(7, 5), alpha: vec![r(1, 2), r(3, 1)], gamma: vec![r(-4, 3), r(2, 5)] },
        ]
    }
}
