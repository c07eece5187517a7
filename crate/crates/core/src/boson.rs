//! The nonhermitian phase model on a truncated bosonic Fock space.
//!
//! Sites are labelled 0..M-1 and the monodromy is L_{M-1}(v) ⋯ L_0(v), so
//! site 0 meets the auxiliary line first. A local space keeps occupations
//! 0..=N; with N particles in total this truncation is exact.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Field, SquareMatrix};
use crate::error::{cap_check, Error, Result};
use crate::lattice::Element;
use crate::symfunc::{grothendieck, Pairing, YoungDiagram};

pub const BOSON_SITE_CAP: usize = 6;
pub const BOSON_PARTICLE_CAP: usize = 4;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockState {
    occupations: Vec<usize>,
}

impl FockState {
    pub fn new(occupations: Vec<usize>) -> Self {
        Self { occupations }
    }

    pub fn vacuum(m: usize) -> Self {
        Self::new(vec![0; m])
    }

    /// The state labelled by λ via λ = ((M-1)^{n_{M-1}}, …, 0^{n_0}).
    pub fn from_diagram(lambda: &YoungDiagram, m: usize) -> Result<Self> {
        Ok(Self::new(lambda.to_occupations(m)?))
    }

    pub fn occupations(&self) -> &[usize] {
        &self.occupations
    }

    pub fn sites(&self) -> usize {
        self.occupations.len()
    }

    pub fn particle_count(&self) -> usize {
        self.occupations.iter().sum()
    }

    pub fn diagram(&self) -> Result<YoungDiagram> {
        YoungDiagram::from_occupations(&self.occupations)
    }

    /// Every state with `n` particles on `m` sites.
    pub fn sector(m: usize, n: usize) -> Vec<FockState> {
        YoungDiagram::all_in_box(n, m.saturating_sub(1))
            .iter()
            .filter_map(|l| FockState::from_diagram(l, m).ok())
            .collect()
    }
}

impl fmt::Debug for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, n) in self.occupations.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ">")
    }
}

/// φ, φ†, the number operator and the vacuum projector π on occupations 0..=N.
pub struct PhaseOperators<F> {
    pub phi: SquareMatrix<F>,
    pub phi_dag: SquareMatrix<F>,
    pub number: SquareMatrix<F>,
    pub pi: SquareMatrix<F>,
}

/// Residuals of [φ, φ†] = π, [N, φ] = -φ, [N, φ†] = φ†, restricted to
/// columns with occupation ≤ N-1 (the top level has no room for φ†).
pub struct PhaseResiduals<F> {
    pub phi_phi_dag: SquareMatrix<F>,
    pub number_phi: SquareMatrix<F>,
    pub number_phi_dag: SquareMatrix<F>,
}

impl<F: Field> PhaseResiduals<F> {
    pub fn is_zero(&self) -> bool {
        self.phi_phi_dag.is_zero() && self.number_phi.is_zero() && self.number_phi_dag.is_zero()
    }
}

impl<F: Field> PhaseOperators<F> {
    pub fn new(truncation: usize) -> Self {
        let d = truncation + 1;
        let delta = |b: bool| if b { F::one() } else { F::zero() };
        Self {
            phi: SquareMatrix::from_fn(d, |r, c| delta(c == r + 1)),
            phi_dag: SquareMatrix::from_fn(d, |r, c| delta(r == c + 1)),
            number: SquareMatrix::from_fn(d, |r, c| {
                if r == c {
                    F::from_i64(r as i64)
                } else {
                    F::zero()
                }
            }),
            pi: SquareMatrix::from_fn(d, |r, c| delta(r == 0 && c == 0)),
        }
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn residuals(&self) -> PhaseResiduals<F> {
        let comm = |a: &SquareMatrix<F>, b: &SquareMatrix<F>| a.mul(b).sub(&b.mul(a));
        let top = self.dim() - 1;
        let below_top = |m: SquareMatrix<F>| {
            SquareMatrix::from_fn(m.dim(), |r, c| {
                if c < top {
                    m.get(r, c).clone()
                } else {
                    F::zero()
                }
            })
        };
        PhaseResiduals {
            phi_phi_dag: below_top(comm(&self.phi, &self.phi_dag).sub(&self.pi)),
            number_phi: below_top(comm(&self.number, &self.phi).add(&self.phi)),
            number_phi_dag: below_top(comm(&self.number, &self.phi_dag).sub(&self.phi_dag)),
        }
    }
}

/// L(v) = [[v^{-1} - βvπ, φ†], [φ, v]] on C² ⊗ C^{N+1}; index aux·(N+1) + n,
/// entries stored as (out, in).
pub fn boson_l_operator<F: Field>(v: &F, beta: &F, truncation: usize) -> Result<SquareMatrix<F>> {
    if truncation == 0 {
        return Err(Error::ShapeMismatch("truncation must be at least 1".into()));
    }
    let ops = PhaseOperators::<F>::new(truncation);
    let d = ops.dim();
    let vi = v.inv()?;
    let a = SquareMatrix::identity(d)
        .scale(&vi)
        .sub(&ops.pi.scale(&(beta.clone() * v)));
    let dd = SquareMatrix::identity(d).scale(v);
    Ok(SquareMatrix::block(&a, &ops.phi_dag, &ops.phi, &dd))
}

type FockVector<F> = BTreeMap<Vec<usize>, F>;

fn check_caps(m: usize, n: usize) -> Result<()> {
    cap_check("boson sites M", m, BOSON_SITE_CAP)?;
    cap_check("boson particles N", n, BOSON_PARTICLE_CAP)
}

/// Applies one monodromy element to a Fock vector, contracting site by site.
pub fn apply_boson_element<F: Field>(
    tag: Element,
    v: &F,
    beta: &F,
    truncation: usize,
    state: &FockVector<F>,
) -> Result<FockVector<F>> {
    let l = boson_l_operator(v, beta, truncation)?;
    let d = truncation + 1;
    let (aux_in, aux_out) = match tag {
        Element::A => (0, 0),
        Element::B => (1, 0),
        Element::C => (0, 1),
        Element::D => (1, 1),
    };
    let mut out = FockVector::new();
    for (occ, coeff) in state {
        // Partial contractions: (aux, occupations so far) -> weight.
        let mut partial: Vec<(usize, Vec<usize>, F)> = vec![(aux_in, Vec::new(), coeff.clone())];
        for &n_in in occ {
            if n_in >= d {
                return Err(Error::ShapeMismatch(format!("occupation {n_in} above truncation {truncation}")));
            }
            let mut next = Vec::new();
            for (a, prefix, w) in &partial {
                for a_out in 0..2 {
                    for n_out in 0..d {
                        let e = l.get(a_out * d + n_out, a * d + n_in);
                        if e.is_zero() {
                            continue;
                        }
                        let mut p = prefix.clone();
                        p.push(n_out);
                        next.push((a_out, p, w.clone() * e));
                    }
                }
            }
            partial = next;
        }
        for (a, occ_out, w) in partial {
            if a != aux_out {
                continue;
            }
            let slot = out.entry(occ_out).or_insert_with(F::zero);
            *slot = slot.clone() + w;
        }
    }
    out.retain(|_, w| !w.is_zero());
    Ok(out)
}

fn check_target(m: usize, target: &FockState, n: usize) -> Result<()> {
    if target.sites() != m {
        return Err(Error::ShapeMismatch(format!("target has {} sites, expected {m}", target.sites())));
    }
    if target.particle_count() != n {
        return Err(Error::ShapeMismatch(format!(
            "target holds {} particles, expected {n}",
            target.particle_count()
        )));
    }
    Ok(())
}

/// ⟨{n}| B(v_N) ⋯ B(v_1) |Ω⟩ by contraction (the B's commute).
pub fn boson_wavefunction<F: Field>(m: usize, target: &FockState, vs: &[F], beta: &F) -> Result<F> {
    let n = vs.len();
    check_caps(m, n)?;
    check_target(m, target, n)?;
    let mut st = FockVector::new();
    st.insert(vec![0; m], F::one());
    for v in vs {
        st = apply_boson_element(Element::B, v, beta, n.max(1), &st)?;
    }
    Ok(st.remove(target.occupations()).unwrap_or_else(F::zero))
}

/// ⟨Ω| C(v_1) ⋯ C(v_N) |{n}⟩ by contraction.
pub fn boson_dual_wavefunction<F: Field>(m: usize, target: &FockState, vs: &[F], beta: &F) -> Result<F> {
    let n = vs.len();
    check_caps(m, n)?;
    check_target(m, target, n)?;
    let mut st = FockVector::new();
    st.insert(target.occupations().to_vec(), F::one());
    for v in vs.iter().rev() {
        st = apply_boson_element(Element::C, v, beta, n.max(1), &st)?;
    }
    Ok(st.remove(&vec![0; m]).unwrap_or_else(F::zero))
}

/// ∏_j (v_j^{-1} - βv_j)^{M-1} G_λ(z; β) with z_j = 1/(v_j^{-2} - β); the
/// bra pairing uses λ^∨_j = M - 1 - λ_{N+1-j}.
pub fn boson_closed_form<F: Field>(
    m: usize,
    target: &FockState,
    vs: &[F],
    beta: &F,
    pairing: Pairing,
) -> Result<F> {
    check_target(m, target, vs.len())?;
    let lam = target.diagram()?;
    let lam = match pairing {
        Pairing::Ket => lam,
        Pairing::Bra => lam.complement(m.saturating_sub(1))?,
    };
    let mut pre = F::one();
    let mut z = Vec::with_capacity(vs.len());
    for v in vs {
        let vi = v.inv()?;
        pre = pre * (vi.clone() - beta.clone() * v).powi(m as i32 - 1)?;
        let d = vi.clone() * &vi - beta;
        if d.is_zero() {
            return Err(Error::SingularPoint("v^-2 - beta".into()));
        }
        z.push(d.inv()?);
    }
    Ok(pre * grothendieck(&lam, &z, beta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn phase_algebra_away_from_ceiling() {
        for n in 1..=4 {
            assert!(PhaseOperators::<ExactRational>::new(n).residuals().is_zero());
        }
        // At the ceiling [φ, φ†] = π fails, which is why it is excluded.
        let ops = PhaseOperators::<ExactRational>::new(2);
        let c = ops.phi.mul(&ops.phi_dag).sub(&ops.phi_dag.mul(&ops.phi)).sub(&ops.pi);
        assert!(!c.is_zero());
    }

    #[test]
    fn l_operator_entries() {
        let (v, b) = (RationalFunction::var(Var::v(1)), RationalFunction::var(Var::BETA));
        let l = boson_l_operator(&v, &b, 2).unwrap();
        let vi = v.recip().unwrap();
        assert_eq!(l.get(0, 0), &(vi.clone() - b.clone() * &v));
        assert_eq!(l.get(1, 1), &vi);
        // φ: aux 0 -> 1, |1> -> |0>; nothing from |0>.
        assert_eq!(l.get(3, 1), &RationalFunction::one());
        assert!(l.get(3, 0).is_zero() && l.get(4, 0).is_zero() && l.get(5, 0).is_zero());
    }

    #[test]
    fn single_site_and_empty() {
        let b = r(2, 3);
        let vs = [r(1, 2), r(-3, 5)];
        let t = FockState::new(vec![2]);
        assert_eq!(boson_wavefunction(1, &t, &vs, &b).unwrap(), ExactRational::one());
        assert_eq!(
            boson_wavefunction(3, &FockState::vacuum(3), &[], &b).unwrap(),
            ExactRational::one()
        );
        assert_eq!(
            boson_dual_wavefunction(3, &FockState::vacuum(3), &[], &b).unwrap(),
            ExactRational::one()
        );
    }

    #[test]
    fn grothendieck_correspondence_small() {
        let b = r(-4, 7);
        let vs = [r(1, 2), r(-3, 5), r(7, 3)];
        for m in 1..=4 {
            for n in 0..=3 {
                for t in FockState::sector(m, n) {
                    for pairing in [Pairing::Ket, Pairing::Bra] {
                        let lhs = match pairing {
                            Pairing::Ket => boson_wavefunction(m, &t, &vs[..n], &b),
                            Pairing::Bra => boson_dual_wavefunction(m, &t, &vs[..n], &b),
                        }
                        .unwrap();
                        let rhs = boson_closed_form(m, &t, &vs[..n], &b, pairing).unwrap();
                        assert_eq!(lhs, rhs, "{t:?} {pairing:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn caps_and_shapes() {
        let b = r(1, 2);
        assert!(matches!(
            boson_wavefunction(7, &FockState::vacuum(7), &[], &b),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            boson_wavefunction(2, &FockState::new(vec![1, 1]), &[r(1, 3)], &b),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
