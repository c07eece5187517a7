//! Monodromy operators on the 2^M-dimensional quantum space and the
//! partition functions obtained by contracting them.
//!
//! The monodromy is `T(u) = L_M(u) ⋯ L_1(u)`: site 1 is met first by the
//! auxiliary line. Its auxiliary blocks are A = ⟨0|T|0⟩, B = ⟨0|T|1⟩,
//! C = ⟨1|T|0⟩, D = ⟨1|T|1⟩, with B the creation operator.

use std::collections::BTreeMap;

use crate::algebra::Field;
use crate::error::{cap_check, Error, Result};

use super::model::{VertexModel, WeightMatrix};
use super::state::LatticeState;

pub const DEFAULT_SITE_CAP: usize = 10;
/// Site-cap overrides are clamped to this.
pub const HARD_SITE_CAP: usize = 14;

/// Sparse vector in the quantum space, keyed by basis index.
pub type StateVector<F> = BTreeMap<u64, F>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    A,
    B,
    C,
    D,
}

impl Element {
    /// (auxiliary state entering at site 1, auxiliary state leaving site M).
    fn aux(self) -> (usize, usize) {
        match self {
            Element::A => (0, 0),
            Element::B => (1, 0),
            Element::C => (0, 1),
            Element::D => (1, 1),
        }
    }

    /// Change in particle number.
    pub fn charge(self) -> i32 {
        match self {
            Element::A | Element::D => 0,
            Element::B => 1,
            Element::C => -1,
        }
    }
}

fn site_operators<F: Field>(
    model: &dyn VertexModel<F>,
    u: &F,
    m: usize,
) -> Result<Vec<WeightMatrix<F>>> {
    if let Some(n) = model.site_count() {
        if n != m {
            return Err(Error::ShapeMismatch(format!(
                "model defines {n} sites, lattice has {m}"
            )));
        }
    }
    (0..m).map(|j| model.l_operator(u, j)).collect()
}

fn apply_with<F: Field>(
    ls: &[WeightMatrix<F>],
    tag: Element,
    state: &StateVector<F>,
) -> StateVector<F> {
    let (ain, aout) = tag.aux();
    let mut out = StateVector::new();
    for (&basis, coef) in state {
        let mut cur: Vec<(usize, u64, F)> = vec![(ain, basis, coef.clone())];
        for (j, l) in ls.iter().enumerate() {
            let mut next: BTreeMap<(usize, u64), F> = BTreeMap::new();
            for (a, bs, c) in &cur {
                let b = ((bs >> j) & 1) as usize;
                for ao in 0..2 {
                    for bo in 0..2 {
                        let w = l.weight(ao, bo, *a, b);
                        if w.is_zero() {
                            continue;
                        }
                        let nb = (bs & !(1 << j)) | ((bo as u64) << j);
                        let v = c.clone() * w;
                        match next.entry((ao, nb)) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(v);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get().clone() + v;
                                *e.get_mut() = s;
                            }
                        }
                    }
                }
            }
            cur = next
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b), c)| (a, b, c))
                .collect();
        }
        for (a, b, c) in cur {
            if a == aout {
                let e = out.entry(b).or_insert_with(F::zero);
                *e = e.clone() + c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Applies one monodromy element to a state vector.
pub fn apply_element<F: Field>(
    model: &dyn VertexModel<F>,
    tag: Element,
    u: &F,
    m: usize,
    state: &StateVector<F>,
) -> Result<StateVector<F>> {
    cap_check("lattice length M", m, HARD_SITE_CAP)?;
    let ls = site_operators(model, u, m)?;
    Ok(apply_with(&ls, tag, state))
}

/// A sparse operator on the 2^M-dimensional quantum space.
#[derive(Clone, Debug, PartialEq)]
pub struct BigOperator<F> {
    m: usize,
    /// (in, out) → weight; no stored zeros.
    entries: BTreeMap<(u64, u64), F>,
}

impl<F: Field> BigOperator<F> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &BTreeMap<(u64, u64), F> {
        &self.entries
    }

    pub fn get(&self, input: LatticeState, output: LatticeState) -> F {
        self.entries
            .get(&(input.index(), output.index()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn apply(&self, state: &StateVector<F>) -> StateVector<F> {
        let mut out = StateVector::new();
        for (&(i, o), w) in &self.entries {
            if let Some(c) = state.get(&i) {
                let e = out.entry(o).or_insert_with(F::zero);
                *e = e.clone() + c.clone() * w;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// The full sparse matrix of A, B, C or D on M sites.
pub fn monodromy_element<F: Field>(
    model: &dyn VertexModel<F>,
    tag: Element,
    u: &F,
    m: usize,
    cap: usize,
) -> Result<BigOperator<F>> {
    cap_check("lattice length M", m, cap.min(HARD_SITE_CAP))?;
    let ls = site_operators(model, u, m)?;
    let mut entries = BTreeMap::new();
    for input in 0..1u64 << m {
        let mut st = StateVector::new();
        st.insert(input, F::one());
        for (out, w) in apply_with(&ls, tag, &st) {
            entries.insert((input, out), w);
        }
    }
    Ok(BigOperator { m, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveMode {
    /// ⟨x| B(u_N) ⋯ B(u_1) |Ω⟩: `spectral[0]` acts on the vacuum first.
    Particle,
    /// ⟨Ω| C(u_1) ⋯ C(u_N) |x⟩: `spectral[0]` is next to the vacuum bra.
    Dual,
    /// ⟨1⋯M| B(u_1) ⋯ B(u_N) |x̄⟩: the target lists hole positions and
    /// `spectral[0]` is next to the fully occupied bra.
    Hole,
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::ShapeMismatch(format!("{what}: got {got}, expected {want}")));
    }
    Ok(())
}

/// Wavefunction by direct contraction.
///
/// In particle and dual mode `target` holds N particles; in hole mode it
/// holds N holes (zeros).
pub fn wavefunction_bruteforce<F: Field>(
    model: &dyn VertexModel<F>,
    m: usize,
    n: usize,
    target: LatticeState,
    spectral: &[F],
    mode: WaveMode,
    cap: usize,
) -> Result<F> {
    cap_check("lattice length M", m, cap.min(HARD_SITE_CAP))?;
    check_len("spectral parameters", spectral.len(), n)?;
    check_len("target length", target.len(), m)?;
    if n > m {
        return Err(Error::ShapeMismatch(format!("N = {n} exceeds M = {m}")));
    }
    let count = match mode {
        WaveMode::Particle | WaveMode::Dual => target.particle_count(),
        WaveMode::Hole => m - target.particle_count(),
    };
    check_len("target particle/hole count", count, n)?;
    let mut st = StateVector::new();
    match mode {
        WaveMode::Particle => {
            st.insert(0, F::one());
            for u in spectral {
                st = apply_element(model, Element::B, u, m, &st)?;
            }
            Ok(st.remove(&target.index()).unwrap_or_else(F::zero))
        }
        WaveMode::Dual => {
            st.insert(target.index(), F::one());
            for u in spectral.iter().rev() {
                st = apply_element(model, Element::C, u, m, &st)?;
            }
            Ok(st.remove(&0).unwrap_or_else(F::zero))
        }
        WaveMode::Hole => {
            st.insert(target.index(), F::one());
            for u in spectral.iter().rev() {
                st = apply_element(model, Element::B, u, m, &st)?;
            }
            Ok(st
                .remove(&LatticeState::full(m).index())
                .unwrap_or_else(F::zero))
        }
    }
}

/// Domain wall boundary partition function on an M×M lattice,
/// M = `spectral.len()`, with `spectral[0]` acting first.
pub fn dwbp_bruteforce<F: Field>(
    model: &dyn VertexModel<F>,
    spectral: &[F],
    cap: usize,
) -> Result<F> {
    let m = spectral.len();
    wavefunction_bruteforce(
        model,
        m,
        m,
        LatticeState::full(m),
        spectral,
        WaveMode::Particle,
        cap,
    )
}

/// ⟨Ω| C(u_1) ⋯ C(u_N) B(v_N) ⋯ B(v_1) |Ω⟩, consistent with the dual and
/// particle wavefunction conventions so that completeness gives
/// Σ_x dual(u, x) · particle(v, x).
pub fn scalar_product_bruteforce<F: Field>(
    model: &dyn VertexModel<F>,
    m: usize,
    us: &[F],
    vs: &[F],
    cap: usize,
) -> Result<F> {
    cap_check("lattice length M", m, cap.min(HARD_SITE_CAP))?;
    check_len("number of u's vs v's", us.len(), vs.len())?;
    if us.len() > m {
        return Err(Error::ShapeMismatch(format!("N = {} exceeds M = {m}", us.len())));
    }
    let mut st = StateVector::new();
    st.insert(0, F::one());
    for v in vs {
        st = apply_element(model, Element::B, v, m, &st)?;
    }
    for u in us.iter().rev() {
        st = apply_element(model, Element::C, u, m, &st)?;
    }
    Ok(st.remove(&0).unwrap_or_else(F::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};
    use crate::lattice::model::ModelSpec;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn single_site_creation() {
        let u = r(3, 2);
        let fv = ModelSpec::FiveVertex { beta: r(2, 7) };
        let b = monodromy_element(&fv, Element::B, &u, 1, 10).unwrap();
        assert_eq!(b.entries().len(), 1);
        assert_eq!(b.entries()[&(0, 1)], ExactRational::one());
        let qb = ModelSpec::QBeta { q: r(1, 3), beta: r(2, 7) };
        let b = monodromy_element(&qb, Element::B, &u, 1, 10).unwrap();
        assert_eq!(b.entries()[&(0, 1)], r(2, 3));
    }

    #[test]
    fn vacuum_sector_of_a() {
        let u = r(-4, 3);
        for spec in crate::lattice::model::tests::sample_specs() {
            let m = 2;
            let a = monodromy_element(&spec, Element::A, &u, m, 10).unwrap();
            let l0 = spec.l_operator(&u, 0).unwrap();
            let l1 = spec.l_operator(&u, 1).unwrap();
            assert_eq!(a.entries()[&(0, 0)], l0.get(0, 0).clone() * l1.get(0, 0));
        }
    }

    #[test]
    fn grading_of_elements() {
        let u = r(5, 7);
        for spec in crate::lattice::model::tests::sample_specs() {
            for tag in [Element::A, Element::B, Element::C, Element::D] {
                let op = monodromy_element(&spec, tag, &u, 2, 10).unwrap();
                for &(i, o) in op.entries().keys() {
                    assert_eq!(o.count_ones() as i32 - i.count_ones() as i32, tag.charge());
                }
            }
        }
    }

    #[test]
    fn felderhof_small_amplitudes() {
        let (u1, p, q) = (
            RationalFunction::var(Var::u(1)),
            RationalFunction::var(Var::P),
            RationalFunction::var(Var::Q),
        );
        let spec = ModelSpec::Felderhof { p: p.clone(), q: q.clone() };
        let one = RationalFunction::one();
        let x = LatticeState::from_positions(2, &[2]).unwrap();
        let amp = wavefunction_bruteforce(&spec, 2, 1, x, std::slice::from_ref(&u1), WaveMode::Particle, 10).unwrap();
        let expected = (one.clone() - q.clone() * &q) * (u1.clone() - q.clone() * p.inv().unwrap());
        assert_eq!(amp, expected);
        let d1 = dwbp_bruteforce(&spec, std::slice::from_ref(&u1), 10).unwrap();
        assert_eq!(d1, one.clone() - q.clone() * &q);
        let u2 = RationalFunction::var(Var::u(2));
        let d2 = dwbp_bruteforce(&spec, &[u1.clone(), u2.clone()], 10).unwrap();
        let e = one - q.clone() * &q;
        assert_eq!(d2, e.clone() * &e * &e * (u2 - p.clone() * &p * &u1));
    }

    #[test]
    fn empty_products_and_errors() {
        let spec = ModelSpec::FiveVertex { beta: r(2, 7) };
        let amp = wavefunction_bruteforce(&spec, 3, 0, LatticeState::vacuum(3), &[], WaveMode::Particle, 10);
        assert_eq!(amp.unwrap(), ExactRational::one());
        assert_eq!(scalar_product_bruteforce(&spec, 3, &[], &[], 10).unwrap(), ExactRational::one());
        assert_eq!(
            scalar_product_bruteforce(&spec, 1, &[r(2, 3)], &[r(5, 2)], 10).unwrap(),
            ExactRational::one()
        );
        let bad = wavefunction_bruteforce(&spec, 3, 1, LatticeState::vacuum(3), &[r(1, 2)], WaveMode::Particle, 10);
        assert!(matches!(bad, Err(Error::ShapeMismatch(_))));
        let big = wavefunction_bruteforce(&spec, 11, 0, LatticeState::vacuum(11), &[], WaveMode::Particle, 10);
        assert!(matches!(big, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn completeness_of_scalar_product() {
        let spec = ModelSpec::FiveVertex { beta: r(-3, 5) };
        let (us, vs) = ([r(2, 3), r(-7, 2)], [r(5, 3), r(1, 7)]);
        for m in 2..=3 {
            let direct = scalar_product_bruteforce(&spec, m, &us, &vs, 10).unwrap();
            let mut sum = ExactRational::zero();
            for x in LatticeState::sector(m, 2) {
                let d = wavefunction_bruteforce(&spec, m, 2, x, &us, WaveMode::Dual, 10).unwrap();
                let p = wavefunction_bruteforce(&spec, m, 2, x, &vs, WaveMode::Particle, 10).unwrap();
                sum = sum + d * p;
            }
            assert_eq!(direct, sum);
        }
    }
}
