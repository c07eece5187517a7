//! Matrix-product form of the Felderhof wavefunction.
//!
//! D_n and C_n act on the 2^n-dimensional auxiliary space of n spectral
//! lines; site operators of the wavefunction are products of them. The new
//! auxiliary factor at each level is the outer (most significant) index.

use crate::algebra::{Field, SquareMatrix};
use crate::error::{cap_check, Error, Result};

use super::model::ModelSpec;
use super::state::check_positions;

pub const MPO_CAP: usize = 6;

#[derive(Clone)]
pub struct MpoChain<F: Field> {
    pub n: usize,
    pub spectral: Vec<F>,
    pub p: F,
    pub q: F,
    pub d: SquareMatrix<F>,
    pub c: SquareMatrix<F>,
    /// C_n^{(j)} in the original basis; they sum to C_n.
    pub c_parts: Vec<SquareMatrix<F>>,
    pub g: SquareMatrix<F>,
    pub g_inv: SquareMatrix<F>,
    /// H of the last level step; `None` at n = 1.
    pub h: Option<SquareMatrix<F>>,
    /// Diagonal image G^{-1} D G.
    pub script_d: SquareMatrix<F>,
    /// Images of the C_n^{(j)}.
    pub script_c: Vec<SquareMatrix<F>>,
}

/// Nonzero-entry counts of every relation the chain must satisfy.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MpoResiduals {
    pub diagonalization: usize,
    pub decomposition: usize,
    pub c_sum: usize,
    pub rel2: usize,
    pub rel3: usize,
    pub rel4: usize,
}

impl MpoResiduals {
    pub fn is_zero(&self) -> bool {
        *self == MpoResiduals::default()
    }
}

fn diag2<F: Field>(a: F, b: F) -> SquareMatrix<F> {
    SquareMatrix::diagonal(vec![a, b])
}

fn entry2<F: Field>(r: usize, c: usize, v: F) -> SquareMatrix<F> {
    let mut m = SquareMatrix::zeros(2);
    m.set(r, c, v);
    m
}

/// Inverse of a diagonal matrix.
fn diag_inverse<F: Field>(m: &SquareMatrix<F>) -> Result<SquareMatrix<F>> {
    let inv: Result<Vec<F>> = (0..m.dim()).map(|i| m.get(i, i).inv()).collect();
    Ok(SquareMatrix::diagonal(inv?))
}

impl<F: Field> MpoChain<F> {
    pub fn build(spec: &ModelSpec<F>, spectral: &[F]) -> Result<Self> {
        let ModelSpec::Felderhof { p, q } = spec else {
            return Err(Error::InvalidModel(format!(
                "matrix-product chain needs the Felderhof model, got {}",
                spec.kind()
            )));
        };
        let n = spectral.len();
        cap_check("chain level n", n, MPO_CAP)?;
        if n == 0 {
            return Err(Error::ShapeMismatch("chain level must be at least 1".into()));
        }
        let one = F::one;
        let pinv = p.inv()?;
        let pq = p.clone() * q;
        let q_p = q.clone() * &pinv;
        let p2 = p.clone() * p;
        let one_q2 = one() - q.clone() * q;

        let u = &spectral[0];
        let d = diag2(one() - pq.clone() * u, u.clone() - &q_p);
        let c = entry2(0, 1, one_q2.clone());
        let mut chain = MpoChain {
            n: 1,
            spectral: vec![u.clone()],
            p: p.clone(),
            q: q.clone(),
            d: d.clone(),
            c: c.clone(),
            c_parts: vec![c.clone()],
            g: SquareMatrix::identity(2),
            g_inv: SquareMatrix::identity(2),
            h: None,
            script_d: d,
            script_c: vec![c],
        };

        for u in &spectral[1..] {
            let k = chain.n;
            let a = one() - pq.clone() * u;
            let b = u.clone() - &q_p;
            let d_new = diag2(a.clone(), b.clone())
                .kron(&chain.d)
                .add(&entry2(1, 0, (one() - p2.clone()) * u).kron(&chain.c));
            let c_new = entry2(0, 1, one_q2.clone())
                .kron(&chain.d)
                .add(&diag2(-(p2.clone() * (one() - q_p.clone() * u)), u.clone() - &pq).kron(&chain.c));

            let sd_inv = diag_inverse(&chain.script_d)?;
            let mut hsum = SquareMatrix::zeros(1 << k);
            for (j, sc) in chain.script_c.iter().enumerate() {
                let uj = &chain.spectral[j];
                let coef = ((one() - p2.clone()) * u * (one() - pq.clone() * uj))
                    .checked_div(&(one_q2.clone() * (uj.clone() - u)))?;
                hsum = hsum.add(&sc.scale(&coef));
            }
            let h = sd_inv.mul(&hsum);
            let zero = SquareMatrix::zeros(1 << k);
            let g = SquareMatrix::block(&chain.g, &zero, &chain.g.mul(&h), &chain.g);
            let g_inv = SquareMatrix::block(
                &chain.g_inv,
                &zero,
                &h.mul(&chain.g_inv).scale(&-F::one()),
                &chain.g_inv,
            );
            let sd = SquareMatrix::block(&chain.script_d.scale(&a), &zero, &zero, &chain.script_d.scale(&b));
            let mut sc_new = Vec::with_capacity(k + 1);
            for (j, sc) in chain.script_c.iter().enumerate() {
                let uj = &chain.spectral[j];
                let den = uj.clone() - u;
                let top = ((u.clone() - p2.clone() * uj) * &a).checked_div(&den)?;
                let bottom = ((u.clone() - &q_p) * (p2.clone() * uj - u)).checked_div(&den)?;
                sc_new.push(SquareMatrix::block(&sc.scale(&top), &zero, &zero, &sc.scale(&bottom)));
            }
            sc_new.push(SquareMatrix::block(&zero, &chain.script_d.scale(&one_q2), &zero, &zero));
            let c_parts = sc_new.iter().map(|s| g.mul(s).mul(&g_inv)).collect();

            chain.spectral.push(u.clone());
            chain.n = k + 1;
            chain.d = d_new;
            chain.c = c_new;
            chain.c_parts = c_parts;
            chain.g = g;
            chain.g_inv = g_inv;
            chain.h = Some(h);
            chain.script_d = sd;
            chain.script_c = sc_new;
        }
        Ok(chain)
    }

    /// Counts of nonzero residual entries: G^{-1} D G against the diagonal
    /// image, the decomposition of C, and the exchange relations between
    /// the diagonal images.
    pub fn residuals(&self) -> Result<MpoResiduals> {
        let one = F::one;
        let (p, q) = (&self.p, &self.q);
        let pinv = p.inv()?;
        let q_p = q.clone() * &pinv;
        let pq = p.clone() * q;
        let mut res = MpoResiduals::default();

        let conj_d = self.g_inv.mul(&self.d).mul(&self.g);
        res.diagonalization = conj_d.count_differences(&self.script_d)
            + usize::from(!self.script_d.is_diagonal());
        let mut sum_sc = SquareMatrix::zeros(self.d.dim());
        let mut sum_raw = SquareMatrix::zeros(self.d.dim());
        for (sc, raw) in self.script_c.iter().zip(&self.c_parts) {
            sum_sc = sum_sc.add(sc);
            sum_raw = sum_raw.add(raw);
        }
        res.c_sum = self.g_inv.mul(&self.c).mul(&self.g).count_differences(&sum_sc);
        res.decomposition = self.c.count_differences(&sum_raw);

        for (j, scj) in self.script_c.iter().enumerate() {
            let uj = &self.spectral[j];
            let ratio = (uj.clone() - &q_p).checked_div(&(one() - pq.clone() * uj))?;
            let lhs = scj.mul(&self.script_d);
            let rhs = self.script_d.mul(scj).scale(&ratio);
            res.rel2 += lhs.count_differences(&rhs);
            res.rel3 += scj.mul(scj).entries().iter().filter(|e| !e.is_zero()).count();
            for (k, sck) in self.script_c.iter().enumerate() {
                if k == j {
                    continue;
                }
                let uk = &self.spectral[k];
                let coef = -((p.clone() * uj - q) * (one() - pq.clone() * uk))
                    .checked_div(&((p.clone() * uk - q) * (one() - pq.clone() * uj)))?;
                let lhs = scj.mul(sck);
                let rhs = sck.mul(scj).scale(&coef);
                res.rel4 += lhs.count_differences(&rhs);
            }
        }
        Ok(res)
    }

    /// ⟨0^n| D^{M-x_n} C D^{x_n - x_{n-1} - 1} C ⋯ C D^{x_1 - 1} |1^n⟩, the
    /// wavefunction with particles at `positions` on M sites.
    pub fn trace(&self, m: usize, positions: &[usize]) -> Result<F> {
        check_positions(m, positions)?;
        if positions.len() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "{} positions for a level-{} chain",
                positions.len(),
                self.n
            )));
        }
        let x = positions;
        let last = x[self.n - 1];
        let mut acc = self.d.pow((m - last) as u32);
        for i in (1..self.n).rev() {
            acc = acc.mul(&self.c).mul(&self.d.pow((x[i] - x[i - 1] - 1) as u32));
        }
        acc = acc.mul(&self.c).mul(&self.d.pow((x[0] - 1) as u32));
        Ok(acc.get(0, (1 << self.n) - 1).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn initial_level() {
        let (p, q, u) = (
            RationalFunction::var(Var::P),
            RationalFunction::var(Var::Q),
            RationalFunction::var(Var::u(1)),
        );
        let chain = MpoChain::build(&ModelSpec::Felderhof { p: p.clone(), q: q.clone() }, std::slice::from_ref(&u)).unwrap();
        let one = RationalFunction::one();
        assert_eq!(chain.d.get(0, 0), &(one.clone() - p.clone() * &q * &u));
        assert_eq!(chain.d.get(1, 1), &(u - q.clone() * p.inv().unwrap()));
        assert_eq!(chain.c.get(0, 1), &(one - q.clone() * &q));
        assert!(chain.c.get(1, 0).is_zero());
    }

    #[test]
    fn level_two_block_and_relations() {
        let spec = ModelSpec::Felderhof { p: r(3, 7), q: r(-2, 5) };
        let chain = MpoChain::build(&spec, &[r(1, 3), r(5, 2)]).unwrap();
        let level1 = MpoChain::build(&spec, &[r(1, 3)]).unwrap();
        let c2 = &chain.script_c[1];
        let one_q2 = ExactRational::one() - r(-2, 5) * r(-2, 5);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(c2.get(i, 2 + j), &(level1.script_d.get(i, j).clone() * &one_q2));
                assert!(c2.get(i, j).is_zero() && c2.get(2 + i, j).is_zero());
            }
        }
        // rel2 directly on the original-basis parts.
        let u1 = r(1, 3);
        let (p, q) = (r(3, 7), r(-2, 5));
        let ratio = (u1.clone() - q.clone() * p.recip().unwrap())
            .checked_div(&(ExactRational::one() - p * q * u1))
            .unwrap();
        let c1 = &chain.c_parts[0];
        assert!(c1.mul(&chain.d).sub(&chain.d.mul(c1).scale(&ratio)).is_zero());
        assert!(chain.residuals().unwrap().is_zero());
    }

    #[test]
    fn rejects_other_models() {
        let spec = ModelSpec::Xxz { q: r(1, 2) };
        assert!(matches!(MpoChain::build(&spec, &[r(1, 3)]), Err(Error::InvalidModel(_))));
    }
}
