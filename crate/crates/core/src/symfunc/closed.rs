//! Closed forms of wavefunctions, partition functions and scalar products,
//! together with the bilinear (Cauchy-type) identities they imply.

use crate::algebra::{permutation_sum, Field, SquareMatrix};
use crate::error::{Error, Result};
use crate::lattice::state::check_positions;

use super::diagram::YoungDiagram;
use super::polys::{gen_factorial_schur, gen_symplectic_schur, grothendieck, schur, ParameterSets};

fn product<F: Field>(items: impl IntoIterator<Item = Result<F>>) -> Result<F> {
    let mut acc = F::one();
    for x in items {
        acc = acc * x?;
    }
    Ok(acc)
}

/// ∏_{j<k} f(j, k) over 0-based indices in `lo..hi`.
fn pair_product<F: Field>(
    lo: usize,
    hi: usize,
    mut f: impl FnMut(usize, usize) -> Result<F>,
) -> Result<F> {
    let mut acc = F::one();
    for j in lo..hi {
        for k in j + 1..hi {
            acc = acc * f(j, k)?;
        }
    }
    Ok(acc)
}

fn det<F: Field>(n: usize, entry: impl FnMut(usize, usize) -> Result<F>) -> Result<F> {
    if n == 0 {
        return Ok(F::one());
    }
    SquareMatrix::try_from_fn(n, entry)?.det()
}

fn check_sizes(m: usize, x: &[usize], spectral_len: usize) -> Result<()> {
    check_positions(m, x)?;
    if x.len() != spectral_len {
        return Err(Error::ShapeMismatch(format!(
            "{} positions but {} spectral parameters",
            x.len(),
            spectral_len
        )));
    }
    Ok(())
}

/// The qβ wavefunction as a sum over S_N:
///
/// ∏_j (1-q)(u_j + qβ/u_j)^M / (-u_j/β - 1/u_j) · ∏_{j<k} (q - u_k²/u_j²)/(1 - u_k²/u_j²)
/// · Σ_σ ∏_{j<k, σ(j)>σ(k)} (1 - q u_σj²/u_σk²)/(q - u_σj²/u_σk²)
///   · ∏_j ((-u_σj/β - 1/u_σj)/(u_σj + qβ/u_σj))^{x_j}.
pub fn qbeta_closed_form<F: Field>(m: usize, x: &[usize], u: &[F], q: &F, beta: &F) -> Result<F> {
    check_sizes(m, x, u.len())?;
    let n = u.len();
    let one = F::one;
    let bi = beta.inv()?;
    let a: Vec<F> = u
        .iter()
        .map(|uj| Ok(uj.clone() + q.clone() * beta * &uj.inv()?))
        .collect::<Result<_>>()?;
    let d: Vec<F> = u
        .iter()
        .map(|uj| Ok(-(bi.clone() * uj) - uj.inv()?))
        .collect::<Result<_>>()?;
    let sq: Vec<F> = u.iter().map(|uj| uj.clone() * uj).collect();
    let pre = product((0..n).map(|j| {
        ((one() - q) * a[j].powi(m as i32)?).checked_div(&d[j])
    }))?;
    let pre = pre
        * pair_product(0, n, |j, k| {
            let r = sq[k].checked_div(&sq[j])?;
            (q.clone() - &r).checked_div(&(one() - r))
        })?;
    let ratio: Vec<F> = (0..n)
        .map(|j| d[j].checked_div(&a[j]))
        .collect::<Result<_>>()?;
    let sum = permutation_sum(n, crate::algebra::perm::DEFAULT_FACTORIAL_CAP, false, |s| {
        let mut t = F::one();
        for j in 0..n {
            for k in j + 1..n {
                if s[j] > s[k] {
                    let r = sq[s[j]].checked_div(&sq[s[k]])?;
                    t = t * (one() - q.clone() * &r).checked_div(&(q.clone() - r))?;
                }
            }
            t = t * ratio[s[j]].powi(x[j] as i32)?;
        }
        Ok(t)
    })?;
    Ok(pre * sum)
}

/// Which pairing a five-vertex closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// ⟨x|ψ(u)⟩ with λ from the positions.
    Ket,
    /// ⟨ψ(u)|x⟩ with the complementary diagram λ^∨_j = M - N + j - x_j.
    Bra,
}

/// (-1/β)^{N(N-1)/2} ∏_j u_j^{M-1} G_λ(z; β) with z_j = -1/β - u_j^{-2}.
pub fn five_vertex_closed_form<F: Field>(
    m: usize,
    x: &[usize],
    u: &[F],
    beta: &F,
    pairing: Pairing,
) -> Result<F> {
    check_sizes(m, x, u.len())?;
    let n = u.len();
    let lam = YoungDiagram::from_positions(x, m)?;
    let lam = match pairing {
        Pairing::Ket => lam,
        Pairing::Bra => lam.complement(m - n)?,
    };
    let bi = beta.inv()?;
    let z: Vec<F> = u
        .iter()
        .map(|uj| Ok(-bi.clone() - uj.powi(-2)?))
        .collect::<Result<_>>()?;
    let sign = (-bi).powi((n * n.saturating_sub(1) / 2) as i32)?;
    let pre = sign * product(u.iter().map(|uj| uj.powi(m as i32 - 1)))?;
    Ok(pre * grothendieck(&lam, &z, beta)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FelderhofMode {
    /// `x` lists particle positions.
    Particle,
    /// `x` lists hole positions.
    Hole,
}

/// Determinant forms of the Felderhof wavefunction.
///
/// Particle: ∏_j (1-q²)(1-pqu_j)^{M-1} ∏_{j<k} (u_k - p²u_j)/(u_k - u_j)
/// · det[((u_j - q/p)/(1 - pqu_j))^{x_k - 1}].
///
/// Hole: ∏_j (1-q²)(-p²(1 - qu_j/p))^{M-1} ∏_{j<k} (p²u_k - u_j)/(p²(u_k - u_j))
/// · det[((u_j - pq)/(-p²(1 - qu_j/p)))^{x̄_k - 1}].
pub fn felderhof_closed_form<F: Field>(
    m: usize,
    x: &[usize],
    u: &[F],
    p: &F,
    q: &F,
    mode: FelderhofMode,
) -> Result<F> {
    check_sizes(m, x, u.len())?;
    let n = u.len();
    let one = F::one;
    let pinv = p.inv()?;
    let pq = p.clone() * q;
    let q_p = q.clone() * &pinv;
    let p2 = p.clone() * p;
    let one_q2 = one() - q.clone() * q;
    match mode {
        FelderhofMode::Particle => {
            let pre = product(u.iter().map(|uj| {
                Ok(one_q2.clone() * (one() - pq.clone() * uj).powi(m as i32 - 1)?)
            }))? * pair_product(0, n, |j, k| {
                (u[k].clone() - p2.clone() * &u[j]).checked_div(&(u[k].clone() - &u[j]))
            })?;
            let base: Vec<F> = u
                .iter()
                .map(|uj| (uj.clone() - &q_p).checked_div(&(one() - pq.clone() * uj)))
                .collect::<Result<_>>()?;
            Ok(pre * det(n, |j, k| base[j].powi(x[k] as i32 - 1))?)
        }
        FelderhofMode::Hole => {
            let b: Vec<F> = u
                .iter()
                .map(|uj| -(p2.clone() * (one() - q_p.clone() * uj)))
                .collect();
            let pre = product(b.iter().map(|bj| Ok(one_q2.clone() * bj.powi(m as i32 - 1)?)))?
                * pair_product(0, n, |j, k| {
                    (p2.clone() * &u[k] - &u[j]).checked_div(&(p2.clone() * (u[k].clone() - &u[j])))
                })?;
            let base: Vec<F> = (0..n)
                .map(|j| (u[j].clone() - &pq).checked_div(&b[j]))
                .collect::<Result<_>>()?;
            Ok(pre * det(n, |j, k| base[j].powi(x[k] as i32 - 1))?)
        }
    }
}

/// Overlap with the packed configuration x_j = M - N + j (all sites filled
/// when M = N): (1-q²)^{N(N+1)/2} ∏_j (u_j - q/p)^{M-N} ∏_{j<k} (u_k - p²u_j).
pub fn felderhof_step_overlap<F: Field>(m: usize, u: &[F], p: &F, q: &F) -> Result<F> {
    let n = u.len();
    if n > m {
        return Err(Error::ShapeMismatch(format!("N = {n} exceeds M = {m}")));
    }
    let q_p = q.checked_div(p)?;
    let p2 = p.clone() * p;
    let e = (F::one() - q.clone() * q).powi((n * (n + 1) / 2) as i32)?;
    Ok(e * product(u.iter().map(|uj| (uj.clone() - &q_p).powi((m - n) as i32)))?
        * pair_product(0, n, |j, k| Ok(u[k].clone() - p2.clone() * &u[j]))?)
}

/// ∏_j (1 - q_j²)/v_j^{M-1} ∏_{j<k} (v_k - q_j q_k v_j)(u_k - p² u_j).
pub fn ik_determinant<F: Field>(u: &[F], q: &[F], v: &[F], p: &F) -> Result<F> {
    let m = u.len();
    if q.len() != m || v.len() != m {
        return Err(Error::ShapeMismatch(format!(
            "{} spectral parameters, {} q_j, {} v_j",
            m,
            q.len(),
            v.len()
        )));
    }
    let p2 = p.clone() * p;
    let pre = product((0..m).map(|j| {
        (F::one() - q[j].clone() * &q[j]).checked_div(&v[j].powi(m as i32 - 1)?)
    }))?;
    Ok(pre
        * pair_product(0, m, |j, k| {
            Ok((v[k].clone() - q[j].clone() * &q[k] * &v[j]) * (u[k].clone() - p2.clone() * &u[j]))
        })?)
}

/// The two readings of the second numerator term of the scalar-product matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementReading {
    /// (-β u_j - u_j^{-1})^M as printed.
    Printed,
    /// (-β^{-1} u_j - u_j^{-1})^M, matching the five-vertex weight.
    InverseBeta,
}

impl ElementReading {
    pub const ALL: [ElementReading; 2] = [ElementReading::Printed, ElementReading::InverseBeta];

    pub fn name(self) -> &'static str {
        match self {
            ElementReading::Printed => "printed",
            ElementReading::InverseBeta => "inverse-beta",
        }
    }
}

/// ∏_{j<k} 1/((u_j² - u_k²)(v_k² - v_j²)) · det Q, with
/// Q_jk = (u_j^M (-v_k/β - 1/v_k)^M v_k^{2(N-1)} - v_k^M c_j^M u_j^{2(N-1)}) / (v_k/u_j - u_j/v_k).
pub fn scalar_product_determinant<F: Field>(
    m: usize,
    us: &[F],
    vs: &[F],
    beta: &F,
    reading: ElementReading,
) -> Result<F> {
    let n = us.len();
    if vs.len() != n || n > m {
        return Err(Error::ShapeMismatch(format!(
            "{} u's, {} v's on {} sites",
            n,
            vs.len(),
            m
        )));
    }
    let bi = beta.inv()?;
    let mi = m as i32;
    let e2 = 2 * (n as i32 - 1);
    let pre = pair_product(0, n, |j, k| {
        let d = (us[j].clone() * &us[j] - us[k].clone() * &us[k])
            * (vs[k].clone() * &vs[k] - vs[j].clone() * &vs[j]);
        if d.is_zero() {
            return Err(Error::SingularPoint(format!("u or v collision at ({}, {})", j + 1, k + 1)));
        }
        d.inv()
    })?;
    let q = det(n, |j, k| {
        let (u, v) = (&us[j], &vs[k]);
        let bv = -(bi.clone() * v) - v.inv()?;
        let cu = match reading {
            ElementReading::Printed => -(beta.clone() * u) - u.inv()?,
            ElementReading::InverseBeta => -(bi.clone() * u) - u.inv()?,
        };
        let num = u.powi(mi)? * bv.powi(mi)? * v.powi(e2)? - v.powi(mi)? * cu.powi(mi)? * u.powi(e2)?;
        let den = v.checked_div(u)? - u.checked_div(v)?;
        if den.is_zero() {
            return Err(Error::SingularPoint(format!("v{} / u{} - u{} / v{}", k + 1, j + 1, j + 1, k + 1)));
        }
        num.checked_div(&den)
    })?;
    Ok(pre * q)
}

/// Σ_{λ ⊆ L^N} G_λ(z; β) G_{λ^∨}(w; β) with λ^∨_j = L - λ_{N+1-j}.
pub fn cauchy_lhs<F: Field>(l: usize, z: &[F], w: &[F], beta: &F) -> Result<F> {
    let n = z.len();
    let mut acc = F::zero();
    for lam in YoungDiagram::all_in_box(n, l) {
        acc = acc + grothendieck(&lam, z, beta)? * grothendieck(&lam.complement(l)?, w, beta)?;
    }
    Ok(acc)
}

/// ∏_{j<k} 1/((z_j - z_k)(w_k - w_j)) · det[(z_j^{L+N}(1+βw_k)^{N-1} - w_k^{L+N}(1+βz_j)^{N-1}) / (z_j - w_k)].
pub fn cauchy_rhs<F: Field>(l: usize, z: &[F], w: &[F], beta: &F) -> Result<F> {
    let n = z.len();
    if w.len() != n {
        return Err(Error::ShapeMismatch(format!("{} z's but {} w's", n, w.len())));
    }
    let e = (l + n) as i32;
    let pre = pair_product(0, n, |j, k| {
        let d = (z[j].clone() - &z[k]) * (w[k].clone() - &w[j]);
        if d.is_zero() {
            return Err(Error::SingularPoint(format!("z or w collision at ({}, {})", j + 1, k + 1)));
        }
        d.inv()
    })?;
    let nm1 = n as i32 - 1;
    let m = det(n, |j, k| {
        let num = z[j].powi(e)? * (F::one() + beta.clone() * &w[k]).powi(nm1)?
            - w[k].powi(e)? * (F::one() + beta.clone() * &z[j]).powi(nm1)?;
        let den = z[j].clone() - &w[k];
        if den.is_zero() {
            return Err(Error::SingularPoint(format!("z{} - w{}", j + 1, k + 1)));
        }
        num.exact_quotient(&den)
    })?;
    Ok(pre * m)
}

/// Variables of the Schur-function forms of the Felderhof wavefunctions.
pub struct FelderhofVariables<'a, F> {
    pub p: &'a F,
    pub q: &'a F,
}

impl<F: Field> FelderhofVariables<'_, F> {
    /// w = (u - q/p)/(1 - pqu).
    pub fn w(&self, u: &F) -> Result<F> {
        let q_p = self.q.checked_div(self.p)?;
        (u.clone() - q_p).checked_div(&(F::one() - self.p.clone() * self.q * u))
    }

    /// z = (u - pq)/(1 - qu/p).
    pub fn z(&self, u: &F) -> Result<F> {
        let q_p = self.q.checked_div(self.p)?;
        (u.clone() - self.p.clone() * self.q).checked_div(&(F::one() - q_p * u))
    }

    fn p2(&self) -> F {
        self.p.clone() * self.p
    }

    /// [p²q(p²-1)w_j w_k + p(p²-q²)w_k + p(p²q²-1)w_j + q(p²-1)] / (p(q²-1)).
    pub fn w_factor(&self, wj: &F, wk: &F) -> Result<F> {
        let (p, q) = (self.p, self.q);
        let one = F::one;
        let p2 = self.p2();
        let q2 = q.clone() * q;
        let num = p2.clone() * q * (p2.clone() - one()) * wj * wk
            + p.clone() * (p2.clone() - &q2) * wk
            + p.clone() * (p2.clone() * &q2 - one()) * wj
            + q.clone() * (p2 - one());
        num.checked_div(&(p.clone() * (q2 - one())))
    }

    /// q(1-p²)z_j z_k + p(q²-p²)z_k + p(1-p²q²)z_j + p²q(1-p²), without denominator.
    fn z_factor_num(&self, zj: &F, zk: &F) -> F {
        let (p, q) = (self.p, self.q);
        let one = F::one;
        let p2 = self.p2();
        let q2 = q.clone() * q;
        q.clone() * (one() - &p2) * zj * zk
            + p.clone() * (q2.clone() - &p2) * zk
            + p.clone() * (one() - p2.clone() * &q2) * zj
            + p2.clone() * q * (one() - p2)
    }

    /// Particle wavefunction in Schur form, for the operator order
    /// B(u_1) ⋯ B(u_N)|Ω⟩ with B(u_N) acting first:
    /// ∏_j (1-q²)^M/(1+pqw_j)^{M-1} ∏_{j<k} w_factor(w_j, w_k) · s_λ(w).
    pub fn particle_form(&self, m: usize, x: &[usize], u: &[F]) -> Result<F> {
        check_sizes(m, x, u.len())?;
        let n = u.len();
        let w: Vec<F> = u.iter().map(|uj| self.w(uj)).collect::<Result<_>>()?;
        let pq = self.p.clone() * self.q;
        let one_q2 = F::one() - self.q.clone() * self.q;
        let pre = product(w.iter().map(|wj| {
            one_q2
                .powi(m as i32)?
                .checked_div(&(F::one() + pq.clone() * wj).powi(m as i32 - 1)?)
        }))? * pair_product(0, n, |j, k| self.w_factor(&w[j], &w[k]))?;
        Ok(pre * schur(&YoungDiagram::from_positions(x, m)?, &w)?)
    }

    /// Hole wavefunction ⟨1⋯M|B(u_1) ⋯ B(u_N)|x̄⟩ in Schur form:
    /// ∏_j (-p²)^{M-1}(1-q²)^M/(1+qz_j/p)^{M-1} ∏_{j<k} z_factor/(-p⁵(q²-1)) · s_λ̄(z/(-p²)).
    pub fn hole_form(&self, m: usize, holes: &[usize], u: &[F]) -> Result<F> {
        check_sizes(m, holes, u.len())?;
        let n = u.len();
        let z: Vec<F> = u.iter().map(|uj| self.z(uj)).collect::<Result<_>>()?;
        let q_p = self.q.checked_div(self.p)?;
        let minus_p2 = -self.p2();
        let q2 = self.q.clone() * self.q;
        let one_q2 = F::one() - &q2;
        let pre = product(z.iter().map(|zj| {
            (minus_p2.powi(m as i32 - 1)? * one_q2.powi(m as i32)?)
                .checked_div(&(F::one() + q_p.clone() * zj).powi(m as i32 - 1)?)
        }))?;
        let den = -(self.p.powi(5)? * (q2 - F::one()));
        let pre = pre
            * pair_product(0, n, |j, k| self.z_factor_num(&z[j], &z[k]).checked_div(&den))?;
        let scaled: Vec<F> = z
            .iter()
            .map(|zj| zj.checked_div(&minus_p2))
            .collect::<Result<_>>()?;
        Ok(pre * schur(&YoungDiagram::from_positions(holes, m)?, &scaled)?)
    }

    /// The domain wall partition function in product form (all M lines).
    pub fn comparison_one(&self, u: &[F]) -> Result<F> {
        let m = u.len();
        let all: Vec<usize> = (1..=m).collect();
        self.particle_form(m, &all, u)
    }

    /// Σ_x hole_form(u_1..u_{M-N}; x̄) · particle_form(u_{M-N+1}..u_M; x).
    pub fn comparison_two(&self, u: &[F], n: usize) -> Result<F> {
        let m = u.len();
        let (holes_u, part_u) = u.split_at(m - n);
        let mut acc = F::zero();
        for state in crate::lattice::LatticeState::sector(m, n) {
            acc = acc
                + self.hole_form(m, &state.holes(), holes_u)?
                    * self.particle_form(m, &state.positions(), part_u)?;
        }
        Ok(acc)
    }

    /// Σ_{λ ⊆ (M-N)^N} s_λ̄(z/(-p²)) s_λ(w̄), z from u_1..u_{M-N}, w̄ from u_{M-N+1}..u_M.
    pub fn dual_cauchy_lhs(&self, u: &[F], n: usize) -> Result<F> {
        let m = u.len();
        let minus_p2 = -self.p2();
        let z: Vec<F> = u[..m - n]
            .iter()
            .map(|uj| self.z(uj)?.checked_div(&minus_p2))
            .collect::<Result<_>>()?;
        let w: Vec<F> = u[m - n..].iter().map(|uj| self.w(uj)).collect::<Result<_>>()?;
        let mut acc = F::zero();
        for state in crate::lattice::LatticeState::sector(m, n) {
            let lam = YoungDiagram::from_positions(&state.positions(), m)?;
            let lam_bar = YoungDiagram::from_positions(&state.holes(), m)?;
            acc = acc + schur(&lam_bar, &z)? * schur(&lam, &w)?;
        }
        Ok(acc)
    }

    /// (-p²)^{(N-M)N} ∏_{j ≤ M-N} ((1 + qz_j/p)/(1 + pqw_j))^{M-1} · A/(BC).
    pub fn dual_cauchy_rhs(&self, u: &[F], n: usize) -> Result<F> {
        let m = u.len();
        let h = m - n;
        let w: Vec<F> = u.iter().map(|uj| self.w(uj)).collect::<Result<_>>()?;
        let z: Vec<F> = u.iter().map(|uj| self.z(uj)).collect::<Result<_>>()?;
        let q_p = self.q.checked_div(self.p)?;
        let pq = self.p.clone() * self.q;
        let q2 = self.q.clone() * self.q;
        let pre = (-self.p2()).powi((n as i32 - m as i32) * n as i32)?
            * product((0..h).map(|j| {
                (F::one() + q_p.clone() * &z[j])
                    .checked_div(&(F::one() + pq.clone() * &w[j]))?
                    .powi(m as i32 - 1)
            }))?;
        let a = pair_product(0, m, |j, k| self.w_factor(&w[j], &w[k]))?;
        let b = pair_product(h, m, |j, k| self.w_factor(&w[j], &w[k]))?;
        let cden = -(self.p.clone() * (q2 - F::one()));
        let c = pair_product(0, h, |j, k| self.z_factor_num(&z[j], &z[k]).checked_div(&cden))?;
        pre.checked_div(&(b * c))
            .map(|r| r * a)
    }
}

/// Σ_x s_λ̄(u_1..u_{M-N} / t) s_λ(u_{M-N+1}..u_M).
pub fn classical_dual_cauchy_lhs<F: Field>(u: &[F], n: usize, t: &F) -> Result<F> {
    let m = u.len();
    let z: Vec<F> = u[..m - n]
        .iter()
        .map(|uj| uj.checked_div(t))
        .collect::<Result<_>>()?;
    let mut acc = F::zero();
    for state in crate::lattice::LatticeState::sector(m, n) {
        let lam = YoungDiagram::from_positions(&state.positions(), m)?;
        let lam_bar = YoungDiagram::from_positions(&state.holes(), m)?;
        acc = acc + schur(&lam_bar, &z)? * schur(&lam, &u[m - n..])?;
    }
    Ok(acc)
}

/// ∏_{j ≤ M-N < k} (u_j / t + u_k).
pub fn classical_dual_cauchy_rhs<F: Field>(u: &[F], n: usize, t: &F) -> Result<F> {
    let m = u.len();
    let mut acc = F::one();
    for j in 0..m - n {
        for k in m - n..m {
            acc = acc * (u[j].checked_div(t)? + &u[k]);
        }
    }
    Ok(acc)
}

/// ∏_{j<k} (z_j + t z_k) · s_λ(z | α | γ) with total length M, the
/// generalized Felderhof wavefunction for B(z_1) ⋯ B(z_N)|Ω⟩.
pub fn gen_felderhof_closed_form<F: Field>(
    m: usize,
    x: &[usize],
    z: &[F],
    t: &F,
    params: &ParameterSets<F>,
) -> Result<F> {
    check_sizes(m, x, z.len())?;
    let lam = YoungDiagram::from_positions(x, m)?;
    let pre = pair_product(0, z.len(), |j, k| Ok(z[j].clone() + t.clone() * &z[k]))?;
    Ok(pre * gen_factorial_schur(&lam, z, params, m)?)
}

/// Σ_{λ ⊆ M^N} s_λ(x | α | γ) s_λ̂(y | -α | -γ), total length N + M.
pub fn factorial_dual_cauchy_lhs<F: Field>(x: &[F], y: &[F], params: &ParameterSets<F>) -> Result<F> {
    let (n, m) = (x.len(), y.len());
    let neg = params.negated();
    let mut acc = F::zero();
    for lam in YoungDiagram::all_in_box(n, m) {
        acc = acc
            + gen_factorial_schur(&lam, x, params, n + m)?
                * gen_factorial_schur(&lam.hat(m)?, y, &neg, n + m)?;
    }
    Ok(acc)
}

/// ∏_{j,k} (x_j + y_k) ∏_{1 ≤ j < k ≤ N+M} (1 + α_j(γ_k - γ_j)).
pub fn factorial_dual_cauchy_rhs<F: Field>(x: &[F], y: &[F], params: &ParameterSets<F>) -> Result<F> {
    let total = x.len() + y.len();
    let mut acc = F::one();
    for xj in x {
        for yk in y {
            acc = acc * (xj.clone() + yk);
        }
    }
    for j in 1..=total {
        for k in j + 1..=total {
            let a = params.alpha(j)?;
            acc = acc * (F::one() + a.clone() * (params.gamma(k)?.clone() - params.gamma(j)?));
        }
    }
    Ok(acc)
}

/// Σ_{λ ⊆ M^N} sp_λ(x | α̃ | γ̃) sp_λ̂(y | -α̃ | -γ̃), total length N + M.
pub fn symplectic_dual_cauchy_lhs<F: Field>(x: &[F], y: &[F], params: &ParameterSets<F>) -> Result<F> {
    let (n, m) = (x.len(), y.len());
    let neg = params.negated();
    let mut acc = F::zero();
    for lam in YoungDiagram::all_in_box(n, m) {
        acc = acc
            + gen_symplectic_schur(&lam, x, params, n + m)?
                * gen_symplectic_schur(&lam.hat(m)?, y, &neg, n + m)?;
    }
    Ok(acc)
}

/// ∏_k y_k^{-N} ∏_{j,k} (1 + x_j y_k)(1 + y_k/x_j)
/// ∏_{0 ≤ j < k ≤ N+M} (1 + α_j(γ_k - γ_j)) ∏_{1 ≤ j < k ≤ N+M} (1 - γ_j γ_k).
pub fn symplectic_dual_cauchy_rhs<F: Field>(x: &[F], y: &[F], params: &ParameterSets<F>) -> Result<F> {
    let (n, m) = (x.len(), y.len());
    let total = n + m;
    let mut acc = F::one();
    for yk in y {
        acc = acc * yk.powi(-(n as i32))?;
        for xj in x {
            acc = acc * (F::one() + xj.clone() * yk) * (F::one() + yk.checked_div(xj)?);
        }
    }
    for j in 0..=total {
        for k in j + 1..=total {
            let a = params.alpha(j)?;
            acc = acc * (F::one() + a.clone() * (params.gamma(k)?.clone() - params.gamma(j)?));
            if j >= 1 {
                acc = acc * (F::one() - params.gamma(j)?.clone() * params.gamma(k)?);
            }
        }
    }
    Ok(acc)
}
