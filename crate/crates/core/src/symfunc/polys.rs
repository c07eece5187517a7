//! Alternant-quotient symmetric functions: Schur, β-Grothendieck,
//! generalized factorial and symplectic Schur, and the interlacing-chain
//! expansion of Schur polynomials.

use crate::algebra::{Field, SquareMatrix};
use crate::error::{cap_check, Error, Result};

use super::diagram::YoungDiagram;

/// ∏_{j<k} (z_j - z_k).
pub fn vandermonde<F: Field>(z: &[F]) -> F {
    let mut acc = F::one();
    for j in 0..z.len() {
        for k in j + 1..z.len() {
            acc = acc * (z[j].clone() - &z[k]);
        }
    }
    acc
}

fn det<F: Field>(n: usize, entry: impl FnMut(usize, usize) -> Result<F>) -> Result<F> {
    if n == 0 {
        return Ok(F::one());
    }
    SquareMatrix::try_from_fn(n, entry)?.det()
}

fn check_rows(lambda: &YoungDiagram, n: usize) -> Result<YoungDiagram> {
    lambda.padded(n)
}

fn collision<F: Field>(z: &[F]) -> Result<()> {
    for j in 0..z.len() {
        for k in j + 1..z.len() {
            if z[j] == z[k] {
                return Err(Error::SingularPoint(format!(
                    "z{} - z{}",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    Ok(())
}

/// s_λ(z) = det(z_j^{λ_k + N - k}) / ∏_{j<k}(z_j - z_k).
pub fn schur<F: Field>(lambda: &YoungDiagram, z: &[F]) -> Result<F> {
    grothendieck(lambda, z, &F::zero())
}

/// G_λ(z; β) = det(z_j^{λ_k + N - k} (1 + β z_j)^{k - 1}) / ∏_{j<k}(z_j - z_k).
pub fn grothendieck<F: Field>(lambda: &YoungDiagram, z: &[F], beta: &F) -> Result<F> {
    let n = z.len();
    let lam = check_rows(lambda, n)?;
    collision(z)?;
    let num = det(n, |j, k| {
        let e = (lam.parts()[k] + n - 1 - k) as i32;
        let g = F::one() + beta.clone() * &z[j];
        Ok(z[j].powi(e)? * g.powi(k as i32)?)
    })?;
    num.exact_quotient(&vandermonde(z))
}

/// Parameter families α_j, γ_j indexed from `base`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterSets<F> {
    pub alpha: Vec<F>,
    pub gamma: Vec<F>,
    pub base: usize,
}

impl<F: Field> ParameterSets<F> {
    pub fn new(alpha: Vec<F>, gamma: Vec<F>, base: usize) -> Result<Self> {
        if alpha.len() != gamma.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} alphas but {} gammas",
                alpha.len(),
                gamma.len()
            )));
        }
        Ok(Self { alpha, gamma, base })
    }

    /// All parameters zero, indices base..=last.
    pub fn zeros(base: usize, last: usize) -> Self {
        let len = last + 1 - base;
        Self {
            alpha: vec![F::zero(); len],
            gamma: vec![F::zero(); len],
            base,
        }
    }

    pub fn last_index(&self) -> usize {
        self.base + self.alpha.len() - 1
    }

    fn lookup<'a>(&self, list: &'a [F], j: usize, name: &str) -> Result<&'a F> {
        j.checked_sub(self.base)
            .and_then(|i| list.get(i))
            .ok_or_else(|| Error::ShapeMismatch(format!("no {name}_{j} in the parameter set")))
    }

    pub fn alpha(&self, j: usize) -> Result<&F> {
        self.lookup(&self.alpha, j, "alpha")
    }

    pub fn gamma(&self, j: usize) -> Result<&F> {
        self.lookup(&self.gamma, j, "gamma")
    }

    pub fn negated(&self) -> Self {
        Self {
            alpha: self.alpha.iter().map(|a| -a.clone()).collect(),
            gamma: self.gamma.iter().map(|g| -g.clone()).collect(),
            base: self.base,
        }
    }

    fn rising(&self, j: usize, z: &F) -> Result<F> {
        let a = self.alpha(j)?;
        let g = self.gamma(j)?;
        Ok(a.clone() + (F::one() - a.clone() * g) * z)
    }
}

/// f_μ(z) = ∏_{j=1}^{μ}(α_j + (1 - α_j γ_j) z) ∏_{j=μ+2}^{total}(1 - γ_j z).
pub fn factorial_power<F: Field>(mu: usize, z: &F, params: &ParameterSets<F>, total: usize) -> Result<F> {
    let mut acc = F::one();
    for j in 1..=mu {
        acc = acc * params.rising(j, z)?;
    }
    for j in mu + 2..=total {
        acc = acc * (F::one() - params.gamma(j)?.clone() * z);
    }
    Ok(acc)
}

/// s_λ(z | α | γ) = det(f_{λ_j + N - j}(z_k)) / ∏_{j<k}(z_j - z_k).
pub fn gen_factorial_schur<F: Field>(
    lambda: &YoungDiagram,
    z: &[F],
    params: &ParameterSets<F>,
    total: usize,
) -> Result<F> {
    let n = z.len();
    let lam = check_rows(lambda, n)?;
    if n > 0 && lam.first() + n > total {
        return Err(Error::BoxViolation(format!(
            "largest exponent {} exceeds total length {total} - 1",
            lam.first() + n - 1
        )));
    }
    collision(z)?;
    let mu: Vec<usize> = (0..n).map(|j| lam.parts()[j] + n - 1 - j).collect();
    let num = det(n, |j, k| factorial_power(mu[j], &z[k], params, total))?;
    num.exact_quotient(&vandermonde(z))
}

/// g_μ(z) = ∏_{j=0}^{μ}(α_j + (1 - α_j γ_j) z) ∏_{j=μ+2}^{U}(1 - γ_j z) ∏_{j=1}^{U}(1 - γ_j / z).
pub fn symplectic_power<F: Field>(mu: usize, z: &F, params: &ParameterSets<F>, total: usize) -> Result<F> {
    let zi = z.inv()?;
    let mut acc = F::one();
    for j in 0..=mu {
        acc = acc * params.rising(j, z)?;
    }
    for j in mu + 2..=total {
        acc = acc * (F::one() - params.gamma(j)?.clone() * z);
    }
    for j in 1..=total {
        acc = acc * (F::one() - params.gamma(j)?.clone() * &zi);
    }
    Ok(acc)
}

/// sp_λ(z | α̃ | γ̃) = det(g_{μ_j}(z_k) - g_{μ_j}(1/z_k)) / det(z_k^{N-j+1} - z_k^{-(N-j+1)}),
/// μ_j = λ_j + N - j, parameters indexed from 0.
pub fn gen_symplectic_schur<F: Field>(
    lambda: &YoungDiagram,
    z: &[F],
    params: &ParameterSets<F>,
    total: usize,
) -> Result<F> {
    let n = z.len();
    let lam = check_rows(lambda, n)?;
    if params.base != 0 {
        return Err(Error::ShapeMismatch("symplectic parameters start at index 0".into()));
    }
    let one = F::one();
    let minus_one = -F::one();
    for (k, zk) in z.iter().enumerate() {
        if zk.is_zero() || *zk == one || *zk == minus_one {
            return Err(Error::SingularPoint(format!("z{} in {{0, 1, -1}}", k + 1)));
        }
    }
    collision(z)?;
    let mu: Vec<usize> = (0..n).map(|j| lam.parts()[j] + n - 1 - j).collect();
    let num = det(n, |j, k| {
        let zi = z[k].inv()?;
        Ok(symplectic_power(mu[j], &z[k], params, total)?
            - symplectic_power(mu[j], &zi, params, total)?)
    })?;
    let den = det(n, |j, k| {
        let e = (n - j) as i32;
        Ok(z[k].powi(e)? - z[k].powi(-e)?)
    })?;
    if den.is_zero() {
        return Err(Error::SingularPoint("symplectic denominator alternant".into()));
    }
    num.exact_quotient(&den)
}

pub const COMBINATORIAL_ROW_CAP: usize = 4;
pub const COMBINATORIAL_SPAN_CAP: usize = 8;

/// Strict partitions one level below `top` that interlace weakly with it:
/// top_j ≥ x_j ≥ top_{j+1}.
fn sublevels(top: &[usize]) -> Vec<Vec<usize>> {
    let k = top.len();
    let mut out = Vec::new();
    fn rec(top: &[usize], j: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if j + 1 == top.len() {
            out.push(cur.clone());
            return;
        }
        let hi = top[j].min(prev.saturating_sub(1));
        let lo = top[j + 1].max(1);
        for x in (lo..=hi).rev() {
            cur.push(x);
            rec(top, j + 1, x, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        return out;
    }
    rec(top, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// All interlacing chains ∅ = x^(0) ≺ x^(1) ≺ … ≺ x^(N) = top, each listed
/// from level 0 upward.
pub fn interlacing_chains(top: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if top.is_empty() {
        return vec![vec![Vec::new()]];
    }
    let mut out = Vec::new();
    for below in sublevels(top) {
        for mut chain in interlacing_chains(&below) {
            chain.push(top.to_vec());
            out.push(chain);
        }
    }
    out
}

/// The interlacing-chain expansion of s_λ(z), an explicit function of an
/// auxiliary β that must drop out.
pub fn schur_combinatorial<F: Field>(lambda: &YoungDiagram, z: &[F], beta: &F) -> Result<F> {
    let n = z.len();
    let lam = check_rows(lambda, n)?;
    cap_check("rows N", n, COMBINATORIAL_ROW_CAP)?;
    cap_check("lambda_1 + N", lam.first() + n, COMBINATORIAL_SPAN_CAP)?;
    let top: Vec<usize> = (0..n).map(|j| lam.parts()[j] + n - j).collect();
    let two = F::from_i64(2);
    let mut total = F::zero();
    for chain in interlacing_chains(&top) {
        let mut term = F::one();
        for k in 1..=n {
            let (x, y) = (&chain[k - 1], &chain[k]);
            let zk = &z[k - 1];
            let bz = beta.clone() * zk;
            let exp = y.iter().sum::<usize>() - x.iter().sum::<usize>() - 1;
            term = term * zk.powi(exp as i32)?;
            let fresh = y.iter().filter(|a| !x.contains(a)).count();
            let ratio = (two.clone() * (F::one() + bz.clone()))
                .checked_div(&(F::one() + two.clone() * &bz))?;
            term = term * ratio.powi(fresh as i32 - 1)?;
            for j in 0..k - 1 {
                if x[j] != y[j + 1] {
                    term = term * (F::one() + two.clone() * &bz);
                }
            }
        }
        total = total + term;
    }
    let mut den = F::one();
    for j in 0..n {
        for k in j + 1..n {
            den = den * (z[j].clone() + &z[k] + two.clone() * beta * &z[j] * &z[k]);
        }
    }
    total.exact_quotient(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExactRational, RationalFunction, Var};

    fn z(j: usize) -> RationalFunction {
        RationalFunction::var(Var::z(j))
    }

    fn zs(n: usize) -> Vec<RationalFunction> {
        (1..=n).map(z).collect()
    }

    fn yd(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    /// Semistandard tableaux of shape λ with entries in 1..=n, as monomials.
    fn tableau_sum(lambda: &[usize], n: usize) -> RationalFunction {
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        fn fill(
            cells: &[(usize, usize)],
            i: usize,
            n: usize,
            t: &mut std::collections::BTreeMap<(usize, usize), usize>,
            acc: &mut RationalFunction,
        ) {
            if i == cells.len() {
                let mut m = RationalFunction::one();
                for &v in t.values() {
                    m = m * RationalFunction::var(Var::z(v));
                }
                *acc = acc.clone() + m;
                return;
            }
            let (r, c) = cells[i];
            let lo_row = if c > 0 { t[&(r, c - 1)] } else { 1 };
            let lo_col = if r > 0 { t[&(r - 1, c)] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=n {
                t.insert((r, c), v);
                fill(cells, i + 1, n, t, acc);
                t.remove(&(r, c));
            }
        }
        let mut acc = RationalFunction::zero();
        fill(&cells, 0, n, &mut Default::default(), &mut acc);
        acc
    }

    #[test]
    fn schur_basics() {
        assert_eq!(schur(&yd(&[]), &zs(2)).unwrap(), RationalFunction::one());
        assert_eq!(schur(&yd(&[1]), &zs(2)).unwrap(), z(1) + z(2));
        assert_eq!(schur(&yd(&[1]), &zs(2)).unwrap().to_string(), "z1 + z2");
        let s21 = schur(&yd(&[2, 1]), &zs(3)).unwrap();
        assert_eq!(s21, tableau_sum(&[2, 1], 3));
        assert_eq!(schur(&yd(&[2, 2]), &zs(3)).unwrap(), tableau_sum(&[2, 2], 3));
    }

    #[test]
    fn grothendieck_specializations() {
        let b = RationalFunction::var(Var::BETA);
        assert_eq!(grothendieck(&yd(&[3]), &zs(1), &b).unwrap(), z(1).pow(3).unwrap());
        for lam in YoungDiagram::all_in_box(3, 3) {
            assert_eq!(
                grothendieck(&lam, &zs(3), &RationalFunction::zero()).unwrap(),
                schur(&lam, &zs(3)).unwrap()
            );
        }
        // G_(1)(z1, z2) = z1 + z2 + β z1 z2.
        assert_eq!(
            grothendieck(&yd(&[1]), &zs(2), &b).unwrap(),
            z(1) + z(2) + b * z(1) * z(2)
        );
    }

    #[test]
    fn factorial_reduces_to_schur() {
        let params = ParameterSets::zeros(1, 5);
        for lam in YoungDiagram::all_in_box(2, 3) {
            assert_eq!(
                gen_factorial_schur(&lam, &zs(2), &params, 5).unwrap(),
                schur(&lam, &zs(2)).unwrap()
            );
        }
        let empty = gen_factorial_schur(&yd(&[0]), &zs(1), &ParameterSets::zeros(1, 1), 1).unwrap();
        assert_eq!(empty, RationalFunction::one());
    }

    #[test]
    fn factorial_is_symmetric() {
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        let params = ParameterSets::new(
            vec![r(1, 2), r(-3, 5), r(2, 7), r(4, 1)],
            vec![r(5, 3), r(1, 9), r(-2, 3), r(3, 7)],
            1,
        )
        .unwrap();
        let lam = yd(&[2, 1]);
        let (a, b) = (r(2, 3), r(-7, 5));
        let x = gen_factorial_schur(&lam, &[a.clone(), b.clone()], &params, 4).unwrap();
        let y = gen_factorial_schur(&lam, &[b, a], &params, 4).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn symplectic_classical_limits() {
        let params = ParameterSets::zeros(0, 2);
        let one = gen_symplectic_schur(&yd(&[0]), &zs(1), &params, 2).unwrap();
        assert_eq!(one, RationalFunction::one());
        // Weyl character of sp_4 for the vector representation λ = (1, 0):
        // z1 + z1^-1 + z2 + z2^-1 from the 2×2 alternant quotient.
        let params = ParameterSets::zeros(0, 3);
        let sp = gen_symplectic_schur(&yd(&[1, 0]), &zs(2), &params, 3).unwrap();
        let expected = z(1) + z(1).inv().unwrap() + z(2) + z(2).inv().unwrap();
        assert_eq!(sp, expected);
        let r = ExactRational::one();
        assert!(matches!(
            gen_symplectic_schur(&yd(&[0]), &[r], &ParameterSets::zeros(0, 1), 1),
            Err(Error::SingularPoint(_))
        ));
    }

    #[test]
    fn chains_and_combinatorial_formula() {
        assert_eq!(interlacing_chains(&[1]), vec![vec![vec![], vec![1]]]);
        let b = RationalFunction::var(Var::BETA);
        assert_eq!(schur_combinatorial(&yd(&[0]), &zs(1), &b).unwrap(), RationalFunction::one());
        assert_eq!(schur_combinatorial(&yd(&[1]), &zs(1), &b).unwrap(), z(1));
        let r = |n: i64, d: i64| ExactRational::new(n, d).unwrap();
        let pts = [r(2, 3), r(-5, 7)];
        let lam = yd(&[2, 1]);
        let s = schur(&lam, &pts).unwrap();
        assert_eq!(schur_combinatorial(&lam, &pts, &r(3, 5)).unwrap(), s);
        assert_eq!(schur_combinatorial(&lam, &pts, &r(-1, 2)).unwrap(), s);
    }
}
