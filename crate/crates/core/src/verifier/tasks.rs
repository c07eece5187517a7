//! Instance lists and the two sides of every task.

use std::fmt::Write;

use crate::algebra::{ExactRational, Family, Field, Var};
use crate::boson::{boson_closed_form, boson_dual_wavefunction, boson_wavefunction, FockState};
use crate::error::{Error, Result};
use crate::lattice::{
    check_ybe, dwbp_bruteforce, scalar_product_bruteforce, wavefunction_bruteforce, LatticeState,
    ModelSpec, MpoChain, Perturbed, RMatrix, VertexModel, WaveMode, DEFAULT_SITE_CAP,
};
use crate::symfunc::{
    cauchy_lhs, cauchy_rhs, classical_dual_cauchy_lhs, classical_dual_cauchy_rhs,
    factorial_dual_cauchy_lhs, factorial_dual_cauchy_rhs, felderhof_closed_form,
    felderhof_step_overlap, five_vertex_closed_form, gen_felderhof_closed_form, ik_determinant,
    qbeta_closed_form, scalar_product_determinant, schur, schur_combinatorial,
    symplectic_dual_cauchy_lhs, symplectic_dual_cauchy_rhs, ElementReading, FelderhofMode,
    FelderhofVariables, Pairing, ParameterSets, YoungDiagram,
};

use super::sample::{values, Source};
use super::task::{Profile, TaskId};

/// One size/configuration of a task; evaluated at one or more points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub variant: &'static str,
    pub sizes: Vec<(&'static str, usize)>,
    pub config: Vec<usize>,
}

impl Instance {
    fn new(variant: &'static str, sizes: &[(&'static str, usize)], config: Vec<usize>) -> Self {
        Self {
            variant,
            sizes: sizes.to_vec(),
            config,
        }
    }

    pub fn size(&self, name: &str) -> usize {
        self.sizes
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| panic!("instance has no size {name}"))
    }

    pub fn label(&self) -> String {
        let mut s = String::from(self.variant);
        for (k, v) in &self.sizes {
            let _ = write!(s, " {k}={v}");
        }
        if !self.config.is_empty() {
            let _ = write!(s, " config={:?}", self.config);
        }
        s
    }
}

/// One comparison inside an instance.
pub struct Check<F> {
    pub name: &'static str,
    pub lhs: F,
    pub rhs: F,
}

fn check<F>(name: &'static str, lhs: F, rhs: F) -> Check<F> {
    Check { name, lhs, rhs }
}

/// Evaluation context shared by every instance of a run.
#[derive(Clone, Copy, Debug, Default)]
pub struct Context {
    /// Shift this L-operator entry (out, in) by +1 in every lattice model.
    pub perturb: Option<(usize, usize)>,
}

impl Context {
    fn model<F: Field>(&self, spec: ModelSpec<F>) -> Box<dyn VertexModel<F>> {
        match self.perturb {
            Some(entry) => Box::new(Perturbed { base: spec, entry }),
            None => Box::new(spec),
        }
    }
}

fn sector(m: usize, n: usize) -> Vec<Vec<usize>> {
    LatticeState::sector(m, n).iter().map(LatticeState::positions).collect()
}

/// Every configuration with 1 ≤ N ≤ n_max particles on M ≤ m_max sites.
fn configurations(
    variant: &'static str,
    m_range: std::ops::RangeInclusive<usize>,
    n_max: usize,
) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in m_range {
        for n in 1..=n_max.min(m) {
            for x in sector(m, n) {
                out.push(Instance::new(variant, &[("M", m), ("N", n)], x));
            }
        }
    }
    out
}

fn by_profile<T>(profile: Profile, smoke: T, standard: T, deep: T) -> T {
    match profile {
        Profile::Smoke => smoke,
        Profile::Standard => standard,
        Profile::Deep => deep,
    }
}

/// Sample points evaluated per instance.
pub fn points(task: TaskId, profile: Profile) -> usize {
    match profile {
        Profile::Smoke => 1,
        Profile::Deep => 3,
        Profile::Standard => match task {
            TaskId::YbeXxz
            | TaskId::RllGenXxz
            | TaskId::RllQBeta
            | TaskId::YbeFelderhof
            | TaskId::Cauchy => 3,
            _ => 2,
        },
    }
}

pub fn instances(task: TaskId, profile: Profile) -> Vec<Instance> {
    use TaskId::*;
    let plain = |variant| vec![Instance::new(variant, &[], vec![])];
    match task {
        YbeXxz => plain("xxz"),
        RllGenXxz => plain("q-beta choice"),
        RllQBeta => ["q-beta", "five-vertex", "six-vertex-beta"]
            .into_iter()
            .flat_map(plain)
            .collect(),
        YbeFelderhof => ["felderhof", "inhomogeneous", "generalized"]
            .into_iter()
            .flat_map(plain)
            .collect(),
        QBetaWavefunction | FelderhofParticle | FiveVertexWavefunction => {
            let (m, n) = by_profile(profile, (2, 2), (4, 2), (5, 3));
            let mut out = configurations("ket", 1..=m, n);
            if task == FiveVertexWavefunction {
                out.extend(configurations("bra", 1..=m, n));
            }
            out
        }
        CorrespondenceQ0 => {
            let sizes = by_profile(profile, vec![(2, 1)], vec![(3, 1), (4, 2)], vec![(4, 2), (5, 2), (5, 3)]);
            sizes
                .into_iter()
                .flat_map(|(m, n)| sector(m, n).into_iter().map(move |x| Instance::new("q = 0", &[("M", m), ("N", n)], x)))
                .collect()
        }
        FelderhofHole => {
            let (m, n) = by_profile(profile, (2, 2), (4, 2), (5, 3));
            configurations("holes", 1..=m, n)
        }
        Algebra => {
            let (levels, m, n) = by_profile(profile, (2, 2, 1), (4, 4, 2), (5, 5, 3));
            let mut out: Vec<Instance> = (1..=levels)
                .map(|k| Instance::new("relations", &[("n", k)], vec![]))
                .collect();
            out.extend(configurations("trace", 1..=m, n));
            out
        }
        StepConfig => {
            let (top, extra) = by_profile(profile, (2, 3), (3, 4), (4, 5));
            let mut out: Vec<Instance> = (1..=top)
                .map(|n| Instance::new("packed", &[("M", n), ("N", n)], vec![]))
                .collect();
            for m in 2..=extra {
                for n in 1..m {
                    out.push(Instance::new("packed", &[("M", m), ("N", n)], vec![]));
                }
            }
            out
        }
        IkDeterminant => {
            let (m_inh, m_hom) = by_profile(profile, (2, 2), (4, 3), (5, 4));
            let mut out: Vec<Instance> = (1..=m_inh)
                .map(|m| Instance::new("inhomogeneous", &[("M", m)], vec![]))
                .collect();
            out.extend((1..=m_hom).map(|m| Instance::new("homogeneous", &[("M", m)], vec![])));
            out
        }
        ScalarProduct => {
            let m_max = by_profile(profile, 2, 3, 4);
            let mut out = Vec::new();
            for m in 1..=m_max {
                for n in 1..=m.min(3) {
                    out.push(Instance::new("scalar product", &[("M", m), ("N", n)], vec![]));
                }
            }
            out
        }
        Cauchy => {
            let sizes = by_profile(
                profile,
                vec![(1, 1), (2, 1)],
                vec![(1, 1), (2, 2), (3, 2)],
                vec![(1, 1), (2, 2), (3, 2), (3, 3), (4, 2)],
            );
            sizes
                .into_iter()
                .map(|(n, l)| Instance::new("cauchy", &[("N", n), ("L", l)], vec![]))
                .collect()
        }
        DualCauchyFelderhof => {
            let m_max = by_profile(profile, 2, 4, 5);
            let n_max = by_profile(profile, 1, 2, 3);
            let mut out: Vec<Instance> = (1..=m_max)
                .map(|m| Instance::new("domain wall", &[("M", m)], vec![]))
                .collect();
            for m in 2..=m_max {
                for n in 1..=n_max.min(m - 1) {
                    out.push(Instance::new("completeness", &[("M", m), ("N", n)], vec![]));
                    out.push(Instance::new("dual cauchy", &[("M", m), ("N", n)], vec![]));
                }
            }
            out.extend(configurations("particle form", 1..=m_max.min(4), n_max));
            out.extend(configurations("hole form", 1..=m_max.min(4), n_max));
            out
        }
        DualCauchyClassical => {
            let m_max = by_profile(profile, 2, 4, 5);
            let mut out = Vec::new();
            for m in 2..=m_max {
                for n in 1..m {
                    out.push(Instance::new("q = 0", &[("M", m), ("N", n)], vec![]));
                }
            }
            out
        }
        CombinatorialSchur => {
            let (n_max, width) = by_profile(profile, (2, 1), (3, 3), (4, 3));
            let mut out = Vec::new();
            for n in 1..=n_max {
                for lam in YoungDiagram::all_in_box(n, width) {
                    out.push(Instance::new("lambda", &[("N", n)], lam.parts().to_vec()));
                }
            }
            out
        }
        BosonWavefunction => {
            let (m_max, n_max) = by_profile(profile, (2, 1), (4, 3), (5, 4));
            let mut out = Vec::new();
            for pairing in ["ket", "bra"] {
                for m in 1..=m_max {
                    for n in 0..=n_max {
                        for st in FockState::sector(m, n) {
                            out.push(Instance::new(pairing, &[("M", m), ("N", n)], st.occupations().to_vec()));
                        }
                    }
                }
            }
            out
        }
        GenFactorialWavefunction => {
            let (m, n) = by_profile(profile, (2, 1), (3, 2), (4, 3));
            configurations("ket", 1..=m, n)
        }
        FactorialDualCauchy | SymplecticDualCauchy => {
            let sizes = match (task, profile) {
                (FactorialDualCauchy, Profile::Smoke) | (SymplecticDualCauchy, Profile::Smoke) => vec![(1, 1)],
                (FactorialDualCauchy, Profile::Standard) => vec![(1, 1), (1, 2), (2, 1), (2, 2)],
                (FactorialDualCauchy, _) => vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)],
                (_, Profile::Standard) => vec![(1, 1), (1, 2)],
                _ => vec![(1, 1), (1, 2), (2, 1), (2, 2)],
            };
            sizes
                .into_iter()
                .map(|(n, m)| Instance::new("dual cauchy", &[("N", n), ("M", m)], vec![]))
                .collect()
        }
    }
}

fn residual<F: Field>(count: usize) -> Check<F> {
    check("residual entries", F::from_i64(count as i64), F::zero())
}

fn reversed<F: Clone>(v: &[F]) -> Vec<F> {
    v.iter().rev().cloned().collect()
}

fn params<F: Field>(src: &mut dyn Source<F>, base: usize, last: usize) -> Result<ParameterSets<F>> {
    let alpha = (base..=last).map(|j| src.value(Var::alpha(j))).collect();
    let gamma = (base..=last).map(|j| src.value(Var::gamma(j))).collect();
    ParameterSets::new(alpha, gamma, base)
}

/// Both sides of every comparison of one instance.
pub fn evaluate<F: Field>(
    task: TaskId,
    inst: &Instance,
    src: &mut dyn Source<F>,
    ctx: &Context,
) -> Result<Vec<Check<F>>> {
    use TaskId::*;
    let cap = DEFAULT_SITE_CAP;
    let x = &inst.config;
    Ok(match task {
        YbeXxz => {
            let q = src.value(Var::Q);
            let (u1, u2) = (src.value(Var::u(1)), src.value(Var::u(2)));
            let model = ctx.model(ModelSpec::Xxz { q: q.clone() });
            vec![residual(check_ybe(model.as_ref(), &RMatrix::Xxz { q }, &u1, &u2)?)]
        }
        RllGenXxz => {
            let (q, beta) = (src.value(Var::Q), src.value(Var::BETA));
            let (u1, u2) = (src.value(Var::u(1)), src.value(Var::u(2)));
            let spec = ModelSpec::generalized_xxz_from_qbeta(q, beta)?;
            let violated = spec.validate().len();
            let r = spec.designated_r();
            let model = ctx.model(spec);
            vec![
                check("violated constraints", F::from_i64(violated as i64), F::zero()),
                residual(check_ybe(model.as_ref(), &r, &u1, &u2)?),
            ]
        }
        RllQBeta | YbeFelderhof => {
            let (u1, u2) = (src.value(Var::u(1)), src.value(Var::u(2)));
            let spec = match inst.variant {
                "q-beta" => ModelSpec::QBeta {
                    q: src.value(Var::Q),
                    beta: src.value(Var::BETA),
                },
                "five-vertex" => ModelSpec::FiveVertex {
                    beta: src.value(Var::BETA),
                },
                "six-vertex-beta" => ModelSpec::SixVertexBeta {
                    beta: src.value(Var::BETA),
                },
                "felderhof" => ModelSpec::Felderhof {
                    p: src.value(Var::P),
                    q: src.value(Var::Q),
                },
                "inhomogeneous" => ModelSpec::InhomFelderhof {
                    p: src.value(Var::P),
                    q: values(src, Var::q_site, 2),
                    v: values(src, Var::v, 2),
                },
                "generalized" => ModelSpec::GeneralizedFelderhof {
                    t: src.value(Var::T),
                    alpha: values(src, Var::alpha, 2),
                    gamma: values(src, Var::gamma, 2),
                },
                other => unreachable!("unknown variant {other}"),
            };
            let r = spec.designated_r();
            let model = ctx.model(spec);
            vec![residual(check_ybe(model.as_ref(), &r, &u1, &u2)?)]
        }
        QBetaWavefunction => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let (q, beta) = (src.value(Var::Q), src.value(Var::BETA));
            let us = values(src, Var::u, n);
            let model = ctx.model(ModelSpec::QBeta {
                q: q.clone(),
                beta: beta.clone(),
            });
            let target = LatticeState::from_positions(m, x)?;
            vec![check(
                "contraction vs symmetrization",
                wavefunction_bruteforce(model.as_ref(), m, n, target, &us, WaveMode::Particle, cap)?,
                qbeta_closed_form(m, x, &us, &q, &beta)?,
            )]
        }
        CorrespondenceQ0 => {
            let m = inst.size("M");
            let n = inst.size("N");
            let beta = src.value(Var::BETA);
            let us = values(src, Var::u, n);
            vec![check(
                "q-beta at q = 0 vs Grothendieck",
                qbeta_closed_form(m, x, &us, &F::zero(), &beta)?,
                five_vertex_closed_form(m, x, &us, &beta, Pairing::Ket)?,
            )]
        }
        FelderhofParticle | FelderhofHole => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let (p, q) = (src.value(Var::P), src.value(Var::Q));
            let us = values(src, Var::u, n);
            let model = ctx.model(ModelSpec::Felderhof {
                p: p.clone(),
                q: q.clone(),
            });
            let (target, wave, mode) = if task == FelderhofParticle {
                (LatticeState::from_positions(m, x)?, WaveMode::Particle, FelderhofMode::Particle)
            } else {
                (LatticeState::from_holes(m, x)?, WaveMode::Hole, FelderhofMode::Hole)
            };
            vec![check(
                "contraction vs determinant",
                wavefunction_bruteforce(model.as_ref(), m, n, target, &us, wave, cap)?,
                felderhof_closed_form(m, x, &us, &p, &q, mode)?,
            )]
        }
        Algebra => {
            let (p, q) = (src.value(Var::P), src.value(Var::Q));
            let spec = ModelSpec::Felderhof {
                p: p.clone(),
                q: q.clone(),
            };
            if inst.variant == "relations" {
                let us = values(src, Var::u, inst.size("n"));
                let r = MpoChain::build(&spec, &us)?.residuals()?;
                vec![
                    check("diagonalization", F::from_i64(r.diagonalization as i64), F::zero()),
                    check("decomposition", F::from_i64((r.decomposition + r.c_sum) as i64), F::zero()),
                    check("rel2", F::from_i64(r.rel2 as i64), F::zero()),
                    check("rel3", F::from_i64(r.rel3 as i64), F::zero()),
                    check("rel4", F::from_i64(r.rel4 as i64), F::zero()),
                ]
            } else {
                let (m, n) = (inst.size("M"), inst.size("N"));
                let us = values(src, Var::u, n);
                let model = ctx.model(spec.clone());
                let target = LatticeState::from_positions(m, x)?;
                vec![check(
                    "contraction vs trace",
                    wavefunction_bruteforce(model.as_ref(), m, n, target, &us, WaveMode::Particle, cap)?,
                    MpoChain::build(&spec, &us)?.trace(m, x)?,
                )]
            }
        }
        StepConfig => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let (p, q) = (src.value(Var::P), src.value(Var::Q));
            let us = values(src, Var::u, n);
            let model = ctx.model(ModelSpec::Felderhof {
                p: p.clone(),
                q: q.clone(),
            });
            let packed: Vec<usize> = (m - n + 1..=m).collect();
            let target = LatticeState::from_positions(m, &packed)?;
            vec![check(
                "contraction vs product",
                wavefunction_bruteforce(model.as_ref(), m, n, target, &us, WaveMode::Particle, cap)?,
                felderhof_step_overlap(m, &us, &p, &q)?,
            )]
        }
        IkDeterminant => {
            let m = inst.size("M");
            let p = src.value(Var::P);
            let us = values(src, Var::u, m);
            if inst.variant == "inhomogeneous" {
                let qs = values(src, Var::q_site, m);
                let vs = values(src, Var::v, m);
                let model = ctx.model(ModelSpec::InhomFelderhof {
                    p: p.clone(),
                    q: qs.clone(),
                    v: vs.clone(),
                });
                vec![check(
                    "contraction vs determinant",
                    dwbp_bruteforce(model.as_ref(), &us, cap)?,
                    ik_determinant(&us, &qs, &vs, &p)?,
                )]
            } else {
                let q = src.value(Var::Q);
                let limit = ik_determinant(&us, &vec![q.clone(); m], &vec![F::one(); m], &p)?;
                let model = ctx.model(ModelSpec::Felderhof {
                    p: p.clone(),
                    q: q.clone(),
                });
                vec![
                    check("limit vs product formula", limit.clone(), felderhof_step_overlap(m, &us, &p, &q)?),
                    check("limit vs contraction", limit, dwbp_bruteforce(model.as_ref(), &us, cap)?),
                ]
            }
        }
        FiveVertexWavefunction => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let beta = src.value(Var::BETA);
            let us = values(src, Var::u, n);
            let model = ctx.model(ModelSpec::FiveVertex { beta: beta.clone() });
            let target = LatticeState::from_positions(m, x)?;
            let (mode, pairing) = if inst.variant == "ket" {
                (WaveMode::Particle, Pairing::Ket)
            } else {
                (WaveMode::Dual, Pairing::Bra)
            };
            vec![check(
                "contraction vs Grothendieck",
                wavefunction_bruteforce(model.as_ref(), m, n, target, &us, mode, cap)?,
                five_vertex_closed_form(m, x, &us, &beta, pairing)?,
            )]
        }
        ScalarProduct => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let beta = src.value(Var::BETA);
            let us = values(src, Var::u, n);
            let vs = values(src, Var::v, n);
            let model = ctx.model(ModelSpec::FiveVertex { beta: beta.clone() });
            let direct = scalar_product_bruteforce(model.as_ref(), m, &us, &vs, cap)?;
            let mut sum = F::zero();
            for x in sector(m, n) {
                sum = sum
                    + five_vertex_closed_form(m, &x, &us, &beta, Pairing::Bra)?
                        * five_vertex_closed_form(m, &x, &vs, &beta, Pairing::Ket)?;
            }
            vec![
                check(
                    "contraction vs determinant",
                    direct.clone(),
                    scalar_product_determinant(m, &us, &vs, &beta, ElementReading::InverseBeta)?,
                ),
                check("contraction vs completeness", direct, sum),
            ]
        }
        Cauchy => {
            let (n, l) = (inst.size("N"), inst.size("L"));
            let beta = src.value(Var::BETA);
            let z = values(src, Var::z, n);
            let w = values(src, Var::w, n);
            vec![check("diagram sum vs determinant", cauchy_lhs(l, &z, &w, &beta)?, cauchy_rhs(l, &z, &w, &beta)?)]
        }
        DualCauchyFelderhof => {
            let (p, q) = (src.value(Var::P), src.value(Var::Q));
            let fv = FelderhofVariables { p: &p, q: &q };
            let m = inst.size("M");
            match inst.variant {
                "domain wall" => {
                    let us = values(src, Var::u, m);
                    let model = ctx.model(ModelSpec::Felderhof {
                        p: p.clone(),
                        q: q.clone(),
                    });
                    vec![check(
                        "contraction vs product",
                        dwbp_bruteforce(model.as_ref(), &reversed(&us), cap)?,
                        fv.comparison_one(&us)?,
                    )]
                }
                "completeness" => {
                    let us = values(src, Var::u, m);
                    vec![check(
                        "product vs completeness sum",
                        fv.comparison_one(&us)?,
                        fv.comparison_two(&us, inst.size("N"))?,
                    )]
                }
                "dual cauchy" => {
                    let us = values(src, Var::u, m);
                    let n = inst.size("N");
                    vec![check("Schur sum vs product", fv.dual_cauchy_lhs(&us, n)?, fv.dual_cauchy_rhs(&us, n)?)]
                }
                _ => {
                    let n = inst.size("N");
                    let us = values(src, Var::u, n);
                    let model = ctx.model(ModelSpec::Felderhof {
                        p: p.clone(),
                        q: q.clone(),
                    });
                    if inst.variant == "particle form" {
                        let target = LatticeState::from_positions(m, x)?;
                        vec![check(
                            "contraction vs Schur form",
                            wavefunction_bruteforce(model.as_ref(), m, n, target, &reversed(&us), WaveMode::Particle, cap)?,
                            fv.particle_form(m, x, &us)?,
                        )]
                    } else {
                        let target = LatticeState::from_holes(m, x)?;
                        vec![check(
                            "contraction vs Schur form",
                            wavefunction_bruteforce(model.as_ref(), m, n, target, &us, WaveMode::Hole, cap)?,
                            fv.hole_form(m, x, &us)?,
                        )]
                    }
                }
            }
        }
        DualCauchyClassical => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let p = src.value(Var::P);
            let us = values(src, Var::u, m);
            let t = -(p.clone() * &p);
            let zero = F::zero();
            let fv = FelderhofVariables { p: &p, q: &zero };
            let rhs = classical_dual_cauchy_rhs(&us, n, &t)?;
            vec![
                check("Schur sum vs product", classical_dual_cauchy_lhs(&us, n, &t)?, rhs.clone()),
                check("Felderhof product at q = 0", fv.dual_cauchy_rhs(&us, n)?, rhs),
            ]
        }
        CombinatorialSchur => {
            let n = inst.size("N");
            let lam = YoungDiagram::new(x.clone())?;
            let z = values(src, Var::z, n);
            let b1 = src.value(Var::BETA);
            let b2 = src.value(Var::indexed(Family::Beta, 2));
            let s = schur(&lam, &z)?;
            vec![
                check("chains at beta vs Schur", schur_combinatorial(&lam, &z, &b1)?, s.clone()),
                check("chains at beta2 vs Schur", schur_combinatorial(&lam, &z, &b2)?, s),
            ]
        }
        BosonWavefunction => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let beta = src.value(Var::BETA);
            let vs = values(src, Var::v, n);
            let target = FockState::new(x.clone());
            let (lhs, pairing) = if inst.variant == "ket" {
                (boson_wavefunction(m, &target, &vs, &beta)?, Pairing::Ket)
            } else {
                (boson_dual_wavefunction(m, &target, &vs, &beta)?, Pairing::Bra)
            };
            vec![check("contraction vs Grothendieck", lhs, boson_closed_form(m, &target, &vs, &beta, pairing)?)]
        }
        GenFactorialWavefunction => {
            let (m, n) = (inst.size("M"), inst.size("N"));
            let t = src.value(Var::T);
            let ps = params(src, 1, m)?;
            let z = values(src, Var::z, n);
            let model = ctx.model(ModelSpec::GeneralizedFelderhof {
                t: t.clone(),
                alpha: ps.alpha.clone(),
                gamma: ps.gamma.clone(),
            });
            let target = LatticeState::from_positions(m, x)?;
            vec![check(
                "contraction vs factorial Schur",
                wavefunction_bruteforce(model.as_ref(), m, n, target, &reversed(&z), WaveMode::Particle, cap)?,
                gen_felderhof_closed_form(m, x, &z, &t, &ps)?,
            )]
        }
        FactorialDualCauchy | SymplecticDualCauchy => {
            let (n, m) = (inst.size("N"), inst.size("M"));
            let xs = values(src, Var::x, n);
            let ys = values(src, Var::y, m);
            if task == FactorialDualCauchy {
                let ps = params(src, 1, n + m)?;
                vec![check(
                    "diagram sum vs product",
                    factorial_dual_cauchy_lhs(&xs, &ys, &ps)?,
                    factorial_dual_cauchy_rhs(&xs, &ys, &ps)?,
                )]
            } else {
                let ps = params(src, 0, n + m)?;
                vec![check(
                    "diagram sum vs product",
                    symplectic_dual_cauchy_lhs(&xs, &ys, &ps)?,
                    symplectic_dual_cauchy_rhs(&xs, &ys, &ps)?,
                )]
            }
        }
    })
}

/// The readings of the scalar-product matrix element that agree with
/// contraction at (M, N) ∈ {(1,1), (2,1), (3,2)}, each at `trials` points.
pub fn resolve_element_reading(seed: u64, trials: usize) -> Result<Vec<ElementReading>> {
    use super::sample::{rng_from_seed, PointSource};
    let mut rng = rng_from_seed(seed);
    let mut ok = Vec::new();
    'reading: for reading in ElementReading::ALL {
        for (m, n) in [(1, 1), (2, 1), (3, 2)] {
            let mut done = 0;
            let mut attempts = 0;
            while done < trials {
                attempts += 1;
                if attempts > super::sample::RESAMPLE_LIMIT {
                    return Err(Error::SamplingExhausted(attempts - 1));
                }
                let mut src = PointSource::new(&mut rng);
                let beta: ExactRational = src.value(Var::BETA);
                let us = values(&mut src, Var::u, n);
                let vs = values(&mut src, Var::v, n);
                let model = ModelSpec::FiveVertex { beta: beta.clone() };
                let both = scalar_product_bruteforce(&model, m, &us, &vs, DEFAULT_SITE_CAP).and_then(|d| {
                    Ok((d, scalar_product_determinant(m, &us, &vs, &beta, reading)?))
                });
                match both {
                    Ok((d, f)) => {
                        done += 1;
                        if d != f {
                            continue 'reading;
                        }
                    }
                    Err(e) if super::sample::is_singular(&e) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        ok.push(reading);
    }
    Ok(ok)
}
