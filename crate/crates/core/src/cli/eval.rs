//! Single-formula evaluation for `bethe-symm eval`.

use clap::{Args, ValueEnum};

use crate::algebra::{ExactRational, Field, RationalFunction, Var};
use crate::boson::{boson_dual_wavefunction, boson_wavefunction, FockState};
use crate::error::{Error, Result};
use crate::lattice::{dwbp_bruteforce, ModelSpec, DEFAULT_SITE_CAP};
use crate::symfunc::{
    felderhof_closed_form, gen_factorial_schur, gen_symplectic_schur, grothendieck, ik_determinant,
    qbeta_closed_form, scalar_product_determinant, schur, schur_combinatorial, ElementReading,
    FelderhofMode, ParameterSets, YoungDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Schur,
    Grothendieck,
    Factorial,
    Symplectic,
    Combinatorial,
    QbetaWavefunction,
    FelderhofWavefunction,
    IkDeterminant,
    Dwbp,
    ScalarProduct,
    BosonWavefunction,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ConfigMode {
    #[default]
    Particle,
    Hole,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Printed,
    #[default]
    InverseBeta,
}

/// Values are comma-separated exact rationals (`-3/2`) or variable names
/// (`u1`, `beta`); variables give a symbolic result.
#[derive(Args, Debug, Default)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub formula: Option<Formula>,
    /// Young diagram parts, e.g. 2,1.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Polynomial variables z_1..z_N.
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    /// q, or q_1..q_M for ik-determinant.
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub t: Option<String>,
    /// Lattice length.
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Particle positions (hole positions with --mode hole), 1-based.
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long)]
    pub u: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub gamma: Option<String>,
    /// Total length of the factorial or symplectic products.
    #[arg(long)]
    pub total: Option<usize>,
    #[arg(long, value_enum, default_value = "particle")]
    pub mode: ConfigMode,
    /// Boson occupations n_0..n_{M-1}.
    #[arg(long)]
    pub occupations: Option<String>,
    /// Use the dual (C-operator) pairing for boson-wavefunction.
    #[arg(long)]
    pub dual: bool,
    /// Model for dwbp: Felderhof, InhomFelderhof, XXZ, QBeta, FiveVertex,
    /// SixVertexBeta or GeneralizedFelderhof.
    #[arg(long, default_value = "Felderhof")]
    pub model: String,
    #[arg(long, value_enum, default_value = "inverse-beta")]
    pub reading: Reading,
}

type F = RationalFunction;

pub fn parse_value(s: &str) -> Result<F> {
    let s = s.trim();
    if let Ok(r) = s.parse::<ExactRational>() {
        return Ok(F::from(r));
    }
    if s.starts_with(|c: char| c.is_ascii_alphabetic()) {
        if let Ok(v) = s.parse::<Var>() {
            return Ok(F::var(v));
        }
    }
    Err(Error::Parse(format!("malformed value {s:?}")))
}

fn list(arg: &Option<String>, name: &str) -> Result<Vec<F>> {
    let s = arg
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{name} is required")))?;
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_value).collect()
}

fn scalar(arg: &Option<String>, name: &str) -> Result<F> {
    let v = list(arg, name)?;
    match v.as_slice() {
        [x] => Ok(x.clone()),
        _ => Err(Error::Parse(format!("--{name} takes one value"))),
    }
}

fn integers(arg: &Option<String>, name: &str) -> Result<Vec<usize>> {
    let s = arg
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{name} is required")))?;
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("--{name}: {t:?} is not a nonnegative integer")))
        })
        .collect()
}

fn required<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("--{name} is required")))
}

fn diagram(args: &EvalArgs, rows: usize) -> Result<YoungDiagram> {
    let parts = match &args.lambda {
        Some(_) => integers(&args.lambda, "lambda")?,
        None => Vec::new(),
    };
    if parts.len() > rows {
        return Err(Error::ShapeMismatch(format!(
            "lambda has {} parts but there are {rows} variables",
            parts.len()
        )));
    }
    YoungDiagram::new(parts)?.padded(rows)
}

/// A list of length `m`: either `m` values or one value repeated.
fn per_site(arg: &Option<String>, name: &str, m: usize, default: Option<F>) -> Result<Vec<F>> {
    if arg.is_none() {
        if let Some(d) = default {
            return Ok(vec![d; m]);
        }
    }
    let v = list(arg, name)?;
    match v.len() {
        1 => Ok(vec![v[0].clone(); m]),
        n if n == m => Ok(v),
        n => Err(Error::ShapeMismatch(format!("--{name} has {n} values, expected 1 or {m}"))),
    }
}

fn dwbp_model(args: &EvalArgs, m: usize) -> Result<ModelSpec<F>> {
    Ok(match args.model.as_str() {
        "Felderhof" => ModelSpec::Felderhof {
            p: scalar(&args.p, "p")?,
            q: scalar(&args.q, "q")?,
        },
        "InhomFelderhof" => ModelSpec::InhomFelderhof {
            p: scalar(&args.p, "p")?,
            q: per_site(&args.q, "q", m, None)?,
            v: per_site(&args.v, "v", m, Some(F::one()))?,
        },
        "XXZ" => ModelSpec::Xxz { q: scalar(&args.q, "q")? },
        "QBeta" => ModelSpec::QBeta {
            q: scalar(&args.q, "q")?,
            beta: scalar(&args.beta, "beta")?,
        },
        "FiveVertex" => ModelSpec::FiveVertex {
            beta: scalar(&args.beta, "beta")?,
        },
        "SixVertexBeta" => ModelSpec::SixVertexBeta {
            beta: scalar(&args.beta, "beta")?,
        },
        "GeneralizedFelderhof" => ModelSpec::GeneralizedFelderhof {
            t: scalar(&args.t, "t")?,
            alpha: per_site(&args.alpha, "alpha", m, None)?,
            gamma: per_site(&args.gamma, "gamma", m, None)?,
        },
        other => return Err(Error::Parse(format!("unknown model {other:?} for dwbp"))),
    })
}

pub fn evaluate(args: &EvalArgs) -> Result<F> {
    let formula = required(args.formula, "formula")?;
    match formula {
        Formula::Schur | Formula::Grothendieck | Formula::Combinatorial => {
            let z = list(&args.vars, "vars")?;
            let lam = diagram(args, z.len())?;
            match formula {
                Formula::Schur => schur(&lam, &z),
                Formula::Grothendieck => grothendieck(&lam, &z, &scalar(&args.beta, "beta")?),
                _ => schur_combinatorial(&lam, &z, &scalar(&args.beta, "beta")?),
            }
        }
        Formula::Factorial | Formula::Symplectic => {
            let z = list(&args.vars, "vars")?;
            let lam = diagram(args, z.len())?;
            let alpha = list(&args.alpha, "alpha")?;
            let gamma = list(&args.gamma, "gamma")?;
            if formula == Formula::Factorial {
                let total = args.total.unwrap_or(alpha.len());
                gen_factorial_schur(&lam, &z, &ParameterSets::new(alpha, gamma, 1)?, total)
            } else {
                let total = args.total.unwrap_or(alpha.len().saturating_sub(1));
                gen_symplectic_schur(&lam, &z, &ParameterSets::new(alpha, gamma, 0)?, total)
            }
        }
        Formula::QbetaWavefunction => qbeta_closed_form(
            required(args.m, "M")?,
            &integers(&args.x, "x")?,
            &list(&args.u, "u")?,
            &scalar(&args.q, "q")?,
            &scalar(&args.beta, "beta")?,
        ),
        Formula::FelderhofWavefunction => felderhof_closed_form(
            required(args.m, "M")?,
            &integers(&args.x, "x")?,
            &list(&args.u, "u")?,
            &scalar(&args.p, "p")?,
            &scalar(&args.q, "q")?,
            match args.mode {
                ConfigMode::Particle => FelderhofMode::Particle,
                ConfigMode::Hole => FelderhofMode::Hole,
            },
        ),
        Formula::IkDeterminant => {
            let u = list(&args.u, "u")?;
            let m = args.m.unwrap_or(u.len());
            if u.len() != m {
                return Err(Error::ShapeMismatch(format!("--u has {} values, expected M = {m}", u.len())));
            }
            let q = per_site(&args.q, "q", m, None)?;
            let v = per_site(&args.v, "v", m, Some(F::one()))?;
            ik_determinant(&u, &q, &v, &scalar(&args.p, "p")?)
        }
        Formula::Dwbp => {
            let u = list(&args.u, "u")?;
            dwbp_bruteforce(&dwbp_model(args, u.len())?, &u, DEFAULT_SITE_CAP)
        }
        Formula::ScalarProduct => scalar_product_determinant(
            required(args.m, "M")?,
            &list(&args.u, "u")?,
            &list(&args.v, "v")?,
            &scalar(&args.beta, "beta")?,
            match args.reading {
                Reading::Printed => ElementReading::Printed,
                Reading::InverseBeta => ElementReading::InverseBeta,
            },
        ),
        Formula::BosonWavefunction => {
            let occ = integers(&args.occupations, "occupations")?;
            let m = args.m.unwrap_or(occ.len());
            let target = FockState::new(occ);
            let v = list(&args.v, "v")?;
            let beta = scalar(&args.beta, "beta")?;
            if args.dual {
                boson_dual_wavefunction(m, &target, &v, &beta)
            } else {
                boson_wavefunction(m, &target, &v, &beta)
            }
        }
    }
}

/// Text form of a result; constants print as exact rationals.
pub fn render(value: &F) -> String {
    value.to_text()
}
