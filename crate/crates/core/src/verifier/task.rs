//! Task identifiers, size profiles and per-task metadata.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

macro_rules! tasks {
    ($($variant:ident => $id:literal, $about:literal, $anchor:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TaskId {
            $($variant,)*
        }

        impl TaskId {
            pub const ALL: &'static [TaskId] = &[$(TaskId::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(TaskId::$variant => $id,)*
                }
            }

            /// What the task checks, in one line.
            pub fn about(self) -> &'static str {
                match self {
                    $(TaskId::$variant => $about,)*
                }
            }

            /// Where the identity lives, named by its subject.
            pub fn anchor(self) -> &'static str {
                match self {
                    $(TaskId::$variant => $anchor,)*
                }
            }
        }
    };
}

tasks! {
    YbeXxz => "YBE-XXZ",
        "RLL relation of the XXZ L-operator with the XXZ R-matrix",
        "Yang-Baxter relation, XXZ R-matrix";
    RllGenXxz => "RLL-GenXXZ",
        "RLL relation of the generalized L-operator at the q-beta parameter choice",
        "generalized L-operator and its parameter constraints";
    RllQBeta => "RLL-QBeta",
        "RLL relations of the q-beta, five-vertex and beta six-vertex L-operators",
        "q-beta L-operator; five-vertex and beta six-vertex L-operators";
    YbeFelderhof => "YBE-Felderhof",
        "RLL relations of the Felderhof-type L-operators with their R-matrices",
        "generalized Yang-Baxter relation of the Felderhof model";
    QBetaWavefunction => "Thm2.1-QBetaWavefunction",
        "q-beta wavefunction: symmetrization formula against lattice contraction",
        "wavefunction of the q-beta model";
    CorrespondenceQ0 => "Eq-Correspondence-q0",
        "q = 0 reduction of the q-beta formula to Grothendieck polynomials",
        "q = 0 correspondence with Grothendieck polynomials";
    FelderhofParticle => "Thm3.1-FelderhofParticle",
        "Felderhof wavefunction determinant for particle positions against contraction",
        "Felderhof wavefunction, particle configurations";
    FelderhofHole => "Thm3.2-FelderhofHole",
        "Felderhof wavefunction determinant for hole positions against contraction",
        "Felderhof wavefunction, hole configurations";
    Algebra => "Lemma3.3-Algebra",
        "matrix-product operator algebra relations and the trace formula",
        "matrix-product recursion and its exchange relations";
    StepConfig => "Prop-StepConfig",
        "product formula for the packed configuration against contraction",
        "Felderhof wavefunction of the packed configuration";
    IkDeterminant => "Lemma3.4-IKDeterminant",
        "inhomogeneous domain wall partition function and its homogeneous limit",
        "domain wall boundary partition function with inhomogeneities";
    FiveVertexWavefunction => "Thm4.1-FiveVertexWavefunction",
        "five-vertex wavefunctions and duals as Grothendieck polynomials",
        "five-vertex model wavefunctions";
    ScalarProduct => "Thm4.2-ScalarProduct",
        "five-vertex scalar product determinant against contraction and completeness",
        "scalar product of the five-vertex model";
    Cauchy => "Thm4.3-Cauchy",
        "Cauchy identity for Grothendieck polynomials",
        "Cauchy identity for Grothendieck polynomials";
    DualCauchyFelderhof => "Eq-DualCauchy-Felderhof",
        "Felderhof domain wall partition function via completeness and the dual Cauchy formula",
        "dual Cauchy formula from hole wavefunctions";
    DualCauchyClassical => "Eq-DualCauchy-Classical",
        "classical dual Cauchy identity at q = 0, t = -p^2",
        "classical dual Cauchy identity";
    CombinatorialSchur => "Thm5.1-CombinatorialSchur",
        "interlacing-chain formula for Schur polynomials, independent of beta",
        "combinatorial formula for Schur polynomials";
    BosonWavefunction => "Thm5.2-BosonWavefunction",
        "phase-model wavefunctions and duals as Grothendieck polynomials",
        "nonhermitian phase model wavefunctions";
    GenFactorialWavefunction => "Thm5.4-GenFactorialWavefunction",
        "generalized Felderhof wavefunction as a generalized factorial Schur function",
        "generalized factorial Schur functions";
    FactorialDualCauchy => "Thm5.5-FactorialDualCauchy",
        "dual Cauchy formula for generalized factorial Schur functions",
        "dual Cauchy formula, factorial case";
    SymplecticDualCauchy => "Thm5.6-SymplecticDualCauchy",
        "dual Cauchy formula for generalized symplectic Schur functions",
        "dual Cauchy formula, symplectic case";
}

impl fmt::Display for TaskId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TaskId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TaskId::ALL
            .iter()
            .copied()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown task {s:?}")))
    }
}

/// Glob match of a filter against task ids. The pattern may match anywhere
/// in the id; `all` is an alias for `*`.
pub fn matching_tasks(pattern: &str) -> Result<Vec<TaskId>, Error> {
    if pattern == "all" {
        return Ok(TaskId::ALL.to_vec());
    }
    let lead = if pattern.starts_with('*') { "" } else { "*" };
    let tail = if pattern.ends_with('*') { "" } else { "*" };
    let glob = glob::Pattern::new(&format!("{lead}{pattern}{tail}"))
        .map_err(|e| Error::Parse(format!("bad task filter {pattern:?}: {e}")))?;
    Ok(TaskId::ALL.iter().copied().filter(|t| glob.matches(t.id())).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Smallest nontrivial sizes, one point per instance.
    Smoke,
    /// Sizes of the acceptance checks.
    Standard,
    /// Up to the module caps.
    Deep,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Smoke => "smoke",
            Profile::Standard => "standard",
            Profile::Deep => "deep",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "smoke" => Ok(Profile::Smoke),
            "standard" => Ok(Profile::Standard),
            "deep" => Ok(Profile::Deep),
            _ => Err(Error::Parse(format!("unknown profile {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact evaluation at sampled rational points.
    Point,
    /// Exact rational-function arithmetic with every variable symbolic.
    Symbolic,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_filters() {
        assert_eq!(TaskId::ALL.len(), 21);
        for t in TaskId::ALL {
            assert_eq!(t.id().parse::<TaskId>().unwrap(), *t);
        }
        assert_eq!(matching_tasks("*").unwrap().len(), 21);
        assert_eq!(matching_tasks("all").unwrap().len(), 21);
        assert_eq!(matching_tasks("YBE-*").unwrap().len(), 2);
        assert_eq!(matching_tasks("Thm4.3-Cauchy").unwrap(), vec![TaskId::Cauchy]);
        assert!(matching_tasks("NoSuchTask").unwrap().is_empty());
    }
}
