//! Acceptance suite: one line per criterion, each under its pinned time
//! limit. Run with `cargo test -p bethe-symm --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use bethe_symm::symfunc::ElementReading;
use bethe_symm::verifier::{
    instances, negative_control, resolve_element_reading, run_task, Mode, Profile, RunOptions, TaskId,
    NEGATIVE_CONTROL_TASKS, VERTEX_WEIGHT_ENTRIES,
};

const SEED: u64 = 20240611;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn standard() -> RunOptions {
    RunOptions::new(Profile::Standard, SEED)
}

/// Runs the tasks and requires every sampled instance to pass.
fn tasks(list: &[TaskId], opts: &RunOptions) -> Outcome {
    let mut checked = 0;
    for &t in list {
        let r = run_task(t, opts).map_err(|e| format!("{t}: {e}"))?;
        if r.instances == 0 {
            return Err(format!("{t}: no instances"));
        }
        if !r.passed() {
            return Err(format!("{}; first failure {:?}", r.summary_line(), r.failures.first()));
        }
        checked += r.instances;
    }
    Ok(format!("{checked} checks"))
}

fn sized(task: TaskId, key: &str) -> Vec<usize> {
    let mut v: Vec<usize> = instances(task, Profile::Standard)
        .iter()
        .filter(|i| i.sizes.iter().any(|&(k, _)| k == key))
        .map(|i| i.size(key))
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn require(cond: bool, what: &str) -> Result<(), String> {
    cond.then_some(()).ok_or_else(|| format!("coverage: {what}"))
}

fn c1() -> Outcome {
    tasks(&[TaskId::YbeXxz, TaskId::RllGenXxz, TaskId::RllQBeta, TaskId::YbeFelderhof], &standard())
}

fn c2() -> Outcome {
    require(sized(TaskId::QBetaWavefunction, "M").ends_with(&[4]), "M up to 4")?;
    require(sized(TaskId::QBetaWavefunction, "N") == [1, 2], "N up to 2")?;
    tasks(&[TaskId::QBetaWavefunction], &standard())
}

fn c3() -> Outcome {
    require(
        instances(TaskId::CorrespondenceQ0, Profile::Standard)
            .iter()
            .any(|i| i.size("M") == 4 && i.size("N") == 2),
        "M = 4, lambda in the 2x2 box",
    )?;
    tasks(&[TaskId::CorrespondenceQ0], &standard())
}

fn c4() -> Outcome {
    require(sized(TaskId::FelderhofHole, "M").ends_with(&[4]), "M up to 4")?;
    tasks(&[TaskId::FelderhofParticle, TaskId::FelderhofHole], &standard())
}

fn c5() -> Outcome {
    require(sized(TaskId::Algebra, "n").ends_with(&[4]), "levels up to 4")?;
    tasks(&[TaskId::Algebra, TaskId::StepConfig], &standard())
}

fn c6() -> Outcome {
    let mut symbolic = standard();
    symbolic.mode = Mode::Symbolic;
    symbolic.max_size = Some(3);
    let a = tasks(&[TaskId::IkDeterminant], &symbolic)?;
    let b = tasks(&[TaskId::IkDeterminant], &standard())?;
    Ok(format!("symbolic {a}, points {b}"))
}

fn c7() -> Outcome {
    let ok = resolve_element_reading(SEED, 2).map_err(|e| e.to_string())?;
    if ok != [ElementReading::InverseBeta] {
        return Err(format!("matching readings: {:?}", ok.iter().map(|r| r.name()).collect::<Vec<_>>()));
    }
    let r = tasks(&[TaskId::ScalarProduct], &standard())?;
    Ok(format!("reading {}, {r}", ElementReading::InverseBeta.name()))
}

fn c8() -> Outcome {
    tasks(&[TaskId::Cauchy], &standard())
}

fn c9() -> Outcome {
    tasks(&[TaskId::DualCauchyFelderhof, TaskId::DualCauchyClassical], &standard())
}

fn c10() -> Outcome {
    tasks(&[TaskId::CombinatorialSchur], &standard())
}

fn c11() -> Outcome {
    require(sized(TaskId::BosonWavefunction, "N").ends_with(&[3]), "N up to 3")?;
    tasks(&[TaskId::BosonWavefunction], &standard())
}

fn c12() -> Outcome {
    tasks(
        &[TaskId::GenFactorialWavefunction, TaskId::FactorialDualCauchy, TaskId::SymplecticDualCauchy],
        &standard(),
    )
}

fn c13() -> Outcome {
    let mut caught = Vec::new();
    for entry in VERTEX_WEIGHT_ENTRIES {
        let failing = negative_control(entry, Profile::Standard, SEED).map_err(|e| e.to_string())?;
        if !failing.iter().any(|t| NEGATIVE_CONTROL_TASKS.contains(t)) {
            return Err(format!("perturbing entry {entry:?} went unnoticed"));
        }
        caught.push(failing.len());
    }
    Ok(format!("every weight entry caught (failing tasks per entry {caught:?})"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 13] = [
        ("Yang-Baxter and RLL relations", 5, c1),
        ("q-beta wavefunction", 30, c2),
        ("q = 0 Grothendieck correspondence", 10, c3),
        ("Felderhof particle and hole wavefunctions", 30, c4),
        ("matrix-product algebra, packed configuration, trace", 60, c5),
        ("inhomogeneous domain wall determinant", 60, c6),
        ("scalar product and its element convention", 30, c7),
        ("Grothendieck Cauchy identity", 60, c8),
        ("Felderhof and classical dual Cauchy", 60, c9),
        ("combinatorial Schur formula", 60, c10),
        ("phase model wavefunctions", 120, c11),
        ("factorial and symplectic identities", 120, c12),
        ("negative control", 30, c13),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > Duration::from_secs(*limit) => Err(format!("{msg}; exceeded {limit} s")),
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!("criterion {:>2} {tag} [{:.2?} / {limit} s] {name}: {msg}", i + 1, took);
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
