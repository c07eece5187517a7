//! Running tasks and suites.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{ExactRational, Field, RationalFunction};
use crate::error::{Error, Result};

use super::report::{Failure, VerificationReport};
use super::sample::{is_singular, rng_from_seed, PointSource, SymbolicSource, RESAMPLE_LIMIT};
use super::task::{matching_tasks, Mode, Profile, TaskId};
use super::tasks::{evaluate, instances, points, Check, Context, Instance};

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub profile: Profile,
    pub seed: u64,
    pub mode: Mode,
    /// Skip instances with any size above this bound.
    pub max_size: Option<usize>,
    pub context: Context,
}

impl RunOptions {
    pub fn new(profile: Profile, seed: u64) -> Self {
        Self {
            profile,
            seed,
            mode: Mode::Point,
            max_size: None,
            context: Context::default(),
        }
    }
}

/// Per-task seed: FNV-1a of the id folded with the run seed.
fn task_seed(seed: u64, task: TaskId) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in task.id().bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.rotate_left(17)
}

/// First comparison whose sides differ.
fn first_mismatch<F: Field>(checks: &[Check<F>]) -> Option<&Check<F>> {
    checks.iter().find(|c| c.lhs != c.rhs)
}

fn failure<F: Field>(inst: &Instance, c: &Check<F>, mut inputs: BTreeMap<String, String>) -> Failure {
    inputs.insert("instance".into(), inst.label());
    inputs.insert("check".into(), c.name.into());
    Failure {
        inputs,
        lhs: c.lhs.to_text(),
        rhs: c.rhs.to_text(),
    }
}

pub fn run_task(task: TaskId, opts: &RunOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rng = rng_from_seed(task_seed(opts.seed, task));
    let mut report = VerificationReport {
        task: task.id().into(),
        profile: opts.profile.name().into(),
        seed: opts.seed,
        instances: 0,
        passes: 0,
        failures: Vec::new(),
        millis: 0,
    };
    let list = instances(task, opts.profile);
    let list = list
        .iter()
        .filter(|i| opts.max_size.is_none_or(|cap| i.sizes.iter().all(|&(_, v)| v <= cap)));
    for inst in list {
        match opts.mode {
            Mode::Symbolic => {
                let checks = evaluate::<RationalFunction>(task, inst, &mut SymbolicSource, &opts.context)?;
                report.instances += 1;
                match first_mismatch(&checks) {
                    None => report.passes += 1,
                    Some(c) => report.failures.push(failure(inst, c, BTreeMap::new())),
                }
            }
            Mode::Point => {
                for _ in 0..points(task, opts.profile) {
                    let mut attempts = 0;
                    loop {
                        attempts += 1;
                        if attempts > RESAMPLE_LIMIT {
                            return Err(Error::SamplingExhausted(RESAMPLE_LIMIT));
                        }
                        let mut src = PointSource::new(&mut rng);
                        let checks = match evaluate::<ExactRational>(task, inst, &mut src, &opts.context) {
                            Ok(c) => c,
                            Err(e) if is_singular(&e) => continue,
                            Err(e) => return Err(e),
                        };
                        report.instances += 1;
                        match first_mismatch(&checks) {
                            None => report.passes += 1,
                            Some(c) => {
                                let inputs = src
                                    .assignment
                                    .iter()
                                    .map(|(k, v)| (k.to_string(), v.to_string()))
                                    .collect();
                                report.failures.push(failure(inst, c, inputs));
                            }
                        }
                        break;
                    }
                }
            }
        }
    }
    report.millis = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs every task whose id matches `filter`, in parallel, returning reports
/// in task order.
pub fn run_suite(filter: &str, opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    let tasks = matching_tasks(filter)?;
    tasks.par_iter().map(|&t| run_task(t, opts)).collect()
}

/// Tasks whose lattice side is built from a single L-operator.
pub const NEGATIVE_CONTROL_TASKS: [TaskId; 4] = [
    TaskId::QBetaWavefunction,
    TaskId::FelderhofParticle,
    TaskId::FelderhofHole,
    TaskId::IkDeterminant,
];

/// The six vertex weights as (out, in) entries of the L-operator. The other
/// ten entries change the particle number by two, so a single one of them
/// cannot contribute to any N-particle overlap.
pub const VERTEX_WEIGHT_ENTRIES: [(usize, usize); 6] = [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 3)];

/// Runs the control tasks with L-operator entry `entry` (out, in) shifted by
/// +1 and returns the ones that failed.
pub fn negative_control(entry: (usize, usize), profile: Profile, seed: u64) -> Result<Vec<TaskId>> {
    let mut opts = RunOptions::new(profile, seed);
    opts.context.perturb = Some(entry);
    let reports: Result<Vec<_>> = NEGATIVE_CONTROL_TASKS
        .par_iter()
        .map(|&t| run_task(t, &opts).map(|r| (t, r)))
        .collect();
    Ok(reports?
        .into_iter()
        .filter(|(_, r)| !r.passed())
        .map(|(t, _)| t)
        .collect())
}
