//! Identity checking at exact sampled points, with reports.

pub mod report;
pub mod sample;
pub mod suite;
pub mod task;
pub mod tasks;

pub use report::{Failure, VerificationReport};
pub use sample::{sample_point, sample_rational, PointSource, Source, SymbolicSource, RESAMPLE_LIMIT};
pub use suite::{negative_control, run_suite, run_task, RunOptions, NEGATIVE_CONTROL_TASKS, VERTEX_WEIGHT_ENTRIES};
pub use task::{matching_tasks, Mode, Profile, TaskId};
pub use tasks::{evaluate, instances, points, resolve_element_reading, Check, Context, Instance};
