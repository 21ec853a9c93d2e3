//! JSON spec runner for the `frechet` library.
//!
//! A spec names a field, an optional function, a command and its
//! parameters. [`parse_spec`] validates it completely before anything is
//! computed; [`run`] dispatches it and returns the result document, the
//! exit code and, for sampling commands, the point cloud.

pub mod output;
mod run;
pub mod spec;

pub use output::{render, Output};
pub use run::{run, Outcome, RunOptions};
pub use spec::{parse_spec, Command, ProblemSpec, SpecError};

/// Exit code for malformed specs, bad usage and evaluation errors.
pub const EXIT_USAGE: i32 = 2;
