//! Command-line companion to [`tensym_core`]: JSON interchange formats for
//! tensors, bilinear forms, and degeneration families, plus the `tensym`
//! binary's subcommands (`analyze`, `zoo`, `verify-theorem`, `bform`,
//! `borderrank`, `degenerate`).
//!
//! The core crate does all the mathematics; this crate only reads and
//! writes documents, routes arguments, and renders reports.  [`cli::run`]
//! is the whole binary behind an injectable argv and output streams, so
//! integration tests can drive it in-process and assert on exit codes and
//! bytes.

pub mod cli;
pub mod io;
pub mod report;

pub use cli::{run, run_from_env};
