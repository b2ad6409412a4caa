//! Command-line front end for `macllt`: output formats, a persistent cache
//! and the verification suites.

pub mod app;
pub mod cache;
pub mod output;
pub mod suites;

pub use app::{execute, Cli, CliError, Outcome};
pub use suites::{Suite, VerificationReport};
