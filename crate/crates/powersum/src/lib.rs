//! Command-line front end and reporting for `powersum-core`.
//!
//! [`run`] parses arguments, executes one subcommand and returns a
//! [`RunReport`]; the binary prints it as line-delimited JSON (schema in
//! [`report`]).

pub mod audit;
mod cli;
pub mod fixtures;
pub mod pool;
pub mod report;

pub use cli::run;
pub use report::{Erratum, Record, RunReport};
