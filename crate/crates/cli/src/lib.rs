//! Command line front end: polynomial parsing, command dispatch, and text or
//! JSON reports.

pub mod args;
pub mod parse;
pub mod run;

pub use args::Cli;
pub use parse::{parse_polynomial, parse_rationals, ParseError};
pub use run::{run, Exit, Outcome};
