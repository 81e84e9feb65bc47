//! Command-line front end: the triple file format, reports, and the
//! `symsym` subcommands.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, CliError, Outcome, EXIT_INPUT, EXIT_MATH, EXIT_OK};
pub use format::{parse_triple, serialize_triple, ParseError, TripleFile};
pub use report::{Fields, Format, Report, Status, Value};
