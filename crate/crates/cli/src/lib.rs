//! File formats, reports and subcommand drivers for the `invsg` command line tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{
    cmd_close, cmd_criterion, cmd_germs, cmd_props, cmd_symbolic, FamilyKind, GermSource, Options, SymbolicQuery,
};
pub use error::CliError;
pub use report::RunReport;
