//! Verification suites over (n, k) grids and density tables for `wronskian-core`.

pub mod config;
pub mod density;
pub mod report;
pub mod suites;

pub use config::{FileConfig, Format, Suite, SuiteConfig};
pub use report::{emit_table, CellRecord, SuiteReport};
pub use suites::run_suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}
