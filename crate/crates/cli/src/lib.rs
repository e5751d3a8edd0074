//! Command-line front end for canonical bases of quantum Schubert cells.
//!
//! The library half holds the commands, the bundled reference tables and the
//! invariant suite so that tests can drive them without a subprocess.

pub mod cache;
pub mod commands;
pub mod config;
pub mod golden;
pub mod named;
pub mod render;
pub mod suite;

use qschubert_braid::BraidError;
use qschubert_canon::CanonError;
use qschubert_freealg::FreeError;
use qschubert_pbw::PbwError;
use qschubert_rootdata::RootError;
use thiserror::Error;

pub use commands::{run, Command, Report};
pub use config::{CheckLevel, DatumSource, Format, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, words, data files or oversized degrees: exit code 2.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Malformed bundled or supplied tables: exit code 2.
    #[error("bad table: {0}")]
    Data(String),
    /// A computation failed in a way that is not a reported check: exit code 1.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Data(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<PbwError> for CliError {
    fn from(e: PbwError) -> Self {
        match e {
            PbwError::DegreeTooLarge(_) | PbwError::InvalidArgument(_) => CliError::Invalid(e.to_string()),
            e => CliError::Compute(e.to_string()),
        }
    }
}

impl From<FreeError> for CliError {
    fn from(e: FreeError) -> Self {
        PbwError::from(e).into()
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::Free(f) => f.into(),
            e => CliError::Compute(e.to_string()),
        }
    }
}

impl From<CanonError> for CliError {
    fn from(e: CanonError) -> Self {
        match e {
            CanonError::Pbw(p) => p.into(),
            CanonError::Braid(b) => b.into(),
            CanonError::Root(r) => r.into(),
            CanonError::FrameMismatch | CanonError::LengthNotAdditive | CanonError::InvalidArgument(_) => {
                CliError::Invalid(e.to_string())
            }
            e => CliError::Compute(e.to_string()),
        }
    }
}
