//! Renderers and command implementations behind the `monster` binary.

pub mod ascii;
pub mod commands;
pub mod dot;
pub mod schema;

use thiserror::Error;

pub use schema::ChainDocument;

/// Environment variable overriding the series truncation order of `prolong`.
pub const TRUNCATION_ORDER_VAR: &str = "MONSTER_TRUNCATION_ORDER";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Ascii,
    Dot,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

/// Read [`TRUNCATION_ORDER_VAR`]; unset means the default order.
pub fn truncation_order_override() -> Result<Option<usize>, CliError> {
    match std::env::var(TRUNCATION_ORDER_VAR) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| {
                CliError::Usage(format!("{TRUNCATION_ORDER_VAR}={v:?} is not a positive integer"))
            }),
    }
}
