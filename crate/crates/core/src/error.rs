//! Shared error type for invariant-checked constructors.

use thiserror::Error;

/// A constructor or configuration argument that violates a documented
/// invariant. `field` names the offending value so callers (notably the CLI)
/// can produce pointed diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid `{field}`: {reason}")]
pub struct InvalidParam {
    pub field: &'static str,
    pub reason: &'static str,
}

impl InvalidParam {
    pub(crate) fn new(field: &'static str, reason: &'static str) -> Self {
        Self { field, reason }
    }
}
