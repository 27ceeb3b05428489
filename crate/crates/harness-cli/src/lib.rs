//! Library surface of the sweep harness; the `twelvej` binary is a thin
//! wrapper over these modules.

pub mod cache;
pub mod config;
pub mod csvout;
pub mod sweep;
pub mod verify;
