//! File format, report types, and command implementations for the `dqmat`
//! binary, split out as a library so integration tests can drive the same
//! code paths the CLI uses.

pub mod commands;
pub mod format;
pub mod report;
pub mod verify;
