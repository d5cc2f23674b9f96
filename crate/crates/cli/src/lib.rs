//! Library surface of the command-line tool: run configuration, the ideal
//! file format, report types, and the scenario registry. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod config;
pub mod format;
pub mod report;
pub mod scenarios;
