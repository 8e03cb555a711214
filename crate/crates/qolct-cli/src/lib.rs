//! Command-line front end: config parsing, field and tensor serialization,
//! the pinned verification suite, and the subcommand bodies.

pub mod commands;
pub mod config;
pub mod io;
pub mod report;
pub mod suite;
