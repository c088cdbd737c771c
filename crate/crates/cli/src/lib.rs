//! Command-line front end: array ingestion, query answering, verification
//! against the brute-force oracle, and seeded benchmarks.

pub mod bench;
pub mod error;
pub mod input;
pub mod run;
pub mod structures;
pub mod verify;

pub use error::{CliError, Result};
