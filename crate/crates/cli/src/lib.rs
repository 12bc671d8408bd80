//! Library surface of the `simulate` front end: configuration parsing, run
//! orchestration and CSV persistence.

pub mod config;
pub mod output;
pub mod runner;
