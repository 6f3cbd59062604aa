//! Property suites, counterexample search and the `permlab` command line
//! built on the `permlab` group library.

pub mod cli;
pub mod error;
pub mod member;
pub mod report;
pub mod runner;
pub mod search;
pub mod subspec;
pub mod suites;

pub use error::CliError;
pub use member::Member;
pub use report::SuiteReport;
