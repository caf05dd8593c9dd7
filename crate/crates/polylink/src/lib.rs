//! File formats, the convergence harness and the command-line front end for
//! [`polylink_core`].

pub mod cli;
pub mod config;
mod error;
pub mod harness;
pub mod io;

pub use config::{ExperimentConfig, KRule, Output};
pub use error::{HarnessError, Result};
pub use harness::{run_convergence_experiment, run_to_writer, Row, CSV_COLUMNS};
