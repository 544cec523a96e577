//! Independent oracles and verification batteries.

pub mod lemmas;
pub mod oracle;
mod report;
mod suites;
pub mod traces;

pub use oracle::{oracle_decompose, oracle_decompose_many, LabelFamily, OracleError};
pub use report::{Report, Violation};
pub use suites::{
    dimension_check, run_suite, sample_indices, zero_z_factorization, SuiteError, SuiteOptions,
    DEFAULT_SAMPLES, DEFAULT_SEED, MAX_DIMENSION, SUITES,
};
