//! Verification support: canned fixtures, seeded random generation,
//! brute-force oracles and the proposition suite.

pub mod fixtures;
pub mod gen;
pub mod oracle;
pub mod suite;

pub use gen::{gen_baf, gen_sbaf, gen_single_premise_sbaf, GenConfig};
pub use oracle::{oracle_arg_w, oracle_preferred};
pub use suite::{run_suite, PropositionId, PropositionReport, SuiteConfig, Witness};
