//! A solver for structured bipolar argumentation frameworks: arguments
//! with explicit premises and conclusions, attacks derived from sentence
//! incompatibility, set-valued support, and extension semantics on both
//! the argument and the sentence level, next to deductive-support
//! semantics for plain bipolar frameworks.

pub mod af;
pub mod baf;
pub mod bits;
pub mod coherence;
pub mod error;
pub mod io;
pub mod language;
pub mod model;
pub mod report;
pub mod verify;

pub use af::{Af, DungSemantics, DEFAULT_ARG_CAP};
pub use baf::{Baf, SupportRule};
pub use bits::Bits;
pub use error::{Error, Result};
pub use language::{FixpointTrace, DEFAULT_SENT_CAP};
pub use model::{Sbaf, SbafBuilder};
pub use report::{check, props, solve, Mode, ResultDocument, SemanticsTag, SolveOptions};
