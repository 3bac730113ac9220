//! Enumeration of small spaces, the theorem sweep and witness search.

pub mod enumerate;
pub mod properties;
pub mod query;
pub mod verify;
pub mod witness;

pub use enumerate::{enumerate_topologies, enumerate_with, Strategy, MAX_ENUMERATION_POINTS};
pub use query::{Binding, Query, QueryError};
pub use verify::{verify_theorems, verify_with, TheoremReport, Violation};
pub use witness::{find_witness, find_witness_str, Witness, WitnessError, WitnessOutcome};
