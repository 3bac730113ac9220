//! Semi-open set calculus on explicit finite spaces.
//!
//! A [`Space`] is a validated topology on at most 16 points. On top of it
//! the crate computes semi-open and semi-closed families, the semi-kernel
//! and its dual, the generalized closed-set classes (sg*-closed,
//! sλ*-closed, ...), and the semi separation axioms between semi-T0 and
//! semi-Tω. The [`search`] module enumerates all topologies on up to five
//! points, sweeps the registered properties over them, and looks for
//! witnesses of predicate queries.

pub mod axioms;
pub mod classes;
pub mod document;
pub mod error;
pub mod search;
pub mod semiops;
pub mod space;
pub mod subset;

pub use axioms::{classify_space, AxiomError, AxiomFlag, AxiomProfile};
pub use classes::{SetClass, SetClassification, SgStarForm, SlambdaForm, SlambdaOpenForm};
pub use document::{DocumentError, Report, SpaceDocument};
pub use error::{ArgumentError, SpaceError};
pub use space::{CanonicalForm, Space, MAX_CANONICAL_POINTS};
pub use subset::{SetFamily, Subset, MAX_POINTS};
