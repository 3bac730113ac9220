//! Smallest-space search for queries.

use serde::Serialize;
use thiserror::Error;

use super::enumerate::{enumerate_topologies, MAX_ENUMERATION_POINTS};
use super::query::{Binding, EvalContext, Query, QueryError};
use crate::axioms::{classify_space, AxiomError, AxiomProfile};
use crate::error::SpaceError;
use crate::space::Space;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub space: Space,
    pub bindings: Vec<Binding>,
    pub profile: AxiomProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found(Box<Witness>),
    /// No space on at most `n_max` points satisfies the query.
    ExhaustedNone {
        n_max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
}

impl WitnessError {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessError::Query(e) => e.kind(),
            WitnessError::Space(e) => e.kind(),
            WitnessError::Axiom(_) => "DualPathDisagreement",
        }
    }
}

/// Parses `src` and searches for a witness.
pub fn find_witness_str(src: &str, n_max: usize) -> Result<WitnessOutcome, WitnessError> {
    find_witness(&Query::parse(src)?, n_max)
}

/// Scans canonical spaces on `1..=n_max` points in ascending canonical
/// form and returns the first one satisfying `query`, with the least
/// satisfying bindings.
pub fn find_witness(query: &Query, n_max: usize) -> Result<WitnessOutcome, WitnessError> {
    if n_max > MAX_ENUMERATION_POINTS {
        return Err(SpaceError::GroundTooLarge { n: n_max, max: MAX_ENUMERATION_POINTS }.into());
    }
    let needs_profile = query.uses_flags();
    for n in 1..=n_max {
        for space in enumerate_topologies(n, true)? {
            let profile = if needs_profile { Some(classify_space(&space)?) } else { None };
            let classes = space.classify_all_subsets();
            let ctx = EvalContext { n, profile: profile.as_ref(), classes: &classes };
            if let Some(bindings) = query.evaluate(&ctx) {
                let profile = match profile {
                    Some(p) => p,
                    None => classify_space(&space)?,
                };
                return Ok(WitnessOutcome::Found(Box::new(Witness { space, bindings, profile })));
            }
        }
    }
    Ok(WitnessOutcome::ExhaustedNone { n_max })
}
