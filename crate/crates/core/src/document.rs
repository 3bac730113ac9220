//! JSON documents: space files, classification reports and witness results.
//!
//! Subsets appear as sorted arrays of point indices, never as masks.

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::axioms::{classify_space, AxiomError, AxiomProfile};
use crate::classes::SetClassification;
use crate::error::SpaceError;
use crate::search::witness::WitnessOutcome;
use crate::search::Binding;
use crate::space::Space;
use crate::subset::{SetFamily, Subset};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest ground set whose subset table is included by default.
pub const SUBSET_TABLE_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("point name `{0}` appears more than once")]
    DuplicatePoint(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

impl DocumentError {
    pub fn kind(&self) -> &'static str {
        match self {
            DocumentError::Parse(_) => "Parse",
            DocumentError::DuplicatePoint(_) => "DuplicatePoint",
            DocumentError::Space(e) => e.kind(),
        }
    }
}

/// A space as stored on disk: named points and open sets given by point
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
}

impl SpaceDocument {
    /// Points are named by their indices.
    pub fn from_space(space: &Space) -> Self {
        SpaceDocument {
            points: space.points().map(|i| i.to_string()).collect(),
            opens: space.opens().iter().map(|s| s.points().collect()).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// Decodes and validates. Duplicate open sets are merged.
    pub fn to_space(&self) -> Result<Space, DocumentError> {
        let mut names: Vec<&String> = self.points.iter().collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(DocumentError::DuplicatePoint(w[0].clone()));
        }
        let n = self.points.len();
        if n == 0 || n > crate::subset::MAX_POINTS {
            return Err(SpaceError::InvalidGroundSize(n).into());
        }
        let members =
            self.opens.iter().map(|o| Subset::from_points(n, o.iter().copied())).collect::<Result<Vec<_>, _>>()?;
        Ok(Space::new(n, SetFamily::new(n, members)?)?)
    }
}

impl Serialize for Space {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpaceDocument::from_space(self).serialize(serializer)
    }
}

/// Classification report for one space.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub engine_version: &'static str,
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
    pub profile: AxiomProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<Vec<SetClassification>>,
}

impl Report {
    /// Builds the report. The subset table is included when the ground set
    /// has at most [`SUBSET_TABLE_LIMIT`] points or `all_subsets` is set.
    pub fn build(doc: &SpaceDocument, space: &Space, all_subsets: bool) -> Result<Report, AxiomError> {
        let profile = classify_space(space)?;
        let subsets = (all_subsets || space.n() <= SUBSET_TABLE_LIMIT).then(|| space.classify_all_subsets());
        Ok(Report {
            engine_version: ENGINE_VERSION,
            points: doc.points.clone(),
            opens: SpaceDocument::from_space(space).opens,
            profile,
            subsets,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessBody<'a> {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
    pub bindings: &'a [Binding],
    pub profile: &'a AxiomProfile,
}

/// Result of a witness search as a document; `witness` is null when the
/// search was exhausted.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessDocument<'a> {
    pub query: &'a str,
    pub n_max: usize,
    pub outcome: &'static str,
    pub witness: Option<WitnessBody<'a>>,
}

impl<'a> WitnessDocument<'a> {
    pub fn new(query: &'a str, n_max: usize, outcome: &'a WitnessOutcome) -> Self {
        match outcome {
            WitnessOutcome::Found(w) => {
                let doc = SpaceDocument::from_space(&w.space);
                WitnessDocument {
                    query,
                    n_max,
                    outcome: "found",
                    witness: Some(WitnessBody {
                        points: doc.points,
                        opens: doc.opens,
                        bindings: &w.bindings,
                        profile: &w.profile,
                    }),
                }
            }
            WitnessOutcome::ExhaustedNone { .. } => {
                WitnessDocument { query, n_max, outcome: "exhausted_none", witness: None }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let sp = Space::from_masks(3, [0, 1, 2, 3, 7]).unwrap();
        let doc = SpaceDocument::from_space(&sp);
        assert_eq!(doc.to_json(), r#"{"points":["0","1","2"],"opens":[[],[0],[1],[0,1],[0,1,2]]}"#);
        let back = SpaceDocument::from_json(&doc.to_json()).unwrap().to_space().unwrap();
        assert_eq!(back, sp);
    }

    #[test]
    fn decode_errors_are_named() {
        let kind = |s: &str| SpaceDocument::from_json(s).and_then(|d| d.to_space()).unwrap_err().kind();
        assert_eq!(kind(r#"{"points":["a","b"],"opens":[[],[0]]}"#), "MissingFull");
        assert_eq!(kind(r#"{"points":["a","b"],"opens":[[0],[0,1]]}"#), "MissingEmpty");
        assert_eq!(kind(r#"{"points":["a","a"],"opens":[[],[0,1]]}"#), "DuplicatePoint");
        assert_eq!(kind(r#"{"points":["a"],"opens":[[],[0],[3]]}"#), "PointOutOfRange");
        assert_eq!(kind(r#"{"points":[],"opens":[]}"#), "InvalidGroundSize");
        assert_eq!(kind(r#"{"points":["a"]"#), "Parse");
        assert_eq!(kind(r#"{"points":["a","b","c"],"opens":[[],[0],[1],[0,1,2]]}"#), "NotClosedUnderUnion");
    }

    #[test]
    fn duplicate_opens_merge() {
        let d = SpaceDocument::from_json(r#"{"points":["x","y"],"opens":[[],[0],[0],[1,0]]}"#).unwrap();
        assert_eq!(d.to_space().unwrap(), Space::sierpinski());
    }

    #[test]
    fn report_keeps_names_and_fields() {
        let d = SpaceDocument::from_json(r#"{"points":["x","y"],"opens":[[],[0],[0,1]]}"#).unwrap();
        let r = Report::build(&d, &d.to_space().unwrap(), false).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["points"], serde_json::json!(["x", "y"]));
        assert_eq!(v["profile"]["semi_T0"], true);
        assert_eq!(v["profile"]["semi_T1"], false);
        assert_eq!(v["subsets"].as_array().unwrap().len(), 4);
        assert_eq!(v["subsets"][2]["subset"], serde_json::json!([1]));
    }
}
