//! Exhaustive theorem sweep over every labeled space up to a size bound.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_topologies;
use super::properties::{registry, Property, SpaceContext, Tally};
use crate::error::SpaceError;
use crate::space::Space;
use crate::subset::SetFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceCount {
    pub n: usize,
    pub spaces: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub spaces_checked: u64,
    pub instances_checked: u64,
    pub violation_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: &'static str,
    pub points: usize,
    pub opens: SetFamily,
    pub detail: String,
}

impl Violation {
    fn sort_key(&self) -> (&'static str, usize, &[u16], &str) {
        (self.property, self.points, self.opens.masks(), &self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n_max: usize,
    pub spaces_per_n: Vec<SpaceCount>,
    pub properties: Vec<PropertyResult>,
    pub violations: Vec<Violation>,
    /// Kept out of serialized reports so they stay byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// Runs the full property registry over every space on `1..=n_max` points.
pub fn verify_theorems(n_max: usize) -> Result<TheoremReport, SpaceError> {
    verify_with(n_max, registry())
}

pub fn verify_with(n_max: usize, properties: &[Property]) -> Result<TheoremReport, SpaceError> {
    let start = Instant::now();
    let mut spaces_per_n = Vec::new();
    let mut spaces = Vec::new();
    for n in 1..=n_max {
        let batch = enumerate_topologies(n, false)?;
        spaces_per_n.push(SpaceCount { n, spaces: batch.len() });
        spaces.extend(batch);
    }

    let per_space: Vec<Vec<Tally>> = spaces.par_iter().map(|sp| check_space(sp, properties)).collect();

    let mut results: Vec<PropertyResult> = properties
        .iter()
        .map(|p| PropertyResult {
            name: p.name,
            statement: p.statement,
            spaces_checked: 0,
            instances_checked: 0,
            violation_count: 0,
        })
        .collect();
    let mut violations = Vec::new();
    for (sp, tallies) in spaces.iter().zip(per_space) {
        for ((res, prop), tally) in results.iter_mut().zip(properties).zip(tallies) {
            res.spaces_checked += 1;
            res.instances_checked += tally.instances;
            res.violation_count += tally.failures.len() as u64;
            violations.extend(tally.failures.into_iter().map(|detail| Violation {
                property: prop.name,
                points: sp.n(),
                opens: sp.opens().clone(),
                detail,
            }));
        }
    }
    violations.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    Ok(TheoremReport { n_max, spaces_per_n, properties: results, violations, wall_time: start.elapsed() })
}

fn check_space(space: &Space, properties: &[Property]) -> Vec<Tally> {
    let ctx = SpaceContext::new(space);
    properties
        .iter()
        .map(|p| {
            let mut t = Tally::default();
            (p.check)(&ctx, &mut t);
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_sweep_passes() {
        let r = verify_theorems(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.spaces_per_n, vec![SpaceCount { n: 1, spaces: 1 }]);
        assert!(r.properties.iter().all(|p| p.spaces_checked == 1));
    }

    #[test]
    fn three_point_sweep_passes() {
        let r = verify_theorems(3).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let chain = r.property("separation_chain").unwrap();
        assert_eq!(chain.spaces_checked, 1 + 4 + 29);
    }

    #[test]
    fn violations_are_collected_not_fatal() {
        fn always_fails(c: &SpaceContext<'_>, t: &mut Tally) {
            for a in c.subsets().filter(|a| a.len() == 1) {
                t.check(false, || format!("A={a}"));
            }
        }
        let props = [Property { name: "broken", statement: "never holds", check: always_fails }];
        let r = verify_with(2, &props).unwrap();
        assert!(!r.passed());
        // 1 space on one point, 4 on two points, one violation per singleton
        assert_eq!(r.violations.len(), 1 + 4 * 2);
        assert!(r.violations.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));
    }
}
