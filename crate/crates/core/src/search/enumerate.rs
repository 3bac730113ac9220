//! Exhaustive enumeration of topologies on small ground sets.
//!
//! Families are handled as `u64` bitsets indexed by subset mask, which is
//! enough for ground sets of up to six points.

use std::collections::BTreeMap;

use crate::error::SpaceError;
use crate::space::Space;
use crate::subset::{full_mask, SetFamily};

/// Largest ground set [`enumerate_topologies`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// Largest ground set the direct family filter accepts.
pub const MAX_FILTER_POINTS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Test every family containing `∅` and `X` for closure.
    Filter,
    /// Grow families one subset at a time, closing under `∪`/`∩` after
    /// each step, in lectic order.
    Incremental,
}

impl Strategy {
    /// The filter up to [`MAX_FILTER_POINTS`], the incremental builder
    /// beyond.
    pub fn default_for(n: usize) -> Strategy {
        if n <= MAX_FILTER_POINTS {
            Strategy::Filter
        } else {
            Strategy::Incremental
        }
    }
}

/// Every topology on `n` points, or one canonical representative per
/// homeomorphism class when `up_to_homeo` is set. Sorted ascending by
/// serialized open family.
pub fn enumerate_topologies(n: usize, up_to_homeo: bool) -> Result<Vec<Space>, SpaceError> {
    enumerate_with(n, up_to_homeo, Strategy::default_for(n))
}

pub fn enumerate_with(n: usize, up_to_homeo: bool, strategy: Strategy) -> Result<Vec<Space>, SpaceError> {
    if n == 0 {
        return Err(SpaceError::InvalidGroundSize(0));
    }
    let families = match strategy {
        Strategy::Filter => filter_families(n)?,
        Strategy::Incremental => incremental_families(n)?,
    };
    let spaces = families.into_iter().map(|fam| space_of(n, fam));
    if up_to_homeo {
        let mut classes = BTreeMap::new();
        for sp in spaces {
            let rep = sp.canonical_space()?;
            classes.entry(rep.labeled_form()).or_insert(rep);
        }
        Ok(classes.into_values().collect())
    } else {
        let mut all: Vec<Space> = spaces.collect();
        all.sort_by_cached_key(Space::labeled_form);
        Ok(all)
    }
}

fn space_of(n: usize, fam: u64) -> Space {
    let masks = (0..64u32).filter(|m| fam & (1 << m) != 0);
    Space::from_masks(n, masks).expect("enumerated family is a topology")
}

fn is_lattice(fam: u64) -> bool {
    let members: Vec<u32> = (0..64).filter(|m| fam & (1u64 << m) != 0).collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| fam & (1u64 << (a | b)) != 0 && fam & (1u64 << (a & b)) != 0))
}

fn filter_families(n: usize) -> Result<Vec<u64>, SpaceError> {
    if n > MAX_FILTER_POINTS {
        return Err(SpaceError::GroundTooLarge { n, max: MAX_FILTER_POINTS });
    }
    let full = u32::from(full_mask(n));
    let base = 1u64 | (1u64 << full);
    let free = full.saturating_sub(1); // candidate masks 1..full-1
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << free) {
        let fam = base | (choice << 1);
        if is_lattice(fam) {
            out.push(fam);
        }
    }
    Ok(out)
}

/// Smallest family containing `fam`, `∅` and `X` closed under `∪` and `∩`.
fn close(fam: u64, full: u32) -> u64 {
    let mut fam = fam | 1 | (1u64 << full);
    loop {
        let members: Vec<u32> = (0..=full).filter(|m| fam & (1u64 << m) != 0).collect();
        let mut grown = fam;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                grown |= (1u64 << (a | b)) | (1u64 << (a & b));
            }
        }
        if grown == fam {
            return fam;
        }
        fam = grown;
    }
}

/// Lectic-order enumeration of all closed families: each step extends the
/// current family by one candidate subset and closes it, keeping the
/// result only if closing added nothing below the new subset.
fn incremental_families(n: usize) -> Result<Vec<u64>, SpaceError> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(SpaceError::GroundTooLarge { n, max: MAX_ENUMERATION_POINTS });
    }
    let full = u32::from(full_mask(n));
    // candidate index i stands for subset mask i + 1
    let m = full.saturating_sub(1) as usize;
    let cand_mask = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let to_family = |a: u64| (a << 1) | 1 | (1u64 << full);
    let from_family = |f: u64| (f >> 1) & cand_mask;
    let closure = |a: u64| from_family(close(to_family(a), full));

    let mut current = closure(0);
    let mut out = vec![to_family(current)];
    'next: loop {
        for i in (0..m).rev() {
            let bit = 1u64 << i;
            if current & bit != 0 {
                continue;
            }
            let below = bit - 1;
            let candidate = closure((current & below) | bit);
            if candidate & below == current & below {
                current = candidate;
                out.push(to_family(current));
                continue 'next;
            }
        }
        break;
    }
    Ok(out)
}

/// Every family over `n` points accepted by [`Space::new`], found by brute
/// force over all families containing `∅` and `X`; kept as an oracle for
/// the enumerators.
pub fn brute_force_family_count(n: usize) -> Result<usize, SpaceError> {
    if n > MAX_FILTER_POINTS {
        return Err(SpaceError::GroundTooLarge { n, max: MAX_FILTER_POINTS });
    }
    let full = u32::from(full_mask(n));
    let free = full.saturating_sub(1);
    let mut count = 0;
    for choice in 0u64..(1u64 << free) {
        let masks = (0..=full).filter(|&m| m == 0 || m == full || choice & (1u64 << (m - 1)) != 0);
        let family = SetFamily::from_masks(n, masks)?;
        if Space::new(n, family).is_ok() {
            count += 1;
        }
    }
    Ok(count)
}
