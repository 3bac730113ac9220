//! Validated finite spaces: open families, closure and interior, and
//! canonical forms up to homeomorphism.

use std::fmt;
use std::sync::OnceLock;

use crate::error::SpaceError;
use crate::subset::{full_mask, MaskTable, SetFamily, Subset, MAX_POINTS};

/// Default bound on the permutation scan behind [`Space::canonical_form`].
pub const MAX_CANONICAL_POINTS: usize = 7;

/// A finite space given by its open sets.
///
/// The open family contains the empty set and the whole ground set and is
/// closed under pairwise union and intersection, so it is a topology. All
/// derived families and operator tables are computed on first use and
/// cached; a `Space` is otherwise an immutable value.
#[derive(Clone)]
pub struct Space {
    n: u8,
    opens: SetFamily,
    open_table: MaskTable,
    pub(crate) cache: Cache,
}

/// Lazily filled derived data. Each cell is written at most once.
#[derive(Clone, Default)]
pub(crate) struct Cache {
    closed: OnceLock<SetFamily>,
    closed_table: OnceLock<MaskTable>,
    closure: OnceLock<Vec<u16>>,
    interior: OnceLock<Vec<u16>>,
    pub(crate) semi_open_table: OnceLock<MaskTable>,
    pub(crate) semi_closed_table: OnceLock<MaskTable>,
    pub(crate) semi_open: OnceLock<SetFamily>,
    pub(crate) semi_closed: OnceLock<SetFamily>,
    pub(crate) semi_closure: OnceLock<Vec<u16>>,
    pub(crate) semi_interior: OnceLock<Vec<u16>>,
    pub(crate) kernel: OnceLock<Vec<u16>>,
    pub(crate) covee: OnceLock<Vec<u16>>,
    pub(crate) sg_star_closed: OnceLock<MaskTable>,
    pub(crate) sg_star_closure: OnceLock<Vec<u16>>,
}

/// Canonical serialization of a space up to relabeling of points.
///
/// Byte 0 is the ground size, followed by the open sets in ascending mask
/// order as big-endian `u16`s.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

pub(crate) fn serialize_family(n: usize, masks: &[u16]) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 2 * masks.len());
    out.push(n as u8);
    for m in masks {
        out.extend_from_slice(&m.to_be_bytes());
    }
    out
}

/// `out[A]` = union of all members `B ⊆ A` (empty when there are none).
pub(crate) fn union_below(n: usize, members: &MaskTable) -> Vec<u16> {
    let size = 1usize << n;
    let mut t: Vec<u16> = (0..size).map(|m| if members.contains(m as u16) { m as u16 } else { 0 }).collect();
    for i in 0..n {
        let bit = 1usize << i;
        for a in 0..size {
            if a & bit != 0 {
                t[a] |= t[a ^ bit];
            }
        }
    }
    t
}

/// `out[A]` = intersection of all members `B ⊇ A` (the full set when there
/// are none).
pub(crate) fn intersection_above(n: usize, members: &MaskTable) -> Vec<u16> {
    let size = 1usize << n;
    let full = full_mask(n);
    let mut t: Vec<u16> = (0..size).map(|m| if members.contains(m as u16) { m as u16 } else { full }).collect();
    for i in 0..n {
        let bit = 1usize << i;
        for a in 0..size {
            if a & bit == 0 {
                t[a] &= t[a | bit];
            }
        }
    }
    t
}

impl Space {
    /// Validates an open family and builds the space.
    pub fn new(n: usize, opens: SetFamily) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        if opens.n() != n {
            return Err(SpaceError::InvalidGroundSize(opens.n()));
        }
        let table = table_of(n, opens.masks());
        if !table.contains(0) {
            return Err(SpaceError::MissingEmpty);
        }
        if !table.contains(full_mask(n)) {
            return Err(SpaceError::MissingFull);
        }
        let unions_ok = union_below(n, &table).iter().all(|&m| table.contains(m));
        let meets_ok = intersection_above(n, &table).iter().all(|&m| table.contains(m));
        if !(unions_ok && meets_ok) {
            return Err(first_bad_pair(n, &opens, &table));
        }
        Ok(Space { n: n as u8, opens, open_table: table, cache: Cache::default() })
    }

    /// Convenience wrapper over [`Space::new`] taking raw masks.
    pub fn from_masks<I: IntoIterator<Item = u32>>(n: usize, masks: I) -> Result<Self, SpaceError> {
        Space::new(n, SetFamily::from_masks(n, masks)?)
    }

    /// Smallest topology containing `subbasis`.
    pub fn complete(n: usize, subbasis: &SetFamily) -> Result<Self, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SpaceError::InvalidGroundSize(n));
        }
        if subbasis.n() != n {
            return Err(SpaceError::InvalidGroundSize(subbasis.n()));
        }
        let mut table = MaskTable::new(n);
        let mut members: Vec<u16> = Vec::new();
        let mut pending: Vec<u16> = vec![0, full_mask(n)];
        pending.extend_from_slice(subbasis.masks());
        while let Some(m) = pending.pop() {
            if table.contains(m) {
                continue;
            }
            table.insert(m);
            for &other in &members {
                for c in [m | other, m & other] {
                    if !table.contains(c) {
                        pending.push(c);
                    }
                }
            }
            members.push(m);
        }
        let opens = SetFamily::from_masks_unchecked(n, members);
        Space::new(n, opens)
    }

    pub fn discrete(n: usize) -> Self {
        let masks = (0..=u32::from(full_mask(n))).collect::<Vec<_>>();
        Space::from_masks(n, masks).expect("power set is a topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        Space::from_masks(n, [0, u32::from(full_mask(n))]).expect("indiscrete topology")
    }

    /// Two points, open sets `∅`, `{0}`, `X`.
    pub fn sierpinski() -> Self {
        Space::from_masks(2, [0, 1, 3]).expect("Sierpiński topology")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.n())
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    /// All `2^n` subsets of the ground set.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n())
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    #[inline]
    pub(crate) fn check(&self, a: Subset) -> u16 {
        assert_eq!(a.n(), self.n(), "subset {a} does not belong to a {}-point space", self.n());
        a.bits()
    }

    #[inline]
    pub(crate) fn subset(&self, bits: u16) -> Subset {
        Subset::raw(self.n(), bits)
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.open_table.contains(self.check(a))
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.closed_table().contains(self.check(a))
    }

    pub fn closed_family(&self) -> &SetFamily {
        self.cache.closed.get_or_init(|| {
            let full = full_mask(self.n());
            let masks = self.opens.masks().iter().map(|m| !m & full).collect();
            SetFamily::from_masks_unchecked(self.n(), masks)
        })
    }

    pub(crate) fn closed_table(&self) -> &MaskTable {
        self.cache.closed_table.get_or_init(|| table_of(self.n(), self.closed_family().masks()))
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.closure.get_or_init(|| intersection_above(self.n(), self.closed_table()));
        self.subset(t[bits as usize])
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.interior.get_or_init(|| union_below(self.n(), &self.open_table));
        self.subset(t[bits as usize])
    }

    /// Image of the space under the point relabeling `i -> perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Space {
        assert_eq!(perm.len(), self.n());
        let masks = self.opens.iter().map(|s| s.permute(perm).bits()).collect();
        let opens = SetFamily::from_masks_unchecked(self.n(), masks);
        let open_table = table_of(self.n(), opens.masks());
        Space { n: self.n, opens, open_table, cache: Cache::default() }
    }

    /// Serialization of the open family under the current labeling.
    pub fn labeled_form(&self) -> CanonicalForm {
        CanonicalForm(serialize_family(self.n(), self.opens.masks()))
    }

    /// Least serialized open family over all relabelings of points.
    pub fn canonical_form(&self) -> Result<CanonicalForm, SpaceError> {
        self.canonical_form_bounded(MAX_CANONICAL_POINTS)
    }

    pub fn canonical_form_bounded(&self, max_points: usize) -> Result<CanonicalForm, SpaceError> {
        Ok(CanonicalForm(serialize_family(self.n(), &self.canonical_masks(max_points)?.1)))
    }

    /// The relabeled copy of this space whose labeled form is its
    /// canonical form.
    pub fn canonical_space(&self) -> Result<Space, SpaceError> {
        let (perm, _) = self.canonical_masks(MAX_CANONICAL_POINTS)?;
        Ok(self.relabel(&perm))
    }

    fn canonical_masks(&self, max_points: usize) -> Result<(Vec<usize>, Vec<u16>), SpaceError> {
        let n = self.n();
        if n > max_points {
            return Err(SpaceError::GroundTooLarge { n, max: max_points });
        }
        let mut best_perm: Vec<usize> = (0..n).collect();
        let mut best: Vec<u16> = self.opens.masks().to_vec();
        let mut scratch = Vec::with_capacity(best.len());
        for_each_permutation(n, |perm| {
            scratch.clear();
            scratch.extend(self.opens.iter().map(|s| s.permute(perm).bits()));
            scratch.sort_unstable();
            if scratch < best {
                best.clone_from(&scratch);
                best_perm.copy_from_slice(perm);
            }
        });
        Ok((best_perm, best))
    }

    pub fn is_homeomorphic(&self, other: &Space) -> Result<bool, SpaceError> {
        if self.n() != other.n() || self.opens.len() != other.opens.len() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Space").field("n", &self.n).field("opens", &self.opens).finish()
    }
}

pub(crate) fn table_of(n: usize, masks: &[u16]) -> MaskTable {
    let mut t = MaskTable::new(n);
    for &m in masks {
        t.insert(m);
    }
    t
}

fn first_bad_pair(n: usize, opens: &SetFamily, table: &MaskTable) -> SpaceError {
    let members = opens.masks();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !table.contains(a | b) {
                return SpaceError::NotClosedUnderUnion(Subset::raw(n, a), Subset::raw(n, b));
            }
            if !table.contains(a & b) {
                return SpaceError::NotClosedUnderIntersection(Subset::raw(n, a), Subset::raw(n, b));
            }
        }
    }
    unreachable!("zeta check failed but every pair is closed")
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts.iter().copied()).unwrap()
    }

    fn three_point() -> Space {
        Space::from_masks(3, [0b000, 0b001, 0b010, 0b011, 0b111]).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(Space::from_masks(2, [0, 1, 3]).is_ok());
        assert_eq!(Space::from_masks(2, [0, 1, 2]).unwrap_err(), SpaceError::MissingFull);
        assert_eq!(Space::from_masks(2, [1, 3]).unwrap_err(), SpaceError::MissingEmpty);
        assert_eq!(
            Space::from_masks(3, [0, 1, 2, 7]).unwrap_err(),
            SpaceError::NotClosedUnderUnion(s(3, &[0]), s(3, &[1]))
        );
        assert_eq!(
            Space::from_masks(3, [0, 3, 6, 7]).unwrap_err(),
            SpaceError::NotClosedUnderIntersection(s(3, &[0, 1]), s(3, &[1, 2]))
        );
    }

    #[test]
    fn closure_and_interior_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.closure(s(2, &[0])), s(2, &[0, 1]));
        assert_eq!(sp.closure(s(2, &[1])), s(2, &[1]));
        assert_eq!(sp.closure(sp.empty()), sp.empty());
        assert_eq!(sp.interior(s(2, &[1])), sp.empty());
        assert_eq!(sp.interior(sp.full()), sp.full());
        assert_eq!(three_point().interior(s(3, &[0, 2])), s(3, &[0]));
    }

    #[test]
    fn complete_examples() {
        let sub = SetFamily::from_masks(2, [1]).unwrap();
        assert_eq!(Space::complete(2, &sub).unwrap(), Space::sierpinski());
        let sub = SetFamily::from_masks(3, [1, 2]).unwrap();
        assert_eq!(Space::complete(3, &sub).unwrap(), three_point());
        let sub = SetFamily::from_masks(3, []).unwrap();
        assert_eq!(Space::complete(3, &sub).unwrap(), Space::indiscrete(3));
    }

    #[test]
    fn canonical_form_examples() {
        let twin = Space::from_masks(2, [0, 2, 3]).unwrap();
        assert_eq!(Space::sierpinski().canonical_form(), twin.canonical_form());
        assert_ne!(Space::discrete(2).canonical_form(), Space::sierpinski().canonical_form());
        let ind = Space::indiscrete(3);
        let c = ind.canonical_form().unwrap();
        for_each_permutation(3, |p| assert_eq!(ind.relabel(p).canonical_form().unwrap(), c));
        assert_eq!(twin.canonical_space().unwrap(), Space::sierpinski());
        assert_eq!(Space::discrete(8).canonical_form().unwrap_err(), SpaceError::GroundTooLarge { n: 8, max: 7 });
    }

    #[test]
    fn permutations_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_permutation(3, |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[5], vec![2, 1, 0]);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
        let mut one = 0;
        for_each_permutation(1, |_| one += 1);
        assert_eq!(one, 1);
    }

    #[test]
    fn large_discrete_space_is_cheap() {
        let sp = Space::discrete(16);
        let a = Subset::from_bits(16, 0xA5A5).unwrap();
        assert_eq!(sp.closure(a), a);
        assert_eq!(sp.interior(a), a);
    }
}
