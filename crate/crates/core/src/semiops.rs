//! The semi-open calculus: semi-open and semi-closed families and the
//! operators built on them.
//!
//! Every operator is backed by a table over all `2^n` subsets, filled on
//! first use by a subset-lattice transform of the relevant membership
//! bitmap. The tables are exact: `kernel(A)` is the intersection of all
//! semi-open supersets of `A`, not an approximation of it.

use crate::error::ArgumentError;
use crate::space::{intersection_above, table_of, union_below, Space};
use crate::subset::{full_mask, submasks_ascending, MaskTable, SetFamily, Subset};

impl Space {
    pub(crate) fn semi_open_table(&self) -> &MaskTable {
        self.cache.semi_open_table.get_or_init(|| {
            // Mark every interval [G, cl(G)] for open G.
            let mut t = MaskTable::new(self.n());
            for g in self.opens().iter() {
                let cl = self.closure(g);
                let free = cl.bits() & !g.bits();
                for extra in submasks_ascending(free) {
                    t.insert(g.bits() | extra);
                }
            }
            t
        })
    }

    pub(crate) fn semi_closed_table(&self) -> &MaskTable {
        self.cache.semi_closed_table.get_or_init(|| table_of(self.n(), self.semi_closed_family().masks()))
    }

    /// All `A` with `G ⊆ A ⊆ cl(G)` for some open `G`.
    pub fn semi_open_family(&self) -> &SetFamily {
        self.cache.semi_open.get_or_init(|| SetFamily::from_table(self.n(), self.semi_open_table()))
    }

    /// Complements of the semi-open sets.
    pub fn semi_closed_family(&self) -> &SetFamily {
        self.cache.semi_closed.get_or_init(|| {
            let full = full_mask(self.n());
            let masks = self.semi_open_family().masks().iter().map(|m| !m & full).collect();
            SetFamily::from_masks_unchecked(self.n(), masks)
        })
    }

    pub fn is_semi_open(&self, a: Subset) -> bool {
        self.semi_open_table().contains(self.check(a))
    }

    pub fn is_semi_closed(&self, a: Subset) -> bool {
        self.semi_open_table().contains(self.check(a.complement()))
    }

    /// Intersection of all semi-closed supersets of `a`.
    pub fn semi_closure(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.semi_closure.get_or_init(|| intersection_above(self.n(), self.semi_closed_table()));
        self.subset(t[bits as usize])
    }

    /// Union of all semi-open subsets of `a`.
    pub fn semi_interior(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.semi_interior.get_or_init(|| union_below(self.n(), self.semi_open_table()));
        self.subset(t[bits as usize])
    }

    /// Semi-kernel: intersection of all semi-open supersets of `a`.
    pub fn kernel(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.kernel.get_or_init(|| intersection_above(self.n(), self.semi_open_table()));
        self.subset(t[bits as usize])
    }

    /// Union of all semi-closed subsets of `a`.
    pub fn covee(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.covee.get_or_init(|| union_below(self.n(), self.semi_closed_table()));
        self.subset(t[bits as usize])
    }

    /// Points every semi-open neighbourhood of which meets `a` outside the
    /// point itself.
    pub fn semi_derived(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let mut out = 0u16;
        for x in self.points() {
            let xbit = 1u16 << x;
            let others = bits & !xbit;
            let limit = self.semi_open_family().masks().iter().filter(|&&u| u & xbit != 0).all(|&u| u & others != 0);
            if limit {
                out |= xbit;
            }
        }
        self.subset(out)
    }

    /// Whether non-void `a` and `b` sit in semi-open sets `U ⊇ a`, `V ⊇ b`
    /// with `a ∩ V = b ∩ U = ∅`.
    pub fn semi_separated(&self, a: Subset, b: Subset) -> Result<bool, ArgumentError> {
        let (abits, bbits) = (self.check(a), self.check(b));
        if abits == 0 || bbits == 0 {
            return Err(ArgumentError::EmptyArgument);
        }
        let family = self.semi_open_family().masks();
        let u = family.iter().any(|&u| u & abits == abits && u & bbits == 0);
        let v = family.iter().any(|&v| v & bbits == bbits && v & abits == 0);
        Ok(u && v)
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
    fn semi_open_family_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.semi_open_family().masks(), &[0b00, 0b01, 0b11]);
        let t = three_point();
        assert_eq!(t.semi_open_family().masks(), &[0, 1, 2, 3, 5, 6, 7]);
        assert!(!t.is_semi_open(s(3, &[2])));
        assert_eq!(Space::discrete(4).semi_open_family().len(), 16);
    }

    #[test]
    fn membership_examples() {
        let sp = Space::sierpinski();
        assert!(!sp.is_semi_open(s(2, &[1])));
        assert!(sp.is_semi_closed(s(2, &[1])));
        assert!(sp.is_semi_open(sp.empty()) && sp.is_semi_closed(sp.empty()));
        assert!(three_point().is_semi_open(s(3, &[0, 2])));
    }

    #[test]
    fn semi_closure_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.semi_closure(s(2, &[0])), sp.full());
        assert_eq!(sp.semi_closure(s(2, &[1])), s(2, &[1]));
        assert_eq!(sp.semi_closure(sp.full()), sp.full());
    }

    #[test]
    fn semi_derived_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.semi_derived(s(2, &[0])), s(2, &[1]));
        assert_eq!(sp.semi_derived(s(2, &[1])), sp.empty());
        let d = Space::discrete(3);
        for a in d.subsets() {
            assert!(d.semi_derived(a).is_empty());
        }
    }

    #[test]
    fn semi_interior_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.semi_interior(s(2, &[1])), sp.empty());
        assert_eq!(sp.semi_interior(sp.full()), sp.full());
        assert_eq!(three_point().semi_interior(s(3, &[2])), s(3, &[]));
    }

    #[test]
    fn kernel_and_covee_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.kernel(s(2, &[1])), sp.full());
        assert_eq!(sp.kernel(s(2, &[0])), s(2, &[0]));
        assert_eq!(sp.kernel(sp.full()), sp.full());
        assert_eq!(sp.covee(s(2, &[0])), sp.empty());
        assert_eq!(sp.covee(s(2, &[1])), s(2, &[1]));
        assert_eq!(sp.covee(sp.empty()), sp.empty());
    }

    #[test]
    fn semi_separation_examples() {
        let (a, b) = (s(2, &[0]), s(2, &[1]));
        assert_eq!(Space::discrete(2).semi_separated(a, b), Ok(true));
        assert_eq!(Space::indiscrete(2).semi_separated(a, b), Ok(false));
        assert_eq!(Space::sierpinski().semi_separated(a, b), Ok(false));
        assert_eq!(Space::sierpinski().semi_separated(s(2, &[]), b), Err(ArgumentError::EmptyArgument));
    }

    #[test]
    fn semi_open_sets_need_not_meet_in_a_semi_open_set() {
        let t = three_point();
        let (a, b) = (s(3, &[0, 2]), s(3, &[1, 2]));
        assert!(t.is_semi_open(a) && t.is_semi_open(b));
        assert!(!t.is_semi_open(a & b));
    }
}
