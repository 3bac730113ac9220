//! Generalized set classes built on the semi-open calculus.
//!
//! Predicates with more than one characterization take a form selector
//! (`*_via`). The plain method always uses the cheapest form; the other
//! forms exist so the theorem sweep can check that all of them agree.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::space::{intersection_above, Space};
use crate::subset::{submasks_ascending, MaskTable, Subset};

/// Ways to decide sg*-closedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgStarForm {
    /// Some semi-closed `F` with `A ⊆ F ⊆ kernel(A)`.
    KernelBound,
    /// Some semi-closed `F ⊇ A` lying inside every semi-open `O ⊇ A`.
    Definition,
    /// Some semi-closed `F ⊇ A` such that `F ∖ A` holds no non-void
    /// semi-closed set.
    Remainder,
}

/// Ways to decide sλ*-closedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlambdaForm {
    /// `A = K ∩ scl(P)` for some s∧τ-set `K` and some `P`.
    Definition,
    /// `A = kernel(A) ∩ scl(P)` for some `P`.
    KernelAnyClosure,
    /// `A = K ∩ scl(A)` for some s∧τ-set `K`.
    WedgeOwnClosure,
    /// `A = kernel(A) ∩ scl(A)`.
    KernelOwnClosure,
}

/// Ways to decide sλ*-openness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlambdaOpenForm {
    /// The complement is sλ*-closed.
    Complement,
    /// `A = N ∪ sInt(H)` for some s∨τ-set `N` and some `H`.
    VeeUnionInterior,
    /// `A = covee(A) ∪ sInt(A)`.
    CoveeOwnInterior,
}

impl Space {
    pub fn is_wedge_set(&self, a: Subset) -> bool {
        self.kernel(a) == a
    }

    pub fn is_vee_set(&self, a: Subset) -> bool {
        self.covee(a) == a
    }

    pub(crate) fn sg_star_closed_table(&self) -> &MaskTable {
        self.cache.sg_star_closed.get_or_init(|| {
            let mut t = MaskTable::new(self.n());
            for a in self.subsets() {
                if self.sg_star_closed_by_kernel(a) {
                    t.insert(a.bits());
                }
            }
            t
        })
    }

    fn sg_star_closed_by_kernel(&self, a: Subset) -> bool {
        // semi-closed members of the interval [A, kernel(A)]
        let k = self.kernel(a).bits();
        let semi_closed = self.semi_closed_table();
        submasks_ascending(k & !a.bits()).any(|extra| semi_closed.contains(a.bits() | extra))
    }

    pub fn is_sg_star_closed(&self, a: Subset) -> bool {
        self.sg_star_closed_table().contains(self.check(a))
    }

    pub fn is_sg_star_closed_via(&self, a: Subset, form: SgStarForm) -> bool {
        let bits = self.check(a);
        let semi_closed = self.semi_closed_family().masks();
        let supersets = semi_closed.iter().copied().filter(|f| f & bits == bits);
        match form {
            SgStarForm::KernelBound => self.sg_star_closed_by_kernel(a),
            SgStarForm::Definition => {
                let semi_open = self.semi_open_family().masks();
                supersets.into_iter().any(|f| semi_open.iter().filter(|&&o| o & bits == bits).all(|&o| f & !o == 0))
            }
            SgStarForm::Remainder => supersets.into_iter().any(|f| {
                let rest = f & !bits;
                !semi_closed.iter().any(|&c| c != 0 && c & !rest == 0)
            }),
        }
    }

    pub fn is_sg_star_open(&self, a: Subset) -> bool {
        self.is_sg_star_closed(a.complement())
    }

    /// `kernel(A)` lies inside every semi-closed superset of `A`.
    pub fn is_g_wedge_set(&self, a: Subset) -> bool {
        let bits = self.check(a);
        let k = self.kernel(a).bits();
        self.semi_closed_family().masks().iter().filter(|&&f| f & bits == bits).all(|&f| k & !f == 0)
    }

    pub fn is_g_vee_set(&self, a: Subset) -> bool {
        self.is_g_wedge_set(a.complement())
    }

    pub fn is_slambda_closed(&self, a: Subset) -> bool {
        self.kernel(a) & self.semi_closure(a) == a
    }

    pub fn is_slambda_closed_via(&self, a: Subset, form: SlambdaForm) -> bool {
        self.check(a);
        match form {
            SlambdaForm::KernelOwnClosure => self.is_slambda_closed(a),
            SlambdaForm::WedgeOwnClosure => {
                let scl = self.semi_closure(a);
                self.subsets().any(|k| self.is_wedge_set(k) && k & scl == a)
            }
            SlambdaForm::KernelAnyClosure => {
                let k = self.kernel(a);
                self.subsets().any(|p| k & self.semi_closure(p) == a)
            }
            SlambdaForm::Definition => self
                .subsets()
                .filter(|&k| self.is_wedge_set(k))
                .any(|k| self.subsets().any(|p| k & self.semi_closure(p) == a)),
        }
    }

    /// Witness `(K, P)` with `A = K ∩ scl(P)` and `K` an s∧τ-set, namely
    /// `(kernel(A), A)`, when `A` is sλ*-closed.
    pub fn decompose_slambda(&self, a: Subset) -> Option<(Subset, Subset)> {
        self.is_slambda_closed(a).then(|| (self.kernel(a), a))
    }

    pub fn is_slambda_open(&self, a: Subset) -> bool {
        self.covee(a) | self.semi_interior(a) == a
    }

    pub fn is_slambda_open_via(&self, a: Subset, form: SlambdaOpenForm) -> bool {
        self.check(a);
        match form {
            SlambdaOpenForm::CoveeOwnInterior => self.is_slambda_open(a),
            SlambdaOpenForm::Complement => self.is_slambda_closed(a.complement()),
            SlambdaOpenForm::VeeUnionInterior => self
                .subsets()
                .filter(|&nn| self.is_vee_set(nn))
                .any(|nn| self.subsets().any(|h| nn | self.semi_interior(h) == a)),
        }
    }

    /// Witness `(N, H)` with `A = N ∪ sInt(H)` and `N` an s∨τ-set, namely
    /// `(covee(A), A)`, when `A` is sλ*-open.
    pub fn decompose_slambda_open(&self, a: Subset) -> Option<(Subset, Subset)> {
        self.is_slambda_open(a).then(|| (self.covee(a), a))
    }

    /// Intersection of all sg*-closed supersets of `a`. Not assumed to be
    /// sg*-closed itself.
    pub fn sg_star_closure(&self, a: Subset) -> Subset {
        let bits = self.check(a);
        let t = self.cache.sg_star_closure.get_or_init(|| intersection_above(self.n(), self.sg_star_closed_table()));
        self.subset(t[bits as usize])
    }

    /// Membership in 𝓑: the semi-closure of the complement is semi-closed.
    pub fn in_b(&self, a: Subset) -> bool {
        self.is_semi_closed(self.semi_closure(a.complement()))
    }

    /// Membership in 𝓑′: the sg*-closure of the complement is sg*-closed.
    pub fn in_b_prime(&self, a: Subset) -> bool {
        self.is_sg_star_closed(self.sg_star_closure(a.complement()))
    }

    pub fn classify_subset(&self, a: Subset) -> SetClassification {
        self.check(a);
        SetClassification {
            subset: a,
            semi_open: self.is_semi_open(a),
            semi_closed: self.is_semi_closed(a),
            wedge: self.is_wedge_set(a),
            vee: self.is_vee_set(a),
            g_wedge: self.is_g_wedge_set(a),
            g_vee: self.is_g_vee_set(a),
            sg_star_closed: self.is_sg_star_closed(a),
            sg_star_open: self.is_sg_star_open(a),
            slambda_closed: self.is_slambda_closed(a),
            slambda_open: self.is_slambda_open(a),
            in_b: self.in_b(a),
            in_b_prime: self.in_b_prime(a),
        }
    }

    /// Classification of every subset, ascending by mask.
    pub fn classify_all_subsets(&self) -> Vec<SetClassification> {
        self.subsets().map(|a| self.classify_subset(a)).collect()
    }
}

/// Membership flags of one subset in every set class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SetClassification {
    pub subset: Subset,
    pub semi_open: bool,
    pub semi_closed: bool,
    pub wedge: bool,
    pub vee: bool,
    pub g_wedge: bool,
    pub g_vee: bool,
    pub sg_star_closed: bool,
    pub sg_star_open: bool,
    pub slambda_closed: bool,
    pub slambda_open: bool,
    #[serde(rename = "in_B")]
    pub in_b: bool,
    #[serde(rename = "in_B_prime")]
    pub in_b_prime: bool,
}

impl SetClassification {
    pub fn get(&self, class: SetClass) -> bool {
        match class {
            SetClass::SemiOpen => self.semi_open,
            SetClass::SemiClosed => self.semi_closed,
            SetClass::Wedge => self.wedge,
            SetClass::Vee => self.vee,
            SetClass::GWedge => self.g_wedge,
            SetClass::GVee => self.g_vee,
            SetClass::SgStarClosed => self.sg_star_closed,
            SetClass::SgStarOpen => self.sg_star_open,
            SetClass::SlambdaClosed => self.slambda_closed,
            SetClass::SlambdaOpen => self.slambda_open,
            SetClass::InB => self.in_b,
            SetClass::InBPrime => self.in_b_prime,
        }
    }
}

/// Names of the set classes, as used in queries and documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetClass {
    SemiOpen,
    SemiClosed,
    Wedge,
    Vee,
    GWedge,
    GVee,
    SgStarClosed,
    SgStarOpen,
    SlambdaClosed,
    SlambdaOpen,
    InB,
    InBPrime,
}

impl SetClass {
    pub const ALL: [SetClass; 12] = [
        SetClass::SemiOpen,
        SetClass::SemiClosed,
        SetClass::Wedge,
        SetClass::Vee,
        SetClass::GWedge,
        SetClass::GVee,
        SetClass::SgStarClosed,
        SetClass::SgStarOpen,
        SetClass::SlambdaClosed,
        SetClass::SlambdaOpen,
        SetClass::InB,
        SetClass::InBPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetClass::SemiOpen => "semi_open",
            SetClass::SemiClosed => "semi_closed",
            SetClass::Wedge => "wedge",
            SetClass::Vee => "vee",
            SetClass::GWedge => "g_wedge",
            SetClass::GVee => "g_vee",
            SetClass::SgStarClosed => "sg_star_closed",
            SetClass::SgStarOpen => "sg_star_open",
            SetClass::SlambdaClosed => "slambda_closed",
            SetClass::SlambdaOpen => "slambda_open",
            SetClass::InB => "in_B",
            SetClass::InBPrime => "in_B_prime",
        }
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetClass {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        SetClass::ALL.into_iter().find(|c| c.name() == s).ok_or(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts.iter().copied()).unwrap()
    }

    #[test]
    fn wedge_and_vee_examples() {
        let sp = Space::sierpinski();
        assert!(sp.is_wedge_set(s(2, &[0])));
        assert!(!sp.is_wedge_set(s(2, &[1])));
        assert!(sp.is_vee_set(s(2, &[1])));
        assert!(sp.is_wedge_set(sp.full()) && sp.is_vee_set(sp.full()));
    }

    #[test]
    fn sg_star_examples() {
        let sp = Space::sierpinski();
        assert!(sp.is_sg_star_closed(s(2, &[1])));
        assert!(!sp.is_sg_star_closed(s(2, &[0])));
        assert!(sp.is_sg_star_closed(sp.empty()));
        assert!(sp.is_sg_star_open(s(2, &[0])));
        assert!(!sp.is_sg_star_open(s(2, &[1])));
        assert!(sp.is_sg_star_open(sp.full()));
        for a in sp.subsets() {
            for form in [SgStarForm::KernelBound, SgStarForm::Definition, SgStarForm::Remainder] {
                assert_eq!(sp.is_sg_star_closed_via(a, form), sp.is_sg_star_closed(a), "{a} {form:?}");
            }
        }
    }

    #[test]
    fn g_wedge_examples() {
        let sp = Space::sierpinski();
        assert!(!sp.is_g_wedge_set(s(2, &[1])));
        assert!(sp.is_g_wedge_set(s(2, &[0])));
        assert!(sp.is_g_wedge_set(sp.full()));
    }

    #[test]
    fn slambda_closed_examples() {
        let sp = Space::sierpinski();
        assert!(sp.is_slambda_closed(s(2, &[0])));
        assert!(sp.is_slambda_closed(s(2, &[1])));
        assert!(!Space::indiscrete(2).is_slambda_closed(s(2, &[0])));
        assert_eq!(sp.decompose_slambda(s(2, &[1])), Some((sp.full(), s(2, &[1]))));
        assert_eq!(sp.decompose_slambda(sp.full()), Some((sp.full(), sp.full())));
        assert_eq!(Space::indiscrete(2).decompose_slambda(s(2, &[0])), None);
    }

    #[test]
    fn slambda_open_examples() {
        let sp = Space::sierpinski();
        assert!(sp.is_slambda_open(s(2, &[0])));
        assert_eq!(sp.decompose_slambda_open(s(2, &[0])), Some((sp.empty(), s(2, &[0]))));
        assert!(sp.is_slambda_open(s(2, &[1])));
        assert_eq!(sp.decompose_slambda_open(s(2, &[1])), Some((s(2, &[1]), s(2, &[1]))));
        let ind = Space::indiscrete(2);
        assert!(!ind.is_slambda_open(s(2, &[0])));
        assert_eq!(ind.decompose_slambda_open(s(2, &[0])), None);
    }

    #[test]
    fn sg_star_closure_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.sg_star_closure(s(2, &[0])), sp.full());
        assert_eq!(sp.sg_star_closure(s(2, &[1])), s(2, &[1]));
        assert_eq!(sp.sg_star_closure(sp.full()), sp.full());
    }

    #[test]
    fn b_collections_examples() {
        let sp = Space::sierpinski();
        for a in sp.subsets() {
            assert!(sp.in_b(a) && sp.in_b_prime(a));
        }
        let ind = Space::indiscrete(3);
        assert!(ind.in_b(ind.empty()) && ind.in_b_prime(ind.empty()));
    }

    #[test]
    fn classification_examples() {
        let sp = Space::sierpinski();
        let c = sp.classify_subset(s(2, &[1]));
        assert!(!c.semi_open && c.semi_closed && !c.wedge && c.vee);
        assert!(c.sg_star_closed && c.slambda_closed);

        let d = Space::discrete(3);
        for c in d.classify_all_subsets() {
            assert!(c.semi_open && c.semi_closed && c.wedge && c.vee);
            assert!(c.slambda_closed && c.slambda_open && c.sg_star_closed);
        }

        // sg*-closed but not sλ*-closed
        let c = Space::indiscrete(2).classify_subset(s(2, &[0]));
        assert!(c.sg_star_closed);
        assert!(!c.slambda_closed);
    }

    #[test]
    fn class_names_round_trip() {
        for c in SetClass::ALL {
            assert_eq!(c.name().parse::<SetClass>(), Ok(c));
        }
        assert!("semi_T0".parse::<SetClass>().is_err());
    }
}
