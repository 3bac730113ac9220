//! Space-level separation axioms and auxiliary conditions.
//!
//! Every flag that has a characterization is evaluated along each of its
//! routes: the literal definition and one or more characterizations. The
//! first route listed for a flag is the one reported; [`classify_space`]
//! fails if any two routes disagree.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::space::Space;
use crate::subset::{full_mask, submasks_ascending, Subset};

/// Note attached to every profile about quantifier ranges collapsing.
pub const FINITE_COLLAPSE_NOTE: &str = "on a finite ground set every subset is finite and countable, \
so semi_T_omega_4, semi_T_3omega_8 and semi_T_5omega_8 quantify over the same subsets; \
they were computed independently and necessarily coincide";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomFlag {
    SemiT0,
    SemiT1,
    SemiTOmega,
    SemiTOmega4,
    SemiT3Omega8,
    SemiT5Omega8,
    SemiR0,
    WeakSemiR0,
    SemiSymmetric,
    StronglySemiSymmetric,
    ConditionP,
    BEqBPrime,
}

impl AxiomFlag {
    pub const ALL: [AxiomFlag; 12] = [
        AxiomFlag::SemiT0,
        AxiomFlag::SemiT1,
        AxiomFlag::SemiTOmega,
        AxiomFlag::SemiTOmega4,
        AxiomFlag::SemiT3Omega8,
        AxiomFlag::SemiT5Omega8,
        AxiomFlag::SemiR0,
        AxiomFlag::WeakSemiR0,
        AxiomFlag::SemiSymmetric,
        AxiomFlag::StronglySemiSymmetric,
        AxiomFlag::ConditionP,
        AxiomFlag::BEqBPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomFlag::SemiT0 => "semi_T0",
            AxiomFlag::SemiT1 => "semi_T1",
            AxiomFlag::SemiTOmega => "semi_T_omega",
            AxiomFlag::SemiTOmega4 => "semi_T_omega_4",
            AxiomFlag::SemiT3Omega8 => "semi_T_3omega_8",
            AxiomFlag::SemiT5Omega8 => "semi_T_5omega_8",
            AxiomFlag::SemiR0 => "semi_R0",
            AxiomFlag::WeakSemiR0 => "weak_semi_R0",
            AxiomFlag::SemiSymmetric => "semi_symmetric",
            AxiomFlag::StronglySemiSymmetric => "strongly_semi_symmetric",
            AxiomFlag::ConditionP => "condition_P",
            AxiomFlag::BEqBPrime => "B_eq_Bprime",
        }
    }
}

impl fmt::Display for AxiomFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomFlag {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        AxiomFlag::ALL.into_iter().find(|c| c.name() == s).ok_or(())
    }
}

impl Serialize for AxiomFlag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Verdict of one evaluation route for one flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathVerdict {
    pub path: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagProvenance {
    pub flag: AxiomFlag,
    pub paths: Vec<PathVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("evaluation routes for {flag} disagree: {paths:?}")]
    DualPathDisagreement { flag: AxiomFlag, paths: Vec<PathVerdict> },
}

/// Every separation axiom and auxiliary condition of one space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomProfile {
    #[serde(rename = "semi_T0")]
    pub semi_t0: bool,
    #[serde(rename = "semi_T1")]
    pub semi_t1: bool,
    #[serde(rename = "semi_T_omega")]
    pub semi_t_omega: bool,
    #[serde(rename = "semi_T_omega_4")]
    pub semi_t_omega_4: bool,
    #[serde(rename = "semi_T_3omega_8")]
    pub semi_t_3omega_8: bool,
    #[serde(rename = "semi_T_5omega_8")]
    pub semi_t_5omega_8: bool,
    #[serde(rename = "semi_R0")]
    pub semi_r0: bool,
    #[serde(rename = "weak_semi_R0")]
    pub weak_semi_r0: bool,
    pub semi_symmetric: bool,
    pub strongly_semi_symmetric: bool,
    #[serde(rename = "condition_P")]
    pub condition_p: bool,
    #[serde(rename = "B_eq_Bprime")]
    pub b_eq_b_prime: bool,
    pub provenance: Vec<FlagProvenance>,
    pub scale_notes: Vec<&'static str>,
}

impl AxiomProfile {
    pub fn get(&self, flag: AxiomFlag) -> bool {
        match flag {
            AxiomFlag::SemiT0 => self.semi_t0,
            AxiomFlag::SemiT1 => self.semi_t1,
            AxiomFlag::SemiTOmega => self.semi_t_omega,
            AxiomFlag::SemiTOmega4 => self.semi_t_omega_4,
            AxiomFlag::SemiT3Omega8 => self.semi_t_3omega_8,
            AxiomFlag::SemiT5Omega8 => self.semi_t_5omega_8,
            AxiomFlag::SemiR0 => self.semi_r0,
            AxiomFlag::WeakSemiR0 => self.weak_semi_r0,
            AxiomFlag::SemiSymmetric => self.semi_symmetric,
            AxiomFlag::StronglySemiSymmetric => self.strongly_semi_symmetric,
            AxiomFlag::ConditionP => self.condition_p,
            AxiomFlag::BEqBPrime => self.b_eq_b_prime,
        }
    }
}

/// Quantifier range of the point-separation axioms between semi-T0 and
/// semi-Tω.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetRange {
    Finite,
    Countable,
    Arbitrary,
}

impl SubsetRange {
    fn admits(self, a: Subset) -> bool {
        match self {
            // a subset of a finite ground set is finite, hence countable
            SubsetRange::Finite | SubsetRange::Countable => a.len() <= a.n(),
            SubsetRange::Arbitrary => true,
        }
    }
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
}

fn singletons(space: &Space) -> impl Iterator<Item = Subset> + '_ {
    space.points().map(|x| Subset::singleton(space.n(), x))
}

// ---- semi-T0 ----

fn t0_definition(space: &Space) -> bool {
    let fam = space.semi_open_family().masks();
    distinct_pairs(space.n()).all(|(x, y)| {
        let (bx, by) = (1u16 << x, 1u16 << y);
        fam.iter().any(|&u| (u & bx != 0) != (u & by != 0))
    })
}

fn t0_open_or_closed_separator(space: &Space) -> bool {
    let so = space.semi_open_family().masks();
    let sc = space.semi_closed_family().masks();
    distinct_pairs(space.n()).all(|(x, y)| {
        let (bx, by) = (1u16 << x, 1u16 << y);
        so.iter().chain(sc).any(|&a| a & bx != 0 && a & by == 0)
            || so.iter().chain(sc).any(|&a| a & by != 0 && a & bx == 0)
    })
}

fn t0_singletons_slambda_closed(space: &Space) -> bool {
    singletons(space).all(|s| space.is_slambda_closed(s))
}

// ---- semi-T1 ----

fn t1_definition(space: &Space) -> bool {
    let fam = space.semi_open_family().masks();
    distinct_pairs(space.n()).all(|(x, y)| {
        let (bx, by) = (1u16 << x, 1u16 << y);
        fam.iter().any(|&u| u & bx != 0 && u & by == 0)
    })
}

fn t1_singletons_wedge(space: &Space) -> bool {
    singletons(space).all(|s| space.is_wedge_set(s))
}

// ---- semi-Tω ----

fn t_omega_definition(space: &Space) -> bool {
    space.subsets().filter(|&a| space.is_sg_star_closed(a)).all(|a| space.is_semi_closed(a))
}

fn t_omega_singletons(space: &Space) -> bool {
    singletons(space).all(|s| space.is_semi_open(s) || space.is_semi_closed(s)) && b_eq_b_prime(space)
}

fn t_omega_slambda(space: &Space) -> bool {
    space.subsets().all(|a| space.is_slambda_closed(a)) && b_eq_b_prime(space)
}

// ---- semi-T_{ω/4}, semi-T_{3ω/8}, semi-T_{5ω/8} ----

/// For every `P` in range and every `y ∉ P` some semi-open or semi-closed
/// `A ⊇ P` misses `y`.
fn separation_definition(space: &Space, range: SubsetRange) -> bool {
    let full = full_mask(space.n());
    let so = space.semi_open_table();
    let sc = space.semi_closed_table();
    space.subsets().filter(|&p| range.admits(p)).all(|p| {
        let outside = full & !p.bits();
        let mut missed = 0u16;
        for extra in submasks_ascending(outside) {
            let a = p.bits() | extra;
            if so.contains(a) || sc.contains(a) {
                missed |= full & !a;
                if missed == outside {
                    break;
                }
            }
        }
        missed == outside
    })
}

fn separation_slambda(space: &Space, range: SubsetRange) -> bool {
    space.subsets().filter(|&p| range.admits(p)).all(|p| space.is_slambda_closed(p))
}

// ---- R0 variants, symmetry, auxiliary conditions ----

fn r0_definition(space: &Space) -> bool {
    space
        .semi_open_family()
        .iter()
        .all(|u| u.points().all(|x| space.semi_closure(Subset::singleton(space.n(), x)).is_subset_of(u)))
}

fn weak_r0_definition(space: &Space) -> bool {
    singletons(space).filter(|&s| space.is_slambda_closed(s)).all(|s| space.is_wedge_set(s))
}

fn symmetric_definition(space: &Space) -> bool {
    let n = space.n();
    let scl = |x: usize| space.semi_closure(Subset::singleton(n, x));
    distinct_pairs(n).all(|(x, y)| !scl(y).contains(x) || scl(x).contains(y))
}

fn strongly_symmetric_definition(space: &Space) -> bool {
    singletons(space).all(|s| space.is_sg_star_closed(s))
}

/// Every intersection of closed sets is semi-closed. The intersections are
/// generated as the meet-closure of the closed family (plus the empty
/// intersection, the whole set).
fn condition_p_definition(space: &Space) -> bool {
    let n = space.n();
    let mut meets: Vec<u16> = space.closed_family().masks().to_vec();
    meets.push(full_mask(n));
    let mut i = 0;
    while i < meets.len() {
        for j in 0..i {
            let m = meets[i] & meets[j];
            if !meets.contains(&m) {
                meets.push(m);
            }
        }
        i += 1;
    }
    meets.iter().all(|&m| space.is_semi_closed(Subset::from_bits(n, u32::from(m)).unwrap()))
}

pub fn b_eq_b_prime(space: &Space) -> bool {
    space.subsets().all(|a| space.in_b(a) == space.in_b_prime(a))
}

/// All evaluation routes of `flag`, reported route first.
pub fn evaluate(space: &Space, flag: AxiomFlag) -> Vec<PathVerdict> {
    let v = |path: &'static str, holds: bool| PathVerdict { path, holds };
    match flag {
        AxiomFlag::SemiT0 => vec![
            v("singletons_slambda_closed", t0_singletons_slambda_closed(space)),
            v("definition", t0_definition(space)),
            v("semi_open_or_semi_closed_separator", t0_open_or_closed_separator(space)),
        ],
        AxiomFlag::SemiT1 => {
            vec![v("singletons_wedge", t1_singletons_wedge(space)), v("definition", t1_definition(space))]
        }
        AxiomFlag::SemiTOmega => vec![
            v("singletons_semi_open_or_semi_closed_and_B_eq_Bprime", t_omega_singletons(space)),
            v("definition", t_omega_definition(space)),
            v("all_subsets_slambda_closed_and_B_eq_Bprime", t_omega_slambda(space)),
        ],
        AxiomFlag::SemiTOmega4 => vec![
            v("finite_subsets_slambda_closed", separation_slambda(space, SubsetRange::Finite)),
            v("definition", separation_definition(space, SubsetRange::Finite)),
        ],
        AxiomFlag::SemiT3Omega8 => vec![
            v("countable_subsets_slambda_closed", separation_slambda(space, SubsetRange::Countable)),
            v("definition", separation_definition(space, SubsetRange::Countable)),
        ],
        AxiomFlag::SemiT5Omega8 => vec![
            v("all_subsets_slambda_closed", separation_slambda(space, SubsetRange::Arbitrary)),
            v("definition", separation_definition(space, SubsetRange::Arbitrary)),
        ],
        AxiomFlag::SemiR0 => vec![v("definition", r0_definition(space))],
        AxiomFlag::WeakSemiR0 => vec![v("definition", weak_r0_definition(space))],
        AxiomFlag::SemiSymmetric => vec![v("definition", symmetric_definition(space))],
        AxiomFlag::StronglySemiSymmetric => {
            vec![v("definition", strongly_symmetric_definition(space))]
        }
        AxiomFlag::ConditionP => vec![v("closed_meets_semi_closed", condition_p_definition(space))],
        AxiomFlag::BEqBPrime => vec![v("definition", b_eq_b_prime(space))],
    }
}

/// Reported value of one flag; errors if its routes disagree.
pub fn flag(space: &Space, flag: AxiomFlag) -> Result<bool, AxiomError> {
    let paths = evaluate(space, flag);
    let first = paths[0].holds;
    if paths.iter().any(|p| p.holds != first) {
        return Err(AxiomError::DualPathDisagreement { flag, paths });
    }
    Ok(first)
}

pub fn classify_space(space: &Space) -> Result<AxiomProfile, AxiomError> {
    let mut provenance = Vec::with_capacity(AxiomFlag::ALL.len());
    let mut values = [false; 12];
    for (slot, f) in values.iter_mut().zip(AxiomFlag::ALL) {
        let paths = evaluate(space, f);
        let first = paths[0].holds;
        if paths.iter().any(|p| p.holds != first) {
            return Err(AxiomError::DualPathDisagreement { flag: f, paths });
        }
        *slot = first;
        provenance.push(FlagProvenance { flag: f, paths });
    }
    let [t0, t1, tw, tw4, t3w8, t5w8, r0, wr0, sym, ssym, p, b] = values;
    Ok(AxiomProfile {
        semi_t0: t0,
        semi_t1: t1,
        semi_t_omega: tw,
        semi_t_omega_4: tw4,
        semi_t_3omega_8: t3w8,
        semi_t_5omega_8: t5w8,
        semi_r0: r0,
        weak_semi_r0: wr0,
        semi_symmetric: sym,
        strongly_semi_symmetric: ssym,
        condition_p: p,
        b_eq_b_prime: b,
        provenance,
        scale_notes: vec![FINITE_COLLAPSE_NOTE],
    })
}
