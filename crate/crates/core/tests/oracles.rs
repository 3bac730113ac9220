//! Fast tables against literal definitions, on every space with at most
//! four points.

use semitopo_core::search::{enumerate_topologies, enumerate_with, Strategy};
use semitopo_core::{classify_space, AxiomFlag, Space, Subset};

fn all_spaces() -> Vec<Space> {
    (1..=4).flat_map(|n| enumerate_topologies(n, false).unwrap()).collect()
}

fn subsets(n: usize) -> Vec<u16> {
    (0..1u16 << n).collect()
}

struct Oracle {
    n: usize,
    full: u16,
    opens: Vec<u16>,
}

impl Oracle {
    fn new(space: &Space) -> Self {
        let n = space.n();
        Oracle { n, full: ((1u32 << n) - 1) as u16, opens: space.opens().masks().to_vec() }
    }

    fn closure(&self, a: u16) -> u16 {
        self.opens.iter().map(|&g| self.full & !g).filter(|&f| a & !f == 0).fold(self.full, |acc, f| acc & f)
    }

    fn semi_open(&self, a: u16) -> bool {
        self.opens.iter().any(|&g| g & !a == 0 && a & !self.closure(g) == 0)
    }

    fn semi_closed(&self, a: u16) -> bool {
        self.semi_open(self.full & !a)
    }

    fn semi_closure(&self, a: u16) -> u16 {
        subsets(self.n).into_iter().filter(|&f| self.semi_closed(f) && a & !f == 0).fold(self.full, |acc, f| acc & f)
    }

    fn semi_interior(&self, a: u16) -> u16 {
        subsets(self.n).into_iter().filter(|&u| self.semi_open(u) && u & !a == 0).fold(0, |acc, u| acc | u)
    }

    fn kernel(&self, a: u16) -> u16 {
        subsets(self.n).into_iter().filter(|&u| self.semi_open(u) && a & !u == 0).fold(self.full, |acc, u| acc & u)
    }

    fn covee(&self, a: u16) -> u16 {
        subsets(self.n).into_iter().filter(|&f| self.semi_closed(f) && f & !a == 0).fold(0, |acc, f| acc | f)
    }

    fn semi_derived(&self, a: u16) -> u16 {
        (0..self.n)
            .map(|x| 1u16 << x)
            .filter(|&bx| {
                subsets(self.n).into_iter().filter(|&u| self.semi_open(u) && u & bx != 0).all(|u| u & a & !bx != 0)
            })
            .fold(0, |acc, bx| acc | bx)
    }

    /// Some semi-closed `F ⊇ A` inside every semi-open `O ⊇ A`.
    fn sg_star_closed(&self, a: u16) -> bool {
        let sos: Vec<u16> = subsets(self.n).into_iter().filter(|&o| self.semi_open(o) && a & !o == 0).collect();
        subsets(self.n)
            .into_iter()
            .filter(|&f| self.semi_closed(f) && a & !f == 0)
            .any(|f| sos.iter().all(|&o| f & !o == 0))
    }

    /// `A = K ∩ scl(P)` for some wedge set `K` and some `P`.
    fn slambda_closed(&self, a: u16) -> bool {
        let wedges: Vec<u16> = subsets(self.n).into_iter().filter(|&k| self.kernel(k) == k).collect();
        wedges.iter().any(|&k| subsets(self.n).into_iter().any(|p| k & self.semi_closure(p) == a))
    }

    fn t0(&self) -> bool {
        let so: Vec<u16> = subsets(self.n).into_iter().filter(|&u| self.semi_open(u)).collect();
        (0..self.n).all(|x| (0..self.n).filter(|&y| y != x).all(|y| so.iter().any(|&u| (u >> x & 1) != (u >> y & 1))))
    }

    fn t1(&self) -> bool {
        let so: Vec<u16> = subsets(self.n).into_iter().filter(|&u| self.semi_open(u)).collect();
        (0..self.n)
            .all(|x| (0..self.n).filter(|&y| y != x).all(|y| so.iter().any(|&u| u >> x & 1 == 1 && u >> y & 1 == 0)))
    }

    fn t_omega(&self) -> bool {
        subsets(self.n).into_iter().filter(|&a| self.sg_star_closed(a)).all(|a| self.semi_closed(a))
    }
}

fn sub(space: &Space, bits: u16) -> Subset {
    Subset::from_bits(space.n(), u32::from(bits)).unwrap()
}

#[test]
fn operators_match_definitions() {
    for space in all_spaces() {
        let o = Oracle::new(&space);
        for m in subsets(space.n()) {
            let a = sub(&space, m);
            assert_eq!(space.closure(a).bits(), o.closure(m), "{space:?} {a}");
            assert_eq!(space.is_semi_open(a), o.semi_open(m), "{space:?} {a}");
            assert_eq!(space.is_semi_closed(a), o.semi_closed(m), "{space:?} {a}");
            assert_eq!(space.semi_closure(a).bits(), o.semi_closure(m), "{space:?} {a}");
            assert_eq!(space.semi_interior(a).bits(), o.semi_interior(m), "{space:?} {a}");
            assert_eq!(space.kernel(a).bits(), o.kernel(m), "{space:?} {a}");
            assert_eq!(space.covee(a).bits(), o.covee(m), "{space:?} {a}");
            assert_eq!(space.semi_derived(a).bits(), o.semi_derived(m), "{space:?} {a}");
        }
    }
}

#[test]
fn set_classes_match_definitions() {
    for space in all_spaces() {
        let o = Oracle::new(&space);
        for m in subsets(space.n()) {
            let a = sub(&space, m);
            assert_eq!(space.is_sg_star_closed(a), o.sg_star_closed(m), "{space:?} {a}");
            assert_eq!(space.is_slambda_closed(a), o.slambda_closed(m), "{space:?} {a}");
        }
    }
}

#[test]
fn axioms_match_definitions() {
    for space in all_spaces() {
        let o = Oracle::new(&space);
        let p = classify_space(&space).unwrap();
        assert_eq!(p.get(AxiomFlag::SemiT0), o.t0(), "{space:?}");
        assert_eq!(p.get(AxiomFlag::SemiT1), o.t1(), "{space:?}");
        assert_eq!(p.get(AxiomFlag::SemiTOmega), o.t_omega(), "{space:?}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn canonical_classes_match_permutation_orbits() {
    for n in 1..=4 {
        let labeled = enumerate_topologies(n, false).unwrap();
        let perms = permutations(n);
        // orbit representatives by explicit relabeling, no canonical forms
        let mut seen: Vec<Space> = Vec::new();
        let mut reps = 0;
        for sp in &labeled {
            if seen.contains(sp) {
                continue;
            }
            reps += 1;
            for p in &perms {
                let r = sp.relabel(p);
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
        }
        assert_eq!(seen.len(), labeled.len());
        assert_eq!(enumerate_topologies(n, true).unwrap().len(), reps);
    }
}

#[test]
fn five_point_counts() {
    assert_eq!(enumerate_with(5, false, Strategy::Incremental).unwrap().len(), 6942);
    assert_eq!(enumerate_topologies(5, true).unwrap().len(), 139);
}
