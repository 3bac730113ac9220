//! Named properties checked by the theorem sweep.
//!
//! Each property inspects one space (and, where quantified, each subset or
//! ordered pair of subsets) and records a failure message per violating
//! instance. Names describe the checked statement.

use crate::axioms::{evaluate, AxiomFlag, PathVerdict};
use crate::classes::{SetClassification, SgStarForm, SlambdaForm, SlambdaOpenForm};
use crate::space::Space;
use crate::subset::{SetFamily, Subset};

/// Everything a property may look at for one space, computed once.
pub struct SpaceContext<'a> {
    pub space: &'a Space,
    pub classes: Vec<SetClassification>,
    /// Route verdicts per flag, in [`AxiomFlag::ALL`] order.
    pub routes: Vec<Vec<PathVerdict>>,
}

impl<'a> SpaceContext<'a> {
    pub fn new(space: &'a Space) -> Self {
        SpaceContext {
            space,
            classes: space.classify_all_subsets(),
            routes: AxiomFlag::ALL.iter().map(|&f| evaluate(space, f)).collect(),
        }
    }

    /// Reported value of a flag (its first route).
    pub fn flag(&self, f: AxiomFlag) -> bool {
        self.routes[f as usize][0].holds
    }

    pub fn class(&self, a: Subset) -> &SetClassification {
        &self.classes[a.bits() as usize]
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        self.space.subsets()
    }

    pub fn singletons(&self) -> impl Iterator<Item = Subset> + '_ {
        self.space.points().map(|x| Subset::singleton(self.space.n(), x))
    }

    /// Ordered pairs of subsets.
    pub fn pairs(&self) -> impl Iterator<Item = (Subset, Subset)> {
        let n = self.space.n();
        Subset::all(n).flat_map(move |a| Subset::all(n).map(move |b| (a, b)))
    }
}

/// Instance count and failures of one property on one space.
#[derive(Debug, Default)]
pub struct Tally {
    pub instances: u64,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

#[derive(Clone, Copy)]
pub struct Property {
    pub name: &'static str,
    pub statement: &'static str,
    pub check: fn(&SpaceContext<'_>, &mut Tally),
}

impl std::fmt::Debug for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Property").field("name", &self.name).finish()
    }
}

fn implies(a: bool, b: bool) -> bool {
    !a || b
}

// ---- semi-open calculus ----

fn semi_closed_complements(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(s.is_semi_closed(a) == s.is_semi_open(!a), || format!("A={a}"));
    }
}

fn open_closed_are_semi(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        let ok = implies(s.is_open(a), s.is_semi_open(a)) && implies(s.is_closed(a), s.is_semi_closed(a));
        t.check(ok, || format!("A={a}"));
    }
}

fn semi_open_union_closed(c: &SpaceContext<'_>, t: &mut Tally) {
    let fam = c.space.semi_open_family();
    for a in fam.iter() {
        for b in fam.iter() {
            t.check(c.class(a | b).semi_open, || format!("A={a} B={b}"));
        }
    }
}

fn interior_closure_duality(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(s.semi_interior(a) == !s.semi_closure(!a), || format!("A={a}"));
    }
}

fn semi_closure_idempotent(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        let k = s.semi_closure(a);
        t.check(s.semi_closure(k) == k, || format!("A={a}"));
    }
}

fn semi_closure_via_derived(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(s.semi_closure(a) == a | s.semi_derived(a), || format!("A={a}"));
    }
}

fn semi_closure_is_semi_closed(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(s.is_semi_closed(s.semi_closure(a)), || format!("A={a}"));
    }
}

fn kernel_covee_extremes(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    let (e, x) = (s.empty(), s.full());
    t.check(s.kernel(e) == e && s.kernel(x) == x, || "kernel".into());
    t.check(s.covee(e) == e && s.covee(x) == x, || "covee".into());
}

fn kernel_covee_bounds(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(a.is_subset_of(s.kernel(a)) && s.covee(a).is_subset_of(a), || format!("A={a}"));
    }
}

fn kernel_covee_idempotent(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        let (k, v) = (s.kernel(a), s.covee(a));
        t.check(s.kernel(k) == k && s.covee(v) == v, || format!("A={a}"));
    }
}

fn kernel_covee_monotone(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for (a, b) in c.pairs().filter(|(a, b)| a.is_subset_of(*b)) {
        let ok = s.kernel(a).is_subset_of(s.kernel(b)) && s.covee(a).is_subset_of(s.covee(b));
        t.check(ok, || format!("A={a} B={b}"));
    }
}

fn kernel_covee_duality(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(s.kernel(!a) == !s.covee(a), || format!("A={a}"));
    }
}

fn kernel_distributes_over_union(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for (a, b) in c.pairs() {
        t.check(s.kernel(a | b) == s.kernel(a) | s.kernel(b), || format!("A={a} B={b}"));
    }
}

// ---- set classes ----

fn classification_implications(c: &SpaceContext<'_>, t: &mut Tally) {
    for a in c.subsets() {
        let k = c.class(a);
        let ok = implies(k.semi_closed, k.sg_star_closed)
            && implies(k.semi_closed || k.wedge, k.slambda_closed)
            && implies(k.semi_open || k.vee, k.slambda_open);
        t.check(ok, || format!("A={a}"));
    }
}

fn slambda_complement_duality(c: &SpaceContext<'_>, t: &mut Tally) {
    for a in c.subsets() {
        t.check(c.class(a).slambda_closed == c.class(!a).slambda_open, || format!("A={a}"));
    }
}

fn sg_star_forms_agree(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        let v = c.class(a).sg_star_closed;
        let ok = [SgStarForm::KernelBound, SgStarForm::Definition, SgStarForm::Remainder]
            .iter()
            .all(|&f| s.is_sg_star_closed_via(a, f) == v);
        t.check(ok, || format!("A={a}"));
    }
}

fn singleton_semi_closed_or_co_sg_star(c: &SpaceContext<'_>, t: &mut Tally) {
    for p in c.singletons() {
        t.check(c.class(p).semi_closed || c.class(!p).sg_star_closed, || format!("x={p}"));
    }
}

fn singleton_semi_open_or_g_vee(c: &SpaceContext<'_>, t: &mut Tally) {
    for p in c.singletons() {
        t.check(c.class(p).semi_open || c.class(p).g_vee, || format!("x={p}"));
    }
}

fn wedge_sg_star_iff_semi_closed(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        let k = c.class(a);
        t.check(implies(k.wedge, k.sg_star_closed == k.semi_closed), || format!("A={a}"));
        let ker = c.class(s.kernel(a));
        t.check(ker.sg_star_closed == ker.semi_closed, || format!("kernel of A={a}"));
    }
}

fn sg_star_kernel_implies_sg_star(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    for a in c.subsets() {
        t.check(implies(c.class(s.kernel(a)).sg_star_closed, c.class(a).sg_star_closed), || format!("A={a}"));
    }
}

fn vee_sets_form_topology(c: &SpaceContext<'_>, t: &mut Tally) {
    let n = c.space.n();
    let masks = c.subsets().filter(|&a| c.class(a).vee).map(|a| u32::from(a.bits()));
    let family = SetFamily::from_masks(n, masks).expect("masks fit the ground set");
    let verdict = Space::new(n, family.clone());
    t.check(verdict.is_ok(), || format!("vee family {family:?}: {}", verdict.unwrap_err()));
}

fn wedge_intersection(c: &SpaceContext<'_>, t: &mut Tally) {
    for (a, b) in c.pairs().filter(|(a, b)| c.class(*a).wedge && c.class(*b).wedge) {
        t.check(c.class(a & b).wedge, || format!("A={a} B={b}"));
    }
}

fn slambda_closed_forms_agree(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    let forms = [
        SlambdaForm::Definition,
        SlambdaForm::KernelAnyClosure,
        SlambdaForm::WedgeOwnClosure,
        SlambdaForm::KernelOwnClosure,
    ];
    for a in c.subsets() {
        let v = c.class(a).slambda_closed;
        let mut ok = forms.iter().all(|&f| s.is_slambda_closed_via(a, f) == v);
        ok &= match s.decompose_slambda(a) {
            Some((k, p)) => v && s.is_wedge_set(k) && k & s.semi_closure(p) == a,
            None => !v,
        };
        t.check(ok, || format!("A={a}"));
    }
}

fn slambda_open_forms_agree(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    let forms = [SlambdaOpenForm::Complement, SlambdaOpenForm::VeeUnionInterior, SlambdaOpenForm::CoveeOwnInterior];
    for a in c.subsets() {
        let v = c.class(a).slambda_open;
        let mut ok = forms.iter().all(|&f| s.is_slambda_open_via(a, f) == v);
        ok &= match s.decompose_slambda_open(a) {
            Some((nn, h)) => v && s.is_vee_set(nn) && nn | s.semi_interior(h) == a,
            None => !v,
        };
        t.check(ok, || format!("A={a}"));
    }
}

fn sg_star_slambda_b_implies_semi_closed(c: &SpaceContext<'_>, t: &mut Tally) {
    let b = c.flag(AxiomFlag::BEqBPrime);
    for a in c.subsets() {
        let k = c.class(a);
        t.check(implies(k.sg_star_closed && k.slambda_closed && b, k.semi_closed), || format!("A={a}"));
    }
}

fn every_subset_in_b(c: &SpaceContext<'_>, t: &mut Tally) {
    for a in c.subsets() {
        t.check(c.class(a).in_b, || format!("A={a}"));
    }
}

// ---- axioms ----

fn routes_agree(c: &SpaceContext<'_>, t: &mut Tally, f: AxiomFlag) {
    let paths = &c.routes[f as usize];
    let first = paths[0].holds;
    t.check(paths.iter().all(|p| p.holds == first), || {
        let v: Vec<String> = paths.iter().map(|p| format!("{}={}", p.path, p.holds)).collect();
        format!("{f}: {}", v.join(" "))
    });
}

macro_rules! routes_property {
    ($fn:ident, $flag:expr) => {
        fn $fn(c: &SpaceContext<'_>, t: &mut Tally) {
            routes_agree(c, t, $flag)
        }
    };
}

routes_property!(routes_t0, AxiomFlag::SemiT0);
routes_property!(routes_t1, AxiomFlag::SemiT1);
routes_property!(routes_t_omega, AxiomFlag::SemiTOmega);
routes_property!(routes_t_omega_4, AxiomFlag::SemiTOmega4);
routes_property!(routes_t_3omega_8, AxiomFlag::SemiT3Omega8);
routes_property!(routes_t_5omega_8, AxiomFlag::SemiT5Omega8);

fn separation_chain(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let chain = [SemiTOmega, SemiT5Omega8, SemiT3Omega8, SemiTOmega4, SemiT0];
    for w in chain.windows(2) {
        t.check(implies(c.flag(w[0]), c.flag(w[1])), || format!("{} without {}", w[0], w[1]));
    }
}

fn finite_range_collapse(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let v = [c.flag(SemiTOmega4), c.flag(SemiT3Omega8), c.flag(SemiT5Omega8)];
    t.check(v[0] == v[1] && v[1] == v[2], || format!("{v:?}"));
}

fn t1_iff_t0_and_r0(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let t1 = c.flag(SemiT1);
    t.check(t1 == (c.flag(SemiT0) && c.flag(SemiR0)), || "semi_R0".into());
    t.check(t1 == (c.flag(SemiT0) && c.flag(WeakSemiR0)), || "weak_semi_R0".into());
}

fn t0_separates_semi_closures(c: &SpaceContext<'_>, t: &mut Tally) {
    let s = c.space;
    let t0 = c.flag(AxiomFlag::SemiT0);
    for p in c.singletons() {
        for q in c.singletons().filter(|&q| q != p) {
            let both = p.is_subset_of(s.semi_closure(q)) && q.is_subset_of(s.semi_closure(p));
            t.check(implies(t0, !both), || format!("p={p} q={q}"));
        }
    }
}

fn r0_implies_weak_r0(c: &SpaceContext<'_>, t: &mut Tally) {
    t.check(implies(c.flag(AxiomFlag::SemiR0), c.flag(AxiomFlag::WeakSemiR0)), String::new);
}

fn strongly_symmetric_implies_symmetric(c: &SpaceContext<'_>, t: &mut Tally) {
    t.check(implies(c.flag(AxiomFlag::StronglySemiSymmetric), c.flag(AxiomFlag::SemiSymmetric)), String::new);
}

fn symmetric_t0_is_t1(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    t.check(implies(c.flag(SemiSymmetric) && c.flag(SemiT0), c.flag(SemiT1)), String::new);
}

fn strong_symmetry_makes_all_wedge(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let all_wedge = c.classes.iter().all(|k| k.wedge);
    let hyp = c.flag(StronglySemiSymmetric) && c.flag(SemiT1) && c.flag(BEqBPrime);
    t.check(implies(hyp, all_wedge), || "hypotheses hold but some subset is not a wedge set".into());
    t.check(implies(all_wedge, c.flag(SemiT1)), || "every subset wedge but not semi_T1".into());
}

fn strong_symmetry_makes_t_omega(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let hyp = c.flag(StronglySemiSymmetric) && c.flag(SemiT1) && c.flag(BEqBPrime);
    t.check(implies(hyp, c.flag(SemiTOmega)), String::new);
}

fn six_axioms_equal(c: &SpaceContext<'_>, t: &mut Tally, hypothesis: bool) {
    use AxiomFlag::*;
    let six = [SemiT0, SemiT1, SemiTOmega, SemiT5Omega8, SemiT3Omega8, SemiTOmega4];
    let first = c.flag(six[0]);
    t.check(implies(hypothesis, six.iter().all(|&f| c.flag(f) == first)), || {
        let v: Vec<String> = six.iter().map(|&f| format!("{f}={}", c.flag(f))).collect();
        v.join(" ")
    });
}

fn axioms_equal_strongly_symmetric_weak_r0(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    let hyp = c.flag(StronglySemiSymmetric) && c.flag(WeakSemiR0) && c.flag(BEqBPrime);
    six_axioms_equal(c, t, hyp)
}

fn axioms_equal_symmetric_b(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    six_axioms_equal(c, t, c.flag(SemiSymmetric) && c.flag(BEqBPrime))
}

fn axioms_equal_symmetric_p(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    six_axioms_equal(c, t, c.flag(SemiSymmetric) && c.flag(ConditionP))
}

fn t1_with_p_is_t_omega(c: &SpaceContext<'_>, t: &mut Tally) {
    use AxiomFlag::*;
    t.check(implies(c.flag(SemiT1) && c.flag(ConditionP), c.flag(SemiTOmega)), String::new);
}

fn condition_p_holds(c: &SpaceContext<'_>, t: &mut Tally) {
    t.check(c.flag(AxiomFlag::ConditionP), String::new);
}

fn all_slambda_closed_singletons_semi(c: &SpaceContext<'_>, t: &mut Tally) {
    if !c.classes.iter().all(|k| k.slambda_closed) {
        t.check(true, String::new);
        return;
    }
    for p in c.singletons() {
        t.check(c.class(p).semi_open || c.class(p).semi_closed, || format!("x={p}"));
    }
}

macro_rules! registry {
    ($($name:literal, $statement:literal => $check:path;)*) => {
        &[$(Property { name: $name, statement: $statement, check: $check },)*]
    };
}

const REGISTRY: &[Property] = registry! {
    "semi_closed_iff_complement_semi_open", "A is semi-closed iff X∖A is semi-open" => semi_closed_complements;
    "open_is_semi_open_closed_is_semi_closed", "open sets are semi-open and closed sets semi-closed" => open_closed_are_semi;
    "semi_open_closed_under_union", "the union of two semi-open sets is semi-open" => semi_open_union_closed;
    "semi_interior_closure_duality", "sInt(A) = X∖scl(X∖A)" => interior_closure_duality;
    "semi_closure_idempotent", "scl(scl(A)) = scl(A)" => semi_closure_idempotent;
    "semi_closure_is_union_with_semi_derived", "scl(A) = A ∪ sD(A)" => semi_closure_via_derived;
    "semi_closure_is_semi_closed", "scl(A) is semi-closed" => semi_closure_is_semi_closed;
    "kernel_covee_extremes", "kernel and covee fix ∅ and X" => kernel_covee_extremes;
    "kernel_extensive_covee_contractive", "A ⊆ kernel(A) and covee(A) ⊆ A" => kernel_covee_bounds;
    "kernel_covee_idempotent", "kernel and covee are idempotent" => kernel_covee_idempotent;
    "kernel_covee_monotone", "A ⊆ B implies kernel(A) ⊆ kernel(B) and covee(A) ⊆ covee(B)" => kernel_covee_monotone;
    "kernel_complement_duality", "kernel(X∖A) = X∖covee(A)" => kernel_covee_duality;
    "kernel_distributes_over_union", "kernel(A ∪ B) = kernel(A) ∪ kernel(B)" => kernel_distributes_over_union;
    "classification_implications", "semi-closed implies sg*-closed; semi-closed or wedge implies sλ*-closed; semi-open or vee implies sλ*-open" => classification_implications;
    "slambda_closed_iff_complement_slambda_open", "A is sλ*-closed iff X∖A is sλ*-open" => slambda_complement_duality;
    "sg_star_closed_forms_agree", "kernel-bound, definition and remainder forms of sg*-closedness agree" => sg_star_forms_agree;
    "singleton_semi_closed_or_co_singleton_sg_star_closed", "{x} is semi-closed or X∖{x} is sg*-closed" => singleton_semi_closed_or_co_sg_star;
    "singleton_semi_open_or_g_vee", "{x} is semi-open or a generalized vee set" => singleton_semi_open_or_g_vee;
    "wedge_sg_star_closed_iff_semi_closed", "a wedge set (in particular kernel(A)) is sg*-closed iff semi-closed" => wedge_sg_star_iff_semi_closed;
    "sg_star_closed_kernel_implies_sg_star_closed", "kernel(A) sg*-closed implies A sg*-closed" => sg_star_kernel_implies_sg_star;
    "vee_sets_form_topology", "the vee sets form a topology" => vee_sets_form_topology;
    "wedge_sets_closed_under_intersection", "the intersection of two wedge sets is a wedge set" => wedge_intersection;
    "slambda_closed_forms_agree", "all forms of sλ*-closedness agree and the decomposition reconstructs A" => slambda_closed_forms_agree;
    "slambda_open_forms_agree", "all forms of sλ*-openness agree and the decomposition reconstructs A" => slambda_open_forms_agree;
    "sg_star_slambda_closed_with_b_eq_bprime_is_semi_closed", "sg*-closed and sλ*-closed with 𝓑 = 𝓑′ implies semi-closed" => sg_star_slambda_b_implies_semi_closed;
    "every_subset_in_b", "scl(X∖A) is semi-closed for every A" => every_subset_in_b;
    "semi_T0_routes_agree", "semi-T0 by definition, by semi-open or semi-closed separator, and by sλ*-closed singletons" => routes_t0;
    "semi_T1_routes_agree", "semi-T1 by definition and by wedge singletons" => routes_t1;
    "semi_T_omega_routes_agree", "semi-Tω by definition, by singletons with 𝓑 = 𝓑′, and by sλ*-closed subsets with 𝓑 = 𝓑′" => routes_t_omega;
    "semi_T_omega_4_routes_agree", "semi-T(ω/4) by definition and by sλ*-closed finite subsets" => routes_t_omega_4;
    "semi_T_3omega_8_routes_agree", "semi-T(3ω/8) by definition and by sλ*-closed countable subsets" => routes_t_3omega_8;
    "semi_T_5omega_8_routes_agree", "semi-T(5ω/8) by definition and by sλ*-closed subsets" => routes_t_5omega_8;
    "separation_chain", "semi-Tω ⇒ semi-T(5ω/8) ⇒ semi-T(3ω/8) ⇒ semi-T(ω/4) ⇒ semi-T0" => separation_chain;
    "finite_range_collapse", "semi-T(ω/4), semi-T(3ω/8) and semi-T(5ω/8) coincide on finite spaces" => finite_range_collapse;
    "semi_T1_iff_semi_T0_and_R0", "semi-T1 iff semi-T0 and semi-R0, iff semi-T0 and weak semi-R0" => t1_iff_t0_and_r0;
    "semi_T0_separates_semi_closures", "in a semi-T0 space p ∉ scl{q} or q ∉ scl{p}" => t0_separates_semi_closures;
    "semi_R0_implies_weak_semi_R0", "semi-R0 implies weak semi-R0" => r0_implies_weak_r0;
    "strongly_symmetric_implies_symmetric", "strongly semi-symmetric implies semi-symmetric" => strongly_symmetric_implies_symmetric;
    "symmetric_semi_T0_is_semi_T1", "semi-symmetric and semi-T0 implies semi-T1" => symmetric_t0_is_t1;
    "strong_symmetry_makes_every_subset_wedge", "strongly semi-symmetric, semi-T1 and 𝓑 = 𝓑′ imply every subset is a wedge set, which implies semi-T1" => strong_symmetry_makes_all_wedge;
    "strong_symmetry_makes_semi_T_omega", "strongly semi-symmetric, semi-T1 and 𝓑 = 𝓑′ imply semi-Tω" => strong_symmetry_makes_t_omega;
    "axioms_equal_under_strong_symmetry_and_weak_R0", "under strong semi-symmetry, weak semi-R0 and 𝓑 = 𝓑′ the six point-separation axioms coincide" => axioms_equal_strongly_symmetric_weak_r0;
    "axioms_equal_under_symmetry_and_b_eq_bprime", "under semi-symmetry and 𝓑 = 𝓑′ the six point-separation axioms coincide" => axioms_equal_symmetric_b;
    "axioms_equal_under_symmetry_and_condition_P", "under semi-symmetry and condition (P) the six point-separation axioms coincide" => axioms_equal_symmetric_p;
    "semi_T1_with_condition_P_is_semi_T_omega", "semi-T1 with condition (P) implies semi-Tω" => t1_with_p_is_t_omega;
    "condition_P_holds", "every intersection of closed sets is semi-closed" => condition_p_holds;
    "all_slambda_closed_makes_singletons_semi", "if every subset is sλ*-closed then every singleton is semi-open or semi-closed" => all_slambda_closed_singletons_semi;
};

/// Every property the sweep checks, in report order.
pub fn registry() -> &'static [Property] {
    REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = registry().iter().map(|p| p.name).collect();
        let before = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), before);
    }

    #[test]
    fn fixtures_pass_everything() {
        for sp in [Space::sierpinski(), Space::indiscrete(2), Space::discrete(3)] {
            let ctx = SpaceContext::new(&sp);
            for p in registry() {
                let mut t = Tally::default();
                (p.check)(&ctx, &mut t);
                assert!(t.failures.is_empty(), "{} on {sp:?}: {:?}", p.name, t.failures);
                assert!(t.instances > 0, "{}", p.name);
            }
        }
    }
}
