//! SCC-recursive (`cf2`, `stg2`), fixed-point (`icf2`, `istg2`) and
//! SCC-prioritized (`cf1.5`, `stg1.5`) semantics on finite frameworks.

use std::collections::HashMap;

use crate::argset::ArgSet;
use crate::base;
use crate::error::Result;
use crate::extension::{ExtensionSet, Limits, Semantics};
use crate::framework::Framework;
use crate::scc::{d_s, decompose, decompose_within};

/// The iteration `Δ⁰ = ∅, Δᵏ⁺¹ = Δ_{F,S}(Δᵏ)` up to its least fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTrace {
    /// `Δ⁰, Δ¹, …, Δᵐ` with `Δᵐ` the fixed point; strictly increasing.
    pub stages: Vec<ArgSet>,
    pub fixed_point: ArgSet,
    /// Number of strict increases, `m`.
    pub steps: usize,
}

impl DeltaTrace {
    /// `Δᵏ` for any `k`, constant past the fixed point.
    pub fn stage(&self, k: usize) -> &ArgSet {
        &self.stages[k.min(self.stages.len() - 1)]
    }
}

/// The sequence `C⁰_S(a), C¹_S(a), …` of components of one argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTrace {
    pub argument: usize,
    /// `C⁰ … C^α` with `α` the comp-ordinal. When the argument is dropped,
    /// the last stage is empty.
    pub stages: Vec<ArgSet>,
    pub comp_ordinal: usize,
    /// The argument is still in `C^α`.
    pub survived: bool,
}

impl ComponentTrace {
    /// `Cᵏ_S(a)` for any `k`: constant once stable, empty once dropped.
    pub fn stage(&self, k: usize) -> ArgSet {
        self.stages[k.min(self.stages.len() - 1)].clone()
    }

    /// The final component `C^α_S(a)`.
    pub fn final_component(&self) -> &ArgSet {
        self.stages.last().expect("trace has a first stage")
    }
}

fn base_holds(
    f: &Framework,
    stage: bool,
    within: &ArgSet,
    s: &ArgSet,
    limits: &Limits,
) -> Result<bool> {
    if stage {
        base::is_stage_within(f, within, s, limits)
    } else {
        Ok(base::is_naive_within(f, within, s))
    }
}

struct Recursion<'a> {
    f: &'a Framework,
    stage: bool,
    limits: &'a Limits,
    memo: HashMap<(ArgSet, ArgSet), bool>,
}

impl Recursion<'_> {
    fn holds(&mut self, within: &ArgSet, s: &ArgSet) -> Result<bool> {
        if !s.is_subset(within) {
            return Ok(false);
        }
        let key = (within.clone(), s.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let dec = decompose_within(self.f, within);
        let result = if dec.len() == 1 {
            base_holds(self.f, self.stage, within, s, self.limits)?
        } else {
            let mut all = true;
            for x in &dec.components {
                let rest = x.difference(&d_s(self.f, s, x));
                if !self.holds(&rest, &s.intersection(x))? {
                    all = false;
                    break;
                }
            }
            all
        };
        self.memo.insert(key, result);
        Ok(result)
    }
}

fn scc_recursive(f: &Framework, s: &ArgSet, stage: bool, limits: &Limits) -> Result<bool> {
    if !f.is_conflict_free(s) {
        return Ok(false);
    }
    Recursion {
        f,
        stage,
        limits,
        memo: HashMap::new(),
    }
    .holds(&f.all(), s)
}

/// `S ∈ cf2(F)` by the recursive definition.
pub fn is_cf2(f: &Framework, s: &ArgSet) -> bool {
    scc_recursive(f, s, false, &Limits::default()).expect("naive checks never enumerate")
}

/// `S ∈ stg2(F)` by the recursive definition.
pub fn is_stg2(f: &Framework, s: &ArgSet, limits: &Limits) -> Result<bool> {
    scc_recursive(f, s, true, limits)
}

/// Some path from `a` to `b` stays inside `b_set`. Both endpoints must be
/// in `b_set`; a path may have length zero.
pub fn reachable_mod(f: &Framework, b_set: &ArgSet, a: usize, b: usize) -> bool {
    reach_within(f, b_set, a).contains(b)
}

fn reach_within(f: &Framework, within: &ArgSet, a: usize) -> ArgSet {
    if !within.contains(a) {
        return ArgSet::new();
    }
    let mut seen = ArgSet::singleton(a);
    let mut frontier = vec![a];
    while let Some(v) = frontier.pop() {
        for w in f.targets(v).intersection(within).iter() {
            if seen.insert(w) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// One application of `Δ_{F,S}`: arguments attacked by some `b ∈ S` from
/// which they cannot get back to `b` while avoiding `d`.
pub fn delta_step(f: &Framework, s: &ArgSet, d: &ArgSet) -> ArgSet {
    let allowed = f.all().difference(d);
    f.plus(s)
        .iter()
        .filter(|&a| {
            let back = reach_within(f, &allowed, a);
            f.attackers(a)
                .intersection(s)
                .iter()
                .any(|b| !back.contains(b))
        })
        .collect()
}

/// Iterate `Δ_{F,S}` from the empty set to its least fixed point.
pub fn delta_lfp(f: &Framework, s: &ArgSet) -> DeltaTrace {
    let mut stages = vec![ArgSet::new()];
    loop {
        let last = stages.last().expect("non-empty");
        let next = delta_step(f, s, last);
        if &next == last {
            break;
        }
        stages.push(next);
    }
    DeltaTrace {
        fixed_point: stages.last().cloned().expect("non-empty"),
        steps: stages.len() - 1,
        stages,
    }
}

/// `[[F]]`: drop every attack between different components.
pub fn separation(f: &Framework) -> Framework {
    let dec = decompose(f);
    f.filter_attacks(|a, b| dec.component_of[a] == dec.component_of[b])
}

fn fixed_point_check(f: &Framework, s: &ArgSet, stage: bool, limits: &Limits) -> Result<bool> {
    if !f.is_conflict_free(s) {
        return Ok(false);
    }
    let delta = delta_lfp(f, s).fixed_point;
    let rest = f.all().difference(&delta);
    if !s.is_subset(&rest) {
        return Ok(false);
    }
    let r = f.restrict(&rest);
    let sep = separation(&r.framework);
    let local = r.project(s);
    for piece in decompose(&sep).components {
        if !base_holds(&sep, stage, &piece, &local.intersection(&piece), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `S` is conflict-free and naive in `[[F ∖ Δ_{F,S}]]`.
pub fn is_icf2(f: &Framework, s: &ArgSet) -> bool {
    fixed_point_check(f, s, false, &Limits::default()).expect("naive checks never enumerate")
}

/// `S` is conflict-free and stage in `[[F ∖ Δ_{F,S}]]`.
pub fn is_istg2(f: &Framework, s: &ArgSet, limits: &Limits) -> Result<bool> {
    fixed_point_check(f, s, true, limits)
}

/// `C⁰_S(a) = SCC(a)`; `Cᵏ⁺¹_S(a)` is the component of `a` in
/// `Cᵏ ∖ D_S(Cᵏ)`. Stops at the comp-ordinal.
pub fn component_trace(f: &Framework, s: &ArgSet, a: usize) -> ComponentTrace {
    let first = decompose(f)
        .component(a)
        .cloned()
        .expect("argument belongs to the framework");
    let mut stages = vec![first];
    loop {
        let current = stages.last().expect("non-empty");
        let rest = current.difference(&d_s(f, s, current));
        if !rest.contains(a) {
            stages.push(ArgSet::new());
            return ComponentTrace {
                argument: a,
                comp_ordinal: stages.len() - 1,
                stages,
                survived: false,
            };
        }
        let next = decompose_within(f, &rest)
            .component(a)
            .cloned()
            .expect("a is in rest");
        if &next == current {
            return ComponentTrace {
                argument: a,
                comp_ordinal: stages.len() - 1,
                stages,
                survived: true,
            };
        }
        stages.push(next);
    }
}

fn prioritized(f: &Framework, s: &ArgSet, stage: bool, limits: &Limits) -> Result<bool> {
    if !f.is_conflict_free(s) {
        return Ok(false);
    }
    for x in decompose(f).components {
        let rest = x.difference(&d_s(f, s, &x));
        if !base_holds(f, stage, &rest, &s.intersection(&x), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each component `X` sees `S ∩ X` as naive in `F|_{X ∖ D_S(X)}`.
pub fn is_cf15(f: &Framework, s: &ArgSet) -> bool {
    prioritized(f, s, false, &Limits::default()).expect("naive checks never enumerate")
}

/// Each component `X` sees `S ∩ X` as stage in `F|_{X ∖ D_S(X)}`.
pub fn is_stg15(f: &Framework, s: &ArgSet, limits: &Limits) -> Result<bool> {
    prioritized(f, s, true, limits)
}

/// Membership of `s` in `which(f)`.
pub fn is_extension(f: &Framework, which: Semantics, s: &ArgSet, limits: &Limits) -> Result<bool> {
    Ok(match which {
        Semantics::ConflictFree => s.is_subset(&f.all()) && f.is_conflict_free(s),
        Semantics::Naive => base::is_naive_within(f, &f.all(), s),
        Semantics::Stage => base::is_stage_within(f, &f.all(), s, limits)?,
        Semantics::Grounded => *s == base::grounded(f),
        Semantics::Cf2 => is_cf2(f, s),
        Semantics::Stg2 => is_stg2(f, s, limits)?,
        Semantics::Icf2 => is_icf2(f, s),
        Semantics::Istg2 => is_istg2(f, s, limits)?,
        Semantics::Cf15 => is_cf15(f, s),
        Semantics::Stg15 => is_stg15(f, s, limits)?,
    })
}

/// All extensions of `which`. The SCC-based semantics are subsets of the
/// naive semantics, so naive extensions are the candidates.
pub fn enumerate_semantics(
    f: &Framework,
    which: Semantics,
    limits: &Limits,
) -> Result<ExtensionSet> {
    match which {
        Semantics::ConflictFree => base::enumerate_conflict_free(f, limits),
        Semantics::Naive => base::enumerate_naive(f, limits),
        Semantics::Stage => base::enumerate_stage(f, limits),
        Semantics::Grounded => Ok(ExtensionSet::new(vec![base::grounded(f)])),
        _ => {
            let mut out = Vec::new();
            for s in base::naive_within(f, &f.all(), limits)? {
                if is_extension(f, which, &s, limits)? {
                    out.push(s);
                }
            }
            Ok(ExtensionSet::new(out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle;
    use proptest::prelude::*;

    fn set(f: &Framework, labels: &[&str]) -> ArgSet {
        f.set_of(labels).unwrap()
    }

    fn sets(f: &Framework, groups: &[&[&str]]) -> ExtensionSet {
        groups.iter().map(|g| set(f, g)).collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cf2_and_stg2_membership() {
        let pt = fixtures::pentagon_tail();
        assert!(is_cf2(&pt, &set(&pt, &["a", "b1", "b3"])));
        assert!(!is_cf2(&pt, &set(&pt, &["a", "b2"])));

        let l4 = fixtures::ladder4();
        let bs = set(&l4, &["b1", "b2", "b3", "b4"]);
        assert!(is_cf2(&l4, &bs));
        assert!(is_stg2(&l4, &bs, &lim()).unwrap());

        let t3 = fixtures::three_cycle();
        assert!(is_cf2(&t3, &set(&t3, &["a"])));
        assert!(is_stg2(&t3, &set(&t3, &["a"]), &lim()).unwrap());
    }

    #[test]
    fn reachability_modulo() {
        let t3 = fixtures::three_cycle();
        let (a, c) = (0, 2);
        assert!(reachable_mod(&t3, &t3.all(), a, c));
        assert!(!reachable_mod(&t3, &set(&t3, &["a", "c"]), a, c));
        assert!(reachable_mod(&t3, &set(&t3, &["a"]), a, a));
        assert!(!reachable_mod(&t3, &set(&t3, &["b"]), a, a));
    }

    #[test]
    fn delta_examples() {
        let t3 = fixtures::three_cycle();
        let tr = delta_lfp(&t3, &set(&t3, &["a"]));
        assert!(tr.fixed_point.is_empty());
        assert_eq!(tr.steps, 0);

        // Δ¹ = {a1}: only b1 → a1 has no return path. Removing a1 cuts
        // a2's way back to b2, and so on up the ladder.
        let l4 = fixtures::ladder4();
        let tr = delta_lfp(&l4, &set(&l4, &["b1", "b2", "b3", "b4"]));
        assert_eq!(tr.fixed_point, set(&l4, &["a1", "a2", "a3", "a4"]));
        assert_eq!(
            tr.stages,
            vec![
                ArgSet::new(),
                set(&l4, &["a1"]),
                set(&l4, &["a1", "a2"]),
                set(&l4, &["a1", "a2", "a3"]),
                set(&l4, &["a1", "a2", "a3", "a4"]),
            ]
        );

        let pt = fixtures::pentagon_tail();
        assert!(delta_lfp(&pt, &ArgSet::new()).fixed_point.is_empty());
    }

    #[test]
    fn separation_examples() {
        let t3 = fixtures::three_cycle();
        assert_eq!(separation(&t3), t3);
        let ab = fixtures::single_attack();
        assert_eq!(separation(&ab).attack_count(), 0);
        let l4 = fixtures::ladder4();
        let sep = separation(&l4);
        assert_eq!(sep.attack_count(), l4.attack_count() - 1);
        let (b1, a1) = (l4.index_of("b1").unwrap(), l4.index_of("a1").unwrap());
        assert!(!sep.attacks(b1, a1));
    }

    #[test]
    fn fixed_point_membership() {
        let pt = fixtures::pentagon_tail();
        assert!(is_icf2(&pt, &set(&pt, &["a", "b1", "b3"])));
        let t3 = fixtures::three_cycle();
        assert!(!is_icf2(&t3, &set(&t3, &["a", "b"])));
        let l4 = fixtures::ladder4();
        assert!(!is_icf2(&l4, &set(&l4, &["b1", "a2", "a4"])));
    }

    #[test]
    fn component_traces() {
        let t3 = fixtures::three_cycle();
        let tr = component_trace(&t3, &set(&t3, &["a"]), 1);
        assert_eq!(tr.stages, vec![t3.all()]);
        assert_eq!(tr.comp_ordinal, 0);
        assert!(tr.survived);

        let l4 = fixtures::ladder4();
        let tr = component_trace(&l4, &set(&l4, &["b1", "b2", "b3", "b4"]), 0);
        assert!(!tr.survived);
        assert_eq!(tr.comp_ordinal, 1);
        assert!(tr.final_component().is_empty());

        let pt = fixtures::pentagon_tail();
        let b2 = pt.index_of("b2").unwrap();
        let tr = component_trace(&pt, &ArgSet::new(), b2);
        assert_eq!(tr.comp_ordinal, 0);
        assert_eq!(tr.stages, vec![set(&pt, &["b0", "b1", "b2", "b3"])]);
    }

    #[test]
    fn prioritized_membership() {
        let pt = fixtures::pentagon_tail();
        let ab2 = set(&pt, &["a", "b2"]);
        assert!(is_cf15(&pt, &ab2));
        assert!(!is_stg15(&pt, &ab2, &lim()).unwrap());

        let l4 = fixtures::ladder4();
        assert!(is_cf15(&l4, &set(&l4, &["b1", "a2", "a4"])));

        let wr = fixtures::weak_reinstatement();
        let ab2 = set(&wr, &["a", "b2"]);
        assert!(is_cf15(&wr, &ab2));
        assert!(is_stg15(&wr, &ab2, &lim()).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let pt = fixtures::pentagon_tail();
        assert_eq!(
            enumerate_semantics(&pt, Semantics::Cf2, &lim()).unwrap(),
            sets(&pt, &[&["a", "b1", "b3"]])
        );
        assert_eq!(
            enumerate_semantics(&pt, Semantics::Cf15, &lim()).unwrap(),
            sets(&pt, &[&["a", "b1", "b3"], &["a", "b2"]])
        );
        let ch = fixtures::chain(5);
        assert_eq!(
            enumerate_semantics(&ch, Semantics::Cf15, &lim()).unwrap(),
            sets(&ch, &[&["a4"]])
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn fast_membership_matches_oracle(f in crate::testing::arb_framework(7)) {
            for which in Semantics::ALL {
                prop_assert_eq!(
                    enumerate_semantics(&f, which, &lim()).unwrap(),
                    oracle::brute_force(&f, which).unwrap(),
                    "semantics {}", which
                );
            }
        }

        #[test]
        fn delta_properties(f in crate::testing::arb_framework(8), mask in any::<u8>(), d1 in any::<u8>(), d2 in any::<u8>()) {
            let s: ArgSet = (0..f.len()).filter(|i| mask & (1 << i) != 0).collect();
            prop_assume!(f.is_conflict_free(&s));
            let tr = delta_lfp(&f, &s);
            prop_assert!(tr.steps <= f.len());
            for w in tr.stages.windows(2) {
                prop_assert!(w[0].is_subset(&w[1]) && w[0] != w[1]);
            }
            prop_assert!(tr.fixed_point.is_subset(&f.plus(&s)));

            let small: ArgSet = (0..f.len()).filter(|i| d1 & d2 & (1 << i) != 0).collect();
            let large: ArgSet = (0..f.len()).filter(|i| d1 & (1 << i) != 0).collect();
            prop_assert!(delta_step(&f, &s, &small).is_subset(&delta_step(&f, &s, &large)));
        }

        #[test]
        fn traces_follow_delta(f in crate::testing::arb_framework(8), mask in any::<u8>()) {
            let s: ArgSet = (0..f.len()).filter(|i| mask & (1 << i) != 0).collect();
            prop_assume!(f.is_conflict_free(&s));
            let delta = delta_lfp(&f, &s);
            for a in 0..f.len() {
                let tr = component_trace(&f, &s, a);
                for w in tr.stages.windows(2) {
                    prop_assert!(w[1].is_subset(&w[0]));
                }
                for k in 0..=f.len() + 1 {
                    let rest = f.all().difference(delta.stage(k));
                    let mutual: ArgSet = (0..f.len())
                        .filter(|&b| reachable_mod(&f, &rest, a, b) && reachable_mod(&f, &rest, b, a))
                        .collect();
                    prop_assert_eq!(tr.stage(k), mutual);
                }
            }
        }
    }
}
