//! Conflict-free, naive, stage and grounded semantics.
//!
//! The enumerators work on an arbitrary subset `within` of the framework's
//! arguments, which is how the SCC-based semantics evaluate components
//! without materializing restricted frameworks.

use crate::argset::ArgSet;
use crate::error::Result;
use crate::extension::{ExtensionSet, Limits};
use crate::framework::Framework;

/// Neighbors of each argument in the conflict graph restricted to `within`,
/// excluding the argument itself.
fn conflict_masks(f: &Framework, within: &ArgSet) -> Vec<ArgSet> {
    (0..f.len())
        .map(|v| {
            let mut m = f.targets(v).union(f.attackers(v)).intersection(within);
            m.remove(v);
            m
        })
        .collect()
}

/// All conflict-free subsets of `within`.
pub fn conflict_free_within(
    f: &Framework,
    within: &ArgSet,
    limits: &Limits,
) -> Result<Vec<ArgSet>> {
    limits.check_size(within.len())?;
    let verts: Vec<usize> = within.iter().filter(|&v| !f.is_self_attacking(v)).collect();
    let masks = conflict_masks(f, within);
    let mut out = Vec::new();
    let mut current = ArgSet::new();
    fn go(
        pos: usize,
        verts: &[usize],
        masks: &[ArgSet],
        current: &mut ArgSet,
        out: &mut Vec<ArgSet>,
    ) {
        if pos == verts.len() {
            out.push(current.clone());
            return;
        }
        let v = verts[pos];
        go(pos + 1, verts, masks, current, out);
        if masks[v].is_disjoint(current) {
            current.insert(v);
            go(pos + 1, verts, masks, current, out);
            current.remove(v);
        }
    }
    go(0, &verts, &masks, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// All ⊆-maximal conflict-free subsets of `within`, by depth-first search
/// with conflict pruning.
pub fn naive_within(f: &Framework, within: &ArgSet, limits: &Limits) -> Result<Vec<ArgSet>> {
    limits.check_size(within.len())?;
    let verts: Vec<usize> = within.iter().collect();
    let masks = conflict_masks(f, within);
    // later[pos]: members of `within` after position `pos`.
    let mut later = vec![ArgSet::new(); verts.len() + 1];
    for pos in (0..verts.len()).rev() {
        later[pos] = later[pos + 1].clone();
        later[pos].insert(verts[pos]);
    }
    let mut search = NaiveSearch {
        f,
        verts: &verts,
        masks: &masks,
        later: &later,
        current: ArgSet::new(),
        excluded: Vec::new(),
        out: Vec::new(),
    };
    search.go(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct NaiveSearch<'a> {
    f: &'a Framework,
    verts: &'a [usize],
    masks: &'a [ArgSet],
    later: &'a [ArgSet],
    current: ArgSet,
    excluded: Vec<usize>,
    out: Vec<ArgSet>,
}

impl NaiveSearch<'_> {
    fn go(&mut self, pos: usize) {
        if pos == self.verts.len() {
            let maximal = self
                .excluded
                .iter()
                .all(|&x| self.f.is_self_attacking(x) || self.masks[x].intersects(&self.current));
            if maximal {
                self.out.push(self.current.clone());
            }
            return;
        }
        let v = self.verts[pos];
        let free = !self.f.is_self_attacking(v) && self.masks[v].is_disjoint(&self.current);
        if free {
            self.current.insert(v);
            self.go(pos + 1);
            self.current.remove(v);
        }
        // Excluding v only pays off if something can still block it.
        let blockable = !free || self.masks[v].intersects(&self.later[pos + 1]);
        if blockable {
            self.excluded.push(v);
            self.go(pos + 1);
            self.excluded.pop();
        }
    }
}

/// Conflict-free subsets of `within` whose range inside `within` is
/// ⊆-maximal.
pub fn stage_within(f: &Framework, within: &ArgSet, limits: &Limits) -> Result<Vec<ArgSet>> {
    // Every range-maximal conflict-free set is naive, and any conflict-free
    // set is dominated in range by a naive superset.
    let naive = naive_within(f, within, limits)?;
    let ranges: Vec<ArgSet> = naive
        .iter()
        .map(|s| f.range(s).intersection(within))
        .collect();
    Ok(naive
        .iter()
        .zip(&ranges)
        .filter(|(_, r)| !ranges.iter().any(|t| r.is_subset(t) && *r != t))
        .map(|(s, _)| s.clone())
        .collect())
}

/// `s` is a naive extension of the sub-framework induced by `within`.
pub fn is_naive_within(f: &Framework, within: &ArgSet, s: &ArgSet) -> bool {
    if !s.is_subset(within) || !f.is_conflict_free(s) {
        return false;
    }
    let blocked = f.range(s).union(&f.minus(s));
    within
        .difference(s)
        .iter()
        .all(|x| f.is_self_attacking(x) || blocked.contains(x))
}

/// `s` is a stage extension of the sub-framework induced by `within`.
pub fn is_stage_within(
    f: &Framework,
    within: &ArgSet,
    s: &ArgSet,
    limits: &Limits,
) -> Result<bool> {
    if !is_naive_within(f, within, s) {
        return Ok(false);
    }
    let range = f.range(s).intersection(within);
    for t in naive_within(f, within, limits)? {
        let rt = f.range(&t).intersection(within);
        if range.is_subset(&rt) && range != rt {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn enumerate_conflict_free(f: &Framework, limits: &Limits) -> Result<ExtensionSet> {
    Ok(ExtensionSet::new(conflict_free_within(
        f,
        &f.all(),
        limits,
    )?))
}

pub fn enumerate_naive(f: &Framework, limits: &Limits) -> Result<ExtensionSet> {
    Ok(ExtensionSet::new(naive_within(f, &f.all(), limits)?))
}

pub fn enumerate_stage(f: &Framework, limits: &Limits) -> Result<ExtensionSet> {
    Ok(ExtensionSet::new(stage_within(f, &f.all(), limits)?))
}

/// Least fixed point of the characteristic function, by Kleene iteration
/// from the empty set.
pub fn grounded(f: &Framework) -> ArgSet {
    let mut current = ArgSet::new();
    loop {
        let next = f.characteristic(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}
