//! Definitional brute force over all subsets.
//!
//! Nothing here shares code with the fast modules beyond the [`Framework`]
//! accessors: sets are `u32` masks, strongly connected components come from
//! a transitive closure instead of Tarjan, and `icf2`/`istg2` are evaluated
//! through the iterated component sequence `C^k_S(a)` rather than the `Δ`
//! fixed point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::extension::{ExtensionSet, Semantics};
use crate::framework::Framework;

/// Hard bound on the oracle's framework size.
pub const MAX_ARGS: usize = 15;

type Mask = u32;

struct Graph {
    n: usize,
    /// `out[i]`: targets of `i`.
    out: Vec<Mask>,
    /// `inc[i]`: attackers of `i`.
    inc: Vec<Mask>,
}

fn bit(i: usize) -> Mask {
    1 << i
}

fn members(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m & bit(*i) != 0)
}

fn subsets(w: Mask) -> impl Iterator<Item = Mask> {
    // All submasks of w, including 0 and w.
    let mut next = Some(w);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & w) };
        Some(cur)
    })
}

impl Graph {
    fn new(f: &Framework) -> Self {
        let n = f.len();
        let mut out = vec![0; n];
        let mut inc = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if f.attacks(a, b) {
                    out[a] |= bit(b);
                    inc[b] |= bit(a);
                }
            }
        }
        Graph { n, out, inc }
    }

    fn all(&self) -> Mask {
        if self.n == 32 {
            Mask::MAX
        } else {
            bit(self.n) - 1
        }
    }

    fn plus(&self, s: Mask) -> Mask {
        members(s).fold(0, |acc, i| acc | self.out[i])
    }

    fn range(&self, s: Mask) -> Mask {
        s | self.plus(s)
    }

    fn conflict_free(&self, s: Mask) -> bool {
        members(s).all(|i| self.out[i] & s == 0)
    }

    fn naive_in(&self, w: Mask, s: Mask) -> bool {
        if s & !w != 0 || !self.conflict_free(s) {
            return false;
        }
        // No strictly larger conflict-free T ⊆ w.
        subsets(w & !s)
            .filter(|&extra| extra != 0)
            .all(|extra| !self.conflict_free(s | extra))
    }

    fn stage_in(&self, w: Mask, s: Mask) -> bool {
        if s & !w != 0 || !self.conflict_free(s) {
            return false;
        }
        let rs = self.range(s) & w;
        subsets(w).filter(|&t| self.conflict_free(t)).all(|t| {
            let rt = self.range(t) & w;
            !(rs & !rt == 0 && rs != rt)
        })
    }

    fn base_in(&self, stage: bool, w: Mask, s: Mask) -> bool {
        if stage {
            self.stage_in(w, s)
        } else {
            self.naive_in(w, s)
        }
    }

    /// Vertices reachable from `a` inside `w` (including `a` when `a ∈ w`).
    fn reach_in(&self, w: Mask, a: usize) -> Mask {
        if w & bit(a) == 0 {
            return 0;
        }
        let mut seen = bit(a);
        loop {
            let next = (seen | self.plus(seen)) & w;
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    fn co_reach_in(&self, w: Mask, a: usize) -> Mask {
        if w & bit(a) == 0 {
            return 0;
        }
        let mut seen = bit(a);
        loop {
            let next = (seen | members(seen).fold(0, |acc, i| acc | self.inc[i])) & w;
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    /// The strongly connected component of `a` in the sub-graph on `w`.
    fn scc_in(&self, w: Mask, a: usize) -> Mask {
        self.reach_in(w, a) & self.co_reach_in(w, a)
    }

    fn sccs_in(&self, w: Mask) -> Vec<Mask> {
        let mut left = w;
        let mut out = Vec::new();
        while left != 0 {
            let a = left.trailing_zeros() as usize;
            let c = self.scc_in(w, a);
            out.push(c);
            left &= !c;
        }
        out
    }

    fn d_s(&self, s: Mask, x: Mask) -> Mask {
        self.plus(s & !x) & x
    }

    /// Literal SCC-recursive evaluation of `cf2`/`stg2` on the sub-framework
    /// induced by `w`.
    fn scc_recursive(&self, stage: bool, w: Mask, s: Mask) -> bool {
        if s & !w != 0 {
            return false;
        }
        let comps = self.sccs_in(w);
        if comps.len() == 1 {
            return self.base_in(stage, w, s);
        }
        comps.into_iter().all(|x| {
            let y = x & !self.d_s(s, x);
            self.scc_recursive(stage, y, s & x)
        })
    }

    /// `C^k_S(a)` iterated until `a` leaves or the component stabilizes.
    /// Returns the final component, empty if `a` left.
    fn final_component(&self, s: Mask, a: usize) -> Mask {
        let mut c = self.scc_in(self.all(), a);
        loop {
            let rest = c & !self.d_s(s, c);
            if rest & bit(a) == 0 {
                return 0;
            }
            let next = self.scc_in(rest, a);
            if next == c {
                return c;
            }
            c = next;
        }
    }

    fn transfinite(&self, stage: bool, s: Mask) -> bool {
        self.conflict_free(s)
            && (0..self.n).all(|a| {
                let c = self.final_component(s, a);
                c == 0 || self.base_in(stage, c, s & c)
            })
    }

    fn prioritized(&self, stage: bool, s: Mask) -> bool {
        self.conflict_free(s)
            && self.sccs_in(self.all()).into_iter().all(|x| {
                let y = x & !self.d_s(s, x);
                self.base_in(stage, y, s & x)
            })
    }

    fn characteristic(&self, s: Mask) -> Mask {
        let p = self.plus(s);
        (0..self.n)
            .filter(|&i| self.inc[i] & !p == 0)
            .fold(0, |acc, i| acc | bit(i))
    }

    fn grounded(&self) -> Mask {
        let fixed: Vec<Mask> = subsets(self.all())
            .filter(|&s| self.characteristic(s) == s)
            .collect();
        *fixed
            .iter()
            .find(|&&g| fixed.iter().all(|&t| g & !t == 0))
            .expect("the characteristic function has a least fixed point")
    }

    fn accepts(&self, which: Semantics, s: Mask) -> bool {
        let all = self.all();
        match which {
            Semantics::ConflictFree => self.conflict_free(s),
            Semantics::Naive => self.naive_in(all, s),
            Semantics::Stage => self.stage_in(all, s),
            Semantics::Grounded => unreachable!("handled separately"),
            Semantics::Cf2 => self.conflict_free(s) && self.scc_recursive(false, all, s),
            Semantics::Stg2 => self.conflict_free(s) && self.scc_recursive(true, all, s),
            Semantics::Icf2 => self.transfinite(false, s),
            Semantics::Istg2 => self.transfinite(true, s),
            Semantics::Cf15 => self.prioritized(false, s),
            Semantics::Stg15 => self.prioritized(true, s),
        }
    }
}

fn to_argset(m: Mask) -> ArgSet {
    members(m).collect()
}

fn to_mask(s: &ArgSet) -> Mask {
    s.iter().fold(0, |acc, i| acc | bit(i))
}

fn check_size(f: &Framework) -> Result<()> {
    if f.len() > MAX_ARGS {
        return Err(Error::SizeLimit {
            size: f.len(),
            limit: MAX_ARGS,
        });
    }
    Ok(())
}

/// The extension set of `which` by scanning all `2^n` subsets.
pub fn brute_force(f: &Framework, which: Semantics) -> Result<ExtensionSet> {
    check_size(f)?;
    let g = Graph::new(f);
    if which == Semantics::Grounded {
        return Ok(ExtensionSet::new(vec![to_argset(g.grounded())]));
    }
    Ok(subsets(g.all())
        .filter(|&s| g.accepts(which, s))
        .map(to_argset)
        .collect())
}

/// Definitional membership test for a single set.
pub fn accepts(f: &Framework, which: Semantics, s: &ArgSet) -> Result<bool> {
    check_size(f)?;
    let g = Graph::new(f);
    if which == Semantics::Grounded {
        return Ok(to_mask(s) == g.grounded());
    }
    Ok(g.accepts(which, to_mask(s)))
}

/// A reproducible random framework on `a0 … a{n-1}`: each ordered pair of
/// distinct arguments is an attack with probability `edge_prob`, each
/// self-attack with probability `self_attack_prob`.
pub fn random_framework(
    n: usize,
    edge_prob: f64,
    self_attack_prob: f64,
    seed: u64,
) -> Result<Framework> {
    if !(1..=MAX_ARGS).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "random framework size {n} outside 1..={MAX_ARGS}"
        )));
    }
    for p in [edge_prob, self_attack_prob] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParams(format!(
                "probability {p} outside [0, 1]"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let p = if a == b { self_attack_prob } else { edge_prob };
            if rng.gen_bool(p) {
                attacks.push((a, b));
            }
        }
    }
    Framework::from_indices((0..n).map(|i| format!("a{i}")), attacks)
}

/// The seeded corpus used by the cross-validation suites: `count`
/// frameworks with `1..=max_args` arguments and varying densities.
pub fn corpus(count: usize, max_args: usize, seed: u64) -> Result<Vec<Framework>> {
    if !(1..=MAX_ARGS).contains(&max_args) {
        return Err(Error::InvalidParams(format!(
            "corpus size bound {max_args} outside 1..={MAX_ARGS}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_args);
            let edge = rng.gen_range(0.05..0.6);
            let self_p = rng.gen_range(0.0..0.25);
            random_framework(n, edge, self_p, rng.gen())
        })
        .collect()
}
