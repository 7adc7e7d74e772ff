//! Existence constructions for finitary frameworks, run on finite ones:
//! the finitary enumeration order, greedy `cf1.5`, lexicographic per-SCC
//! `stg1.5` and the two-pass lexicographic stage construction.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::argset::ArgSet;
use crate::base;
use crate::error::{Error, Result};
use crate::extension::Limits;
use crate::framework::Framework;
use crate::scc::{d_s, decompose};

/// Anything that can list the (finitely many) attackers of its arguments.
pub trait AttackerSource {
    /// Number of arguments, `None` when countably infinite.
    fn size(&self) -> Option<usize>;
    /// Attackers of argument `i`, as indices of this source.
    fn attackers_of(&self, i: usize) -> Result<Vec<usize>>;
}

impl AttackerSource for Framework {
    fn size(&self) -> Option<usize> {
        Some(self.len())
    }

    fn attackers_of(&self, i: usize) -> Result<Vec<usize>> {
        Ok(self.attackers(i).to_vec())
    }
}

/// An enumeration in which every argument attacks only finitely many
/// earlier arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitaryOrder {
    pub order: Vec<usize>,
    /// For each position, how many earlier arguments it attacks.
    pub back_attack_bound: Vec<usize>,
}

impl FinitaryOrder {
    /// Plain index order `0..n`.
    pub fn identity(f: &Framework) -> Self {
        let order: Vec<usize> = (0..f.len()).collect();
        FinitaryOrder {
            back_attack_bound: back_attacks(f, &order),
            order,
        }
    }

    /// Position of each of the `n` arguments. Arguments missing from the
    /// order go last, by index.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        let mut next = 0;
        for &a in &self.order {
            if a < n && pos[a] == usize::MAX {
                pos[a] = next;
                next += 1;
            }
        }
        for p in pos.iter_mut() {
            if *p == usize::MAX {
                *p = next;
                next += 1;
            }
        }
        pos
    }

    /// Every argument of `f`, in this order.
    pub fn complete(&self, n: usize) -> Vec<usize> {
        let pos = self.positions(n);
        let mut all: Vec<usize> = (0..n).collect();
        all.sort_by_key(|&a| pos[a]);
        all
    }
}

fn back_attacks(f: &Framework, order: &[usize]) -> Vec<usize> {
    let mut earlier = ArgSet::new();
    order
        .iter()
        .map(|&a| {
            let n = f.targets(a).intersection(&earlier).len();
            earlier.insert(a);
            n
        })
        .collect()
}

/// The first `n` arguments of the finitary enumeration: take the least unused
/// argument, then the attackers of everything listed so far, and repeat.
pub fn finitary_order(source: &impl AttackerSource, n: usize) -> Result<FinitaryOrder> {
    let size = source.size();
    let target = size.map_or(n, |s| s.min(n));
    let mut order: Vec<usize> = Vec::new();
    let mut attackers: Vec<Vec<usize>> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut next_unused = 0usize;
    let mut expanded = 0usize;
    while order.len() < target {
        while seen.contains(&next_unused) {
            next_unused += 1;
        }
        if size.is_some_and(|s| next_unused >= s) {
            break;
        }
        seen.insert(next_unused);
        order.push(next_unused);
        let wave_end = order.len();
        let mut wave = Vec::new();
        for i in expanded..wave_end {
            let mut atts = source.attackers_of(order[i])?;
            atts.sort_unstable();
            for &b in &atts {
                if seen.insert(b) {
                    wave.push(b);
                }
            }
            attackers.push(atts);
        }
        expanded = wave_end;
        wave.sort_unstable();
        order.extend(wave);
    }
    order.truncate(target);

    let mut bound = vec![0; order.len()];
    let position: std::collections::HashMap<usize, usize> =
        order.iter().enumerate().map(|(p, &a)| (a, p)).collect();
    for (p, &a) in order.iter().enumerate() {
        let atts = match attackers.get(p) {
            Some(atts) => atts.clone(),
            None => source.attackers_of(a)?,
        };
        for b in atts {
            if let Some(&q) = position.get(&b) {
                if q > p {
                    bound[q] += 1;
                }
            }
        }
    }
    Ok(FinitaryOrder {
        order,
        back_attack_bound: bound,
    })
}

/// Components in condensation order, ties broken by the earliest position
/// of any member.
fn component_walk(f: &Framework, pos: &[usize]) -> Vec<ArgSet> {
    let dec = decompose(f);
    let key = |c: usize| {
        dec.components[c]
            .iter()
            .map(|a| pos[a])
            .min()
            .unwrap_or(usize::MAX)
    };
    let mut indegree = vec![0usize; dec.len()];
    for &(_, to) in &dec.condensation_edges {
        indegree[to] += 1;
    }
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..dec.len())
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((key(c), c)))
        .collect();
    let mut out = Vec::with_capacity(dec.len());
    while let Some(Reverse((_, c))) = ready.pop() {
        out.push(dec.components[c].clone());
        for &(from, to) in dec.condensation_edges.range((c, 0)..(c + 1, 0)) {
            debug_assert_eq!(from, c);
            indegree[to] -= 1;
            if indegree[to] == 0 {
                ready.push(Reverse((key(to), to)));
            }
        }
    }
    out
}

/// Walk components initial-first and their arguments in `ord`, adding every
/// argument that is not self-attacking and not in conflict with the set.
pub fn greedy_cf15(f: &Framework, ord: &FinitaryOrder) -> ArgSet {
    let pos = ord.positions(f.len());
    let mut s = ArgSet::new();
    for comp in component_walk(f, &pos) {
        let mut members = comp.to_vec();
        members.sort_by_key(|&a| pos[a]);
        for a in members {
            let clash = f.is_self_attacking(a)
                || f.attackers(a).intersects(&s)
                || f.targets(a).intersects(&s);
            if !clash {
                s.insert(a);
            }
        }
    }
    s
}

/// `set` as a bit string in `ord`, most significant first.
fn lex_key(set: &ArgSet, members: &[usize]) -> Vec<bool> {
    members.iter().map(|&a| set.contains(a)).collect()
}

/// Per component `X`, pick the naive set of `F|_{X∖D_S(X)}` whose range in
/// that subframework is lexicographically largest.
pub fn lex_scc_stg15(f: &Framework, ord: &FinitaryOrder, limits: &Limits) -> Result<ArgSet> {
    let pos = ord.positions(f.len());
    let mut s = ArgSet::new();
    for comp in component_walk(f, &pos) {
        let rest = comp.difference(&d_s(f, &s, &comp));
        let mut members = rest.to_vec();
        members.sort_by_key(|&a| pos[a]);
        let best = base::naive_within(f, &rest, limits)?
            .into_iter()
            .max_by_key(|t| {
                let range = f.range(t).intersection(&rest);
                (lex_key(&range, &members), lex_key(t, &members))
            })
            .unwrap_or_default();
        s.union_with(&best);
    }
    Ok(s)
}

struct Cover<'a> {
    f: &'a Framework,
    pos: &'a [usize],
    steps: usize,
    limit: usize,
}

impl Cover<'_> {
    /// A conflict-free `B ⊇ chosen` whose range covers `targets`.
    fn find(
        &mut self,
        targets: &[usize],
        chosen: &mut ArgSet,
        banned: &mut ArgSet,
    ) -> Result<bool> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(Error::SearchLimit { limit: self.limit });
        }
        let range = self.f.range(chosen);
        let Some(&t) = targets.iter().find(|&&t| !range.contains(t)) else {
            return Ok(true);
        };
        let mut candidates: Vec<usize> = self.f.attackers(t).to_vec();
        candidates.retain(|&c| c != t);
        candidates.sort_by_key(|&c| self.pos[c]);
        candidates.insert(0, t);
        let ok = |c: usize, chosen: &ArgSet, banned: &ArgSet| {
            !self.f.is_self_attacking(c)
                && !banned.contains(c)
                && !self.f.attackers(c).intersects(chosen)
                && !self.f.targets(c).intersects(chosen)
        };
        let mut newly_banned = Vec::new();
        let mut found = false;
        for c in candidates {
            if !ok(c, chosen, banned) {
                continue;
            }
            chosen.insert(c);
            let hit = self.find(targets, chosen, banned)?;
            if hit {
                found = true;
                break;
            }
            chosen.remove(c);
            // Later siblings need not revisit c.
            banned.insert(c);
            newly_banned.push(c);
        }
        for c in newly_banned {
            banned.remove(c);
        }
        Ok(found)
    }
}

fn cover_witness(
    f: &Framework,
    pos: &[usize],
    targets: &[usize],
    limits: &Limits,
) -> Result<Option<ArgSet>> {
    let mut search = Cover {
        f,
        pos,
        steps: 0,
        limit: limits.search_steps,
    };
    let mut chosen = ArgSet::new();
    let mut banned = ArgSet::new();
    Ok(search
        .find(targets, &mut chosen, &mut banned)?
        .then_some(chosen))
}

/// Pass 1 grows `D` along `ord`, keeping `a` whenever some conflict-free set
/// still covers `D ∪ {a}` in range; pass 2 returns such a set for the final
/// `D`. Its range is exactly `D`, so it is a stage extension.
pub fn lex_greedy_stage(f: &Framework, ord: &FinitaryOrder, limits: &Limits) -> Result<ArgSet> {
    let pos = ord.positions(f.len());
    let mut d: Vec<usize> = Vec::new();
    for a in ord.complete(f.len()) {
        d.push(a);
        if cover_witness(f, &pos, &d, limits)?.is_none() {
            d.pop();
        }
    }
    Ok(cover_witness(f, &pos, &d, limits)?.expect("pass 1 only keeps coverable sets"))
}
