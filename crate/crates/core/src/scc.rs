//! Strongly connected components, the condensation order, `D_S(X)` and
//! unattacked sets.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;

/// Default cap on the number of unattacked sets enumerated.
pub const DEFAULT_UNATTACKED_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Components in a topological order of the condensation. Among
    /// components that are simultaneously available, the one with the
    /// smallest argument index comes first.
    pub components: Vec<ArgSet>,
    /// Component id per argument; `usize::MAX` for arguments outside the
    /// decomposed set.
    pub component_of: Vec<usize>,
    /// `(c1, c2)` whenever some attack goes from component `c1` to `c2 ≠ c1`.
    pub condensation_edges: BTreeSet<(usize, usize)>,
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The component containing `a`, if `a` was decomposed.
    pub fn component(&self, a: usize) -> Option<&ArgSet> {
        self.component_of
            .get(a)
            .and_then(|&c| self.components.get(c))
    }

    /// Components with an edge into `c`.
    pub fn predecessors(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.condensation_edges
            .iter()
            .filter(move |&&(_, to)| to == c)
            .map(|&(from, _)| from)
    }
}

/// SCCs of the whole framework.
pub fn decompose(f: &Framework) -> SccDecomposition {
    decompose_within(f, &f.all())
}

/// SCCs of the induced sub-framework on `within`, in parent indices.
pub fn decompose_within(f: &Framework, within: &ArgSet) -> SccDecomposition {
    let raw = tarjan(f, within);
    let mut component_of = vec![usize::MAX; f.len()];
    for (c, comp) in raw.iter().enumerate() {
        for a in comp {
            component_of[a] = c;
        }
    }
    let mut edges = BTreeSet::new();
    for (c, comp) in raw.iter().enumerate() {
        for a in comp {
            for b in f.targets(a).intersection(within).iter() {
                let d = component_of[b];
                if d != c {
                    edges.insert((c, d));
                }
            }
        }
    }

    // Kahn's algorithm, smallest member first.
    let mut indegree = vec![0usize; raw.len()];
    for &(_, to) in &edges {
        indegree[to] += 1;
    }
    let key = |c: usize| raw[c].first().unwrap_or(usize::MAX);
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..raw.len())
        .filter(|&c| indegree[c] == 0)
        .map(|c| Reverse((key(c), c)))
        .collect();
    let mut order = Vec::with_capacity(raw.len());
    while let Some(Reverse((_, c))) = ready.pop() {
        order.push(c);
        for &(_, to) in edges.range((c, 0)..(c + 1, 0)) {
            indegree[to] -= 1;
            if indegree[to] == 0 {
                ready.push(Reverse((key(to), to)));
            }
        }
    }
    debug_assert_eq!(order.len(), raw.len(), "condensation must be acyclic");

    let mut new_id = vec![0; raw.len()];
    for (pos, &c) in order.iter().enumerate() {
        new_id[c] = pos;
    }
    let components = order.iter().map(|&c| raw[c].clone()).collect();
    for id in component_of.iter_mut().filter(|c| **c != usize::MAX) {
        *id = new_id[*id];
    }
    let condensation_edges = edges
        .into_iter()
        .map(|(a, b)| (new_id[a], new_id[b]))
        .collect();
    SccDecomposition {
        components,
        component_of,
        condensation_edges,
    }
}

/// Iterative Tarjan over the sub-graph induced by `within`. Components come
/// out in reverse topological order.
fn tarjan(f: &Framework, within: &ArgSet) -> Vec<ArgSet> {
    const UNSEEN: usize = usize::MAX;
    let n = f.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            if within.contains(a) {
                f.targets(a).intersection(within).to_vec()
            } else {
                Vec::new()
            }
        })
        .collect();

    for root in within {
        if index[root] != UNSEEN {
            continue;
        }
        // (node, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = ArgSet::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.insert(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

/// `D_S(X)`: members of `X` attacked by some member of `S ∖ X`.
pub fn d_s(f: &Framework, s: &ArgSet, x: &ArgSet) -> ArgSet {
    f.plus(&s.difference(x)).intersection(x)
}

/// All `U ⊆ A` that receive no attack from `A ∖ U`, in canonical order.
///
/// These are exactly the unions of predecessor-closed sets of components.
pub fn unattacked_sets(f: &Framework, cap: usize) -> Result<Vec<ArgSet>> {
    let dec = decompose(f);
    let preds: Vec<Vec<usize>> = (0..dec.len())
        .map(|c| dec.predecessors(c).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; dec.len()];
    collect_closed(&dec, &preds, 0, &mut chosen, &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn collect_closed(
    dec: &SccDecomposition,
    preds: &[Vec<usize>],
    c: usize,
    chosen: &mut [bool],
    out: &mut Vec<ArgSet>,
    cap: usize,
) -> Result<()> {
    if c == dec.len() {
        if out.len() >= cap {
            return Err(Error::TooManyUnattackedSets { cap });
        }
        let mut u = ArgSet::new();
        for (i, comp) in dec.components.iter().enumerate() {
            if chosen[i] {
                u.union_with(comp);
            }
        }
        out.push(u);
        return Ok(());
    }
    collect_closed(dec, preds, c + 1, chosen, out, cap)?;
    // Predecessors precede `c` in topological order, so they are decided.
    if preds[c].iter().all(|&p| chosen[p]) {
        chosen[c] = true;
        collect_closed(dec, preds, c + 1, chosen, out, cap)?;
        chosen[c] = false;
    }
    Ok(())
}
