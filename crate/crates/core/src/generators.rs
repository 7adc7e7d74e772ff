//! Lazily presented countable frameworks, their finite truncations, and
//! stabilization studies over growing truncations.
//!
//! Every family fixes a decoding order `0, 1, 2, …`. `truncate(n)` is the
//! subframework induced by the first `n` decoded arguments. Attacks are
//! produced by [`Generator::links`], which lists the attacks between an
//! argument and the arguments decoded before it; this works even for the
//! chain families, where an argument has infinitely many attackers.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::argset::ArgSet;
use crate::constructive::AttackerSource;
use crate::error::{Error, Result};
use crate::extension::{ExtensionSet, Limits, Semantics};
use crate::fixtures;
use crate::framework::Framework;
use crate::scc_semantics::enumerate_semantics;

trait Family: Send + Sync {
    fn size(&self) -> Option<usize>;
    fn label(&self, i: usize) -> String;
    /// All attackers of `i`; `None` when there are infinitely many.
    fn attackers(&self, i: usize) -> Option<Vec<usize>>;
    /// Attacks `(x, y)` with `{x, y} ∋ i` and both endpoints `≤ i`.
    fn links(&self, i: usize) -> Vec<(usize, usize)>;
}

/// Families whose arguments all have finitely many attackers and targets.
trait NodeFamily: Send + Sync {
    type Node;
    fn node(&self, i: usize) -> Self::Node;
    fn index(&self, n: &Self::Node) -> usize;
    fn name_of(&self, n: &Self::Node) -> String;
    fn attackers_of(&self, n: &Self::Node) -> Vec<Self::Node>;
    fn targets_of(&self, n: &Self::Node) -> Vec<Self::Node>;
}

impl<T: NodeFamily> Family for T {
    fn size(&self) -> Option<usize> {
        None
    }

    fn label(&self, i: usize) -> String {
        self.name_of(&self.node(i))
    }

    fn attackers(&self, i: usize) -> Option<Vec<usize>> {
        let mut out: Vec<usize> = self
            .attackers_of(&self.node(i))
            .iter()
            .map(|n| self.index(n))
            .collect();
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    fn links(&self, i: usize) -> Vec<(usize, usize)> {
        let n = self.node(i);
        let mut out: Vec<(usize, usize)> = self
            .attackers_of(&n)
            .iter()
            .map(|m| (self.index(m), i))
            .filter(|&(x, _)| x <= i)
            .chain(
                self.targets_of(&n)
                    .iter()
                    .map(|m| (i, self.index(m)))
                    .filter(|&(_, y)| y < i),
            )
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

struct Finite(Framework);

impl Family for Finite {
    fn size(&self) -> Option<usize> {
        Some(self.0.len())
    }

    fn label(&self, i: usize) -> String {
        self.0.label(i).to_string()
    }

    fn attackers(&self, i: usize) -> Option<Vec<usize>> {
        Some(self.0.attackers(i).to_vec())
    }

    fn links(&self, i: usize) -> Vec<(usize, usize)> {
        let f = &self.0;
        let mut out: Vec<(usize, usize)> = f
            .attackers(i)
            .iter()
            .filter(|&x| x <= i)
            .map(|x| (x, i))
            .chain(f.targets(i).iter().filter(|&y| y < i).map(|y| (i, y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `a_{i+1} → a_i`, `a_i → b_{i+1}`, `b_i → a_i` for `i ≥ 1`, decoded
/// `a1, b1, a2, b2, …`.
struct BsLadder;

#[derive(Clone, Copy)]
enum Rung {
    A(usize),
    B(usize),
}

impl NodeFamily for BsLadder {
    type Node = Rung;

    fn node(&self, i: usize) -> Rung {
        let k = i / 2 + 1;
        if i.is_multiple_of(2) {
            Rung::A(k)
        } else {
            Rung::B(k)
        }
    }

    fn index(&self, n: &Rung) -> usize {
        match *n {
            Rung::A(k) => 2 * (k - 1),
            Rung::B(k) => 2 * (k - 1) + 1,
        }
    }

    fn name_of(&self, n: &Rung) -> String {
        match *n {
            Rung::A(k) => format!("a{k}"),
            Rung::B(k) => format!("b{k}"),
        }
    }

    fn attackers_of(&self, n: &Rung) -> Vec<Rung> {
        match *n {
            Rung::A(k) => vec![Rung::A(k + 1), Rung::B(k)],
            Rung::B(k) if k >= 2 => vec![Rung::A(k - 1)],
            Rung::B(_) => vec![],
        }
    }

    fn targets_of(&self, n: &Rung) -> Vec<Rung> {
        match *n {
            Rung::A(k) if k >= 2 => vec![Rung::A(k - 1), Rung::B(k + 1)],
            Rung::A(k) => vec![Rung::B(k + 1)],
            Rung::B(k) => vec![Rung::A(k)],
        }
    }
}

/// `a_i → a_j` iff `i > j`, optionally preceded by `x ↔ y` with `x`
/// attacking every `a_i`.
struct OmegaChain {
    xy: bool,
}

impl Family for OmegaChain {
    fn size(&self) -> Option<usize> {
        None
    }

    fn label(&self, i: usize) -> String {
        match (self.xy, i) {
            (true, 0) => "x".into(),
            (true, 1) => "y".into(),
            (true, i) => format!("a{}", i - 2),
            (false, i) => format!("a{i}"),
        }
    }

    fn attackers(&self, i: usize) -> Option<Vec<usize>> {
        match (self.xy, i) {
            (true, 0) => Some(vec![1]),
            (true, 1) => Some(vec![0]),
            _ => None,
        }
    }

    fn links(&self, i: usize) -> Vec<(usize, usize)> {
        let first = if self.xy { 2 } else { 0 };
        match (self.xy, i) {
            (true, 0) => vec![],
            (true, 1) => vec![(0, 1), (1, 0)],
            _ => {
                let mut out: Vec<(usize, usize)> = (first..i).map(|j| (i, j)).collect();
                if self.xy {
                    out.insert(0, (0, i));
                }
                out
            }
        }
    }
}

/// One component per string `σ` of a finite tree, each with
/// `a_i → c_{i+1} → a_{i+1} → b_i → a_i`, `a_0 → d → c_1`, `d → d`, plus
/// `a_0^{τ_i} → a_i^σ` where `τ_1, τ_2, …` lists, in tree order, the strings
/// longer than `σ` that do not extend it.
struct TreeScc {
    strings: Vec<Vec<u32>>,
    /// `cross[s]`: indices into `strings` of `τ_1, τ_2, …` for string `s`.
    cross: Vec<Vec<usize>>,
}

#[derive(Clone, Copy)]
enum TreeNode {
    A(usize, usize),
    B(usize, usize),
    C(usize, usize),
    D(usize),
}

impl TreeScc {
    fn new(strings: Vec<Vec<u32>>) -> Result<Self> {
        if strings.is_empty() {
            return Err(Error::InvalidParams(
                "tree must contain at least one string".into(),
            ));
        }
        for (i, s) in strings.iter().enumerate() {
            if strings[..i].contains(s) {
                return Err(Error::InvalidParams(format!(
                    "string {} listed twice",
                    show_string(s)
                )));
            }
            if !s.is_empty() && !strings.contains(&s[..s.len() - 1].to_vec()) {
                return Err(Error::InvalidParams(format!(
                    "tree is not prefix-closed: {} lacks its parent",
                    show_string(s)
                )));
            }
        }
        let cross = strings
            .iter()
            .map(|sigma| {
                strings
                    .iter()
                    .enumerate()
                    .filter(|(_, tau)| tau.len() > sigma.len() && !tau.starts_with(sigma))
                    .map(|(t, _)| t)
                    .collect()
            })
            .collect();
        Ok(TreeScc { strings, cross })
    }

    fn width(&self) -> usize {
        3 * self.strings.len()
    }
}

fn show_string(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join("-")
}

impl NodeFamily for TreeScc {
    type Node = TreeNode;

    fn node(&self, i: usize) -> TreeNode {
        let round = i / self.width();
        let s = (i % self.width()) / 3;
        match (round, i % 3) {
            (0, 0) => TreeNode::A(s, 0),
            (0, 1) => TreeNode::B(s, 0),
            (0, _) => TreeNode::D(s),
            (r, 0) => TreeNode::A(s, r),
            (r, 1) => TreeNode::B(s, r),
            (r, _) => TreeNode::C(s, r),
        }
    }

    fn index(&self, n: &TreeNode) -> usize {
        let (s, round, slot) = match *n {
            TreeNode::A(s, i) => (s, i, 0),
            TreeNode::B(s, i) => (s, i, 1),
            TreeNode::C(s, i) => (s, i, 2),
            TreeNode::D(s) => (s, 0, 2),
        };
        round * self.width() + 3 * s + slot
    }

    fn name_of(&self, n: &TreeNode) -> String {
        let sigma = |s: usize| show_string(&self.strings[s]);
        match *n {
            TreeNode::A(s, i) => format!("a[{}]_{i}", sigma(s)),
            TreeNode::B(s, i) => format!("b[{}]_{i}", sigma(s)),
            TreeNode::C(s, i) => format!("c[{}]_{i}", sigma(s)),
            TreeNode::D(s) => format!("d[{}]", sigma(s)),
        }
    }

    fn attackers_of(&self, n: &TreeNode) -> Vec<TreeNode> {
        match *n {
            TreeNode::A(s, 0) => vec![TreeNode::B(s, 0)],
            TreeNode::A(s, i) => {
                let mut out = vec![TreeNode::B(s, i), TreeNode::C(s, i)];
                if let Some(&t) = self.cross[s].get(i - 1) {
                    out.push(TreeNode::A(t, 0));
                }
                out
            }
            TreeNode::B(s, i) => vec![TreeNode::A(s, i + 1)],
            TreeNode::C(s, 1) => vec![TreeNode::A(s, 0), TreeNode::D(s)],
            TreeNode::C(s, i) => vec![TreeNode::A(s, i - 1)],
            TreeNode::D(s) => vec![TreeNode::A(s, 0), TreeNode::D(s)],
        }
    }

    fn targets_of(&self, n: &TreeNode) -> Vec<TreeNode> {
        match *n {
            TreeNode::A(s, 0) => {
                let mut out = vec![TreeNode::C(s, 1), TreeNode::D(s)];
                for (sigma, taus) in self.cross.iter().enumerate() {
                    for (k, &t) in taus.iter().enumerate() {
                        if t == s {
                            out.push(TreeNode::A(sigma, k + 1));
                        }
                    }
                }
                out
            }
            TreeNode::A(s, i) => vec![TreeNode::C(s, i + 1), TreeNode::B(s, i - 1)],
            TreeNode::B(s, i) => vec![TreeNode::A(s, i)],
            TreeNode::C(s, i) => vec![TreeNode::A(s, i)],
            TreeNode::D(s) => vec![TreeNode::C(s, 1), TreeNode::D(s)],
        }
    }
}

/// Superscripts `0, …, L` and a final `ω` column.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Level {
    Finite(usize),
    Omega,
}

/// Chunks `a^α, b^α` for `α ∈ {0, …, L, ω}` and `c^β, d^β, e^β` for
/// `β ∈ {1, …, L, ω}`, linked so that component traces take many steps.
struct HighOrdinal {
    levels: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum HoNode {
    A(Level, usize),
    B(Level, usize),
    C(Level, usize),
    D(Level, usize),
    E(Level, usize),
}

impl HighOrdinal {
    fn alphas(&self) -> usize {
        self.levels + 2
    }

    fn betas(&self) -> usize {
        self.levels + 1
    }

    fn round(&self) -> usize {
        2 * self.alphas() + 3 * self.betas()
    }

    fn alpha_at(&self, k: usize) -> Level {
        if k <= self.levels {
            Level::Finite(k)
        } else {
            Level::Omega
        }
    }

    fn alpha_slot(&self, l: Level) -> usize {
        match l {
            Level::Finite(k) => k,
            Level::Omega => self.levels + 1,
        }
    }

    /// `α + 1` when it is a kept superscript of the `c, d, e` chunks.
    fn succ(&self, l: Level) -> Option<Level> {
        match l {
            Level::Finite(k) if k < self.levels => Some(Level::Finite(k + 1)),
            _ => None,
        }
    }

    fn pred(&self, l: Level) -> Option<Level> {
        match l {
            Level::Finite(k) if k >= 1 => Some(Level::Finite(k - 1)),
            _ => None,
        }
    }
}

fn show_level(l: Level) -> String {
    match l {
        Level::Finite(k) => k.to_string(),
        Level::Omega => "w".into(),
    }
}

impl NodeFamily for HighOrdinal {
    type Node = HoNode;

    fn node(&self, i: usize) -> HoNode {
        let (r, off) = (i / self.round(), i % self.round());
        if off < 2 * self.alphas() {
            let l = self.alpha_at(off / 2);
            if off % 2 == 0 {
                HoNode::A(l, r)
            } else {
                HoNode::B(l, r)
            }
        } else {
            let off = off - 2 * self.alphas();
            let l = self.alpha_at(off / 3 + 1);
            match off % 3 {
                0 => HoNode::C(l, r),
                1 => HoNode::D(l, r),
                _ => HoNode::E(l, r),
            }
        }
    }

    fn index(&self, n: &HoNode) -> usize {
        let base = |r: usize| r * self.round();
        match *n {
            HoNode::A(l, r) => base(r) + 2 * self.alpha_slot(l),
            HoNode::B(l, r) => base(r) + 2 * self.alpha_slot(l) + 1,
            HoNode::C(l, r) => base(r) + 2 * self.alphas() + 3 * (self.alpha_slot(l) - 1),
            HoNode::D(l, r) => base(r) + 2 * self.alphas() + 3 * (self.alpha_slot(l) - 1) + 1,
            HoNode::E(l, r) => base(r) + 2 * self.alphas() + 3 * (self.alpha_slot(l) - 1) + 2,
        }
    }

    fn name_of(&self, n: &HoNode) -> String {
        let (c, l, i) = match *n {
            HoNode::A(l, i) => ('a', l, i),
            HoNode::B(l, i) => ('b', l, i),
            HoNode::C(l, i) => ('c', l, i),
            HoNode::D(l, i) => ('d', l, i),
            HoNode::E(l, i) => ('e', l, i),
        };
        format!("{c}[{}]_{i}", show_level(l))
    }

    fn attackers_of(&self, n: &HoNode) -> Vec<HoNode> {
        let mut out = Vec::new();
        match *n {
            HoNode::A(l, i) => {
                out.push(HoNode::B(l, i));
                out.push(HoNode::A(l, i + 1));
                if let Some(s) = self.succ(l) {
                    out.push(HoNode::E(s, i));
                }
                if let Level::Finite(k) = l {
                    if i == 0 {
                        out.push(HoNode::E(Level::Omega, k));
                    }
                }
            }
            HoNode::B(l, i) => {
                if i >= 1 {
                    out.push(HoNode::A(l, i - 1));
                } else if l != Level::Finite(0) {
                    out.push(HoNode::C(l, 0));
                }
            }
            HoNode::C(l, i) => {
                out.push(HoNode::E(l, i));
                out.push(HoNode::C(l, i + 1));
            }
            HoNode::D(l, i) => {
                if i >= 1 {
                    out.push(HoNode::D(l, i - 1));
                } else {
                    out.push(HoNode::A(l, 0));
                }
            }
            HoNode::E(l, i) => {
                out.push(HoNode::D(l, i));
                if let Some(p) = self.pred(l) {
                    out.push(HoNode::B(p, i));
                }
                if l == Level::Omega && i <= self.levels {
                    out.push(HoNode::B(Level::Finite(i), 0));
                }
            }
        }
        out
    }

    fn targets_of(&self, n: &HoNode) -> Vec<HoNode> {
        let mut out = Vec::new();
        match *n {
            HoNode::A(l, i) => {
                out.push(HoNode::B(l, i + 1));
                if i >= 1 {
                    out.push(HoNode::A(l, i - 1));
                }
                if i == 0 && l != Level::Finite(0) {
                    out.push(HoNode::D(l, 0));
                }
            }
            HoNode::B(l, i) => {
                out.push(HoNode::A(l, i));
                if let Some(s) = self.succ(l) {
                    out.push(HoNode::E(s, i));
                }
                if let Level::Finite(k) = l {
                    if i == 0 {
                        out.push(HoNode::E(Level::Omega, k));
                    }
                }
            }
            HoNode::C(l, i) => {
                if i >= 1 {
                    out.push(HoNode::C(l, i - 1));
                } else {
                    out.push(HoNode::B(l, 0));
                }
            }
            HoNode::D(l, i) => {
                out.push(HoNode::E(l, i));
                out.push(HoNode::D(l, i + 1));
            }
            HoNode::E(l, i) => {
                out.push(HoNode::C(l, i));
                if let Some(p) = self.pred(l) {
                    out.push(HoNode::A(p, i));
                }
                if l == Level::Omega && i <= self.levels {
                    out.push(HoNode::A(Level::Finite(i), 0));
                }
            }
        }
        out
    }
}

/// A lazily decoded framework.
pub struct Generator {
    name: String,
    params: BTreeMap<String, String>,
    family: Box<dyn Family>,
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Generator")
            .field("name", &self.name)
            .field("params", &self.params)
            .finish()
    }
}

/// Names accepted by [`Generator::builtin`].
pub const FAMILIES: [&str; 5] = [
    "bs_ladder",
    "omega_chain",
    "omega_chain_xy",
    "tree_scc",
    "high_ordinal",
];

/// Parse a tree given as comma-separated strings. `e` (or nothing) is the
/// empty string; a string is either `-`-separated numbers or, without any
/// `-`, one digit per symbol.
pub fn parse_tree(text: &str) -> Result<Vec<Vec<u32>>> {
    text.split(',')
        .map(str::trim)
        .map(|tok| {
            if tok.is_empty() || tok == "e" || tok == "ε" {
                return Ok(Vec::new());
            }
            let parts: Vec<&str> = if tok.contains('-') {
                tok.split('-').collect()
            } else {
                tok.char_indices()
                    .map(|(i, c)| &tok[i..i + c.len_utf8()])
                    .collect()
            };
            parts
                .iter()
                .map(|p| {
                    p.parse::<u32>()
                        .map_err(|_| Error::InvalidParams(format!("bad tree string `{tok}`")))
                })
                .collect()
        })
        .collect()
}

impl Generator {
    fn new(name: &str, params: BTreeMap<String, String>, family: Box<dyn Family>) -> Self {
        Generator {
            name: name.to_string(),
            params,
            family,
        }
    }

    pub fn bs_ladder() -> Self {
        Self::new("bs_ladder", BTreeMap::new(), Box::new(BsLadder))
    }

    pub fn omega_chain() -> Self {
        Self::new(
            "omega_chain",
            BTreeMap::new(),
            Box::new(OmegaChain { xy: false }),
        )
    }

    pub fn omega_chain_xy() -> Self {
        Self::new(
            "omega_chain_xy",
            BTreeMap::new(),
            Box::new(OmegaChain { xy: true }),
        )
    }

    /// `strings` must be prefix-closed; their order is the enumeration used
    /// for the cross attacks and for decoding.
    pub fn tree_scc(strings: Vec<Vec<u32>>) -> Result<Self> {
        let shown: Vec<String> = strings
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "e".into()
                } else {
                    show_string(s)
                }
            })
            .collect();
        let params = BTreeMap::from([("tree".to_string(), shown.join(","))]);
        Ok(Self::new(
            "tree_scc",
            params,
            Box::new(TreeScc::new(strings)?),
        ))
    }

    pub fn high_ordinal(levels: usize) -> Self {
        let params = BTreeMap::from([("levels".to_string(), levels.to_string())]);
        Self::new("high_ordinal", params, Box::new(HighOrdinal { levels }))
    }

    /// A finite framework presented as a generator.
    pub fn finite(name: &str, f: Framework) -> Self {
        Self::new(name, BTreeMap::new(), Box::new(Finite(f)))
    }

    /// A family from [`FAMILIES`] or a named fixture.
    pub fn builtin(name: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let allow = |keys: &[&str]| -> Result<()> {
            match params.keys().find(|k| !keys.contains(&k.as_str())) {
                Some(k) => Err(Error::InvalidParams(format!(
                    "`{name}` takes no parameter `{k}`"
                ))),
                None => Ok(()),
            }
        };
        match name {
            "bs_ladder" => allow(&[]).map(|_| Self::bs_ladder()),
            "omega_chain" => allow(&[]).map(|_| Self::omega_chain()),
            "omega_chain_xy" => allow(&[]).map(|_| Self::omega_chain_xy()),
            "tree_scc" => {
                allow(&["tree"])?;
                let tree = params
                    .get("tree")
                    .ok_or_else(|| Error::InvalidParams("tree_scc needs tree=…".into()))?;
                Self::tree_scc(parse_tree(tree)?)
            }
            "high_ordinal" => {
                allow(&["levels"])?;
                let levels = match params.get("levels") {
                    None => 2,
                    Some(v) => v.parse().map_err(|_| {
                        Error::InvalidParams(format!("levels must be a count, got `{v}`"))
                    })?,
                };
                Ok(Self::high_ordinal(levels))
            }
            _ => {
                allow(&[])?;
                fixtures::by_name(name)
                    .map(|f| Self::finite(name, f))
                    .ok_or_else(|| Error::InvalidParams(format!("unknown family `{name}`")))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    /// Number of arguments, `None` when countably infinite.
    pub fn size(&self) -> Option<usize> {
        self.family.size()
    }

    fn in_range(&self, i: usize) -> bool {
        self.size().is_none_or(|n| i < n)
    }

    pub fn decode(&self, i: usize) -> Option<String> {
        self.in_range(i).then(|| self.family.label(i))
    }

    /// Attackers of argument `i`; `None` if out of range or infinitely many.
    pub fn attackers(&self, i: usize) -> Option<Vec<usize>> {
        if self.in_range(i) {
            self.family.attackers(i)
        } else {
            None
        }
    }

    /// Attacks between `i` and the arguments decoded before it, including a
    /// self-attack of `i`.
    pub fn links(&self, i: usize) -> Vec<(usize, usize)> {
        if self.in_range(i) {
            self.family.links(i)
        } else {
            Vec::new()
        }
    }

    /// Every argument has finitely many attackers.
    pub fn is_finitary(&self) -> bool {
        !matches!(self.name.as_str(), "omega_chain" | "omega_chain_xy")
    }

    /// The subframework induced by the first `n` decoded arguments.
    pub fn truncate(&self, n: usize) -> Framework {
        let n = self.size().map_or(n, |s| s.min(n));
        let labels: Vec<String> = (0..n).map(|i| self.family.label(i)).collect();
        let attacks: Vec<(usize, usize)> = (0..n).flat_map(|i| self.family.links(i)).collect();
        Framework::from_indices(labels, attacks).expect("families decode distinct labels")
    }

    /// Check that the attackers inside `truncate(n)` are among the full
    /// attacker lists.
    pub fn finitary_audit(&self, n: usize) -> Result<bool> {
        if !self.is_finitary() {
            return Err(Error::NotFinitary(self.name.clone()));
        }
        let f = self.truncate(n);
        for i in 0..f.len() {
            let full: ArgSet = self
                .attackers(i)
                .ok_or_else(|| Error::NotFinitary(self.name.clone()))?
                .into_iter()
                .collect();
            if !f.attackers(i).is_subset(&full) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl AttackerSource for Generator {
    fn size(&self) -> Option<usize> {
        Generator::size(self)
    }

    fn attackers_of(&self, i: usize) -> Result<Vec<usize>> {
        self.attackers(i)
            .ok_or_else(|| Error::NotFinitary(self.name.clone()))
    }
}

/// Whether a tracked argument is credulously accepted at one level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
    /// Not among the decoded arguments at this level.
    Absent,
    /// The level exceeded the enumeration limits.
    Gap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationReport {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub semantics: Semantics,
    pub levels: Vec<usize>,
    pub tracked: BTreeMap<String, Vec<Verdict>>,
    pub stabilized: BTreeMap<String, bool>,
    /// Extension count per level, `None` at gaps.
    pub extension_counts: Vec<Option<usize>>,
    pub window: usize,
}

/// Some extension at the larger level restricts to an extension at the
/// smaller one, containing `t` when `accepted`.
fn coherent(
    small: &ExtensionSet,
    large: &ExtensionSet,
    n_small: usize,
    t: usize,
    accepted: bool,
) -> bool {
    let prefix = ArgSet::full(n_small);
    large.iter().any(|e| {
        let r = e.intersection(&prefix);
        (!accepted || (e.contains(t) && r.contains(t))) && small.contains(&r)
    })
}

/// Credulous acceptance of `tracked` labels on `truncate(g, n)` for each
/// level `n`. A label counts as stabilized when its last `k` verdicts agree,
/// are not absent or gaps, and each step between them is witnessed by an
/// extension of the larger truncation restricting to one of the smaller.
pub fn truncation_study(
    g: &Generator,
    which: Semantics,
    levels: &[usize],
    tracked: &[String],
    k: usize,
    limits: &Limits,
) -> Result<TruncationReport> {
    if k == 0 {
        return Err(Error::InvalidParams(
            "stabilization window must be at least 1".into(),
        ));
    }
    let mut levels = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    let mut frames = Vec::new();
    let mut sets: Vec<Option<ExtensionSet>> = Vec::new();
    for &n in &levels {
        let f = g.truncate(n);
        let es = match enumerate_semantics(&f, which, limits) {
            Ok(es) => Some(es),
            Err(Error::SizeLimit { .. } | Error::SearchLimit { .. }) => None,
            Err(e) => return Err(e),
        };
        frames.push(f);
        sets.push(es);
    }

    let mut verdicts = BTreeMap::new();
    let mut stabilized = BTreeMap::new();
    for label in tracked {
        let row: Vec<Verdict> = frames
            .iter()
            .zip(&sets)
            .map(|(f, es)| match (f.index_of(label), es) {
                (None, _) => Verdict::Absent,
                (Some(_), None) => Verdict::Gap,
                (Some(t), Some(es)) if es.credulously_accepts(t) => Verdict::Accepted,
                (Some(_), Some(_)) => Verdict::Rejected,
            })
            .collect();
        let stable = row.len() >= k && {
            let tail = row.len() - k;
            let v = row[tail];
            matches!(v, Verdict::Accepted | Verdict::Rejected)
                && row[tail..].iter().all(|&w| w == v)
                && (tail + 1..row.len()).all(|j| {
                    let t = frames[j].index_of(label).expect("present");
                    let (small, large) = (sets[j - 1].as_ref(), sets[j].as_ref());
                    coherent(
                        small.expect("no gap"),
                        large.expect("no gap"),
                        frames[j - 1].len(),
                        t,
                        v == Verdict::Accepted,
                    )
                })
        };
        verdicts.insert(label.clone(), row);
        stabilized.insert(label.clone(), stable);
    }
    Ok(TruncationReport {
        family: g.name().to_string(),
        params: g.params().clone(),
        semantics: which,
        extension_counts: sets
            .iter()
            .map(|s| s.as_ref().map(ExtensionSet::len))
            .collect(),
        levels,
        tracked: verdicts,
        stabilized,
        window: k,
    })
}

/// In a `high_ordinal` truncation, all `b`, the odd `c` and the even `d`
/// arguments of superscript at least one.
pub fn high_ordinal_set(f: &Framework) -> ArgSet {
    (0..f.len())
        .filter(|&i| {
            let label = f.label(i);
            let (kind, rest) = label.split_at(1);
            let Some((sup, idx)) = rest.trim_start_matches('[').split_once("]_") else {
                return false;
            };
            let idx: usize = idx.parse().unwrap_or(0);
            match kind {
                "b" => true,
                "c" => sup != "0" && idx % 2 == 1,
                "d" => sup != "0" && idx.is_multiple_of(2),
                _ => false,
            }
        })
        .collect()
}
