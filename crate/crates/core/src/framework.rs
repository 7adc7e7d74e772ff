//! Argumentation frameworks and the set algebra over them.

use std::collections::{BTreeSet, HashMap};

use crate::argset::ArgSet;
use crate::error::{Error, Result};

/// A finite argumentation framework.
///
/// Labels are interned to dense indices in insertion order. The attack
/// relation is stored twice, once per direction, so that both `S⁺` and
/// `S⁻` are linear in `|S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    targets: Vec<ArgSet>,
    attackers: Vec<ArgSet>,
}

/// `S⁺`, `S⁻` and the range `S ∪ S⁺` of a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhoods {
    pub plus: ArgSet,
    pub minus: ArgSet,
    pub range: ArgSet,
}

/// An induced sub-framework together with the map back to parent indices.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub framework: Framework,
    /// `parent[i]` is the parent index of child argument `i`.
    pub parent: Vec<usize>,
}

impl Restriction {
    /// Translate a set of child indices to parent indices.
    pub fn lift(&self, set: &ArgSet) -> ArgSet {
        set.iter().map(|i| self.parent[i]).collect()
    }

    /// Translate a set of parent indices to child indices, dropping
    /// arguments outside the restriction.
    pub fn project(&self, set: &ArgSet) -> ArgSet {
        self.parent
            .iter()
            .enumerate()
            .filter(|(_, p)| set.contains(**p))
            .map(|(i, _)| i)
            .collect()
    }
}

impl Framework {
    /// Build a framework from labels and labelled attacks.
    pub fn build<L, A, B>(labels: L, attacks: A) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        A: IntoIterator<Item = (B, B)>,
        B: AsRef<str>,
    {
        let mut f = Self::with_labels(labels)?;
        for (a, b) in attacks {
            let a = f.require(a.as_ref())?;
            let b = f.require(b.as_ref())?;
            f.add_attack(a, b);
        }
        Ok(f)
    }

    /// Build a framework from labels and index pairs.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices<L>(
        labels: L,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let mut f = Self::with_labels(labels)?;
        let n = f.len();
        for (a, b) in attacks {
            assert!(
                a < n && b < n,
                "attack ({a},{b}) out of range for {n} arguments"
            );
            f.add_attack(a, b);
        }
        Ok(f)
    }

    fn with_labels<L>(labels: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let mut f = Framework {
            labels: Vec::new(),
            index: HashMap::new(),
            targets: Vec::new(),
            attackers: Vec::new(),
        };
        for label in labels {
            let label = label.into();
            if f.index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            f.index.insert(label.clone(), f.labels.len());
            f.labels.push(label);
            f.targets.push(ArgSet::new());
            f.attackers.push(ArgSet::new());
        }
        Ok(f)
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn add_attack(&mut self, a: usize, b: usize) {
        self.targets[a].insert(b);
        self.attackers[b].insert(a);
    }

    pub fn empty() -> Self {
        Self::with_labels(Vec::<String>::new()).expect("no labels")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Look up a list of labels.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ArgSet> {
        labels.iter().map(|l| self.require(l.as_ref())).collect()
    }

    /// Labels of the members of `set`, in canonical order.
    pub fn labels_of(&self, set: &ArgSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.targets[a].contains(b)
    }

    pub fn attackers(&self, a: usize) -> &ArgSet {
        &self.attackers[a]
    }

    pub fn targets(&self, a: usize) -> &ArgSet {
        &self.targets[a]
    }

    pub fn is_self_attacking(&self, a: usize) -> bool {
        self.attacks(a, a)
    }

    /// `a` attacks `b` or `b` attacks `a`.
    pub fn in_conflict(&self, a: usize, b: usize) -> bool {
        self.attacks(a, b) || self.attacks(b, a)
    }

    /// All attacks, sorted by (attacker, target).
    pub fn attack_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.targets[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn attack_count(&self) -> usize {
        self.targets.iter().map(ArgSet::len).sum()
    }

    /// The induced sub-framework on `set ∩ A`.
    pub fn restrict(&self, set: &ArgSet) -> Restriction {
        let parent: Vec<usize> = set.iter().filter(|&i| i < self.len()).collect();
        let mut child = HashMap::with_capacity(parent.len());
        for (c, &p) in parent.iter().enumerate() {
            child.insert(p, c);
        }
        let labels: Vec<String> = parent.iter().map(|&p| self.labels[p].clone()).collect();
        let attacks = parent.iter().enumerate().flat_map(|(c, &p)| {
            let child = &child;
            self.targets[p]
                .iter()
                .filter_map(move |t| child.get(&t).map(|&ct| (c, ct)))
        });
        let framework = Framework::from_indices(labels, attacks.collect::<Vec<_>>())
            .expect("labels of a framework are distinct");
        Restriction { framework, parent }
    }

    /// `S⁺`: everything attacked by a member of `set`.
    pub fn plus(&self, set: &ArgSet) -> ArgSet {
        let mut out = ArgSet::new();
        for s in set {
            out.union_with(&self.targets[s]);
        }
        out
    }

    /// `S⁻`: everything attacking a member of `set`.
    pub fn minus(&self, set: &ArgSet) -> ArgSet {
        let mut out = ArgSet::new();
        for s in set {
            out.union_with(&self.attackers[s]);
        }
        out
    }

    /// `S ∪ S⁺`.
    pub fn range(&self, set: &ArgSet) -> ArgSet {
        self.plus(set).union(set)
    }

    pub fn neighborhoods(&self, set: &ArgSet) -> Neighborhoods {
        let plus = self.plus(set);
        Neighborhoods {
            range: plus.union(set),
            minus: self.minus(set),
            plus,
        }
    }

    pub fn is_conflict_free(&self, set: &ArgSet) -> bool {
        set.iter().all(|s| self.targets[s].is_disjoint(set))
    }

    /// Every attacker of `a` is attacked by `set`.
    pub fn defends(&self, set: &ArgSet, a: usize) -> bool {
        self.attackers[a].is_subset(&self.plus(set))
    }

    /// The characteristic function: all arguments defended by `set`.
    pub fn characteristic(&self, set: &ArgSet) -> ArgSet {
        let plus = self.plus(set);
        (0..self.len())
            .filter(|&a| self.attackers[a].is_subset(&plus))
            .collect()
    }

    /// Unordered conflicting pairs, each stored as `(min, max)`.
    pub fn conflicts(&self) -> BTreeSet<(usize, usize)> {
        self.attack_pairs()
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect()
    }

    /// The same arguments with every attack flipped.
    pub fn reverse(&self) -> Framework {
        let pairs: Vec<_> = self
            .attack_pairs()
            .into_iter()
            .map(|(a, b)| (b, a))
            .collect();
        Framework::from_indices(self.labels.clone(), pairs).expect("labels are distinct")
    }

    /// The same arguments with only the attacks for which `keep` holds.
    pub fn filter_attacks(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Framework {
        let pairs: Vec<_> = self
            .attack_pairs()
            .into_iter()
            .filter(|&(a, b)| keep(a, b))
            .collect();
        Framework::from_indices(self.labels.clone(), pairs).expect("labels are distinct")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn set(f: &Framework, labels: &[&str]) -> ArgSet {
        f.set_of(labels).unwrap()
    }

    #[test]
    fn build_minimal_and_three_cycle() {
        let f = Framework::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.attack_count(), 0);

        let t3 = fixtures::three_cycle();
        assert_eq!(t3.labels(), ["a", "b", "c"]);
        assert_eq!(t3.attack_pairs(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn build_rejects_unknown_endpoint_and_duplicates() {
        assert_eq!(
            Framework::build(["a"], [("a", "b")]).unwrap_err(),
            Error::UnknownLabel("b".into())
        );
        assert_eq!(
            Framework::build(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn restrict_examples() {
        let t3 = fixtures::three_cycle();
        let r = t3.restrict(&set(&t3, &["a", "b"]));
        assert_eq!(r.framework.labels(), ["a", "b"]);
        assert_eq!(r.framework.attack_pairs(), vec![(0, 1)]);

        let pt = fixtures::pentagon_tail();
        assert!(pt.restrict(&ArgSet::new()).framework.is_empty());

        // L4 minus {a1, b1}: the ladder edges among indices 2..4.
        let l4 = fixtures::ladder4();
        let keep = set(&l4, &["a2", "a3", "a4", "b2", "b3", "b4"]);
        let r = l4.restrict(&keep);
        let mut got: Vec<(String, String)> = r
            .framework
            .attack_pairs()
            .into_iter()
            .map(|(a, b)| (r.framework.label(a).into(), r.framework.label(b).into()))
            .collect();
        got.sort();
        let mut want: Vec<(String, String)> = [
            ("a3", "a2"),
            ("a4", "a3"),
            ("a2", "b3"),
            ("a3", "b4"),
            ("b2", "a2"),
            ("b3", "a3"),
            ("b4", "a4"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(r.lift(&r.project(&keep)), keep);
    }

    #[test]
    fn neighborhood_examples() {
        let t3 = fixtures::three_cycle();
        let n = t3.neighborhoods(&set(&t3, &["a"]));
        assert_eq!(n.plus, set(&t3, &["b"]));
        assert_eq!(n.minus, set(&t3, &["c"]));
        assert_eq!(n.range, set(&t3, &["a", "b"]));

        let (skf, _) = fixtures::skepticism_pair();
        assert_eq!(skf.range(&set(&skf, &["b"])), skf.all());

        let e = t3.neighborhoods(&ArgSet::new());
        assert!(e.plus.is_empty() && e.minus.is_empty() && e.range.is_empty());
    }

    #[test]
    fn conflict_freeness() {
        let t3 = fixtures::three_cycle();
        assert!(t3.is_conflict_free(&set(&t3, &["a"])));
        assert!(!t3.is_conflict_free(&set(&t3, &["a", "b"])));
        let wr = fixtures::weak_reinstatement();
        assert!(!wr.is_conflict_free(&set(&wr, &["b3"])));
    }

    #[test]
    fn defense_and_characteristic() {
        let t3 = fixtures::three_cycle();
        let c = t3.index_of("c").unwrap();
        let a = t3.index_of("a").unwrap();
        assert!(t3.defends(&set(&t3, &["a"]), c));
        assert!(!t3.defends(&ArgSet::new(), a));
        let pt = fixtures::pentagon_tail();
        assert_eq!(pt.characteristic(&ArgSet::new()), set(&pt, &["a"]));
    }

    #[test]
    fn conflict_sets() {
        let t3 = fixtures::three_cycle();
        assert_eq!(
            t3.conflicts().into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert!(Framework::empty().conflicts().is_empty());
        let (skf, skg) = fixtures::skepticism_pair();
        assert_eq!(skf.conflicts(), skg.conflicts());
    }

    proptest! {
        #[test]
        fn algebra_invariants(f in crate::testing::arb_framework(8), mask in any::<u16>()) {
            let s: ArgSet = (0..f.len()).filter(|i| mask & (1 << i) != 0).collect();
            let n = f.neighborhoods(&s);
            prop_assert_eq!(&n.range, &s.union(&n.plus));
            let mut minus = ArgSet::new();
            for x in &s {
                for y in 0..f.len() {
                    if f.attacks(y, x) {
                        minus.insert(y);
                    }
                }
            }
            prop_assert_eq!(&n.minus, &minus);

            let r = f.restrict(&f.all());
            prop_assert_eq!(&r.framework, &f);
            prop_assert_eq!(r.parent, (0..f.len()).collect::<Vec<_>>());

            prop_assert!(f.is_conflict_free(&ArgSet::new()));
            prop_assert_eq!(f.conflicts(), f.reverse().conflicts());
        }
    }
}
