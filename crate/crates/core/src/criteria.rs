//! Evaluation criteria for semantics, with re-checkable witnesses on failure.

use std::fmt;

use serde::Serialize;

use crate::argset::ArgSet;
use crate::base::grounded;
use crate::error::{Error, Result};
use crate::extension::{ExtensionSet, Limits, Semantics};
use crate::framework::Framework;
use crate::scc::unattacked_sets;
use crate::scc_semantics::enumerate_semantics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    IMaximality,
    Reinstatement,
    WeakReinstatement,
    CfReinstatement,
    Directionality,
    SkepticismAdequacy,
}

impl Criterion {
    pub const ALL: [Criterion; 6] = [
        Criterion::IMaximality,
        Criterion::Reinstatement,
        Criterion::WeakReinstatement,
        Criterion::CfReinstatement,
        Criterion::Directionality,
        Criterion::SkepticismAdequacy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::IMaximality => "i-max",
            Criterion::Reinstatement => "reinstatement",
            Criterion::WeakReinstatement => "weak-reinstatement",
            Criterion::CfReinstatement => "cf-reinstatement",
            Criterion::Directionality => "directionality",
            Criterion::SkepticismAdequacy => "skepticism-adequacy",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown criterion `{s}`")))
    }
}

/// Which reinstatement property to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reinstatement {
    Plain,
    Weak,
    ConflictFree,
}

/// The two skepticism relations between extension sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Skepticism {
    /// `⋂τ₁ ⊆ ⋂τ₂`.
    Cap,
    /// Every member of `τ₂` includes some member of `τ₁`.
    Weak,
}

impl std::str::FromStr for Skepticism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cap" => Ok(Skepticism::Cap),
            "weak" => Ok(Skepticism::Weak),
            _ => Err(Error::InvalidParams(format!(
                "unknown skepticism relation `{s}`"
            ))),
        }
    }
}

/// Counterexample attached to a failed report. Sets are indices of the
/// checked framework (for adequacy, of `F`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two distinct extensions with `smaller ⊊ larger`.
    Nested { smaller: ArgSet, larger: ArgSet },
    /// `extension` defends `argument` (and, for the conflict-free variant,
    /// stays conflict-free with it) without containing it.
    Defended { extension: ArgSet, argument: usize },
    /// `argument` is grounded but missing from `extension`.
    MissingGrounded { extension: ArgSet, argument: usize },
    /// `σ(F|_U)` (lifted) differs from `{S ∩ U : S ∈ σ(F)}`.
    Directionality {
        unattacked: ArgSet,
        restricted: ExtensionSet,
        projected: ExtensionSet,
    },
    /// `σ(F) ⋠ σ(G)`.
    Skepticism {
        relation: Skepticism,
        left: ExtensionSet,
        right: ExtensionSet,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub semantics: Option<Semantics>,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CriterionReport {
    fn verdict(
        criterion: Criterion,
        semantics: Option<Semantics>,
        witness: Option<Witness>,
    ) -> Self {
        CriterionReport {
            criterion,
            semantics,
            holds: witness.is_none(),
            witness,
        }
    }
}

/// No extension is a proper subset of another.
pub fn check_i_maximality(es: &ExtensionSet) -> CriterionReport {
    let witness = es.iter().find_map(|a| {
        es.iter()
            .find(|b| a != *b && a.is_subset(b))
            .map(|b| Witness::Nested {
                smaller: a.clone(),
                larger: b.clone(),
            })
    });
    CriterionReport::verdict(Criterion::IMaximality, None, witness)
}

pub fn check_reinstatement(
    f: &Framework,
    es: &ExtensionSet,
    variant: Reinstatement,
) -> CriterionReport {
    let criterion = match variant {
        Reinstatement::Plain => Criterion::Reinstatement,
        Reinstatement::Weak => Criterion::WeakReinstatement,
        Reinstatement::ConflictFree => Criterion::CfReinstatement,
    };
    let witness = match variant {
        Reinstatement::Weak => {
            let g = grounded(f);
            es.iter().find_map(|s| {
                g.difference(s).first().map(|a| Witness::MissingGrounded {
                    extension: s.clone(),
                    argument: a,
                })
            })
        }
        _ => es.iter().find_map(|s| {
            (0..f.len())
                .filter(|&a| !s.contains(a) && f.defends(s, a))
                .find(|&a| {
                    variant == Reinstatement::Plain || {
                        let mut t = s.clone();
                        t.insert(a);
                        f.is_conflict_free(&t)
                    }
                })
                .map(|a| Witness::Defended {
                    extension: s.clone(),
                    argument: a,
                })
        }),
    };
    CriterionReport::verdict(criterion, None, witness)
}

/// `u` receives no attack from outside itself.
pub fn is_unattacked(f: &Framework, u: &ArgSet) -> bool {
    u.iter().all(|a| f.attackers(a).is_subset(u))
}

/// Directionality for one unattacked set, or for all of them when `u` is
/// `None`.
pub fn check_directionality(
    f: &Framework,
    which: Semantics,
    u: Option<&ArgSet>,
    limits: &Limits,
) -> Result<CriterionReport> {
    let candidates = match u {
        Some(u) => {
            if !u.is_subset(&f.all()) || !is_unattacked(f, u) {
                return Err(Error::Premise("the set is attacked from outside".into()));
            }
            vec![u.clone()]
        }
        None => unattacked_sets(f, limits.unattacked_cap)?,
    };
    let whole = enumerate_semantics(f, which, limits)?;
    for u in candidates {
        let r = f.restrict(&u);
        let restricted: ExtensionSet = enumerate_semantics(&r.framework, which, limits)?
            .iter()
            .map(|s| r.lift(s))
            .collect();
        let projected = whole.project(&u);
        if restricted != projected {
            let witness = Witness::Directionality {
                unattacked: u,
                restricted,
                projected,
            };
            return Ok(CriterionReport::verdict(
                Criterion::Directionality,
                Some(which),
                Some(witness),
            ));
        }
    }
    Ok(CriterionReport::verdict(
        Criterion::Directionality,
        Some(which),
        None,
    ))
}

/// `⋂ es`, with the empty intersection taken to be `universe`.
pub fn intersection_of(es: &ExtensionSet, universe: &ArgSet) -> ArgSet {
    es.iter()
        .fold(universe.clone(), |acc, s| acc.intersection(s))
}

/// `t1 ⪯ t2` under `rel`; `universe` is the shared argument set.
pub fn skepticism_compare(
    t1: &ExtensionSet,
    t2: &ExtensionSet,
    rel: Skepticism,
    universe: &ArgSet,
) -> bool {
    match rel {
        Skepticism::Cap => intersection_of(t1, universe).is_subset(&intersection_of(t2, universe)),
        Skepticism::Weak => t2.iter().all(|s2| t1.iter().any(|s1| s1.is_subset(s2))),
    }
}

/// Given `R_G ⊆ R_F` and equal conflicts, `σ(F) ⪯ σ(G)`.
pub fn check_skepticism_adequacy(
    f: &Framework,
    g: &Framework,
    which: Semantics,
    rel: Skepticism,
    limits: &Limits,
) -> Result<CriterionReport> {
    let mut labels_f = f.labels().to_vec();
    let mut labels_g = g.labels().to_vec();
    labels_f.sort();
    labels_g.sort();
    if labels_f != labels_g {
        return Err(Error::Premise(
            "the frameworks have different arguments".into(),
        ));
    }
    // G's index i is F's index map[i].
    let map: Vec<usize> = g
        .labels()
        .iter()
        .map(|l| f.index_of(l).expect("same labels"))
        .collect();
    let g_attacks: Vec<(usize, usize)> = g
        .attack_pairs()
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .collect();
    if !g_attacks.iter().all(|&(a, b)| f.attacks(a, b)) {
        return Err(Error::Premise(
            "some attack of G is not an attack of F".into(),
        ));
    }
    let g_in_f = Framework::from_indices(f.labels().to_vec(), g_attacks)?;
    if g_in_f.conflicts() != f.conflicts() {
        return Err(Error::Premise(
            "the frameworks have different conflicts".into(),
        ));
    }
    let left = enumerate_semantics(f, which, limits)?;
    let right = enumerate_semantics(&g_in_f, which, limits)?;
    let witness =
        (!skepticism_compare(&left, &right, rel, &f.all())).then_some(Witness::Skepticism {
            relation: rel,
            left,
            right,
        });
    Ok(CriterionReport::verdict(
        Criterion::SkepticismAdequacy,
        Some(which),
        witness,
    ))
}

/// Re-check a failed report's witness against the primitive operations.
pub fn witness_is_valid(f: &Framework, report: &CriterionReport) -> bool {
    match &report.witness {
        None => report.holds,
        Some(Witness::Nested { smaller, larger }) => smaller != larger && smaller.is_subset(larger),
        Some(Witness::Defended {
            extension,
            argument,
        }) => !extension.contains(*argument) && f.defends(extension, *argument),
        Some(Witness::MissingGrounded {
            extension,
            argument,
        }) => grounded(f).contains(*argument) && !extension.contains(*argument),
        Some(Witness::Directionality {
            unattacked,
            restricted,
            projected,
        }) => is_unattacked(f, unattacked) && restricted != projected,
        Some(Witness::Skepticism {
            relation,
            left,
            right,
        }) => !skepticism_compare(left, right, *relation, &f.all()),
    }
}
