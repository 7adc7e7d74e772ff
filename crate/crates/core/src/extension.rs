//! Semantics identifiers, enumeration limits and sets of extensions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::argset::ArgSet;
use crate::error::Error;
use crate::framework::Framework;

/// Every semantics the crate evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Semantics {
    #[serde(rename = "cf")]
    ConflictFree,
    #[serde(rename = "naive")]
    Naive,
    #[serde(rename = "grounded")]
    Grounded,
    #[serde(rename = "stage")]
    Stage,
    #[serde(rename = "cf2")]
    Cf2,
    #[serde(rename = "stg2")]
    Stg2,
    #[serde(rename = "icf2")]
    Icf2,
    #[serde(rename = "istg2")]
    Istg2,
    #[serde(rename = "cf1.5")]
    Cf15,
    #[serde(rename = "stg1.5")]
    Stg15,
}

impl Semantics {
    /// The eight naive-based semantics compared by the evaluation criteria.
    pub const COMPARED: [Semantics; 8] = [
        Semantics::Naive,
        Semantics::Cf2,
        Semantics::Stage,
        Semantics::Stg2,
        Semantics::Icf2,
        Semantics::Cf15,
        Semantics::Istg2,
        Semantics::Stg15,
    ];

    /// The six semantics built on the SCC decomposition.
    pub const SCC_BASED: [Semantics; 6] = [
        Semantics::Cf2,
        Semantics::Stg2,
        Semantics::Icf2,
        Semantics::Istg2,
        Semantics::Cf15,
        Semantics::Stg15,
    ];

    pub const ALL: [Semantics; 10] = [
        Semantics::ConflictFree,
        Semantics::Naive,
        Semantics::Grounded,
        Semantics::Stage,
        Semantics::Cf2,
        Semantics::Stg2,
        Semantics::Icf2,
        Semantics::Istg2,
        Semantics::Cf15,
        Semantics::Stg15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "cf",
            Semantics::Naive => "naive",
            Semantics::Grounded => "grounded",
            Semantics::Stage => "stage",
            Semantics::Cf2 => "cf2",
            Semantics::Stg2 => "stg2",
            Semantics::Icf2 => "icf2",
            Semantics::Istg2 => "istg2",
            Semantics::Cf15 => "cf1.5",
            Semantics::Stg15 => "stg1.5",
        }
    }

    /// Whether the base semantics on a single component is stage (rather
    /// than naive).
    pub fn stage_based(self) -> bool {
        matches!(
            self,
            Semantics::Stage | Semantics::Stg2 | Semantics::Istg2 | Semantics::Stg15
        )
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.to_ascii_lowercase();
        Ok(match s.as_str() {
            "cf" | "conflict-free" => Semantics::ConflictFree,
            "na" | "naive" => Semantics::Naive,
            "gr" | "grounded" => Semantics::Grounded,
            "stg" | "stage" => Semantics::Stage,
            "cf2" => Semantics::Cf2,
            "stg2" => Semantics::Stg2,
            "icf2" => Semantics::Icf2,
            "istg2" => Semantics::Istg2,
            "cf1.5" | "cf15" => Semantics::Cf15,
            "stg1.5" | "stg15" => Semantics::Stg15,
            _ => return Err(Error::UnknownSemantics(s)),
        })
    }
}

/// Size bounds for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest framework (or component) enumerated exhaustively.
    pub max_args: usize,
    /// Cap on unattacked sets tested for directionality.
    pub unattacked_cap: usize,
    /// Step budget for witness searches in the constructive algorithms.
    pub search_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_args: 24,
            unattacked_cap: crate::scc::DEFAULT_UNATTACKED_CAP,
            search_steps: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_size(&self, size: usize) -> Result<(), Error> {
        if size > self.max_args {
            Err(Error::SizeLimit {
                size,
                limit: self.max_args,
            })
        } else {
            Ok(())
        }
    }
}

/// A canonically sorted, duplicate-free list of extensions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtensionSet {
    extensions: Vec<ArgSet>,
}

impl ExtensionSet {
    pub fn new(mut extensions: Vec<ArgSet>) -> Self {
        extensions.sort();
        extensions.dedup();
        ExtensionSet { extensions }
    }

    pub fn extensions(&self) -> &[ArgSet] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn contains(&self, s: &ArgSet) -> bool {
        self.extensions.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ArgSet> {
        self.extensions.iter()
    }

    /// Some extension contains `a`.
    pub fn credulously_accepts(&self, a: usize) -> bool {
        self.extensions.iter().any(|s| s.contains(a))
    }

    /// Every extension contains `a` (vacuously true when empty).
    pub fn skeptically_accepts(&self, a: usize) -> bool {
        self.extensions.iter().all(|s| s.contains(a))
    }

    /// Extensions as label lists.
    pub fn labels(&self, f: &Framework) -> Vec<Vec<String>> {
        self.extensions.iter().map(|s| f.labels_of(s)).collect()
    }

    /// `{S ∩ U : S ∈ self}`.
    pub fn project(&self, u: &ArgSet) -> ExtensionSet {
        ExtensionSet::new(self.extensions.iter().map(|s| s.intersection(u)).collect())
    }
}

impl FromIterator<ArgSet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = ArgSet>>(iter: I) -> Self {
        ExtensionSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a ArgSet;
    type IntoIter = std::slice::Iter<'a, ArgSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.extensions.iter()
    }
}
