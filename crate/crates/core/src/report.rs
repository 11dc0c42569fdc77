//! Identity tags and the per-index verification record.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

macro_rules! identities {
    ($($variant:ident => $tag:literal),* $(,)?) => {
        /// Every checkable identity, in canonical report order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Identity {
            $($variant),*
        }

        impl Identity {
            pub fn as_str(self) -> &'static str {
                match self {
                    $(Identity::$variant => $tag),*
                }
            }

            fn every() -> &'static [Identity] {
                &[$(Identity::$variant),*]
            }
        }
    };
}

identities! {
    E3 => "e3",
    E4 => "e4",
    E5 => "e5",
    E6 => "e6",
    E7 => "e7",
    E8 => "e8",
    E9 => "e9",
    E10 => "e10",
    E11 => "e11",
    E12 => "e12",
    Lemma1 => "lemma1",
    Step2r => "step2r",
    G5 => "g5",
    ThmLF => "thmLF",
    ThmAQ => "thmAQ",
    Diag => "diag",
    T2 => "t2",
    LemmaE4Lift => "lemma-e4-lift",
    T5a => "t5a",
    T5b => "t5b",
    T6 => "t6",
    Norm => "norm",
    Hsum => "hsum",
    Product => "product",
    Binet => "binet",
    QBinet => "qbinet",
    Genfunc => "genfunc",
    ThmRM => "thmRM",
    CorConv => "corconv",
    N2Printed => "n2printed",
}

impl Identity {
    /// Tags run by `all`. The -7 variant of the r = 2 sum is excluded: it is
    /// known to be wrong and only runs when requested by name.
    pub fn suite() -> impl Iterator<Item = Identity> {
        Identity::every()
            .iter()
            .copied()
            .filter(|id| *id != Identity::N2Printed)
    }

    pub fn all_tags() -> impl Iterator<Item = Identity> {
        Identity::every().iter().copied()
    }

    /// Tags swept over a grid of strides `r` in addition to the index `n`.
    pub fn uses_stride(self) -> bool {
        matches!(
            self,
            Identity::Lemma1 | Identity::G5 | Identity::ThmLF | Identity::ThmAQ | Identity::Diag
        )
    }

    pub fn min_index(self) -> i64 {
        match self {
            Identity::Lemma1 => 3,
            Identity::E4 | Identity::LemmaE4Lift | Identity::ThmAQ => 2,
            Identity::Step2r
            | Identity::G5
            | Identity::ThmLF
            | Identity::Diag
            | Identity::Product => 1,
            _ => 0,
        }
    }

    /// Why `(n, r)` is outside the stated domain, or `None` if it is inside.
    pub fn domain_violation(self, n: i64, r: Option<i64>) -> Option<String> {
        if n < self.min_index() {
            return Some(format!("n = {n} < {}", self.min_index()));
        }
        if self == Identity::Product && n % 3 != 0 {
            return Some(format!("n = {n} not divisible by 3"));
        }
        if let Some(r) = r {
            if r < 1 {
                return Some(format!("r = {r} < 1"));
            }
            if matches!(self, Identity::G5 | Identity::Diag) && r % 3 == 0 {
                return Some(format!("r = {r} divisible by 3 (degenerate modulus)"));
            }
        }
        None
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::all_tags()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for Identity {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Identity {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of checking one identity at one index (and stride, where used).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    pub status: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl IdentityReport {
    /// Passes iff `lhs == rhs` exactly.
    pub fn compare<T: Serialize + PartialEq>(identity: Identity, n: i64, lhs: &T, rhs: &T) -> Self {
        let status = if lhs == rhs { Outcome::Pass } else { Outcome::Fail };
        IdentityReport {
            identity,
            n,
            r: None,
            s: None,
            status,
            lhs: Some(serde_json::to_value(lhs).expect("exact values serialize")),
            rhs: Some(serde_json::to_value(rhs).expect("exact values serialize")),
            reason: None,
        }
    }

    pub fn skipped(identity: Identity, n: i64, reason: impl Into<String>) -> Self {
        IdentityReport {
            identity,
            n,
            r: None,
            s: None,
            status: Outcome::Skipped,
            lhs: None,
            rhs: None,
            reason: Some(reason.into()),
        }
    }

    pub fn with_r(mut self, r: i64) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Outcome::Fail
    }

    /// Deterministic ordering key: canonical identity order, then `n`, `r`, `s`.
    pub fn sort_key(&self) -> (Identity, i64, i64, i64) {
        (self.identity, self.n, self.r.unwrap_or(-1), self.s.unwrap_or(-1))
    }
}
