use crate::packing::DeficientPartition;
use crate::ratio::{self, Rational};
use serde::{Deserialize, Serialize};

/// Hypothesis families that a [`Certificate`] can refute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Improvement,
    OmegaGS,
    OmegaGSF,
    Sufficient,
    FirstGen,
    Walk,
    Trail,
    ToughEnough,
    PlusOne,
    Factor24,
    NecSuff,
    IndependentTrail,
    Parity,
}

/// A vertex set with both sides of the inequality it violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    #[serde(with = "ratio::serde_str")]
    pub lhs: Rational,
    #[serde(with = "ratio::serde_str")]
    pub rhs: Rational,
    pub family: Family,
    /// The refuted hypothesis is `lhs < rhs` when set, `lhs <= rhs` otherwise.
    pub strict: bool,
}

impl Certificate {
    pub fn is_violation(&self) -> bool {
        if self.strict {
            self.lhs >= self.rhs
        } else {
            self.lhs > self.rhs
        }
    }
}

/// Result of a constructive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Solution(T),
    Certificate(Certificate),
    Deficient(DeficientPartition),
    /// Search budget exhausted before either branch could be established.
    Inconclusive(String),
}

impl<T> Outcome<T> {
    pub fn is_solution(&self) -> bool {
        matches!(self, Outcome::Solution(_))
    }

    pub fn solution(self) -> Option<T> {
        match self {
            Outcome::Solution(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Solution(t) => Outcome::Solution(f(t)),
            Outcome::Certificate(c) => Outcome::Certificate(c),
            Outcome::Deficient(d) => Outcome::Deficient(d),
            Outcome::Inconclusive(s) => Outcome::Inconclusive(s),
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Solution(_) => "solution",
            Outcome::Certificate(_) => "certificate",
            Outcome::Deficient(_) => "deficient",
            Outcome::Inconclusive(_) => "inconclusive",
        }
    }
}
