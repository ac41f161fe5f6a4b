//! Check reports and re-checkable witnesses.
//!
//! Every axiom checker returns a [`CheckReport`]. A false verdict always
//! carries a [`Witness`] holding the concrete offending data — the pair and
//! step whose exchange candidates were exhausted, or the violated inequality
//! with both sides exact — so a failure can be re-verified by hand or by an
//! independent program. Checkers scan deterministically (points in
//! lexicographic order, steps in lexicographic order), so the reported witness
//! is the lexicographically first failure.

use crate::lattice::LatticePoint;
use crate::rat::qstr;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Result of an axiom or inequality check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: bool,
    /// Present exactly when `verdict` is false.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Non-fatal observations, e.g. "support is not constant parity".
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { verdict: true, witness: None, notes: Vec::new() }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckReport { verdict: false, witness: Some(witness), notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// A violated inequality, both sides exact. `rel` is the relation that was
/// required and failed to hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    #[serde(with = "qstr")]
    pub lhs: BigRational,
    pub rel: Rel,
    #[serde(with = "qstr")]
    pub rhs: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rel {
    Le,
    Lt,
    Ge,
    Gt,
}

impl Rel {
    /// Evaluate `lhs rel rhs`.
    pub fn eval(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            Rel::Le => lhs <= rhs,
            Rel::Lt => lhs < rhs,
            Rel::Ge => lhs >= rhs,
            Rel::Gt => lhs > rhs,
        }
    }
}

impl std::fmt::Display for Rel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Rel::Le => "<=",
            Rel::Lt => "<",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        })
    }
}

/// One exchange candidate examined and rejected while hunting for a step `t`.
///
/// `t = None` encodes the single-step branch of the natural axioms (the
/// branch that needs `alpha+s` and `beta-s` only). `missing` lists required
/// points absent from the support; `inequality` is set when all points were
/// present but the concavity inequality failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriedStep {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<LatticePoint>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub missing: Vec<LatticePoint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inequality: Option<Inequality>,
}

/// A step pair examined by the local axiom (both `s` and `t` existential).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriedStepPair {
    pub s: LatticePoint,
    pub t: LatticePoint,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub missing: Vec<LatticePoint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inequality: Option<Inequality>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An exchange axiom failed at (`alpha`, `beta`) for the universally
    /// quantified step; every candidate examined is listed.
    Exchange {
        alpha: LatticePoint,
        beta: LatticePoint,
        step: LatticePoint,
        tried: Vec<TriedStep>,
    },
    /// The local axiom failed at a pair of points four apart; every (s, t)
    /// combination examined is listed.
    LocalExchange {
        alpha: LatticePoint,
        beta: LatticePoint,
        tried: Vec<TriedStepPair>,
    },
    /// Basis exchange failed: dropping `drop` from `from` admits no
    /// replacement from `to`. Indices are 0-based coordinates.
    BasisExchange {
        from: LatticePoint,
        to: LatticePoint,
        drop: usize,
        tried: Vec<usize>,
    },
    /// Two support points of different coordinate-sum parity (or different
    /// sums where constant sum is required).
    ParityMismatch { alpha: LatticePoint, beta: LatticePoint },
    /// A single point violating a named pointwise constraint.
    PointConstraint { point: LatticePoint, constraint: String },
    /// A rhombus inequality h(b)+h(c) >= h(a)+h(d) (strict when `strict`)
    /// that failed; `lhs` = h(b)+h(c), `rhs` = h(a)+h(d).
    RhombusViolation {
        a: LatticePoint,
        b: LatticePoint,
        c: LatticePoint,
        d: LatticePoint,
        strict: bool,
        #[serde(with = "qstr")]
        lhs: BigRational,
        #[serde(with = "qstr")]
        rhs: BigRational,
    },
    /// A labelled scalar inequality (Newton, valuation-Newton, quotient
    /// bounds, ...).
    Inequality { label: String, inequality: Inequality },
    /// The stability falsifier fired: at rational point `at`, the pair
    /// (i, j) gave a negative value of dP/dzi * dP/dzj - d2P/dzidzj * P.
    FalsifierSample {
        #[serde(with = "crate::rat::qstr_vec")]
        at: Vec<BigRational>,
        i: usize,
        j: usize,
        #[serde(with = "qstr")]
        value: BigRational,
    },
}
