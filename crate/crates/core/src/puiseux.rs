//! Finite generalized Puiseux series with rational exponents and rational
//! coefficients, ordered by the sign of the leading coefficient.
//!
//! An element is a finite sum Σ cₑ tᵉ with strictly decreasing rational
//! exponents e and nonzero rational cₑ; t is thought of as arbitrarily large,
//! so x > 0 iff the leading (largest-exponent) coefficient is positive. The
//! valuation ν(x) is the leading exponent, with ν(0) = −∞. These form an
//! ordered ring (in fact a field, but no division is ever needed or provided:
//! only +, −, ×, integer powers, and exact rational scalar multiples).

use crate::error::Error;
use crate::rat::{parse_ratio, ratio_string};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Valuation: the leading exponent, or −∞ for the zero series. Ordered with
/// −∞ below everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    MinusInfinity,
    Finite(BigRational),
}

impl Valuation {
    pub fn finite(self) -> Option<BigRational> {
        match self {
            Valuation::MinusInfinity => None,
            Valuation::Finite(q) => Some(q),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use Valuation::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) => Ordering::Equal,
            (MinusInfinity, Finite(_)) => Ordering::Less,
            (Finite(_), MinusInfinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::MinusInfinity => f.write_str("-inf"),
            Valuation::Finite(q) => f.write_str(&ratio_string(q)),
        }
    }
}

/// A finite Puiseux series. Terms are stored with strictly decreasing
/// exponents and nonzero coefficients; the empty term list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TermRepr>", into = "Vec<TermRepr>")]
pub struct PuiseuxNumber {
    /// (exponent, coefficient), exponents strictly decreasing.
    terms: Vec<(BigRational, BigRational)>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: String,
    c: String,
}

impl TryFrom<Vec<TermRepr>> for PuiseuxNumber {
    type Error = Error;
    fn try_from(v: Vec<TermRepr>) -> Result<Self, Error> {
        let mut map: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for t in v {
            let e = parse_ratio(&t.exp)?;
            let c = parse_ratio(&t.c)?;
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Ok(PuiseuxNumber::from_map(map))
    }
}

impl From<PuiseuxNumber> for Vec<TermRepr> {
    fn from(x: PuiseuxNumber) -> Self {
        x.terms
            .into_iter()
            .map(|(e, c)| TermRepr { exp: ratio_string(&e), c: ratio_string(&c) })
            .collect()
    }
}

impl PuiseuxNumber {
    pub fn zero() -> Self {
        PuiseuxNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// The constant series c·t⁰ (zero when c = 0).
    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PuiseuxNumber { terms: vec![(BigRational::zero(), c)] }
        }
    }

    /// The monomial tᵉ.
    pub fn t_power(e: BigRational) -> Self {
        PuiseuxNumber { terms: vec![(e, BigRational::one())] }
    }

    /// The monomial c·tᵉ.
    pub fn monomial(e: BigRational, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PuiseuxNumber { terms: vec![(e, c)] }
        }
    }

    fn from_map(map: BTreeMap<BigRational, BigRational>) -> Self {
        let mut terms: Vec<(BigRational, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse(); // BTreeMap ascends; we store descending.
        PuiseuxNumber { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing exponent order.
    pub fn terms(&self) -> &[(BigRational, BigRational)] {
        &self.terms
    }

    /// Leading exponent, −∞ for zero.
    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            None => Valuation::MinusInfinity,
            Some((e, _)) => Valuation::Finite(e.clone()),
        }
    }

    /// Leading coefficient; None for zero.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// x > 0 in the order: leading coefficient positive.
    pub fn is_positive(&self) -> bool {
        self.leading_coeff().map(|c| c.is_positive()).unwrap_or(false)
    }

    pub fn is_negative(&self) -> bool {
        self.leading_coeff().map(|c| c.is_negative()).unwrap_or(false)
    }

    /// Order comparison via the sign of the difference.
    pub fn compare(&self, other: &PuiseuxNumber) -> Ordering {
        let d = self.sub(other);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn neg(&self) -> PuiseuxNumber {
        PuiseuxNumber {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &PuiseuxNumber) -> PuiseuxNumber {
        // Merge two descending term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        PuiseuxNumber { terms: out }
    }

    pub fn sub(&self, other: &PuiseuxNumber) -> PuiseuxNumber {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxNumber) -> PuiseuxNumber {
        let mut map: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                let c = ca * cb;
                let slot = map.entry(e).or_insert_with(BigRational::zero);
                *slot += c;
            }
        }
        Self::from_map(map)
    }

    /// Multiply by an exact rational scalar.
    pub fn scale(&self, c: &BigRational) -> PuiseuxNumber {
        if c.is_zero() {
            return Self::zero();
        }
        PuiseuxNumber {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// xᵏ for k ≥ 0 (x⁰ = 1, including 0⁰).
    pub fn pow(&self, k: u32) -> PuiseuxNumber {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The constant value when the series is a rational constant (including
    /// zero); None when t genuinely appears.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(e, c)] if e.is_zero() => Some(c.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for PuiseuxNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{}", ratio_string(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", ratio_string(&mag))?;
                }
                if e.is_one() {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^({})", ratio_string(e))?;
                }
            }
        }
        Ok(())
    }
}
