//! Sparse multivariate polynomials over the Puiseux scalars, with the
//! operations the stability layer needs: tropicalization, shifts,
//! diagonalization, polarization, homogenization, trivariate slices, and a
//! division-free (Berkowitz) determinant for matrices over the scalars or
//! over polynomials.
//!
//! Exponents live in ℕ per variable; the support of a polynomial is the set
//! of exponent vectors with nonzero coefficient. The tropicalization of a
//! nonzero polynomial is the function α ↦ ν(a_α) on its support.
//!
//! Expansions that can blow up (binomial shifts, polarization, the repeated
//! products in the generators) take a term-count guard; the default is
//! [`DEFAULT_TERM_CAP`].

use crate::dfunc::DiscreteFunction;
use crate::error::Error;
use crate::lattice::{LatticePoint, PointSet};
use crate::puiseux::PuiseuxNumber;
use crate::rat::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Default term-count guard for expansions.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// A polynomial in `nvars` variables with Puiseux-series coefficients,
/// stored sparsely by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct PuiseuxPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, PuiseuxNumber>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize)]
struct TermEntry {
    alpha: Vec<u32>,
    coeff: PuiseuxNumber,
}

impl TryFrom<PolyRepr> for PuiseuxPolynomial {
    type Error = Error;
    fn try_from(r: PolyRepr) -> Result<Self, Error> {
        let mut p = PuiseuxPolynomial::zero(r.nvars);
        for t in r.terms {
            if t.alpha.len() != r.nvars {
                return Err(Error::DimensionMismatch {
                    expected: r.nvars,
                    found: t.alpha.len(),
                });
            }
            p.add_term(t.alpha, t.coeff);
        }
        Ok(p)
    }
}

impl From<PuiseuxPolynomial> for PolyRepr {
    fn from(p: PuiseuxPolynomial) -> Self {
        PolyRepr {
            nvars: p.nvars,
            terms: p
                .terms
                .into_iter()
                .map(|(alpha, coeff)| TermEntry { alpha, coeff })
                .collect(),
        }
    }
}

impl PuiseuxPolynomial {
    pub fn zero(nvars: usize) -> Self {
        PuiseuxPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, PuiseuxNumber::one())
    }

    pub fn constant(nvars: usize, c: PuiseuxNumber) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable z_i.
    pub fn variable(nvars: usize, i: usize) -> Result<Self, Error> {
        if i >= nvars {
            return Err(Error::IndexOutOfRange { index: i, dim: nvars });
        }
        let mut alpha = vec![0; nvars];
        alpha[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(alpha, PuiseuxNumber::one());
        Ok(p)
    }

    /// One monomial c · z^alpha.
    pub fn monomial(nvars: usize, alpha: Vec<u32>, c: PuiseuxNumber) -> Result<Self, Error> {
        if alpha.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, found: alpha.len() });
        }
        let mut p = Self::zero(nvars);
        p.add_term(alpha, c);
        Ok(p)
    }

    /// Add `c · z^alpha` into the polynomial, dropping the slot if it
    /// cancels to zero.
    pub fn add_term(&mut self, alpha: Vec<u32>, c: PuiseuxNumber) {
        debug_assert_eq!(alpha.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &PuiseuxNumber)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &[u32]) -> Option<&PuiseuxNumber> {
        self.terms.get(alpha)
    }

    /// Exponent vectors with nonzero coefficient, as lattice points.
    pub fn support(&self) -> PointSet {
        PointSet::new(
            self.nvars,
            self.terms
                .keys()
                .map(|a| LatticePoint::new(a.iter().map(|&e| e as i64).collect())),
        )
        .expect("uniform dims")
    }

    /// α ↦ ν(a_α) on the support. Errors on the zero polynomial.
    pub fn tropicalize(&self) -> Result<DiscreteFunction, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        DiscreteFunction::new(self.terms.iter().map(|(a, c)| {
            let v = c
                .valuation()
                .finite()
                .expect("stored coefficients are nonzero");
            (LatticePoint::new(a.iter().map(|&e| e as i64).collect()), v)
        }))
    }

    pub fn add(&self, other: &PuiseuxPolynomial) -> Result<PuiseuxPolynomial, Error> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> PuiseuxPolynomial {
        PuiseuxPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &PuiseuxPolynomial) -> Result<PuiseuxPolynomial, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxPolynomial) -> Result<PuiseuxPolynomial, Error> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        let mut out = PuiseuxPolynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let alpha: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(alpha, ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &PuiseuxNumber) -> PuiseuxPolynomial {
        let mut out = PuiseuxPolynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            out.add_term(a.clone(), ca.mul(c));
        }
        out
    }

    /// ∂P/∂z_i.
    pub fn partial_derivative(&self, i: usize) -> Result<PuiseuxPolynomial, Error> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, dim: self.nvars });
        }
        let mut out = PuiseuxPolynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            let k = a[i];
            if k == 0 {
                continue;
            }
            let mut alpha = a.clone();
            alpha[i] = k - 1;
            out.add_term(alpha, c.scale(&BigRational::from_integer(k.into())));
        }
        Ok(out)
    }

    /// Substitute z_i ← z_i + w for a fresh variable w appended at index
    /// `nvars`. Expands binomially; guarded by `cap` output terms.
    pub fn substitute_shift_capped(
        &self,
        i: usize,
        cap: usize,
    ) -> Result<PuiseuxPolynomial, Error> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, dim: self.nvars });
        }
        let mut out = PuiseuxPolynomial::zero(self.nvars + 1);
        for (a, c) in &self.terms {
            let k = a[i];
            for j in 0..=k {
                let mut alpha = a.clone();
                alpha[i] = j;
                alpha.push(k - j);
                let coeff = c.scale(&BigRational::from_integer(binomial(k as u64, j as u64)));
                out.add_term(alpha, coeff);
                if out.num_terms() > cap {
                    return Err(Error::TermCapExceeded { cap });
                }
            }
        }
        Ok(out)
    }

    /// [`Self::substitute_shift_capped`] with the default guard.
    pub fn substitute_shift(&self, i: usize) -> Result<PuiseuxPolynomial, Error> {
        self.substitute_shift_capped(i, DEFAULT_TERM_CAP)
    }

    /// Substitute z_j ← z_i (i ≠ j), deleting variable j. Exponents of i and
    /// j merge; the result has one variable fewer.
    pub fn diagonalize(&self, i: usize, j: usize) -> Result<PuiseuxPolynomial, Error> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, dim: self.nvars });
        }
        if j >= self.nvars {
            return Err(Error::IndexOutOfRange { index: j, dim: self.nvars });
        }
        if i == j {
            return Err(Error::SameVariable { index: i });
        }
        let mut out = PuiseuxPolynomial::zero(self.nvars - 1);
        // Index of i after j is removed.
        let i_after = if i > j { i - 1 } else { i };
        for (a, c) in &self.terms {
            let mut alpha = a.clone();
            let ej = alpha.remove(j);
            alpha[i_after] += ej;
            out.add_term(alpha, c.clone());
        }
        Ok(out)
    }

    /// Substitute z_i ← ξ · z_i with ξ ≥ 0 in the Puiseux order. ξ = 0 kills
    /// every term with a positive power of z_i (0⁰ = 1 keeps the rest).
    pub fn scale_var(&self, i: usize, xi: &PuiseuxNumber) -> Result<PuiseuxPolynomial, Error> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, dim: self.nvars });
        }
        if xi.is_negative() {
            return Err(Error::NegativeScale);
        }
        let mut out = PuiseuxPolynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.mul(&xi.pow(a[i])));
        }
        Ok(out)
    }

    /// Polarize: variable i of degree dᵢ becomes dᵢ 0/1 slot variables (in
    /// variable order), and z_iᵏ maps to e_k(slots)/C(dᵢ, k). The result is
    /// multiaffine, symmetric within each block, and identifying each block's
    /// slots recovers the original polynomial.
    pub fn polarize_capped(&self, cap: usize) -> Result<PuiseuxPolynomial, Error> {
        let degs = self.variable_degrees();
        let slots: usize = degs.iter().map(|&d| d as usize).sum();
        let mut out = PuiseuxPolynomial::zero(slots);
        for (a, c) in &self.terms {
            // Scale by the product of 1/C(d_i, a_i).
            let mut denom = BigRational::from_integer(1.into());
            for (i, &k) in a.iter().enumerate() {
                denom *= BigRational::from_integer(binomial(degs[i] as u64, k as u64));
            }
            let coeff = c.scale(&denom.recip());
            // Distribute over per-block slot choices.
            let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
            for (i, &k) in a.iter().enumerate() {
                let choices = zero_one_vectors(degs[i], a_usize(k));
                let mut next = Vec::with_capacity(acc.len() * choices.len());
                for prefix in &acc {
                    for ch in &choices {
                        let mut v = prefix.clone();
                        v.extend_from_slice(ch);
                        next.push(v);
                    }
                }
                acc = next;
            }
            for alpha in acc {
                out.add_term(alpha, coeff.clone());
                if out.num_terms() > cap {
                    return Err(Error::TermCapExceeded { cap });
                }
            }
        }
        Ok(out)
    }

    /// [`Self::polarize_capped`] with the default guard.
    pub fn polarize(&self) -> Result<PuiseuxPolynomial, Error> {
        self.polarize_capped(DEFAULT_TERM_CAP)
    }

    /// Per-variable degrees max_α αᵢ (the polarization slot counts).
    pub fn variable_degrees(&self) -> Vec<u32> {
        let mut degs = vec![0u32; self.nvars];
        for a in self.terms.keys() {
            for (i, &e) in a.iter().enumerate() {
                degs[i] = degs[i].max(e);
            }
        }
        degs
    }

    /// Identify the slot blocks of a polarized polynomial back to one
    /// variable per block. `kappa` gives block sizes; used to state the
    /// polarize/identify round trip.
    pub fn identify_blocks(&self, kappa: &[u32]) -> Result<PuiseuxPolynomial, Error> {
        let slots: usize = kappa.iter().map(|&k| k as usize).sum();
        if slots != self.nvars {
            return Err(Error::DimensionMismatch { expected: slots, found: self.nvars });
        }
        let mut out = PuiseuxPolynomial::zero(kappa.len());
        for (a, c) in &self.terms {
            let mut alpha = Vec::with_capacity(kappa.len());
            let mut pos = 0usize;
            for &k in kappa {
                let k = k as usize;
                alpha.push(a[pos..pos + k].iter().sum());
                pos += k;
            }
            out.add_term(alpha, c.clone());
        }
        Ok(out)
    }

    /// Total degree max |α| of a nonzero polynomial.
    pub fn total_degree(&self) -> Result<u32, Error> {
        self.terms
            .keys()
            .map(|a| a.iter().sum::<u32>())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// True when every exponent vector has the same coordinate sum.
    pub fn is_homogeneous(&self) -> bool {
        let mut sums = self.terms.keys().map(|a| a.iter().sum::<u32>());
        match sums.next() {
            None => true,
            Some(first) => sums.all(|s| s == first),
        }
    }

    /// Homogenize with a fresh last variable: term z^α of a degree-r
    /// polynomial gains the factor z_{n+1}^{r−|α|}.
    pub fn homogenize(&self) -> Result<PuiseuxPolynomial, Error> {
        let r = self.total_degree()?;
        let mut out = PuiseuxPolynomial::zero(self.nvars + 1);
        for (a, c) in &self.terms {
            let mut alpha = a.clone();
            alpha.push(r - a.iter().sum::<u32>());
            out.add_term(alpha, c.clone());
        }
        Ok(out)
    }

    /// Evaluate at a point of the scalar field.
    pub fn evaluate(&self, point: &[PuiseuxNumber]) -> Result<PuiseuxNumber, Error> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let mut acc = PuiseuxNumber::zero();
        for (a, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in a.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

fn a_usize(k: u32) -> usize {
    k as usize
}

/// All 0/1 vectors of length `len` with exactly `ones` ones, lexicographic.
fn zero_one_vectors(len: u32, ones: usize) -> Vec<Vec<u32>> {
    let len = len as usize;
    let mut out = Vec::new();
    if ones > len {
        return out;
    }
    let mut cur = vec![0u32; len];
    fn rec(cur: &mut Vec<u32>, i: usize, left: usize, out: &mut Vec<Vec<u32>>) {
        let len = cur.len();
        if left > len - i {
            return;
        }
        if i == len {
            out.push(cur.clone());
            return;
        }
        cur[i] = 0;
        rec(cur, i + 1, left, out);
        if left > 0 {
            cur[i] = 1;
            rec(cur, i + 1, left - 1, out);
            cur[i] = 0;
        }
    }
    rec(&mut cur, 0, ones, &mut out);
    out
}

/// Which trivariate slice to take. The tuple names the values substituted
/// for (x, y, z); the `·` marks the variable that remains free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlicePattern {
    /// x ↦ P(x, 1, λ)
    XOneLambda,
    /// y ↦ P(1, y, λ)
    OneYLambda,
    /// z ↦ P(1, λ, z)
    OneLambdaZ,
    /// y ↦ P(1, y, 0)
    OneYZero,
    /// z ↦ P(1, 0, z)
    OneZeroZ,
}

impl SlicePattern {
    /// The five families used by the slice harnesses. The last two do not
    /// depend on λ.
    pub const ALL: [SlicePattern; 5] = [
        SlicePattern::XOneLambda,
        SlicePattern::OneYLambda,
        SlicePattern::OneLambdaZ,
        SlicePattern::OneYZero,
        SlicePattern::OneZeroZ,
    ];

    pub fn uses_lambda(self) -> bool {
        matches!(
            self,
            SlicePattern::XOneLambda | SlicePattern::OneYLambda | SlicePattern::OneLambdaZ
        )
    }

    /// (free variable index, λ position index or None-with-zero semantics)
    fn layout(self) -> (usize, Option<usize>, Option<usize>) {
        // (free, lambda position, zero position)
        match self {
            SlicePattern::XOneLambda => (0, Some(2), None),
            SlicePattern::OneYLambda => (1, Some(2), None),
            SlicePattern::OneLambdaZ => (2, Some(1), None),
            SlicePattern::OneYZero => (1, None, Some(2)),
            SlicePattern::OneZeroZ => (2, None, Some(1)),
        }
    }
}

impl std::fmt::Display for SlicePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SlicePattern::XOneLambda => "P(x,1,h)",
            SlicePattern::OneYLambda => "P(1,y,h)",
            SlicePattern::OneLambdaZ => "P(1,h,z)",
            SlicePattern::OneYZero => "P(1,y,0)",
            SlicePattern::OneZeroZ => "P(1,0,z)",
        })
    }
}

/// Restrict a trivariate polynomial along one of the slice patterns.
/// Returns dense univariate coefficients (degree k at index k, trailing
/// zeros trimmed; empty = zero polynomial). λ is ignored by the two boundary
/// patterns.
pub fn slice(
    p: &PuiseuxPolynomial,
    pattern: SlicePattern,
    lambda: &PuiseuxNumber,
) -> Result<Vec<PuiseuxNumber>, Error> {
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.nvars() });
    }
    let (free, lpos, zpos) = pattern.layout();
    let mut coeffs: Vec<PuiseuxNumber> = Vec::new();
    for (a, c) in p.terms() {
        let mut term = c.clone();
        if let Some(z) = zpos {
            if a[z] > 0 {
                continue;
            }
        }
        if let Some(l) = lpos {
            if a[l] > 0 {
                term = term.mul(&lambda.pow(a[l]));
                if term.is_zero() {
                    continue;
                }
            }
        }
        let deg = a[free] as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, PuiseuxNumber::zero());
        }
        coeffs[deg] = coeffs[deg].add(&term);
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Ring operations the Berkowitz determinant needs. `*_like` take a
/// prototype so that shaped elements (polynomials, which need `nvars`) can
/// produce identities.
pub trait DetScalar: Clone {
    fn det_zero_like(&self) -> Self;
    fn det_one_like(&self) -> Self;
    fn det_add(&self, rhs: &Self) -> Self;
    fn det_mul(&self, rhs: &Self) -> Self;
    fn det_neg(&self) -> Self;
}

impl DetScalar for PuiseuxNumber {
    fn det_zero_like(&self) -> Self {
        PuiseuxNumber::zero()
    }
    fn det_one_like(&self) -> Self {
        PuiseuxNumber::one()
    }
    fn det_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn det_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn det_neg(&self) -> Self {
        self.neg()
    }
}

impl DetScalar for PuiseuxPolynomial {
    fn det_zero_like(&self) -> Self {
        PuiseuxPolynomial::zero(self.nvars())
    }
    fn det_one_like(&self) -> Self {
        PuiseuxPolynomial::one(self.nvars())
    }
    fn det_add(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("uniform nvars in determinant")
    }
    fn det_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("uniform nvars in determinant")
    }
    fn det_neg(&self) -> Self {
        self.neg()
    }
}

impl DetScalar for BigRational {
    fn det_zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn det_one_like(&self) -> Self {
        BigRational::from_integer(1.into())
    }
    fn det_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn det_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn det_neg(&self) -> Self {
        -self.clone()
    }
}

/// Division-free determinant via the Berkowitz iteration (characteristic
/// polynomial through Toeplitz products). Only +, ×, and negation of the
/// scalar are used, so it works over the Puiseux scalars and over polynomial
/// matrices alike. The matrix must be square and nonempty.
pub fn berkowitz_det<T: DetScalar>(m: &[Vec<T>]) -> Result<T, Error> {
    let n = m.len();
    if n == 0 {
        return Err(Error::BadMatrix("empty matrix has no prototype element".into()));
    }
    for row in m {
        if row.len() != n {
            return Err(Error::BadMatrix(format!(
                "expected {n} columns, found {}",
                row.len()
            )));
        }
    }
    let proto = &m[0][0];
    let zero = proto.det_zero_like();
    let one = proto.det_one_like();

    // c holds the characteristic polynomial coefficients of the leading
    // principal minor processed so far, highest power first, c[0] = 1.
    let mut c: Vec<T> = vec![one.clone(), m[0][0].det_neg()];
    for size in 2..=n {
        // Toeplitz column: q_0 = 1, q_1 = -corner, q_j = -(row · M^(j-2) · col).
        let k = size - 1; // previous principal block is k x k
        let corner = &m[k][k];
        let row: Vec<&T> = (0..k).map(|j| &m[k][j]).collect();
        let col: Vec<T> = (0..k).map(|i| m[i][k].clone()).collect();

        let mut q: Vec<T> = Vec::with_capacity(size + 1);
        q.push(one.clone());
        q.push(corner.det_neg());
        // v starts as col; each iteration forms row·v then advances v = M·v.
        let mut v = col;
        for _ in 2..=size {
            let mut dot = zero.clone();
            for j in 0..k {
                dot = dot.det_add(&row[j].det_mul(&v[j]));
            }
            q.push(dot.det_neg());
            // v = M v (principal k x k block).
            let mut next = Vec::with_capacity(k);
            for i in 0..k {
                let mut s = zero.clone();
                for j in 0..k {
                    s = s.det_add(&m[i][j].det_mul(&v[j]));
                }
                next.push(s);
            }
            v = next;
        }

        // c_new[i] = sum_{j <= i} q[i-j] * c[j]
        let mut c_new: Vec<T> = Vec::with_capacity(size + 1);
        for i in 0..=size {
            let mut s = zero.clone();
            for j in 0..=i.min(c.len() - 1) {
                if i - j < q.len() {
                    s = s.det_add(&q[i - j].det_mul(&c[j]));
                }
            }
            c_new.push(s);
        }
        c = c_new;
    }

    // char poly p(x) = det(xI - A); p(0) = det(-A) = (-1)^n det(A).
    let constant = c.pop().expect("nonempty coefficient vector");
    Ok(if n % 2 == 0 { constant } else { constant.det_neg() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::Valuation;
    use crate::rat::parse_ratio;

    fn q(s: &str) -> BigRational {
        parse_ratio(s).unwrap()
    }

    fn c(s: &str) -> PuiseuxNumber {
        PuiseuxNumber::from_rational(q(s))
    }

    fn tpow(s: &str) -> PuiseuxNumber {
        PuiseuxNumber::t_power(q(s))
    }

    /// Polynomial from (alpha, coeff) pairs.
    fn poly(nvars: usize, terms: &[(&[u32], PuiseuxNumber)]) -> PuiseuxPolynomial {
        let mut p = PuiseuxPolynomial::zero(nvars);
        for (a, coeff) in terms {
            p.add_term(a.to_vec(), coeff.clone());
        }
        p
    }

    #[test]
    fn support_and_tropicalize() {
        // P = t^2 x + 3 y^2
        let p = poly(2, &[(&[1, 0], tpow("2")), (&[0, 2], c("3"))]);
        let supp = p.support();
        assert_eq!(supp.len(), 2);
        let trop = p.tropicalize().unwrap();
        assert_eq!(trop.value(&LatticePoint::new(vec![1, 0])), Some(&q("2")));
        assert_eq!(trop.value(&LatticePoint::new(vec![0, 2])), Some(&q("0")));
        assert!(PuiseuxPolynomial::zero(2).tropicalize().is_err());
    }

    #[test]
    fn arithmetic() {
        let x = PuiseuxPolynomial::variable(2, 0).unwrap();
        let y = PuiseuxPolynomial::variable(2, 1).unwrap();
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.coeff(&[1, 1]), Some(&c("2")));
        assert_eq!(sq.coeff(&[2, 0]), Some(&c("1")));
        assert_eq!(sq.num_terms(), 3);
        // x - x = 0
        assert!(x.sub(&x).unwrap().is_zero());
        // nvars mismatch is an error
        assert!(x.add(&PuiseuxPolynomial::one(3)).is_err());
    }

    #[test]
    fn derivative_examples() {
        // d/dx (x^2 y + x) = 2xy + 1
        let p = poly(2, &[(&[2, 1], c("1")), (&[1, 0], c("1"))]);
        let d = p.partial_derivative(0).unwrap();
        assert_eq!(d.coeff(&[1, 1]), Some(&c("2")));
        assert_eq!(d.coeff(&[0, 0]), Some(&c("1")));
        // d/dy x = 0
        let x = PuiseuxPolynomial::variable(2, 0).unwrap();
        assert!(x.partial_derivative(1).unwrap().is_zero());
    }

    #[test]
    fn shift_examples() {
        // x^2 with x <- x + w: x^2 + 2xw + w^2
        let p = poly(1, &[(&[2], c("1"))]);
        let s = p.substitute_shift(0).unwrap();
        assert_eq!(s.nvars(), 2);
        assert_eq!(s.coeff(&[2, 0]), Some(&c("1")));
        assert_eq!(s.coeff(&[1, 1]), Some(&c("2")));
        assert_eq!(s.coeff(&[0, 2]), Some(&c("1")));
        // Tiny cap trips the guard.
        assert!(matches!(
            p.substitute_shift_capped(0, 2),
            Err(Error::TermCapExceeded { cap: 2 })
        ));
    }

    #[test]
    fn diagonalize_examples() {
        // xy with y <- x: x^2
        let p = poly(2, &[(&[1, 1], c("1"))]);
        let d = p.diagonalize(0, 1).unwrap();
        assert_eq!(d.nvars(), 1);
        assert_eq!(d.coeff(&[2]), Some(&c("1")));
        assert!(p.diagonalize(0, 0).is_err());
        // Terms that collide merge: x + y -> 2x.
        let s = poly(2, &[(&[1, 0], c("1")), (&[0, 1], c("1"))]);
        assert_eq!(s.diagonalize(0, 1).unwrap().coeff(&[1]), Some(&c("2")));
    }

    #[test]
    fn scale_var_examples() {
        // x^2 + x with x <- t x: t^2 x^2 + t x
        let p = poly(1, &[(&[2], c("1")), (&[1], c("1"))]);
        let s = p.scale_var(0, &tpow("1")).unwrap();
        assert_eq!(s.coeff(&[2]), Some(&tpow("2")));
        assert_eq!(s.coeff(&[1]), Some(&tpow("1")));
        // xi = 0 keeps only the z_i-free part.
        let z = poly(1, &[(&[2], c("1")), (&[0], c("5"))]);
        let zs = z.scale_var(0, &PuiseuxNumber::zero()).unwrap();
        assert_eq!(zs.num_terms(), 1);
        assert_eq!(zs.coeff(&[0]), Some(&c("5")));
        // Negative xi refused.
        assert!(z.scale_var(0, &c("-1")).is_err());
    }

    #[test]
    fn polarize_examples() {
        // z^2 + 2z + 1 with d = 2: z1 z2 + (z1 + z2) + 1.
        let p = poly(1, &[(&[2], c("1")), (&[1], c("2")), (&[0], c("1"))]);
        let pol = p.polarize().unwrap();
        assert_eq!(pol.nvars(), 2);
        assert_eq!(pol.coeff(&[1, 1]), Some(&c("1")));
        assert_eq!(pol.coeff(&[1, 0]), Some(&c("1")));
        assert_eq!(pol.coeff(&[0, 1]), Some(&c("1")));
        assert_eq!(pol.coeff(&[0, 0]), Some(&c("1")));
        // Identifying the slots recovers the original.
        assert_eq!(pol.identify_blocks(&[2]).unwrap(), p);
        // Support of the polarization = polarization of the support.
        let sup_pol = crate::lattice::polarize_set(&p.support()).unwrap();
        assert_eq!(pol.support(), sup_pol);
    }

    #[test]
    fn homogenize_examples() {
        // 1 + x: homogenize to w + x.
        let p = poly(1, &[(&[0], c("1")), (&[1], c("1"))]);
        let h = p.homogenize().unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.coeff(&[0, 1]), Some(&c("1")));
        assert_eq!(h.coeff(&[1, 0]), Some(&c("1")));
        assert!(PuiseuxPolynomial::zero(1).homogenize().is_err());
    }

    #[test]
    fn slice_examples() {
        // P = (x + y + z)^2; P(1, 1, z) = z^2 + 4z + 4 via pattern (1, h, ·) at h = 1.
        let x = PuiseuxPolynomial::variable(3, 0).unwrap();
        let y = PuiseuxPolynomial::variable(3, 1).unwrap();
        let z = PuiseuxPolynomial::variable(3, 2).unwrap();
        let s = x.add(&y).unwrap().add(&z).unwrap();
        let p = s.mul(&s).unwrap();
        let co = slice(&p, SlicePattern::OneLambdaZ, &c("1")).unwrap();
        assert_eq!(co, vec![c("4"), c("4"), c("1")]);
        // x^2 sliced along (·,1,h) is x^2 regardless of h.
        let xsq = poly(3, &[(&[2, 0, 0], c("1"))]);
        assert_eq!(
            slice(&xsq, SlicePattern::XOneLambda, &tpow("5")).unwrap(),
            vec![PuiseuxNumber::zero(), PuiseuxNumber::zero(), c("1")]
        );
        // xyz along (1,·,0) vanishes.
        let xyz = poly(3, &[(&[1, 1, 1], c("1"))]);
        assert!(slice(&xyz, SlicePattern::OneYZero, &c("1")).unwrap().is_empty());
    }

    #[test]
    fn evaluate_examples() {
        // P = x^2 + ty at (t, 2): t^2 + 2t.
        let p = poly(2, &[(&[2, 0], c("1")), (&[0, 1], tpow("1"))]);
        let v = p.evaluate(&[tpow("1"), c("2")]).unwrap();
        let expect = tpow("2").add(&tpow("1").scale(&q("2")));
        assert_eq!(v, expect);
        assert!(p.evaluate(&[c("1")]).is_err());
    }

    #[test]
    fn berkowitz_matches_known_determinants() {
        // [[0, t], [-t, 0]] -> t^2.
        let m = vec![
            vec![PuiseuxNumber::zero(), tpow("1")],
            vec![tpow("1").neg(), PuiseuxNumber::zero()],
        ];
        assert_eq!(berkowitz_det(&m).unwrap(), tpow("2"));
        // 1x1.
        assert_eq!(berkowitz_det(&[vec![c("7")]]).unwrap(), c("7"));
        // 3x3 rational with known determinant (rule of Sarrus: -3).
        let m3: Vec<Vec<BigRational>> = vec![
            vec![q("1"), q("2"), q("3")],
            vec![q("4"), q("5"), q("6")],
            vec![q("7"), q("8"), q("10")],
        ];
        assert_eq!(berkowitz_det(&m3).unwrap(), q("-3"));
        // Polynomial matrix: det [[x, 1], [1, x]] = x^2 - 1.
        let x = PuiseuxPolynomial::variable(1, 0).unwrap();
        let onep = PuiseuxPolynomial::one(1);
        let mp = vec![vec![x.clone(), onep.clone()], vec![onep, x]];
        let d = berkowitz_det(&mp).unwrap();
        assert_eq!(d.coeff(&[2]), Some(&c("1")));
        assert_eq!(d.coeff(&[0]), Some(&c("-1")));
        // Shape errors.
        assert!(berkowitz_det::<BigRational>(&[]).is_err());
        assert!(berkowitz_det(&[vec![q("1"), q("2")]]).is_err());
    }

    #[test]
    fn trop_of_product_is_maxplus_convolution() {
        // For positive-coefficient polynomials no cancellation occurs, so
        // nu(sum) = max of valuations.
        let p = poly(1, &[(&[0], tpow("1")), (&[1], c("1"))]);
        let r = poly(1, &[(&[0], c("2")), (&[1], tpow("3"))]);
        let prod = p.mul(&r).unwrap();
        let trop = prod.tropicalize().unwrap();
        // coefficient of z: max(nu(t*t^3), nu(1*2)) = 4.
        assert_eq!(
            trop.value(&LatticePoint::new(vec![1])),
            Some(&q("4"))
        );
        assert_eq!(
            prod.coeff(&[2]).unwrap().valuation(),
            Valuation::Finite(q("3"))
        );
    }
}
