//! Finite lattice point sets and the exchange axioms.
//!
//! A *step* from α toward β is a vector s with exactly one nonzero coordinate,
//! that coordinate being ±1, such that |α + s − β| = |α − β| − 1 (norms are
//! taken in the 1-norm). The axioms checked here:
//!
//! * (J1), [`is_jump_system`]: for all α, β in S and every step s from α
//!   toward β with α + s ∉ S there is a step t from α + s toward β with
//!   α + s + t ∈ S.
//! * (J2), [`check_J2`]: for all α, β and every step s from α toward β there
//!   is a step t from α + s toward β with both α + s + t ∈ S and
//!   β − s − t ∈ S. (J1) and (J2) are equivalent on constant-parity sets.
//! * (J♮), [`check_J_natural`]: like (J2) but a single-step branch
//!   (α + s ∈ S and β − s ∈ S) also satisfies the pair.
//! * Δ-matroids are jump systems inside {0,1}ⁿ; matroid basis sets are
//!   constant-sum 0/1 sets with the basis exchange axiom.
//!
//! Polarization splits coordinate i into κᵢ 0/1 slots, κᵢ being the largest
//! value of that coordinate over the set; [`project`] deletes a coordinate;
//! [`homogenize_set`] appends the slack coordinate r − |α|.

use crate::error::Error;
use crate::report::{CheckReport, TriedStep, Witness};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A point of ℤⁿ. Ordering is lexicographic, which fixes the deterministic
/// scan order of every checker.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// 1-norm |p| = Σ |pᵢ|.
    pub fn norm1(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    /// Coordinate sum Σ pᵢ (signed, unlike the 1-norm).
    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The signed unit vector ±e_i in the given dimension.
    pub fn unit(dim: usize, i: usize, sign: i64) -> LatticePoint {
        let mut v = vec![0; dim];
        v[i] = sign;
        LatticePoint(v)
    }

    /// |self - other| in the 1-norm.
    pub fn dist1(&self, other: &LatticePoint) -> u64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.abs_diff(*b)).sum()
    }

    pub fn is_zero_one(&self) -> bool {
        self.0.iter().all(|&c| c == 0 || c == 1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

/// All steps from `a` toward `b`: +e_i where aᵢ < bᵢ, −e_i where aᵢ > bᵢ,
/// in lexicographic order of the step vector. Empty when `a == b`.
pub fn steps_toward(a: &LatticePoint, b: &LatticePoint) -> Result<Vec<LatticePoint>, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let dim = a.dim();
    let mut steps = Vec::new();
    // Lex order over step vectors: -e_i sorts before +e_j iff the first
    // nonzero entry compares below, i.e. (0,..,-1,..) < (0,..,+1,..) at the
    // same index and earlier indices dominate. Collecting +/- per index and
    // sorting keeps this exact without cleverness.
    for i in 0..dim {
        if a.coords()[i] < b.coords()[i] {
            steps.push(LatticePoint::unit(dim, i, 1));
        } else if a.coords()[i] > b.coords()[i] {
            steps.push(LatticePoint::unit(dim, i, -1));
        }
    }
    steps.sort();
    Ok(steps)
}

/// A finite subset of ℤⁿ with explicit dimension. Dimension 0 is allowed (the
/// one-point lattice), which polarization and projection can produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointSetRepr", into = "PointSetRepr")]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<LatticePoint>,
}

#[derive(Serialize, Deserialize)]
struct PointSetRepr {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl TryFrom<PointSetRepr> for PointSet {
    type Error = Error;
    fn try_from(r: PointSetRepr) -> Result<Self, Error> {
        PointSet::new(r.dim, r.points.into_iter().map(LatticePoint::new))
    }
}

impl From<PointSet> for PointSetRepr {
    fn from(s: PointSet) -> Self {
        PointSetRepr {
            dim: s.dim,
            points: s.points.into_iter().map(|p| p.0).collect(),
        }
    }
}

impl PointSet {
    pub fn new(
        dim: usize,
        points: impl IntoIterator<Item = LatticePoint>,
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
            set.insert(p);
        }
        Ok(PointSet { dim, points: set })
    }

    /// Build from points, taking the dimension from the first one. Errors on
    /// an empty iterator (no dimension to infer).
    pub fn from_points(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self, Error> {
        let mut it = points.into_iter();
        let first = it.next().ok_or(Error::Empty("point set"))?;
        let dim = first.dim();
        Self::new(dim, std::iter::once(first).chain(it))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter()
    }

    pub fn insert(&mut self, p: LatticePoint) -> Result<(), Error> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        self.points.insert(p);
        Ok(())
    }
}

/// True when all points share the parity of the coordinate sum. Errors on an
/// empty set (no parity to speak of).
pub fn is_constant_parity(s: &PointSet) -> Result<bool, Error> {
    let mut it = s.iter();
    let first = it.next().ok_or(Error::Empty("point set"))?;
    let parity = first.coord_sum().rem_euclid(2);
    Ok(it.all(|p| p.coord_sum().rem_euclid(2) == parity))
}

/// True when all points share the same coordinate sum. Errors on empty.
pub fn is_constant_sum(s: &PointSet) -> Result<bool, Error> {
    let mut it = s.iter();
    let first = it.next().ok_or(Error::Empty("point set"))?;
    let sum = first.coord_sum();
    Ok(it.all(|p| p.coord_sum() == sum))
}

/// Two-step exchange axiom (J1). Empty and singleton sets pass vacuously.
pub fn is_jump_system(s: &PointSet) -> CheckReport {
    for alpha in s.iter() {
        for beta in s.iter() {
            for step in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&step);
                if s.contains(&mid) {
                    continue;
                }
                let mut tried = Vec::new();
                let mut ok = false;
                for t in steps_toward(&mid, beta).expect("same dim") {
                    let landing = mid.add(&t);
                    if s.contains(&landing) {
                        ok = true;
                        break;
                    }
                    tried.push(TriedStep { t: Some(t), missing: vec![landing], inequality: None });
                }
                if !ok {
                    return CheckReport::fail(Witness::Exchange {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        step,
                        tried,
                    });
                }
            }
        }
    }
    CheckReport::pass()
}

/// Symmetric exchange form (J2): every step s from α toward β admits a step t
/// from α+s toward β with α+s+t and β−s−t both in the set. Agrees with (J1)
/// exactly on constant-parity sets.
#[allow(non_snake_case)]
pub fn check_J2(s: &PointSet) -> CheckReport {
    for alpha in s.iter() {
        for beta in s.iter() {
            for step in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&step);
                let mut tried = Vec::new();
                let mut ok = false;
                for t in steps_toward(&mid, beta).expect("same dim") {
                    let fwd = mid.add(&t);
                    let back = beta.sub(&step).sub(&t);
                    let mut missing = Vec::new();
                    if !s.contains(&fwd) {
                        missing.push(fwd);
                    }
                    if !s.contains(&back) {
                        missing.push(back);
                    }
                    if missing.is_empty() {
                        ok = true;
                        break;
                    }
                    tried.push(TriedStep { t: Some(t), missing, inequality: None });
                }
                if !ok {
                    return CheckReport::fail(Witness::Exchange {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        step,
                        tried,
                    });
                }
            }
        }
    }
    CheckReport::pass()
}

/// The natural axiom (J♮): each step s from α toward β satisfies either the
/// single-step branch (α+s and β−s in the set) or the (J2) branch.
#[allow(non_snake_case)]
pub fn check_J_natural(s: &PointSet) -> CheckReport {
    for alpha in s.iter() {
        for beta in s.iter() {
            for step in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&step);
                let back1 = beta.sub(&step);
                let mut tried = Vec::new();

                let mut missing = Vec::new();
                if !s.contains(&mid) {
                    missing.push(mid.clone());
                }
                if !s.contains(&back1) {
                    missing.push(back1.clone());
                }
                if missing.is_empty() {
                    continue;
                }
                tried.push(TriedStep { t: None, missing, inequality: None });

                let mut ok = false;
                for t in steps_toward(&mid, beta).expect("same dim") {
                    let fwd = mid.add(&t);
                    let back = back1.sub(&t);
                    let mut missing = Vec::new();
                    if !s.contains(&fwd) {
                        missing.push(fwd);
                    }
                    if !s.contains(&back) {
                        missing.push(back);
                    }
                    if missing.is_empty() {
                        ok = true;
                        break;
                    }
                    tried.push(TriedStep { t: Some(t), missing, inequality: None });
                }
                if !ok {
                    return CheckReport::fail(Witness::Exchange {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        step,
                        tried,
                    });
                }
            }
        }
    }
    CheckReport::pass()
}

/// Δ-matroid: a jump system contained in {0,1}ⁿ.
pub fn is_delta_matroid(s: &PointSet) -> CheckReport {
    for p in s.iter() {
        if !p.is_zero_one() {
            return CheckReport::fail(Witness::PointConstraint {
                point: p.clone(),
                constraint: "coordinates must be 0 or 1".into(),
            });
        }
    }
    is_jump_system(s)
}

/// Basis exchange axiom on a constant-sum 0/1 set: for all A, B in S and
/// every i with Aᵢ = 1, Bᵢ = 0 there is j with Aⱼ = 0, Bⱼ = 1 and
/// A − eᵢ + eⱼ ∈ S. The 0/1 and constant-sum preconditions are reported as
/// errors, not panics.
pub fn is_matroid_basis_set(s: &PointSet) -> Result<CheckReport, Error> {
    if s.is_empty() {
        return Err(Error::Empty("basis set"));
    }
    for p in s.iter() {
        if !p.is_zero_one() {
            return Err(Error::Precondition(format!(
                "basis sets live in {{0,1}}^n; {:?} does not",
                p.coords()
            )));
        }
    }
    if !is_constant_sum(s)? {
        return Err(Error::Precondition("basis sets must have constant coordinate sum".into()));
    }
    let dim = s.dim();
    for a in s.iter() {
        for b in s.iter() {
            for i in 0..dim {
                if a.coords()[i] != 1 || b.coords()[i] != 0 {
                    continue;
                }
                let mut tried = Vec::new();
                let mut ok = false;
                for j in 0..dim {
                    if a.coords()[j] != 0 || b.coords()[j] != 1 {
                        continue;
                    }
                    let mut v = a.coords().to_vec();
                    v[i] = 0;
                    v[j] = 1;
                    if s.contains(&LatticePoint::new(v)) {
                        ok = true;
                        break;
                    }
                    tried.push(j);
                }
                if !ok {
                    return Ok(CheckReport::fail(Witness::BasisExchange {
                        from: a.clone(),
                        to: b.clone(),
                        drop: i,
                        tried,
                    }));
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Delete coordinate `coord` (0-based) from every point.
pub fn project(s: &PointSet, coord: usize) -> Result<PointSet, Error> {
    if coord >= s.dim() {
        return Err(Error::IndexOutOfRange { index: coord, dim: s.dim() });
    }
    let points = s.iter().map(|p| {
        let mut v = p.coords().to_vec();
        v.remove(coord);
        LatticePoint::new(v)
    });
    PointSet::new(s.dim() - 1, points)
}

/// Per-coordinate slot counts for polarization: κᵢ is the maximum of
/// coordinate i over the set (0 when the set is empty).
pub fn polarize_slots(s: &PointSet) -> Result<Vec<usize>, Error> {
    let mut kappa = vec![0usize; s.dim()];
    for p in s.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate { point: p.coords().to_vec() });
        }
        for (i, &c) in p.coords().iter().enumerate() {
            kappa[i] = kappa[i].max(c as usize);
        }
    }
    Ok(kappa)
}

/// Sum σ back down to ℕⁿ: coordinate i of the result is the sum of block i's
/// slots. `kappa` gives the block sizes (variable i owns κᵢ consecutive
/// slots, in variable order).
pub fn depolarize_point(sigma: &LatticePoint, kappa: &[usize]) -> LatticePoint {
    let mut out = Vec::with_capacity(kappa.len());
    let mut pos = 0;
    for &k in kappa {
        out.push(sigma.coords()[pos..pos + k].iter().sum());
        pos += k;
    }
    LatticePoint::new(out)
}

fn subsets_with_sum(k: usize, want: usize) -> Vec<Vec<i64>> {
    // All 0/1 vectors of length k with exactly `want` ones, lexicographic.
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    fn rec(cur: &mut Vec<i64>, i: usize, left: usize, out: &mut Vec<Vec<i64>>) {
        let k = cur.len();
        if left > k - i {
            return;
        }
        if i == k {
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
    rec(&mut cur, 0, want, &mut out);
    out
}

/// Polarize a set A ⊆ ℕⁿ: coordinate i becomes κᵢ 0/1 slots, and σ is in the
/// polarization iff its blockwise sums land in A. Coordinates must be
/// nonnegative.
pub fn polarize_set(s: &PointSet) -> Result<PointSet, Error> {
    let kappa = polarize_slots(s)?;
    let slots: usize = kappa.iter().sum();
    let mut out = PointSet::new(slots, std::iter::empty())?;
    for p in s.iter() {
        // Per-block choice of which slots are on; cartesian product across
        // blocks.
        let mut block_choices: Vec<Vec<Vec<i64>>> = Vec::with_capacity(kappa.len());
        for (i, &k) in kappa.iter().enumerate() {
            block_choices.push(subsets_with_sum(k, p.coords()[i] as usize));
        }
        let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
        for choices in &block_choices {
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for prefix in &acc {
                for ch in choices {
                    let mut v = prefix.clone();
                    v.extend_from_slice(ch);
                    next.push(v);
                }
            }
            acc = next;
        }
        for v in acc {
            out.insert(LatticePoint::new(v))?;
        }
    }
    Ok(out)
}

/// Append the slack coordinate r − |α| to every point of J ⊆ ℕⁿ. Requires
/// r ≥ max |α|.
pub fn homogenize_set(s: &PointSet, r: i64) -> Result<PointSet, Error> {
    let mut points = Vec::with_capacity(s.len());
    for p in s.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate { point: p.coords().to_vec() });
        }
        let total = p.coord_sum();
        if total > r {
            return Err(Error::SlackTooSmall { r, needed: total });
        }
        let mut v = p.coords().to_vec();
        v.push(r - total);
        points.push(LatticePoint::new(v));
    }
    PointSet::new(s.dim() + 1, points)
}

/// All points of the discrete simplex Δₙᵐ = {α ∈ ℕᵐ : Σα = n}, lexicographic.
pub fn enumerate_simplex(m: usize, n: i64) -> Vec<LatticePoint> {
    assert!(n >= 0, "simplex level must be nonnegative");
    let mut out = Vec::new();
    let mut cur = vec![0i64; m];
    fn rec(cur: &mut Vec<i64>, i: usize, left: i64, out: &mut Vec<LatticePoint>) {
        let m = cur.len();
        if i == m - 1 {
            cur[i] = left;
            out.push(LatticePoint::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(cur, i + 1, left - v, out);
        }
    }
    if m == 0 {
        if n == 0 {
            out.push(LatticePoint::new(vec![]));
        }
        return out;
    }
    rec(&mut cur, 0, n, &mut out);
    out
}
