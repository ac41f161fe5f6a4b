//! Rational-valued functions on finite lattice supports: M-concavity in its
//! global, local, and natural forms, polarization/homogenization of
//! functions, distance functions of jump systems, and hives.
//!
//! The exchange axiom (M): for all α, β in the support and every step s from
//! α toward β there is a step t from α+s toward β with α+s+t and β−s−t in the
//! support and f(α) + f(β) ≤ f(α+s+t) + f(β−s−t). The local form (M_loc)
//! quantifies s existentially and only over pairs at distance 4; on
//! constant-parity jump systems the two are equivalent. M♮-concavity is
//! defined through homogenization: f is M♮-concave iff its homogenization
//! (slack coordinate r − |α|) satisfies (M). The literal single/double-step
//! axiom is also provided ([`check_M_natural_literal`]) but is strictly
//! weaker: its double-step branch may land t back on β, which satisfies the
//! quantifier without constraining f.
//!
//! Hives are functions on the full triangle Δₙ = {α ∈ ℕ³ : Σα = n} whose
//! rhombus inequalities h(β) + h(γ) ≥ h(α) + h(δ) hold for all three rhombus
//! orientations; on Δₙ this is equivalent to (M).

use crate::error::Error;
use crate::lattice::{
    self, enumerate_simplex, is_constant_parity, is_jump_system, steps_toward, LatticePoint,
    PointSet,
};
use crate::rat::{parse_ratio, qstr, ratio_string};
use crate::report::{CheckReport, Inequality, Rel, TriedStep, TriedStepPair, Witness};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A function from a finite nonempty support in ℤⁿ to ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiscreteFunctionRepr", into = "DiscreteFunctionRepr")]
pub struct DiscreteFunction {
    dim: usize,
    values: BTreeMap<LatticePoint, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct DiscreteFunctionRepr {
    points: Vec<PointValueRepr>,
}

#[derive(Serialize, Deserialize)]
struct PointValueRepr {
    alpha: Vec<i64>,
    value: String,
}

impl TryFrom<DiscreteFunctionRepr> for DiscreteFunction {
    type Error = Error;
    fn try_from(r: DiscreteFunctionRepr) -> Result<Self, Error> {
        let mut values = BTreeMap::new();
        let mut dim = None;
        for pv in r.points {
            let p = LatticePoint::new(pv.alpha);
            match dim {
                None => dim = Some(p.dim()),
                Some(d) if d != p.dim() => {
                    return Err(Error::DimensionMismatch { expected: d, found: p.dim() })
                }
                _ => {}
            }
            let v = parse_ratio(&pv.value)?;
            if values.insert(p, v).is_some() {
                return Err(Error::Parse("duplicate support point".into()));
            }
        }
        let dim = dim.ok_or(Error::Empty("function support"))?;
        Ok(DiscreteFunction { dim, values })
    }
}

impl From<DiscreteFunction> for DiscreteFunctionRepr {
    fn from(f: DiscreteFunction) -> Self {
        DiscreteFunctionRepr {
            points: f
                .values
                .into_iter()
                .map(|(p, v)| PointValueRepr {
                    alpha: p.coords().to_vec(),
                    value: ratio_string(&v),
                })
                .collect(),
        }
    }
}

impl DiscreteFunction {
    /// Build from (point, value) pairs. The support must be nonempty and of
    /// one dimension; duplicate points are an error.
    pub fn new(
        pairs: impl IntoIterator<Item = (LatticePoint, BigRational)>,
    ) -> Result<Self, Error> {
        let mut values = BTreeMap::new();
        let mut dim = None;
        for (p, v) in pairs {
            match dim {
                None => dim = Some(p.dim()),
                Some(d) if d != p.dim() => {
                    return Err(Error::DimensionMismatch { expected: d, found: p.dim() })
                }
                _ => {}
            }
            if values.insert(p, v).is_some() {
                return Err(Error::Parse("duplicate support point".into()));
            }
        }
        let dim = dim.ok_or(Error::Empty("function support"))?;
        Ok(DiscreteFunction { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, p: &LatticePoint) -> Option<&BigRational> {
        self.values.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, &BigRational)> {
        self.values.iter()
    }

    pub fn support(&self) -> PointSet {
        PointSet::new(self.dim, self.values.keys().cloned()).expect("uniform dims")
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.values.contains_key(p)
    }
}

/// Global exchange axiom (M). Constant parity of the support is not assumed;
/// when it fails, the report notes it (a function satisfying (M) always has a
/// constant-parity jump system as support, so such inputs fail somewhere).
#[allow(non_snake_case)]
pub fn check_M(f: &DiscreteFunction) -> CheckReport {
    let mut report = check_m_inner(f);
    if let Ok(false) = is_constant_parity(&f.support()) {
        report = report.with_note("support is not constant parity");
    }
    report
}

fn check_m_inner(f: &DiscreteFunction) -> CheckReport {
    for (alpha, fa) in f.iter() {
        for (beta, fb) in f.iter() {
            let lhs = fa + fb;
            for step in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&step);
                let mut tried = Vec::new();
                let mut ok = false;
                for t in steps_toward(&mid, beta).expect("same dim") {
                    let fwd = mid.add(&t);
                    let back = beta.sub(&step).sub(&t);
                    let mut missing = Vec::new();
                    if !f.contains(&fwd) {
                        missing.push(fwd.clone());
                    }
                    if !f.contains(&back) {
                        missing.push(back.clone());
                    }
                    if !missing.is_empty() {
                        tried.push(TriedStep { t: Some(t), missing, inequality: None });
                        continue;
                    }
                    let rhs = f.value(&fwd).unwrap() + f.value(&back).unwrap();
                    if lhs <= rhs {
                        ok = true;
                        break;
                    }
                    tried.push(TriedStep {
                        t: Some(t),
                        missing: Vec::new(),
                        inequality: Some(Inequality {
                            lhs: lhs.clone(),
                            rel: Rel::Le,
                            rhs,
                        }),
                    });
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

/// Local exchange axiom (M_loc): only pairs at 1-norm distance 4, with both
/// steps existential. Requires the support to be a constant-parity jump
/// system (reported as an error otherwise).
#[allow(non_snake_case)]
pub fn check_M_loc(f: &DiscreteFunction) -> Result<CheckReport, Error> {
    let supp = f.support();
    if !is_constant_parity(&supp)? {
        return Err(Error::SupportPrecondition("support must have constant parity"));
    }
    if !is_jump_system(&supp).verdict {
        return Err(Error::SupportPrecondition("support must be a jump system"));
    }
    for (alpha, fa) in f.iter() {
        for (beta, fb) in f.iter() {
            if alpha.dist1(beta) != 4 {
                continue;
            }
            let lhs = fa + fb;
            let mut tried = Vec::new();
            let mut ok = false;
            'search: for s in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&s);
                for t in steps_toward(&mid, beta).expect("same dim") {
                    let fwd = mid.add(&t);
                    let back = beta.sub(&s).sub(&t);
                    let mut missing = Vec::new();
                    if !f.contains(&fwd) {
                        missing.push(fwd.clone());
                    }
                    if !f.contains(&back) {
                        missing.push(back.clone());
                    }
                    if !missing.is_empty() {
                        tried.push(TriedStepPair { s: s.clone(), t, missing, inequality: None });
                        continue;
                    }
                    let rhs = f.value(&fwd).unwrap() + f.value(&back).unwrap();
                    if lhs <= rhs {
                        ok = true;
                        break 'search;
                    }
                    tried.push(TriedStepPair {
                        s: s.clone(),
                        t,
                        missing: Vec::new(),
                        inequality: Some(Inequality { lhs: lhs.clone(), rel: Rel::Le, rhs }),
                    });
                }
            }
            if !ok {
                return Ok(CheckReport::fail(Witness::LocalExchange {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    tried,
                }));
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Append the slack coordinate r − |α| (r = max coordinate sum) and copy
/// values. Requires the support to lie in ℕⁿ.
pub fn homogenize_function(f: &DiscreteFunction) -> Result<DiscreteFunction, Error> {
    let mut r = 0i64;
    for (p, _) in f.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate { point: p.coords().to_vec() });
        }
        r = r.max(p.coord_sum());
    }
    DiscreteFunction::new(f.iter().map(|(p, v)| {
        let mut coords = p.coords().to_vec();
        coords.push(r - p.coord_sum());
        (LatticePoint::new(coords), v.clone())
    }))
}

/// M♮-concavity, normative form: the homogenization satisfies (M). Witnesses
/// live in the homogenized space (one extra slack coordinate); they remain
/// independently checkable there.
#[allow(non_snake_case)]
pub fn check_M_natural(f: &DiscreteFunction) -> Result<CheckReport, Error> {
    let lifted = homogenize_function(f)?;
    let mut report = check_M(&lifted);
    if !report.verdict {
        report = report.with_note("witness points carry a trailing slack coordinate");
    }
    Ok(report)
}

/// The literal printed (M♮) axiom: each step s from α toward β satisfies
/// either the single-step branch (α+s, β−s in the support with
/// f(α)+f(β) ≤ f(α+s)+f(β−s)) or the double-step branch of (M).
///
/// This is strictly weaker than [`check_M_natural`]: when |α − β| = 2 the
/// double-step branch may pick t landing exactly on β, which makes the
/// inequality f(α)+f(β) ≤ f(β)+f(α) and holds vacuously.
#[allow(non_snake_case)]
pub fn check_M_natural_literal(f: &DiscreteFunction) -> CheckReport {
    for (alpha, fa) in f.iter() {
        for (beta, fb) in f.iter() {
            let lhs = fa + fb;
            for step in steps_toward(alpha, beta).expect("same dim") {
                let mid = alpha.add(&step);
                let back1 = beta.sub(&step);
                let mut tried = Vec::new();

                // Branch (i): single step.
                let mut missing = Vec::new();
                if !f.contains(&mid) {
                    missing.push(mid.clone());
                }
                if !f.contains(&back1) {
                    missing.push(back1.clone());
                }
                let mut ok = false;
                if missing.is_empty() {
                    let rhs = f.value(&mid).unwrap() + f.value(&back1).unwrap();
                    if lhs <= rhs {
                        ok = true;
                    } else {
                        tried.push(TriedStep {
                            t: None,
                            missing: Vec::new(),
                            inequality: Some(Inequality {
                                lhs: lhs.clone(),
                                rel: Rel::Le,
                                rhs,
                            }),
                        });
                    }
                } else {
                    tried.push(TriedStep { t: None, missing, inequality: None });
                }

                // Branch (ii): double step.
                if !ok {
                    for t in steps_toward(&mid, beta).expect("same dim") {
                        let fwd = mid.add(&t);
                        let back = back1.sub(&t);
                        let mut missing = Vec::new();
                        if !f.contains(&fwd) {
                            missing.push(fwd.clone());
                        }
                        if !f.contains(&back) {
                            missing.push(back.clone());
                        }
                        if !missing.is_empty() {
                            tried.push(TriedStep { t: Some(t), missing, inequality: None });
                            continue;
                        }
                        let rhs = f.value(&fwd).unwrap() + f.value(&back).unwrap();
                        if lhs <= rhs {
                            ok = true;
                            break;
                        }
                        tried.push(TriedStep {
                            t: Some(t),
                            missing: Vec::new(),
                            inequality: Some(Inequality {
                                lhs: lhs.clone(),
                                rel: Rel::Le,
                                rhs,
                            }),
                        });
                    }
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

/// Polarize f: the polarized function lives on the polarization of the
/// support and takes the value of f at the blockwise sum.
pub fn polarize_function(f: &DiscreteFunction) -> Result<DiscreteFunction, Error> {
    let supp = f.support();
    let kappa = lattice::polarize_slots(&supp)?;
    let pol = lattice::polarize_set(&supp)?;
    DiscreteFunction::new(pol.iter().map(|sigma| {
        let down = lattice::depolarize_point(sigma, &kappa);
        let v = f.value(&down).expect("depolarized point is in the support").clone();
        (sigma.clone(), v)
    }))
}

/// The distance function d_J(α) = −min { |α − β| : β ∈ J } on all of Δₙᵐ.
/// J must be a nonempty constant-sum jump system inside Δₙᵐ.
pub fn distance_function(j: &PointSet, m: usize, n: i64) -> Result<DiscreteFunction, Error> {
    if j.is_empty() {
        return Err(Error::Empty("jump system"));
    }
    if j.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: j.dim() });
    }
    for p in j.iter() {
        if !p.is_nonnegative() || p.coord_sum() != n {
            return Err(Error::Precondition(format!(
                "point {:?} is outside the simplex of level {n}",
                p.coords()
            )));
        }
    }
    if !is_jump_system(j).verdict {
        return Err(Error::SupportPrecondition("J must be a jump system"));
    }
    DiscreteFunction::new(enumerate_simplex(m, n).into_iter().map(|alpha| {
        let d = j.iter().map(|beta| alpha.dist1(beta)).min().expect("nonempty");
        (alpha, -BigRational::from_integer((d as i64).into()))
    }))
}

/// A rhombus in Δₙ: β + γ = α + δ, |β − γ| = 2, |α − δ| = 4. The hive
/// inequality reads h(b) + h(c) ≥ h(a) + h(d).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rhombus {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub c: LatticePoint,
    pub d: LatticePoint,
}

impl Rhombus {
    /// The common coordinate value of b and c (they agree in exactly one
    /// coordinate).
    pub fn common_coordinate(&self) -> i64 {
        for i in 0..self.b.dim() {
            if self.b.coords()[i] == self.c.coords()[i] {
                return self.b.coords()[i];
            }
        }
        unreachable!("b and c of a rhombus agree in exactly one coordinate")
    }
}

/// All rhombi of Δₙ (three orientations), each exactly once. Empty for n < 2.
pub fn enumerate_rhombi(n: i64) -> Vec<Rhombus> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for i in 0..3usize {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for p in enumerate_simplex(3, n) {
            if p.coords()[j] < 1 || p.coords()[k] < 1 {
                continue;
            }
            let ei = LatticePoint::unit(3, i, 1);
            let ej = LatticePoint::unit(3, j, 1);
            let ek = LatticePoint::unit(3, k, 1);
            let a = p.clone();
            let b = p.add(&ei).sub(&ej);
            let c = p.add(&ei).sub(&ek);
            let d = p.add(&ei).add(&ei).sub(&ej).sub(&ek);
            out.push(Rhombus { a, b, c, d });
        }
    }
    out
}

/// Hive check: the support must be exactly Δₙ for some n, and every rhombus
/// inequality h(b)+h(c) ≥ h(a)+h(d) must hold (strictly when `strict`).
pub fn is_hive(h: &DiscreteFunction, strict: bool) -> Result<CheckReport, Error> {
    if h.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: h.dim() });
    }
    let mut n = None;
    for (p, _) in h.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NotHive(format!(
                "support point {:?} has a negative coordinate",
                p.coords()
            )));
        }
        match n {
            None => n = Some(p.coord_sum()),
            Some(n) if n != p.coord_sum() => {
                return Err(Error::NotHive("support is not constant sum".into()))
            }
            _ => {}
        }
    }
    let n = n.ok_or(Error::Empty("hive support"))?;
    let simplex = enumerate_simplex(3, n);
    if h.len() != simplex.len() {
        let missing = simplex.iter().find(|p| !h.contains(p)).expect("some point missing");
        return Err(Error::NotHive(format!(
            "support must be all of the triangle of level {n}; {:?} is missing",
            missing.coords()
        )));
    }
    let rel = if strict { Rel::Gt } else { Rel::Ge };
    for r in enumerate_rhombi(n) {
        let lhs = h.value(&r.b).unwrap() + h.value(&r.c).unwrap();
        let rhs = h.value(&r.a).unwrap() + h.value(&r.d).unwrap();
        if !rel.eval(&lhs, &rhs) {
            return Ok(CheckReport::fail(Witness::RhombusViolation {
                a: r.a,
                b: r.b,
                c: r.c,
                d: r.d,
                strict,
                lhs,
                rhs,
            }));
        }
    }
    Ok(CheckReport::pass())
}

/// Maximum value and the set of maximizers (brute force over the support).
pub fn brute_max(f: &DiscreteFunction) -> (BigRational, PointSet) {
    let max = f.iter().map(|(_, v)| v).max().expect("nonempty support").clone();
    let argmax = PointSet::new(
        f.dim(),
        f.iter().filter(|(_, v)| **v == max).map(|(p, _)| p.clone()),
    )
    .expect("uniform dims");
    (max, argmax)
}

/// Serializable view of a maximization result.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaxReport {
    #[serde(with = "qstr")]
    pub max: BigRational,
    pub argmax: PointSet,
}
