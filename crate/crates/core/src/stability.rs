//! Certificates and falsifiers connecting coefficients and valuations to
//! stability.
//!
//! The decidable core is univariate and exact: Sturm chains count real roots
//! of rational polynomials, Newton's inequalities are necessary for real-
//! rootedness with nonnegative coefficients, and the Hutchinson condition
//! a_k² ≥ 4 a_{k−1} a_{k+1} (positive coefficients, gap-free support) is
//! sufficient. Over the Puiseux scalars, real-rootedness is never decided
//! directly; the strict valuation-Newton condition 2ν(a_k) > ν(a_{k−1}) +
//! ν(a_{k+1}) stands in for it, because it forces the Hutchinson ratio to
//! exceed any constant for t large.
//!
//! Multivariate stability is handled by certificates and falsifiers only:
//! the multiaffine inequality ∂ᵢP·∂ⱼP ≥ ∂ᵢⱼP·P sampled at rational points
//! (a violation disproves stability), the trivariate slice harness (each
//! sampled slice must be real-rooted; one bad slice disproves stability),
//! and rhombus-quotient bounds for positive polynomials supported on a full
//! discrete triangle. The constructors at the bottom build polynomials from
//! discrete data — concave sequences and hives — together with the
//! certificate that justifies them.

use crate::dfunc::{self, DiscreteFunction};
use crate::error::Error;
use crate::lattice::LatticePoint;
use crate::puiseux::PuiseuxNumber;
use crate::rat::{binomial, choose2, pow_i64, ratio_string};
use crate::report::{CheckReport, Inequality, Rel, Witness};
use crate::tpoly::{slice, PuiseuxPolynomial, SlicePattern};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense univariate polynomial over ℚ, constant term first. The coefficient
/// vector never ends in a zero (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "UnivariateRepr", into = "UnivariateRepr")]
pub struct UnivariatePoly {
    coeffs: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct UnivariateRepr {
    #[serde(with = "crate::rat::qstr_vec")]
    coeffs: Vec<BigRational>,
}

impl From<UnivariateRepr> for UnivariatePoly {
    fn from(r: UnivariateRepr) -> Self {
        UnivariatePoly::new(r.coeffs)
    }
}

impl From<UnivariatePoly> for UnivariateRepr {
    fn from(p: UnivariatePoly) -> Self {
        UnivariateRepr { coeffs: p.coeffs }
    }
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UnivariatePoly {
        if self.coeffs.len() <= 1 {
            return UnivariatePoly::zero();
        }
        UnivariatePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer((k as i64).into()))
                .collect(),
        )
    }

    fn scale(&self, c: &BigRational) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q·d + r with deg r < deg d. Panics on a
    /// zero divisor (internal use only; callers guard).
    fn divmod(&self, d: &UnivariatePoly) -> (UnivariatePoly, UnivariatePoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlead;
            for i in 0..=dd {
                let v = &d.coeffs[i] * &factor;
                rem[k + i] -= v;
            }
            // The top coefficient cancels exactly; trim it and any zeros
            // exposed beneath it.
            rem.pop();
            while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            quot[k] = factor;
        }
        (UnivariatePoly::new(quot), UnivariatePoly { coeffs: rem })
    }

    /// Monic gcd. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UnivariatePoly) -> UnivariatePoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(l) => {
                let inv = l.recip();
                a.scale(&inv)
            }
        }
    }

    /// p / gcd(p, p′): same roots, all simple.
    pub fn squarefree_part(&self) -> Result<UnivariatePoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divmod(&g);
        debug_assert!(r.is_zero(), "gcd divides its argument");
        Ok(q)
    }
}

/// Sign of p at +∞ and −∞ (sign of the leading coefficient, flipped at −∞
/// for odd degree). Zero polynomial excluded by callers.
fn sign_at_inf(p: &UnivariatePoly, plus: bool) -> i32 {
    let lead = p.leading().expect("nonzero polynomial");
    let base = if lead.is_positive() { 1 } else { -1 };
    if plus || p.degree().unwrap() % 2 == 0 {
        base
    } else {
        -base
    }
}

fn sign_variations(signs: &[i32]) -> usize {
    let mut count = 0;
    let mut prev = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of a nonzero squarefree polynomial, by the
/// Sturm chain evaluated at ±∞.
fn sturm_distinct_real_roots(q: &UnivariatePoly) -> usize {
    if q.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let mut chain = vec![q.clone(), q.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
        chain.push(UnivariatePoly::new(r.coeffs.into_iter().map(|c| -c).collect()));
    }
    chain.pop();
    let at_minus: Vec<i32> = chain.iter().map(|p| sign_at_inf(p, false)).collect();
    let at_plus: Vec<i32> = chain.iter().map(|p| sign_at_inf(p, true)).collect();
    sign_variations(&at_minus) - sign_variations(&at_plus)
}

/// Exact real-rootedness report for a nonzero rational polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmReport {
    /// Every root (counted with multiplicity, over ℂ) is real.
    pub all_real: bool,
    /// Number of distinct real roots.
    pub distinct_real_roots: usize,
    /// Some root other than 0 has multiplicity ≥ 2.
    pub multiple_nonzero_root: bool,
}

/// Count real roots exactly via a Sturm chain on the squarefree part.
/// `all_real` holds iff the root count with multiplicity equals the degree,
/// equivalently iff the squarefree part has as many distinct real roots as
/// its degree. Multiple roots are read off gcd(p, p′): any factor left after
/// dividing out powers of z is a repeated nonzero root (real or not).
pub fn sturm_real_rooted(p: &UnivariatePoly) -> Result<SturmReport, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree_part()?;
    let distinct = sturm_distinct_real_roots(&q);
    let all_real = distinct == q.degree().unwrap();
    let g = p.gcd(&p.derivative());
    let zeros_at_origin = g.coeffs.iter().take_while(|c| c.is_zero()).count();
    let multiple_nonzero = g.degree().map(|d| d > zeros_at_origin).unwrap_or(false);
    Ok(SturmReport {
        all_real,
        distinct_real_roots: distinct,
        multiple_nonzero_root: multiple_nonzero,
    })
}

/// Newton's inequalities for p = Σ a_k z^k of degree ≤ n:
/// (a_k/C(n,k))² ≥ (a_{k−1}/C(n,k−1))·(a_{k+1}/C(n,k+1)) for 1 ≤ k ≤ n−1.
/// Necessary for real-rootedness; failure refutes the claim "real-rooted
/// with nonnegative coefficients".
pub fn newton_check(p: &UnivariatePoly, n: usize) -> Result<CheckReport, Error> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::Precondition(format!(
                "degree {d} exceeds the stated bound {n}"
            )));
        }
    }
    let c = |k: usize| BigRational::from_integer(binomial(n as u64, k as u64));
    for k in 1..n {
        let mid = p.coeff(k) / c(k);
        let lhs = &mid * &mid;
        let rhs = (p.coeff(k - 1) / c(k - 1)) * (p.coeff(k + 1) / c(k + 1));
        if lhs < rhs {
            return Ok(CheckReport::fail(Witness::Inequality {
                label: format!("k={k}"),
                inequality: Inequality { lhs, rel: Rel::Ge, rhs },
            }));
        }
    }
    Ok(CheckReport::pass())
}

/// Concavity of k ↦ f(k) on a one-dimensional integer interval:
/// 2 f(k) ≥ f(k−1) + f(k+1) for interior k (strict when `strict`). The
/// support must be a gap-free interval; a hole is an error, not a failure.
pub fn val_newton_check(f: &DiscreteFunction, strict: bool) -> Result<CheckReport, Error> {
    if f.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.dim() });
    }
    let ks: Vec<i64> = f.iter().map(|(p, _)| p.coords()[0]).collect();
    for w in ks.windows(2) {
        if w[1] != w[0] + 1 {
            return Err(Error::SupportGap { missing: w[0] + 1 });
        }
    }
    let at = |k: i64| f.value(&LatticePoint::new(vec![k])).expect("interval point");
    let rel = if strict { Rel::Gt } else { Rel::Ge };
    for k in ks.iter().skip(1).take(ks.len().saturating_sub(2)) {
        let lhs = at(*k) + at(*k);
        let rhs = at(k - 1) + at(k + 1);
        if !rel.eval(&lhs, &rhs) {
            return Ok(CheckReport::fail(Witness::Inequality {
                label: format!("k={k}"),
                inequality: Inequality { lhs, rel, rhs },
            }));
        }
    }
    Ok(CheckReport::pass())
}

/// Verdict carried by a [`StabilityCertificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertVerdict {
    ProvesStable,
    ProvesUnstable,
    Inconclusive,
}

/// Which certificate mechanism produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    Newton,
    ValNewtonStrict,
    Hutchinson,
    Sturm,
    RhombusQuotient,
    SliceHarness,
}

/// One labelled inequality inside a certificate, with both sides exact and
/// an explicit holds flag so the list is independently re-checkable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledInequality {
    pub label: String,
    pub inequality: Inequality,
    pub holds: bool,
}

/// One univariate slice examined by a harness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceCheck {
    /// Which restriction, e.g. "P(1,h,z)".
    pub pattern: String,
    /// The value substituted for h ("-" for the boundary slices).
    pub lambda: String,
    /// What was verified, e.g. "all roots real (2 distinct)".
    pub detail: String,
    pub holds: bool,
}

/// A stability certificate: the mechanism, the verdict, and the exact
/// inequalities or slice checks behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityCertificate {
    pub kind: CertKind,
    pub verdict: CertVerdict,
    pub summary: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inequalities: Vec<LabeledInequality>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub slices: Vec<SliceCheck>,
}

/// Hutchinson's sufficient condition: positive coefficients on a gap-free
/// support interval [M, N] with a_k² ≥ 4 a_{k−1} a_{k+1} for M < k < N imply
/// all roots real. The strict variant additionally certifies that no root
/// other than 0 is multiple. A nonpositive coefficient inside [M, N] is an
/// error; a failed inequality is merely inconclusive (the condition is not
/// necessary).
pub fn hutchinson_check(p: &UnivariatePoly, strict: bool) -> Result<StabilityCertificate, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.degree().unwrap();
    let m = p.coeffs.iter().position(|c| !c.is_zero()).unwrap();
    for k in m..=n {
        if !p.coeff(k).is_positive() {
            return Err(Error::BadCoefficient(format!(
                "coefficient of z^{k} on the support interval is not positive: {}",
                ratio_string(&p.coeff(k))
            )));
        }
    }
    let four = BigRational::from_integer(4.into());
    let rel = if strict { Rel::Gt } else { Rel::Ge };
    let mut inequalities = Vec::new();
    let mut all_hold = true;
    for k in (m + 1)..n {
        let lhs = p.coeff(k) * p.coeff(k);
        let rhs = &four * p.coeff(k - 1) * p.coeff(k + 1);
        let holds = rel.eval(&lhs, &rhs);
        all_hold &= holds;
        inequalities.push(LabeledInequality {
            label: format!("k={k}"),
            inequality: Inequality { lhs, rel, rhs },
            holds,
        });
    }
    let (verdict, summary) = if all_hold {
        let extra = if strict {
            "; strict inequalities also rule out multiple roots away from 0"
        } else {
            ""
        };
        (
            CertVerdict::ProvesStable,
            format!("a_k^2 {rel} 4 a_(k-1) a_(k+1) on [{m}, {n}]: all roots real{extra}"),
        )
    } else {
        (
            CertVerdict::Inconclusive,
            "the coefficient condition fails somewhere; it is sufficient, not necessary".into(),
        )
    };
    Ok(StabilityCertificate {
        kind: CertKind::Hutchinson,
        verdict,
        summary,
        inequalities,
        slices: Vec::new(),
    })
}

/// A polynomial together with the certificate justifying it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertifiedPoly {
    pub poly: PuiseuxPolynomial,
    pub certificate: StabilityCertificate,
}

/// Build the stable univariate polynomial attached to a concave sequence:
/// for f on [M, N] (M ≥ 0) the polynomial Σ_k 4^(−C(k,2)) t^(f(k)) z^k. The
/// 4-powers make the Hutchinson ratio exactly 4·t^(2f(k)−f(k−1)−f(k+1)),
/// which is at least 4 whenever f is concave — and f is concave on an
/// interval exactly when its homogenization is exchange-concave, which is
/// what gets checked.
pub fn onevar_hpp_construct(f: &DiscreteFunction) -> Result<CertifiedPoly, Error> {
    if f.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: f.dim() });
    }
    let ks: Vec<i64> = f.iter().map(|(p, _)| p.coords()[0]).collect();
    if ks[0] < 0 {
        return Err(Error::Precondition(
            "the interval must consist of nonnegative exponents".into(),
        ));
    }
    for w in ks.windows(2) {
        if w[1] != w[0] + 1 {
            return Err(Error::SupportGap { missing: w[0] + 1 });
        }
    }
    let natural = dfunc::check_M_natural(f)?;
    if !natural.verdict {
        return Err(Error::Precondition(
            "the sequence is not concave (natural exchange axiom fails)".into(),
        ));
    }

    let mut poly = PuiseuxPolynomial::zero(1);
    let mut inequalities = Vec::new();
    for (p, v) in f.iter() {
        let k = p.coords()[0];
        let scale = pow_i64(&BigRational::from_integer(4.into()), -choose2(k));
        let coeff = PuiseuxNumber::t_power(v.clone()).scale(&scale);
        poly.add_term(vec![k as u32], coeff);
    }
    let at = |k: i64| f.value(&LatticePoint::new(vec![k])).expect("interval point");
    for k in ks.iter().skip(1).take(ks.len().saturating_sub(2)) {
        let lhs = at(*k) + at(*k);
        let rhs = at(k - 1) + at(k + 1);
        inequalities.push(LabeledInequality {
            label: format!("2 nu(a_{k}) >= nu(a_{}) + nu(a_{})", k - 1, k + 1),
            inequality: Inequality { lhs: lhs.clone(), rel: Rel::Ge, rhs: rhs.clone() },
            holds: lhs >= rhs,
        });
    }
    let certificate = StabilityCertificate {
        kind: CertKind::Hutchinson,
        verdict: CertVerdict::ProvesStable,
        summary: "coefficients 4^(-C(k,2)) t^(f(k)) satisfy a_k^2 >= 4 a_(k-1) a_(k+1), \
                  since concavity of f makes the ratio 4 t^(>=0)"
            .into(),
        inequalities,
        slices: Vec::new(),
    };
    Ok(CertifiedPoly { poly, certificate })
}

/// Evaluate a constant-coefficient polynomial at a rational point.
fn eval_rational(p: &PuiseuxPolynomial, x: &[BigRational]) -> Result<BigRational, Error> {
    let point: Vec<PuiseuxNumber> =
        x.iter().map(|v| PuiseuxNumber::from_rational(v.clone())).collect();
    p.evaluate(&point)?
        .as_rational()
        .ok_or_else(|| Error::BadCoefficient("coefficients must be constant series".into()))
}

/// Necessary-condition falsifier for multiaffine real polynomials: a stable
/// polynomial satisfies ∂ᵢP(x)·∂ⱼP(x) ≥ ∂ᵢⱼP(x)·P(x) at every real point.
/// Each sample and pair (i, j) is evaluated exactly; a negative difference
/// disproves stability with a witness. A clean pass is only "no violation
/// found at the samples" — sampling cannot prove stability.
pub fn sr_falsifier(
    p: &PuiseuxPolynomial,
    samples: &[Vec<BigRational>],
) -> Result<CheckReport, Error> {
    let n = p.nvars();
    for (a, c) in p.terms() {
        if a.iter().any(|&e| e > 1) {
            return Err(Error::Precondition("the polynomial must be multiaffine".into()));
        }
        if c.as_rational().is_none() {
            return Err(Error::BadCoefficient(
                "the falsifier handles constant (real) coefficients only".into(),
            ));
        }
    }
    let partials: Vec<PuiseuxPolynomial> =
        (0..n).map(|i| p.partial_derivative(i)).collect::<Result<_, _>>()?;
    for x in samples {
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.len() });
        }
        let px = eval_rational(p, x)?;
        let dx: Vec<BigRational> = partials
            .iter()
            .map(|d| eval_rational(d, x))
            .collect::<Result<_, _>>()?;
        for i in 0..n {
            for j in (i + 1)..n {
                let dij = eval_rational(&partials[i].partial_derivative(j)?, x)?;
                let value = &dx[i] * &dx[j] - dij * &px;
                if value.is_negative() {
                    return Ok(CheckReport::fail(Witness::FalsifierSample {
                        at: x.clone(),
                        i,
                        j,
                        value,
                    }));
                }
            }
        }
    }
    Ok(CheckReport::pass()
        .with_note("no violation at the sampled points; this is a necessary condition only"))
}

/// Default rational sample grid for [`sr_falsifier`]: the cartesian power of
/// {0, ±1, ±2, ±1/2} while that stays small, otherwise the diagonal and axis
/// points from the same palette.
pub fn default_samples(nvars: usize) -> Vec<Vec<BigRational>> {
    let palette: Vec<BigRational> = ["0", "1", "-1", "2", "-2", "1/2", "-1/2"]
        .iter()
        .map(|s| crate::rat::parse_ratio(s).expect("literal"))
        .collect();
    let full_size = (palette.len() as u64).checked_pow(nvars as u32);
    if full_size.map(|s| s <= 20_000).unwrap_or(false) {
        let mut out: Vec<Vec<BigRational>> = vec![Vec::new()];
        for _ in 0..nvars {
            let mut next = Vec::with_capacity(out.len() * palette.len());
            for prefix in &out {
                for v in &palette {
                    let mut x = prefix.clone();
                    x.push(v.clone());
                    next.push(x);
                }
            }
            out = next;
        }
        out
    } else {
        let mut out = Vec::new();
        for v in &palette {
            out.push(vec![v.clone(); nvars]);
            for i in 0..nvars {
                let mut x = vec![BigRational::zero(); nvars];
                x[i] = v.clone();
                out.push(x);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Default positive λ samples for the trivariate slice harness.
pub fn default_lambdas() -> Vec<BigRational> {
    ["1/4", "1/2", "1", "2", "4"]
        .iter()
        .map(|s| crate::rat::parse_ratio(s).expect("literal"))
        .collect()
}

/// Default exponents μ for the t-power λ samples of the Puiseux-side
/// harness (λ = t^μ).
pub fn default_mus() -> Vec<BigRational> {
    ["-1", "0", "1"]
        .iter()
        .map(|s| crate::rat::parse_ratio(s).expect("literal"))
        .collect()
}

/// Convert slice coefficients to a rational dense polynomial.
fn rational_slice(coeffs: &[PuiseuxNumber]) -> Result<UnivariatePoly, Error> {
    let cs = coeffs
        .iter()
        .map(|c| {
            c.as_rational().ok_or_else(|| {
                Error::BadCoefficient("slice coefficient is not a constant series".into())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UnivariatePoly::new(cs))
}

/// Valuation sequence k ↦ ν(c_k) of nonzero slice coefficients, as a
/// one-dimensional discrete function.
fn valuation_sequence(coeffs: &[PuiseuxNumber]) -> Result<DiscreteFunction, Error> {
    DiscreteFunction::new(coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
        |(k, c)| {
            let v = c.valuation().finite().expect("nonzero coefficient");
            (LatticePoint::new(vec![k as i64]), v)
        },
    ))
}

/// Slice harness for a homogeneous trivariate polynomial with nonnegative
/// constant coefficients. Hypothesis (checked, an error when violated):
/// P(0,0,1)·P(0,1,0) > 0. Every sampled restriction — the three λ-families
/// at each given λ > 0 plus the two boundary slices — must be real-rooted
/// by Sturm. One failing slice disproves the half-plane property; all
/// passing is inconclusive, since only finitely many λ were tried.
pub fn lemma_basic_harness(
    p: &PuiseuxPolynomial,
    lambdas: &[BigRational],
) -> Result<StabilityCertificate, Error> {
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.nvars() });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::Precondition("the polynomial must be homogeneous".into()));
    }
    let n = p.total_degree()?;
    for (_, c) in p.terms() {
        match c.as_rational() {
            Some(v) if !v.is_negative() => {}
            _ => {
                return Err(Error::BadCoefficient(
                    "the harness needs nonnegative constant coefficients".into(),
                ))
            }
        }
    }
    let corner = |alpha: [u32; 3]| {
        p.coeff(&alpha)
            .and_then(|c| c.as_rational())
            .unwrap_or_else(BigRational::zero)
    };
    let hyp = corner([0, 0, n]) * corner([0, n, 0]);
    if !hyp.is_positive() {
        return Err(Error::Precondition(format!(
            "hypothesis P(0,0,1)*P(0,1,0) > 0 fails: product is {}",
            ratio_string(&hyp)
        )));
    }
    for l in lambdas {
        if !l.is_positive() {
            return Err(Error::Precondition(format!(
                "slice parameters must be positive, got {}",
                ratio_string(l)
            )));
        }
    }

    let mut slices = Vec::new();
    let mut all_hold = true;
    for pattern in SlicePattern::ALL {
        let lamlist: Vec<Option<&BigRational>> = if pattern.uses_lambda() {
            lambdas.iter().map(Some).collect()
        } else {
            vec![None]
        };
        for lam in lamlist {
            let lvalue = lam.cloned().unwrap_or_else(BigRational::one);
            let coeffs = slice(p, pattern, &PuiseuxNumber::from_rational(lvalue))?;
            let upoly = rational_slice(&coeffs)?;
            let (detail, holds) = if upoly.is_zero() || upoly.degree() == Some(0) {
                ("no roots (slice is constant)".into(), true)
            } else {
                let report = sturm_real_rooted(&upoly)?;
                (
                    format!(
                        "{} ({} distinct real roots, degree {})",
                        if report.all_real { "all roots real" } else { "a nonreal root exists" },
                        report.distinct_real_roots,
                        upoly.degree().unwrap()
                    ),
                    report.all_real,
                )
            };
            all_hold &= holds;
            slices.push(SliceCheck {
                pattern: pattern.to_string(),
                lambda: lam.map(ratio_string).unwrap_or_else(|| "-".into()),
                detail,
                holds,
            });
        }
    }
    let (verdict, summary) = if all_hold {
        (
            CertVerdict::Inconclusive,
            format!(
                "all {} sampled slices are real-rooted; the full hypothesis ranges over every \
                 positive parameter, so this does not prove stability by itself",
                slices.len()
            ),
        )
    } else {
        (
            CertVerdict::ProvesUnstable,
            "a restriction along a nonnegative direction fails real-rootedness".into(),
        )
    };
    Ok(StabilityCertificate {
        kind: CertKind::SliceHarness,
        verdict,
        summary,
        inequalities: Vec::new(),
        slices,
    })
}

/// Per-rhombus quotients a_b·a_c / (a_a·a_d) of a positive polynomial whose
/// support is the full triangle of its degree, paired with the rhombus.
pub fn rhombus_quotients(
    p: &PuiseuxPolynomial,
) -> Result<Vec<(dfunc::Rhombus, BigRational)>, Error> {
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.nvars() });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::Precondition("the polynomial must be homogeneous".into()));
    }
    let n = p.total_degree()? as i64;
    let coeff_at = |q: &LatticePoint| -> Result<BigRational, Error> {
        let alpha: Vec<u32> = q.coords().iter().map(|&c| c as u32).collect();
        let c = p.coeff(&alpha).ok_or_else(|| {
            Error::Precondition(format!("missing support point {:?}", q.coords()))
        })?;
        match c.as_rational() {
            Some(v) if v.is_positive() => Ok(v),
            _ => Err(Error::BadCoefficient(format!(
                "coefficient at {:?} must be a positive constant",
                q.coords()
            ))),
        }
    };
    let mut out = Vec::new();
    for r in dfunc::enumerate_rhombi(n) {
        let quotient =
            coeff_at(&r.b)? * coeff_at(&r.c)? / (coeff_at(&r.a)? * coeff_at(&r.d)?);
        out.push((r, quotient));
    }
    Ok(out)
}

/// Necessary condition for the half-plane property of a positive polynomial
/// on a full triangle: every rhombus quotient a_b·a_c/(a_a·a_d) is at least
/// (ℓ+1)/(2ℓ), where ℓ is the common coordinate of the two short-diagonal
/// points. Verified by cross-multiplication; the minimum quotient and its
/// rhombus are reported in the notes.
pub fn rhombus_quotient_check(p: &PuiseuxPolynomial) -> Result<CheckReport, Error> {
    let quotients = rhombus_quotients(p)?;
    if quotients.is_empty() {
        return Ok(CheckReport::pass().with_note("no rhombi at this degree"));
    }
    let mut min: Option<&(dfunc::Rhombus, BigRational)> = None;
    for item in &quotients {
        if min.map(|m| item.1 < m.1).unwrap_or(true) {
            min = Some(item);
        }
    }
    let (min_r, min_q) = min.expect("nonempty");
    let note = format!(
        "minimum quotient {} at the rhombus with long diagonal {:?} -> {:?}",
        ratio_string(min_q),
        min_r.a.coords(),
        min_r.d.coords()
    );
    for (r, quotient) in &quotients {
        let l = r.common_coordinate();
        // quotient >= (l+1)/(2l), cross-multiplied.
        let lhs = quotient * BigRational::from_integer((2 * l).into());
        let rhs = BigRational::from_integer((l + 1).into());
        if lhs < rhs {
            return Ok(CheckReport::fail(Witness::Inequality {
                label: format!(
                    "rhombus {:?} {:?} / {:?} {:?}, common coordinate {l}",
                    r.b.coords(),
                    r.c.coords(),
                    r.a.coords(),
                    r.d.coords()
                ),
                inequality: Inequality { lhs, rel: Rel::Ge, rhs },
            })
            .with_note(note));
        }
    }
    Ok(CheckReport::pass().with_note(note))
}

/// The base-point pattern −C(α₁,2) − C(α₂,2) − C(α₃,2): a hive whose every
/// rhombus gap is exactly 1.
pub fn h_zero(alpha: &LatticePoint) -> BigRational {
    let s: i64 = alpha.coords().iter().map(|&c| choose2(c)).sum();
    BigRational::from_integer((-s).into())
}

/// Output of [`quant_b_construct`]: the polynomial, the rhombus-quotient
/// certificate that proves it stable, and the slice harness run as
/// corroboration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantBOutput {
    pub poly: PuiseuxPolynomial,
    pub certificate: StabilityCertificate,
    pub harness: StabilityCertificate,
}

/// Build the positive polynomial a_α = Q^(h₀(α)+h(α)) attached to an
/// integer-valued hive h, where h₀ is the gap-1 pattern of [`h_zero`].
/// Every rhombus quotient of the output is Q^(1 + gap of h) ≥ Q, so
/// Q ≥ 2(n−1) proves the half-plane property. Smaller Q is rejected unless
/// `force` is set; a forced run still reports the quotients but the verdict
/// degrades to inconclusive when the minimum quotient drops below 2(n−1).
pub fn quant_b_construct(
    h: &DiscreteFunction,
    q: &BigRational,
    force: bool,
    lambdas: &[BigRational],
) -> Result<QuantBOutput, Error> {
    let hive = dfunc::is_hive(h, false)?;
    if !hive.verdict {
        return Err(Error::NotHive(
            "a rhombus inequality fails; run the hive check for the witness".into(),
        ));
    }
    for (p, v) in h.iter() {
        if !v.is_integer() {
            return Err(Error::NotInteger {
                value: format!("h{:?} = {}", p.coords(), ratio_string(v)),
            });
        }
    }
    if !q.is_positive() {
        return Err(Error::Precondition("the quotient base Q must be positive".into()));
    }
    let n = h.iter().next().expect("nonempty support").0.coord_sum();
    let needed = BigRational::from_integer((2 * (n - 1)).max(0).into());
    if *q < needed && !force {
        return Err(Error::QuotientBoundTooSmall {
            q: ratio_string(q),
            needed: format!("2(n-1) = {} for n = {n}", ratio_string(&needed)),
        });
    }

    let mut poly = PuiseuxPolynomial::zero(3);
    for (p, v) in h.iter() {
        let e = crate::rat::to_i64(&(h_zero(p) + v)).expect("integer hive values");
        let alpha: Vec<u32> = p.coords().iter().map(|&c| c as u32).collect();
        poly.add_term(alpha, PuiseuxNumber::from_rational(pow_i64(q, e)));
    }

    let quotients = rhombus_quotients(&poly)?;
    let mut inequalities = Vec::new();
    let mut min_quotient: Option<BigRational> = None;
    for (r, quotient) in &quotients {
        if min_quotient.as_ref().map(|m| quotient < m).unwrap_or(true) {
            min_quotient = Some(quotient.clone());
        }
        inequalities.push(LabeledInequality {
            label: format!(
                "rhombus {:?} {:?} / {:?} {:?}",
                r.b.coords(),
                r.c.coords(),
                r.a.coords(),
                r.d.coords()
            ),
            inequality: Inequality { lhs: quotient.clone(), rel: Rel::Ge, rhs: q.clone() },
            holds: quotient >= q,
        });
    }
    let min_quotient = min_quotient.unwrap_or_else(|| BigRational::from_integer(1.into()));
    let proves = quotients.is_empty() || min_quotient >= needed;
    let certificate = StabilityCertificate {
        kind: CertKind::RhombusQuotient,
        verdict: if proves { CertVerdict::ProvesStable } else { CertVerdict::Inconclusive },
        summary: if proves {
            format!(
                "every rhombus quotient is at least {} >= 2(n-1) = {}, which suffices \
                 for the half-plane property",
                ratio_string(&min_quotient),
                ratio_string(&needed)
            )
        } else {
            format!(
                "forced base {}: minimum quotient {} is below the sufficient bound 2(n-1) = {}",
                ratio_string(q),
                ratio_string(&min_quotient),
                ratio_string(&needed)
            )
        },
        inequalities,
        slices: Vec::new(),
    };
    let harness = lemma_basic_harness(&poly, lambdas)?;
    Ok(QuantBOutput { poly, certificate, harness })
}

/// Build P = Σ t^(h(α)) x^(α₁) y^(α₂) z^(α₃) from a strict hive, with a
/// strict valuation-Newton certificate: for each slice family and each
/// sampled λ = t^μ, the valuation sequence of the slice coefficients is
/// strictly concave (the substitution turns h into h(α) + α·μ on the slice,
/// still a strict hive), which certifies the slice real-rooted over the
/// Puiseux field without deciding real-rootedness directly.
pub fn strict_hive_to_puiseux_hpp(
    h: &DiscreteFunction,
    mus: &[BigRational],
) -> Result<CertifiedPoly, Error> {
    let strict = dfunc::is_hive(h, true)?;
    if !strict.verdict {
        return Err(Error::NotHive(
            "not a strict hive; run the hive check with --strict for the witness".into(),
        ));
    }
    let mut poly = PuiseuxPolynomial::zero(3);
    for (p, v) in h.iter() {
        let alpha: Vec<u32> = p.coords().iter().map(|&c| c as u32).collect();
        poly.add_term(alpha, PuiseuxNumber::t_power(v.clone()));
    }

    let mut slices = Vec::new();
    let mut all_hold = true;
    for pattern in SlicePattern::ALL {
        let mulist: Vec<Option<&BigRational>> = if pattern.uses_lambda() {
            mus.iter().map(Some).collect()
        } else {
            vec![None]
        };
        for mu in mulist {
            let lambda = match mu {
                Some(m) => PuiseuxNumber::t_power(m.clone()),
                None => PuiseuxNumber::one(),
            };
            let coeffs = slice(&poly, pattern, &lambda)?;
            let seq = valuation_sequence(&coeffs)?;
            let report = val_newton_check(&seq, true)?;
            all_hold &= report.verdict;
            slices.push(SliceCheck {
                pattern: pattern.to_string(),
                lambda: mu.map(|m| format!("t^({})", ratio_string(m))).unwrap_or_else(|| "-".into()),
                detail: if report.verdict {
                    "coefficient valuations strictly concave".into()
                } else {
                    "strict valuation concavity fails".into()
                },
                holds: report.verdict,
            });
        }
    }
    let certificate = StabilityCertificate {
        kind: CertKind::ValNewtonStrict,
        verdict: if all_hold { CertVerdict::ProvesStable } else { CertVerdict::Inconclusive },
        summary: if all_hold {
            "every sampled slice has strictly concave coefficient valuations, so its \
             Hutchinson ratios exceed 4 for t large"
                .into()
        } else {
            "a sampled slice misses strict valuation concavity".into()
        },
        inequalities: Vec::new(),
        slices,
    };
    Ok(CertifiedPoly { poly, certificate })
}

/// Necessary condition: the tropicalization of a positive polynomial with
/// the half-plane property on a full triangle is a hive. Composite of
/// `tropicalize` and the hive check.
pub fn trop_of_hpp_is_hive_check(p: &PuiseuxPolynomial) -> Result<CheckReport, Error> {
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.nvars() });
    }
    for (a, c) in p.terms() {
        if !c.is_positive() {
            return Err(Error::BadCoefficient(format!(
                "coefficient at {a:?} is not positive"
            )));
        }
    }
    let trop = p.tropicalize()?;
    dfunc::is_hive(&trop, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::parse_ratio;

    fn q(s: &str) -> BigRational {
        parse_ratio(s).unwrap()
    }

    fn upoly(cs: &[&str]) -> UnivariatePoly {
        UnivariatePoly::new(cs.iter().map(|s| q(s)).collect())
    }

    fn dfun(values: &[(&[i64], &str)]) -> DiscreteFunction {
        DiscreteFunction::new(
            values
                .iter()
                .map(|(p, v)| (LatticePoint::new(p.to_vec()), q(v))),
        )
        .unwrap()
    }

    #[test]
    fn univariate_division_and_gcd() {
        // (z^2 - 1) / (z - 1) = z + 1 rem 0.
        let p = upoly(&["-1", "0", "1"]);
        let d = upoly(&["-1", "1"]);
        let (quot, rem) = p.divmod(&d);
        assert_eq!(quot, upoly(&["1", "1"]));
        assert!(rem.is_zero());
        // gcd(z^2 - 1, z^2 - 2z + 1) = z - 1 (monic).
        let a = upoly(&["-1", "0", "1"]);
        let b = upoly(&["1", "-2", "1"]);
        assert_eq!(a.gcd(&b), upoly(&["-1", "1"]));
        // Squarefree part of (z-1)^2 is z-1.
        assert_eq!(b.squarefree_part().unwrap(), upoly(&["-1", "1"]));
    }

    #[test]
    fn sturm_examples() {
        // z^2 - 1: both roots real.
        let r = sturm_real_rooted(&upoly(&["-1", "0", "1"])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 2);
        assert!(!r.multiple_nonzero_root);
        // z^2 + 1: none real.
        let r = sturm_real_rooted(&upoly(&["1", "0", "1"])).unwrap();
        assert!(!r.all_real);
        assert_eq!(r.distinct_real_roots, 0);
        // z^2 + z + 1: discriminant -3.
        assert!(!sturm_real_rooted(&upoly(&["1", "1", "1"])).unwrap().all_real);
        // (2z+1)^2 scaled: 1 + 4z + 4z^2 has a double root at -1/2.
        let r = sturm_real_rooted(&upoly(&["1", "4", "4"])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 1);
        assert!(r.multiple_nonzero_root);
        // z^2: double root at zero is not a *nonzero* multiple root.
        let r = sturm_real_rooted(&upoly(&["0", "0", "1"])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 1);
        assert!(!r.multiple_nonzero_root);
        // Constant: vacuously all real.
        let r = sturm_real_rooted(&upoly(&["5"])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 0);
        // Zero polynomial is an error.
        assert!(sturm_real_rooted(&UnivariatePoly::zero()).is_err());
        // Odd degree with wide spread: z^3 - 3z + 1 has three real roots.
        let r = sturm_real_rooted(&upoly(&["1", "-3", "0", "1"])).unwrap();
        assert!(r.all_real);
        assert_eq!(r.distinct_real_roots, 3);
    }

    #[test]
    fn newton_examples() {
        // (1,2,1): equality 1 >= 1.
        assert!(newton_check(&upoly(&["1", "2", "1"]), 2).unwrap().verdict);
        // (1,1,1): 1/4 < 1.
        let r = newton_check(&upoly(&["1", "1", "1"]), 2).unwrap();
        assert!(!r.verdict);
        match r.witness.unwrap() {
            Witness::Inequality { inequality, .. } => {
                assert_eq!(inequality.lhs, q("1/4"));
                assert_eq!(inequality.rhs, q("1"));
            }
            w => panic!("unexpected witness {w:?}"),
        }
        // (2,5,2): 25/4 >= 4.
        assert!(newton_check(&upoly(&["2", "5", "2"]), 2).unwrap().verdict);
        // Degree above the stated bound is an error.
        assert!(newton_check(&upoly(&["1", "1", "1"]), 1).is_err());
    }

    #[test]
    fn val_newton_examples() {
        let f = dfun(&[(&[0], "0"), (&[1], "3"), (&[2], "4"), (&[3], "3")]);
        assert!(val_newton_check(&f, false).unwrap().verdict);
        let f = dfun(&[(&[0], "0"), (&[1], "0"), (&[2], "1")]);
        let r = val_newton_check(&f, false).unwrap();
        assert!(!r.verdict);
        let f = dfun(&[(&[0], "0"), (&[1], "1"), (&[2], "0")]);
        assert!(val_newton_check(&f, true).unwrap().verdict);
        // Equality fails the strict check.
        let f = dfun(&[(&[0], "0"), (&[1], "0"), (&[2], "0")]);
        assert!(val_newton_check(&f, false).unwrap().verdict);
        assert!(!val_newton_check(&f, true).unwrap().verdict);
        // A hole in the support is an error naming the missing index.
        let f = dfun(&[(&[0], "0"), (&[2], "0")]);
        assert!(matches!(val_newton_check(&f, false), Err(Error::SupportGap { missing: 1 })));
    }

    #[test]
    fn hutchinson_examples() {
        // (1,2,1): 4 >= 4 proves stable.
        let c = hutchinson_check(&upoly(&["1", "2", "1"]), false).unwrap();
        assert_eq!(c.verdict, CertVerdict::ProvesStable);
        // ... but not strictly.
        let c = hutchinson_check(&upoly(&["1", "2", "1"]), true).unwrap();
        assert_eq!(c.verdict, CertVerdict::Inconclusive);
        // (1,4,4): 16 >= 16; Sturm confirms the double root.
        let c = hutchinson_check(&upoly(&["1", "4", "4"]), false).unwrap();
        assert_eq!(c.verdict, CertVerdict::ProvesStable);
        let s = sturm_real_rooted(&upoly(&["1", "4", "4"])).unwrap();
        assert!(s.all_real && s.multiple_nonzero_root);
        // (1,1,1): inconclusive, and indeed not real-rooted.
        let c = hutchinson_check(&upoly(&["1", "1", "1"]), false).unwrap();
        assert_eq!(c.verdict, CertVerdict::Inconclusive);
        // Nonpositive coefficient on the support interval is an error.
        assert!(hutchinson_check(&upoly(&["1", "-1", "1"]), false).is_err());
        assert!(hutchinson_check(&upoly(&["1", "0", "1"]), false).is_err());
        // z^2 alone: support interval is the single index 2.
        let c = hutchinson_check(&upoly(&["0", "0", "1"]), false).unwrap();
        assert_eq!(c.verdict, CertVerdict::ProvesStable);
    }

    #[test]
    fn onevar_construct_examples() {
        // f = 0 on [0,2]: 1 + z + z^2/4; discriminant 0.
        let f = dfun(&[(&[0], "0"), (&[1], "0"), (&[2], "0")]);
        let out = onevar_hpp_construct(&f).unwrap();
        let one = PuiseuxNumber::one();
        assert_eq!(out.poly.coeff(&[0]), Some(&one));
        assert_eq!(out.poly.coeff(&[1]), Some(&one));
        assert_eq!(
            out.poly.coeff(&[2]),
            Some(&PuiseuxNumber::from_rational(q("1/4")))
        );
        let rational = UnivariatePoly::new(vec![q("1"), q("1"), q("1/4")]);
        let s = sturm_real_rooted(&rational).unwrap();
        assert!(s.all_real);
        assert_eq!(s.distinct_real_roots, 1);
        assert_eq!(out.certificate.verdict, CertVerdict::ProvesStable);

        // f = 0 on [0,1]: 1 + z.
        let f = dfun(&[(&[0], "0"), (&[1], "0")]);
        let out = onevar_hpp_construct(&f).unwrap();
        assert_eq!(out.poly.num_terms(), 2);
        assert_eq!(out.poly.coeff(&[1]), Some(&one));

        // f = (0,1,0): 1 + t z + z^2/4, strict valuation concavity 2 > 0.
        let f = dfun(&[(&[0], "0"), (&[1], "1"), (&[2], "0")]);
        let out = onevar_hpp_construct(&f).unwrap();
        assert_eq!(out.poly.coeff(&[1]), Some(&PuiseuxNumber::t_power(q("1"))));
        assert!(out.certificate.inequalities.iter().all(|i| i.holds));

        // A convex dent is rejected.
        let f = dfun(&[(&[0], "0"), (&[1], "-1"), (&[2], "0")]);
        assert!(onevar_hpp_construct(&f).is_err());
    }

    #[test]
    fn falsifier_examples() {
        // P = 1 + z1 z2 at (0,0): 0*0 - 1*1 = -1.
        let mut p = PuiseuxPolynomial::zero(2);
        p.add_term(vec![0, 0], PuiseuxNumber::one());
        p.add_term(vec![1, 1], PuiseuxNumber::one());
        let r = sr_falsifier(&p, &[vec![q("0"), q("0")]]).unwrap();
        assert!(!r.verdict);
        match r.witness.unwrap() {
            Witness::FalsifierSample { at, i, j, value } => {
                assert_eq!(at, vec![q("0"), q("0")]);
                assert_eq!((i, j), (0, 1));
                assert_eq!(value, q("-1"));
            }
            w => panic!("unexpected witness {w:?}"),
        }
        // P = z1 + z2: the expression is identically 1.
        let mut p = PuiseuxPolynomial::zero(2);
        p.add_term(vec![1, 0], PuiseuxNumber::one());
        p.add_term(vec![0, 1], PuiseuxNumber::one());
        assert!(sr_falsifier(&p, &default_samples(2)).unwrap().verdict);
        // P = z1 z2 - 1: derivative cancellation gives value 1 everywhere.
        let mut p = PuiseuxPolynomial::zero(2);
        p.add_term(vec![1, 1], PuiseuxNumber::one());
        p.add_term(vec![0, 0], PuiseuxNumber::one().neg());
        assert!(sr_falsifier(&p, &default_samples(2)).unwrap().verdict);
        // Non-multiaffine input is an error.
        let mut p = PuiseuxPolynomial::zero(2);
        p.add_term(vec![2, 0], PuiseuxNumber::one());
        assert!(sr_falsifier(&p, &default_samples(2)).is_err());
    }

    #[test]
    fn harness_examples() {
        // (x+y+z)^3: every slice is a product of linear forms.
        let x = PuiseuxPolynomial::variable(3, 0).unwrap();
        let y = PuiseuxPolynomial::variable(3, 1).unwrap();
        let z = PuiseuxPolynomial::variable(3, 2).unwrap();
        let s = x.add(&y).unwrap().add(&z).unwrap();
        let cube = s.mul(&s).unwrap().mul(&s).unwrap();
        let c = lemma_basic_harness(&cube, &default_lambdas()).unwrap();
        assert_eq!(c.verdict, CertVerdict::Inconclusive);
        assert!(c.slices.iter().all(|sl| sl.holds));

        // x^3 + y^3 + z^3: P(1,1,z) = z^3 + 2 has one real root, degree 3.
        let mut p = PuiseuxPolynomial::zero(3);
        p.add_term(vec![3, 0, 0], PuiseuxNumber::one());
        p.add_term(vec![0, 3, 0], PuiseuxNumber::one());
        p.add_term(vec![0, 0, 3], PuiseuxNumber::one());
        let c = lemma_basic_harness(&p, &[q("1")]).unwrap();
        assert_eq!(c.verdict, CertVerdict::ProvesUnstable);

        // Hypothesis failure: no y^n or z^n corner.
        let mut p = PuiseuxPolynomial::zero(3);
        p.add_term(vec![2, 1, 0], PuiseuxNumber::one());
        assert!(lemma_basic_harness(&p, &[q("1")]).is_err());
        // Nonpositive lambda rejected.
        assert!(lemma_basic_harness(&cube, &[q("0")]).is_err());
    }

    #[test]
    fn rhombus_quotient_examples() {
        // (x+y+z)^2: coefficients 1 at vertices, 2 on edges; the quotient at
        // every rhombus is 2*2/(1*2)... compute: each rhombus has l = 1 and
        // quotient 2, bound (1+1)/2 = 1.
        let x = PuiseuxPolynomial::variable(3, 0).unwrap();
        let y = PuiseuxPolynomial::variable(3, 1).unwrap();
        let z = PuiseuxPolynomial::variable(3, 2).unwrap();
        let s = x.add(&y).unwrap().add(&z).unwrap();
        let sq = s.mul(&s).unwrap();
        let r = rhombus_quotient_check(&sq).unwrap();
        assert!(r.verdict);
        let qs = rhombus_quotients(&sq).unwrap();
        assert_eq!(qs.len(), 3);
        assert!(qs.iter().all(|(_, quo)| *quo == q("2")));

        // Inflate a long-diagonal coefficient by 10: 2*2/(1*20) = 1/5 < 1.
        let mut bad = sq.clone();
        // d = (2,0,0) for the rhombus with apex x; set its coefficient to 10.
        bad.add_term(vec![2, 0, 0], PuiseuxNumber::from_rational(q("9")));
        let r = rhombus_quotient_check(&bad).unwrap();
        assert!(!r.verdict);
        assert!(r.witness.is_some());

        // Degree 1: no rhombi, vacuously true.
        let r = rhombus_quotient_check(&s).unwrap();
        assert!(r.verdict);
        // Missing support point is an error.
        let mut gap = PuiseuxPolynomial::zero(3);
        gap.add_term(vec![2, 0, 0], PuiseuxNumber::one());
        gap.add_term(vec![0, 2, 0], PuiseuxNumber::one());
        gap.add_term(vec![0, 0, 2], PuiseuxNumber::one());
        assert!(rhombus_quotient_check(&gap).is_err());
    }

    #[test]
    fn h_zero_pattern() {
        // h0 on the triangle of level 2: 0 at mid-edges, -1 at vertices.
        assert_eq!(h_zero(&LatticePoint::new(vec![2, 0, 0])), q("-1"));
        assert_eq!(h_zero(&LatticePoint::new(vec![1, 1, 0])), q("0"));
        // Every rhombus gap of h0 is exactly 1 (levels 2 through 5).
        for n in 2..=5 {
            let h = DiscreteFunction::new(
                crate::lattice::enumerate_simplex(3, n)
                    .into_iter()
                    .map(|p| { let v = h_zero(&p); (p, v) }),
            )
            .unwrap();
            for r in dfunc::enumerate_rhombi(n) {
                let gap = h.value(&r.b).unwrap() + h.value(&r.c).unwrap()
                    - h.value(&r.a).unwrap()
                    - h.value(&r.d).unwrap();
                assert_eq!(gap, q("1"));
            }
        }
    }

    #[test]
    fn quant_b_examples() {
        // h = 0 on the level-2 triangle, Q = 2:
        // (1/2)(x^2+y^2+z^2) + xy + xz + yz; slice P(1,h,z) at h=1 is
        // z^2/2 + 2z + 2 with discriminant 0.
        let h = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 2)
                .into_iter()
                .map(|p| (p, BigRational::zero())),
        )
        .unwrap();
        let out = quant_b_construct(&h, &q("2"), false, &default_lambdas()).unwrap();
        assert_eq!(
            out.poly.coeff(&[2, 0, 0]),
            Some(&PuiseuxNumber::from_rational(q("1/2")))
        );
        assert_eq!(out.poly.coeff(&[1, 1, 0]), Some(&PuiseuxNumber::one()));
        assert_eq!(out.certificate.verdict, CertVerdict::ProvesStable);
        assert_eq!(out.harness.verdict, CertVerdict::Inconclusive);
        assert!(out.harness.slices.iter().all(|sl| sl.holds));
        let co = slice(&out.poly, SlicePattern::OneLambdaZ, &PuiseuxNumber::one()).unwrap();
        let upol = rational_slice(&co).unwrap();
        assert_eq!(upol.coeffs(), &[q("2"), q("2"), q("1/2")]);
        // Discriminant b^2 - 4ac = 4 - 4 = 0.
        let disc = upol.coeff(1) * upol.coeff(1)
            - q("4") * upol.coeff(2) * upol.coeff(0);
        assert!(disc.is_zero());

        // h = 0 at level 1: x + y + z exactly.
        let h1 = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 1)
                .into_iter()
                .map(|p| (p, BigRational::zero())),
        )
        .unwrap();
        let out = quant_b_construct(&h1, &q("1"), false, &default_lambdas()).unwrap();
        assert_eq!(out.poly.num_terms(), 3);
        assert_eq!(out.poly.coeff(&[1, 0, 0]), Some(&PuiseuxNumber::one()));

        // Q below 2(n-1) is rejected without force...
        assert!(matches!(
            quant_b_construct(&h, &q("1"), false, &default_lambdas()),
            Err(Error::QuotientBoundTooSmall { .. })
        ));
        // ... and accepted with force (verdict degrades).
        let forced = quant_b_construct(&h, &q("1"), true, &default_lambdas()).unwrap();
        assert_eq!(forced.certificate.verdict, CertVerdict::Inconclusive);

        // Non-integer hive values are rejected.
        let bad = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 1)
                .into_iter()
                .map(|p| (p, q("1/2"))),
        )
        .unwrap();
        assert!(matches!(
            quant_b_construct(&bad, &q("2"), false, &default_lambdas()),
            Err(Error::NotInteger { .. })
        ));
    }

    #[test]
    fn strict_hive_examples() {
        // h0 is a strict hive; the construction round-trips through trop.
        let h = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 2)
                .into_iter()
                .map(|p| { let v = h_zero(&p); (p, v) }),
        )
        .unwrap();
        let out = strict_hive_to_puiseux_hpp(&h, &default_mus()).unwrap();
        assert_eq!(out.certificate.verdict, CertVerdict::ProvesStable);
        assert!(out.certificate.slices.iter().all(|sl| sl.holds));
        // Corner coefficient t^(-1), mid-edge coefficient 1.
        assert_eq!(
            out.poly.coeff(&[2, 0, 0]),
            Some(&PuiseuxNumber::t_power(q("-1")))
        );
        assert_eq!(out.poly.coeff(&[1, 1, 0]), Some(&PuiseuxNumber::one()));
        let trop = out.poly.tropicalize().unwrap();
        assert_eq!(trop, h);

        // Level 1: no rhombi, trivially strict.
        let h1 = dfun(&[(&[1, 0, 0], "7"), (&[0, 1, 0], "0"), (&[0, 0, 1], "-3")]);
        let out = strict_hive_to_puiseux_hpp(&h1, &default_mus()).unwrap();
        assert_eq!(out.certificate.verdict, CertVerdict::ProvesStable);

        // h = 0 is not strict at level 2.
        let flat = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 2)
                .into_iter()
                .map(|p| (p, BigRational::zero())),
        )
        .unwrap();
        assert!(strict_hive_to_puiseux_hpp(&flat, &default_mus()).is_err());
    }

    #[test]
    fn trop_hive_roundtrip() {
        let h = DiscreteFunction::new(
            crate::lattice::enumerate_simplex(3, 2)
                .into_iter()
                .map(|p| { let v = h_zero(&p); (p, v) }),
        )
        .unwrap();
        let out = strict_hive_to_puiseux_hpp(&h, &default_mus()).unwrap();
        assert!(trop_of_hpp_is_hive_check(&out.poly).unwrap().verdict);

        // (x+y+z)^2 tropicalizes to 0, a hive.
        let x = PuiseuxPolynomial::variable(3, 0).unwrap();
        let y = PuiseuxPolynomial::variable(3, 1).unwrap();
        let z = PuiseuxPolynomial::variable(3, 2).unwrap();
        let s = x.add(&y).unwrap().add(&z).unwrap();
        assert!(trop_of_hpp_is_hive_check(&s.mul(&s).unwrap()).unwrap().verdict);

        // A dent: drop the mid-edge coefficient to t^(-1), so trop has a
        // rhombus with gap -2... vertices 0, one mid-edge -1.
        let mut dent = s.mul(&s).unwrap();
        // Replace coefficient 2 at (1,1,0) with t^(-1).
        dent.add_term(vec![1, 1, 0], PuiseuxNumber::from_rational(q("-2")));
        dent.add_term(vec![1, 1, 0], PuiseuxNumber::t_power(q("-1")));
        let r = trop_of_hpp_is_hive_check(&dent).unwrap();
        assert!(!r.verdict);
        assert!(matches!(r.witness, Some(Witness::RhombusViolation { .. })));
    }

    #[test]
    fn default_sample_grid() {
        let s = default_samples(2);
        assert_eq!(s.len(), 49);
        assert!(s.contains(&vec![q("0"), q("0")]));
        // Large variable counts fall back to a thin grid.
        let s = default_samples(8);
        assert!(s.len() < 100);
        assert!(s.iter().all(|x| x.len() == 8));
    }
}
