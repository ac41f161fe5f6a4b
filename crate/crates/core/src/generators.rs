//! The example zoo: graph polynomials whose supports are jump systems,
//! determinant constructions, the Fano distance function, and seeded random
//! factories for the property tests.
//!
//! Everything here is a *source* of instances for the checkers: supports of
//! the generated polynomials are jump systems, their tropicalizations are
//! exchange-concave, and the Fano construction supplies an exchange-concave
//! function whose maximizer set is a matroid basis family with no stable
//! generating polynomial (cited, not re-proved; only the concavity side is
//! computed).

use crate::dfunc::{self, DiscreteFunction};
use crate::error::Error;
use crate::lattice::{enumerate_simplex, LatticePoint, PointSet};
use crate::puiseux::PuiseuxNumber;
use crate::stability::h_zero;
use crate::tpoly::{berkowitz_det, PuiseuxPolynomial, DEFAULT_TERM_CAP};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// One weighted edge; vertices are 1-based, `c` is the multiplicity (how
/// many parallel copies the degree-sequence product takes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    #[serde(with = "crate::rat::qstr")]
    pub w: BigRational,
    #[serde(default = "default_multiplicity")]
    pub c: u32,
}

fn default_multiplicity() -> u32 {
    1
}

/// A loopless weighted graph. Parallel entries in the edge list are allowed
/// (a multigraph); loops are not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for WeightedGraph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self, Error> {
        WeightedGraph::new(r.n, r.edges)
    }
}

impl From<WeightedGraph> for GraphRepr {
    fn from(g: WeightedGraph) -> Self {
        GraphRepr { n: g.n, edges: g.edges }
    }
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self, Error> {
        for e in &edges {
            if e.u < 1 || e.u > n || e.v < 1 || e.v > n {
                return Err(Error::BadGraph(format!(
                    "edge ({}, {}) has an endpoint outside 1..={n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::BadGraph(format!("loop at vertex {}", e.u)));
            }
            if e.c == 0 {
                return Err(Error::BadGraph(format!(
                    "edge ({}, {}) has multiplicity 0",
                    e.u, e.v
                )));
            }
        }
        Ok(WeightedGraph { n, edges })
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// Π over edges of (1 + t^(w_e) z_u z_v)^(c_e), expanded. The support is
/// the set of degree sequences of sub-multigraphs, and the coefficient
/// valuation at α is the maximum total weight of a sub-multigraph with
/// degree sequence α.
pub fn degree_sequence_poly(
    g: &WeightedGraph,
    cap: usize,
) -> Result<PuiseuxPolynomial, Error> {
    let n = g.nvertices();
    let mut p = PuiseuxPolynomial::one(n);
    for e in g.edges() {
        let mut alpha = vec![0u32; n];
        alpha[e.u - 1] += 1;
        alpha[e.v - 1] += 1;
        let mut factor = PuiseuxPolynomial::one(n);
        factor.add_term(alpha, PuiseuxNumber::t_power(e.w.clone()));
        for _ in 0..e.c {
            p = p.mul(&factor)?;
            if p.num_terms() > cap {
                return Err(Error::TermCapExceeded { cap });
            }
        }
    }
    Ok(p)
}

/// Σ over partial matchings F of t^(w(F)) Π_{uv ∈ F} z_u z_v. Edge
/// multiplicities are ignored (each list entry is one edge; a matching uses
/// it at most once). The coefficient valuation at the indicator of a vertex
/// set S is the maximum weight of a matching covering S exactly.
pub fn matching_poly(g: &WeightedGraph) -> PuiseuxPolynomial {
    let n = g.nvertices();
    let mut p = PuiseuxPolynomial::one(n);
    for e in g.edges() {
        // Matchings gaining this edge are exactly the earlier matchings
        // that leave both endpoints uncovered.
        let mut extended = Vec::new();
        for (a, c) in p.terms() {
            if a[e.u - 1] == 0 && a[e.v - 1] == 0 {
                let mut alpha = a.clone();
                alpha[e.u - 1] = 1;
                alpha[e.v - 1] = 1;
                extended.push((alpha, c.mul(&PuiseuxNumber::t_power(e.w.clone()))));
            }
        }
        for (alpha, c) in extended {
            p.add_term(alpha, c);
        }
    }
    p
}

/// True when the square rational matrix equals its transpose.
pub fn is_symmetric(a: &[Vec<BigRational>]) -> Result<bool, Error> {
    let d = a.len();
    for row in a {
        if row.len() != d {
            return Err(Error::BadMatrix(format!(
                "expected {d} columns, found {}",
                row.len()
            )));
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            if a[i][j] != a[j][i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact positive-semidefiniteness of a symmetric rational matrix: every
/// principal minor (not only the leading ones — those miss e.g.
/// diag(0, −1)) must be nonnegative.
pub fn is_psd(a: &[Vec<BigRational>]) -> Result<bool, Error> {
    if !is_symmetric(a)? {
        return Ok(false);
    }
    let d = a.len();
    if d >= 26 {
        return Err(Error::BadMatrix(
            "principal-minor enumeration is exponential; use at most 25 rows".into(),
        ));
    }
    for mask in 1u32..(1 << d) {
        let idx: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        if berkowitz_det(&sub)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A PSD matrix optionally scaled by a power of t, as fed to
/// [`psd_det_poly`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaledPsd {
    #[serde(with = "crate::rat::qstr_mat")]
    pub a: Vec<Vec<BigRational>>,
    /// Exponent w in the scale factor t^w (default: no scaling).
    #[serde(default, with = "crate::rat::qstr_opt", skip_serializing_if = "Option::is_none")]
    pub tpow: Option<BigRational>,
}

/// det(z₁ t^(w₁) A₁ + ⋯ + zₙ t^(wₙ) Aₙ), expanded exactly. Each Aᵢ must be
/// symmetric positive semidefinite (verified by all principal minors); the
/// result is homogeneous of degree d in n variables.
pub fn psd_det_poly(mats: &[ScaledPsd]) -> Result<PuiseuxPolynomial, Error> {
    if mats.is_empty() {
        return Err(Error::Empty("matrix list"));
    }
    let d = mats[0].a.len();
    if d == 0 {
        return Err(Error::BadMatrix("matrices must be nonempty".into()));
    }
    for (k, m) in mats.iter().enumerate() {
        if m.a.len() != d {
            return Err(Error::BadMatrix(format!(
                "matrix {} is {}x{}, expected {d}x{d}",
                k + 1,
                m.a.len(),
                m.a.first().map(|r| r.len()).unwrap_or(0)
            )));
        }
        if !is_symmetric(&m.a)? {
            return Err(Error::BadMatrix(format!("matrix {} is not symmetric", k + 1)));
        }
        if !is_psd(&m.a)? {
            return Err(Error::BadMatrix(format!(
                "matrix {} is not positive semidefinite",
                k + 1
            )));
        }
    }
    let n = mats.len();
    let mut forms = vec![vec![PuiseuxPolynomial::zero(n); d]; d];
    for (k, m) in mats.iter().enumerate() {
        let scale = match &m.tpow {
            Some(w) => PuiseuxNumber::t_power(w.clone()),
            None => PuiseuxNumber::one(),
        };
        let mut alpha = vec![0u32; n];
        alpha[k] = 1;
        for i in 0..d {
            for j in 0..d {
                if m.a[i][j].is_zero() {
                    continue;
                }
                forms[i][j].add_term(alpha.clone(), scale.scale(&m.a[i][j]));
            }
        }
    }
    berkowitz_det(&forms)
}

/// All r-element subsets of 0..n in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that can still move.
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - r {
                break;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Σ over r-column subsets S of det(A[S])² Π_{j∈S} z_j for an r×n rational
/// matrix A: the (real) basis generating polynomial. Multiaffine and
/// homogeneous of degree r; the support is the column matroid's basis set.
pub fn basis_generating_poly(a: &[Vec<BigRational>]) -> Result<PuiseuxPolynomial, Error> {
    let r = a.len();
    let n = a.first().map(|row| row.len()).unwrap_or(0);
    for row in a {
        if row.len() != n {
            return Err(Error::BadMatrix(format!(
                "expected {n} columns, found {}",
                row.len()
            )));
        }
    }
    if r > n {
        return Err(Error::BadMatrix(format!(
            "need at least as many columns as rows, got {r}x{n}"
        )));
    }
    let mut p = PuiseuxPolynomial::zero(n);
    if r == 0 {
        p.add_term(vec![0; n], PuiseuxNumber::one());
        return Ok(p);
    }
    for s in combinations(n, r) {
        let sub: Vec<Vec<BigRational>> = (0..r)
            .map(|i| s.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        let det = berkowitz_det(&sub)?;
        if det.is_zero() {
            continue;
        }
        let mut alpha = vec![0u32; n];
        for &j in &s {
            alpha[j] = 1;
        }
        p.add_term(alpha, PuiseuxNumber::from_rational(&det * &det));
    }
    Ok(p)
}

/// f(S) = ν(det A[S]) over the principal minors of a skew-symmetric matrix
/// with Puiseux entries, on the subsets with nonzero minor (encoded as 0/1
/// indicator points). The empty minor is 1, so f(∅) = 0 and the support is
/// never empty; it has constant parity because skew determinants of odd
/// size vanish.
pub fn skew_minors_function(a: &[Vec<PuiseuxNumber>]) -> Result<DiscreteFunction, Error> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::BadMatrix(format!(
                "expected {n} columns, found {}",
                row.len()
            )));
        }
    }
    for i in 0..n {
        for j in i..n {
            if a[i][j] != a[j][i].neg() {
                return Err(Error::BadMatrix(format!(
                    "not skew-symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if n >= 26 {
        return Err(Error::BadMatrix(
            "principal-minor enumeration is exponential; use at most 25 rows".into(),
        ));
    }
    let mut values = vec![(LatticePoint::new(vec![0; n]), BigRational::zero())];
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<PuiseuxNumber>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        let det = berkowitz_det(&sub)?;
        if let Some(v) = det.valuation().finite() {
            let mut coords = vec![0i64; n];
            for &i in &idx {
                coords[i] = 1;
            }
            values.push((LatticePoint::new(coords), v));
        }
    }
    DiscreteFunction::new(values)
}

/// The lines of the Fano plane on points 1..7, in the cyclic {k, k+1, k+3}
/// labelling.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// The 28 bases of the Fano matroid — every 3-subset of {1..7} that is not
/// a line — as 0/1 indicator points in dimension 7.
pub fn fano_bases() -> PointSet {
    let mut lines: Vec<[usize; 3]> = FANO_LINES.to_vec();
    for l in &mut lines {
        l.sort_unstable();
    }
    let points = combinations(7, 3).into_iter().filter_map(|s| {
        let labelled = [s[0] + 1, s[1] + 1, s[2] + 1];
        if lines.contains(&labelled) {
            return None;
        }
        let mut coords = vec![0i64; 7];
        for &j in &s {
            coords[j] = 1;
        }
        Some(LatticePoint::new(coords))
    });
    PointSet::new(7, points).expect("uniform dims")
}

/// Distance function −min |α − β| to the Fano bases, on the whole level-3
/// simplex in dimension 7 (84 points).
pub fn fano_distance() -> DiscreteFunction {
    dfunc::distance_function(&fano_bases(), 7, 3)
        .expect("the Fano basis family is a constant-sum jump system")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_ratio(r: &mut ChaCha8Rng, max_abs: i64, max_denom: i64) -> BigRational {
    let numer = r.gen_range(-max_abs..=max_abs);
    let denom = r.gen_range(1..=max_denom);
    BigRational::new(numer.into(), denom.into())
}

/// Random integer-valued hive on the level-n triangle: a steep multiple of
/// the gap-1 pattern plus a linear form plus a ±1 dent. The base gap s per
/// rhombus absorbs the dent (which moves any gap by at most 4), so s = 4
/// always yields a hive; it is verified before returning.
pub fn random_hive(n: i64, seed: u64) -> DiscreteFunction {
    random_hive_inner(n, seed, 4)
}

/// As [`random_hive`] but with base gap 5, so every rhombus inequality is
/// strict; verified before returning.
pub fn random_strict_hive(n: i64, seed: u64) -> DiscreteFunction {
    random_hive_inner(n, seed, 5)
}

fn random_hive_inner(n: i64, seed: u64, steep: i64) -> DiscreteFunction {
    let mut r = rng(seed);
    let b: Vec<i64> = (0..3).map(|_| r.gen_range(-3..=3)).collect();
    let h = DiscreteFunction::new(enumerate_simplex(3, n).into_iter().map(|p| {
        let base = h_zero(&p) * BigRational::from_integer(steep.into());
        let linear: i64 = p.coords().iter().zip(&b).map(|(c, w)| c * w).sum();
        let dent = r.gen_range(-1..=1i64);
        let v = base + BigRational::from_integer((linear + dent).into());
        (p, v)
    }))
    .expect("simplex is nonempty");
    let strict = steep >= 5;
    let report = dfunc::is_hive(&h, strict).expect("full simplex support");
    assert!(report.verdict, "construction guarantees the gap bound");
    h
}

/// Random d×d PSD matrix as a Gram product BᵀB of a random integer matrix.
pub fn random_psd(d: usize, seed: u64) -> Vec<Vec<BigRational>> {
    let mut r = rng(seed);
    let b: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..d).map(|_| r.gen_range(-3..=3)).collect())
        .collect();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let dot: i64 = (0..d).map(|k| b[k][i] * b[k][j]).sum();
                    BigRational::from_integer(dot.into())
                })
                .collect()
        })
        .collect()
}

/// Gram product BᵀB of a rational k×d matrix: always symmetric PSD.
pub fn gram(b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let k = b.len();
    let d = b.first().map(|row| row.len()).unwrap_or(0);
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..k).map(|l| &b[l][i] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

/// Random simple loopless graph on v vertices with at most `emax` edges,
/// multiplicity 1, small random rational weights.
pub fn random_graph(v: usize, emax: usize, seed: u64) -> WeightedGraph {
    let mut r = rng(seed);
    let mut pairs = Vec::new();
    for i in 1..=v {
        for j in (i + 1)..=v {
            pairs.push((i, j));
        }
    }
    // Partial Fisher-Yates: draw up to emax distinct pairs.
    let take = emax.min(pairs.len());
    for k in 0..take {
        let pick = r.gen_range(k..pairs.len());
        pairs.swap(k, pick);
    }
    let edges = pairs[..take]
        .iter()
        .map(|&(u, w)| Edge { u, v: w, w: random_ratio(&mut r, 4, 3), c: 1 })
        .collect();
    WeightedGraph::new(v, edges).expect("generated edges are valid")
}

/// Random skew-symmetric n×n matrix whose entries are 0 or ±t^k for small
/// integer k.
pub fn random_skew(n: usize, seed: u64) -> Vec<Vec<PuiseuxNumber>> {
    let mut r = rng(seed);
    let mut a = vec![vec![PuiseuxNumber::zero(); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if r.gen_range(0..4) == 0 {
                continue; // leave a zero entry now and then
            }
            let k = r.gen_range(-2..=2i64);
            let sign = if r.gen_range(0..2) == 0 { 1 } else { -1 };
            let entry = PuiseuxNumber::t_power(BigRational::from_integer(k.into()))
                .scale(&BigRational::from_integer(sign.into()));
            a[i][j] = entry.clone();
            a[j][i] = entry.neg();
        }
    }
    a
}

/// Cap alias re-exported so callers need not reach into `tpoly`.
pub const TERM_CAP: usize = DEFAULT_TERM_CAP;
