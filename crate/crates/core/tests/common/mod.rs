//! Oracles for the property tests: small, independent implementations that
//! share no code with the library routines they cross-check.

#![allow(dead_code)]

use hpp_core::dfunc::DiscreteFunction;
use hpp_core::generators::WeightedGraph;
use hpp_core::lattice::{LatticePoint, PointSet};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Max weight of a sub-multigraph per degree sequence, by brute enumeration
/// of edge multiplicities. This is the tropicalization of the
/// degree-sequence polynomial, computed without polynomials.
pub fn subgraph_trop_oracle(g: &WeightedGraph) -> BTreeMap<Vec<i64>, BigRational> {
    let edges = g.edges();
    let mut best: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    let mut mult = vec![0u32; edges.len()];
    loop {
        let mut deg = vec![0i64; g.nvertices()];
        let mut weight = BigRational::zero();
        for (e, &m) in edges.iter().zip(&mult) {
            deg[e.u - 1] += m as i64;
            deg[e.v - 1] += m as i64;
            weight += e.w.clone() * q(m as i64);
        }
        best.entry(deg)
            .and_modify(|w| {
                if weight > *w {
                    *w = weight.clone();
                }
            })
            .or_insert(weight);
        // Odometer over 0..=c_e per edge.
        let mut i = 0;
        loop {
            if i == edges.len() {
                return best;
            }
            if mult[i] < edges[i].c {
                mult[i] += 1;
                break;
            }
            mult[i] = 0;
            i += 1;
        }
    }
}

/// Max weight of a matching per covered-vertex indicator, by brute
/// enumeration of edge subsets.
pub fn matching_trop_oracle(g: &WeightedGraph) -> BTreeMap<Vec<i64>, BigRational> {
    let edges = g.edges();
    assert!(edges.len() < 20, "oracle is exponential in the edge count");
    let mut best: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut covered = vec![0i64; g.nvertices()];
        let mut weight = BigRational::zero();
        let mut ok = true;
        for (i, e) in edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            if covered[e.u - 1] == 1 || covered[e.v - 1] == 1 {
                ok = false;
                break;
            }
            covered[e.u - 1] = 1;
            covered[e.v - 1] = 1;
            weight += e.w.clone();
        }
        if !ok {
            continue;
        }
        best.entry(covered)
            .and_modify(|w| {
                if weight > *w {
                    *w = weight.clone();
                }
            })
            .or_insert(weight);
    }
    best
}

/// Determinant by first-row cofactor expansion. O(n!), fine for n <= 6.
pub fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::from_integer(1.into());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].clone() * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Minkowski sum A + B = {a + b}.
pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> PointSet {
    let mut pts = Vec::new();
    for x in a.iter() {
        for y in b.iter() {
            pts.push(x.add(y));
        }
    }
    PointSet::new(a.dim(), pts).expect("same dimension")
}

/// A random jump system: the Minkowski sum of `nseg` two-point segments
/// {0, v}. With `even_only`, every |v| is 2, so the sum has constant parity.
/// (Segments with |v| <= 2 satisfy the two-step axiom, and sums of jump
/// systems are jump systems.)
pub fn random_segment_sum<R: Rng>(
    rng: &mut R,
    dim: usize,
    nseg: usize,
    even_only: bool,
    nonneg: bool,
) -> PointSet {
    let origin = PointSet::new(dim, [LatticePoint::new(vec![0; dim])]).unwrap();
    let mut acc = origin;
    for _ in 0..nseg {
        let mut v = vec![0i64; dim];
        let norm = if even_only { 2 } else { rng.gen_range(1..=2) };
        if norm == 1 {
            let i = rng.gen_range(0..dim);
            v[i] = if nonneg || rng.gen_bool(0.5) { 1 } else { -1 };
        } else {
            // Either 2e_i or e_i +/- e_j.
            let i = rng.gen_range(0..dim);
            let si = if nonneg || rng.gen_bool(0.5) { 1 } else { -1 };
            if rng.gen_bool(0.4) || dim == 1 {
                v[i] = 2 * si;
            } else {
                let mut j = rng.gen_range(0..dim - 1);
                if j >= i {
                    j += 1;
                }
                v[i] = si;
                v[j] = if nonneg || rng.gen_bool(0.5) { 1 } else { -1 };
            }
        }
        let seg = PointSet::new(dim, [LatticePoint::new(vec![0; dim]), LatticePoint::new(v)])
            .unwrap();
        acc = minkowski_sum(&acc, &seg);
    }
    acc
}

/// A function on the given support, built from a closure.
pub fn func_on(
    support: &PointSet,
    f: impl Fn(&LatticePoint) -> BigRational,
) -> DiscreteFunction {
    DiscreteFunction::new(support.iter().map(|p| (p.clone(), f(p))))
        .expect("support points are distinct")
}

/// All 2^|universe| - 1 nonempty subsets of a point list, as sets.
pub fn nonempty_subsets(universe: &[LatticePoint], dim: usize) -> Vec<PointSet> {
    assert!(universe.len() < 16, "exhaustive enumeration only");
    let mut out = Vec::new();
    for mask in 1u32..(1 << universe.len()) {
        let pts = universe
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone());
        out.push(PointSet::new(dim, pts).unwrap());
    }
    out
}
