//! Exact graph invariants of the edge ideal: independence, matching, induced
//! matching, edge domination, and the v-number.
//!
//! Everything here is exhaustive search over bitset-encoded vertex sets,
//! memoised on the induced-subgraph mask where that helps. The algorithms
//! are exponential by nature and are meant for the desk scale this crate
//! targets (roughly n <= 16; the enumeration workloads stop at n = 8).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    /// The edge ideal of an edgeless graph is zero; v-number and edge
    /// domination are undefined for it.
    #[error("the graph has no edges, so the requested invariant is undefined")]
    NoEdges,
}

/// A certified v-number witness: `set` is independent, its open
/// neighbourhood `cover` is a vertex cover, and no smaller independent set
/// has that property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VWitness {
    pub set: VertexSet,
    pub cover: VertexSet,
    pub size: usize,
}

/// The full invariant tuple of one graph, as reported by the CLI and the
/// verification sweeps. `graph6_key` identifies the isomorphism class
/// (canonical graph6 when the graph is small enough to canonicalise).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub alpha: usize,
    pub matching: usize,
    pub induced_matching: usize,
    pub edge_domination: usize,
    pub v_number: usize,
    pub regularity: usize,
    pub graph6_key: String,
}

/// Independence number: the size of a largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    fn rec(g: &Graph, mask: u64, memo: &mut HashMap<u64, u32>) -> u32 {
        if mask == 0 {
            return 0;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let v = mask.trailing_zeros() as usize;
        // either v stays out, or v goes in and excludes N[v]
        let out = rec(g, mask & !(1 << v), memo);
        let n_closed = g.neighbors(v).bits() | (1 << v);
        let inn = 1 + rec(g, mask & !n_closed, memo);
        let best = out.max(inn);
        memo.insert(mask, best);
        best
    }
    rec(g, g.vertices().bits(), &mut HashMap::new()) as usize
}

/// Matching number: the size of a largest set of pairwise disjoint edges.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, mask: u64, memo: &mut HashMap<u64, u32>) -> u32 {
        // first vertex in the mask that still has a neighbour in the mask
        let mut t = mask;
        let v = loop {
            if t == 0 {
                return 0;
            }
            let v = t.trailing_zeros() as usize;
            if g.neighbors(v).bits() & mask != 0 {
                break v;
            }
            t &= t - 1;
        };
        let key = mask;
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut best = rec(g, mask & !(1 << v), memo); // v unmatched
        let mut nb = g.neighbors(v).bits() & mask;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + rec(g, mask & !(1 << v) & !(1 << u), memo));
        }
        memo.insert(key, best);
        best
    }
    rec(g, g.vertices().bits(), &mut HashMap::new()) as usize
}

/// Induced matching number: the size of a largest matching `M` such that no
/// edge of the graph joins endpoints of two different members of `M`.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, mask: u64, memo: &mut HashMap<u64, u32>) -> u32 {
        let mut t = mask;
        let v = loop {
            if t == 0 {
                return 0;
            }
            let v = t.trailing_zeros() as usize;
            if g.neighbors(v).bits() & mask != 0 {
                break v;
            }
            t &= t - 1;
        };
        let key = mask;
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut best = rec(g, mask & !(1 << v), memo); // v not an endpoint
        let mut nb = g.neighbors(v).bits() & mask;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            // taking edge {v, u} forbids both closed neighbourhoods: any
            // survivor adjacent to v or u would create a joining edge
            let forbidden =
                g.neighbors(v).bits() | g.neighbors(u).bits() | (1 << v) | (1 << u);
            best = best.max(1 + rec(g, mask & !forbidden, memo));
        }
        memo.insert(key, best);
        best
    }
    rec(g, g.vertices().bits(), &mut HashMap::new()) as usize
}

/// Edge domination number: the size of a smallest maximal matching
/// (equivalently, of a smallest edge dominating set).
pub fn edge_domination_number(g: &Graph) -> Result<usize, InvariantError> {
    if g.edge_count() == 0 {
        return Err(InvariantError::NoEdges);
    }
    // Branch on the first edge with both endpoints uncovered: a maximal
    // matching must cover u or v, and the covering edge's other endpoint is
    // also uncovered, so trying every uncovered neighbour of u and of v is
    // exhaustive. When no such edge remains the selection is maximal.
    fn rec(g: &Graph, covered: u64, count: usize, best: &mut usize) {
        if count >= *best {
            return;
        }
        let mut first = None;
        'outer: for v in 0..g.n() {
            if covered & (1 << v) != 0 {
                continue;
            }
            let free_nb = g.neighbors(v).bits() & !covered;
            if free_nb != 0 {
                first = Some((v, free_nb.trailing_zeros() as usize));
                break 'outer;
            }
        }
        let Some((u, v)) = first else {
            *best = count; // guarded by count < *best above
            return;
        };
        if count + 1 >= *best {
            return; // at least one more edge is forced
        }
        let mut cands = g.neighbors(u).bits() & !covered;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            rec(g, covered | (1 << u) | (1 << w), count + 1, best);
        }
        let mut cands = g.neighbors(v).bits() & !covered & !(1 << u);
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            rec(g, covered | (1 << v) | (1 << w), count + 1, best);
        }
    }
    let mut best = g.n(); // any matching has at most n/2 < n edges
    rec(g, 0, 0, &mut best);
    Ok(best)
}

/// The v-number together with its certifying witness.
///
/// Searches independent sets by increasing size; within one size, candidates
/// are visited in increasing bitmask value, so the returned witness is the
/// numerically smallest among all minimum-size witnesses. The search starts
/// at the forced-triple lower bound (see [`forced_p3_triples`]); unit tests
/// pin this against a bound-free brute force.
pub fn v_number(g: &Graph) -> Result<VWitness, InvariantError> {
    if g.edge_count() == 0 {
        return Err(InvariantError::NoEdges);
    }
    let n = g.n();
    let alpha = independence_number(g);
    let lower = forced_p3_triples(g).len().max(1);
    for k in lower..=alpha {
        // Gosper's hack: k-subsets of {0..n-1} in increasing mask value
        let mut c: u64 = (1 << k) - 1;
        while c < 1u64 << n {
            let a = VertexSet::from_bits(c);
            if g.is_independent(a) {
                let nb = g.neighbor_set(a);
                if g.is_vertex_cover(nb) {
                    return Ok(VWitness {
                        set: a,
                        cover: nb,
                        size: k,
                    });
                }
            }
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            c = ripple | (((c ^ ripple) >> 2) / low);
        }
    }
    // A maximal independent set A always works: N(A) = V \ A is a cover.
    unreachable!("every graph with an edge has a v-number witness of size <= alpha")
}

/// A maximal collection of pairwise disjoint triples `{x, y, z}` such that
/// `x-y-z` is an induced path with `deg(y) = 2` and `deg(z) = 1`.
///
/// Every v-number witness must intersect each such triple, so the count is a
/// lower bound for the v-number. Greedy selection scanning the pendant
/// vertex `z` in increasing label order; deterministic.
pub fn forced_p3_triples(g: &Graph) -> Vec<VertexSet> {
    let mut used = VertexSet::EMPTY;
    let mut out = Vec::new();
    for z in 0..g.n() {
        if g.degree(z) != 1 {
            continue;
        }
        let y = g.neighbors(z).min_vertex().expect("degree 1");
        if g.degree(y) != 2 {
            continue;
        }
        let x = g
            .neighbors(y)
            .without(z)
            .min_vertex()
            .expect("degree 2 leaves one other neighbour");
        // z's only neighbour is y, so {x, z} is never an edge: induced P3
        let triple = VertexSet::singleton(x).with(y).with(z);
        if triple.intersection(used).is_empty() {
            used = used.union(triple);
            out.push(triple);
        }
    }
    out
}
