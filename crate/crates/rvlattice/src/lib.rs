//! Invariants of edge ideals of finite simple graphs.
//!
//! Given a finite simple graph `G` on vertices `{0, .., n-1}`, the edge ideal
//! `I(G)` is the ideal generated by the monomials `x_u x_v` over the edges
//! `{u, v}` of `G`. This crate computes the combinatorial invariants of
//! `R/I(G)` that are visible in the graph itself:
//!
//! * the v-number `v(G)`: the smallest independent set `A` whose open
//!   neighbourhood `N(A)` is a vertex cover ([`invariants::v_number`]),
//! * the Castelnuovo-Mumford regularity `reg(R/I(G))`, computed
//!   topologically from reduced homology of independence complexes of
//!   induced subgraphs ([`homology::regularity_hochster`]) with proven
//!   shortcuts for chordal, whisker, and Cameron-Walker graphs
//!   ([`homology::regularity`]),
//! * the classical packing numbers: independence, matching, induced
//!   matching, and edge domination ([`invariants`]).
//!
//! On top of the invariants sit:
//!
//! * [`families`]: constructions that realise a prescribed pair
//!   `(reg, v) = (r, v)` on `n` vertices, within trees, chordal graphs,
//!   whisker graphs, and Cameron-Walker graphs,
//! * [`enumeration`]: exhaustive generation of connected graphs up to
//!   isomorphism (through `n = 8`) and a graph6 stream reader for corpora
//!   produced by external generators,
//! * [`rv_sets`]: the closed-form lattice-point sets that bound or describe
//!   which pairs `(r, v)` occur, and the machinery to compare them against
//!   enumerated reality.
//!
//! Everything is exact: no floating point, no randomised algorithms, and all
//! searches are exhaustive over bitset-encoded vertex sets. Graphs are capped
//! at 62 vertices so a vertex set always fits in one `u64` word, which is
//! also precisely the range of the short graph6 format.

pub mod enumeration;
pub mod families;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod recognition;
pub mod rv_sets;

pub use graph::{Edge, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use homology::{Field, HomologyError};
pub use invariants::{InvariantError, InvariantRecord, VWitness};

use thiserror::Error;

/// Errors from [`invariant_record`], which spans the search-based invariants
/// and the homological regularity computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Compute the full invariant record of a graph with at least one edge.
///
/// `graph6_key` is the canonical graph6 form when the graph is small enough
/// to canonicalise (n <= 10), otherwise the graph6 of the labelling as given.
pub fn invariant_record(g: &Graph, field: Field) -> Result<InvariantRecord, RecordError> {
    let witness = invariants::v_number(g)?;
    let key = match enumeration::canonical_form(g) {
        Ok(key) => key.bytes,
        Err(_) => graph::emit_graph6(g),
    };
    Ok(InvariantRecord {
        alpha: invariants::independence_number(g),
        matching: invariants::matching_number(g),
        induced_matching: invariants::induced_matching_number(g),
        edge_domination: invariants::edge_domination_number(g)?,
        v_number: witness.size,
        regularity: homology::regularity_with_field(g, field)?,
        graph6_key: key,
    })
}
