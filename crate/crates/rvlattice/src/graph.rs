//! Finite simple graphs on labelled vertices `{0, .., n-1}`, stored as one
//! adjacency bitset per vertex.
//!
//! The vertex count is capped at [`MAX_VERTICES`] = 62 so that every vertex
//! set fits in a single `u64`, and so that the short graph6 form (one
//! printable byte for the order) is always sufficient. All downstream
//! searches run on these masks with `t &= t - 1` style bit iteration.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count. Keeps vertex sets in one `u64` word and
/// matches exactly what short-form graph6 can encode.
pub const MAX_VERTICES: usize = 62;

const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// A set of vertices packed as a bitmask over labels `0..=61`.
///
/// `Ord` compares the underlying mask value; every "smallest witness"
/// tie-break in the crate is phrased in terms of this order, so determinism
/// comes for free.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | bit(v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate the members in increasing label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut t = self.0;
        std::iter::from_fn(move || {
            if t == 0 {
                None
            } else {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An undirected edge, normalised so that `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        debug_assert_ne!(a, b, "loops are not edges of a simple graph");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}: only simple graphs are supported")]
    LoopRejected { vertex: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },
}

/// A finite simple graph. Symmetric adjacency, zero diagonal, no multi-edges;
/// all three are structural (the constructors cannot produce anything else).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Duplicate edges collapse silently;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopRejected { vertex: a });
            }
            for &x in &[a, b] {
                if x >= n {
                    return Err(GraphError::InvalidVertex { vertex: x, n });
                }
            }
            g.adj[a] |= bit(b);
            g.adj[b] |= bit(a);
        }
        Ok(g)
    }

    /// Construct directly from adjacency rows. Crate-internal: callers must
    /// guarantee symmetry and a zero diagonal.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        for (v, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & bit(v), 0, "diagonal must be zero");
            debug_assert_eq!(row >> n, 0, "adjacency outside 0..n");
            for u in (VertexSet(row)).iter() {
                debug_assert_ne!(adj[u] & bit(v), 0, "adjacency must be symmetric");
            }
        }
        Graph { n, adj }
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut t = self.adj[u] >> (u + 1) << (u + 1);
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Open neighbourhood `N(A)`: every vertex adjacent to a member of `A`.
    /// May intersect `A` itself when `A` is not independent.
    pub fn neighbor_set(&self, a: VertexSet) -> VertexSet {
        debug_assert!(a.is_subset_of(self.vertices()));
        let mut out = 0u64;
        for v in a.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// Closed neighbourhood `N[A] = A` together with `N(A)`.
    pub fn closed_neighborhood(&self, a: VertexSet) -> VertexSet {
        self.neighbor_set(a).union(a)
    }

    /// The subgraph induced on `s`, relabelled to `{0, .., |s|-1}` with the
    /// label order preserved. Returns the map `new -> old`.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(s.is_subset_of(self.vertices()));
        let map: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; map.len()];
        for (new_u, &old_u) in map.iter().enumerate() {
            let mut row = self.adj[old_u] & s.bits();
            while row != 0 {
                let old_v = row.trailing_zeros() as usize;
                row &= row - 1;
                // position of old_v within the sorted members of s
                let new_v = (s.bits() & (bit(old_v) - 1)).count_ones() as usize;
                adj[new_u] |= bit(new_v);
            }
        }
        (Graph::from_adjacency(adj), map)
    }

    /// Induced subgraph on the complement of `s` (labels compacted).
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices().minus(s)).0
    }

    /// `G - N[x]`: delete `x` and all its neighbours.
    pub fn delete_closed_neighborhood(&self, x: usize) -> Graph {
        debug_assert!(x < self.n);
        self.delete_vertices(self.closed_neighborhood(VertexSet::singleton(x)))
    }

    /// True iff no two members of `a` are adjacent. The empty set is
    /// independent.
    pub fn is_independent(&self, a: VertexSet) -> bool {
        debug_assert!(a.is_subset_of(self.vertices()));
        a.iter().all(|v| self.adj[v] & a.bits() == 0)
    }

    /// True iff every edge has an endpoint in `c`. Vacuously true on an
    /// edgeless graph.
    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        debug_assert!(c.is_subset_of(self.vertices()));
        (0..self.n).all(|v| c.contains(v) || self.adj[v] & !c.bits() == 0)
    }

    /// Connectivity; graphs on at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    /// The vertex set of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        let mut seen = bit(v);
        loop {
            let mut grow = seen;
            let mut t = seen;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                grow |= self.adj[u];
            }
            if grow == seen {
                return VertexSet(seen);
            }
            seen = grow;
        }
    }

    /// All connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.min_vertex() {
            let c = self.component_of(v);
            out.push(c);
            left = left.minus(c);
        }
        out
    }

    /// Disjoint union, with `other`'s labels shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph::from_adjacency(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}", self.n)?;
        for e in self.edges() {
            write!(f, " {}-{}", e.u, e.v)?;
        }
        write!(f, ")")
    }
}

// ---- graph6 codec -------------------------------------------------------

// Short form only: one order byte (value + 63), then the upper triangle in
// column-major order, packed six bits per printable byte, zero-padded. The
// long form (leading '~') starts at 63 vertices and is out of range here.

/// Encode as a short-form graph6 record (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + n * n.saturating_sub(1) / 2 / 6 + 1);
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    out
}

/// Decode one short-form graph6 record. A single trailing newline is
/// tolerated; anything else out of place reports the offending byte offset.
pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let line = s.strip_suffix('\n').unwrap_or(s);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Format {
            offset: 0,
            reason: "empty graph6 record".into(),
        });
    }
    if bytes[0] == b'~' {
        return Err(GraphError::Format {
            offset: 0,
            reason: "long-form order (leading '~') unsupported; 62 vertices max".into(),
        });
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(GraphError::Format {
            offset: 0,
            reason: format!("invalid order byte 0x{:02x}", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(GraphError::Format {
            offset: bytes.len(),
            reason: format!(
                "truncated bit stream: need {nbytes} data bytes, got {}",
                bytes.len() - 1
            ),
        });
    }
    if bytes.len() > 1 + nbytes {
        return Err(GraphError::Format {
            offset: 1 + nbytes,
            reason: "trailing bytes after the bit stream".into(),
        });
    }
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Format {
                offset: k,
                reason: format!("invalid data byte 0x{b:02x}"),
            });
        }
    }
    let mut g = Graph::edgeless(n).expect("order byte range keeps n <= 62");
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = bytes[1 + idx / 6] - 63;
            if (chunk >> (5 - idx % 6)) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            idx += 1;
        }
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 && (bytes[nbytes] - 63) & ((1 << pad) - 1) != 0 {
        return Err(GraphError::Format {
            offset: nbytes,
            reason: "nonzero padding bits".into(),
        });
    }
    Ok(g)
}

// ---- edge-list text format ----------------------------------------------

// First line "n m", then m lines "u v" with 0-based labels. This is the
// human-editable input format; graph6 is the interchange one.

/// Parse the edge-list text format.
pub fn parse_edge_list(s: &str) -> Result<Graph, GraphError> {
    let mut offset = 0usize;
    let mut rows: Vec<(usize, &str)> = Vec::new();
    for raw in s.split('\n') {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if !line.trim().is_empty() {
            rows.push((offset, line));
        }
        offset += raw.len() + 1;
    }
    let Some(&(header_off, header)) = rows.first() else {
        return Err(GraphError::Format {
            offset: 0,
            reason: "empty input; expected a header line \"n m\"".into(),
        });
    };
    let parse_pair = |off: usize, line: &str, what: &str| -> Result<(usize, usize), GraphError> {
        let mut it = line.split_whitespace();
        let err = |reason: String| GraphError::Format { offset: off, reason };
        let a = it
            .next()
            .ok_or_else(|| err(format!("expected {what}")))?
            .parse::<usize>()
            .map_err(|_| err(format!("expected {what}, found {line:?}")))?;
        let b = it
            .next()
            .ok_or_else(|| err(format!("expected two numbers for {what}")))?
            .parse::<usize>()
            .map_err(|_| err(format!("expected {what}, found {line:?}")))?;
        if it.next().is_some() {
            return Err(err(format!("more than two fields in {what} line")));
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(header_off, header, "header \"n m\"")?;
    if rows.len() - 1 != m {
        let off = rows.get(m + 1).map_or(offset, |&(o, _)| o);
        return Err(GraphError::Format {
            offset: off,
            reason: format!("header declares {m} edges, found {}", rows.len() - 1),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for &(off, line) in &rows[1..] {
        edges.push(parse_pair(off, line, "edge \"u v\"")?);
    }
    Graph::from_edges(n, &edges)
}

/// Emit the edge-list text format, edges sorted.
pub fn emit_edge_list(g: &Graph) -> String {
    use std::fmt::Write as _;
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), edges.len()).unwrap();
    for e in edges {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

// ---- small named graphs for tests and docs ------------------------------

/// The path on `n` vertices, `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path parameters are always valid")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("cycle parameters are always valid")
}

/// The complete graph on `n <= 62` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete-graph parameters are always valid")
}

/// The star `K_{1,m}`: centre 0, leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Graph::from_edges(m + 1, &edges).expect("star parameters are always valid")
}
