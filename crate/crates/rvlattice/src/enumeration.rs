//! Exhaustive connected-graph enumeration and canonical labeling.
//!
//! The verification sweeps need every connected graph on up to eight
//! vertices, each exactly once up to isomorphism. Graphs are generated by
//! vertex augmentation — every connected graph on `k` vertices is some
//! connected graph on `k - 1` vertices plus a new vertex joined to a
//! nonempty subset (delete any non-cut vertex to see this) — and
//! deduplicated by canonical key.
//!
//! The canonical key is the lexicographically least upper-triangle bit
//! string over all vertex orderings that list degrees in descending order,
//! re-emitted as graph6. graph6 packs exactly that bit string, most
//! significant bit first, so minimizing the bits minimizes the encoded
//! bytes: keys compare as plain strings. The ordering restriction is
//! isomorphism-invariant, so equal keys still mean isomorphic graphs; it
//! just shrinks the search enough to stay cheap through ten vertices.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{emit_graph6, parse_graph6, Graph, GraphError, VertexSet};

/// Vertex cap for [`canonical_form`]: the ordering search is factorial in
/// the worst case, so it stays a small-graph tool.
pub const CANON_CAP: usize = 10;

/// Vertex cap for [`connected_graphs`]: 11117 graphs at `n = 8` is the
/// intended exhaustive range; beyond that, stream a corpus instead.
pub const ENUM_CAP: usize = 8;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("{what} on {n} vertices exceeds the {cap}-vertex cap")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("line {line}: {source}")]
    Format { line: usize, source: GraphError },
    #[error("line {line}: {source}")]
    Io {
        line: usize,
        source: std::io::Error,
    },
}

/// Isomorphism-class key: the graph6 encoding of the canonical relabeling.
/// Keys are totally ordered; equal keys mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub bytes: String,
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.bytes)
    }
}

/// Canonical key of `g`, for `n` up to [`CANON_CAP`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey, EnumerationError> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(EnumerationError::TooLarge {
            what: "canonical labeling",
            n,
            cap: CANON_CAP,
        });
    }
    if n == 0 {
        return Ok(CanonicalKey {
            bytes: emit_graph6(g),
        });
    }
    let mut degseq: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degseq.sort_unstable_by(|a, b| b.cmp(a));

    // depth-first search over degree-descending vertex orderings, pruning
    // any branch whose bit prefix already exceeds the best complete string
    struct Search<'a> {
        g: &'a Graph,
        degseq: Vec<usize>,
        perm: Vec<usize>,
        used: u64,
        cur: Vec<bool>,
        best: Option<Vec<bool>>,
    }
    impl Search<'_> {
        fn run(&mut self, k: usize) {
            let n = self.g.n();
            if k == n {
                // pruning let this through, so cur <= best (or best unset)
                self.best = Some(self.cur.clone());
                return;
            }
            for v in 0..n {
                if self.used & (1 << v) != 0 || self.g.degree(v) != self.degseq[k] {
                    continue;
                }
                let mark = self.cur.len();
                for i in 0..k {
                    self.cur.push(self.g.has_edge(self.perm[i], v));
                }
                // compare against the current best in full: best may have
                // been replaced deeper in a sibling branch
                let viable = self
                    .best
                    .as_ref()
                    .is_none_or(|b| self.cur.as_slice() <= &b[..self.cur.len()]);
                if viable {
                    self.perm[k] = v;
                    self.used |= 1 << v;
                    self.run(k + 1);
                    self.used &= !(1 << v);
                }
                self.cur.truncate(mark);
            }
        }
    }
    let mut s = Search {
        g,
        degseq,
        perm: vec![usize::MAX; n],
        used: 0,
        cur: Vec::with_capacity(n * (n - 1) / 2),
        best: None,
    };
    s.run(0);
    let bits = s.best.expect("at least one ordering exists");

    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    let canon = Graph::from_edges(n, &edges).expect("relabeled graph is valid");
    Ok(CanonicalKey {
        bytes: emit_graph6(&canon),
    })
}

/// Every connected graph on `n` vertices, one per isomorphism class, in
/// canonical labels, sorted by canonical key. `n` up to [`ENUM_CAP`].
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n > ENUM_CAP {
        return Err(EnumerationError::TooLarge {
            what: "connected graph enumeration",
            n,
            cap: ENUM_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let k1 = Graph::edgeless(1).expect("one vertex fits");
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    level.insert(canonical_form(&k1)?, k1);
    for k in 2..=n {
        let parents: Vec<Graph> = level.into_values().collect();
        let jobs: Vec<(usize, u64)> = (0..parents.len())
            .flat_map(|i| (1..1u64 << (k - 1)).map(move |s| (i, s)))
            .collect();
        level = jobs
            .par_iter()
            .map(|&(i, attach)| {
                let h = &parents[i];
                let mut edges: Vec<(usize, usize)> =
                    h.edges().iter().map(|e| (e.u, e.v)).collect();
                for v in VertexSet::from_bits(attach).iter() {
                    edges.push((v, k - 1));
                }
                let g = Graph::from_edges(k, &edges).expect("augmented graph is valid");
                let key = canonical_form(&g).expect("k <= ENUM_CAP <= CANON_CAP");
                let canon = parse_graph6(&key.bytes).expect("own key parses");
                (key, canon)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }
    Ok(level.into_values().collect())
}

/// Iterate graphs from a stream of graph6 lines (one per line, blank lines
/// skipped). Errors carry 1-based line numbers.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, EnumerationError>> {
    reader.lines().enumerate().filter_map(|(idx, line)| {
        let lineno = idx + 1;
        match line {
            Err(source) => Some(Err(EnumerationError::Io {
                line: lineno,
                source,
            })),
            Ok(s) => {
                let t = s.trim();
                if t.is_empty() {
                    None
                } else {
                    Some(parse_graph6(t).map_err(|source| EnumerationError::Format {
                        line: lineno,
                        source,
                    }))
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use std::io::Cursor;

    /// Rebuild `g` with vertex `v` renamed to `perm[v]`.
    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|e| (perm[e.u], perm[e.v]))
            .collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    // ---- canonical keys ----

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move |m: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % m as u64) as usize
        };
        let samples = [
            path(6),
            cycle(7),
            star(5),
            complete(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
                .unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]).unwrap(),
        ];
        for g in &samples {
            let key = canonical_form(g).unwrap();
            for _ in 0..20 {
                // random permutation by Fisher-Yates
                let mut perm: Vec<usize> = (0..g.n()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, next(i + 1));
                }
                assert_eq!(canonical_form(&relabel(g, &perm)).unwrap(), key);
            }
        }
    }

    #[test]
    fn canonical_key_separates_classes() {
        assert_ne!(
            canonical_form(&path(4)).unwrap(),
            canonical_form(&cycle(4)).unwrap()
        );
        assert_ne!(
            canonical_form(&star(3)).unwrap(),
            canonical_form(&path(4)).unwrap()
        );
    }

    #[test]
    fn canonical_key_is_stable() {
        // re-canonicalizing a canonical graph is the identity
        for g in connected_graphs(5).unwrap() {
            let key = canonical_form(&g).unwrap();
            assert_eq!(emit_graph6(&g), key.bytes);
        }
    }

    #[test]
    fn canonical_cap() {
        let g = Graph::edgeless(11).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(EnumerationError::TooLarge { n: 11, cap: 10, .. })
        ));
    }

    // ---- enumeration ----

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn enumerated_graphs_are_connected_and_sorted() {
        let gs = connected_graphs(5).unwrap();
        let mut keys = Vec::new();
        for g in &gs {
            assert_eq!(g.n(), 5);
            assert!(g.is_connected());
            keys.push(canonical_form(g).unwrap());
        }
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            connected_graphs(9),
            Err(EnumerationError::TooLarge { n: 9, cap: 8, .. })
        ));
        assert!(connected_graphs(0).unwrap().is_empty());
    }

    // ---- streaming ----

    #[test]
    fn stream_reads_lines_and_skips_blanks() {
        let input = "A_\n\nDQc\n";
        let graphs: Vec<Graph> = read_graph6_stream(Cursor::new(input))
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 2);
        assert_eq!(graphs[1].n(), 5);
    }

    #[test]
    fn stream_errors_carry_line_numbers() {
        let input = "A_\nnot graph6\n";
        let results: Vec<_> = read_graph6_stream(Cursor::new(input)).collect();
        assert!(results[0].is_ok());
        match &results[1] {
            Err(EnumerationError::Format { line, .. }) => assert_eq!(*line, 2),
            other => panic!("expected a format error, got {other:?}"),
        }
    }
}
