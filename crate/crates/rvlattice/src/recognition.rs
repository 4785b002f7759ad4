//! Recognition of the graph classes with proven regularity formulas:
//! chordal, bipartite, forest, star, star triangle, whisker graphs, and
//! Cameron-Walker graphs, together with the structural decompositions that
//! the formulas read their parameters from.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::{induced_matching_number, matching_number};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    /// The graph fails the named structural requirement of the
    /// Cameron-Walker shape.
    #[error("not a Cameron-Walker graph: {0}")]
    NotCameronWalker(String),
}

/// Chordality via greedy simplicial elimination: a graph is chordal iff
/// repeatedly deleting any simplicial vertex (one whose neighbourhood is a
/// clique) empties it.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.vertices();
    'elim: while !alive.is_empty() {
        for v in alive.iter() {
            let nb = g.neighbors(v).intersection(alive);
            let simplicial = nb
                .iter()
                .all(|u| nb.without(u).is_subset_of(g.neighbors(u)));
            if simplicial {
                alive = alive.without(v);
                continue 'elim;
            }
        }
        return false;
    }
    true
}

/// Bipartiteness via 2-colouring, component by component.
pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// A 2-colouring as (side0, side1) if one exists. Vertex 0 of each
/// component goes to side0.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut colour = vec![None::<bool>; g.n()];
    for start in 0..g.n() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let cv = colour[v].expect("queued vertices are coloured");
            for u in g.neighbors(v).iter() {
                match colour[u] {
                    None => {
                        colour[u] = Some(!cv);
                        queue.push(u);
                    }
                    Some(cu) if cu == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let side1: VertexSet = (0..g.n()).filter(|&v| colour[v] == Some(true)).collect();
    Some((g.vertices().minus(side1), side1))
}

/// A forest: no cycles, i.e. every component spans one less edge than
/// vertices.
pub fn is_forest(g: &Graph) -> bool {
    g.components().iter().all(|&c| {
        let (sub, _) = g.induced_subgraph(c);
        sub.edge_count() + 1 == sub.n()
    })
}

/// A star `K_{1,m}` with `m >= 1`: connected, and all vertices except at
/// most one have degree 1. Includes `K_2`.
pub fn is_star(g: &Graph) -> bool {
    g.n() >= 2
        && g.is_connected()
        && (0..g.n()).filter(|&v| g.degree(v) != 1).count() <= 1
}

/// A star triangle: `k >= 1` triangles glued at one common vertex (so `K_3`
/// itself counts). Equivalently: connected, odd order at least 3, one vertex
/// adjacent to everything, all others of degree exactly 2.
pub fn is_star_triangle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || n % 2 == 0 || !g.is_connected() {
        return false;
    }
    (0..n).any(|c| {
        g.degree(c) == n - 1 && (0..n).all(|v| v == c || g.degree(v) == 2)
    })
}

/// Cameron-Walker graphs: connected graphs with at least one edge whose
/// induced matching number equals the matching number, other than stars and
/// star triangles. These are exactly the graphs whose regularity is read off
/// from [`cw_decomposition`], and the two recognisers must agree.
pub fn is_cameron_walker(g: &Graph) -> bool {
    g.edge_count() >= 1
        && g.is_connected()
        && !is_star(g)
        && !is_star_triangle(g)
        && induced_matching_number(g) == matching_number(g)
}

/// The structure of a Cameron-Walker graph: a connected bipartite core on
/// parts `{u_1..u_m}` (each carrying `s_i >= 1` pendant whiskers) and
/// `{w_1..w_p}` (each carrying `t_j >= 0` pendant triangles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CWDecomposition {
    pub m: usize,
    pub p: usize,
    /// Whisker counts per `u_i`; all entries >= 1.
    pub s: Vec<usize>,
    /// Pendant triangle counts per `w_j`.
    pub t: Vec<usize>,
    /// Core edges as `(i, j)`: `u_i` adjacent to `w_j`, 0-based.
    pub core_edges: Vec<(usize, usize)>,
}

/// Decompose a Cameron-Walker graph into its bipartite core, whiskers, and
/// pendant triangles. Structural second opinion to [`is_cameron_walker`]:
/// this succeeds exactly when that predicate holds (a classification fact
/// the test suite leans on).
pub fn cw_decomposition(g: &Graph) -> Result<CWDecomposition, RecognitionError> {
    let fail = |what: &str| Err(RecognitionError::NotCameronWalker(what.to_string()));
    if g.edge_count() == 0 {
        return fail("no edges");
    }
    if !g.is_connected() {
        return fail("not connected");
    }
    if is_star(g) {
        return fail("a star");
    }
    if is_star_triangle(g) {
        return fail("a star triangle");
    }

    let n = g.n();
    // Pendant triangles: an edge {a, b} with deg a = deg b = 2 and a common
    // third vertex. The third vertex is unique because deg a = 2.
    let mut triangle_outer = VertexSet::EMPTY;
    let mut triangles_at = vec![0usize; n];
    for a in 0..n {
        if g.degree(a) != 2 || triangle_outer.contains(a) {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(a).iter().collect();
        let (x, y) = (nb[0], nb[1]);
        if !g.has_edge(x, y) {
            continue;
        }
        // {a, x, y} is a triangle; it hangs pendant iff one of x, y also has
        // degree 2 (that one is the partner outer vertex).
        let (b, c) = if g.degree(x) == 2 {
            (x, y)
        } else if g.degree(y) == 2 {
            (y, x)
        } else {
            continue;
        };
        triangle_outer = triangle_outer.with(a).with(b);
        triangles_at[c] += 1;
    }

    // Whisker pendants: degree-1 vertices. Their support vertices make up
    // the u side of the core.
    let mut pendant = VertexSet::EMPTY;
    let mut whiskers_at = vec![0usize; n];
    for z in 0..n {
        if g.degree(z) == 1 {
            pendant = pendant.with(z);
            whiskers_at[g.neighbors(z).min_vertex().expect("degree 1")] += 1;
        }
    }

    let core = g.vertices().minus(pendant).minus(triangle_outer);
    let u_side: VertexSet = core.iter().filter(|&v| whiskers_at[v] > 0).collect();
    let w_side = core.minus(u_side);
    if u_side.is_empty() {
        return fail("no whisker-bearing core vertex");
    }
    if w_side.is_empty() {
        return fail("core has no triangle side");
    }
    for v in u_side.iter() {
        if triangles_at[v] > 0 {
            return fail("a core vertex carries both a whisker and a pendant triangle");
        }
    }
    for v in w_side.iter() {
        debug_assert_eq!(whiskers_at[v], 0, "w side is the whiskerless core");
    }
    // Core edges must all cross sides, and the core must be connected.
    for v in core.iter() {
        let inside = g.neighbors(v).intersection(core);
        let same_side = if u_side.contains(v) { u_side } else { w_side };
        if !inside.intersection(same_side).is_empty() {
            return fail("core is not bipartite between the whisker and triangle sides");
        }
    }
    let (core_graph, core_map) = g.induced_subgraph(core);
    if !core_graph.is_connected() {
        return fail("core is not connected");
    }

    let u_list: Vec<usize> = u_side.iter().collect();
    let w_list: Vec<usize> = w_side.iter().collect();
    let u_index = |v: usize| u_list.iter().position(|&x| x == v).expect("u member");
    let w_index = |v: usize| w_list.iter().position(|&x| x == v).expect("w member");
    let mut core_edges = Vec::new();
    for e in core_graph.edges() {
        let (a, b) = (core_map[e.u], core_map[e.v]);
        if u_side.contains(a) {
            core_edges.push((u_index(a), w_index(b)));
        } else {
            core_edges.push((u_index(b), w_index(a)));
        }
    }
    core_edges.sort_unstable();

    let s: Vec<usize> = u_list.iter().map(|&v| whiskers_at[v]).collect();
    let t: Vec<usize> = w_list.iter().map(|&v| triangles_at[v]).collect();
    debug_assert_eq!(
        u_list.len() + w_list.len() + s.iter().sum::<usize>() + 2 * t.iter().sum::<usize>(),
        n,
        "decomposition must account for every vertex"
    );
    Ok(CWDecomposition {
        m: u_list.len(),
        p: w_list.len(),
        s,
        t,
        core_edges,
    })
}

/// A whisker structure: base vertices plus one pendant per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiskerDecomposition {
    pub base_vertices: VertexSet,
    /// Pairs `(base, pendant)`, sorted by base vertex.
    pub pendant_map: Vec<(usize, usize)>,
}

/// Recognise `G` as a whisker graph `W(H)`: a perfect split of the vertices
/// into base and pendants with exactly one degree-1 pendant per base vertex.
///
/// The assignment is forced everywhere except in `K_2` components, where the
/// lower label becomes the base vertex: a degree-1 vertex adjacent to a
/// degree-1 vertex can only occur in a `K_2` component, and a base vertex
/// can never own two degree-1 neighbours (its second one would itself need a
/// pendant, which is taken). So no backtracking is needed; the checks below
/// are exhaustive.
pub fn whisker_decomposition(g: &Graph) -> Option<WhiskerDecomposition> {
    if g.n() % 2 != 0 {
        return None;
    }
    let mut base = VertexSet::EMPTY;
    let mut map = Vec::with_capacity(g.n() / 2);
    for comp in g.components() {
        if comp.len() == 2 {
            let mut it = comp.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if !g.has_edge(a, b) {
                return None; // two isolated vertices
            }
            base = base.with(a);
            map.push((a, b));
            continue;
        }
        // in a component that is not K2, every degree-1 vertex is a pendant
        // and every other vertex must own exactly one of them
        for v in comp.iter() {
            if g.degree(v) == 1 {
                continue;
            }
            let pendants: Vec<usize> =
                g.neighbors(v).iter().filter(|&u| g.degree(u) == 1).collect();
            if pendants.len() != 1 {
                return None;
            }
            base = base.with(v);
            map.push((v, pendants[0]));
        }
        if base.intersection(comp).len() * 2 != comp.len() {
            return None; // some degree-1 vertex is not anyone's pendant
        }
    }
    map.sort_unstable();
    Some(WhiskerDecomposition {
        base_vertices: base,
        pendant_map: map,
    })
}

/// The base graph of a whisker decomposition, labels compacted in base
/// order.
pub fn whisker_base(g: &Graph, d: &WhiskerDecomposition) -> Graph {
    g.induced_subgraph(d.base_vertices).0
}
