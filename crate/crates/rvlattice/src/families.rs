//! Constructive graph families realising prescribed pairs
//! `(regularity, v-number)`.
//!
//! Each builder takes `(n, r, v)`, checks the parameter inequalities (errors
//! name the violated bound), and returns a graph on `n` vertices whose
//! regularity is `r` and whose v-number is `v`. The vertex labelling of
//! every family is documented and fixed: tests freeze exact edge lists, so
//! changing a layout is a breaking change.
//!
//! * [`build_tree_witness`] / [`build_chordal_witness`] cover the
//!   inner-region pairs, split by whether `n - 2r >= r`
//!   ([`build_inner_witness`] picks the case);
//! * [`build_whisker_witness`] realises pairs inside whisker graphs (every
//!   base vertex carries a pendant);
//! * [`build_cameron_walker_witness`] realises pairs inside Cameron-Walker
//!   graphs, and [`build_cameron_walker`] assembles a general Cameron-Walker
//!   graph from classification data.

use thiserror::Error;

use crate::graph::Graph;
use crate::recognition::{is_star, is_star_triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A parameter inequality fails; the message names it.
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    /// A Cameron-Walker core edge joins two vertices of the same side.
    #[error("core edge ({0}, {1}) joins two vertices of the same side", edge.0, edge.1)]
    CoreNotBipartite { edge: (usize, usize) },
    /// The Cameron-Walker core must be connected.
    #[error("the core graph is not connected")]
    CoreDisconnected,
    /// Stars and star triangles are excluded from the Cameron-Walker class.
    #[error("the parameters produce a star or star triangle, which is not Cameron-Walker")]
    DegenerateStar,
}

fn params(msg: String) -> FamilyError {
    FamilyError::InvalidParams(msg)
}

/// A tree on `n` vertices with regularity `r` and v-number `v`, for the
/// plentiful-vertex case `n - 2r >= r` (where `v` ranges over `1..=r`).
///
/// Layout: `y_1..y_r -> 0..r-1`, `z_1..z_r -> r..2r-1`,
/// `x_1..x_v -> 2r..2r+v-1`, then the spare leaves `w_* -> 2r+v..n-1`.
/// Edges: the hub `x_1` joins every other `x_j`, the heads `y_1..y_{r-v+1}`,
/// and every spare leaf; each `x_j` (`j >= 2`) joins its own head
/// `y_{r-v+j}`; each `y_i` carries the pendant `z_i`. The `r` pendant edges
/// `y_i z_i` are the induced matching, and each one forces a distinct member
/// group for the v-number witness.
pub fn build_tree_witness(n: usize, r: usize, v: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(params(format!("r >= 1; got r = {r}")));
    }
    if v < 1 {
        return Err(params(format!("v >= 1; got v = {v}")));
    }
    if v > r {
        return Err(params(format!("v <= r; got r = {r}, v = {v}")));
    }
    if n < 3 * r {
        return Err(params(format!(
            "n - 2r >= r for the tree family; got n = {n}, r = {r}"
        )));
    }
    let y = |i: usize| i - 1; // i = 1..=r
    let z = |i: usize| r + i - 1;
    let x = |j: usize| 2 * r + j - 1; // j = 1..=v
    let mut edges = Vec::new();
    for j in 2..=v {
        edges.push((x(1), x(j)));
    }
    for i in 1..=(r - v + 1) {
        edges.push((x(1), y(i)));
    }
    for j in 2..=v {
        edges.push((x(j), y(r - v + j)));
    }
    for i in 1..=r {
        edges.push((y(i), z(i)));
    }
    for w in (2 * r + v)..n {
        edges.push((x(1), w));
    }
    Graph::from_edges(n, &edges).map_err(|e| params(e.to_string()))
}

/// A connected chordal graph on `n` vertices with regularity `r` and
/// v-number `v`, for the tight case `1 <= n - 2r < r`.
///
/// Write `q = n - 2r` and `v_max = r - ceil(r/q) + 1`; `v` ranges over
/// `1..=v_max`. The spine `x_1..x_q -> 0..q-1` distributes `r` pendant
/// triangles, `t_1 = ceil(r/q) + (v_max - v)` of them on `x_1` and the rest
/// greedily (`t_i = min(t_1, remaining)`). Triangle pairs
/// `(y_{i,j}, z_{i,j})` take labels `q, q+1, q+2, ..` interleaved, in `(i,
/// j)` order. Spine vertices with triangles form a clique; spine vertices
/// without any hang as pendants on `x_1`.
pub fn build_chordal_witness(n: usize, r: usize, v: usize) -> Result<Graph, FamilyError> {
    if r < 1 {
        return Err(params(format!("r >= 1; got r = {r}")));
    }
    if n < 2 * r + 1 {
        return Err(params(format!("n >= 2r + 1; got n = {n}, r = {r}")));
    }
    let q = n - 2 * r;
    if q >= r {
        return Err(params(format!(
            "n - 2r < r for the chordal family (use the tree family otherwise); got n = {n}, r = {r}"
        )));
    }
    if v < 1 {
        return Err(params(format!("v >= 1; got v = {v}")));
    }
    let vmax = r - r.div_ceil(q) + 1;
    if v > vmax {
        return Err(params(format!(
            "v <= r - ceil(r / (n - 2r)) + 1 = {vmax}; got v = {v}"
        )));
    }
    // triangle counts per spine vertex
    let t1 = r.div_ceil(q) + (vmax - v);
    let mut t = vec![0usize; q];
    t[0] = t1;
    let mut rem = r - t1;
    for slot in t.iter_mut().skip(1) {
        *slot = t1.min(rem);
        rem -= *slot;
    }
    debug_assert_eq!(rem, 0, "t_1 >= ceil(r/q) makes the greedy fill complete");

    let mut edges = Vec::new();
    let mut next = q; // first free label after the spine
    for (i, &ti) in t.iter().enumerate() {
        for _ in 0..ti {
            let (yv, zv) = (next, next + 1);
            next += 2;
            edges.push((i, yv));
            edges.push((i, zv));
            edges.push((yv, zv));
        }
    }
    debug_assert_eq!(next, n);
    let carriers: Vec<usize> = (0..q).filter(|&i| t[i] > 0).collect();
    for (a, &i) in carriers.iter().enumerate() {
        for &j in &carriers[a + 1..] {
            edges.push((i, j));
        }
    }
    for i in 0..q {
        if t[i] == 0 {
            edges.push((0, i));
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| params(e.to_string()))
}

/// Realise an inner-region pair `(r, v)` on `n` vertices, choosing
/// [`build_tree_witness`] when `n - 2r >= r` and [`build_chordal_witness`]
/// otherwise. Together the two cases cover the whole inner formula region.
pub fn build_inner_witness(n: usize, r: usize, v: usize) -> Result<Graph, FamilyError> {
    if r >= 1 && n >= 3 * r {
        build_tree_witness(n, r, v)
    } else {
        build_chordal_witness(n, r, v)
    }
}

/// The whisker graph `W(base)`: one new pendant vertex per base vertex.
/// Base vertex `i` keeps its label; its pendant is `base.n() + i`.
pub fn build_whisker(base: &Graph) -> Result<Graph, FamilyError> {
    let m = base.n();
    if m == 0 {
        return Err(params("the whisker base needs at least one vertex".into()));
    }
    if 2 * m > crate::graph::MAX_VERTICES {
        return Err(params(format!(
            "whiskering doubles the order: 2 * {m} exceeds the {}-vertex cap",
            crate::graph::MAX_VERTICES
        )));
    }
    let mut edges: Vec<(usize, usize)> = base.edges().iter().map(|e| (e.u, e.v)).collect();
    for v in 0..m {
        edges.push((v, m + v));
    }
    Ok(Graph::from_edges(2 * m, &edges).expect("cap checked above"))
}

/// A whisker graph on `n = 2m` vertices with regularity `r` and v-number
/// `v`, for `1 <= r <= m - 1` and `1 <= v <= r - ceil(r/(m-r)) + 1`.
///
/// The base has `c = m - r` clique vertices `x_1..x_c -> 0..c-1` and `r`
/// independent vertices `y_{i,j} -> c..m-1` (in `(i, j)` order), where `x_1`
/// carries `t_1 = ceil(r/c) + (v_max - v)` of them and the rest are filled
/// greedily. Clique vertices left without any `y` get an edge to `y_{1,1}`
/// (label `c`) so the base independence number stays exactly `r`. The base
/// is then whiskered: pendant of base vertex `b` is `m + b`.
pub fn build_whisker_witness(n: usize, r: usize, v: usize) -> Result<Graph, FamilyError> {
    if n % 2 != 0 || n < 4 {
        return Err(params(format!(
            "n even and >= 4 (a whisker graph doubles its base); got n = {n}"
        )));
    }
    let m = n / 2;
    if r < 1 {
        return Err(params(format!("r >= 1; got r = {r}")));
    }
    if r > m - 1 {
        return Err(params(format!("r <= n/2 - 1; got n = {n}, r = {r}")));
    }
    let c = m - r;
    let vmax = r - r.div_ceil(c) + 1;
    if v < 1 {
        return Err(params(format!("v >= 1; got v = {v}")));
    }
    if v > vmax {
        return Err(params(format!(
            "v <= r - ceil(r / (n/2 - r)) + 1 = {vmax}; got v = {v}"
        )));
    }
    let t1 = r.div_ceil(c) + (vmax - v);
    let mut t = vec![0usize; c];
    t[0] = t1;
    let mut rem = r - t1;
    for slot in t.iter_mut().skip(1) {
        *slot = t1.min(rem);
        rem -= *slot;
    }
    debug_assert_eq!(rem, 0);

    let mut edges = Vec::new();
    for a in 0..c {
        for b in a + 1..c {
            edges.push((a, b));
        }
    }
    let mut next = c;
    for (i, &ti) in t.iter().enumerate() {
        for _ in 0..ti {
            edges.push((i, next));
            next += 1;
        }
        if ti == 0 {
            edges.push((c, i)); // tie the bare clique vertex to y_{1,1}
        }
    }
    debug_assert_eq!(next, m);
    let base = Graph::from_edges(m, &edges).map_err(|e| params(e.to_string()))?;
    debug_assert!(base.is_connected());
    build_whisker(&base)
}

/// Assemble a Cameron-Walker graph from its classification data: a
/// connected bipartite core with `m = s.len()` vertices `u_1..u_m ->
/// 0..m-1` on one side and `p = t.len()` vertices `w_1..w_p -> m..m+p-1` on
/// the other, `core_edges` given in those combined labels. Each `u_i` then
/// receives `s[i] >= 1` pendant leaf edges (labels `m+p, m+p+1, ..` in `i`
/// order) and each `w_j` receives `t[j] >= 0` pendant triangles (label
/// pairs appended afterwards, in `j` order).
pub fn build_cameron_walker(
    core_edges: &[(usize, usize)],
    s: &[usize],
    t: &[usize],
) -> Result<Graph, FamilyError> {
    let m = s.len();
    let p = t.len();
    if m == 0 {
        return Err(params("at least one whiskered core vertex (m >= 1)".into()));
    }
    if let Some(i) = s.iter().position(|&si| si == 0) {
        return Err(params(format!(
            "every u-side vertex carries a whisker: s[{i}] >= 1"
        )));
    }
    for &(a, b) in core_edges {
        if a >= m + p || b >= m + p {
            return Err(params(format!(
                "core edge ({a}, {b}) out of range for m + p = {} core vertices",
                m + p
            )));
        }
        if (a < m) == (b < m) {
            return Err(FamilyError::CoreNotBipartite { edge: (a, b) });
        }
    }
    let n = m + p + s.iter().sum::<usize>() + 2 * t.iter().sum::<usize>();
    if n > crate::graph::MAX_VERTICES {
        return Err(params(format!(
            "{n} total vertices exceeds the {}-vertex cap",
            crate::graph::MAX_VERTICES
        )));
    }
    let core = Graph::from_edges(m + p, core_edges).expect("endpoints validated above");
    if !core.is_connected() {
        return Err(FamilyError::CoreDisconnected);
    }
    let mut edges = core_edges.to_vec();
    let mut next = m + p;
    for (i, &si) in s.iter().enumerate() {
        for _ in 0..si {
            edges.push((i, next));
            next += 1;
        }
    }
    for (j, &tj) in t.iter().enumerate() {
        for _ in 0..tj {
            edges.push((m + j, next));
            edges.push((m + j, next + 1));
            edges.push((next, next + 1));
            next += 2;
        }
    }
    debug_assert_eq!(next, n);
    let g = Graph::from_edges(n, &edges).expect("all labels below n");
    if is_star(&g) || is_star_triangle(&g) {
        return Err(FamilyError::DegenerateStar);
    }
    Ok(g)
}

/// A Cameron-Walker graph on `n` vertices with regularity `r` and v-number
/// `v`, for `r >= 2`, `1 <= v <= min(r - 1, n - 2r)`.
///
/// Layout: core side `w_1..w_{n-2r} -> 0..n-2r-1`, whiskered side
/// `u_1..u_r -> n-2r..n-r-1`, pendant leaves `x_1..x_r -> n-r..n-1`
/// (`x_i` on `u_i`). Core edges: `w_1` joins `u_1..u_{r-v+1}`; `w_i`
/// (`i = 2..=v`) joins `u_{r-v+i}`; every `w_i` (`i >= 2`) also joins
/// `u_{r-v+1}`, which keeps the core connected and pins the v-number.
pub fn build_cameron_walker_witness(n: usize, r: usize, v: usize) -> Result<Graph, FamilyError> {
    if r < 2 {
        return Err(params(format!("r >= 2; got r = {r}")));
    }
    if v < 1 {
        return Err(params(format!("v >= 1; got v = {v}")));
    }
    if v > r - 1 {
        return Err(params(format!("v <= r - 1; got r = {r}, v = {v}")));
    }
    if 2 * r + v > n {
        return Err(params(format!(
            "v <= n - 2r; got n = {n}, r = {r}, v = {v}"
        )));
    }
    let q = n - 2 * r;
    let w = |i: usize| i - 1; // i = 1..=q
    let u = |i: usize| q + i - 1; // i = 1..=r
    let x = |i: usize| q + r + i - 1;
    let mut edges = Vec::new();
    for i in 1..=(r - v + 1) {
        edges.push((w(1), u(i)));
    }
    for i in 2..=v {
        edges.push((w(i), u(r - v + i)));
    }
    for i in 2..=q {
        edges.push((w(i), u(r - v + 1)));
    }
    for i in 1..=r {
        edges.push((u(i), x(i)));
    }
    Graph::from_edges(n, &edges).map_err(|e| params(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::canonical_form;
    use crate::graph::{cycle, path, star, Graph};
    use crate::homology::regularity;
    use crate::invariants::v_number;
    use crate::recognition::{
        is_cameron_walker, is_chordal, is_forest, whisker_base, whisker_decomposition,
    };

    fn check_rv(g: &Graph, r: usize, v: usize) {
        assert_eq!(regularity(g).unwrap(), r, "regularity of {g:?}");
        assert_eq!(v_number(g).unwrap().size, v, "v-number of {g:?}");
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        canonical_form(a).unwrap() == canonical_form(b).unwrap()
    }

    // ---- tree family ----

    #[test]
    fn tree_witness_smallest_is_p3() {
        let g = build_tree_witness(3, 1, 1).unwrap();
        assert!(isomorphic(&g, &path(3)));
        check_rv(&g, 1, 1);
    }

    #[test]
    fn tree_witness_layout_is_frozen() {
        // the (7, 2, 2) tree pinned in the invariant tests
        let g = build_tree_witness(7, 2, 2).unwrap();
        let expected =
            Graph::from_edges(7, &[(4, 5), (4, 0), (5, 1), (0, 2), (1, 3), (4, 6)]).unwrap();
        assert_eq!(g, expected);
        assert!(is_forest(&g));
        check_rv(&g, 2, 2);
    }

    #[test]
    fn tree_witness_spider_with_spares() {
        let g = build_tree_witness(9, 3, 1).unwrap();
        assert!(is_forest(&g) && g.is_connected());
        check_rv(&g, 3, 1);
        // hub x_1 = 6 carries heads 0,1,2 and the spare leaves 7,8
        assert_eq!(g.degree(6), 5);
    }

    #[test]
    fn tree_witness_full_v_range() {
        for v in 1..=3 {
            let g = build_tree_witness(9, 3, v).unwrap();
            assert!(is_forest(&g) && g.is_connected());
            check_rv(&g, 3, v);
        }
    }

    #[test]
    fn tree_witness_rejects_out_of_range() {
        match build_tree_witness(7, 3, 1) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("n - 2r >= r")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_tree_witness(9, 3, 4) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("v <= r")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        assert!(build_tree_witness(9, 0, 1).is_err());
        assert!(build_tree_witness(9, 3, 0).is_err());
    }

    // ---- chordal family ----

    #[test]
    fn chordal_witness_layout_is_frozen() {
        // (8, 3, 2): q = 2, triangles split 2 + 1, spine clique {0, 1}
        let g = build_chordal_witness(8, 3, 2).unwrap();
        let expected = Graph::from_edges(
            8,
            &[
                (0, 2),
                (0, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (4, 5),
                (1, 6),
                (1, 7),
                (6, 7),
                (0, 1),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert!(is_chordal(&g) && g.is_connected());
        check_rv(&g, 3, 2);
    }

    #[test]
    fn chordal_witness_one_spine_vertex() {
        // q = 1: all triangles share the single spine vertex
        let g = build_chordal_witness(9, 4, 1).unwrap();
        assert!(is_chordal(&g) && g.is_connected());
        check_rv(&g, 4, 1);
    }

    #[test]
    fn chordal_witness_full_v_range() {
        // n = 10, r = 4, q = 2: v_max = 4 - 2 + 1 = 3
        for v in 1..=3 {
            let g = build_chordal_witness(10, 4, v).unwrap();
            assert!(is_chordal(&g) && g.is_connected());
            check_rv(&g, 4, v);
        }
    }

    #[test]
    fn chordal_witness_rejects_out_of_range() {
        match build_chordal_witness(9, 3, 1) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("n - 2r < r")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_chordal_witness(8, 3, 3) {
            Err(FamilyError::InvalidParams(msg)) => {
                assert!(msg.contains("v <= r - ceil(r / (n - 2r)) + 1"));
            }
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        assert!(build_chordal_witness(6, 3, 1).is_err()); // q = 0
    }

    #[test]
    fn inner_witness_picks_the_case() {
        assert!(is_forest(&build_inner_witness(9, 3, 1).unwrap()));
        let tight = build_inner_witness(8, 3, 1).unwrap();
        assert!(!is_forest(&tight) && is_chordal(&tight));
        check_rv(&tight, 3, 1);
    }

    // ---- whisker family ----

    #[test]
    fn whisker_of_cycle_round_trips() {
        let g = build_whisker(&cycle(5)).unwrap();
        assert_eq!(g.n(), 10);
        let d = whisker_decomposition(&g).unwrap();
        assert_eq!(whisker_base(&g, &d), cycle(5));
        assert_eq!(d.pendant_map, (0..5).map(|b| (b, b + 5)).collect::<Vec<_>>());
    }

    #[test]
    fn whisker_cap() {
        match build_whisker(&Graph::edgeless(32).unwrap()) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("2 * 32")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
    }

    #[test]
    fn whisker_witness_known_shapes() {
        // (4, 1, 1) is W(K2) = P4
        let g = build_whisker_witness(4, 1, 1).unwrap();
        assert!(isomorphic(&g, &path(4)));
        check_rv(&g, 1, 1);

        // (8, 2, 2) is W(P4)
        let g = build_whisker_witness(8, 2, 2).unwrap();
        assert!(isomorphic(&g, &build_whisker(&path(4)).unwrap()));
        check_rv(&g, 2, 2);

        // (8, 3, 1) is W(K_{1,3})
        let g = build_whisker_witness(8, 3, 1).unwrap();
        assert!(isomorphic(&g, &build_whisker(&star(3)).unwrap()));
        check_rv(&g, 3, 1);
    }

    #[test]
    fn whisker_witness_is_a_whisker_graph() {
        for (n, r, v) in [(10, 2, 2), (10, 3, 2), (12, 4, 3), (12, 5, 1)] {
            let g = build_whisker_witness(n, r, v).unwrap();
            assert!(g.is_connected());
            let d = whisker_decomposition(&g).expect("must be a whisker graph");
            assert_eq!(d.base_vertices.len(), n / 2);
            check_rv(&g, r, v);
        }
    }

    #[test]
    fn whisker_witness_rejects_out_of_range() {
        match build_whisker_witness(7, 2, 1) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("n even")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_whisker_witness(8, 4, 1) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("r <= n/2 - 1")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_whisker_witness(8, 3, 2) {
            Err(FamilyError::InvalidParams(msg)) => {
                assert!(msg.contains("v <= r - ceil(r / (n/2 - r)) + 1"));
            }
            other => panic!("expected InvalidParams, got {other:?}"),
        }
    }

    // ---- Cameron-Walker ----

    #[test]
    fn cameron_walker_from_classification_data() {
        // star core: three whiskered u's around one w; equals the spider
        let g = build_cameron_walker(&[(0, 3), (1, 3), (2, 3)], &[1, 1, 1], &[0]).unwrap();
        assert!(is_cameron_walker(&g));
        let spider =
            Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(isomorphic(&g, &spider));

        // one pendant triangle: the smallest Cameron-Walker graph
        let g = build_cameron_walker(&[(0, 1)], &[1], &[1]).unwrap();
        assert!(is_cameron_walker(&g));
        assert_eq!(g.n(), 5);
        check_rv(&g, 2, 1);
    }

    #[test]
    fn cameron_walker_rejects_bad_cores() {
        assert!(matches!(
            build_cameron_walker(&[(0, 1)], &[1, 1], &[]),
            Err(FamilyError::CoreNotBipartite { edge: (0, 1) })
        ));
        assert!(matches!(
            build_cameron_walker(&[(0, 2), (1, 3)], &[1, 1], &[0, 0]),
            Err(FamilyError::CoreDisconnected)
        ));
        assert!(matches!(
            build_cameron_walker(&[], &[3], &[]),
            Err(FamilyError::DegenerateStar)
        ));
        assert!(matches!(
            build_cameron_walker(&[(0, 1)], &[2], &[0]),
            Err(FamilyError::DegenerateStar)
        ));
        assert!(matches!(
            build_cameron_walker(&[(0, 5)], &[1], &[0]),
            Err(FamilyError::InvalidParams(_))
        ));
        assert!(matches!(
            build_cameron_walker(&[(0, 1)], &[1, 0], &[]),
            Err(FamilyError::InvalidParams(_))
        ));
    }

    #[test]
    fn cw_witness_known_shapes() {
        // (5, 2, 1) is the path P5
        let g = build_cameron_walker_witness(5, 2, 1).unwrap();
        assert!(isomorphic(&g, &path(5)));
        check_rv(&g, 2, 1);

        // (7, 3, 1) is the spider with three length-2 legs
        let g = build_cameron_walker_witness(7, 3, 1).unwrap();
        let via_classification =
            build_cameron_walker(&[(0, 3), (1, 3), (2, 3)], &[1, 1, 1], &[0]).unwrap();
        assert!(isomorphic(&g, &via_classification));
        check_rv(&g, 3, 1);
    }

    #[test]
    fn cw_witness_layout_is_frozen() {
        // (9, 3, 2): w's 0..2, u's 3..5, leaves 6..8
        let g = build_cameron_walker_witness(9, 3, 2).unwrap();
        let expected = Graph::from_edges(
            9,
            &[
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 4),
                (2, 4),
                (3, 6),
                (4, 7),
                (5, 8),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert!(is_cameron_walker(&g));
        check_rv(&g, 3, 2);
    }

    #[test]
    fn cw_witness_is_cameron_walker_across_range() {
        for (n, r, v) in [(6, 2, 1), (8, 3, 2), (10, 4, 2), (11, 4, 3), (12, 5, 2)] {
            let g = build_cameron_walker_witness(n, r, v).unwrap();
            assert!(is_cameron_walker(&g), "({n}, {r}, {v}) -> {g:?}");
            check_rv(&g, r, v);
        }
    }

    #[test]
    fn cw_witness_rejects_out_of_range() {
        match build_cameron_walker_witness(7, 1, 1) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("r >= 2")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_cameron_walker_witness(9, 3, 3) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("v <= r - 1")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
        match build_cameron_walker_witness(9, 4, 2) {
            Err(FamilyError::InvalidParams(msg)) => assert!(msg.contains("v <= n - 2r")),
            other => panic!("expected InvalidParams, got {other:?}"),
        }
    }
}
