//! Generators for the named graph families, each with a canonical plane
//! embedding where one exists.

use alloc::vec;
use alloc::vec::Vec;

use crate::cycles;
use crate::embed::{dual, planar_embed, Dart, PlaneEmbedding};
use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSet, Graph, VertexId};

/// The nested-ring graph on `k * l` vertices: `l` concentric `k`-cycles,
/// consecutive rings joined by vertical and diagonal edges so that all but
/// the innermost and outermost faces are triangles.
///
/// Ring `i` occupies vertices `i*k .. i*k+k`. Edge ids: ring edges first
/// (`i*k + j` joins `ik+j` to `ik+j+1`), then per ring-pair `i` a block of
/// `k` verticals followed by `k` diagonals.
///
/// For `l = 2` this is the antiprism on `2k` vertices.
pub fn theorem2_graph(k: usize, l: usize) -> Result<(Graph, PlaneEmbedding)> {
    if k < 3 || l < 2 {
        return Err(Error::ParameterRange("nested-ring graph needs k >= 3, l >= 2"));
    }
    let n = k * l;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(k * (3 * l - 2));
    for i in 0..l {
        for j in 0..k {
            edges.push((i * k + j, i * k + (j + 1) % k));
        }
    }
    for i in 0..l - 1 {
        for j in 0..k {
            edges.push((i * k + j, (i + 1) * k + j));
        }
        for j in 0..k {
            edges.push((i * k + j, (i + 1) * k + (j + 1) % k));
        }
    }
    let graph = Graph::new(n, edges)?;

    let ring_edge = |i: usize, j: usize| -> EdgeId { i * k + (j % k) };
    let vert_edge = |i: usize, j: usize| -> EdgeId { l * k + i * 2 * k + (j % k) };
    let diag_edge = |i: usize, j: usize| -> EdgeId { l * k + i * 2 * k + k + (j % k) };

    // Rotations for the nested drawing, ring 0 outermost, counterclockwise.
    let mut rotation: Vec<Vec<Dart>> = Vec::with_capacity(n);
    for i in 0..l {
        for j in 0..k {
            let mut rot: Vec<Dart> = Vec::with_capacity(6);
            // towards ring-next (ccw tangent)
            rot.push((ring_edge(i, j), 0));
            if i + 1 < l {
                rot.push((diag_edge(i, j), 0));
                rot.push((vert_edge(i, j), 0));
            }
            // towards ring-prev (cw tangent)
            rot.push((ring_edge(i, (j + k - 1) % k), 1));
            if i > 0 {
                rot.push((diag_edge(i - 1, (j + k - 1) % k), 1));
                rot.push((vert_edge(i - 1, j), 1));
            }
            rotation.push(rot);
        }
    }
    let embedding = PlaneEmbedding::new(graph.clone(), rotation)?;
    debug_assert_eq!(embedding.face_count(), 2 * k * (l - 1) + 2);
    Ok((graph, embedding))
}

/// Edge sets of the nested-ring graph, used by the forced-cover machinery.
pub struct RingEdges {
    pub k: usize,
    pub l: usize,
}

impl RingEdges {
    pub fn ring(&self, i: usize) -> EdgeSet {
        (0..self.k).map(|j| i * self.k + j).collect()
    }

    pub fn vertical(&self, i: usize, j: usize) -> EdgeId {
        self.l * self.k + i * 2 * self.k + (j % self.k)
    }

    pub fn diagonal(&self, i: usize, j: usize) -> EdgeId {
        self.l * self.k + i * 2 * self.k + self.k + (j % self.k)
    }

    pub fn ring_edge(&self, i: usize, j: usize) -> EdgeId {
        i * self.k + (j % self.k)
    }

    /// Triangle with two vertices on ring `i`: its ring edge `(i, j)`, the
    /// diagonal `(i, j)` and the vertical `(i, j+1)`.
    pub fn triangle_lower(&self, g: &Graph, i: usize, j: usize) -> Cycle {
        let ids = EdgeSet::new(vec![
            self.ring_edge(i, j),
            self.diagonal(i, j),
            self.vertical(i, j + 1),
        ]);
        Cycle::new(g, ids).expect("lower band triangle")
    }

    /// Triangle with two vertices on ring `i+1`: vertical `(i, j)`, ring
    /// edge `(i+1, j)` and diagonal `(i, j)`.
    pub fn triangle_upper(&self, g: &Graph, i: usize, j: usize) -> Cycle {
        let ids = EdgeSet::new(vec![
            self.vertical(i, j),
            self.ring_edge(i + 1, j),
            self.diagonal(i, j),
        ]);
        Cycle::new(g, ids).expect("upper band triangle")
    }
}

/// An antiprism (the square of an even cycle) with its canonical embedding
/// and labeled structure: outer ring `E0`, inner ring `E1`, and the cross
/// edges `E2`, which form an edge cut.
pub struct AntiprismLayout {
    k: usize,
    graph: Graph,
    embedding: PlaneEmbedding,
    triangles: Vec<Cycle>,
}

impl AntiprismLayout {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn embedding(&self) -> &PlaneEmbedding {
        &self.embedding
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn into_embedding(self) -> PlaneEmbedding {
        self.embedding
    }

    pub fn outer_vertices(&self) -> Vec<VertexId> {
        (0..self.k).collect()
    }

    pub fn inner_vertices(&self) -> Vec<VertexId> {
        (self.k..2 * self.k).collect()
    }

    /// Outer ring edges.
    pub fn e0(&self) -> EdgeSet {
        (0..self.k).collect()
    }

    /// Inner ring edges.
    pub fn e1(&self) -> EdgeSet {
        (self.k..2 * self.k).collect()
    }

    /// Cross edges; an edge cut, so every cycle meets it evenly.
    pub fn e2(&self) -> EdgeSet {
        (2 * self.k..4 * self.k).collect()
    }

    pub fn outer_ring(&self) -> Cycle {
        Cycle::new(&self.graph, self.e0()).unwrap()
    }

    pub fn inner_ring(&self) -> Cycle {
        Cycle::new(&self.graph, self.e1()).unwrap()
    }

    /// The `2k` triangles in cyclic order around the band; the first shares
    /// an edge with the inner ring, and inner/outer types alternate.
    pub fn triangles(&self) -> &[Cycle] {
        &self.triangles
    }
}

/// Builds the antiprism on `2k` vertices, `k >= 3`.
pub fn antiprism(k: usize) -> AntiprismLayout {
    let (graph, embedding) = theorem2_graph(k, 2).expect("antiprism needs k >= 3");
    let rings = RingEdges { k, l: 2 };
    // Cyclic triangle order: alternate upper (inner-edged) and lower
    // (outer-edged) triangles by walking shared cross edges. The upper
    // triangle at j shares its vertical (0, j) with the lower at j-1 and its
    // diagonal (0, j) with the lower at j.
    let mut triangles = Vec::with_capacity(2 * k);
    for j in 0..k {
        triangles.push(rings.triangle_upper(&graph, 0, j));
        triangles.push(rings.triangle_lower(&graph, 0, j));
    }
    debug_assert!(
        triangles
            .windows(2)
            .all(|w| w[0].edges().intersection(w[1].edges()).len() == 1),
        "consecutive triangles share exactly one cross edge"
    );
    AntiprismLayout { k, graph, embedding, triangles }
}

/// The join of a cycle on `n - 2` vertices with two nonadjacent apexes;
/// maximum degree `n - 2`.
pub fn double_wheel(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::ParameterRange("double wheel needs n >= 5"));
    }
    let c = n - 2;
    let mut edges: Vec<(VertexId, VertexId)> = (0..c).map(|j| (j, (j + 1) % c)).collect();
    for apex in [c, c + 1] {
        edges.extend((0..c).map(|j| (j, apex)));
    }
    Graph::new(n, edges)
}

/// The circular ladder (prism over a cycle) on `n` vertices, `n >= 6` even.
pub fn ladder(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::ParameterRange("ladder needs even n >= 6"));
    }
    let k = n / 2;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(3 * k);
    for j in 0..k {
        edges.push((j, (j + 1) % k));
    }
    for j in 0..k {
        edges.push((k + j, k + (j + 1) % k));
    }
    for j in 0..k {
        edges.push((j, k + j));
    }
    Graph::new(n, edges)
}

pub fn petersen() -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = (0..5).map(|j| (j, (j + 1) % 5)).collect();
    edges.extend((0..5).map(|j| (5 + j, 5 + (j + 2) % 5)));
    edges.extend((0..5).map(|j| (j, 5 + j)));
    Graph::new(10, edges).unwrap()
}

/// The icosahedron: a pentagonal antiprism capped by two apexes. Planar,
/// 5-regular, 4-connected (indeed 5-connected) on 12 vertices.
pub fn icosahedron() -> Graph {
    let a = antiprism(5);
    let mut edges = a.graph().edges().to_vec();
    for v in a.outer_vertices() {
        edges.push((v, 10));
    }
    for v in a.inner_vertices() {
        edges.push((v, 11));
    }
    Graph::new(12, edges).unwrap()
}

/// The dodecahedron, realised as the dual of the icosahedron.
pub fn dodecahedron() -> Graph {
    let g = icosahedron();
    let emb = planar_embed(&g).unwrap().expect("icosahedron is planar");
    dual(&emb).unwrap().0
}

/// The cyclic order of faces around the antiprism band, as cycles, is also
/// useful for cross checks against the embedding's own face list.
pub fn antiprism_face_check(layout: &AntiprismLayout) -> bool {
    let emb = layout.embedding();
    let tri_faces = emb.faces().iter().filter(|f| f.len() == 3).count();
    tri_faces == 2 * layout.k() && emb.face_count() == 2 * layout.k() + 2
}

/// Girth computed from the cycle catalog; used in tests.
pub fn girth(g: &Graph) -> Option<usize> {
    let catalog = cycles::full_catalog(g).ok()?;
    catalog.cycles().iter().map(Cycle::len).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn antiprism_counts() {
        for k in 3..=6 {
            let a = antiprism(k);
            assert_eq!(a.graph().vertex_count(), 2 * k);
            assert_eq!(a.graph().edge_count(), 4 * k);
            assert_eq!(a.embedding().face_count(), 2 * k + 2);
            assert!(antiprism_face_check(&a));
            assert_eq!(a.e0().len(), k);
            assert_eq!(a.e1().len(), k);
            assert_eq!(a.e2().len(), 2 * k);
        }
    }

    #[test]
    fn octahedron_is_double_wheel_6() {
        let a = antiprism(3);
        let dw = double_wheel(6).unwrap();
        assert!(are_isomorphic(a.graph(), &dw));
    }

    #[test]
    fn antiprism_is_4_regular_4_connected() {
        let a = antiprism(5);
        assert!(a.graph().is_regular(4));
        assert!(a.graph().vertex_connectivity_at_least(4).unwrap());
    }

    #[test]
    fn cross_edges_are_a_cut_met_evenly() {
        let a = antiprism(4);
        let e2 = a.e2();
        let catalog = cycles::full_catalog(a.graph()).unwrap();
        for c in catalog.cycles() {
            let crossings = c.edges().intersection(&e2).len();
            assert_eq!(crossings % 2, 0);
            if crossings == 0 {
                assert_eq!(c.len(), a.k());
            }
            if crossings >= 4 {
                assert!(c.len() >= a.k() + 1);
            }
        }
    }

    #[test]
    fn theorem2_counts() {
        let (g, emb) = theorem2_graph(4, 3).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 28);
        assert_eq!(emb.face_count(), 18);
    }

    #[test]
    fn theorem2_connectivity() {
        let (g, _) = theorem2_graph(3, 3).unwrap();
        assert!(g.vertex_connectivity_at_least(3).unwrap());
        assert!(!g.vertex_connectivity_at_least(4).unwrap());
        let (g, _) = theorem2_graph(4, 3).unwrap();
        assert!(g.vertex_connectivity_at_least(4).unwrap());
    }

    #[test]
    fn theorem2_l2_is_antiprism() {
        for k in 3..=5 {
            let (g, _) = theorem2_graph(k, 2).unwrap();
            assert!(are_isomorphic(&g, antiprism(k).graph()));
        }
    }

    #[test]
    fn ladder_8_is_cube() {
        let cube = ladder(8).unwrap();
        assert!(cube.is_cubic());
        assert_eq!(girth(&cube), Some(4));
        // the cube is bipartite and vertex-transitive; check against an
        // explicit coordinate construction
        let coords: Vec<(VertexId, VertexId)> = vec![
            (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7),
            (4, 5), (4, 6), (5, 7), (6, 7),
        ];
        let explicit = Graph::new(8, coords).unwrap();
        assert!(are_isomorphic(&cube, &explicit));
    }

    #[test]
    fn petersen_properties() {
        let g = petersen();
        assert_eq!(girth(&g), Some(5));
        assert!(cycles::enumerate_hamiltonian(&g).is_empty());
    }

    #[test]
    fn double_wheel_degree() {
        for n in 5..=9 {
            let g = double_wheel(n).unwrap();
            assert_eq!(g.max_degree(), n - 2);
        }
    }

    #[test]
    fn platonic_solids() {
        let ico = icosahedron();
        assert_eq!(ico.vertex_count(), 12);
        assert_eq!(ico.edge_count(), 30);
        assert!(ico.is_regular(5));
        assert!(ico.vertex_connectivity_at_least(4).unwrap());
        let dod = dodecahedron();
        assert_eq!(dod.vertex_count(), 20);
        assert_eq!(dod.edge_count(), 30);
        assert!(dod.is_cubic());
        assert_eq!(girth(&dod), Some(5));
    }

    #[test]
    fn parameter_errors() {
        assert!(theorem2_graph(2, 2).is_err());
        assert!(theorem2_graph(3, 1).is_err());
        assert!(double_wheel(4).is_err());
        assert!(ladder(7).is_err());
        assert!(ladder(4).is_err());
    }
}
