//! Labeled multigraphs with stable edge identities.
//!
//! Edges are identified by their position in the construction order; all
//! higher-level objects (cycles, even subgraphs, covers) are sets of these
//! edge ids, never endpoint pairs, so parallel edges stay distinguishable.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Identifies the parent graph of derived edge sets. Two graphs built from
/// the same data share a fingerprint, which is exactly when their edge ids
/// are interchangeable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphFingerprint(u64);

/// A labeled multigraph. Parallel edges are always permitted; loops only
/// when the graph is built with [`Graph::new_with_loops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    loops_allowed: bool,
    fingerprint: GraphFingerprint,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::build(vertex_count, edges, false)
    }

    pub fn new_with_loops(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::build(vertex_count, edges, true)
    }

    fn build(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        loops_allowed: bool,
    ) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::EndpointOutOfRange { edge: (u, v), n: vertex_count });
            }
            if u == v && !loops_allowed {
                return Err(Error::LoopNotAllowed { vertex: u });
            }
        }
        let fingerprint = fingerprint_of(vertex_count, &edges, loops_allowed);
        Ok(Graph { vertex_count, edges, loops_allowed, fingerprint })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn fingerprint(&self) -> GraphFingerprint {
        self.fingerprint
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// The endpoint of `e` other than `v`; for a loop at `v` this is `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Loops contribute 2, as usual.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = alloc::collections::BTreeSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Incidence lists: for each vertex the incident edge ids, loops listed
    /// twice (once per end). Construction order is preserved.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(e);
            inc[v].push(e);
        }
        inc
    }

    /// True whenever there is at least one edge between `u` and `v`.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        (0..self.edge_count())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                (a, b) == (u, v) || (a, b) == (v, u)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &inc[v] {
                let w = self.other_endpoint(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut verts = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &e in &inc[v] {
                    let w = self.other_endpoint(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        verts.push(w);
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }

    /// Bridge edges by the standard DFS lowpoint computation. Parallel
    /// edges are never bridges; loops are never bridges.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.vertex_count;
        let inc = self.incidence();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        // Iterative DFS carrying the edge we arrived by.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
                if *idx < inc[v].len() {
                    let e = inc[v][*idx];
                    *idx += 1;
                    if Some(e) == via || self.is_loop(e) {
                        continue;
                    }
                    let w = self.other_endpoint(e, v);
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, pvia, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            // Unique edge to the parent: parallel copies would
                            // have lowered low[v] via the back edge.
                            bridges.push(pvia.unwrap());
                        }
                        let _ = parent;
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// True iff no vertex cut of size `< k` exists, checked exhaustively
    /// over all candidate cuts; intended for desk-scale graphs.
    ///
    /// Requires a simple graph for the usual semantics when `k >= 2`, and
    /// more vertices than `k` so that "remove k-1 vertices" is meaningful.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> Result<bool> {
        let n = self.vertex_count;
        if n <= k {
            return Err(Error::ParameterRange("connectivity check needs n > k"));
        }
        if k >= 2 && !self.is_simple() {
            return Err(Error::ParameterRange("connectivity semantics need a simple graph"));
        }
        if !self.is_connected() {
            return Ok(k == 0);
        }
        if k <= 1 {
            return Ok(true);
        }
        let mut cut = vec![false; n];
        Ok(self.no_small_cut(&mut cut, 0, k - 1))
    }

    fn no_small_cut(&self, removed: &mut [bool], from: usize, budget: usize) -> bool {
        if !self.connected_after_removal(removed) {
            return false;
        }
        if budget == 0 {
            return true;
        }
        for v in from..self.vertex_count {
            removed[v] = true;
            let ok = self.no_small_cut(removed, v + 1, budget - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    fn connected_after_removal(&self, removed: &[bool]) -> bool {
        let n = self.vertex_count;
        let inc = self.incidence();
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &inc[v] {
                let w = self.other_endpoint(e, v);
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == (0..n).filter(|&v| !removed[v]).count()
    }

    /// The subgraph on a subset of edges, keeping all vertices. Returns the
    /// new graph plus the map new edge id -> old edge id (new ids are dense
    /// in ascending old order).
    pub fn edge_subgraph(&self, edges: &EdgeSet) -> (Graph, Vec<EdgeId>) {
        let mut kept = Vec::with_capacity(edges.len());
        let mut pairs = Vec::with_capacity(edges.len());
        for e in edges.iter() {
            kept.push(e);
            pairs.push(self.edges[e]);
        }
        let g = Graph::build(self.vertex_count, pairs, self.loops_allowed).unwrap();
        (g, kept)
    }
}

fn fingerprint_of(n: usize, edges: &[(VertexId, VertexId)], loops: bool) -> GraphFingerprint {
    // FNV-1a over the defining data.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    };
    eat(n as u64);
    eat(loops as u64);
    for &(u, v) in edges {
        eat(u as u64);
        eat(v as u64);
    }
    GraphFingerprint(h)
}

/// A set of edge ids of one parent graph, kept sorted. Ordering is
/// lexicographic on the sorted id lists, which is the canonical order used
/// for cycles and cover entries everywhere in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeSet {
    ids: Vec<EdgeId>,
}

impl EdgeSet {
    pub fn new(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet { ids }
    }

    pub fn empty() -> Self {
        EdgeSet { ids: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.ids.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.ids.iter().copied()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn insert(&mut self, e: EdgeId) {
        if let Err(pos) = self.ids.binary_search(&e) {
            self.ids.insert(pos, e);
        }
    }

    pub fn remove(&mut self, e: EdgeId) {
        if let Ok(pos) = self.ids.binary_search(&e) {
            self.ids.remove(pos);
        }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut ids = self.ids.clone();
        ids.extend_from_slice(&other.ids);
        EdgeSet::new(ids)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::new(self.ids.iter().copied().filter(|&e| other.contains(e)).collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::new(self.ids.iter().copied().filter(|&e| !other.contains(e)).collect())
    }

    /// Standard symmetric difference; on even subgraphs it is again even.
    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut ids: Vec<EdgeId> = self.ids.iter().copied().filter(|&e| !other.contains(e)).collect();
        ids.extend(other.ids.iter().copied().filter(|&e| !self.contains(e)));
        EdgeSet::new(ids)
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

/// Degrees of every vertex within an edge set.
pub fn degrees_in(g: &Graph, edges: &EdgeSet) -> Vec<usize> {
    let mut deg = vec![0usize; g.vertex_count()];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// Spanning subgraph with every vertex of even degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EvenSubgraph {
    parent: GraphFingerprint,
    edges: EdgeSet,
}

impl EvenSubgraph {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        for e in edges.iter() {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge { edge: e, m: g.edge_count() });
            }
        }
        if degrees_in(g, &edges).iter().any(|&d| d % 2 != 0) {
            return Err(Error::NotEven);
        }
        Ok(EvenSubgraph { parent: g.fingerprint(), edges })
    }

    pub fn parent(&self) -> GraphFingerprint {
        self.parent
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    /// Symmetric difference of two even subgraphs of the same graph.
    pub fn symmetric_difference(&self, g: &Graph, other: &EvenSubgraph) -> Result<EvenSubgraph> {
        if self.parent != other.parent || self.parent != g.fingerprint() {
            return Err(Error::ParentMismatch);
        }
        EvenSubgraph::new(g, self.edges.symmetric_difference(&other.edges))
    }
}

/// A connected 2-regular subgraph, as a set of edge ids. Digons (two
/// parallel edges) qualify; loops do not.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    parent: GraphFingerprint,
    edges: EdgeSet,
}

impl Cycle {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        if !is_cycle_set(g, &edges) {
            return Err(Error::NotACycle);
        }
        Ok(Cycle { parent: g.fingerprint(), edges })
    }

    pub fn parent(&self) -> GraphFingerprint {
        self.parent
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices visited, sorted.
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .edges
            .iter()
            .flat_map(|e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn as_even_subgraph(&self, g: &Graph) -> EvenSubgraph {
        EvenSubgraph { parent: self.parent, edges: self.edges.clone() }
    }
}

/// Checks the cycle invariant: nonempty, loop-free, connected, 2-regular.
pub fn is_cycle_set(g: &Graph, edges: &EdgeSet) -> bool {
    if edges.is_empty() {
        return false;
    }
    for e in edges.iter() {
        if e >= g.edge_count() || g.is_loop(e) {
            return false;
        }
    }
    let deg = degrees_in(g, edges);
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // Connectivity over the touched vertices.
    let touched: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| deg[v] > 0).collect();
    if touched.is_empty() {
        return false;
    }
    // Walk the cycle starting anywhere.
    let mut inc: alloc::collections::BTreeMap<VertexId, Vec<EdgeId>> = alloc::collections::BTreeMap::new();
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        inc.entry(u).or_default().push(e);
        inc.entry(v).or_default().push(e);
    }
    let start = touched[0];
    let mut seen_edges = alloc::collections::BTreeSet::new();
    let mut v = start;
    let mut via = usize::MAX;
    loop {
        let next = inc[&v].iter().copied().find(|&e| e != via && !seen_edges.contains(&e));
        match next {
            Some(e) => {
                seen_edges.insert(e);
                v = g.other_endpoint(e, v);
                via = e;
            }
            None => break,
        }
        if v == start {
            break;
        }
    }
    seen_edges.len() == edges.len() && v == start
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn build_k4() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_simple());
        assert!(g.is_cubic());
    }

    #[test]
    fn build_digon() {
        let g = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());
        let c = Cycle::new(&g, EdgeSet::new(vec![0, 1])).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, vec![(0, 3)]),
            Err(Error::EndpointOutOfRange { edge: (0, 3), n: 3 })
        );
        assert_eq!(Graph::new(3, vec![(1, 1)]), Err(Error::LoopNotAllowed { vertex: 1 }));
        assert!(Graph::new_with_loops(3, vec![(1, 1)]).is_ok());
    }

    #[test]
    fn petersen_has_15_edges() {
        let g = crate::constructions::families::petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_cubic());
    }

    #[test]
    fn symmetric_difference_cancels() {
        let g = k4();
        let t = EdgeSet::new(vec![0, 1, 3]); // triangle 0-1-2
        assert!(is_cycle_set(&g, &t));
        assert!(t.symmetric_difference(&t).is_empty());
    }

    #[test]
    fn two_triangles_sharing_edge_make_square() {
        let g = k4();
        // triangles 012 (edges 01,02,12 = 0,1,3) and 013 (edges 01,03,13 = 0,2,4)
        let a = EdgeSet::new(vec![0, 1, 3]);
        let b = EdgeSet::new(vec![0, 2, 4]);
        let d = a.symmetric_difference(&b);
        assert_eq!(d.len(), 4);
        assert!(is_cycle_set(&g, &d));
    }

    #[test]
    fn connectivity_examples() {
        let g = k4();
        assert!(g.vertex_connectivity_at_least(3).unwrap());
        let oct = crate::constructions::families::antiprism(3).into_graph();
        assert!(oct.vertex_connectivity_at_least(4).unwrap());
        let cube = crate::constructions::families::ladder(8).unwrap();
        assert!(!cube.vertex_connectivity_at_least(4).unwrap());
        assert!(cube.vertex_connectivity_at_least(3).unwrap());
    }

    #[test]
    fn bridges_found() {
        // two triangles joined by a bridge
        let g = Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        assert_eq!(g.bridges(), vec![6]);
        assert!(!g.is_bridgeless());
        assert!(k4().is_bridgeless());
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(g.is_bridgeless());
    }

    #[test]
    fn even_subgraph_rejects_odd() {
        let g = k4();
        assert!(EvenSubgraph::new(&g, EdgeSet::new(vec![0])).is_err());
        assert!(EvenSubgraph::new(&g, EdgeSet::new(vec![0, 1, 3])).is_ok());
    }
}
