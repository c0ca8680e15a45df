//! Enumeration of simple cycles and Hamiltonian cycles.
//!
//! Cycles are canonicalised as sorted edge-id sets. Enumeration anchors each
//! cycle at its least edge id and extends paths over larger ids only, so
//! every cycle is produced exactly once and the catalog order is the
//! canonical order without any dedup pass.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSet, Graph, VertexId};

/// All simple cycles of a graph within a length window, in canonical order.
#[derive(Clone, Debug)]
pub struct CycleCatalog {
    parent: crate::graph::GraphFingerprint,
    cycles: Vec<Cycle>,
    min_len: usize,
    max_len: usize,
}

impl CycleCatalog {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn parent(&self) -> crate::graph::GraphFingerprint {
        self.parent
    }

    pub fn length_bounds(&self) -> (usize, usize) {
        (self.min_len, self.max_len)
    }

    /// Length of the longest catalogued cycle (the circumference when the
    /// catalog is complete), 0 if there are none.
    pub fn circumference(&self) -> usize {
        self.cycles.iter().map(Cycle::len).max().unwrap_or(0)
    }
}

/// Enumerates exactly the simple cycles with length in `[min_len, max_len]`,
/// including digons between parallel edges. Loops are rejected.
pub fn enumerate_cycles(g: &Graph, min_len: usize, max_len: usize) -> Result<CycleCatalog> {
    if (0..g.edge_count()).any(|e| g.is_loop(e)) {
        return Err(Error::ParameterRange("cycle enumeration needs a loop-free graph"));
    }
    let inc = g.incidence();
    let mut cycles = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for anchor in 0..g.edge_count() {
        let (start, goal) = g.endpoints(anchor);
        // Path from `start` back to `goal` over edges with id > anchor;
        // together with `anchor` it closes a cycle whose least edge id is
        // the anchor, so each cycle appears exactly once.
        let mut path: Vec<EdgeId> = vec![anchor];
        on_path[goal] = true;
        extend(g, &inc, anchor, goal, start, &mut on_path, &mut path, min_len, max_len, &mut cycles);
        on_path[goal] = false;
    }
    cycles.sort_unstable();
    Ok(CycleCatalog { parent: g.fingerprint(), cycles, min_len, max_len })
}

/// Catalog with the default window `[2 if multigraph else 3, n]`.
pub fn full_catalog(g: &Graph) -> Result<CycleCatalog> {
    let min_len = if g.is_simple() { 3 } else { 2 };
    enumerate_cycles(g, min_len, g.vertex_count().max(min_len))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    inc: &[Vec<EdgeId>],
    anchor: EdgeId,
    cur: VertexId,
    goal: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    if path.len() >= max_len {
        return;
    }
    for &e in &inc[cur] {
        if e <= anchor || path.contains(&e) {
            continue;
        }
        let next = g.other_endpoint(e, cur);
        if next == goal {
            if path.len() + 1 >= min_len {
                path.push(e);
                let set = EdgeSet::new(path.clone());
                out.push(Cycle::new(g, set).expect("closed simple path is a cycle"));
                path.pop();
            }
            continue;
        }
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(e);
        extend(g, inc, anchor, next, goal, on_path, path, min_len, max_len, out);
        path.pop();
        on_path[next] = false;
    }
}

/// All spanning cycles, deduplicated as undirected unrooted edge sets,
/// canonical order. Empty when none exist.
pub fn enumerate_hamiltonian(g: &Graph) -> Vec<Cycle> {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return Vec::new();
    }
    if (0..g.edge_count()).any(|e| g.is_loop(e)) {
        // Loops can never participate in a spanning cycle; work on the
        // loop-free subgraph with original ids.
        let keep: EdgeSet = (0..g.edge_count()).filter(|&e| !g.is_loop(e)).collect();
        let (h, back) = g.edge_subgraph(&keep);
        return enumerate_hamiltonian(&h)
            .into_iter()
            .map(|c| {
                let ids: EdgeSet = c.edges().iter().map(|e| back[e]).collect();
                Cycle::new(g, ids).unwrap()
            })
            .collect();
    }
    let inc = g.incidence();
    let mut cycles = Vec::new();
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut path = Vec::with_capacity(n);
    ham_extend(g, &inc, 0, 0, &mut visited, &mut path, &mut cycles);
    cycles.sort_unstable();
    cycles.dedup();
    cycles
}

fn ham_extend(
    g: &Graph,
    inc: &[Vec<EdgeId>],
    cur: VertexId,
    depth: usize,
    visited: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Cycle>,
) {
    let n = g.vertex_count();
    for &e in &inc[cur] {
        if path.contains(&e) {
            continue;
        }
        let next = g.other_endpoint(e, cur);
        if next == 0 {
            if depth + 1 == n {
                path.push(e);
                out.push(Cycle::new(g, EdgeSet::new(path.clone())).unwrap());
                path.pop();
            }
            continue;
        }
        if visited[next] {
            continue;
        }
        // Prune: every unvisited vertex still needs two usable ends.
        visited[next] = true;
        path.push(e);
        ham_extend(g, inc, next, depth + 1, visited, path, out);
        path.pop();
        visited[next] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families;
    use alloc::collections::BTreeSet;

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Brute-force oracle: filter all edge subsets by the cycle invariant.
    fn brute_force_cycles(g: &Graph, min_len: usize, max_len: usize) -> Vec<EdgeSet> {
        let m = g.edge_count();
        assert!(m <= 20, "oracle is exponential in m");
        let mut found = Vec::new();
        for mask in 1u32..(1 << m) {
            let set: EdgeSet = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            if set.len() < min_len || set.len() > max_len {
                continue;
            }
            if crate::graph::is_cycle_set(g, &set) {
                found.push(set);
            }
        }
        found.sort();
        found
    }

    #[test]
    fn k4_has_seven_cycles() {
        let g = k4();
        let catalog = enumerate_cycles(&g, 3, 4).unwrap();
        assert_eq!(catalog.len(), 7);
        let triangles = catalog.cycles().iter().filter(|c| c.len() == 3).count();
        assert_eq!(triangles, 4);
        assert_eq!(catalog.len() - triangles, 3);
        let oracle = brute_force_cycles(&g, 3, 4);
        let got: Vec<EdgeSet> = catalog.cycles().iter().map(|c| c.edges().clone()).collect();
        assert_eq!(got, oracle);
    }

    #[test]
    fn petersen_has_girth_five() {
        let g = families::petersen();
        assert!(enumerate_cycles(&g, 3, 4).unwrap().is_empty());
        assert_eq!(enumerate_cycles(&g, 5, 5).unwrap().len(), 12);
    }

    #[test]
    fn digon_catalog() {
        let g = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let catalog = enumerate_cycles(&g, 2, 2).unwrap();
        assert_eq!(catalog.len(), 1);
    }

    #[test]
    fn catalog_complete_on_small_graphs() {
        let graphs = [
            k4(),
            families::ladder(6).unwrap(),
            families::antiprism(3).into_graph(),
            Graph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 0)]).unwrap(),
        ];
        for g in graphs {
            let catalog = full_catalog(&g).unwrap();
            let (lo, hi) = catalog.length_bounds();
            let got: Vec<EdgeSet> = catalog.cycles().iter().map(|c| c.edges().clone()).collect();
            assert_eq!(got, brute_force_cycles(&g, lo, hi));
        }
    }

    #[test]
    fn hamiltonian_counts() {
        assert_eq!(enumerate_hamiltonian(&families::petersen()).len(), 0);
        let c5 = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(enumerate_hamiltonian(&c5).len(), 1);
        // Double wheels on n vertices carry exactly 2(n-4)(n-2) spanning cycles.
        for n in [5usize, 6, 7, 8] {
            let g = families::double_wheel(n).unwrap();
            assert_eq!(enumerate_hamiltonian(&g).len(), 2 * (n - 4) * (n - 2), "n = {n}");
        }
    }

    #[test]
    fn hamiltonian_cycles_span_and_distinct() {
        let g = families::antiprism(4).into_graph();
        let hams = enumerate_hamiltonian(&g);
        let as_sets: BTreeSet<EdgeSet> = hams.iter().map(|c| c.edges().clone()).collect();
        assert_eq!(as_sets.len(), hams.len());
        for h in &hams {
            assert_eq!(h.vertices(&g).len(), g.vertex_count());
        }
    }

    #[test]
    fn parallel_edges_give_distinct_hamiltonians() {
        let g = Graph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        // Triangle via either parallel copy.
        assert_eq!(enumerate_hamiltonian(&g).len(), 2);
    }
}
