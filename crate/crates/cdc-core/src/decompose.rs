//! Minimum cycle decompositions of even subgraphs, and the degree-2
//! suppression used to shuttle decompositions between a graph and its
//! reductions.
//!
//! Every even graph decomposes into edge-disjoint cycles; for simple planar
//! even graphs on n vertices at most floor((n-1)/2) suffice. The search here
//! is exact branch and bound over the cycles inside the subgraph, so the
//! reported cardinality is the true minimum, not just within the bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSet, EvenSubgraph, Graph, VertexId};

/// An exact partition of an even subgraph's edges into cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    parts: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn parts(&self) -> &[Cycle] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Partitions the edges of `s` into the minimum number of cycles.
///
/// The empty edge set yields the empty decomposition. The restriction of the
/// parent to `s` must be loop-free.
pub fn min_cycle_decomposition(g: &Graph, s: &EvenSubgraph) -> Result<CycleDecomposition> {
    if g.fingerprint() != s.parent() {
        return Err(Error::ParentMismatch);
    }
    if s.edges().iter().any(|e| g.is_loop(e)) {
        return Err(Error::ParameterRange("decomposition needs a loop-free edge set"));
    }
    if s.edges().is_empty() {
        return Ok(CycleDecomposition { parts: Vec::new() });
    }
    // Catalog of cycles lying inside the subgraph.
    let (sub, back) = g.edge_subgraph(s.edges());
    let catalog = cycles::full_catalog(&sub)?;
    let m = sub.edge_count();
    let per_edge: Vec<Vec<usize>> = {
        let mut per = vec![Vec::new(); m];
        for (i, c) in catalog.cycles().iter().enumerate() {
            for e in c.edges().iter() {
                per[e].push(i);
            }
        }
        per
    };
    let max_len = catalog.circumference();
    let mut best: Option<Vec<usize>> = None;
    let mut chosen = Vec::new();
    let mut covered = vec![false; m];
    branch(&catalog, &per_edge, max_len, m, &mut covered, &mut chosen, &mut best, usize::MAX);
    let best = best.expect("even graphs always decompose into cycles");
    let parts = best
        .into_iter()
        .map(|i| {
            let ids: EdgeSet = catalog.cycles()[i].edges().iter().map(|e| back[e]).collect();
            Cycle::new(g, ids).unwrap()
        })
        .collect();
    Ok(CycleDecomposition { parts })
}

#[allow(clippy::too_many_arguments)]
fn branch(
    catalog: &cycles::CycleCatalog,
    per_edge: &[Vec<usize>],
    max_len: usize,
    m: usize,
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
    mut best_len: usize,
) -> usize {
    if let Some(b) = best {
        best_len = b.len();
    }
    let remaining = covered.iter().filter(|&&c| !c).count();
    if remaining == 0 {
        if chosen.len() < best_len {
            *best = Some(chosen.clone());
        }
        return best_len.min(chosen.len());
    }
    // Each further cycle removes at most max_len edges.
    let lower = chosen.len() + remaining.div_ceil(max_len);
    if lower >= best_len {
        return best_len;
    }
    let e = (0..m).find(|&e| !covered[e]).unwrap();
    for &ci in &per_edge[e] {
        let c = &catalog.cycles()[ci];
        if c.edges().iter().any(|f| covered[f]) {
            continue;
        }
        for f in c.edges().iter() {
            covered[f] = true;
        }
        chosen.push(ci);
        best_len = branch(catalog, per_edge, max_len, m, covered, chosen, best, best_len);
        chosen.pop();
        for f in c.edges().iter() {
            covered[f] = false;
        }
    }
    best_len
}

/// Tao's partition bound for simple planar even graphs: at most
/// floor((n-1)/2) cycles, with n the order of the host graph.
pub fn planar_even_bound(n: usize) -> usize {
    (n.saturating_sub(1)) / 2
}

/// Removes a degree-2 vertex and merges its two incident edges into one.
///
/// Returns the reduced graph together with the provenance of every new edge:
/// `provenance[new_id]` lists the parent edge ids it stands for (two for the
/// merged edge, one otherwise). The two incident edges must not be parallel
/// copies of each other unless `allow_collapse` is set, in which case the
/// digon collapses to a loop (the parent graph must then allow loops in its
/// reduction; the reduced graph is built loop-tolerant).
pub fn suppress_degree2_vertex(
    g: &Graph,
    v: VertexId,
    allow_collapse: bool,
) -> Result<(Graph, Vec<Vec<EdgeId>>)> {
    let incident: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            a == v || b == v
        })
        .collect();
    if incident.len() != 2 || g.edges().iter().any(|&(a, b)| a == v && b == v) {
        return Err(Error::WrongDegree { vertex: v, degree: g.degree(v), expected: 2 });
    }
    let (e1, e2) = (incident[0], incident[1]);
    let a = g.other_endpoint(e1, v);
    let b = g.other_endpoint(e2, v);
    if a == b && !allow_collapse {
        return Err(Error::ParameterRange("suppression would collapse a digon to a loop"));
    }
    // Keep every vertex except v; relabel above v downwards.
    let relabel = |w: VertexId| if w > v { w - 1 } else { w };
    let mut edges = Vec::with_capacity(g.edge_count() - 1);
    let mut provenance = Vec::with_capacity(g.edge_count() - 1);
    for e in 0..g.edge_count() {
        if e == e1 || e == e2 {
            continue;
        }
        let (x, y) = g.endpoints(e);
        edges.push((relabel(x), relabel(y)));
        provenance.push(vec![e]);
    }
    edges.push((relabel(a), relabel(b)));
    provenance.push(vec![e1.min(e2), e1.max(e2)]);
    let reduced = if a == b || g.loops_allowed() {
        Graph::new_with_loops(g.vertex_count() - 1, edges)?
    } else {
        Graph::new(g.vertex_count() - 1, edges)?
    };
    Ok((reduced, provenance))
}

/// Splits an edge with a fresh vertex; inverse of suppression up to ids.
/// The two new edges (ends at the old endpoints) take ids m and m+1 of the
/// returned graph, all other edges keep their ids compacted in order.
pub fn subdivide_edge(g: &Graph, e: EdgeId) -> Result<(Graph, VertexId)> {
    if e >= g.edge_count() {
        return Err(Error::UnknownEdge { edge: e, m: g.edge_count() });
    }
    let (u, v) = g.endpoints(e);
    let w = g.vertex_count();
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &p)| p)
        .collect();
    edges.push((u, w));
    edges.push((w, v));
    let out = if g.loops_allowed() {
        Graph::new_with_loops(w + 1, edges)?
    } else {
        Graph::new(w + 1, edges)?
    };
    Ok((out, w))
}
