//! Combinatorial plane embeddings: rotation systems, face tracing, duals,
//! and a planarity test that produces an embedding.
//!
//! A dart is an edge end `(edge, end)`; end 0 sits at `endpoints(e).0`, end 1
//! at `endpoints(e).1`, and a dart is read as the traversal leaving its end.
//! The rotation lists the darts at each vertex in cyclic order. Faces are
//! the orbits of "flip the dart, then step to the next dart in the rotation
//! at its tail"; a rotation system is accepted as plane exactly when Euler's
//! formula holds for the traced face count.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, EdgeSet, Graph, VertexId};

/// An edge end: `(edge id, 0|1)`.
pub type Dart = (EdgeId, u8);

pub fn dart_tail(g: &Graph, d: Dart) -> VertexId {
    let (u, v) = g.endpoints(d.0);
    if d.1 == 0 {
        u
    } else {
        v
    }
}

pub fn dart_head(g: &Graph, d: Dart) -> VertexId {
    let (u, v) = g.endpoints(d.0);
    if d.1 == 0 {
        v
    } else {
        u
    }
}

pub fn dart_flip(d: Dart) -> Dart {
    (d.0, 1 - d.1)
}

/// A closed walk bounding one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacialWalk {
    darts: Vec<Dart>,
    is_cycle: bool,
}

impl FacialWalk {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Edge ids along the walk (with repetition if an edge is walked twice).
    pub fn edge_sequence(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.0)
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.darts.iter().map(|d| d.0).collect()
    }

    /// True when the walk visits no edge twice, i.e. bounds a cycle.
    pub fn is_cycle(&self) -> bool {
        self.is_cycle
    }

    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.darts.iter().map(|&d| dart_tail(g, d)).collect()
    }

    pub fn as_cycle(&self, g: &Graph) -> Option<Cycle> {
        if self.is_cycle {
            Cycle::new(g, self.edge_set()).ok()
        } else {
            None
        }
    }
}

/// A rotation system over a connected loop-free multigraph that passes the
/// Euler check, together with its traced faces.
#[derive(Clone, Debug)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<Dart>>,
    faces: Vec<FacialWalk>,
    /// face index of every dart, indexed dart_index = 2 * edge + end
    face_of: Vec<usize>,
}

fn dart_index(d: Dart) -> usize {
    2 * d.0 + d.1 as usize
}

impl PlaneEmbedding {
    /// Validates that every edge end appears exactly once, the graph is
    /// connected and loop-free, and the traced faces satisfy Euler's formula.
    pub fn new(graph: Graph, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        if rotation.len() != n {
            return Err(Error::BadRotation("one rotation list per vertex required"));
        }
        if (0..m).any(|e| graph.is_loop(e)) {
            return Err(Error::BadRotation("embeddings of loops are not supported"));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut seen = vec![false; 2 * m];
        for (v, rot) in rotation.iter().enumerate() {
            for &d in rot {
                if d.0 >= m || d.1 > 1 {
                    return Err(Error::BadRotation("dart out of range"));
                }
                if dart_tail(&graph, d) != v {
                    return Err(Error::BadRotation("dart listed at the wrong vertex"));
                }
                if seen[dart_index(d)] {
                    return Err(Error::BadRotation("dart listed twice"));
                }
                seen[dart_index(d)] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::BadRotation("missing dart"));
        }
        let (faces, face_of) = trace(&graph, &rotation);
        if n + faces.len() != m + 2 {
            return Err(Error::NotGenusZero { vertices: n, edges: m, faces: faces.len() });
        }
        Ok(PlaneEmbedding { graph, rotation, faces, face_of })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[FacialWalk] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.face_of[dart_index(d)]
    }

    /// The two faces along an edge, in dart-end order (equal for a bridge).
    pub fn faces_of_edge(&self, e: EdgeId) -> (usize, usize) {
        (self.face_of[dart_index((e, 0))], self.face_of[dart_index((e, 1))])
    }

    /// Face indices whose walks contain the vertex.
    pub fn faces_at_vertex(&self, v: VertexId) -> Vec<usize> {
        let mut out: Vec<usize> = self.rotation[v].iter().map(|&d| self.face_of_dart(d)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The face whose boundary walks `u -> v` via the given edge end
    /// u = tail. Panics if the dart does not start at `u`.
    pub fn face_left_of(&self, d: Dart) -> usize {
        self.face_of_dart(d)
    }

    /// Inserts a parallel copy of edge `e`, forming a digon face with it.
    /// The copy takes edge id m.
    pub fn duplicate_edge(&self, e: EdgeId) -> Result<PlaneEmbedding> {
        let m = self.graph.edge_count();
        let (u, v) = self.graph.endpoints(e);
        let mut edges = self.graph.edges().to_vec();
        edges.push((u, v));
        let graph = Graph::new(self.graph.vertex_count(), edges)?;
        let mut rotation = self.rotation.clone();
        let copy0: Dart = (m, 0);
        let copy1: Dart = (m, 1);
        let at_u = rotation[u].iter().position(|&d| d == (e, 0)).unwrap();
        rotation[u].insert(at_u + 1, copy0);
        let at_v = rotation[v].iter().position(|&d| d == (e, 1)).unwrap();
        rotation[v].insert(at_v, copy1);
        PlaneEmbedding::new(graph, rotation)
    }

    /// Splits the faces into the two sides of a cycle: `(side_a, side_b)`
    /// where side_b contains face 0. Panics unless the cycle is separating
    /// into exactly two dual components, which every cycle of a sphere
    /// embedding is.
    pub fn cycle_sides(&self, cycle: &Cycle) -> (Vec<usize>, Vec<usize>) {
        let f = self.faces.len();
        let mut comp = vec![usize::MAX; f];
        let mut stack = Vec::new();
        let mut next = 0;
        for start in 0..f {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &d in self.faces[x].darts() {
                    if cycle.edges().contains(d.0) {
                        continue;
                    }
                    let y = self.face_of_dart(dart_flip(d));
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        assert_eq!(next, 2, "a cycle separates the sphere into two face sets");
        let side_b: Vec<usize> = (0..f).filter(|&x| comp[x] == comp[0]).collect();
        let side_a: Vec<usize> = (0..f).filter(|&x| comp[x] != comp[0]).collect();
        (side_a, side_b)
    }

    /// The plane subgraph consisting of a cycle together with everything on
    /// one of its sides (a set of faces as returned by [`cycle_sides`]).
    /// Returns the sub-embedding plus edge and vertex maps (new -> old).
    ///
    /// [`cycle_sides`]: PlaneEmbedding::cycle_sides
    pub fn side_subembedding(
        &self,
        cycle: &Cycle,
        side: &[usize],
    ) -> Result<(PlaneEmbedding, Vec<EdgeId>, Vec<VertexId>)> {
        let side_set: alloc::collections::BTreeSet<usize> = side.iter().copied().collect();
        // keep an edge iff it lies on the cycle or some incident face is inside
        let mut keep_edge = vec![false; self.graph.edge_count()];
        for e in 0..self.graph.edge_count() {
            let (f1, f2) = self.faces_of_edge(e);
            if cycle.edges().contains(e) || side_set.contains(&f1) || side_set.contains(&f2) {
                keep_edge[e] = true;
            }
        }
        let mut keep_vertex = vec![false; self.graph.vertex_count()];
        for e in 0..self.graph.edge_count() {
            if keep_edge[e] {
                let (u, v) = self.graph.endpoints(e);
                keep_vertex[u] = true;
                keep_vertex[v] = true;
            }
        }
        let vmap: Vec<VertexId> = (0..self.graph.vertex_count()).filter(|&v| keep_vertex[v]).collect();
        let vback: BTreeMap<VertexId, VertexId> =
            vmap.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let emap: Vec<EdgeId> = (0..self.graph.edge_count()).filter(|&e| keep_edge[e]).collect();
        let eback: BTreeMap<EdgeId, EdgeId> =
            emap.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let edges: Vec<(VertexId, VertexId)> = emap
            .iter()
            .map(|&e| {
                let (u, v) = self.graph.endpoints(e);
                (vback[&u], vback[&v])
            })
            .collect();
        let graph = Graph::new(vmap.len(), edges)?;
        let rotation: Vec<Vec<Dart>> = vmap
            .iter()
            .map(|&old_v| {
                self.rotation[old_v]
                    .iter()
                    .filter(|d| keep_edge[d.0])
                    .map(|&(e, end)| (eback[&e], end))
                    .collect()
            })
            .collect();
        let emb = PlaneEmbedding::new(graph, rotation)?;
        Ok((emb, emap, vmap))
    }
}

fn trace(graph: &Graph, rotation: &[Vec<Dart>]) -> (Vec<FacialWalk>, Vec<usize>) {
    let m = graph.edge_count();
    // successor in rotation at the dart's tail
    let mut rot_next: Vec<Dart> = vec![(usize::MAX, 0); 2 * m];
    for rot in rotation {
        for (i, &d) in rot.iter().enumerate() {
            rot_next[dart_index(d)] = rot[(i + 1) % rot.len()];
        }
    }
    let mut face_of = vec![usize::MAX; 2 * m];
    let mut faces = Vec::new();
    for e in 0..m {
        for end in 0..2u8 {
            let start: Dart = (e, end);
            if face_of[dart_index(start)] != usize::MAX {
                continue;
            }
            let idx = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[dart_index(d)] = idx;
                walk.push(d);
                d = rot_next[dart_index(dart_flip(d))];
                if d == start {
                    break;
                }
            }
            let distinct: EdgeSet = walk.iter().map(|x| x.0).collect();
            let is_cycle = distinct.len() == walk.len() && crate::graph::is_cycle_set(graph, &distinct);
            faces.push(FacialWalk { darts: walk, is_cycle });
        }
    }
    (faces, face_of)
}

/// Builds the dual: one vertex per face, one edge per primal edge (same
/// ids), rotation at a face given by its walk. Requires a bridgeless input
/// so the dual stays loop-free.
pub fn dual(emb: &PlaneEmbedding) -> Result<(Graph, PlaneEmbedding, Vec<EdgeId>)> {
    let g = emb.graph();
    if !g.is_bridgeless() {
        return Err(Error::ParameterRange("dual needs a bridgeless embedding"));
    }
    let m = g.edge_count();
    let edges: Vec<(VertexId, VertexId)> = (0..m).map(|e| emb.faces_of_edge(e)).collect();
    let dual_graph = Graph::new(emb.face_count(), edges)?;
    let rotation: Vec<Vec<Dart>> = emb
        .faces()
        .iter()
        .map(|walk| walk.darts().iter().map(|&(e, end)| (e, end)).collect())
        .collect();
    let dual_emb = PlaneEmbedding::new(dual_graph.clone(), rotation)?;
    Ok((dual_graph, dual_emb, (0..m).collect()))
}

/// Planarity test and embedder (Demoucron-Malgrange-Pertuiset on blocks).
/// Returns a sphere rotation system, or `None` for non-planar input.
pub fn planar_embed(g: &Graph) -> Result<Option<PlaneEmbedding>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if (0..g.edge_count()).any(|e| g.is_loop(e)) {
        return Err(Error::ParameterRange("embedding of loops is not supported"));
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 3 && g.is_simple() && m > 3 * n - 6 {
        return Ok(None);
    }
    if m == 0 {
        if n == 1 {
            // A single vertex: empty rotation, one face; Euler needs special
            // casing that nothing downstream uses, so reject like disconnected
            // trivia.
            return Err(Error::ParameterRange("embedding needs at least one edge"));
        }
        return Err(Error::Disconnected);
    }
    // Embed each block, then splice rotations at the cut vertices.
    let blocks = blocks(g);
    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for block_edges in blocks {
        if block_edges.len() == 1 {
            let e = block_edges.as_slice()[0];
            rotation[g.endpoints(e).0].push((e, 0));
            rotation[g.endpoints(e).1].push((e, 1));
            continue;
        }
        let (sub, back) = g.edge_subgraph(&block_edges);
        // compact to the touched vertices
        let touched: Vec<VertexId> = {
            let mut t: Vec<VertexId> = block_edges
                .iter()
                .flat_map(|e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            t.sort_unstable();
            t.dedup();
            t
        };
        let vback: BTreeMap<VertexId, VertexId> =
            touched.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(VertexId, VertexId)> = block_edges
            .iter()
            .map(|e| {
                let (u, v) = g.endpoints(e);
                (vback[&u], vback[&v])
            })
            .collect();
        let block = Graph::new(touched.len(), edges).unwrap();
        let _ = sub;
        match demoucron(&block) {
            None => return Ok(None),
            Some(rot) => {
                for (local_v, local_rot) in rot.into_iter().enumerate() {
                    let global_v = touched[local_v];
                    rotation[global_v]
                        .extend(local_rot.into_iter().map(|(e, end)| (back.as_slice()[e], end)));
                }
            }
        }
    }
    let emb = PlaneEmbedding::new(g.clone(), rotation)?;
    Ok(Some(emb))
}

/// Biconnected components as edge sets (bridges are singleton blocks).
fn blocks(g: &Graph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut out = Vec::new();
    // iterative DFS from vertex 0 (graph connected)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(0, None, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
        if *idx < inc[v].len() {
            let e = inc[v][*idx];
            *idx += 1;
            if Some(e) == via {
                continue;
            }
            let w = g.other_endpoint(e, v);
            if disc[w] == usize::MAX {
                edge_stack.push(e);
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, Some(e), 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, pvia, _)) = stack.last() {
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    // pop the block delimited by the tree edge parent-v
                    let pe = pvia;
                    let _ = pe;
                    let mut block = Vec::new();
                    while let Some(&top) = edge_stack.last() {
                        let (a, b) = g.endpoints(top);
                        let top_min = disc[a].min(disc[b]);
                        if top_min >= disc[parent] {
                            block.push(edge_stack.pop().unwrap());
                        } else {
                            break;
                        }
                    }
                    out.push(EdgeSet::new(block));
                }
            }
        }
    }
    out
}

/// Demoucron's incremental face embedding for a connected graph in which
/// every block step stays 2-connected (callers pass blocks). Returns the
/// rotation or `None` when non-planar.
fn demoucron(g: &Graph) -> Option<Vec<Vec<Dart>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    // initial cycle
    let cycle = some_cycle(g)?;
    let mut in_emb_edge = vec![false; m];
    let mut in_emb_vertex = vec![false; n];
    // faces as cyclic dart lists
    let mut faces: Vec<Vec<Dart>> = Vec::new();
    {
        let mut fwd = Vec::new();
        for &d in &cycle {
            in_emb_edge[d.0] = true;
            in_emb_vertex[dart_tail(g, d)] = true;
            fwd.push(d);
        }
        let bwd: Vec<Dart> = fwd.iter().rev().map(|&d| dart_flip(d)).collect();
        faces.push(fwd);
        faces.push(bwd);
    }
    let inc = g.incidence();
    while in_emb_edge.iter().any(|&b| !b) {
        // bridges of the embedded subgraph
        let bridges = embedding_bridges(g, &inc, &in_emb_edge, &in_emb_vertex);
        debug_assert!(!bridges.is_empty());
        // admissible faces per bridge
        let mut chosen: Option<(usize, usize)> = None; // (bridge, face)
        let mut best_count = usize::MAX;
        for (bi, bridge) in bridges.iter().enumerate() {
            let mut count = 0;
            let mut witness = usize::MAX;
            for (fi, face) in faces.iter().enumerate() {
                let verts: alloc::collections::BTreeSet<VertexId> =
                    face.iter().map(|&d| dart_tail(g, d)).collect();
                if bridge.attachments.iter().all(|a| verts.contains(a)) {
                    count += 1;
                    if witness == usize::MAX {
                        witness = fi;
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if count < best_count {
                best_count = count;
                chosen = Some((bi, witness));
                if count == 1 {
                    break;
                }
            }
        }
        let (bi, fi) = chosen.unwrap();
        let path = bridge_path(g, &inc, &bridges[bi], &in_emb_vertex);
        embed_path(g, &mut faces, fi, &path, &mut in_emb_edge, &mut in_emb_vertex);
    }
    // rotation from faces: successor of flip(d) at dart tails
    let mut succ: Vec<Dart> = vec![(usize::MAX, 0); 2 * m];
    for face in &faces {
        for (i, &d) in face.iter().enumerate() {
            let next = face[(i + 1) % face.len()];
            // arriving по d into its head, we leave by next
            succ[dart_index(dart_flip(d))] = next;
        }
    }
    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n];
    let mut placed = vec![false; 2 * m];
    for e in 0..m {
        for end in 0..2u8 {
            let start: Dart = (e, end);
            if placed[dart_index(start)] {
                continue;
            }
            let v = dart_tail(g, start);
            let mut d = start;
            loop {
                rotation[v].push(d);
                placed[dart_index(d)] = true;
                d = succ[dart_index(d)];
                if d == start {
                    break;
                }
            }
        }
    }
    Some(rotation)
}

struct EmbBridge {
    /// embedded vertices the bridge attaches to (sorted)
    attachments: Vec<VertexId>,
    /// a representative unembedded edge at each attachment, for path search
    edges: Vec<EdgeId>,
    /// interior (unembedded) vertices, empty for a chord
    interior: Vec<VertexId>,
}

fn embedding_bridges(
    g: &Graph,
    inc: &[Vec<EdgeId>],
    in_emb_edge: &[bool],
    in_emb_vertex: &[bool],
) -> Vec<EmbBridge> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    // components of unembedded vertices
    let mut comp = vec![usize::MAX; n];
    for start in 0..n {
        if in_emb_vertex[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut interior = vec![start];
        let mut attachments = alloc::collections::BTreeSet::new();
        let mut edges = Vec::new();
        while let Some(v) = stack.pop() {
            for &e in &inc[v] {
                let w = g.other_endpoint(e, v);
                edges.push(e);
                if in_emb_vertex[w] {
                    attachments.insert(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = id;
                    interior.push(w);
                    stack.push(w);
                }
            }
        }
        interior.sort_unstable();
        out.push(EmbBridge {
            attachments: attachments.into_iter().collect(),
            edges,
            interior,
        });
    }
    // chords: unembedded edges between embedded vertices
    for e in 0..g.edge_count() {
        if in_emb_edge[e] {
            continue;
        }
        let (u, v) = g.endpoints(e);
        if in_emb_vertex[u] && in_emb_vertex[v] {
            let mut attachments = vec![u, v];
            attachments.sort_unstable();
            attachments.dedup();
            out.push(EmbBridge { attachments, edges: vec![e], interior: Vec::new() });
        }
    }
    out
}

/// A path between two distinct attachments of the bridge, alternating
/// vertices fully inside the bridge.
fn bridge_path(g: &Graph, inc: &[Vec<EdgeId>], bridge: &EmbBridge, in_emb_vertex: &[bool]) -> Vec<Dart> {
    if bridge.interior.is_empty() {
        let e = bridge.edges[0];
        let (u, _) = g.endpoints(e);
        let d = if u == bridge.attachments[0] { (e, 0) } else { (e, 1) };
        return vec![d];
    }
    // BFS inside the bridge from one attachment to another
    let start = bridge.attachments[0];
    let inside: alloc::collections::BTreeSet<VertexId> = bridge.interior.iter().copied().collect();
    let mut prev: BTreeMap<VertexId, Dart> = BTreeMap::new();
    let mut queue: alloc::collections::VecDeque<VertexId> = [start].into_iter().collect();
    let mut goal = None;
    'search: while let Some(v) = queue.pop_front() {
        for &e in &inc[v] {
            if in_emb_vertex[v] && v != start {
                continue;
            }
            let w = g.other_endpoint(e, v);
            let dart = if g.endpoints(e).0 == v { (e, 0) } else { (e, 1) };
            if w != start && in_emb_vertex[w] && bridge.attachments.contains(&w) {
                prev.insert(w, dart);
                goal = Some(w);
                break 'search;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, dart);
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = goal.expect("bridge has a second attachment");
    while v != start {
        let d = prev[&v];
        path.push(d);
        v = dart_tail(g, d);
    }
    path.reverse();
    path
}

fn embed_path(
    g: &Graph,
    faces: &mut Vec<Vec<Dart>>,
    fi: usize,
    path: &[Dart],
    in_emb_edge: &mut [bool],
    in_emb_vertex: &mut [bool],
) {
    let u = dart_tail(g, path[0]);
    let w = dart_head(g, *path.last().unwrap());
    let face = faces.swap_remove(fi);
    let pos_u = face.iter().position(|&d| dart_tail(g, d) == u).unwrap();
    let rotated: Vec<Dart> = face[pos_u..].iter().chain(&face[..pos_u]).copied().collect();
    let pos_w = rotated.iter().position(|&d| dart_tail(g, d) == w).unwrap();
    // rotated = u ... (w ...) ; insert the path u->w and its reverse
    let reverse: Vec<Dart> = path.iter().rev().map(|&d| dart_flip(d)).collect();
    let mut f1: Vec<Dart> = path.to_vec();
    f1.extend_from_slice(&rotated[pos_w..]);
    let mut f2: Vec<Dart> = rotated[..pos_w].to_vec();
    f2.extend_from_slice(&reverse);
    faces.push(f1);
    faces.push(f2);
    for &d in path {
        in_emb_edge[d.0] = true;
        in_emb_vertex[dart_tail(g, d)] = true;
        in_emb_vertex[dart_head(g, d)] = true;
    }
}

fn some_cycle(g: &Graph) -> Option<Vec<Dart>> {
    // multigraph-aware: a pair of parallel edges is a digon
    let m = g.edge_count();
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            let (a, b) = g.endpoints(e1);
            let (c, d) = g.endpoints(e2);
            if (a, b) == (c, d) {
                return Some(vec![(e1, 0), (e2, 1)]);
            }
            if (a, b) == (d, c) {
                return Some(vec![(e1, 0), (e2, 0)]);
            }
        }
    }
    // DFS for a cycle in the underlying simple graph
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut parent_edge = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 active, 2 done
    let mut order = Vec::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, via)) = stack.pop() {
            if state[v] == 1 {
                continue;
            }
            state[v] = 1;
            parent_edge[v] = via;
            order.push(v);
            for &e in &inc[v] {
                if e == via {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if state[w] == 1 {
                    // back edge closes a cycle w .. v -e- w
                    let mut darts = Vec::new();
                    let mut x = v;
                    while x != w {
                        let pe = parent_edge[x];
                        let d = if g.endpoints(pe).1 == x { (pe, 0) } else { (pe, 1) };
                        darts.push(d);
                        x = dart_tail(g, d);
                    }
                    darts.reverse();
                    darts.push(if g.endpoints(e).0 == v { (e, 0) } else { (e, 1) });
                    return Some(darts);
                } else if state[w] == 0 {
                    stack.push((w, e));
                }
            }
        }
        for &v in &order {
            state[v] = 2;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families;

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_embeds_with_four_faces() {
        let g = k4();
        let emb = planar_embed(&g).unwrap().expect("K4 is planar");
        assert_eq!(emb.face_count(), 4);
        for f in emb.faces() {
            assert_eq!(f.len(), 3);
            assert!(f.is_cycle());
        }
    }

    #[test]
    fn face_walks_double_count_edges() {
        for g in [k4(), families::ladder(6).unwrap(), families::ladder(8).unwrap()] {
            if let Some(emb) = planar_embed(&g).unwrap() {
                let total: usize = emb.faces().iter().map(FacialWalk::len).sum();
                assert_eq!(total, 2 * g.edge_count());
            }
        }
    }

    #[test]
    fn octahedron_has_eight_triangles() {
        let emb = families::antiprism(3).into_embedding();
        assert_eq!(emb.face_count(), 8);
        assert!(emb.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn antiprism4_faces() {
        let emb = families::antiprism(4).into_embedding();
        assert_eq!(emb.face_count(), 10);
        let mut lens: Vec<usize> = emb.faces().iter().map(FacialWalk::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 3, 3, 3, 3, 3, 3, 4, 4]);
    }

    #[test]
    fn digon_has_two_faces() {
        let g = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let emb = planar_embed(&g).unwrap().unwrap();
        assert_eq!(emb.face_count(), 2);
        assert!(emb.faces().iter().all(|f| f.len() == 2 && f.is_cycle()));
    }

    #[test]
    fn petersen_is_not_planar() {
        assert!(planar_embed(&families::petersen()).unwrap().is_none());
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        let k5 = Graph::new(5, (0..5).flat_map(|i| ((i + 1)..5).map(move |j| (i, j))).collect()).unwrap();
        assert!(planar_embed(&k5).unwrap().is_none());
        let k33 = Graph::new(
            6,
            vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(planar_embed(&k33).unwrap().is_none());
    }

    #[test]
    fn antiprism5_has_twelve_faces() {
        let g = families::antiprism(5).into_graph();
        let emb = planar_embed(&g).unwrap().unwrap();
        assert_eq!(emb.face_count(), 12);
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let cube = families::ladder(8).unwrap();
        let emb = planar_embed(&cube).unwrap().unwrap();
        let (dg, _demb, bij) = dual(&emb).unwrap();
        assert_eq!(bij.len(), 12);
        assert!(crate::iso::are_isomorphic(&dg, &families::antiprism(3).into_graph()));
    }

    #[test]
    fn k4_is_self_dual() {
        let emb = planar_embed(&k4()).unwrap().unwrap();
        let (dg, _, _) = dual(&emb).unwrap();
        assert!(crate::iso::are_isomorphic(&dg, &k4()));
    }

    #[test]
    fn double_dual_identity() {
        for g in [
            k4(),
            families::ladder(6).unwrap(),
            families::ladder(8).unwrap(),
            families::antiprism(4).into_graph(),
        ] {
            let emb = planar_embed(&g).unwrap().unwrap();
            let (_, demb, _) = dual(&emb).unwrap();
            let (ddg, _, _) = dual(&demb).unwrap();
            assert!(crate::iso::are_isomorphic(&ddg, &g));
        }
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        // dart (0,0) listed at the wrong vertex
        let rot = vec![vec![(1u8, 0u8)], vec![], vec![]];
        let rot: Vec<Vec<Dart>> = rot
            .into_iter()
            .map(|r| r.into_iter().map(|(e, end)| (e as usize, end)).collect())
            .collect();
        assert!(PlaneEmbedding::new(g, rot).is_err());
    }

    #[test]
    fn torus_rotation_of_k5_minus_fails_euler() {
        // K4 with a rotation giving genus 1: swap two darts at one vertex.
        let g = k4();
        let emb = planar_embed(&g).unwrap().unwrap();
        let mut rot = emb.rotation().to_vec();
        rot[0].swap(0, 1);
        match PlaneEmbedding::new(g, rot) {
            Err(Error::NotGenusZero { .. }) => {}
            other => panic!("expected Euler failure, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_edge_makes_digon_face() {
        let emb = planar_embed(&k4()).unwrap().unwrap();
        let dup = emb.duplicate_edge(0).unwrap();
        assert_eq!(dup.face_count(), 5);
        assert_eq!(dup.faces().iter().filter(|f| f.len() == 2).count(), 1);
    }

    #[test]
    fn cycle_sides_of_hamiltonian() {
        let emb = families::antiprism(3).into_embedding();
        let h = crate::cycles::enumerate_hamiltonian(emb.graph())[0].clone();
        let (a, b) = emb.cycle_sides(&h);
        assert_eq!(a.len() + b.len(), 8);
        assert_eq!(a.len(), 4);
    }
}
