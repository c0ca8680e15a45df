//! Isomorphism testing for desk-scale multigraphs via canonical forms.
//!
//! Colour refinement followed by individualisation of the smallest
//! non-singleton class; the canonical form is the minimum relabeled edge
//! list over all discrete refinements explored. Exponential in the worst
//! case, fine for the graph orders this crate works at.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};

/// Canonical representative: vertex count plus the lexicographically least
/// relabeled edge multiset (each pair sorted, loops as (v, v)).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { vertex_count: 0, edges: Vec::new() };
    }
    // Multiplicity matrix, loops counted once per loop edge.
    let mut mult = vec![0u32; n * n];
    for &(u, v) in g.edges() {
        mult[u * n + v] += 1;
        if u != v {
            mult[v * n + u] += 1;
        }
    }
    let init: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut best: Option<Vec<(VertexId, VertexId)>> = None;
    search(n, &mult, refine(n, &mult, init), &mut best);
    CanonicalForm { vertex_count: n, edges: best.unwrap() }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

fn refine(n: usize, mult: &[u32], mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let mut signature: Vec<(u32, Vec<(u32, u32)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbr: Vec<(u32, u32)> = (0..n)
                .filter(|&w| mult[v * n + w] > 0)
                .map(|w| (colors[w], mult[v * n + w]))
                .collect();
            nbr.sort_unstable();
            signature.push((colors[v], nbr));
        }
        let mut order: BTreeMap<&(u32, Vec<(u32, u32)>), u32> = BTreeMap::new();
        for sig in &signature {
            let next = order.len() as u32;
            order.entry(sig).or_insert(next);
        }
        let new_colors: Vec<u32> = signature.iter().map(|s| order[s]).collect();
        let classes_before = count_classes(&colors);
        let classes_after = count_classes(&new_colors);
        colors = new_colors;
        if classes_after == classes_before {
            return colors;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn search(n: usize, mult: &[u32], colors: Vec<u32>, best: &mut Option<Vec<(VertexId, VertexId)>>) {
    // Find the smallest non-singleton class (ties: lowest colour).
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colors {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let target = class_size
        .iter()
        .filter(|&(_, &sz)| sz > 1)
        .min_by_key(|&(c, &sz)| (sz, *c))
        .map(|(&c, _)| c);
    match target {
        None => {
            // Discrete: colours are a permutation.
            let mut perm = vec![0usize; n]; // old -> new
            let mut by_color: Vec<(u32, usize)> = colors.iter().copied().zip(0..n).collect();
            by_color.sort_unstable();
            for (new, &(_, old)) in by_color.iter().enumerate() {
                perm[old] = new;
            }
            let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
            for u in 0..n {
                for w in u..n {
                    for _ in 0..mult[u * n + w] {
                        let (a, b) = (perm[u].min(perm[w]), perm[u].max(perm[w]));
                        edges.push((a, b));
                    }
                }
            }
            edges.sort_unstable();
            if best.as_ref().map_or(true, |b| edges < *b) {
                *best = Some(edges);
            }
        }
        Some(c) => {
            let fresh = colors.iter().copied().max().unwrap() + 1;
            for v in 0..n {
                if colors[v] == c {
                    let mut next = colors.clone();
                    next[v] = fresh;
                    search(n, mult, refine(n, mult, next), best);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn relabeled_petersen_is_isomorphic() {
        let g = crate::constructions::families::petersen();
        let perm: Vec<usize> = vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
        let edges = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::new(10, edges).unwrap();
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn k33_differs_from_prism() {
        let k33 = Graph::new(6, vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let prism = crate::constructions::families::ladder(6).unwrap();
        assert!(!are_isomorphic(&k33, &prism));
    }

    #[test]
    fn multiplicities_distinguish() {
        let digon_path = Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!are_isomorphic(&digon_path, &triangle));
    }
}
