//! Cycle double covers as verified values.
//!
//! A cover is a multiset of cycles with multiplicities 1 or 2 in canonical
//! (sorted) entry order; its size is the multiplicity sum. A cover is true
//! when no cycle appears twice. Multiplicity 3 is impossible: some edge of
//! the cycle would be covered three times.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdgeId, Graph, GraphFingerprint};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cdc {
    parent: GraphFingerprint,
    entries: Vec<(Cycle, u8)>,
}

impl Cdc {
    /// Builds a cover from cycles (repeats allowed in the input) and checks
    /// that every edge of the parent is covered exactly twice.
    pub fn new(g: &Graph, cycles: Vec<Cycle>) -> Result<Cdc> {
        let mut entries: Vec<(Cycle, u8)> = Vec::new();
        let mut sorted = cycles;
        sorted.sort_unstable();
        for c in sorted {
            if c.parent() != g.fingerprint() {
                return Err(Error::ForeignCycle);
            }
            match entries.last_mut() {
                Some((prev, mult)) if *prev == c => {
                    if *mult == 2 {
                        return Err(Error::NotACycle); // would overcover
                    }
                    *mult = 2;
                }
                _ => entries.push((c, 1)),
            }
        }
        let cdc = Cdc { parent: g.fingerprint(), entries };
        let report = cdc.coverage(g)?;
        if !report.is_double_cover() {
            return Err(Error::NotACycle);
        }
        Ok(cdc)
    }

    /// Builds from (cycle, multiplicity) pairs.
    pub fn from_entries(g: &Graph, entries: Vec<(Cycle, u8)>) -> Result<Cdc> {
        let mut flat = Vec::new();
        for (c, mult) in entries {
            if !(1..=2).contains(&mult) {
                return Err(Error::ParameterRange("multiplicity must be 1 or 2"));
            }
            for _ in 0..mult {
                flat.push(c.clone());
            }
        }
        Cdc::new(g, flat)
    }

    pub fn parent(&self) -> GraphFingerprint {
        self.parent
    }

    /// Canonically ordered entries.
    pub fn entries(&self) -> &[(Cycle, u8)] {
        &self.entries
    }

    /// Multiplicity sum.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m as usize).sum()
    }

    /// True iff no cycle appears twice.
    pub fn is_true_cdc(&self) -> bool {
        self.entries.iter().all(|&(_, m)| m == 1)
    }

    pub fn cycles_with_multiplicity(&self) -> impl Iterator<Item = (&Cycle, u8)> {
        self.entries.iter().map(|(c, m)| (c, *m))
    }

    /// Cycles flattened by multiplicity.
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::with_capacity(self.size());
        for (c, m) in &self.entries {
            for _ in 0..*m {
                out.push(c.clone());
            }
        }
        out
    }

    pub fn multiplicity_of(&self, c: &Cycle) -> u8 {
        self.entries
            .binary_search_by(|(e, _)| e.cmp(c))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.multiplicity_of(c) > 0
    }

    /// Per-edge coverage of the parent by this cover.
    pub fn coverage(&self, g: &Graph) -> Result<CoverageReport> {
        if self.parent != g.fingerprint() {
            return Err(Error::ForeignCycle);
        }
        let mut per_edge = vec![0u8; g.edge_count()];
        for (c, m) in &self.entries {
            for e in c.edges().iter() {
                if e >= g.edge_count() {
                    return Err(Error::ForeignCycle);
                }
                per_edge[e] = per_edge[e].saturating_add(*m);
            }
        }
        Ok(CoverageReport { per_edge })
    }

    /// Number of cycles longer than `bound` (with multiplicity).
    pub fn long_cycles(&self, bound: usize) -> usize {
        self.entries
            .iter()
            .filter(|(c, _)| c.len() > bound)
            .map(|&(_, m)| m as usize)
            .sum()
    }
}

/// Edge-by-edge coverage vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    per_edge: Vec<u8>,
}

impl CoverageReport {
    pub fn per_edge(&self) -> &[u8] {
        &self.per_edge
    }

    pub fn is_double_cover(&self) -> bool {
        self.per_edge.iter().all(|&c| c == 2)
    }

    /// Edges covered a number of times different from two.
    pub fn defective_edges(&self) -> Vec<(EdgeId, u8)> {
        self.per_edge
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 2)
            .map(|(e, &c)| (e, c))
            .collect()
    }
}

/// Checks whether a candidate collection of cycles double-covers `g`.
/// Structural problems (cycles of a different graph) are errors, distinct
/// from a clean `false`.
pub fn verify_cdc(g: &Graph, candidate: &Cdc) -> Result<(bool, CoverageReport)> {
    let report = candidate.coverage(g)?;
    Ok((report.is_double_cover(), report))
}

/// Exact counts of covers and true covers by size, with the minima.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CdcCensus {
    /// (size, total count, true count), ascending in size, zero rows kept out.
    pub per_size: Vec<(usize, u64, u64)>,
}

impl CdcCensus {
    /// Minimum cover size, `None` when no cover exists within the census range.
    pub fn min_size(&self) -> Option<usize> {
        self.per_size.iter().find(|r| r.1 > 0).map(|r| r.0)
    }

    pub fn min_true_size(&self) -> Option<usize> {
        self.per_size.iter().find(|r| r.2 > 0).map(|r| r.0)
    }

    pub fn count_at(&self, k: usize) -> u64 {
        self.per_size.iter().find(|r| r.0 == k).map_or(0, |r| r.1)
    }

    pub fn true_count_at(&self, k: usize) -> u64 {
        self.per_size.iter().find(|r| r.0 == k).map_or(0, |r| r.2)
    }

    pub fn total(&self) -> u64 {
        self.per_size.iter().map(|r| r.1).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families;
    use crate::embed::planar_embed;

    #[test]
    fn face_boundaries_are_a_true_cdc() {
        for g in [
            families::ladder(6).unwrap(),
            families::ladder(8).unwrap(),
            families::antiprism(4).into_graph(),
        ] {
            let emb = planar_embed(&g).unwrap().unwrap();
            let cycles: Vec<Cycle> = emb
                .faces()
                .iter()
                .map(|f| f.as_cycle(&g).expect("2-connected faces are cycles"))
                .collect();
            let cdc = Cdc::new(&g, cycles).unwrap();
            assert!(cdc.is_true_cdc());
            assert_eq!(cdc.size(), emb.face_count());
            assert!(verify_cdc(&g, &cdc).unwrap().0);
        }
    }

    #[test]
    fn doubled_cycle_covers_cycle_graph() {
        let c5 = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = Cycle::new(&c5, (0..5).collect()).unwrap();
        let cdc = Cdc::new(&c5, vec![c.clone(), c]).unwrap();
        assert_eq!(cdc.size(), 2);
        assert!(!cdc.is_true_cdc());
    }

    #[test]
    fn undercoverage_is_reported() {
        let g = families::antiprism(3).into_graph();
        let emb = planar_embed(&g).unwrap().unwrap();
        let mut cycles: Vec<Cycle> = emb.faces().iter().map(|f| f.as_cycle(&g).unwrap()).collect();
        cycles.pop();
        // seven faces of the octahedron: three edges covered once
        let entries: Vec<(Cycle, u8)> = cycles.into_iter().map(|c| (c, 1)).collect();
        let mut per_edge = vec![0u8; g.edge_count()];
        for (c, _) in &entries {
            for e in c.edges().iter() {
                per_edge[e] += 1;
            }
        }
        let short: Vec<EdgeId> = per_edge
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 2)
            .map(|(e, _)| e)
            .collect();
        assert_eq!(short.len(), 3);
        // Cdc::new rejects it
        assert!(Cdc::from_entries(&g, entries).is_err());
    }

    #[test]
    fn foreign_cycle_is_structural_error() {
        let g = families::petersen();
        let h = families::ladder(6).unwrap();
        // any valid cycle of h is foreign to g
        let cyc = crate::cycles::full_catalog(&h).unwrap().cycles()[0].clone();
        assert_eq!(Cdc::new(&g, vec![cyc]).unwrap_err(), Error::ForeignCycle);
    }

    #[test]
    fn multiplicity_three_is_rejected() {
        let c3 = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = Cycle::new(&c3, (0..3).collect()).unwrap();
        assert!(Cdc::new(&c3, vec![c.clone(), c.clone(), c]).is_err());
    }
}
