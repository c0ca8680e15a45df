//! Cycle double covers of small graphs: exact search and constructive covers.
//!
//! A cycle double cover (CDC) of a graph is a multiset of cycles such that
//! every edge lies in exactly two of them (counting multiplicity). This crate
//! provides
//!
//! - labeled multigraphs with stable edge identities ([`Graph`]),
//! - combinatorial plane embeddings via rotation systems, face tracing and
//!   duals ([`PlaneEmbedding`]),
//! - enumeration of simple cycles and Hamiltonian cycles ([`CycleCatalog`]),
//! - exact minimum cycle decompositions of even subgraphs,
//! - an exact branch-and-bound solver for minimum, counted and enumerated
//!   CDCs ([`solver`]),
//! - constructive covers for several named graph families (antiprisms,
//!   nested-ring graphs, ladders, double wheels, Petersen joins), ring
//!   exchanges on face covers, Jackson-Yu decompositions of triangulations,
//!   and the Seyffarth-style small covers of planar 4-connected graphs.
//!
//! Everything is deterministic: cycles are canonicalised as sorted edge-id
//! lists and all collections iterate in that order. The crate is `no_std`
//! (with `alloc`); IO, file formats and the CLI live in the companion crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bounds;
pub mod cdc;
pub mod coloring;
pub mod constructions;
pub mod cycles;
pub mod decompose;
pub mod embed;
mod error;
pub mod graph;
pub mod iso;
pub mod solver;

pub use cdc::{Cdc, CdcCensus, CoverageReport};
pub use coloring::FourFaceColouring;
pub use cycles::CycleCatalog;
pub use decompose::CycleDecomposition;
pub use embed::{FacialWalk, PlaneEmbedding};
pub use error::{Error, Result};
pub use graph::{Cycle, EdgeId, EdgeSet, EvenSubgraph, Graph, VertexId};
