//! Named graph families and the constructive cover routines, one per
//! structural result: forced face covers of antiprisms and nested-ring
//! graphs, Hamiltonian-cycle based small covers of planar 4-connected
//! graphs, ring exchanges on face covers of cubic plane graphs, the
//! half-order cover of planar 2-connected cubic graphs, decomposition and
//! regluing of triangulations, cubic joins, and the three-even-subgraph
//! cover of Hamiltonian graphs.
//!
//! Every routine re-verifies its output cover before returning it.

pub mod cover;
pub mod cubic;
pub mod families;
pub mod forced;
pub mod rings;
pub mod seyffarth;
pub mod tri;

pub use cover::{hamiltonian_three_even_cover, join_equiv};
pub use cubic::{cubic_planar_half_cdc, merge_cubic_dual_cdcs};
pub use families::{antiprism, double_wheel, ladder, petersen, theorem2_graph, AntiprismLayout};
pub use forced::{antiprism_three_cdcs, theorem2_enumerate_fcdcs};
pub use rings::{cycle_ring_exchange, find_ring, wheel_ring_exchange, RingKind, RingStructure};
pub use seyffarth::seyffarth_small_cdc;
pub use tri::{jackson_yu_tree, merge_triangulation_cdcs, theorem3_upper_bound, DecompositionTree};
