//! Exact chromatic polynomials of hypergraphs.
//!
//! Three independent routes to χ(G, x): counting proper colorings, summing
//! `(−1)^|A| x^k(⟨G:A⟩)` over every edge subset, and the same sum restricted
//! to subsets that include no broken cycle, where cycles in hypergraphs are
//! δ-cycles (minimal edge sets in which no single edge deletion changes the
//! component count). The [`generalized`] module extends the pruned sum to any
//! sign-alternating group-valued function and any subset of broken cycles.

pub mod chromatic;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod format;
pub mod generalized;
pub mod hypergraph;
pub mod polynomial;
pub mod random;
mod union_find;

pub use chromatic::{
    chromatic_broken_cycle, chromatic_subset_expansion, count_proper_colorings, is_proper,
    pruning_stats, Coloring, Expansion, PruningStats,
};
pub use cycles::{
    block_index, broken_cycles, enumerate_delta_cycles, is_delta_cyclic, is_delta_cyclic_witness,
    is_removable, max_closing_edge, min_closing_edge, BrokenCycle, CycleIndex, DeltaCycle,
};
pub use error::{Error, Result, Violation};
pub use format::{parse_hypergraph, parse_json, read_hypergraph};
pub use hypergraph::{
    restricted_component_count, spanning_component_count, validate, EdgeId, EdgeOrder, EdgeSubset,
    Hypergraph, VertexId,
};
pub use polynomial::{evaluate, Polynomial};
