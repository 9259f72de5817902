//! δ-cycles and broken cycles.
//!
//! An edge subset `A` is a *witness* when it is non-empty and deleting any one
//! of its edges leaves the component count of `(V(A), A)` unchanged. A
//! δ-cycle is an inclusion-minimal witness. Witnesses are always taken over
//! the vertex set `V(A)` covered by their edges: extra isolated vertices shift
//! both sides of the removability test equally, so the edge set alone decides
//! the question.
//!
//! A broken cycle is a δ-cycle minus its largest edge under an [`EdgeOrder`].
//! The closing-edge and block-index helpers expose the pairing constructions
//! behind the pruned chromatic expansion so they can be checked directly.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{
    ensure_within_cap, restricted_component_count, spanning_component_count, EdgeId, EdgeOrder,
    EdgeSubset, Hypergraph,
};

/// A δ-cycle, stored by its edge ids. Its vertex set is the union of its edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeltaCycle {
    edges: EdgeSubset,
}

impl DeltaCycle {
    pub fn edges(&self) -> EdgeSubset {
        self.edges
    }

    pub fn vertices(&self, g: &Hypergraph) -> Vec<usize> {
        let mut vertices: Vec<usize> = self
            .edges
            .iter()
            .flat_map(|e| g.edge(e).iter().copied())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        vertices
    }
}

/// A δ-cycle with its maximal edge removed. May be empty when the δ-cycle is
/// a single edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrokenCycle {
    edges: EdgeSubset,
}

impl BrokenCycle {
    pub fn new(edges: EdgeSubset) -> Self {
        Self { edges }
    }

    pub fn edges(&self) -> EdgeSubset {
        self.edges
    }

    pub fn is_contained_in(&self, a: EdgeSubset) -> bool {
        self.edges.is_subset_of(a)
    }
}

/// Whether `e` can be deleted from `(V(A), A)` without changing the number of
/// connected components. Vertices of `e` that lose their last edge stay in
/// the vertex set as isolated components.
pub fn is_removable(g: &Hypergraph, a: EdgeSubset, e: EdgeId) -> Result<bool> {
    if !a.contains(e) {
        return Err(Error::EdgeNotInSubset { edge: e.0 });
    }
    let covered = g.covered_vertex_count(a);
    let rest = a.without(e);
    let orphaned = covered - g.covered_vertex_count(rest);
    Ok(restricted_component_count(g, a) == restricted_component_count(g, rest) + orphaned)
}

/// Same test as [`is_removable`] for every member at once. Uses the spanning
/// form, which shifts both counts by the same number of isolated vertices.
fn all_removable(g: &Hypergraph, a: EdgeSubset) -> bool {
    let k = spanning_component_count(g, a);
    a.iter()
        .all(|e| spanning_component_count(g, a.without(e)) == k)
}

/// True iff `a` is non-empty and every edge of `a` is removable.
pub fn is_delta_cyclic_witness(g: &Hypergraph, a: EdgeSubset) -> bool {
    !a.is_empty() && all_removable(g, a)
}

/// True iff some non-empty edge subset of `g` is a witness.
pub fn is_delta_cyclic(g: &Hypergraph) -> Result<bool> {
    ensure_within_cap(g)?;
    Ok(EdgeSubset::all(g.edge_count())
        .skip(1)
        .any(|a| is_delta_cyclic_witness(g, a)))
}

/// Masks over `m` bits with exactly `k` bits set, in increasing order.
fn masks_with_popcount(m: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << m;
    let mut next = if k == 0 || k > m {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let current = next?;
        // Gosper's hack: the next larger mask with the same popcount.
        let low = current & current.wrapping_neg();
        let ripple = current + low;
        let successor = (((ripple ^ current) >> 2) / low) | ripple;
        next = (successor < limit).then_some(successor);
        Some(current)
    })
}

/// All δ-cycles of `g`, sorted by edge mask.
///
/// Subsets are scanned by increasing size; a subset that contains an
/// already-found δ-cycle cannot be minimal and is skipped.
pub fn enumerate_delta_cycles(g: &Hypergraph) -> Result<Vec<DeltaCycle>> {
    ensure_within_cap(g)?;
    let m = g.edge_count();
    let mut found: Vec<EdgeSubset> = Vec::new();
    for size in 1..=m {
        let before = found.len();
        for mask in masks_with_popcount(m, size) {
            let a = EdgeSubset::from_bits(mask);
            if found[..before].iter().any(|c| c.is_subset_of(a)) {
                continue;
            }
            if all_removable(g, a) {
                found.push(a);
            }
        }
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|edges| DeltaCycle { edges })
        .collect())
}

/// δ-cycles of one hypergraph, computed once and reused for broken cycles
/// and closing edges under any number of orders.
#[derive(Clone, Debug)]
pub struct CycleIndex {
    cycles: Vec<DeltaCycle>,
}

impl CycleIndex {
    pub fn new(g: &Hypergraph) -> Result<Self> {
        Ok(Self {
            cycles: enumerate_delta_cycles(g)?,
        })
    }

    pub fn cycles(&self) -> &[DeltaCycle] {
        &self.cycles
    }

    /// The set of broken cycles under `order`, deduplicated and sorted.
    pub fn broken_cycles(&self, order: &EdgeOrder) -> Vec<BrokenCycle> {
        let set: BTreeSet<EdgeSubset> = self
            .cycles
            .iter()
            .map(|c| {
                let top = order
                    .max_of(c.edges)
                    .expect("δ-cycles have at least one edge");
                c.edges.without(top)
            })
            .collect();
        set.into_iter().map(BrokenCycle::new).collect()
    }

    /// Edges `e ∉ B` for which `B ∪ {e}` is the edge set of a δ-cycle.
    pub fn closing_edges(&self, b: EdgeSubset) -> EdgeSubset {
        self.cycles
            .iter()
            .filter(|c| b.is_proper_subset_of(c.edges) && c.edges.len() == b.len() + 1)
            .fold(EdgeSubset::EMPTY, |acc, c| {
                acc.union(EdgeSubset::from_bits(c.edges.bits() & !b.bits()))
            })
    }

    fn checked_closing_edges(&self, order: &EdgeOrder, b: &BrokenCycle) -> Result<EdgeSubset> {
        let closing = self.closing_edges(b.edges);
        if closing.is_empty() || !self.broken_cycles(order).contains(b) {
            return Err(Error::NotABrokenCycle {
                edges: b.edges.ids(),
            });
        }
        Ok(closing)
    }

    pub fn min_closing_edge(&self, order: &EdgeOrder, b: &BrokenCycle) -> Result<EdgeId> {
        let closing = self.checked_closing_edges(order, b)?;
        Ok(order.min_of(closing).expect("checked non-empty"))
    }

    pub fn max_closing_edge(&self, order: &EdgeOrder, b: &BrokenCycle) -> Result<EdgeId> {
        let closing = self.checked_closing_edges(order, b)?;
        Ok(order.max_of(closing).expect("checked non-empty"))
    }
}

/// The broken cycles of `g` under `order`.
pub fn broken_cycles(g: &Hypergraph, order: &EdgeOrder) -> Result<Vec<BrokenCycle>> {
    order.check_for(g)?;
    Ok(CycleIndex::new(g)?.broken_cycles(order))
}

/// The smallest edge `e` such that `B ∪ {e}` is a δ-cycle.
pub fn min_closing_edge(g: &Hypergraph, order: &EdgeOrder, b: &BrokenCycle) -> Result<EdgeId> {
    order.check_for(g)?;
    CycleIndex::new(g)?.min_closing_edge(order, b)
}

/// The largest edge `e` such that `B ∪ {e}` is a δ-cycle.
pub fn max_closing_edge(g: &Hypergraph, order: &EdgeOrder, b: &BrokenCycle) -> Result<EdgeId> {
    order.check_for(g)?;
    CycleIndex::new(g)?.max_closing_edge(order, b)
}

/// Which closing edge stands for a broken cycle when partitioning subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosingRule {
    /// The smallest of all closing edges.
    Minimal,
    /// The smallest closing edge that ranks above every edge of the broken
    /// cycle. Such an edge always exists for a broken cycle.
    MinimalAbove,
}

/// Partition of all edge subsets into blocks: block 0 holds the subsets that
/// include no broken cycle; block `i > 0` holds the subsets whose smallest
/// representative closing edge, over the broken cycles they include, is the
/// edge of rank `i`.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    /// Each broken cycle with the rank of its representative closing edge.
    entries: Vec<(EdgeSubset, usize)>,
    order: EdgeOrder,
}

impl BlockPartition {
    pub fn new(index: &CycleIndex, order: &EdgeOrder, rule: ClosingRule) -> Self {
        let entries = index
            .broken_cycles(order)
            .into_iter()
            .map(|b| {
                let mut closing = index.closing_edges(b.edges);
                if rule == ClosingRule::MinimalAbove {
                    let floor = order.max_of(b.edges).map_or(0, |e| order.rank(e));
                    closing = EdgeSubset::from_ids(
                        closing
                            .iter()
                            .filter(|&e| order.rank(e) > floor)
                            .map(|e| e.0),
                    );
                }
                let closer = order
                    .min_of(closing)
                    .expect("broken cycles have a closing edge");
                (b.edges, order.rank(closer))
            })
            .collect();
        Self {
            entries,
            order: order.clone(),
        }
    }

    pub fn block_of(&self, a: EdgeSubset) -> usize {
        self.entries
            .iter()
            .filter(|(b, _)| b.is_subset_of(a))
            .map(|&(_, rank)| rank)
            .min()
            .unwrap_or(0)
    }

    /// Searches for `i > 0` and `A ∌ e_i` where exactly one of `A` and
    /// `A ∪ {e_i}` lies in block `i`.
    pub fn pairing_violation(&self) -> Option<BlockPairingViolation> {
        let m = self.order.edge_count();
        for i in 1..=m {
            let e_i = self.order.edge_at(i);
            for a in EdgeSubset::all(m).filter(|a| !a.contains(e_i)) {
                let lower = self.block_of(a);
                let upper = self.block_of(a.with(e_i));
                if (lower == i) != (upper == i) {
                    return Some(BlockPairingViolation {
                        block: i,
                        subset: a,
                        block_of_subset: lower,
                        block_of_extended: upper,
                    });
                }
            }
        }
        None
    }
}

/// `A` and `A ∪ {e_i}` fall on different sides of block `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockPairingViolation {
    pub block: usize,
    pub subset: EdgeSubset,
    pub block_of_subset: usize,
    pub block_of_extended: usize,
}

/// 0 if `a` includes no broken cycle, otherwise the rank `i` of
/// `e_i = min { e(B) : B ⊆ A }` with `e(B)` the minimal closing edge.
pub fn block_index(g: &Hypergraph, order: &EdgeOrder, a: EdgeSubset) -> Result<usize> {
    order.check_for(g)?;
    g.check_subset(a)?;
    let index = CycleIndex::new(g)?;
    Ok(BlockPartition::new(&index, order, ClosingRule::Minimal).block_of(a))
}
