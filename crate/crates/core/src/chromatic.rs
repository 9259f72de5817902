//! Chromatic polynomials of hypergraphs by three independent routes:
//! exhaustive coloring counts, the full edge-subset expansion, and the
//! expansion restricted to subsets that include no broken cycle.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{BrokenCycle, CycleIndex};
use crate::error::{Error, Result};
use crate::hypergraph::{
    ensure_within_cap, spanning_component_count, EdgeOrder, EdgeSubset, Hypergraph,
};
use crate::polynomial::Polynomial;

/// Most colorings `count_proper_colorings` will enumerate.
pub const COLORING_BUDGET: u64 = 1 << 30;

/// Subsets per parallel work unit.
const CHUNK: u64 = 1 << 12;

/// A total map from vertices to colors `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Self> {
        if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(Error::InvalidColoring(format!(
                "color {bad} outside 1..={palette}"
            )));
        }
        Ok(Self { colors, palette })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }
}

fn has_monochromatic_edge(g: &Hypergraph, colors: &[u32]) -> bool {
    g.edges().any(|(_, members)| {
        let first = colors[members[0]];
        members[1..].iter().all(|&v| colors[v] == first)
    })
}

/// True iff no edge of `g` is monochromatic under `coloring`.
pub fn is_proper(g: &Hypergraph, coloring: &Coloring) -> Result<bool> {
    if coloring.colors.len() != g.vertex_count() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} of {} vertices",
            coloring.colors.len(),
            g.vertex_count()
        )));
    }
    Ok(!has_monochromatic_edge(g, &coloring.colors))
}

/// Number of proper `k`-colorings, by visiting all `k^|V|` colorings.
pub fn count_proper_colorings(g: &Hypergraph, k: u64) -> Result<u64> {
    let n = g.vertex_count();
    let states = u32::try_from(n)
        .ok()
        .and_then(|n| k.checked_pow(n))
        .filter(|&s| s <= COLORING_BUDGET)
        .ok_or(Error::ColoringBudgetExceeded {
            colors: k,
            vertices: n,
        })?;
    if states == 0 {
        return Ok(0);
    }
    let k = k as u32;
    // Odometer over colors 1..=k, least significant digit first.
    let mut colors = vec![1u32; n];
    let mut proper = 0u64;
    loop {
        if !has_monochromatic_edge(g, &colors) {
            proper += 1;
        }
        let mut digit = 0;
        loop {
            if digit == n {
                return Ok(proper);
            }
            if colors[digit] < k {
                colors[digit] += 1;
                break;
            }
            colors[digit] = 1;
            digit += 1;
        }
    }
}

/// Result of an alternating subset sum with its term counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub polynomial: Polynomial,
    pub total_terms: u64,
    pub admissible_terms: u64,
}

/// Σ (−1)^|A| x^k(⟨G:A⟩) over the subsets `A` accepted by `admit`.
fn alternating_sum<F>(g: &Hypergraph, admit: F) -> Expansion
where
    F: Fn(EdgeSubset) -> bool + Sync,
{
    let total = 1u64 << g.edge_count();
    let width = g.vertex_count() + 1;
    // Each coefficient is a sum of at most 2^30 unit terms, so i64 is exact.
    let (coeffs, admitted) = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| {
            let mut local = vec![0i64; width];
            let mut admitted = 0u64;
            let end = ((chunk + 1) * CHUNK).min(total);
            for bits in chunk * CHUNK..end {
                let a = EdgeSubset::from_bits(bits);
                if !admit(a) {
                    continue;
                }
                admitted += 1;
                let k = spanning_component_count(g, a);
                local[k] += if a.len().is_multiple_of(2) { 1 } else { -1 };
            }
            (local, admitted)
        })
        .reduce(
            || (vec![0i64; width], 0),
            |(mut acc, n), (local, m)| {
                acc.iter_mut().zip(local).for_each(|(x, y)| *x += y);
                (acc, n + m)
            },
        );
    Expansion {
        polynomial: Polynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect()),
        total_terms: total,
        admissible_terms: admitted,
    }
}

fn includes_any(broken: &[BrokenCycle], a: EdgeSubset) -> bool {
    broken.iter().any(|b| b.is_contained_in(a))
}

/// The full edge-subset expansion with term counts.
pub fn expand_subsets(g: &Hypergraph) -> Result<Expansion> {
    ensure_within_cap(g)?;
    Ok(alternating_sum(g, |_| true))
}

/// The broken-cycle-free expansion with term counts.
pub fn expand_broken_cycle(g: &Hypergraph, order: &EdgeOrder) -> Result<Expansion> {
    ensure_within_cap(g)?;
    order.check_for(g)?;
    let broken = CycleIndex::new(g)?.broken_cycles(order);
    let simple = g.is_simple_graph();
    let n = g.vertex_count();
    let expansion = alternating_sum(g, |a| {
        let admitted = !includes_any(&broken, a);
        // Broken-cycle-free edge sets of a simple graph are forests.
        debug_assert!(
            !(admitted && simple) || spanning_component_count(g, a) == n - a.len(),
            "broken-cycle-free subset {a} is not a forest"
        );
        admitted
    });
    Ok(expansion)
}

/// χ(G, x) = Σ_{A ⊆ E} (−1)^|A| x^k(⟨G:A⟩).
pub fn chromatic_subset_expansion(g: &Hypergraph) -> Result<Polynomial> {
    expand_subsets(g).map(|e| e.polynomial)
}

/// χ(G, x) summed only over subsets that include no broken cycle under
/// `order`.
pub fn chromatic_broken_cycle(g: &Hypergraph, order: &EdgeOrder) -> Result<Polynomial> {
    expand_broken_cycle(g, order).map(|e| e.polynomial)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PruningStats {
    pub total_subsets: u64,
    pub admissible_subsets: u64,
    pub pruned_fraction: f64,
}

/// How many of the 2^|E| subsets survive broken-cycle pruning under `order`.
pub fn pruning_stats(g: &Hypergraph, order: &EdgeOrder) -> Result<PruningStats> {
    ensure_within_cap(g)?;
    order.check_for(g)?;
    let broken = CycleIndex::new(g)?.broken_cycles(order);
    let total = 1u64 << g.edge_count();
    let admissible = (0..total)
        .into_par_iter()
        .filter(|&bits| !includes_any(&broken, EdgeSubset::from_bits(bits)))
        .count() as u64;
    Ok(PruningStats {
        total_subsets: total,
        admissible_subsets: admissible,
        pruned_fraction: 1.0 - admissible as f64 / total as f64,
    })
}
