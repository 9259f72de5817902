//! Hypergraph data model: vertices, identity-tagged hyperedges, edge orders,
//! edge subsets, and connected-component counting.
//!
//! Edges are a multiset. Two edges over the same vertex set keep distinct
//! [`EdgeId`]s, and every subset, δ-cycle and broken cycle elsewhere in the
//! crate is a set of edge ids, never a set of vertex sets.

use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::union_find::DisjointSet;

/// Largest edge count an [`EdgeSubset`] can address.
pub const MAX_SUBSET_EDGES: usize = 63;
/// Default cap on |E| for operations that enumerate all 2^|E| edge subsets.
pub const DEFAULT_EDGE_CAP: usize = 24;
/// The cap can be raised through `HYPERCHROME_EDGE_CAP`, but never past this.
pub const HARD_EDGE_CAP: usize = 30;
pub const EDGE_CAP_ENV: &str = "HYPERCHROME_EDGE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Current subset-enumeration cap: `HYPERCHROME_EDGE_CAP` when set to a
/// number, clamped to [`HARD_EDGE_CAP`], otherwise [`DEFAULT_EDGE_CAP`].
pub fn edge_cap() -> usize {
    std::env::var(EDGE_CAP_ENV)
        .ok()
        .and_then(|raw| raw.trim().parse::<usize>().ok())
        .map_or(DEFAULT_EDGE_CAP, |cap| cap.min(HARD_EDGE_CAP))
}

/// Fails with [`Error::EdgeCapExceeded`] when `g` is too large to enumerate
/// all of its edge subsets.
pub fn ensure_within_cap(g: &Hypergraph) -> Result<()> {
    let cap = edge_cap();
    if g.edge_count() > cap {
        return Err(Error::EdgeCapExceeded {
            edges: g.edge_count(),
            cap,
        });
    }
    Ok(())
}

/// Reports every violation of the hypergraph conditions for a raw edge table:
/// each edge must be non-empty and reference only vertices below
/// `vertex_count`.
pub fn validate(vertex_count: usize, edges: &[Vec<usize>]) -> Vec<Violation> {
    let mut violations = Vec::new();
    for (edge, members) in edges.iter().enumerate() {
        if members.is_empty() {
            violations.push(Violation::EmptyEdge { edge });
        }
        for &vertex in members {
            if vertex >= vertex_count {
                violations.push(Violation::VertexOutOfRange {
                    edge,
                    vertex,
                    vertex_count,
                });
            }
        }
    }
    violations
}

/// A finite hypergraph with a multiset of non-empty hyperedges.
///
/// The edge table order is stable and doubles as the default [`EdgeOrder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    vertex_labels: Option<Vec<String>>,
}

impl Hypergraph {
    /// Builds a hypergraph from a vertex count and an edge table. Vertex
    /// repeats inside one edge collapse, since an edge is a vertex set.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let violations = validate(vertex_count, &edges);
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        if edges.len() > MAX_SUBSET_EDGES {
            return Err(Error::TooManyEdges { edges: edges.len() });
        }
        let edges = edges
            .into_iter()
            .map(|mut members| {
                members.sort_unstable();
                members.dedup();
                members
            })
            .collect();
        Ok(Self {
            vertex_count,
            edges,
            vertex_labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::Json(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.vertex_labels = Some(labels);
        Ok(self)
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            vertex_labels: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted vertex set of edge `e`.
    pub fn edge(&self, e: EdgeId) -> &[usize] {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &[usize])> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, members)| (EdgeId(i), members.as_slice()))
    }

    pub fn vertex_labels(&self) -> Option<&[String]> {
        self.vertex_labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.vertex_labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edge_count())
    }

    /// Every edge has at most two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|members| members.len() <= 2)
    }

    /// A graph without loops or parallel edges.
    pub fn is_simple_graph(&self) -> bool {
        if !self.edges.iter().all(|members| members.len() == 2) {
            return false;
        }
        let mut sorted = self.edges.clone();
        sorted.sort();
        sorted.windows(2).all(|pair| pair[0] != pair[1])
    }

    pub fn has_singleton_edge(&self) -> bool {
        self.edges.iter().any(|members| members.len() == 1)
    }

    /// Fails unless every member of `a` is an edge of this hypergraph.
    pub fn check_subset(&self, a: EdgeSubset) -> Result<()> {
        if a.bits() & !EdgeSubset::full(self.edge_count()).bits() != 0 {
            return Err(Error::InvalidSubset(format!(
                "{a} references edges beyond {}",
                self.edge_count()
            )));
        }
        Ok(())
    }

    /// Number of distinct vertices covered by the edges of `a`, |V(A)|.
    pub fn covered_vertex_count(&self, a: EdgeSubset) -> usize {
        let mut covered = vec![false; self.vertex_count];
        for e in a.iter() {
            for &v in self.edge(e) {
                covered[v] = true;
            }
        }
        covered.into_iter().filter(|&c| c).count()
    }
}

/// k((V, A)): components of the spanning subgraph with edge set `a`.
/// Vertices untouched by `a` count as singleton components.
pub fn spanning_component_count(g: &Hypergraph, a: EdgeSubset) -> usize {
    let mut dsu = DisjointSet::new(g.vertex_count());
    let mut merges = 0;
    for e in a.iter() {
        let members = g.edge(e);
        if let Some((&first, rest)) = members.split_first() {
            for &v in rest {
                if dsu.union(first, v) {
                    merges += 1;
                }
            }
        }
    }
    g.vertex_count() - merges
}

/// k((V(A), A)): components of the subgraph induced on the vertices that the
/// edges of `a` cover. Zero for the empty subset.
pub fn restricted_component_count(g: &Hypergraph, a: EdgeSubset) -> usize {
    let uncovered = g.vertex_count() - g.covered_vertex_count(a);
    spanning_component_count(g, a) - uncovered
}

/// A set of edge ids stored as a 64-bit mask; bit `i` is edge `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn full(edge_count: usize) -> Self {
        assert!(edge_count <= MAX_SUBSET_EDGES);
        Self((1u64 << edge_count) - 1)
    }

    pub fn singleton(e: EdgeId) -> Self {
        Self(1 << e.0)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        ids.into_iter()
            .fold(Self::EMPTY, |acc, id| acc.with(EdgeId(id)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: EdgeId) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    pub fn with(self, e: EdgeId) -> Self {
        Self(self.0 | 1 << e.0)
    }

    pub fn without(self, e: EdgeId) -> Self {
        Self(self.0 & !(1 << e.0))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self.is_subset_of(other) && self != other
    }

    /// Member ids in increasing order.
    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(EdgeId(low))
        })
    }

    pub fn ids(self) -> Vec<usize> {
        self.iter().map(|e| e.0).collect()
    }

    /// All 2^m subsets of an m-edge set, in numeric order of their masks.
    pub fn all(edge_count: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(edge_count <= MAX_SUBSET_EDGES);
        (0..1u64 << edge_count).map(EdgeSubset)
    }

    /// Proper non-empty subsets of `self`.
    pub fn proper_nonempty_subsets(self) -> impl Iterator<Item = EdgeSubset> {
        // Standard submask walk, skipping `self` and the empty mask.
        let full = self.0;
        let mut sub = full;
        std::iter::from_fn(move || {
            if sub == 0 {
                return None;
            }
            sub = (sub - 1) & full;
            (sub != 0).then_some(EdgeSubset(sub))
        })
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|e| e.0.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// A linear order on the edge set, held as a bijection from edge ids to
/// ranks `1..=|E|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    rank: Vec<usize>,
    by_rank: Vec<EdgeId>,
}

impl EdgeOrder {
    /// Edge table order: edge `i` has rank `i + 1`.
    pub fn listing(edge_count: usize) -> Self {
        Self {
            rank: (1..=edge_count).collect(),
            by_rank: (0..edge_count).map(EdgeId).collect(),
        }
    }

    /// Order given by a sequence of edge ids from smallest to largest.
    pub fn from_sequence(edge_count: usize, sequence: &[usize]) -> Result<Self> {
        if sequence.len() != edge_count {
            return Err(Error::InvalidOrder(format!(
                "expected a permutation of {edge_count} edge indices, got {}",
                sequence.len()
            )));
        }
        let mut rank = vec![0; edge_count];
        for (position, &e) in sequence.iter().enumerate() {
            if e >= edge_count {
                return Err(Error::InvalidOrder(format!("edge index {e} out of range")));
            }
            if rank[e] != 0 {
                return Err(Error::InvalidOrder(format!("edge index {e} repeated")));
            }
            rank[e] = position + 1;
        }
        Ok(Self {
            rank,
            by_rank: sequence.iter().copied().map(EdgeId).collect(),
        })
    }

    /// Order given directly by the rank of each edge.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let m = ranks.len();
        let mut by_rank = vec![None; m];
        for (e, &r) in ranks.iter().enumerate() {
            if r == 0 || r > m {
                return Err(Error::InvalidOrder(format!("rank {r} outside 1..={m}")));
            }
            if by_rank[r - 1].replace(EdgeId(e)).is_some() {
                return Err(Error::InvalidOrder(format!("rank {r} repeated")));
            }
        }
        Ok(Self {
            rank: ranks,
            by_rank: by_rank.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn edge_count(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, e: EdgeId) -> usize {
        self.rank[e.0]
    }

    /// The edge `e_i` with rank `i` (1-based).
    pub fn edge_at(&self, rank: usize) -> EdgeId {
        self.by_rank[rank - 1]
    }

    /// Edge ids from smallest to largest.
    pub fn sequence(&self) -> &[EdgeId] {
        &self.by_rank
    }

    pub fn less(&self, a: EdgeId, b: EdgeId) -> bool {
        self.rank(a) < self.rank(b)
    }

    pub fn max_of(&self, a: EdgeSubset) -> Option<EdgeId> {
        a.iter().max_by_key(|&e| self.rank(e))
    }

    pub fn min_of(&self, a: EdgeSubset) -> Option<EdgeId> {
        a.iter().min_by_key(|&e| self.rank(e))
    }

    /// Members of `a` sorted by increasing rank.
    pub fn sorted(&self, a: EdgeSubset) -> Vec<EdgeId> {
        let mut members: Vec<EdgeId> = a.iter().collect();
        members.sort_by_key(|&e| self.rank(e));
        members
    }

    /// Fails unless this order ranks exactly the edges of `g`.
    pub fn check_for(&self, g: &Hypergraph) -> Result<()> {
        if self.edge_count() != g.edge_count() {
            return Err(Error::InvalidOrder(format!(
                "order covers {} edges but the hypergraph has {}",
                self.edge_count(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}
