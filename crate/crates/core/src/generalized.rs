//! Pruned subset sums for arbitrary group-valued functions.
//!
//! For any `f(G, A)` into an additive abelian group that flips sign whenever
//! adding an edge keeps the component count, the sum of `f` over all edge
//! subsets equals the sum over subsets including no member of a chosen set
//! of broken cycles. This module checks that hypothesis exhaustively, computes
//! both sums, and exposes the edge-pairing that makes the extra terms cancel.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cycles::{BrokenCycle, CycleIndex};
use crate::error::{Error, Result};
use crate::hypergraph::{
    ensure_within_cap, spanning_component_count, EdgeId, EdgeOrder, EdgeSubset, Hypergraph,
};
use crate::polynomial::Polynomial;

/// An additive abelian group given by its operations. Callers vouch for the
/// axioms; nothing here proves them.
pub trait AbelianGroup {
    type Element: Clone + Debug;

    fn zero(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn negate(&self, a: &Self::Element) -> Self::Element;
    fn equals(&self, a: &Self::Element, b: &Self::Element) -> bool;
}

/// The integers under addition.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl AbelianGroup for Integers {
    type Element = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn negate(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn equals(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }
}

/// Integer polynomials under addition.
#[derive(Clone, Copy, Debug, Default)]
pub struct Polynomials;

impl AbelianGroup for Polynomials {
    type Element = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }

    fn negate(&self, a: &Polynomial) -> Polynomial {
        -a
    }

    fn equals(&self, a: &Polynomial, b: &Polynomial) -> bool {
        a == b
    }
}

/// `f(G, A)`: a deterministic map from edge subsets to elements of `G`.
/// The group is passed in so implementations can use its operations.
pub trait GroupValuedFunction<G: AbelianGroup> {
    fn eval(&self, group: &G, g: &Hypergraph, a: EdgeSubset) -> G::Element;
}

impl<G, F> GroupValuedFunction<G> for F
where
    G: AbelianGroup,
    F: Fn(&Hypergraph, EdgeSubset) -> G::Element,
{
    fn eval(&self, _: &G, g: &Hypergraph, a: EdgeSubset) -> G::Element {
        self(g, a)
    }
}

/// The chromatic term `(−1)^|A| x^k(⟨G:A⟩)`.
pub fn chromatic_term(g: &Hypergraph, a: EdgeSubset) -> Polynomial {
    let sign = if a.len().is_multiple_of(2) { 1 } else { -1 };
    Polynomial::monomial(BigInt::from(sign), spanning_component_count(g, a))
}

/// `f(G, A) = (−1)^|A| · weights[k(⟨G:A⟩)]`. Satisfies the sign-flip
/// condition for any weight table.
#[derive(Clone, Debug)]
pub struct SignedComponentWeight<T> {
    weights: Vec<T>,
}

impl<T> SignedComponentWeight<T> {
    /// `weights[k]` is used for subsets with `k` components; the table needs
    /// an entry for every `k` in `0..=|V|`.
    pub fn new(weights: Vec<T>) -> Self {
        Self { weights }
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }
}

impl<G: AbelianGroup> GroupValuedFunction<G> for SignedComponentWeight<G::Element> {
    fn eval(&self, group: &G, g: &Hypergraph, a: EdgeSubset) -> G::Element {
        let weight = &self.weights[spanning_component_count(g, a)];
        if a.len().is_multiple_of(2) {
            weight.clone()
        } else {
            group.negate(weight)
        }
    }
}

/// A subset of the broken cycles of a hypergraph under a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrokenCycleSelection {
    members: Vec<BrokenCycle>,
    order: EdgeOrder,
}

impl BrokenCycleSelection {
    /// Fails with [`Error::InvalidSelection`] unless every member is a broken
    /// cycle of `g` under `order`.
    pub fn new(g: &Hypergraph, order: &EdgeOrder, members: Vec<BrokenCycle>) -> Result<Self> {
        order.check_for(g)?;
        let all = CycleIndex::new(g)?.broken_cycles(order);
        Self::from_known(&all, order, members)
    }

    /// Like [`new`](Self::new), checked against an already computed set of
    /// broken cycles for `order`.
    pub fn from_known(
        all: &[BrokenCycle],
        order: &EdgeOrder,
        mut members: Vec<BrokenCycle>,
    ) -> Result<Self> {
        if let Some(stray) = members.iter().find(|b| !all.contains(b)) {
            return Err(Error::InvalidSelection {
                edges: stray.edges().ids(),
            });
        }
        members.sort();
        members.dedup();
        Ok(Self {
            members,
            order: order.clone(),
        })
    }

    pub fn all(g: &Hypergraph, order: &EdgeOrder) -> Result<Self> {
        order.check_for(g)?;
        let all = CycleIndex::new(g)?.broken_cycles(order);
        Ok(Self {
            members: all,
            order: order.clone(),
        })
    }

    pub fn empty(order: &EdgeOrder) -> Self {
        Self {
            members: Vec::new(),
            order: order.clone(),
        }
    }

    pub fn members(&self) -> &[BrokenCycle] {
        &self.members
    }

    pub fn order(&self) -> &EdgeOrder {
        &self.order
    }

    /// True iff `a` includes none of the selected broken cycles.
    pub fn admits(&self, a: EdgeSubset) -> bool {
        !self.members.iter().any(|b| b.is_contained_in(a))
    }
}

/// An extension `A → A ∪ {e}` that keeps the component count but where
/// `f(G, A) ≠ −f(G, A ∪ {e})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingViolation {
    pub subset: EdgeSubset,
    pub edge: EdgeId,
}

/// Checks the sign-flip hypothesis over every pair `(A, e)` with `e ∉ A`.
/// Returns the first violation in numeric subset order, then edge order.
pub fn check_alternating_condition<G, F>(
    g: &Hypergraph,
    group: &G,
    f: &F,
) -> Result<Option<AlternatingViolation>>
where
    G: AbelianGroup,
    F: GroupValuedFunction<G> + ?Sized,
{
    ensure_within_cap(g)?;
    let m = g.edge_count();
    let values: Vec<G::Element> = EdgeSubset::all(m).map(|a| f.eval(group, g, a)).collect();
    let components: Vec<usize> = EdgeSubset::all(m)
        .map(|a| spanning_component_count(g, a))
        .collect();
    for a in EdgeSubset::all(m) {
        for e in (0..m).map(EdgeId).filter(|&e| !a.contains(e)) {
            let extended = a.with(e);
            let (lo, hi) = (a.bits() as usize, extended.bits() as usize);
            if components[lo] != components[hi] {
                continue;
            }
            if !group.equals(&values[lo], &group.negate(&values[hi])) {
                return Ok(Some(AlternatingViolation { subset: a, edge: e }));
            }
        }
    }
    Ok(None)
}

fn sum_where<G, F>(
    g: &Hypergraph,
    group: &G,
    f: &F,
    admit: impl Fn(EdgeSubset) -> bool,
) -> (G::Element, u64)
where
    G: AbelianGroup,
    F: GroupValuedFunction<G> + ?Sized,
{
    EdgeSubset::all(g.edge_count())
        .filter(|&a| admit(a))
        .fold((group.zero(), 0), |(acc, terms), a| {
            (group.add(&acc, &f.eval(group, g, a)), terms + 1)
        })
}

/// Σ_{A ⊆ E} f(G, A).
pub fn full_sum<G, F>(g: &Hypergraph, group: &G, f: &F) -> Result<G::Element>
where
    G: AbelianGroup,
    F: GroupValuedFunction<G> + ?Sized,
{
    ensure_within_cap(g)?;
    Ok(sum_where(g, group, f, |_| true).0)
}

/// Σ f(G, A) over the subsets `A` that include no member of `selection`.
pub fn pruned_sum<G, F>(
    g: &Hypergraph,
    group: &G,
    f: &F,
    selection: &BrokenCycleSelection,
) -> Result<G::Element>
where
    G: AbelianGroup,
    F: GroupValuedFunction<G> + ?Sized,
{
    ensure_within_cap(g)?;
    selection.order.check_for(g)?;
    Ok(sum_where(g, group, f, |a| selection.admits(a)).0)
}

#[derive(Clone, Debug)]
pub enum TheoremOutcome<E> {
    /// `f` fails the sign-flip hypothesis, so there is nothing to verify.
    HypothesisViolated(AlternatingViolation),
    Checked {
        holds: bool,
        full: E,
        pruned: E,
        total_terms: u64,
        admissible_terms: u64,
    },
}

impl<E> TheoremOutcome<E> {
    pub fn holds(&self) -> bool {
        matches!(self, TheoremOutcome::Checked { holds: true, .. })
    }
}

/// Checks the hypothesis on `f`, then compares the full and pruned sums.
pub fn verify_generalized_theorem<G, F>(
    g: &Hypergraph,
    order: &EdgeOrder,
    group: &G,
    f: &F,
    selection: &BrokenCycleSelection,
) -> Result<TheoremOutcome<G::Element>>
where
    G: AbelianGroup,
    F: GroupValuedFunction<G> + ?Sized,
{
    ensure_within_cap(g)?;
    order.check_for(g)?;
    if selection.order != *order {
        return Err(Error::InvalidOrder(
            "selection was built for a different order".into(),
        ));
    }
    if let Some(violation) = check_alternating_condition(g, group, f)? {
        return Ok(TheoremOutcome::HypothesisViolated(violation));
    }
    let (full, total_terms) = sum_where(g, group, f, |_| true);
    let (pruned, admissible_terms) = sum_where(g, group, f, |a| selection.admits(a));
    Ok(TheoremOutcome::Checked {
        holds: group.equals(&full, &pruned),
        full,
        pruned,
        total_terms,
        admissible_terms,
    })
}

/// Where the cancellation pairing `A ↔ A ∪ {e(B)}` failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionViolation {
    /// Exactly one of `A`, `A ∪ {e(B)}` lies in the set being cancelled.
    Membership {
        broken_cycle: EdgeSubset,
        closing_edge: EdgeId,
        subset: EdgeSubset,
    },
    /// The pair has different component counts, so the terms need not cancel.
    ComponentCount {
        broken_cycle: EdgeSubset,
        closing_edge: EdgeId,
        subset: EdgeSubset,
    },
    /// The closing edge lies inside the broken cycle it closes.
    ClosingEdgeInside {
        broken_cycle: EdgeSubset,
        closing_edge: EdgeId,
    },
}

/// Replays the peeling argument for the pruned sum.
///
/// Repeatedly takes the selected broken cycle `B` whose maximal closing edge
/// `e(B)` is not below that of any other remaining member, and checks that
/// `A ↔ A ∪ {e(B)}` pairs up the subsets including `B` but no other remaining
/// member, with equal component counts on both sides. `B` is then dropped
/// and the check repeats on the rest.
pub fn max_closing_involution(
    g: &Hypergraph,
    selection: &BrokenCycleSelection,
) -> Result<Option<InvolutionViolation>> {
    ensure_within_cap(g)?;
    let order = &selection.order;
    order.check_for(g)?;
    let index = CycleIndex::new(g)?;
    let mut remaining: Vec<(BrokenCycle, EdgeId)> = selection
        .members
        .iter()
        .map(|b| index.max_closing_edge(order, b).map(|e| (*b, e)))
        .collect::<Result<_>>()?;
    let m = g.edge_count();

    while !remaining.is_empty() {
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|(_, (_, e))| order.rank(*e))
            .expect("non-empty");
        let (b, closing) = remaining.remove(pos);
        let b = b.edges();
        if b.contains(closing) {
            return Ok(Some(InvolutionViolation::ClosingEdgeInside {
                broken_cycle: b,
                closing_edge: closing,
            }));
        }
        let in_family = |a: EdgeSubset| {
            b.is_subset_of(a) && !remaining.iter().any(|(other, _)| other.is_contained_in(a))
        };
        for a in EdgeSubset::all(m).filter(|a| !a.contains(closing)) {
            let partner = a.with(closing);
            let (lower, upper) = (in_family(a), in_family(partner));
            if lower != upper {
                return Ok(Some(InvolutionViolation::Membership {
                    broken_cycle: b,
                    closing_edge: closing,
                    subset: a,
                }));
            }
            if lower && spanning_component_count(g, a) != spanning_component_count(g, partner) {
                return Ok(Some(InvolutionViolation::ComponentCount {
                    broken_cycle: b,
                    closing_edge: closing,
                    subset: a,
                }));
            }
        }
    }
    Ok(None)
}
