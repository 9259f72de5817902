//! Seeded generators for hypergraphs, orders, broken-cycle selections and
//! weight tables, used by randomized verification and benchmarks.

use num_bigint::BigInt;
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycles::BrokenCycle;
use crate::hypergraph::{EdgeOrder, Hypergraph};
use crate::polynomial::Polynomial;

/// Largest edge drawn by [`random_hypergraph`].
pub const MAX_RANDOM_ARITY: usize = 4;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` vertices and `m` edges. Each edge has a size drawn uniformly from
/// `1..=min(n, 4)` and is then a uniform vertex subset of that size.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Hypergraph {
    assert!(n > 0 || m == 0, "edges need at least one vertex");
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(MAX_RANDOM_ARITY));
            index::sample(rng, n, size).into_vec()
        })
        .collect();
    Hypergraph::new(n, edges).expect("generated edges are valid")
}

/// A simple graph on `n` vertices with `m` distinct edges, listed in random
/// order. `m` is clamped to the number of vertex pairs.
pub fn random_simple_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Hypergraph {
    let pairs: Vec<Vec<usize>> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| vec![u, v]))
        .collect();
    let m = m.min(pairs.len());
    let edges = index::sample(rng, pairs.len(), m)
        .into_iter()
        .map(|i| pairs[i].clone())
        .collect();
    Hypergraph::new(n, edges).expect("generated edges are valid")
}

pub fn random_order<R: Rng + ?Sized>(rng: &mut R, edge_count: usize) -> EdgeOrder {
    let mut sequence: Vec<usize> = (0..edge_count).collect();
    sequence.shuffle(rng);
    EdgeOrder::from_sequence(edge_count, &sequence).expect("shuffle is a permutation")
}

/// Keeps each broken cycle independently with probability 1/2.
pub fn random_selection<R: Rng + ?Sized>(rng: &mut R, all: &[BrokenCycle]) -> Vec<BrokenCycle> {
    all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Integer weights for component counts `0..=n`, each in `-9..=9`.
pub fn random_integer_weights<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|_| BigInt::from(rng.gen_range(-9..=9)))
        .collect()
}

/// Polynomial weights for component counts `0..=n`: degree below 4,
/// coefficients in `-9..=9`.
pub fn random_polynomial_weights<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Polynomial> {
    (0..=n)
        .map(|_| {
            let coeffs: Vec<i64> = (0..4).map(|_| rng.gen_range(-9..=9)).collect();
            Polynomial::from_i64s(&coeffs)
        })
        .collect()
}
