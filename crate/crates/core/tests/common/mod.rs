//! Shared corpus and independent oracles for the integration tests. Nothing
//! here calls into the component counting or cycle code under test.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use hyperchrome::random::{random_hypergraph, seeded};
use hyperchrome::{EdgeSubset, Hypergraph};
use rand::Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const CORPUS_SIZE: usize = 200;

/// 200 seeded hypergraphs with 1..=6 vertices and 0..=6 edges.
pub fn corpus() -> Vec<Hypergraph> {
    let mut rng = seeded(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(0..=6);
            random_hypergraph(&mut rng, n, m)
        })
        .collect()
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn example() -> Hypergraph {
    Hypergraph::new(
        5,
        vec![vec![0, 2], vec![0, 1, 2], vec![0, 3, 4], vec![2, 3, 4]],
    )
    .unwrap()
}

pub fn triangle() -> Hypergraph {
    Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
}

fn adjacency(g: &Hypergraph, a: EdgeSubset) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in a.iter() {
        let members = g.edge(e);
        for &u in members {
            for &v in members {
                if u != v {
                    adj[u].push(v);
                }
            }
        }
    }
    adj
}

/// Components of (V, A) by breadth-first search over the clique expansion.
pub fn bfs_components(g: &Hypergraph, a: EdgeSubset) -> usize {
    let adj = adjacency(g, a);
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    count
}

/// Edge sets of the simple cycles of a simple graph: every covered vertex
/// has degree two and the covered vertices are connected.
pub fn simple_cycle_edge_sets(g: &Hypergraph) -> Vec<EdgeSubset> {
    let m = g.edge_count();
    (1u64..1 << m)
        .map(EdgeSubset::from_bits)
        .filter(|&a| {
            let mut degree = vec![0usize; g.vertex_count()];
            for e in a.iter() {
                for &v in g.edge(e) {
                    degree[v] += 1;
                }
            }
            let covered = degree.iter().filter(|&&d| d > 0).count();
            degree.iter().all(|&d| d == 0 || d == 2)
                && bfs_components(g, a) == g.vertex_count() - covered + 1
        })
        .collect()
}

/// Proper colorings counted by recursion over vertices, checking each edge
/// once all of its vertices are colored.
pub fn count_colorings_recursive(g: &Hypergraph, k: u64) -> u64 {
    fn go(g: &Hypergraph, k: u64, colors: &mut Vec<u64>) -> u64 {
        let v = colors.len();
        let monochromatic = g
            .edges()
            .any(|(_, e)| e.iter().all(|&u| u < v) && e.iter().all(|&u| colors[u] == colors[e[0]]));
        if monochromatic {
            return 0;
        }
        if v == g.vertex_count() {
            return 1;
        }
        (0..k)
            .map(|c| {
                colors.push(c);
                let n = go(g, k, colors);
                colors.pop();
                n
            })
            .sum()
    }
    go(g, k, &mut Vec::new())
}
