//! Small named graphs used throughout the tests and the command line.

use crate::graph::{SimpleGraph, VoGraph};

fn build(weights: &[u32], arcs: &[(usize, usize)]) -> VoGraph {
    let labels: Vec<String> = (1..=weights.len()).map(|i| format!("x{i}")).collect();
    let vertices: Vec<(&str, u32)> = labels.iter().map(|l| l.as_str()).zip(weights.iter().copied()).collect();
    let arcs: Vec<(&str, &str)> = arcs
        .iter()
        .map(|&(u, v)| (labels[u - 1].as_str(), labels[v - 1].as_str()))
        .collect();
    VoGraph::new(&vertices, &arcs).expect("sample graph is valid")
}

/// Six vertices, seven arcs, lcm exponent (2,3,2,4,3,1).
pub fn ex6() -> VoGraph {
    build(
        &[2, 3, 2, 4, 3, 1],
        &[(1, 2), (5, 1), (1, 6), (2, 4), (6, 3), (4, 6), (6, 5)],
    )
}

/// Six vertices whose dual is Cohen-Macaulay.
pub fn ex6b() -> VoGraph {
    build(
        &[2, 3, 2, 1, 4, 3],
        &[(1, 5), (4, 1), (6, 2), (2, 5), (4, 2), (4, 3), (5, 4), (5, 6)],
    )
}

/// A single arc x1 -> x2 with w(x2) = 3.
pub fn e1() -> VoGraph {
    build(&[1, 3], &[(1, 2)])
}

/// The cycle x1 -> x2 -> ... -> xn -> x1.
pub fn oriented_cycle(weights: &[u32]) -> VoGraph {
    let n = weights.len();
    let arcs: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
    build(weights, &arcs)
}

/// Unmixed with a Cohen-Macaulay underlying graph, yet not Cohen-Macaulay.
/// A 4-cycle x1 x2 x3 x4 with a triangle x1 x2 x5 glued along x1 x2.
pub fn unmixed_not_cm() -> VoGraph {
    build(&[2, 1, 1, 1, 1], &[(1, 5), (2, 1), (2, 3), (2, 5), (3, 4), (4, 1)])
}

/// A pentagon of shape D4.
pub fn d4_instance() -> VoGraph {
    build(&[1, 2, 2, 1, 2], &[(1, 2), (2, 3), (4, 3), (4, 5), (5, 1)])
}

/// Five vertices, edges 12 13 14 15 23 34 45; vertices 2 and 5 are simplicial.
pub fn simplicial_example() -> SimpleGraph {
    SimpleGraph::new(
        &["1", "2", "3", "4", "5"],
        &[("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("2", "3"), ("3", "4"), ("4", "5")],
    )
    .expect("sample graph is valid")
}
