//! Fixtures shared by the benchmarks.

use domgame_core::{Color, ColoredGraph, FamilySpec};

pub fn star(center: Color, a: usize, b: usize, c: usize) -> ColoredGraph {
    FamilySpec::Star { center, a, b, c }.build().expect("star fits")
}

/// `K_{s,t}` with alternating colors `A, B, C, ...` in each part.
pub fn mixed_bipartite(s: usize, t: usize) -> ColoredGraph {
    let part = |n: usize| (0..n).map(|i| Color::ALL[i % 3]).collect::<Vec<_>>();
    FamilySpec::CompleteBipartite(part(s), part(t)).build().expect("bipartite fits")
}

pub fn path(n: usize) -> ColoredGraph {
    FamilySpec::Path(vec![Color::C; n]).build().expect("path fits")
}
