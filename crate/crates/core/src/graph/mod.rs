//! Vertex-colored simple graphs.

mod edgelist;
mod family;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use edgelist::{parse_graph, ParseGraphError, ParseGraphErrorKind};
pub use family::{parse_family, FamilySpec, ParseFamilyError, MAX_FAMILY_VERTICES};

/// Vertex color: `A` is selectable by Alice, `B` by Bob, `C` by both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'A' => Some(Color::A),
            'B' => Some(Color::B),
            'C' => Some(Color::C),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::A => 'A',
            Color::B => 'B',
            Color::C => 'C',
        }
    }

    /// Exchanges `A` and `B`.
    pub fn swapped(self) -> Color {
        match self {
            Color::A => Color::B,
            Color::B => Color::A,
            Color::C => Color::C,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("graph has {size} vertices, more than the limit {limit}")]
    TooLarge { size: usize, limit: usize },
}

/// A finite simple undirected graph with a color and a label per vertex.
///
/// Vertices are `0..n`; adjacency lists are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoredGraph {
    colors: Vec<Color>,
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl ColoredGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph with the given colors, labelled by index.
    pub fn from_colors(colors: &[Color]) -> Self {
        let mut g = ColoredGraph::new();
        for (i, &c) in colors.iter().enumerate() {
            g.push_vertex(c, i.to_string());
        }
        g
    }

    fn push_vertex(&mut self, color: Color, label: String) -> usize {
        self.colors.push(color);
        self.adjacency.push(Vec::new());
        self.labels.push(label);
        self.colors.len() - 1
    }

    /// Adds a vertex with a label that must not already be in use.
    pub fn add_vertex(&mut self, color: Color, label: impl Into<String>) -> Result<usize, GraphError> {
        let label = label.into();
        if self.labels.contains(&label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        Ok(self.push_vertex(color, label))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange(x));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let pos = match self.adjacency[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adjacency[u].insert(pos, v);
        let pos = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos, u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn set_color(&mut self, v: usize, color: Color) {
        self.colors[v] = color;
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Same graph with colors `A` and `B` exchanged.
    pub fn swap_colors(&self) -> ColoredGraph {
        let mut g = self.clone();
        for c in &mut g.colors {
            *c = c.swapped();
        }
        g
    }

    /// Same graph with every vertex colored `color`.
    pub fn recolored(&self, color: Color) -> ColoredGraph {
        let mut g = self.clone();
        g.colors.iter_mut().for_each(|c| *c = color);
        g
    }

    /// Subgraph induced by `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> ColoredGraph {
        let position: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = ColoredGraph::new();
        for &v in vertices {
            g.push_vertex(self.colors[v], self.labels[v].clone());
        }
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adjacency[v] {
                if let Some(&j) = position.get(w) {
                    if i < j {
                        g.add_edge(i, j).expect("induced edges are simple");
                    }
                }
            }
        }
        g
    }

    /// Connected components, each with the original indices of its vertices
    /// (ascending). Components are ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(Component { graph: self.induced(&members), vertices: members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; vertices of `parts[i]` get labels prefixed with `g{i}.`.
    /// Returns the index range each part occupies.
    pub fn disjoint_union(parts: &[ColoredGraph]) -> (ColoredGraph, Vec<std::ops::Range<usize>>) {
        let mut g = ColoredGraph::new();
        let mut ranges = Vec::with_capacity(parts.len());
        for (i, part) in parts.iter().enumerate() {
            let offset = g.vertex_count();
            for v in 0..part.vertex_count() {
                g.push_vertex(part.colors[v], format!("g{i}.{}", part.labels[v]));
            }
            for (u, v) in part.edges() {
                g.add_edge(offset + u, offset + v).expect("parts are simple");
            }
            ranges.push(offset..g.vertex_count());
        }
        (g, ranges)
    }

    /// Prints the graph in the edge-list format read by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            out.push_str(&format!("v {} {}\n", self.labels[v], self.colors[v]));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", self.labels[u], self.labels[v]));
        }
        out
    }
}

/// A connected component together with its vertices in the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: ColoredGraph,
    pub vertices: Vec<usize>,
}
