//! Simple undirected graphs with vertex role tags.
//!
//! Vertices are `0..order`. Graphs are immutable after construction; the
//! operators in [`crate::ops`] return new graphs.

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Role metadata attached to each vertex by the family constructors and
/// product operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexTag {
    Plain,
    /// Hub of a wheel/fan/friendship graph, star center, or bistar center.
    Center,
    Leaf,
    /// Part index inside a complete multipartite graph or a bipartition.
    Part(usize),
    /// Position inside a lexicographic product: copy `copy` of the left
    /// factor, slot `slot` of the right factor.
    Slot { copy: usize, slot: usize },
}

/// Automorphism structure recorded by family constructors, consumed by the
/// exact-search oracle for symmetry reduction. Operators drop the hint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SymmetryHint {
    #[default]
    None,
    /// Vertices `0..n` form a path `0-1-...-(n-1)`; reversal is an automorphism.
    PathReversal,
    /// Vertices `0..n` form a cycle; rotations and reflections are automorphisms.
    CycleDihedral,
}

/// A finite simple undirected graph: no loops, no multi-edges.
#[derive(Debug, Clone)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    tags: Vec<VertexTag>,
    symmetry: SymmetryHint,
    parts: Option<(Vec<Vertex>, Vec<Vertex>)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing edge order.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= order || b >= order {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) exceeds order {order}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: canon,
            adj,
            tags: vec![VertexTag::Plain; order],
            symmetry: SymmetryHint::None,
            parts: None,
        })
    }

    pub(crate) fn with_tags(mut self, tags: Vec<VertexTag>) -> Self {
        debug_assert_eq!(tags.len(), self.order);
        self.tags = tags;
        self
    }

    pub(crate) fn with_symmetry(mut self, symmetry: SymmetryHint) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub(crate) fn with_parts(mut self, a: Vec<Vertex>, b: Vec<Vertex>) -> Self {
        debug_assert_eq!(a.len() + b.len(), self.order);
        self.parts = Some((a, b));
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let r = self.max_degree();
        (r == self.min_degree()).then_some(r)
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.adj.iter().position(Vec::is_empty)
    }

    pub fn tag(&self, v: Vertex) -> VertexTag {
        self.tags[v]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn symmetry(&self) -> SymmetryHint {
        self.symmetry
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.size() == self.order - 1 && self.is_connected()
    }

    /// The bipartition of the graph, or `None` when an odd cycle exists.
    ///
    /// Family constructors store their natural parts; otherwise a
    /// deterministic 2-coloring is computed (per component, the smallest
    /// vertex goes in the first part). Parts come back sorted.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        if let Some(parts) = &self.parts {
            return Some(parts.clone());
        }
        let mut side = vec![usize::MAX; self.order];
        for root in 0..self.order {
            if side[root] != usize::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == usize::MAX {
                        side[u] = side[v] ^ 1;
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.order).filter(|&v| side[v] == 0).collect();
        let b = (0..self.order).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }
}
