use std::collections::BTreeSet;

use super::{CayleyBall, VertexId};

/// The underlying simple undirected graph of a ball: parallel edges and
/// opposite arcs collapse, loops are remembered separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedView {
    adjacency: Vec<BTreeSet<VertexId>>,
    interior: Vec<bool>,
    loops: usize,
}

impl UndirectedView {
    pub fn from_ball(b: &CayleyBall) -> Self {
        let mut adjacency = vec![BTreeSet::new(); b.len()];
        let mut loops = 0;
        for e in b.edges() {
            if e.src == e.dst {
                loops += 1;
                continue;
            }
            adjacency[e.src].insert(e.dst);
            adjacency[e.dst].insert(e.src);
        }
        let interior = (0..b.len()).map(|v| !b.is_frontier(v)).collect();
        UndirectedView {
            adjacency,
            interior,
            loops,
        }
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().copied()
    }

    /// All neighbours of an interior vertex are present in the ball.
    pub fn is_interior(&self, v: VertexId) -> bool {
        self.interior[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Connected, loop-free, with one edge fewer than vertices.
    pub fn is_tree(&self) -> bool {
        if self.loops > 0 || self.edge_count() + 1 != self.len() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Degrees of interior vertices, sorted and deduplicated.
    pub fn interior_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.len())
            .filter(|&v| self.interior[v])
            .map(|v| self.degree(v))
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}
