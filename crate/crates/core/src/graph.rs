//! Simple undirected graphs and linear vertex orderings.
//!
//! Vertices are identified by `1..=n` throughout the crate; positions in an
//! ordering are likewise `1..=n`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A simple, finite, undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    /// Sorted neighbour lists; slot `v - 1` belongs to vertex `v`.
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Self {
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.n() || v > self.n() {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The graph on the same vertex set whose edges are exactly the
    /// non-adjacent pairs of `self`.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        let mut edge_count = 0;
        for u in 1..=n {
            let mut present = self.neighbors(u).iter().peekable();
            let mut list = Vec::with_capacity(n.saturating_sub(1 + self.degree(u)));
            for v in 1..=n {
                if present.peek() == Some(&&v) {
                    present.next();
                    continue;
                }
                if v != u {
                    list.push(v);
                }
            }
            edge_count += list.len();
            adj.push(list);
        }
        Graph {
            adj,
            edge_count: edge_count / 2,
        }
    }
}

/// A bijection between the vertices `1..=n` and the positions `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrdering {
    /// `sequence[p - 1]` is the vertex at position `p`.
    sequence: Vec<usize>,
    /// `positions[v - 1]` is the position of vertex `v`.
    positions: Vec<usize>,
}

impl LinearOrdering {
    /// Builds an ordering from the vertices listed in position order.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut positions = vec![0; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if positions[v - 1] != 0 {
                return Err(Error::validation(format!(
                    "vertex {v} appears twice in the ordering"
                )));
            }
            positions[v - 1] = i + 1;
        }
        Ok(Self {
            sequence,
            positions,
        })
    }

    /// Builds an ordering from `positions[v - 1]`, the position of vertex `v`.
    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let n = positions.len();
        let mut sequence = vec![0; n];
        for (i, &p) in positions.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::validation(format!(
                    "position {p} of vertex {} is outside 1..={n}",
                    i + 1
                )));
            }
            if sequence[p - 1] != 0 {
                return Err(Error::validation(format!("position {p} is used twice")));
            }
            sequence[p - 1] = i + 1;
        }
        Ok(Self {
            sequence,
            positions,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            sequence: (1..=n).collect(),
            positions: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Vertex placed at `position` (1-based).
    pub fn vertex_at(&self, position: usize) -> usize {
        self.sequence[position - 1]
    }

    /// Position (1-based) of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.positions[v - 1]
    }

    /// Vertices in position order.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Positions indexed by `vertex - 1`.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub(crate) fn check_matches(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::validation(format!(
                "ordering covers {} vertices but the graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Width on `g`; the caller guarantees the sizes agree.
    pub(crate) fn width_unchecked(&self, g: &Graph) -> usize {
        g.edges()
            .map(|(u, v)| self.position(u).abs_diff(self.position(v)))
            .max()
            .unwrap_or(0)
    }
}

/// Largest position gap over the edges of `g`; 0 when `g` has no edges.
pub fn ordering_width(g: &Graph, ord: &LinearOrdering) -> Result<usize> {
    ord.check_matches(g)?;
    Ok(ord.width_unchecked(g))
}
