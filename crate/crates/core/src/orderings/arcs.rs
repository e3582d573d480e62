//! Circular-arc models and the folding ordering.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrdering};

/// Arcs on a discrete circle with points `0..circumference`. The arc of `v`
/// is the clockwise walk from its head to its tail, endpoints included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcModel {
    circumference: usize,
    /// `(head, tail)` in slot `v - 1`.
    arcs: Vec<(usize, usize)>,
}

impl ArcModel {
    /// Validates distinct endpoints, points on the circle, and that no arc
    /// covers every point.
    pub fn new(circumference: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if circumference == 0 {
            return Err(Error::validation("circumference must be positive"));
        }
        let mut owner = vec![0usize; circumference];
        for (i, &(head, tail)) in arcs.iter().enumerate() {
            let v = i + 1;
            for point in [head, tail] {
                if point >= circumference {
                    return Err(Error::validation(format!(
                        "arc {v} endpoint {point} is off the circle 0..{circumference}"
                    )));
                }
                if owner[point] != 0 {
                    return Err(Error::validation(format!(
                        "endpoint {point} is shared by arcs {} and {v}",
                        owner[point]
                    )));
                }
                owner[point] = v;
            }
            if (tail + circumference - head) % circumference == circumference - 1 {
                return Err(Error::validation(format!(
                    "arc {v} covers the whole circle"
                )));
            }
        }
        Ok(Self {
            circumference,
            arcs,
        })
    }

    /// Re-spaces arbitrary endpoints onto consecutive points, keeping the
    /// cyclic order of all endpoints. Coinciding points are split with heads
    /// before tails (so arcs touching at a point keep intersecting), then by
    /// vertex id. A single-point arc `(p, p)` becomes a short arc around its
    /// point. The circle has `2n` points plus one empty point after each tail
    /// that is cyclically followed by its own head, since without it that
    /// arc would cover the whole circle.
    pub fn respaced(circumference: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(h, t)) = arcs
            .iter()
            .find(|&&(h, t)| h >= circumference || t >= circumference)
        {
            return Err(Error::validation(format!(
                "endpoint pair ({h}, {t}) is off the circle 0..{circumference}"
            )));
        }
        // (point, is_tail, vertex index)
        let mut endpoints: Vec<(usize, bool, usize)> = Vec::with_capacity(2 * arcs.len());
        for (i, &(head, tail)) in arcs.iter().enumerate() {
            endpoints.push((head, false, i));
            endpoints.push((tail, true, i));
        }
        endpoints.sort_unstable();
        let mut respaced = vec![(0, 0); arcs.len()];
        let mut point = 0;
        for (slot, &(_, is_tail, i)) in endpoints.iter().enumerate() {
            if is_tail {
                respaced[i].1 = point;
            } else {
                respaced[i].0 = point;
            }
            point += 1;
            let (_, next_is_tail, next) = endpoints[(slot + 1) % endpoints.len()];
            if is_tail && !next_is_tail && next == i {
                point += 1;
            }
        }
        Self::new(point.max(1), respaced)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circumference(&self) -> usize {
        self.circumference
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn head(&self, v: usize) -> usize {
        self.arcs[v - 1].0
    }

    pub fn tail(&self, v: usize) -> usize {
        self.arcs[v - 1].1
    }

    /// Whether the arc of `v` contains circle point `point`.
    pub fn covers(&self, v: usize, point: usize) -> bool {
        let (head, tail) = self.arcs[v - 1];
        let m = self.circumference;
        (point + m - head) % m <= (tail + m - head) % m
    }

    /// Vertices ordered by their head as met on a clockwise walk starting at
    /// the smallest head point.
    pub fn head_traversal(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.n()).collect();
        order.sort_unstable_by_key(|&v| (self.head(v), v));
        order
    }
}

/// Intersection graph of the arcs. Two arcs on a circle meet exactly when one
/// of them contains the head of the other.
pub fn arcs_to_graph(model: &ArcModel) -> Graph {
    let n = model.n();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if model.covers(u, model.head(v)) || model.covers(v, model.head(u)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("arc pairs are in range")
}

/// Folds the head traversal `v_1, ..., v_n` onto the line:
/// `v_j -> 2j` for `j <= n/2`, else `v_j -> 2(n - j) + 1`. Heads that are
/// consecutive on the circle end up at most two positions apart.
pub fn circular_arc_ordering(model: &ArcModel) -> LinearOrdering {
    let n = model.n();
    let half = n / 2;
    let mut positions = vec![0; n];
    for (i, &v) in model.head_traversal().iter().enumerate() {
        let j = i + 1;
        positions[v - 1] = if j <= half { 2 * j } else { 2 * (n - j) + 1 };
    }
    LinearOrdering::from_positions(positions).expect("folding formula is a bijection")
}
