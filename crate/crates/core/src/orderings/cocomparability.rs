//! Orderings of co-comparability graphs from a transitive orientation of the
//! complement.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrdering};

/// Default cap on complement edges for [`find_transitive_orientation`].
pub const DEFAULT_ORIENTATION_CAP: usize = 20;

/// Directed pairs `(u, v)` read as `u ≺ v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(arcs: Vec<(usize, usize)>) -> Self {
        Self { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Checks that the arcs orient every edge of `host` exactly once and form
    /// a strict partial order.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let n = host.n();
        let mut before = vec![vec![false; n + 1]; n + 1];
        for &(u, v) in &self.arcs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if !host.has_edge(u, v) {
                return Err(Error::validation(format!(
                    "arc {u} < {v} is not an edge of the oriented graph"
                )));
            }
            if before[v][u] {
                return Err(Error::validation(format!(
                    "both {u} < {v} and {v} < {u} are present"
                )));
            }
            if before[u][v] {
                return Err(Error::validation(format!("arc {u} < {v} is listed twice")));
            }
            before[u][v] = true;
        }
        if let Some((u, v)) = host.edges().find(|&(u, v)| !before[u][v] && !before[v][u]) {
            return Err(Error::validation(format!(
                "edge ({u}, {v}) is not oriented"
            )));
        }
        for &(u, v) in &self.arcs {
            if let Some(w) = (1..=n).find(|&w| before[v][w] && !before[u][w]) {
                return Err(Error::validation(format!(
                    "not transitive: {u} < {v} and {v} < {w} but not {u} < {w}"
                )));
            }
        }
        Ok(())
    }
}

/// Topological order of a transitive orientation of `complement(g)`,
/// smallest available id first.
pub fn cocomparability_ordering(g: &Graph, orientation: &Orientation) -> Result<LinearOrdering> {
    let n = g.n();
    orientation.validate(&g.complement())?;
    let mut successors = vec![Vec::new(); n + 1];
    let mut indegree = vec![0usize; n + 1];
    for &(u, v) in orientation.arcs() {
        successors[u].push(v);
        indegree[v] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut sequence = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        sequence.push(u);
        for &v in &successors[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if sequence.len() != n {
        return Err(Error::validation("orientation contains a directed cycle"));
    }
    LinearOrdering::from_sequence(sequence)
}

/// Searches for a transitive orientation of `complement(g)` by backtracking
/// over edge directions with forced propagation: once `a ≺ b` and `b ≺ c`
/// are fixed, `a ≺ c` is forced, and a conflict abandons the branch.
/// Returns `None` when no orientation exists.
pub fn find_transitive_orientation(g: &Graph, cap: usize) -> Result<Option<Orientation>> {
    let complement = g.complement();
    if complement.edge_count() > cap {
        return Err(Error::SizeCap(format!(
            "complement has {} edges, the orientation search is capped at {cap}; supply an orientation",
            complement.edge_count()
        )));
    }
    let mut search = OrientationSearch::new(&complement);
    if !search.branch(0) {
        return Ok(None);
    }
    let arcs = search
        .edges
        .iter()
        .zip(&search.forward)
        .map(|(&(u, v), dir)| match dir {
            Some(true) => (u, v),
            Some(false) => (v, u),
            None => unreachable!("every edge is decided on success"),
        })
        .collect();
    Ok(Some(Orientation::new(arcs)))
}

struct OrientationSearch<'g> {
    host: &'g Graph,
    edges: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    /// `Some(true)` orients edge `(u, v)` (with `u < v`) as `u ≺ v`.
    forward: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl<'g> OrientationSearch<'g> {
    fn new(host: &'g Graph) -> Self {
        let edges: Vec<_> = host.edges().collect();
        let index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Self {
            host,
            forward: vec![None; edges.len()],
            edges,
            index,
            trail: Vec::new(),
        }
    }

    /// Direction of the pair `a ≺ b`: `Some(true)` if set that way,
    /// `Some(false)` if set the other way, `None` if open.
    fn precedes(&self, a: usize, b: usize) -> Option<bool> {
        let (key, flip) = if a < b {
            ((a, b), false)
        } else {
            ((b, a), true)
        };
        self.forward[self.index[&key]].map(|f| f != flip)
    }

    fn set(&mut self, a: usize, b: usize) {
        let (key, forward) = if a < b {
            ((a, b), true)
        } else {
            ((b, a), false)
        };
        let i = self.index[&key];
        self.forward[i] = Some(forward);
        self.trail.push(i);
    }

    /// Fixes `a ≺ b` and everything it forces; false on conflict.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mut queue = vec![(a, b)];
        self.set(a, b);
        while let Some((a, b)) = queue.pop() {
            // x ≺ a forces x ≺ b; b ≺ y forces a ≺ y
            let mut forced = Vec::new();
            for &x in self.host.neighbors(a) {
                if x != b && self.precedes(x, a) == Some(true) {
                    forced.push((x, b));
                }
            }
            for &y in self.host.neighbors(b) {
                if y != a && self.precedes(b, y) == Some(true) {
                    forced.push((a, y));
                }
            }
            for (p, q) in forced {
                if !self.host.has_edge(p, q) {
                    return false;
                }
                match self.precedes(p, q) {
                    Some(true) => {}
                    Some(false) => return false,
                    None => {
                        self.set(p, q);
                        queue.push((p, q));
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let i = self.trail.pop().unwrap();
            self.forward[i] = None;
        }
    }

    fn branch(&mut self, from: usize) -> bool {
        let Some(next) = (from..self.edges.len()).find(|&i| self.forward[i].is_none()) else {
            return true;
        };
        let (u, v) = self.edges[next];
        for (a, b) in [(u, v), (v, u)] {
            let mark = self.trail.len();
            if self.assign(a, b) && self.branch(next + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}
