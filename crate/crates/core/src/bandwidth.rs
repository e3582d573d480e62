//! Ordering generators: an exact bandwidth search for small graphs and a
//! breadth-first level heuristic for everything else.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrdering};

/// Default vertex cap for [`exact_bandwidth`].
pub const DEFAULT_EXACT_CAP: usize = 16;

/// Breadth-first level ordering.
///
/// Components are handled in order of their smallest vertex id. Inside a
/// component the search starts from a pseudo-peripheral vertex, found by
/// repeatedly jumping to the minimum-degree vertex of the last BFS level
/// until the eccentricity stops growing. The first probe is the member at
/// index `seed % |component|` when members are sorted by `(degree, id)`.
/// Unvisited neighbours are enqueued by `(degree, id)`.
pub fn heuristic_ordering(g: &Graph, seed: u64) -> LinearOrdering {
    let n = g.n();
    let mut placed = vec![false; n + 1];
    let mut dist = vec![usize::MAX; n + 1];
    let mut sequence = Vec::with_capacity(n);

    for first in g.vertices() {
        if placed[first] {
            continue;
        }
        let mut members = bfs_levels(g, first, &mut dist)
            .into_iter()
            .flatten()
            .collect::<Vec<_>>();
        members.sort_unstable_by_key(|&v| (g.degree(v), v));
        let probe = members[(seed % members.len() as u64) as usize];
        let root = pseudo_peripheral(g, probe, &mut dist);
        for &v in &members {
            dist[v] = usize::MAX;
        }

        let start = sequence.len();
        placed[root] = true;
        sequence.push(root);
        let mut head = start;
        let mut children = Vec::new();
        while head < sequence.len() {
            let u = sequence[head];
            head += 1;
            children.clear();
            children.extend(g.neighbors(u).iter().copied().filter(|&w| !placed[w]));
            children.sort_unstable_by_key(|&w| (g.degree(w), w));
            for &w in &children {
                placed[w] = true;
                sequence.push(w);
            }
        }
    }
    LinearOrdering::from_sequence(sequence).expect("BFS visits every vertex once")
}

/// BFS levels from `root`. `dist` must be all `usize::MAX` on the component
/// and is left filled in; callers reset it.
fn bfs_levels(g: &Graph, root: usize, dist: &mut [usize]) -> Vec<Vec<usize>> {
    let mut levels = vec![vec![root]];
    dist[root] = 0;
    loop {
        let depth = levels.len();
        let mut next = Vec::new();
        for &u in levels.last().unwrap() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = depth;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return levels;
        }
        levels.push(next);
    }
}

fn pseudo_peripheral(g: &Graph, start: usize, dist: &mut [usize]) -> usize {
    let reset = |levels: &[Vec<usize>], dist: &mut [usize]| {
        for &v in levels.iter().flatten() {
            dist[v] = usize::MAX;
        }
    };
    let mut root = start;
    let mut levels = bfs_levels(g, root, dist);
    reset(&levels, dist);
    loop {
        let candidate = *levels
            .last()
            .unwrap()
            .iter()
            .min_by_key(|&&v| (g.degree(v), v))
            .unwrap();
        let candidate_levels = bfs_levels(g, candidate, dist);
        reset(&candidate_levels, dist);
        if candidate_levels.len() > levels.len() {
            root = candidate;
            levels = candidate_levels;
        } else {
            return root;
        }
    }
}

/// Minimum-width ordering by exhaustive placement search.
///
/// Widths are tried upward from a lower bound; for each candidate width the
/// search fills positions left to right, extending with the smallest vertex
/// id first. A partial placement is cut when a new vertex lands too far from
/// a placed neighbour, or when the unplaced neighbours of placed vertices
/// cannot all meet their position deadlines. The heuristic ordering serves
/// as the incumbent, so the search never runs at its width.
pub fn exact_bandwidth(g: &Graph, limit: usize) -> Result<(LinearOrdering, usize)> {
    let n = g.n();
    if n > limit {
        return Err(Error::SizeCap(format!(
            "exact bandwidth is capped at {limit} vertices but the graph has {n}; use heuristic_ordering"
        )));
    }
    let incumbent = heuristic_ordering(g, 0);
    let upper = incumbent.width_unchecked(g);
    for width in lower_bound(g)..upper {
        let mut search = PlacementSearch::new(g, width);
        if search.run() {
            let ord = LinearOrdering::from_sequence(search.sequence)
                .expect("placement search yields a permutation");
            return Ok((ord, width));
        }
    }
    Ok((incumbent, upper))
}

/// `max(ceil(Δ / 2), max over components of ceil((|C| - 1) / diam(C)))`.
fn lower_bound(g: &Graph) -> usize {
    let mut bound = g.max_degree().div_ceil(2);
    let mut dist = vec![usize::MAX; g.n() + 1];
    let mut seen = vec![false; g.n() + 1];
    for v in g.vertices() {
        if seen[v] {
            continue;
        }
        let levels = bfs_levels(g, v, &mut dist);
        let members: Vec<usize> = levels.iter().flatten().copied().collect();
        for &w in &members {
            dist[w] = usize::MAX;
            seen[w] = true;
        }
        if members.len() < 2 {
            continue;
        }
        let mut diameter = 0;
        for &w in &members {
            let levels = bfs_levels(g, w, &mut dist);
            diameter = diameter.max(levels.len() - 1);
            for &x in levels.iter().flatten() {
                dist[x] = usize::MAX;
            }
        }
        bound = bound.max((members.len() - 1).div_ceil(diameter));
    }
    bound
}

struct PlacementSearch<'g> {
    g: &'g Graph,
    width: usize,
    /// 0 for unplaced vertices.
    position: Vec<usize>,
    sequence: Vec<usize>,
    deadlines: Vec<usize>,
}

impl<'g> PlacementSearch<'g> {
    fn new(g: &'g Graph, width: usize) -> Self {
        let n = g.n();
        Self {
            g,
            width,
            position: vec![0; n + 1],
            sequence: Vec::with_capacity(n),
            deadlines: vec![0; n + 2],
        }
    }

    fn run(&mut self) -> bool {
        let n = self.g.n();
        let next = self.sequence.len() + 1;
        if next > n {
            return true;
        }
        for v in 1..=n {
            if self.position[v] != 0 {
                continue;
            }
            let fits = self.g.neighbors(v).iter().all(|&u| {
                let p = self.position[u];
                p == 0 || next - p <= self.width
            });
            if !fits {
                continue;
            }
            self.position[v] = next;
            self.sequence.push(v);
            if self.deadlines_feasible() && self.run() {
                return true;
            }
            self.sequence.pop();
            self.position[v] = 0;
        }
        false
    }

    /// Every unplaced vertex with a placed neighbour must land by
    /// `min(position of placed neighbour) + width`; the positions after the
    /// current prefix must accommodate all deadlines at once.
    fn deadlines_feasible(&mut self) -> bool {
        let n = self.g.n();
        let placed = self.sequence.len();
        self.deadlines.iter_mut().for_each(|c| *c = 0);
        for w in 1..=n {
            if self.position[w] != 0 {
                continue;
            }
            let deadline = self
                .g
                .neighbors(w)
                .iter()
                .filter(|&&u| self.position[u] != 0)
                .map(|&u| self.position[u] + self.width)
                .min();
            if let Some(d) = deadline {
                if d <= placed {
                    return false;
                }
                self.deadlines[d.min(n)] += 1;
            }
        }
        let mut due = 0;
        for d in placed + 1..=n {
            due += self.deadlines[d];
            if due > d - placed {
                return false;
            }
        }
        true
    }
}
