//! Seeded instance generators.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a fixed
//! seed reproduces the same instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubicity_core::orderings::{ArcModel, Caterpillar, Orientation};
use cubicity_core::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffled_labels(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    labels
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// `n` arcs with uniform heads on a circle of `20n` points and lengths up to
/// `density * 10n`, re-spaced with [`ArcModel::respaced`].
pub fn random_arc_model(n: usize, density: f64, seed: u64) -> ArcModel {
    let mut rng = rng(seed);
    let m = 20 * n.max(1);
    let longest = ((density.clamp(0.0, 1.0) * m as f64 / 2.0) as usize).clamp(1, m - 2);
    let arcs: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let head = rng.gen_range(0..m);
            let length = rng.gen_range(0..=longest);
            (head, (head + length) % m)
        })
        .collect();
    ArcModel::respaced(m, &arcs).expect("arcs are shorter than the circle")
}

/// Complement of the comparability graph of a random transitively closed DAG
/// on shuffled labels. The closure, oriented along the DAG, is returned as a
/// transitive orientation of the complement.
pub fn random_cocomparability(n: usize, density: f64, seed: u64) -> (Graph, Orientation) {
    let mut rng = rng(seed);
    let labels = shuffled_labels(n, &mut rng);
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        for cell in &mut row[i + 1..] {
            *cell = rng.gen_bool(density.clamp(0.0, 1.0));
        }
    }
    for k in 0..n {
        let through = reach[k].clone();
        for row in &mut reach {
            if row[k] {
                for (cell, &onward) in row.iter_mut().zip(&through) {
                    *cell |= onward;
                }
            }
        }
    }
    let mut arcs = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if reach[i][j] {
                arcs.push((labels[i], labels[j]));
            } else {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    arcs.sort_unstable();
    let g = Graph::from_edges(n, edges).expect("pairs are in range");
    (g, Orientation::new(arcs))
}

/// A random caterpillar on `n` shuffled labels (spine length uniform in
/// `1..=ceil(n/2)`, leaves attached to uniform spine vertices), plus each pair at
/// tree distance 2 or 3, or two leaves at distance 4, with probability
/// `density`.
pub fn random_caterpillar(n: usize, density: f64, seed: u64) -> (Graph, Caterpillar) {
    let mut rng = rng(seed);
    let labels = shuffled_labels(n, &mut rng);
    let k = if n == 0 {
        0
    } else {
        rng.gen_range(1..=n.div_ceil(2))
    };
    let spine = labels[..k].to_vec();
    let mut leaves = vec![Vec::new(); k];
    // (spine index, is leaf) per vertex
    let mut place = vec![(0, false); n + 1];
    for (i, &p) in spine.iter().enumerate() {
        place[p] = (i, false);
    }
    for &l in &labels[k..] {
        let i = rng.gen_range(0..k);
        leaves[i].push(l);
        place[l] = (i, true);
    }
    for ls in &mut leaves {
        ls.sort_unstable();
    }
    let t = Caterpillar::new(spine, leaves).expect("one leaf set per spine vertex");
    let mut edges: Vec<_> = t.tree_edges().collect();
    for u in 1..=n {
        for v in u + 1..=n {
            let ((iu, lu), (iv, lv)) = (place[u], place[v]);
            let d = iu.abs_diff(iv) + usize::from(lu) + usize::from(lv);
            let allowed = (2..4).contains(&d) || (d == 4 && lu && lv);
            if allowed && rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    (Graph::from_edges(n, edges).expect("pairs are in range"), t)
}
