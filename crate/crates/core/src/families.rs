//! Standard graph families, numbered so that the identity ordering is the
//! natural one (paths along the line, the star centre first).

use alloc::vec::Vec;

use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("family edges are in range and loop-free")
}

/// `P_n`: edges `(i, i + 1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i, i + 1)).collect())
}

/// `C_n` for `n >= 3`: the path plus `(n, 1)`. Smaller `n` yields the path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    if n >= 3 {
        edges.push((n, 1));
    }
    build(n, edges)
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    build(
        n,
        (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect(),
    )
}

/// `K_{1, n-1}` with centre `1`.
pub fn star(n: usize) -> Graph {
    build(n, (2..=n).map(|v| (1, v)).collect())
}

/// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(
        a + b,
        (1..=a)
            .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
            .collect(),
    )
}

/// Every pair at index distance at most `band`; the identity ordering has
/// width `min(band, n - 1)`.
pub fn banded(n: usize, band: usize) -> Graph {
    build(
        n,
        (1..=n)
            .flat_map(|u| (u + 1..=n.min(u + band)).map(move |v| (u, v)))
            .collect(),
    )
}
