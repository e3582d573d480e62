//! Independent checks of representations and orderings.
//!
//! Reconstruction here goes through [`Layer::value`] and rational
//! arithmetic, pair by pair, and never looks at the ordering or the layer
//! formulas that produced a representation.

use alloc::format;
use alloc::vec::Vec;

use crate::construction::{CubeRepresentation, IndifferenceRepresentation, Layer};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of comparing a representation's intersection graph with a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    /// Edges of the graph the representation lacks.
    pub missing_edges: Vec<(usize, usize)>,
    /// Edges of the representation the graph lacks.
    pub extra_edges: Vec<(usize, usize)>,
    /// Whether each layer contains every edge of the graph.
    pub per_layer_supergraph: Vec<bool>,
    pub dims: usize,
    /// Width of the source ordering on the graph (the recorded width when the
    /// representation carries no ordering).
    pub width_checked: usize,
}

fn layer_adjacent(layer: &Layer, u: usize, v: usize) -> bool {
    let gap = layer.value(u) - layer.value(v);
    let length = layer.interval_length();
    gap <= length && -gap <= length
}

/// Intersection of all layers' indifference graphs.
pub fn realize_intersection(rep: &IndifferenceRepresentation) -> Result<Graph> {
    let n = rep.n();
    if let Some(layer) = rep.layers().iter().find(|l| l.n() != n) {
        return Err(Error::validation(format!(
            "layer {} covers {} vertices, expected {n}",
            layer.index(),
            layer.n()
        )));
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rep.layers().iter().all(|l| layer_adjacent(l, u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Intersection graph of unit cubes: `u ~ v` iff the anchors differ by at
/// most 1 in every dimension.
pub fn realize_cubes(cubes: &CubeRepresentation) -> Graph {
    let n = cubes.n();
    let one = crate::Rational::from_integer(1);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            let meet = (0..cubes.k()).all(|d| {
                let gap = cubes.anchor(u, d) - cubes.anchor(v, d);
                gap <= one && -gap <= one
            });
            if meet {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// Compares `realize_intersection(rep)` with `g` and checks each layer for
/// the supergraph property. Fails only when the vertex counts disagree.
pub fn verify_representation(
    g: &Graph,
    rep: &IndifferenceRepresentation,
) -> Result<VerificationReport> {
    if rep.n() != g.n() {
        return Err(Error::validation(format!(
            "representation covers {} vertices, graph has {}",
            rep.n(),
            g.n()
        )));
    }
    let realized = realize_intersection(rep)?;
    let missing_edges: Vec<_> = g
        .edges()
        .filter(|&(u, v)| !realized.has_edge(u, v))
        .collect();
    let extra_edges: Vec<_> = realized
        .edges()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let per_layer_supergraph = rep
        .layers()
        .iter()
        .map(|l| g.edges().all(|(u, v)| layer_adjacent(l, u, v)))
        .collect();
    let width_checked = match rep.ordering() {
        Some(ord) => ord.width_unchecked(g),
        None => rep.width(),
    };
    Ok(VerificationReport {
        passed: missing_edges.is_empty() && extra_edges.is_empty(),
        missing_edges,
        extra_edges,
        per_layer_supergraph,
        dims: rep.dims(),
        width_checked,
    })
}

/// Largest graph [`brute_force_bandwidth`] accepts.
pub const BRUTE_FORCE_CAP: usize = 9;

/// Minimum width over all `n!` orderings (Heap's permutation order).
pub fn brute_force_bandwidth(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::SizeCap(format!(
            "brute-force bandwidth is capped at {BRUTE_FORCE_CAP} vertices, graph has {n}"
        )));
    }
    let edges: Vec<_> = g.edges().collect();
    let width = |perm: &[usize]| {
        // perm[v - 1] is the position of v
        edges
            .iter()
            .map(|&(u, v)| perm[u - 1].abs_diff(perm[v - 1]))
            .max()
            .unwrap_or(0)
    };
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = width(&perm);
    let mut counters = alloc::vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            best = best.min(width(&perm));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Whether a representation that verifies against `g` uses at most
/// `claimed_bound` dimensions. A representation that does not verify is a
/// validation error.
pub fn check_dimension_bounds(
    g: &Graph,
    rep: &IndifferenceRepresentation,
    claimed_bound: usize,
) -> Result<bool> {
    let report = verify_representation(g, rep)?;
    if !report.passed {
        return Err(Error::validation(format!(
            "representation does not verify: {} missing, {} extra edges",
            report.missing_edges.len(),
            report.extra_edges.len()
        )));
    }
    Ok(rep.dims() <= claimed_bound)
}
