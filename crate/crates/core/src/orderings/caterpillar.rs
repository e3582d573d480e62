//! Spanning caterpillars and the interleaved leaves-then-spine ordering.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrdering};

/// A caterpillar given by its spine `p_1, ..., p_k` and the leaf set `L_i`
/// hanging off each spine vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caterpillar {
    spine: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl Caterpillar {
    /// `leaves[i]` belongs to `spine[i]`; the two lists must have equal length.
    pub fn new(spine: Vec<usize>, leaves: Vec<Vec<usize>>) -> Result<Self> {
        if spine.len() != leaves.len() {
            return Err(Error::validation(format!(
                "{} spine vertices but {} leaf sets",
                spine.len(),
                leaves.len()
            )));
        }
        Ok(Self { spine, leaves })
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn leaf_sets(&self) -> &[Vec<usize>] {
        &self.leaves
    }

    /// Edges of the tree: spine links, then leaf attachments.
    pub fn tree_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let spine = self.spine.windows(2).map(|w| (w[0], w[1]));
        let leaves = self
            .spine
            .iter()
            .zip(&self.leaves)
            .flat_map(|(&p, ls)| ls.iter().map(move |&l| (l, p)));
        spine.chain(leaves)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaterpillarViolation {
    EmptySpine,
    VertexOutOfRange(usize),
    DuplicateVertex(usize),
    MissingVertex(usize),
    /// A tree edge that `G` does not have.
    TreeEdgeNotInGraph(usize, usize),
    /// An edge of `G` whose endpoints are more than 4 apart in the tree.
    EdgeTooLong {
        u: usize,
        v: usize,
        distance: usize,
    },
    /// An edge of `G` at tree distance 4 with a spine endpoint.
    DistanceFourNotLeaves {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for CaterpillarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptySpine => write!(f, "empty spine"),
            Self::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Self::DuplicateVertex(v) => write!(f, "vertex {v} listed twice"),
            Self::MissingVertex(v) => write!(f, "vertex {v} not covered"),
            Self::TreeEdgeNotInGraph(u, v) => write!(f, "tree edge ({u}, {v}) not in graph"),
            Self::EdgeTooLong { u, v, distance } => {
                write!(f, "edge ({u}, {v}) at tree distance {distance}")
            }
            Self::DistanceFourNotLeaves { u, v } => {
                write!(f, "edge ({u}, {v}) at tree distance 4 has a spine endpoint")
            }
        }
    }
}

/// Every violation found by [`validate_caterpillar`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaterpillarReport {
    pub violations: Vec<CaterpillarViolation>,
}

impl CaterpillarReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CaterpillarReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| format!("{v}")).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Copy)]
struct Place {
    spine_index: usize,
    leaf: bool,
}

/// Checks that `t` is a spanning caterpillar of `g` using only edges of `g`,
/// that every edge of `g` spans tree distance at most 4, and that distance 4
/// only occurs between two leaves.
pub fn validate_caterpillar(g: &Graph, t: &Caterpillar) -> CaterpillarReport {
    let n = g.n();
    let mut violations = Vec::new();
    if t.spine.is_empty() && n > 0 {
        violations.push(CaterpillarViolation::EmptySpine);
    }

    let mut place: Vec<Option<Place>> = vec![None; n + 1];
    let mut listed = |v: usize, p: Place, violations: &mut Vec<_>| {
        if v == 0 || v > n {
            violations.push(CaterpillarViolation::VertexOutOfRange(v));
        } else if place[v].is_some() {
            violations.push(CaterpillarViolation::DuplicateVertex(v));
        } else {
            place[v] = Some(p);
        }
    };
    for (i, &p) in t.spine.iter().enumerate() {
        listed(
            p,
            Place {
                spine_index: i,
                leaf: false,
            },
            &mut violations,
        );
    }
    for (i, ls) in t.leaves.iter().enumerate() {
        for &l in ls {
            listed(
                l,
                Place {
                    spine_index: i,
                    leaf: true,
                },
                &mut violations,
            );
        }
    }
    for (v, p) in place.iter().enumerate().skip(1) {
        if p.is_none() {
            violations.push(CaterpillarViolation::MissingVertex(v));
        }
    }
    for (u, v) in t.tree_edges() {
        if !g.has_edge(u, v) {
            violations.push(CaterpillarViolation::TreeEdgeNotInGraph(u, v));
        }
    }
    for (u, v) in g.edges() {
        let (Some(a), Some(b)) = (place[u], place[v]) else {
            continue;
        };
        let distance =
            a.spine_index.abs_diff(b.spine_index) + usize::from(a.leaf) + usize::from(b.leaf);
        if distance > 4 {
            violations.push(CaterpillarViolation::EdgeTooLong { u, v, distance });
        } else if distance == 4 && !(a.leaf && b.leaf) {
            violations.push(CaterpillarViolation::DistanceFourNotLeaves { u, v });
        }
    }
    CaterpillarReport { violations }
}

/// `L_1, p_1, L_2, p_2, ..., L_k, p_k` with each leaf set in ascending id
/// order. Fails with [`Error::InvalidCaterpillar`] when validation does.
pub fn atfree_ordering(g: &Graph, t: &Caterpillar) -> Result<LinearOrdering> {
    let report = validate_caterpillar(g, t);
    if !report.is_valid() {
        return Err(Error::InvalidCaterpillar(report));
    }
    let mut sequence = Vec::with_capacity(g.n());
    for (&p, ls) in t.spine.iter().zip(&t.leaves) {
        let start = sequence.len();
        sequence.extend_from_slice(ls);
        sequence[start..].sort_unstable();
        sequence.push(p);
    }
    LinearOrdering::from_sequence(sequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::ordering_width;

    fn cat(spine: &[usize], leaves: &[&[usize]]) -> Caterpillar {
        Caterpillar::new(spine.to_vec(), leaves.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn path_and_star_are_valid() {
        let p4 = families::path(4);
        let t = cat(&[1, 2, 3, 4], &[&[], &[], &[], &[]]);
        assert!(validate_caterpillar(&p4, &t).is_valid());
        let ord = atfree_ordering(&p4, &t).unwrap();
        assert_eq!(ord.sequence(), &[1, 2, 3, 4]);
        assert_eq!(ordering_width(&p4, &ord), Ok(1));

        // K_{1,3} with centre 4 and leaves a=1, b=2, d=3
        let star = Graph::from_edges(4, [(4, 1), (4, 2), (4, 3)]).unwrap();
        let t = cat(&[4], &[&[3, 1, 2]]);
        assert!(validate_caterpillar(&star, &t).is_valid());
        let ord = atfree_ordering(&star, &t).unwrap();
        assert_eq!(ord.sequence(), &[1, 2, 3, 4]);
        assert_eq!(ordering_width(&star, &ord), Ok(3));
    }

    // spine p1=1, p2=2, p3=3, p4=4; leaves x=5 on p1, z=6 on p3, w=7 on p4
    fn spine_four(extra: &[(usize, usize)]) -> (Graph, Caterpillar) {
        let mut edges = vec![(1, 2), (2, 3), (3, 4), (5, 1), (6, 3), (7, 4)];
        edges.extend_from_slice(extra);
        (
            Graph::from_edges(7, edges).unwrap(),
            cat(&[1, 2, 3, 4], &[&[5], &[], &[6], &[7]]),
        )
    }

    #[test]
    fn distance_rules() {
        // x–z: leaves of p1 and p3, distance 4
        let (g, t) = spine_four(&[(5, 6)]);
        assert!(validate_caterpillar(&g, &t).is_valid());
        // x–p3: distance 3
        let (g, t) = spine_four(&[(5, 3)]);
        assert!(validate_caterpillar(&g, &t).is_valid());
        // x–w: leaves of p1 and p4, distance 5
        let (g, t) = spine_four(&[(5, 7)]);
        assert_eq!(
            validate_caterpillar(&g, &t).violations,
            vec![CaterpillarViolation::EdgeTooLong {
                u: 5,
                v: 7,
                distance: 5
            }]
        );
        // x–p4: distance 4 with a spine endpoint
        let (g, t) = spine_four(&[(5, 4)]);
        assert_eq!(
            validate_caterpillar(&g, &t).violations,
            vec![CaterpillarViolation::DistanceFourNotLeaves { u: 4, v: 5 }]
        );
        assert!(atfree_ordering(&g, &t).is_err());
    }

    #[test]
    fn structural_violations_are_all_listed() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3)]).unwrap();
        let t = cat(&[1, 3], &[&[2, 2], &[6]]);
        let report = validate_caterpillar(&g, &t);
        assert_eq!(
            report.violations,
            vec![
                CaterpillarViolation::DuplicateVertex(2),
                CaterpillarViolation::VertexOutOfRange(6),
                CaterpillarViolation::MissingVertex(4),
                CaterpillarViolation::MissingVertex(5),
                CaterpillarViolation::TreeEdgeNotInGraph(1, 3),
                CaterpillarViolation::TreeEdgeNotInGraph(6, 3),
            ]
        );
        assert!(Caterpillar::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn interleaved_two_spine_example() {
        // p1=1, p2=2, x=3 on p1, y=4 on p2, plus x–y
        let g = Graph::from_edges(4, [(1, 2), (3, 1), (4, 2), (3, 4)]).unwrap();
        let t = cat(&[1, 2], &[&[3], &[4]]);
        let ord = atfree_ordering(&g, &t).unwrap();
        assert_eq!(ord.sequence(), &[3, 1, 4, 2]);
        assert_eq!(ordering_width(&g, &ord), Ok(2));
        assert!(2 <= 3 * g.max_degree() - 2);
    }
}
