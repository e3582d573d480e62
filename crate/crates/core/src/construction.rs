//! Indifference-graph layers and unit-cube anchors from a linear ordering.
//!
//! For an ordering `u_1, ..., u_n` of width `b >= 1` the representation has
//! `b + 1` layers:
//!
//! * layer 0 places `u_j` at `j` for `j <= b` and otherwise at
//!   `f_0(u_{j-b}) + b`, plus `ε = 1/n²` when `u_{j-b} u_j` is not an edge;
//!   its interval length is `b`.
//! * layer `i` (`1 <= i <= b`) cuts the ordering into blocks of `b`
//!   consecutive positions starting at position `i`. Vertices before position
//!   `i` sit at 2. In block `t` the first vertex sits at `t`, its neighbours in
//!   the block at `t + 2`, the rest at `t + 3`; the interval length is 2.
//!
//! Every layer contains all edges of the graph, and every non-edge is missing
//! from at least one layer, so the intersection of the layers is the graph.
//! Values are exact: each layer stores integer numerators over one
//! denominator (`n²` for layer 0, 1 for the block layers).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrdering};
use crate::Rational;

/// One indifference graph, given as a unit interval representation with
/// its interval length: `u ~ v` iff `|value(u) - value(v)| <= length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    index: usize,
    denominator: i128,
    length: i128,
    /// Numerators over `denominator`, slot `v - 1` for vertex `v`.
    values: Vec<i128>,
}

impl Layer {
    /// Builds a layer from arbitrary rationals, bringing them over a common
    /// denominator.
    pub fn from_ratios(index: usize, length: Rational, values: &[Rational]) -> Result<Self> {
        if length < Rational::from_integer(0) {
            return Err(Error::validation(format!(
                "layer {index} has negative interval length"
            )));
        }
        let overflow = || Error::validation(format!("layer {index} denominators overflow i128"));
        let mut denominator = *length.denom();
        for value in values {
            let d = *value.denom();
            denominator = (denominator / denominator.gcd(&d))
                .checked_mul(d)
                .ok_or_else(overflow)?;
        }
        let scale = |r: &Rational| {
            r.numer()
                .checked_mul(denominator / r.denom())
                .ok_or_else(overflow)
        };
        Ok(Self {
            index,
            denominator,
            length: scale(&length)?,
            values: values.iter().map(scale).collect::<Result<_>>()?,
        })
    }

    /// Layer position in its representation (0 is the width-`b` layer).
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Common denominator of all values and the interval length.
    pub fn denominator(&self) -> i128 {
        self.denominator
    }

    /// Interval length numerator over [`Layer::denominator`].
    pub fn length_numerator(&self) -> i128 {
        self.length
    }

    /// Value numerators in vertex order.
    pub fn numerators(&self) -> &[i128] {
        &self.values
    }

    /// `f(v)` in lowest terms.
    pub fn value(&self, v: usize) -> Rational {
        Rational::new(self.values[v - 1], self.denominator)
    }

    pub fn interval_length(&self) -> Rational {
        Rational::new(self.length, self.denominator)
    }

    /// Whether `u` and `v` are adjacent in this indifference graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.values[u - 1] - self.values[v - 1]).abs() <= self.length
    }
}

/// A family of indifference graphs whose intersection is meant to be the
/// source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndifferenceRepresentation {
    layers: Vec<Layer>,
    ordering: Option<LinearOrdering>,
    width: usize,
}

impl IndifferenceRepresentation {
    /// Assembles a representation from layers produced elsewhere (a file, a
    /// test). All layers must cover the same vertex count.
    pub fn from_layers(
        layers: Vec<Layer>,
        ordering: Option<LinearOrdering>,
        width: usize,
    ) -> Result<Self> {
        let Some(first) = layers.first() else {
            return Err(Error::validation(
                "a representation needs at least one layer",
            ));
        };
        let n = first.n();
        if let Some(bad) = layers.iter().find(|l| l.n() != n) {
            return Err(Error::validation(format!(
                "layer {} covers {} vertices, layer {} covers {n}",
                bad.index(),
                bad.n(),
                first.index()
            )));
        }
        if let Some(ord) = &ordering {
            if ord.len() != n {
                return Err(Error::validation(format!(
                    "ordering covers {} vertices, layers cover {n}",
                    ord.len()
                )));
            }
        }
        Ok(Self {
            layers,
            ordering,
            width,
        })
    }

    pub fn n(&self) -> usize {
        self.layers[0].n()
    }

    /// Number of layers, i.e. cube dimensions.
    pub fn dims(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Ordering the layers were built from, if known.
    pub fn ordering(&self) -> Option<&LinearOrdering> {
        self.ordering.as_ref()
    }

    /// Width of the source ordering.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Copy with the layer at slot `slot` removed.
    pub fn without_layer(&self, slot: usize) -> Result<Self> {
        if slot >= self.layers.len() {
            return Err(Error::validation(format!(
                "no layer at slot {slot}; representation has {}",
                self.layers.len()
            )));
        }
        let mut layers = self.layers.clone();
        layers.remove(slot);
        Self::from_layers(layers, self.ordering.clone(), self.width)
    }
}

/// The width-`b` layer (index 0). Fails with [`Error::Degenerate`] when the
/// ordering has width 0.
pub fn layer_base(g: &Graph, ord: &LinearOrdering) -> Result<Layer> {
    ord.check_matches(g)?;
    let width = ord.width_unchecked(g);
    if width == 0 {
        return Err(Error::Degenerate(
            "the base layer needs an ordering of width at least 1".into(),
        ));
    }
    Ok(base_layer(g, ord, width))
}

/// Block layer `i`, `1 <= i <= b`.
pub fn layer_block(g: &Graph, ord: &LinearOrdering, i: usize) -> Result<Layer> {
    ord.check_matches(g)?;
    let width = ord.width_unchecked(g);
    if i == 0 || i > width {
        return Err(Error::validation(format!(
            "block layer index {i} outside 1..={width}"
        )));
    }
    let mut scratch = vec![0; g.n() + 1];
    Ok(block_layer(g, ord, width, i, &mut scratch))
}

fn base_layer(g: &Graph, ord: &LinearOrdering, width: usize) -> Layer {
    let n = g.n();
    let denominator = (n as i128) * (n as i128);
    let step = width as i128 * denominator;
    let mut by_position: Vec<i128> = Vec::with_capacity(n);
    for j in 1..=n {
        let value = if j <= width {
            j as i128 * denominator
        } else {
            let shift = if g.has_edge(ord.vertex_at(j - width), ord.vertex_at(j)) {
                0
            } else {
                1
            };
            by_position[j - width - 1] + step + shift
        };
        by_position.push(value);
    }
    let mut values = vec![0; n];
    for (p, value) in by_position.into_iter().enumerate() {
        values[ord.vertex_at(p + 1) - 1] = value;
    }
    Layer {
        index: 0,
        denominator,
        length: step,
        values,
    }
}

/// `stamp` is scratch of length `n + 1`; entries are overwritten with block
/// start positions, which never repeat within or across layers.
fn block_layer(
    g: &Graph,
    ord: &LinearOrdering,
    width: usize,
    i: usize,
    stamp: &mut [usize],
) -> Layer {
    let n = g.n();
    let mut values = vec![0i128; n];
    for j in 1..i.min(n + 1) {
        values[ord.vertex_at(j) - 1] = 2;
    }
    let mut start = i;
    let mut t: i128 = 0;
    while start <= n {
        let head = ord.vertex_at(start);
        for &w in g.neighbors(head) {
            stamp[w] = start;
        }
        values[head - 1] = t;
        for j in start + 1..=n.min(start + width - 1) {
            let u = ord.vertex_at(j);
            values[u - 1] = if stamp[u] == start { t + 2 } else { t + 3 };
        }
        start += width;
        t += 1;
    }
    Layer {
        index: i,
        denominator: 1,
        length: 2,
        values,
    }
}

/// Builds the `b + 1` layers for an ordering of width `b`.
///
/// Width 0 (no edges) yields a single layer of pairwise disjoint intervals:
/// position `j` maps to `2j` with interval length 1.
pub fn build_representation(g: &Graph, ord: &LinearOrdering) -> Result<IndifferenceRepresentation> {
    ord.check_matches(g)?;
    let n = g.n();
    let width = ord.width_unchecked(g);
    let layers = if width == 0 {
        let mut values = vec![0; n];
        for j in 1..=n {
            values[ord.vertex_at(j) - 1] = 2 * j as i128;
        }
        vec![Layer {
            index: 0,
            denominator: 1,
            length: 1,
            values,
        }]
    } else {
        let mut layers = Vec::with_capacity(width + 1);
        layers.push(base_layer(g, ord, width));
        let mut stamp = vec![0; n + 1];
        for i in 1..=width {
            layers.push(block_layer(g, ord, width, i, &mut stamp));
        }
        layers
    };
    Ok(IndifferenceRepresentation {
        layers,
        ordering: Some(ord.clone()),
        width,
    })
}

/// Unit-cube anchors: the cube of `v` is the product over dimensions `d` of
/// `[anchor(v, d), anchor(v, d) + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeRepresentation {
    n: usize,
    axes: Vec<CubeAxis>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct CubeAxis {
    denominator: i128,
    numerators: Vec<i128>,
}

impl CubeRepresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension count `k`.
    pub fn k(&self) -> usize {
        self.axes.len()
    }

    pub fn anchor(&self, v: usize, dim: usize) -> Rational {
        let axis = &self.axes[dim];
        Rational::new(axis.numerators[v - 1], axis.denominator)
    }

    pub fn anchors(&self, v: usize) -> Vec<Rational> {
        (0..self.k()).map(|d| self.anchor(v, d)).collect()
    }

    /// Whether the closed unit cubes of `u` and `v` meet.
    pub fn intersect(&self, u: usize, v: usize) -> bool {
        self.axes
            .iter()
            .all(|axis| (axis.numerators[u - 1] - axis.numerators[v - 1]).abs() <= axis.denominator)
    }
}

/// Divides every layer by its interval length, turning each into a unit
/// interval representation.
pub fn to_cubes(rep: &IndifferenceRepresentation) -> Result<CubeRepresentation> {
    let axes = rep
        .layers()
        .iter()
        .map(|layer| {
            if layer.length <= 0 {
                return Err(Error::validation(format!(
                    "layer {} has interval length {}; cannot scale to unit cubes",
                    layer.index(),
                    layer.interval_length()
                )));
            }
            // value / length = (num / den) / (len / den) = num / len
            Ok(CubeAxis {
                denominator: layer.length,
                numerators: layer.values.clone(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(CubeRepresentation { n: rep.n(), axes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    fn ints(values: &[i128]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_integer(v)).collect()
    }

    fn layer_values(layer: &Layer) -> Vec<Rational> {
        (1..=layer.n()).map(|v| layer.value(v)).collect()
    }

    /// C_4 with edges 12, 23, 34, 41 and ordering u1, u2, u4, u3.
    fn c4_case() -> (Graph, LinearOrdering) {
        (
            families::cycle(4),
            LinearOrdering::from_sequence(vec![1, 2, 4, 3]).unwrap(),
        )
    }

    #[test]
    fn base_layer_takes_epsilon_branch() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let layer = layer_base(&g, &LinearOrdering::identity(3)).unwrap();
        assert_eq!(
            layer_values(&layer),
            vec![r(1, 1), r(2, 1), r(28, 9)] // 3 + 1/9
        );
        assert_eq!(layer.interval_length(), r(1, 1));
        assert_eq!(layer.denominator(), 9);
    }

    #[test]
    fn base_layer_c4_has_no_shifts() {
        let (g, ord) = c4_case();
        let layer = layer_base(&g, &ord).unwrap();
        // vertex order 1, 2, 3, 4: u3 sits at position 4, u4 at position 3
        assert_eq!(layer_values(&layer), ints(&[1, 2, 4, 3]));
        assert_eq!(layer.interval_length(), r(2, 1));
    }

    #[test]
    fn base_layer_p3_is_p3() {
        let g = families::path(3);
        let layer = layer_base(&g, &LinearOrdering::identity(3)).unwrap();
        assert_eq!(layer_values(&layer), ints(&[1, 2, 3]));
        assert!(layer.adjacent(1, 2) && layer.adjacent(2, 3) && !layer.adjacent(1, 3));
    }

    #[test]
    fn base_layer_rejects_width_zero() {
        let g = Graph::new(3);
        assert!(matches!(
            layer_base(&g, &LinearOrdering::identity(3)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn block_layers_c4() {
        let (g, ord) = c4_case();
        let one = layer_block(&g, &ord, 1).unwrap();
        // u1:0, u2:2, u4:1, u3:3 in vertex order 1..4
        assert_eq!(layer_values(&one), ints(&[0, 2, 3, 1]));
        let two = layer_block(&g, &ord, 2).unwrap();
        // u1:2, u2:0, u4:3, u3:1
        assert_eq!(layer_values(&two), ints(&[2, 0, 1, 3]));
        assert_eq!(two.interval_length(), r(2, 1));
    }

    #[test]
    fn block_layer_p3_singletons() {
        let g = families::path(3);
        let layer = layer_block(&g, &LinearOrdering::identity(3), 1).unwrap();
        assert_eq!(layer_values(&layer), ints(&[0, 1, 2]));
    }

    #[test]
    fn block_layer_index_range() {
        let (g, ord) = c4_case();
        assert!(layer_block(&g, &ord, 0).is_err());
        assert!(layer_block(&g, &ord, 3).is_err());
    }

    #[test]
    fn build_c4_and_p4() {
        let (g, ord) = c4_case();
        let rep = build_representation(&g, &ord).unwrap();
        assert_eq!(rep.dims(), 3);
        assert_eq!(rep.width(), 2);
        assert_eq!(rep.layers()[1].index(), 1);

        let p4 = families::path(4);
        let rep = build_representation(&p4, &LinearOrdering::identity(4)).unwrap();
        assert_eq!(rep.dims(), 2);
        assert_eq!(layer_values(&rep.layers()[0]), ints(&[1, 2, 3, 4]));
        assert_eq!(layer_values(&rep.layers()[1]), ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn build_edgeless_is_single_disjoint_layer() {
        let g = Graph::new(4);
        let rep = build_representation(&g, &LinearOrdering::identity(4)).unwrap();
        assert_eq!(rep.dims(), 1);
        assert_eq!(layer_values(&rep.layers()[0]), ints(&[2, 4, 6, 8]));
        assert_eq!(rep.layers()[0].interval_length(), r(1, 1));
    }

    #[test]
    fn build_rejects_mismatched_ordering() {
        assert!(build_representation(&families::path(3), &LinearOrdering::identity(2)).is_err());
    }

    #[test]
    fn cubes_divide_by_length() {
        let (g, ord) = c4_case();
        let cubes = to_cubes(&build_representation(&g, &ord).unwrap()).unwrap();
        assert_eq!(cubes.k(), 3);
        let dim0: Vec<_> = (1..=4).map(|v| cubes.anchor(v, 0)).collect();
        // u1, u2, u4, u3 at 1/2, 1, 3/2, 2
        assert_eq!(dim0, vec![r(1, 2), r(1, 1), r(2, 1), r(3, 2)]);
        assert_eq!(cubes.anchors(2), vec![r(1, 1), r(1, 1), r(0, 1)]);

        let p3 = families::path(3);
        let cubes =
            to_cubes(&build_representation(&p3, &LinearOrdering::identity(3)).unwrap()).unwrap();
        assert_eq!(
            (1..=3).map(|v| cubes.anchor(v, 1)).collect::<Vec<_>>(),
            vec![r(0, 1), r(1, 2), r(1, 1)]
        );

        let e4 = Graph::new(4);
        let cubes =
            to_cubes(&build_representation(&e4, &LinearOrdering::identity(4)).unwrap()).unwrap();
        assert_eq!(cubes.anchors(3), vec![r(6, 1)]);
    }

    #[test]
    fn cubes_reject_zero_length() {
        let layer = Layer::from_ratios(0, r(0, 1), &ints(&[1, 2])).unwrap();
        let rep = IndifferenceRepresentation::from_layers(vec![layer], None, 0).unwrap();
        assert!(to_cubes(&rep).is_err());
    }

    #[test]
    fn from_ratios_uses_common_denominator() {
        let layer = Layer::from_ratios(0, r(3, 2), &[r(1, 3), r(5, 4)]).unwrap();
        assert_eq!(layer.denominator(), 12);
        assert_eq!(layer.numerators(), &[4, 15]);
        assert_eq!(layer.length_numerator(), 18);
        assert!(layer.adjacent(1, 2));
        assert!(Layer::from_ratios(0, r(-1, 1), &[]).is_err());
    }

    #[test]
    fn from_layers_checks_sizes() {
        let a = Layer::from_ratios(0, r(1, 1), &ints(&[1, 2])).unwrap();
        let b = Layer::from_ratios(1, r(1, 1), &ints(&[1, 2, 3])).unwrap();
        assert!(IndifferenceRepresentation::from_layers(vec![a, b], None, 1).is_err());
        assert!(IndifferenceRepresentation::from_layers(vec![], None, 0).is_err());
    }

    #[test]
    fn without_layer_removes_slot() {
        let (g, ord) = c4_case();
        let rep = build_representation(&g, &ord).unwrap();
        let smaller = rep.without_layer(2).unwrap();
        assert_eq!(smaller.dims(), 2);
        assert_eq!(smaller.layers()[1].index(), 1);
        assert!(rep.without_layer(3).is_err());
    }
}
