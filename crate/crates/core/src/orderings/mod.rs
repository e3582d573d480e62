//! Low-width orderings for three structured graph classes.
//!
//! * circular-arc graphs: fold the clockwise head order onto the line
//!   (width at most `2Δ`);
//! * co-comparability graphs: topologically sort a transitive orientation of
//!   the complement (width at most `2Δ - 1`);
//! * graphs with a spanning caterpillar whose edges span tree distance at
//!   most 4: interleave each spine vertex after its leaves (width at most
//!   `3Δ - 2`).

mod arcs;
mod caterpillar;
mod cocomparability;

pub use arcs::{arcs_to_graph, circular_arc_ordering, ArcModel};
pub use caterpillar::{
    atfree_ordering, validate_caterpillar, Caterpillar, CaterpillarReport, CaterpillarViolation,
};
pub use cocomparability::{
    cocomparability_ordering, find_transitive_orientation, Orientation, DEFAULT_ORIENTATION_CAP,
};
