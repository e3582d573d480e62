//! Cube representations of graphs built from linear vertex orderings.
//!
//! Given a graph `G` and an ordering of its vertices with width `b`, the
//! [`construction`] module produces `b + 1` indifference (unit interval)
//! supergraphs whose intersection is exactly `G`. Scaling each layer by its
//! interval length turns the family into unit-cube anchors in `b + 1`
//! dimensions.
//!
//! ```
//! use cubicity_core::{build_representation, families, heuristic_ordering, to_cubes, verify_representation};
//!
//! let g = families::cycle(4);
//! let ord = heuristic_ordering(&g, 0);
//! let rep = build_representation(&g, &ord)?;
//! assert!(verify_representation(&g, &rep)?.passed);
//! assert_eq!(to_cubes(&rep)?.k(), 3);
//! # Ok::<(), cubicity_core::Error>(())
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. File formats, instance
//! generators and the command-line front end live in the `cubicity` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bandwidth;
pub mod construction;
mod error;
pub mod families;
pub mod graph;
pub mod orderings;
pub mod verify;

pub use bandwidth::{exact_bandwidth, heuristic_ordering, DEFAULT_EXACT_CAP};
pub use construction::{
    build_representation, layer_base, layer_block, to_cubes, CubeRepresentation,
    IndifferenceRepresentation, Layer,
};
pub use error::{Error, Result};
pub use graph::{ordering_width, Graph, LinearOrdering};
pub use verify::{
    brute_force_bandwidth, check_dimension_bounds, realize_cubes, realize_intersection,
    verify_representation, VerificationReport,
};

/// Exact rational used for layer positions and cube anchors.
pub type Rational = num_rational::Ratio<i128>;
