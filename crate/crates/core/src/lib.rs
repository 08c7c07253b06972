//! The tri-pants graph of the twice-punctured torus, computed exactly.
//!
//! Vertices are tri-arcs: triples of arcs based at a puncture, modelled as
//! words in the free group on `a` and `b`. Edges are big and small flips.
//! Projecting each tri-arc to the slopes of its arcs maps the graph onto
//! the dual tree of the Farey tessellation.

pub mod explorer;
pub mod farey;
pub mod freegroup;
pub mod pushmap;
pub mod triarc;

pub use explorer::{
    exact_distance, fiber_distance, find_cycles, find_path, lower_bound_distance, EdgeFilter,
    ExplorationBall, ExploreError, PathReport,
};
pub use farey::{FareyEdge, FareyError, FareyTriangle, Slope};
pub use freegroup::{AbelianImage, FreeWord, Letter};
pub use pushmap::{Automorphism, PushGen, PushWord};
pub use triarc::{ArcClass, MoveKind, MoveLabel, TriArc, TriArcError};
