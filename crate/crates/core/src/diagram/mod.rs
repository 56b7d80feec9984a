//! Planar codes for spatial graph and link diagrams.
//!
//! A diagram is a list of nodes (graph vertices and crossings) whose slots are
//! numbered counterclockwise, and arcs joining two slots each. At a crossing
//! the understrand uses slots 0 and 2 and the overstrand slots 1 and 3.
//! Crossingless circles are counted separately as free loops.

mod band;
mod code;
mod json;
mod link;
mod spatial;
mod state;

pub use band::{bar_diagram, double, BandBoundary, BandedLink, BarDiagram};
pub use code::{Node, NodeKind, PlanarCode, Port, Smoothing};
pub use json::{diagram_to_json, link_to_json, load_diagram, parse_diagram, Diagram};
pub use link::LinkDiagram;
pub use spatial::{k4_cycles, k4_thetas, validate, Edge, GraphKind, SpatialGraphDiagram, K4_LABELS};
pub use state::{resolve_state, ResolvedGraph};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid diagram: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("the diagram has no orientation")]
    Unoriented,
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("expected a {expected} diagram, found {found}")]
    WrongKind { expected: GraphKind, found: GraphKind },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("{}", .0.join("\n"))]
    Load(Vec<String>),
}
