//! Temporal graphs: static graphs whose edges carry discrete availability
//! times. Journeys, disjoint-journey flows, cost-minimal labelings with their
//! exact oracles, edge kernels, and the Max-XOR gadget graph.

pub mod error;
pub mod expansion;
pub mod flow;
pub mod gadgets;
pub mod graph;
pub mod journeys;
pub mod labelings;
pub mod limits;
pub mod menger;
pub mod structure;
pub mod temporal;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::StaticExpansion;
pub use graph::{StaticGraph, Weight};
pub use limits::Limits;
pub use temporal::{Journey, Label, Labeling, TemporalGraph, TimeEdge};
