//! Deterministic presentations of sofic shifts.
//!
//! A presentation is an edge-labeled directed graph; the shift it presents is
//! the set of label sequences of its bi-infinite walks. This crate provides
//!
//! - the graph model and transition action ([`graph`]),
//! - the sink-vertex, label-product and hat constructions ([`auxgraph`]),
//! - polynomial procedures for synchronizing words, separating words and
//!   recognizing synchronizing presentations ([`sync`]),
//! - follower separation, isomorphism, SFT and universality tests ([`classify`]),
//! - exact deciders over the action monoid for the general case ([`exact`]),
//! - instance generators ([`constructions`]),
//! - brute-force reference implementations for cross-checking ([`oracle`]),
//! - a text format and command-line front end ([`format`], [`cli`]).

pub mod auxgraph;
pub(crate) mod bits;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod sync;

pub use error::{Error, Result};
pub use graph::{
    disjoint_union, Component, DisjointUnion, Edge, Label, LabeledGraph, Side, SubsetState,
    VertexId, Word,
};
