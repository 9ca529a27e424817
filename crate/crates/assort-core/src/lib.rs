//! Extremal assortativity over degree classes of simple connected graphs.
//!
//! The crate is split into:
//! - [`graph`]: labeled small graphs, degrees, S-metric, assortativity,
//!   connectivity;
//! - [`canon`]: canonical labeling and isomorphism testing;
//! - [`graph6`]: the standard graph6 text encoding;
//! - [`sequences`]: graphical degree sequence tests and enumeration;
//! - [`enumerate`]: isomorph-free generation of all simple connected graphs
//!   of a given order, partitioned into degree classes;
//! - [`rewire`]: single edge-pair rewirings, greedy heuristics A/B/C,
//!   meta-graphs and counterexample counting;
//! - [`wire`]: the greedy wiring heuristic with exhaustive tie-break BFS.
//!
//! Everything here is pure computation over value types; file formats and
//! parallel drivers live in the companion `assortlab` crate.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod rewire;
pub mod sequences;
pub mod wire;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{degree_classes, enumerate_connected, DegreeClass, GraphCatalog};
pub use graph::{DegreeSequence, Graph, MAX_ORDER};
pub use rewire::{build_meta_graph, HeuristicKind, MetaGraph, RewireMove};
pub use wire::{greedy_wire_all, Classification, WiringOutcome, WiringState};
