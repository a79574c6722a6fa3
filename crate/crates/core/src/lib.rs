//! Distance-redundancy calculus for simple undirected graphs.
//!
//! A vertex is *distance-redundant* when deleting it leaves every distance
//! among the remaining vertices unchanged. This crate provides the
//! predicates around that idea (surrounding, twins, weak/strong links,
//! k-th order redundancy), graph surgeries that preserve the weak/strong
//! classes, iterated redundant-vertex deletion ("nibbling"), exhaustive
//! enumeration of small graphs with the associated counting formulas, and
//! G(n,p) sampling with the analytic threshold curves.
//!
//! The crate is `no_std` + `alloc`; everything here is pure computation.
//! File formats beyond the graph6 line codec, the CLI and parallel batch
//! drivers live in the companion `redgraph` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod dist;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod mesh;
pub mod nibble;
pub mod random;
pub mod redundancy;
pub mod transforms;
pub mod walks;

pub use bitset::BitSet;
pub use canon::CanonicalKey;
pub use dist::{Dist, DistanceMatrix, Metrics};
pub use graph::Graph;
pub use redundancy::{GraphClass, RedundancyReport};
