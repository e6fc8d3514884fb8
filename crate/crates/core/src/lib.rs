//! Exact feasibility checking and constructive packing of rooted forests,
//! hyperforests, branchings and hyperbranchings under per-member and total
//! root-count bounds.
//!
//! The crate is organized around a small set of host structures (graphs,
//! hypergraphs, digraphs, dypergraphs), partition machinery with the
//! uncrossing lattice operations, rank-oracle matroids with a matroid
//! partition algorithm, and the packing algorithms themselves:
//!
//! * [`forest_packing`] — spanning and regular packings of forests with
//!   prescribed component counts and root budgets, via matroid union and
//!   an exchange/promotion loop.
//! * [`hyper_packing`] — the hypergraph layer: condition checkers, the
//!   trimming pipeline, and witness-carrying hyperforest packings.
//! * [`directed`] — desk-scale counterparts for branchings and
//!   hyperbranchings, including an exhaustive bipartite realization step.
//!
//! Everything that constructs a packing also emits enough witness data
//! (root sets, trim pairs, head choices, violating partitions) for an
//! independent verifier to confirm the result without re-running the
//! search.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `packing-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod directed;
pub mod dsu;
mod flow;
pub mod forest_packing;
pub mod ground;
pub mod hyper_packing;
pub mod matroids;
pub mod partitions;
pub mod spec;
pub mod theorems;

pub use ground::{Digraph, Dypergraph, Graph, GroundError, Hyperarc, Hypergraph};
pub use partitions::{Partition, Subpartition};
pub use spec::{ell_capped, ell_capped_sum, PackingSpec, SpecViolation};
