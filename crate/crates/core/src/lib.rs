//! Exact generating functions of weighted perfect matchings.
//!
//! The crate computes `GenPM(G, w) = Σ_M x^{w(M)}` over the perfect
//! matchings of a graph. Planar pieces are handled by Pfaffians of
//! Kasteleyn-oriented adjacency matrices; graphs that are planar after
//! removing a bounded apex set, glued together along small clique-sums, are
//! handled by a dynamic program over a tree decomposition that replaces each
//! child subtree by a small planar matchgate.
//!
//! Everything runs over `Frac(Z[x])` with arbitrary-precision coefficients,
//! so results are exact. The crate is `no_std` (with `alloc`) unless the
//! `std` feature is enabled; `parallel` adds rayon-backed map-reduce loops.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod boundary;
pub mod branching;
pub mod decomposition;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod limits;
pub mod matchgate;
pub mod pfaffian;
pub mod planar;
pub mod poly;

pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph, Labels, Matching};
pub use limits::Limits;
pub use poly::{IntPoly, PolyFrac};
