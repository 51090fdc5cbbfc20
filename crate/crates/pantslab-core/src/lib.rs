//! Combinatorial surfaces built by gluing unit equilateral triangles.
//!
//! A surface is described by an even number `N` of oriented triangles
//! together with a fixed-point-free involution pairing their `3N` sides.
//! On top of that representation this crate provides:
//!
//! * topology (Euler characteristic, genus, components) and dual
//!   trivalent graphs ([`surface`]),
//! * uniform seeded sampling of gluings and genus statistics ([`sampler`]),
//! * canonical codes and exhaustive isomorphism censuses ([`canonical`]),
//! * simplicial and transversal curves, curve straightening, the
//!   vertex-polygon/edge-rectangle refinement, cutting, and shortest
//!   essential cycles ([`complex`], [`curves`]),
//! * combinatorial pants decompositions, cluster graphs, tightness and
//!   loose-disk slides ([`pants`]),
//! * exact and log-domain evaluation of the associated counting and
//!   volume bounds, with independent brute-force enumerations
//!   ([`bounds`], [`oracles`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is
//! enabled by default. File formats and the command line live in the
//! companion `pantslab` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod canonical;
pub mod complex;
pub mod curves;
pub mod math;
pub mod oracles;
pub mod pants;
pub mod sampler;
pub mod surface;

pub use surface::{build_surface, dual_graph, surface_topology, CombSurface, Gluing, SideId};
