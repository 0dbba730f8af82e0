//! Generalized Heawood graphs `H_k` and their dual triangulated tori `T_k`.
//!
//! Both objects are quotients of the permutahedral tiling by a sublattice
//! `Λ_k` of the weight lattice. This crate builds them exactly, counts their
//! faces both by closed form and by enumeration, and computes automorphism
//! groups, colorings and Hamiltonian walks.
//!
//! The crate is `no_std` and only needs `alloc`. IO, serialization and the
//! command line live in `heawood-kit`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod analysis;
pub mod fixtures;
pub mod graph;
pub mod intlin;
pub mod lattice;
pub mod quotient;
pub mod symmetry;
pub mod tiling;

pub use crate::error::{Error, Result};
pub use crate::graph::Graph;
pub use crate::intlin::IntMatrix;
pub use crate::lattice::{KSignature, LatticeClass, Sublattice, WCoefficientVector};
pub use crate::quotient::{FVector, QuotientGraph, SimplicialComplex};
pub use crate::tiling::{OrderedPartition, TilingFace, TilingVertex};
