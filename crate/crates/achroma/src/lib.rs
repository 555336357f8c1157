//! Achromatic and chromatic numbers of signed graphs.
//!
//! A signed graph pairs a simple graph with an edge signature. Switching a
//! vertex set flips the signs across the cut; colourings take values in the
//! sign-symmetric sets `M_k` and are *complete* when every edge type of the
//! complete signed multigraph `K*_k` is realized. This crate provides:
//!
//! - the underlying types ([`graph`]) and switching machinery ([`switching`]),
//! - proper/complete colouring checks and reductions ([`colouring`]),
//! - exact solvers for the achromatic number psi and chromatic number chi
//!   ([`solver`]),
//! - closed-form values and constructive colourings for paths, cycles and
//!   signed complete graphs ([`formulas`]),
//! - generators for extremal families and the hardness reduction
//!   ([`families`]),
//! - vertex identification, congruence classes and reduced graphs
//!   ([`homomorphism`]),
//! - text formats, a seeded self-check harness and the CLI ([`format`],
//!   [`harness`], [`cli`]).
//!
//! The `examples/` directory shows one runnable walkthrough per capability;
//! `cargo run --example` lists them.

pub mod cli;
pub mod colouring;
pub mod error;
pub mod families;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod homomorphism;
pub mod matching;
pub mod report;
pub mod solver;
pub mod switching;

pub use error::{Error, Result};
