//! Edge classification of undirected networks into hierarchical (p2c) and
//! peer (p2p) types, degree-distribution fitting, and BA/EBA generators.
//!
//! The analysis pipeline is:
//!
//! 1. [`graph::parse_edge_list`] and, for disconnected inputs,
//!    [`graph::largest_component`];
//! 2. [`centrality::eccentricity_profile`] to find the center set;
//! 3. [`centrality::assign_levels`] by multi-source BFS from the center;
//! 4. [`classifier::classify_edges`]: same-level edges are p2p, the rest p2c;
//! 5. [`distfit`] builds per-class degree CCDFs and fits power-law and
//!    Weibull models by linearized least squares.
//!
//! [`pipeline`] runs the whole chain and writes the report files.

pub mod centrality;
pub mod classifier;
pub mod cli;
pub mod distfit;
pub mod error;
pub mod generators;
pub mod graph;
pub mod numfmt;
pub mod pipeline;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
