//! Neighborhood-preserving translations on graphs.
//!
//! A translation is a partial map sending each vertex either to one of its
//! neighbors or to the black hole ω, injective on its domain and preserving
//! both edges and non-edges among domain vertices. This crate builds grid
//! graphs, checks and classifies translations, searches exhaustively for
//! the largest ones, and compares them with the spectral (graph Fourier)
//! notion of translation on signals and images.

pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod search;
pub mod signals;
pub mod spectral;
pub mod translations;

pub use graph::{grid_graph, Graph, GraphError, GridSpec, VertexId};
pub use signals::Signal;
pub use translations::{PartialVertexMap, Shift};
