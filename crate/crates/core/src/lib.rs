//! Exact distance spectra of connected graphs.
//!
//! The crate builds graphs from atoms and products, computes distance
//! characteristic polynomials with integer arithmetic, decides eigenvalue
//! threshold conditions exactly, recognizes the structured families with
//! few eigenvalues different from `-1` and `-2`, and runs census checks over
//! small graphs.

pub mod census;
pub mod families;
pub mod graph;
pub mod poly;
pub mod spectral;
pub mod util;
