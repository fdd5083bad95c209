//! Exact computation of Hecke algebra canonical bases, cells, and their
//! Perron-Frobenius analysis for finite crystallographic Coxeter groups.
//!
//! The pipeline: build a Coxeter group from a Cartan matrix ([`coxeter`]),
//! compute the Kazhdan-Lusztig basis exactly ([`hecke`]), layer a canonical
//! basis table over it ([`canonical`]), derive cell preorders and cell
//! modules ([`cells`]), and run spectral analysis and structural
//! verification on top ([`perron`], [`cellular`]). Symmetric-group
//! combinatorics (Robinson-Schensted, dominance order, evacuation) live in
//! [`tableaux`]. All basis arithmetic is exact over `Z[v, v^-1]`
//! ([`laurent`]); floating point enters only in eigen-analysis.

pub mod canonical;
pub mod cells;
pub mod cellular;
pub mod chars;
pub mod cli;
pub mod coxeter;
pub mod hecke;
pub mod laurent;
pub mod perron;
pub mod report;
pub mod tableaux;

pub use coxeter::{CartanSpec, CoxeterSystem, Elt};
pub use laurent::LaurentPoly;
