//! Exact-arithmetic engine for counting rigid genus-0 tropical curves and
//! evaluating a gluing formula over the dual intersection complex of a
//! triple-product degeneration.
//!
//! Everything is computed over the integers and rationals: rigidity is a
//! rank condition, so there is no floating point anywhere in the data path.
//!
//! The crate is organized around the moving parts of the computation:
//!
//! - [`lattice`]: integral vectors in Z² and exact rationals,
//! - [`complex`]: the dual intersection complex (a closed triangle), its
//!   face lattice and the derivative-to-contact-order rules,
//! - [`tropical`]: combinatorial types of tropical curves, realizations,
//!   balancing, rigidity and automorphisms,
//! - [`enumerate`]: search for all rigid curves through a point
//!   configuration in the plane, plus the classical recursion used as an
//!   independent oracle,
//! - [`novikov`] and [`glue`]: the energy ledger and the per-curve gluing
//!   recursion itself,
//! - [`files`] and [`render`]: the JSON file formats and SVG output used
//!   by the command-line driver.

pub mod complex;
pub mod enumerate;
pub mod error;
pub mod files;
pub mod glue;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod novikov;
pub mod render;
pub mod tropical;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
