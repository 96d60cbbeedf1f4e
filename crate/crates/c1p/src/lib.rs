//! A certifying toolkit for the consecutive ones property (C1P).
//!
//! A binary matrix has the C1P if some column permutation makes the 1s of
//! every row contiguous. This crate builds the incompatibility graph `G_M`
//! and forcing graph `F_M` of a matrix, tests bipartiteness (equivalent to
//! C1P), produces shortest odd-cycle and forcing-path certificates of
//! non-C1P, converts between the two certificate forms, extracts Tucker
//! pattern submatrices from non-C1P matrices, and reproduces the tight bound
//! on the shortest odd-cycle length.
//!
//! All indices in the public API are 1-based, matching the usual
//! `c_1 .. c_n` column labelling. Everything is a pure function over
//! immutable values; results are deterministic.
//!
//! ```
//! use c1p::matrix::BinaryMatrix;
//! use c1p::graph::build_incompatibility_graph;
//! use c1p::certify::{shortest_odd_cycle, verify_odd_cycle};
//!
//! let m = BinaryMatrix::parse("3 4\n1 1 0 0\n0 1 1 0\n0 1 0 1")?;
//! let g = build_incompatibility_graph(&m);
//! let cycle = shortest_odd_cycle(&g).expect("not C1P");
//! assert_eq!(cycle.len(), 7);
//! assert!(verify_odd_cycle(&m, &cycle).is_ok());
//! # Ok::<(), c1p::error::Error>(())
//! ```

pub mod bounds;
pub mod certify;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod pattern;
pub mod tucker;

pub use error::{Error, Result};
