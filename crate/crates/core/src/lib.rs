//! Exact lattice-polytope computations for sparse polynomial systems: mixed volumes,
//! Euler characteristics of generic complete intersections, critical point counts via
//! Euler obstructions, incremental polytopes, and a small brute-force root-counting oracle.
//!
//! All arithmetic is exact (`num-bigint` / `num-rational`).

pub mod arith;
pub mod error;
pub mod lattice;
pub mod polytope;
pub mod support;
pub mod virtual_expr;
pub mod fans;
pub mod incremental;
pub mod toric;
pub mod counts;
pub mod formulas;
pub mod oracle;

pub use arith::{Int, IntVec, Rat, RatVec};
pub use error::{Error, Result};
pub use fans::WeightedFan;
pub use lattice::{AffineSpan, LatticePoint, LatticeProjection};
pub use polytope::Polytope;
pub use support::SupportSet;
pub use toric::ObstructionTable;
pub use virtual_expr::VirtualExpr;
