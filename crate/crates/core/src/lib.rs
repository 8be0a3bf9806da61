//! Exact, finite-scale computations in simplicial homotopy theory and
//! homological algebra.
//!
//! Everything here is integer or boolean arithmetic on explicitly
//! enumerated data: truncated simplicial sets, boolean relations,
//! finitely generated abelian groups presented by cyclic summands, and
//! cochain complexes built from bar resolutions of finite groups.
//!
//! * [`simplicial`]: truncated simplicial sets, hom-sets, `sd`/`Ex`,
//!   lifting-property checkers.
//! * [`relations`]: the relation calculus on finite sets and its exact
//!   completion.
//! * [`homotopy`]: `π₀`, loop objects, homotopy sets and groups,
//!   simplicial groups and their Moore complexes.
//! * [`abelian`]: Smith/Hermite normal forms, lattices, chain complexes,
//!   Dold–Kan.
//! * [`classifying`]: `W`, `W̄` and Eilenberg–Mac Lane complexes.
//! * [`homalg`]: group (co)homology, Tor/Ext, double complexes and the
//!   Lyndon–Hochschild–Serre spectral sequence.

pub mod abelian;
pub mod classifying;
pub mod corpus;
pub mod error;
pub mod homalg;
pub mod homotopy;
pub mod io;
pub mod relations;
pub mod simplicial;

pub use error::{Error, Result};

/// Default per-level cell budget for enumerations that can blow up.
pub const DEFAULT_CELL_BUDGET: usize = 1_000_000;
