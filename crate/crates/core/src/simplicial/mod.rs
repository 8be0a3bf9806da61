//! Truncated simplicial sets and the combinatorics built on them.

pub mod constructions;
pub mod hom;
pub mod lifting;
pub mod monotone;
pub mod sset;
pub mod standard;
pub mod subdivision;

pub use constructions::{disc, product, pushout, tensor_set, terminal, to_terminal};
pub use hom::{hom_maps, HomSearch};
pub use lifting::{is_di_weak_equivalence, is_fibration, is_kan, LiftMode, LiftReport};
pub use sset::{PointedTruncSSet, SimplicialMap, TruncSSet, Violation};
pub use standard::{build_standard, StandardKind};
pub use subdivision::{ex, ex_horns_fill, subdivision_simplex, ExFillReport};
