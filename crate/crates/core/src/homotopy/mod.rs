//! Homotopy sets and groups of truncated simplicial sets, finite groups
//! and simplicial groups.

pub mod group;
pub mod pi;
pub mod sgroup;

pub use group::{is_homomorphism, FinGroup};
pub use pi::{
    fibre, loop_space, loop_space_budget, pi0, pi0_pointed, pi_n, pi_n_full, pi_n_mult, Fibre, HomotopyClassSet,
    HomotopySet, LoopSpace,
};
pub use sgroup::{moore_complex, pi_n_group, MooreComplex, SimplicialGroup};
