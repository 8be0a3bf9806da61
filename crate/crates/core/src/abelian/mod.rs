//! Integer linear algebra and finitely generated abelian groups, chain
//! complexes, simplicial abelian groups and the Dold–Kan functors.

pub mod chain;
pub mod dold_kan;
pub mod group;
pub mod intmat;
pub mod lattice;
pub mod simplicial_ab;
pub mod sparse;

pub use chain::{
    chain_class, has_rlp_generating_cofibrations, mapping_cone, random_complex, ChainClass, ChainComplex, ChainMap,
    Exactness, RandomComplexShape,
};
pub use dold_kan::{dold_kan_gamma, dold_kan_n, dold_kan_round_trip, RoundTrip};
pub use group::{AbMorphism, FgAbGroup};
pub use intmat::{smith_normal_form, IntMatrix, SmithForm};
pub use lattice::{Lattice, Subquotient};
pub use simplicial_ab::SimplicialAbGroup;
pub use sparse::SparseComplex;
