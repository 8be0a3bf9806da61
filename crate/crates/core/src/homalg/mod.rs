//! Group rings, bar complexes, derived functors, double complexes and the
//! Lyndon–Hochschild–Serre spectral sequence.

pub mod cohomology;
pub mod double;
pub mod lhs;
pub mod module;

pub use cohomology::{
    balanced_check, bar_resolution, cochain_complex, ext, ext_all, group_cohomology, group_cohomology_all,
    group_homology, group_homology_all, hom_tensor_adjunction_check, periodic_cohomology, periodic_homology,
    shapiro_check, tor, tor_all, AdjunctionCount, BalancedReport, BarResolution, Comparison, BAR_BUDGET,
};
pub use double::{acyclic_assembly_check, random_exact_rows, seeded_rng, AssemblyOutcome, DoubleComplex, RandomGrid};
pub use lhs::{
    cohomology_module, e2_direct, lhs_report, lhs_spectral_sequence, AbutmentRow, LhsReport, LhsResult, SsPage,
};
pub use module::{GModule, GroupExtension};
