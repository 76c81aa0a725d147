//! Hilbert–Mumford indices, state polytopes and stability certificates.

pub mod certificates;
pub mod index;
pub mod json;
pub mod polytope;
pub mod semistable;

pub use certificates::{
    basis_weight_sum, check_kempf_reduction, complement_basis, monomial_basis_index_bound, thickening_instability,
    BasisBound, KempfApplicability, KempfHypothesis, MonomialBasisReport, ThickeningReport,
};
pub use index::{hilbert_mumford_index, hilbert_mumford_index_with, ideal_side_index, HilbertMumfordReport, Verdict};
pub use polytope::{extreme_vertex, state_polytope, StatePolytope, TraversalOptions};
pub use semistable::{is_torus_semistable, SemistabilityCertificate, SemistabilityReport};
