//! Exact polyhedral root counting for sparse polynomial systems.

mod arith;
pub mod binomial;
pub mod bounds;
pub mod error;
pub mod exact_linear;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod mixed_volume;
pub mod polynomial;
pub mod subdivision;

pub use binomial::{
    count_torus_roots, enumerate_roots, toric_ideal_binomials, triangularize, BinomialRelation, BinomialSystem,
    Constants, RootCount, RootMode, RootSet, ToricIdeal, TriangularBinomialSystem,
};
pub use bounds::{
    bezout_bound, bkk_bound, bound_report, cayley_configuration, component_bound, kushnirenko_bound,
    multigraded_bound, BoundReport, ComponentBranch,
};
pub use error::{Error, Result};
pub use exact_linear::{determinant, hermite_factorization, is_unimodular, HermiteFactorization, IntegerMatrix};
pub use geometry::{
    convex_hull, euclidean_volume, face, minkowski_sum, newton_data, normalized_volume, Face, Facet,
    LatticePolytope, PointConfiguration,
};
pub use mixed_volume::{
    cornered_spike_formula, mixed_area_fast, mixed_area_fast_instrumented, mixed_volume, mixed_volume_cells,
    mixed_volume_ie, permanent, polarization_coefficients, spike_configurations, CertificateEntry,
    CertificateItem, ClosedForm, Method, MixedVolumeResult, Strategy, StripStats,
};
pub use num_bigint::BigInt;
pub use num_complex::Complex;
pub use num_rational::BigRational;
pub use polynomial::{Coefficient, Polynomial, PolynomialSystem};
pub use subdivision::{
    induced_mixed_subdivision, induced_subdivision, initial_term_system, lift_system, random_generic_lifting,
    LiftedConfiguration, LiftingFunction, LiftingProvenance, MixedSubdivision, SubdivisionCell,
};
