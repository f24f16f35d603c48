//! Exact arithmetic for genus one models of degrees 1-5: classical and
//! normalized invariants, Jacobian short Weierstrass forms, the scaling
//! relations between them, brute-force smoothness testing over prime
//! fields, and q-expansions of the modular forms carrying the same
//! invariants.

pub mod error;
pub mod finite_field;
pub mod invariant;
pub mod jacobian;
pub mod model;
pub mod poly;
pub mod qseries;
pub mod rational;
pub mod reduction;
mod ternary_tables;

pub use error::{Error, Result};
pub use finite_field::{reduce_rational, PrimeFieldElement};
pub use invariant::{
    aronhold_st, invariants_of_model, quartic_ij, short_weierstrass_invariants,
    ternary_invariant_polynomials, weierstrass_invariants, ClassicalPair, InvariantTriple,
    PairKind,
};
pub use jacobian::{
    alpha, check_invariant_relations, hessian_covariant, jacobian_of_model, point_map_f2,
    quartic_covariants_gh, weierstrass_transform, RelationReport,
};
pub use model::{
    complete_square, gram_pencil_quartic, homogenize_weierstrass, parse_model, pfaffian_quadrics,
    reduce_mod_p, serialize_model, BinaryQuarticModel, GenusOneModel, PfaffianModel,
    QuadricPairModel, ShortWeierstrass, TernaryCubicModel, WeierstrassModel, TERNARY_COEFF_NAMES,
};
pub use poly::{Coeff, PolyMatrix, SparsePolynomial};
pub use qseries::{
    discriminant_series, divisor_sum, eisenstein_series, eta_product, hasse_congruence_check,
    QSeries,
};
pub use rational::{bernoulli, binomial, is_prime, p_adic_valuation, Rational, Valuation};
pub use reduction::{singular_points_mod_p, smoothness_discriminant_consistency, ProjectivePoint};
