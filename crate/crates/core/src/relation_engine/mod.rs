//! Three-term relations among the `K_μ`: symbolic coefficients, the
//! canonical relation of each Hamming type, transport to any triple of
//! cosets, and numerical verification.

mod canonical;
mod certificate;
mod coeffs;
mod expr;
mod verify;

pub use canonical::{auxiliary_222_relation, canonical_relation, explicit_224_relation, RelationTemplate};
pub use certificate::{
    all_triples, build_relation, build_relation_by_name, canonical_certificate, monomial_count_check,
    stratified_triples, PointResidual, RelationCertificate, SCHEMA_VERSION,
};
pub use coeffs::{
    alpha, alpha_expr, beta, beta_expr, gamma_coeff, gamma_expr, perm, sigma_matrix, sine_identity_sides,
};
pub use expr::{canonical_sine, CoeffMonomial, CoefficientExpr, PointCache};
pub use verify::{
    max_residual, relation_residual, three_term_sweep, two_term_suite, verify_in, verify_relation, EvalPath,
    KEvaluator, PointContext, SweepReport, TwoTermReport, TypeSummary,
};
