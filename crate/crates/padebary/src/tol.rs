//! Numerical tolerances used across the crate.
//!
//! Every threshold that decides success, failure, or degeneracy lives here so
//! that the contracts enforced by the library and exercised by the test
//! suites are pinned in one place.  Tolerances that scale with the data say
//! so in their doc comment; the constants themselves are the dimensionless
//! factors.

/// Residual bound factor for the dense solver: for a well-conditioned system
/// the computed solution satisfies
/// `max|A x - b| <= SOLVE_RESIDUAL_FACTOR * eps * max|A| * max|x|`.
pub const SOLVE_RESIDUAL_FACTOR: f64 = 1e3;

/// Root-finding acceptance: every returned root `r` of a degree-`d`
/// polynomial satisfies `|p(r)| <= ROOT_RESIDUAL * max|coeffs| * max(1, |r|)^d`.
pub const ROOT_RESIDUAL: f64 = 1e-8;

/// Relative half-width of the node-coincidence window used during
/// barycentric evaluation: `t` counts as hitting a node when
/// `|t - node| <= NODE_HIT_RELATIVE * (1 + |t|)`.
pub const NODE_HIT_RELATIVE: f64 = 1e-13;

/// Verification threshold for the weighted-node-sum normalization carried by
/// freshly constructed barycentric approximants.
pub const NORMALIZATION_CHECK: f64 = 1e-12;

/// Two recovered nodes count as coincident (no simple-pole partial fraction
/// form) when they are closer than this fraction of the largest node
/// modulus.
///
/// The floor is set by the root finder: a true double root comes back as a
/// cluster of radius about sqrt(machine epsilon) (~1.5e-8, and a few times
/// that after iteration-stopping slack), so the refusal window must sit
/// comfortably above that radius.  1e-6 does, while remaining orders of
/// magnitude below any separation the recovery contract promises to
/// resolve.
pub const NODE_DISTINCT_RELATIVE: f64 = 1e-6;

/// Relative tolerance, scaled by the largest input coefficient modulus, at
/// which a reconstructed series coefficient counts as matching its input.
pub const CONTACT_RELATIVE: f64 = 1e-9;

/// Contact tolerance for the simple-pole construction, whose node-recovery
/// step passes through polynomial root extraction and therefore cannot hold
/// coefficients as tightly as direct elimination.
pub const RECOVERY_CONTACT_RELATIVE: f64 = 1e-8;

/// Coefficientwise tolerance when comparing an elimination-based construction
/// against its closed determinant formula.
pub const ORACLE_EQUIVALENCE: f64 = 1e-8;

/// Bound, scaled by the largest coefficient modulus, on the moment
/// orthogonality residuals of a denominator recovered from a Hankel system.
pub const ORTHOGONALITY_RESIDUAL: f64 = 1e-10;

/// Absolute tolerance for reproducing prescribed values at interpolation
/// nodes.
pub const INTERPOLATION_ABS: f64 = 1e-12;

/// Relative tolerance for invariance of an interpolant under global weight
/// rescaling, checked away from the nodes.
pub const WEIGHT_SCALE_INVARIANCE: f64 = 1e-10;

/// The determinant-formula construction reports degeneracy when the
/// coefficient determinant is at most this factor times its natural scale.
pub const DEGENERATE_DETERMINANT: f64 = 1e-12;

/// A barycentric denominator counts as vanishing at the origin — no series
/// expansion exists — when its value there is at most this factor times the
/// magnitude sum of its terms.
pub const DEGENERATE_ORIGIN: f64 = 1e-14;
