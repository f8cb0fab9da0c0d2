//! Error type shared by every construction and evaluation routine in this
//! crate.
//!
//! Errors fall into two families that callers (notably the CLI) treat
//! differently:
//!
//! * *input errors* — the request itself is malformed (too few coefficients,
//!   duplicate nodes, a zero node where a nonzero one is required, ...);
//! * *numerical failures* — the request is well-formed but the underlying
//!   linear algebra or root finding degenerates (singular system, divergent
//!   iteration, vanishing determinant, ...).
//!
//! [`Error::is_input_error`] reports which family a value belongs to.

/// Everything that can go wrong while building or manipulating approximants.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Gaussian elimination met a pivot below the scaled threshold; the
    /// system has no unique solution at working precision.
    #[error("linear system is singular or numerically rank deficient")]
    SingularMatrix,

    /// The simultaneous root iteration failed to reach the residual target
    /// within the iteration budget.
    #[error("root finding did not converge")]
    NoConvergence,

    /// A denominator coefficient vector violates its constraints
    /// (`b_0 = 0`, or a vanishing leading coefficient where a full-degree
    /// denominator is required).
    #[error("invalid denominator coefficients: {0}")]
    InvalidDenominator(&'static str),

    /// Fewer series coefficients were supplied than the construction needs.
    #[error("series order {got} is too small; need at least order {needed}")]
    InsufficientOrder { needed: usize, got: usize },

    /// A node family violates its constraints (duplicates, or a length that
    /// does not match the companion coefficient vector).
    #[error("invalid node family: {0}")]
    InvalidNodes(&'static str),

    /// A node is exactly zero in a representation whose nodes must be
    /// nonzero (reciprocal-form nodes, or conversion between the two
    /// barycentric forms).
    #[error("node must be nonzero")]
    ZeroNode,

    /// A rational function cannot be expanded around the origin because its
    /// denominator vanishes there.
    #[error("denominator vanishes at the origin")]
    ZeroAtOrigin,

    /// A barycentric denominator vanishes at the origin (its weighted node
    /// sum is zero), so no power-series expansion exists.
    #[error("barycentric denominator is degenerate at the origin")]
    DegenerateDenominator,

    /// The coefficient determinant of the closed determinant formula is
    /// numerically zero; the requested table entry is degenerate.
    #[error("coefficient determinant vanishes; table entry is degenerate")]
    DegenerateDeterminant,

    /// Recovered nodes are not pairwise distinct, so a simple-pole partial
    /// fraction form does not exist.
    #[error("recovered nodes are not pairwise distinct")]
    NonDistinctNodes,

    /// The denominator derivative vanishes at a node, so the residue formula
    /// `a_i = -p_i P(1/p_i) / Q'(1/p_i)` breaks down.
    #[error("denominator derivative vanishes at a node")]
    ZeroDerivative,

    /// Matrix and vector dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),

    /// An input contains a NaN or infinite entry.
    #[error("non-finite value in input")]
    NonFinite,
}

impl Error {
    /// `true` when the error describes a malformed request rather than a
    /// numerical failure on a well-formed one.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidDenominator(_)
                | Error::InsufficientOrder { .. }
                | Error::InvalidNodes(_)
                | Error::ZeroNode
                | Error::DimensionMismatch(_)
                | Error::NonFinite
        )
    }
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
