//! Rational approximation of formal power series.
//!
//! Starting from nothing but series coefficients `c_0 ..= c_N`, this crate
//! constructs and manipulates several families of rational approximants:
//!
//! * classic polynomial quotients `[p/q]` and their prescribed-denominator
//!   `(p/q)` variants ([`pade`]);
//! * barycentric quotients in two node-based representations, with either
//!   both coefficient families determined from the series or the
//!   denominator weights held fixed ([`barycentric`]);
//! * simple-pole partial fraction sums recovered Prony-style from Hankel
//!   moment systems ([`prony`]).
//!
//! Every construction states which coefficients it consumes and through
//! which order its result matches the series, and each result can be
//! expanded back into a power series to verify that contact.  Evaluation
//! returns an explicit [`EvalValue::Pole`] marker instead of failing when a
//! sweep lands on a pole.
//!
//! Supporting modules: [`series`] (coefficient containers and stock test
//! series), [`poly`] (complex polynomials and root finding), [`linalg`]
//! (small dense complex solves), [`tol`] (every numerical threshold in one
//! place), and [`approximant`] (a representation-agnostic wrapper).

pub mod approximant;
pub mod barycentric;
pub mod error;
pub mod linalg;
pub mod pade;
pub mod poly;
pub mod prony;
pub mod series;
pub mod tol;
pub mod value;

pub use approximant::Approximant;
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use series::FormalPowerSeries;
pub use value::EvalValue;
