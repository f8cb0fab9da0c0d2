//! Result of evaluating an approximant at a single point.

use num_complex::Complex64;

/// Value of an approximant at a point: either an ordinary complex number or
/// an explicit pole marker.
///
/// Hitting a pole (a pole-family node, or a zero of a denominator) is a
/// legitimate outcome of sweeping a grid, not an error, so evaluation
/// returns this enum instead of failing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalValue {
    /// Finite value.
    Finite(Complex64),
    /// The point is (numerically) a pole of the approximant.
    Pole,
}

impl EvalValue {
    /// `true` for the pole marker.
    pub fn is_pole(&self) -> bool {
        matches!(self, EvalValue::Pole)
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            EvalValue::Finite(v) => Some(*v),
            EvalValue::Pole => None,
        }
    }

    /// The finite value, or complex infinity for a pole — convenient when
    /// writing tabular output.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            EvalValue::Finite(v) => *v,
            EvalValue::Pole => Complex64::new(f64::INFINITY, f64::INFINITY),
        }
    }
}

impl From<Complex64> for EvalValue {
    fn from(v: Complex64) -> Self {
        EvalValue::Finite(v)
    }
}
