//! One wrapper over every approximant representation in the crate, so that
//! generic code — grid sweeps, series checks, file formats, the shift
//! constructions — can hold "some approximant" without caring which.

use num_complex::Complex64;

use crate::barycentric::{BarycentricForm1, BarycentricForm2};
use crate::error::Result;
use crate::pade::RationalFunction;
use crate::prony::PartialFraction;
use crate::series::FormalPowerSeries;
use crate::value::EvalValue;

/// Any approximant representation: polynomial quotient, either barycentric
/// form, or a simple-pole partial fraction sum.
#[derive(Clone, Debug, PartialEq)]
pub enum Approximant {
    Rational(RationalFunction),
    Bary1(BarycentricForm1),
    Bary2(BarycentricForm2),
    PartialFraction(PartialFraction),
}

impl Approximant {
    /// Stable identifier of the representation, as used in serialized
    /// records.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Approximant::Rational(_) => "rational",
            Approximant::Bary1(_) => "bary1",
            Approximant::Bary2(_) => "bary2",
            Approximant::PartialFraction(_) => "pfpa",
        }
    }

    /// Evaluates the approximant at `t`.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        match self {
            Approximant::Rational(r) => r.eval(t),
            Approximant::Bary1(f) => f.eval(t),
            Approximant::Bary2(f) => f.eval(t),
            Approximant::PartialFraction(p) => p.eval(t),
        }
    }

    /// Power-series coefficients `d_0 ..= d_n` around the origin.
    pub fn expand(&self, n: usize) -> Result<FormalPowerSeries> {
        match self {
            Approximant::Rational(r) => r.expand(n),
            Approximant::Bary1(f) => f.expand(n),
            Approximant::Bary2(f) => f.expand(n),
            Approximant::PartialFraction(p) => p.expand(n),
        }
    }

    /// Number of leading series coefficients the approximant reproduces:
    /// the largest `m` such that `|d_k - c_k| <= rel_tol * max|c|` for all
    /// `k < m`, judged over the full stored order of `c`.
    pub fn contact_order(&self, c: &FormalPowerSeries, rel_tol: f64) -> Result<usize> {
        let d = self.expand(c.order())?;
        let bound = rel_tol * c.max_abs();
        let mut m = 0;
        for (dk, ck) in d.coeffs().iter().zip(c.coeffs()) {
            if (dk - ck).norm() <= bound {
                m += 1;
            } else {
                break;
            }
        }
        Ok(m)
    }
}

impl From<RationalFunction> for Approximant {
    fn from(r: RationalFunction) -> Self {
        Approximant::Rational(r)
    }
}

impl From<BarycentricForm1> for Approximant {
    fn from(f: BarycentricForm1) -> Self {
        Approximant::Bary1(f)
    }
}

impl From<BarycentricForm2> for Approximant {
    fn from(f: BarycentricForm2) -> Self {
        Approximant::Bary2(f)
    }
}

impl From<PartialFraction> for Approximant {
    fn from(p: PartialFraction) -> Self {
        Approximant::PartialFraction(p)
    }
}
