//! Rational approximants of power series in polynomial-quotient form.
//!
//! Given series coefficients `c_0 ..= c_N` this module builds:
//!
//! * *type approximants* `(p/q)`: the denominator `b_0 + ... + b_q t^q` is
//!   prescribed by the caller and the numerator is the convolution
//!   `a_k = sum_{j<=min(k,q)} c_{k-j} b_j`, giving agreement with the series
//!   through order `p`;
//! * *full approximants* `[p/q]`: the denominator is determined from the
//!   series itself by the linear system
//!   `sum_{j=0..q} c_{p+k-j} b_j = 0` (`k = 1..q`, `b_0 = 1`), pushing the
//!   agreement through order `p + q`;
//! * the same `[p/q]` via an independent closed determinant formula, kept as
//!   a cross-check for the elimination path;
//! * shifted constructions that bump the numerator or denominator degree of
//!   a diagonal approximant by splitting off leading series terms or
//!   prepending zeros.
//!
//! Degenerate table entries (the determining system is singular) are
//! reported as errors; no block-structure resolution is attempted.

use num_complex::Complex64;

use crate::approximant::Approximant;
use crate::error::{Error, Result};
use crate::linalg::{det_rows, solve_dense, CMatrix};
use crate::poly::Polynomial;
use crate::series::{matches_through, FormalPowerSeries};
use crate::tol;
use crate::value::EvalValue;

/// Quotient of two complex polynomials.
///
/// No common-factor reduction is performed; the struct represents exactly
/// the pair it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Wraps a numerator/denominator pair; the denominator must not be the
    /// zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidDenominator("denominator is identically zero"));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// Evaluates the quotient; an exact zero of the denominator yields the
    /// pole marker.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        let d = self.den.eval(t);
        if d == Complex64::new(0.0, 0.0) {
            EvalValue::Pole
        } else {
            EvalValue::Finite(self.num.eval(t) / d)
        }
    }

    /// Power-series coefficients `d_0 ..= d_n` of the quotient around the
    /// origin, by long division:
    /// `d_k = (a_k - sum_{j=1..} b_j d_{k-j}) / b_0`.
    ///
    /// Fails with [`Error::ZeroAtOrigin`] when the denominator vanishes
    /// at `t = 0`.
    pub fn expand(&self, n: usize) -> Result<FormalPowerSeries> {
        let b = self.den.coeffs();
        let a = self.num.coeffs();
        if b[0] == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroAtOrigin);
        }
        let mut d = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = if k < a.len() {
                a[k]
            } else {
                Complex64::new(0.0, 0.0)
            };
            for j in 1..b.len().min(k + 1) {
                acc -= b[j] * d[k - j];
            }
            d.push(acc / b[0]);
        }
        FormalPowerSeries::new(d)
    }

    /// Copy rescaled so that the denominator equals 1 at the origin —
    /// the canonical form used when comparing two constructions of the same
    /// quotient.
    pub fn normalized(&self) -> Result<Self> {
        let b0 = self.den.eval(Complex64::new(0.0, 0.0));
        if b0 == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroAtOrigin);
        }
        let inv = Complex64::new(1.0, 0.0) / b0;
        Ok(RationalFunction {
            num: self.num.scale(inv),
            den: self.den.scale(inv),
        })
    }
}

/// Checks a caller-supplied denominator coefficient vector `b_0 ..= b_q`:
/// both the constant and the leading coefficient must be nonzero.
fn validate_given_denominator(b: &[Complex64]) -> Result<()> {
    if b.is_empty() {
        return Err(Error::InvalidDenominator("denominator has no coefficients"));
    }
    if b[0] == Complex64::new(0.0, 0.0) {
        return Err(Error::InvalidDenominator("constant coefficient b_0 is zero"));
    }
    if b[b.len() - 1] == Complex64::new(0.0, 0.0) {
        return Err(Error::InvalidDenominator("leading coefficient b_q is zero"));
    }
    Ok(())
}

/// Numerator convolution `a_k = sum_{j=0..min(k,q)} c_{k-j} b_j` without any
/// constraint on `b` beyond its length; shared by the prescribed- and
/// determined-denominator paths (the latter may legitimately produce a zero
/// leading coefficient).
fn numerator_convolution(c: &FormalPowerSeries, b: &[Complex64], p: usize) -> Polynomial {
    let q = b.len() - 1;
    let a = (0..=p)
        .map(|k| {
            (0..=q.min(k))
                .map(|j| c.coeff((k - j) as isize) * b[j])
                .sum::<Complex64>()
        })
        .collect();
    Polynomial::new(a)
}

/// Numerator of the `(p/q)` type approximant for a prescribed denominator
/// `b_0 ..= b_q` (`b_0` and `b_q` nonzero); the quotient then matches the
/// series through order `p`.
pub fn pade_type_numerator(
    c: &FormalPowerSeries,
    b: &[Complex64],
    p: usize,
) -> Result<Polynomial> {
    validate_given_denominator(b)?;
    c.require_order(p)?;
    Ok(numerator_convolution(c, b, p))
}

/// Full `(p/q)` type approximant for a prescribed denominator.
///
/// The order-`p` match is verified on the assembled quotient; a prescribed
/// denominator that places a zero too close to the origin for the match to
/// survive roundoff is reported as [`Error::SingularMatrix`].
pub fn pade_type(c: &FormalPowerSeries, b: &[Complex64], p: usize) -> Result<RationalFunction> {
    let num = pade_type_numerator(c, b, p)?;
    let built = RationalFunction::new(num, Polynomial::new(b.to_vec()))?;
    confirm_contact(&built, c, p)?;
    Ok(built)
}

/// The raw `q x q` linear system for the `[p/q]` denominator: matrix entry
/// `(k, j)` is `c_{p+k+1-(j+1)}` (the coefficient multiplying `b_{j+1}` in
/// the order-`(p+k+1)` condition, missing `c` read as zero) and the
/// right-hand side is `-c_{p+k+1}`, `k = 0..q-1`.
///
/// Exposed so the system can be compared entry-by-entry with the Hankel
/// system of the simple-pole construction at `(p, q) = (k, k+1)`; see
/// [`crate::prony::hankel_system`].
pub fn denominator_system(
    c: &FormalPowerSeries,
    p: usize,
    q: usize,
) -> Result<(CMatrix, Vec<Complex64>)> {
    c.require_order(p + q)?;
    let m = CMatrix::from_fn(q, q, |k, j| {
        // Row k encodes the order-(p + k + 1) condition; column j holds the
        // coefficient multiplying b_{j+1}.
        c.coeff(p as isize + k as isize - j as isize)
    })?;
    let rhs: Vec<Complex64> = (1..=q).map(|k| -c.coeff((p + k) as isize)).collect();
    Ok((m, rhs))
}

/// Denominator coefficients `b_0 = 1, b_1 ..= b_q` of the `[p/q]`
/// approximant, from the system of [`denominator_system`].
///
/// A singular system means the `(p, q)` table entry is degenerate and is
/// reported as [`Error::SingularMatrix`].
pub fn pade_denominator(c: &FormalPowerSeries, p: usize, q: usize) -> Result<Vec<Complex64>> {
    let (m, rhs) = denominator_system(c, p, q)?;
    let mut b = vec![Complex64::new(1.0, 0.0)];
    b.extend(solve_dense(&m, &rhs)?);
    Ok(b)
}

/// Confirms that an assembled quotient reproduces the input coefficients
/// through index `upto` before it is handed to the caller; a mismatch means
/// the construction was numerically degenerate (typically a denominator
/// zero crowding the origin) and is reported as [`Error::SingularMatrix`]
/// rather than returned as a silently wrong approximant.
fn confirm_contact(built: &RationalFunction, c: &FormalPowerSeries, upto: usize) -> Result<()> {
    let d = built.expand(upto)?;
    if matches_through(&d, c, upto, tol::CONTACT_RELATIVE) {
        Ok(())
    } else {
        Err(Error::SingularMatrix)
    }
}

/// The `[p/q]` approximant: denominator from [`pade_denominator`], numerator
/// from the convolution; matches the series through order `p + q`.
///
/// The matching order is verified on the assembled quotient; series for
/// which the computed solution fails to carry it are reported as
/// [`Error::SingularMatrix`], the same signal as an exactly singular
/// denominator system.
pub fn pade(c: &FormalPowerSeries, p: usize, q: usize) -> Result<RationalFunction> {
    let b = pade_denominator(c, p, q)?;
    let num = numerator_convolution(c, &b, p);
    let built = RationalFunction::new(num, Polynomial::new(b))?;
    confirm_contact(&built, c, p + q)?;
    Ok(built)
}

/// The `[p/q]` approximant by the closed determinant formula — an
/// implementation independent of the elimination path, intended as a
/// cross-check for small `q`.
///
/// Numerator and denominator are determinants of `(q+1) x (q+1)` matrices
/// that share their last `q` rows `[c_{p-q+k} ... c_{p+k}]`, `k = 1..q`;
/// the first row holds `t^{q-j} f_{p-q+j}(t)` (partial sums of the series,
/// zero for negative index) and `t^{q-j}` respectively.  Expanding both
/// along the first row reuses one set of `q x q` minors.  The result is the
/// same function as [`pade`] up to one common scale factor; the denominator
/// value at the origin is the coefficient determinant of the underlying
/// linear system, and when that determinant is numerically zero the table
/// entry is reported as [`Error::DegenerateDeterminant`].
pub fn determinant_oracle(c: &FormalPowerSeries, p: usize, q: usize) -> Result<RationalFunction> {
    c.require_order(p + q)?;

    // Shared lower block L[k][j] = c_{p-q+k+1+j}, k = 0..q-1, j = 0..=q.
    let block: Vec<Vec<Complex64>> = (1..=q)
        .map(|k| {
            (0..=q)
                .map(|j| c.coeff(p as isize - q as isize + k as isize + j as isize))
                .collect()
        })
        .collect();

    let minor = |drop_col: usize| -> Complex64 {
        let rows: Vec<Vec<Complex64>> = block
            .iter()
            .map(|r| {
                let mut v = r.clone();
                v.remove(drop_col);
                v
            })
            .collect();
        det_rows(&rows)
    };

    let minors: Vec<Complex64> = (0..=q).map(minor).collect();

    // Degeneracy test on the coefficient determinant (the minor that
    // multiplies the constant denominator term), against a Hadamard-style
    // scale built from the block entries.
    let block_max = block
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(1.0);
    let scale = block_max.powi(q as i32);
    if minors[q].norm() <= tol::DEGENERATE_DETERMINANT * scale {
        return Err(Error::DegenerateDeterminant);
    }

    let mut den = vec![Complex64::new(0.0, 0.0); q + 1];
    let mut num = Polynomial::constant(Complex64::new(0.0, 0.0));
    for (j, &m) in minors.iter().enumerate() {
        let signed = if j % 2 == 0 { m } else { -m };
        den[q - j] = signed;
        let f_index = p as isize - q as isize + j as isize;
        if f_index >= 0 {
            let term = c
                .partial_sum(f_index as usize)
                .expect("order checked above")
                .shift_up(q - j)
                .scale(signed);
            num = num.add(&term);
        }
    }
    RationalFunction::new(num, Polynomial::new(den))
}

/// Which side of the quotient a shifted construction extends.
#[derive(Clone, Copy, Debug, PartialEq)]
enum ShiftKind {
    /// `R(t) = c_0 + ... + c_{n-1} t^{n-1} + t^n * inner(t)`.
    Numerator,
    /// `R(t) = inner(t) / t^n`.
    Denominator,
}

/// A diagonal approximant composed with a power-of-`t` shift; produced by
/// [`shift_numerator`] and [`shift_denominator`].
#[derive(Debug)]
pub struct ShiftedApproximant {
    prefix: Polynomial,
    n: usize,
    inner: Approximant,
    kind: ShiftKind,
}

impl ShiftedApproximant {
    /// The wrapped diagonal approximant.
    pub fn inner(&self) -> &Approximant {
        &self.inner
    }

    /// Evaluates the shifted construction at `t`.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        match self.kind {
            ShiftKind::Numerator => match self.inner.eval(t) {
                EvalValue::Pole => EvalValue::Pole,
                EvalValue::Finite(v) => {
                    EvalValue::Finite(self.prefix.eval(t) + t.powu(self.n as u32) * v)
                }
            },
            ShiftKind::Denominator => {
                if t == Complex64::new(0.0, 0.0) {
                    // Limit at the origin: first coefficient of the shifted
                    // expansion, when it exists.
                    return match self.expand(0) {
                        Ok(s) => EvalValue::Finite(s.coeffs()[0]),
                        Err(_) => EvalValue::Pole,
                    };
                }
                match self.inner.eval(t) {
                    EvalValue::Pole => EvalValue::Pole,
                    EvalValue::Finite(v) => EvalValue::Finite(v / t.powu(self.n as u32)),
                }
            }
        }
    }

    /// Power-series coefficients `d_0 ..= d_n` of the shifted construction.
    /// The power-of-`t` factor is applied symbolically, as an index shift on
    /// the inner expansion.
    pub fn expand(&self, order: usize) -> Result<FormalPowerSeries> {
        match self.kind {
            ShiftKind::Numerator => {
                let mut d = Vec::with_capacity(order + 1);
                let prefix = self.prefix.coeffs();
                for k in 0..self.n.min(order + 1) {
                    d.push(if k < prefix.len() {
                        prefix[k]
                    } else {
                        Complex64::new(0.0, 0.0)
                    });
                }
                if order >= self.n {
                    let inner = self.inner.expand(order - self.n)?;
                    d.extend_from_slice(inner.coeffs());
                }
                FormalPowerSeries::new(d)
            }
            ShiftKind::Denominator => {
                let inner = self.inner.expand(order + self.n)?;
                FormalPowerSeries::new(inner.coeffs()[self.n..].to_vec())
            }
        }
    }
}

/// Splits off the first `n` series terms and applies a diagonal engine to
/// the remainder:
/// `R(t) = c_0 + ... + c_{n-1} t^{n-1} + t^n R_inner(t)` with `R_inner` a
/// `[p/p]`-grade approximant of `c_n + c_{n+1} t + ...`.  The result matches
/// the series through order `n + 2p`.
///
/// `engine` builds a diagonal approximant of grade `m` from a series; any
/// construction from this crate qualifies (polynomial-quotient or
/// barycentric).
pub fn shift_numerator<F>(
    c: &FormalPowerSeries,
    n: usize,
    p: usize,
    engine: F,
) -> Result<ShiftedApproximant>
where
    F: Fn(&FormalPowerSeries, usize) -> Result<Approximant>,
{
    c.require_order(n + 2 * p)?;
    let prefix = Polynomial::new(c.coeffs()[..n].to_vec());
    let tail = FormalPowerSeries::new(c.coeffs()[n..].to_vec())?;
    let inner = engine(&tail, p)?;
    Ok(ShiftedApproximant {
        prefix,
        n,
        inner,
        kind: ShiftKind::Numerator,
    })
}

/// Prepends `n` zero coefficients, applies a diagonal engine of grade
/// `p + n`, and divides by `t^n` symbolically:
/// `R(t) = R_inner(t) / t^n` with `R_inner` a `[p+n/p+n]`-grade approximant
/// of `0 + ... + 0 + c_0 t^n + c_1 t^{n+1} + ...`.  The result matches the
/// series through order `n + 2p`.
pub fn shift_denominator<F>(
    c: &FormalPowerSeries,
    n: usize,
    p: usize,
    engine: F,
) -> Result<ShiftedApproximant>
where
    F: Fn(&FormalPowerSeries, usize) -> Result<Approximant>,
{
    c.require_order(n + 2 * p)?;
    let mut augmented = vec![Complex64::new(0.0, 0.0); n];
    augmented.extend_from_slice(c.coeffs());
    let inner = engine(&FormalPowerSeries::new(augmented)?, p + n)?;
    Ok(ShiftedApproximant {
        prefix: Polynomial::constant(Complex64::new(0.0, 0.0)),
        n,
        inner,
        kind: ShiftKind::Denominator,
    })
}

/// Ready-made diagonal engine backed by the classic `[m/m]` construction.
pub fn classic_diagonal_engine() -> impl Fn(&FormalPowerSeries, usize) -> Result<Approximant> {
    |series, m| pade(series, m, m).map(Approximant::Rational)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    #[test]
    fn type_numerator_of_exponential() {
        // Hand convolution with b = [1, -1/2]: a_0 = 1, a_1 = 1 - 1/2.
        let c = FormalPowerSeries::exp(4);
        let a = pade_type_numerator(&c, &[r(1.0), r(-0.5)], 1).unwrap();
        assert_eq!(a.coeffs(), &[r(1.0), r(0.5)]);
    }

    #[test]
    fn type_numerator_rejects_bad_denominators() {
        let c = FormalPowerSeries::exp(4);
        assert!(matches!(
            pade_type_numerator(&c, &[r(0.0), r(1.0)], 1),
            Err(Error::InvalidDenominator(_))
        ));
        assert!(matches!(
            pade_type_numerator(&c, &[r(1.0), r(0.0)], 1),
            Err(Error::InvalidDenominator(_))
        ));
        assert!(matches!(
            pade_type_numerator(&c, &[], 1),
            Err(Error::InvalidDenominator(_))
        ));
    }

    #[test]
    fn denominator_of_exponential_1_1() {
        let c = FormalPowerSeries::exp(4);
        let b = pade_denominator(&c, 1, 1).unwrap();
        assert_eq!(b.len(), 2);
        assert_close(b[0], r(1.0), 0.0);
        assert_close(b[1], r(-0.5), 1e-15);
    }

    #[test]
    fn denominator_of_geometric_0_1() {
        let c = FormalPowerSeries::geometric(r(2.0), 4);
        let b = pade_denominator(&c, 0, 1).unwrap();
        assert_close(b[1], r(-2.0), 1e-15);
    }

    #[test]
    fn degenerate_entry_is_singular() {
        // Even series: the (1,1) system has a zero coefficient matrix.
        let c = FormalPowerSeries::tan_over_t(1.0, 4);
        assert_eq!(pade_denominator(&c, 1, 1), Err(Error::SingularMatrix));
    }

    #[test]
    fn short_series_is_rejected() {
        let c = FormalPowerSeries::exp(2);
        assert_eq!(
            pade_denominator(&c, 2, 2),
            Err(Error::InsufficientOrder { needed: 4, got: 2 })
        );
    }

    #[test]
    fn exponential_1_1_full_approximant() {
        let c = FormalPowerSeries::exp(4);
        let rat = pade(&c, 1, 1).unwrap();
        assert_close(rat.num().coeffs()[0], r(1.0), 1e-15);
        assert_close(rat.num().coeffs()[1], r(0.5), 1e-15);
        let d = rat.expand(3).unwrap();
        let expected = [1.0, 1.0, 0.5, 0.25];
        for (i, &want) in expected.iter().enumerate() {
            assert_close(d.coeffs()[i], r(want), 1e-14);
        }
    }

    #[test]
    fn zero_leading_denominator_coefficient_is_allowed_internally() {
        // For an even series the (2,1) denominator solves to b_1 = 0 and the
        // approximant collapses to the partial sum, which still matches
        // through order 3 because c_3 = 0.
        let c = FormalPowerSeries::tan_over_t(1.0, 4);
        let rat = pade(&c, 2, 1).unwrap();
        assert_eq!(rat.den().degree(), 0);
        let d = rat.expand(3).unwrap();
        for i in 0..=3 {
            assert_close(d.coeffs()[i], c.coeffs()[i], 1e-14);
        }
    }

    #[test]
    fn evaluation_and_pole_marker() {
        let rat = RationalFunction::new(
            Polynomial::new(vec![r(1.0)]),
            Polynomial::new(vec![r(1.0), r(-1.0)]),
        )
        .unwrap();
        assert_eq!(rat.eval(r(0.5)), EvalValue::Finite(r(2.0)));
        assert_eq!(rat.eval(r(1.0)), EvalValue::Pole);
    }

    #[test]
    fn expansion_requires_nonzero_origin() {
        let rat = RationalFunction::new(
            Polynomial::new(vec![r(1.0)]),
            Polynomial::new(vec![r(0.0), r(1.0)]),
        )
        .unwrap();
        assert_eq!(rat.expand(2), Err(Error::ZeroAtOrigin));
    }

    #[test]
    fn oracle_matches_elimination_on_exponential() {
        let c = FormalPowerSeries::exp(6);
        let via_det = determinant_oracle(&c, 1, 1).unwrap().normalized().unwrap();
        let via_elim = pade(&c, 1, 1).unwrap().normalized().unwrap();
        for (a, b) in via_det
            .num()
            .coeffs()
            .iter()
            .zip(via_elim.num().coeffs().iter())
        {
            assert_close(*a, *b, 1e-14);
        }
        for (a, b) in via_det
            .den()
            .coeffs()
            .iter()
            .zip(via_elim.den().coeffs().iter())
        {
            assert_close(*a, *b, 1e-14);
        }
    }

    #[test]
    fn oracle_detects_degenerate_entries() {
        let c = FormalPowerSeries::tan_over_t(1.0, 4);
        assert_eq!(determinant_oracle(&c, 1, 1), Err(Error::DegenerateDeterminant));
    }

    #[test]
    fn oracle_with_zero_denominator_degree_is_partial_sum() {
        let c = FormalPowerSeries::exp(4);
        let rat = determinant_oracle(&c, 3, 0).unwrap();
        assert_eq!(rat.den().coeffs(), &[r(1.0)]);
        assert_eq!(rat.num().coeffs().len(), 4);
    }

    #[test]
    fn numerator_shift_matches_direct_construction() {
        // n = 2, p = 1 on the exponential: both paths realize the same
        // [3/1] function, so their expansions agree through order 4.
        let c = FormalPowerSeries::exp(6);
        let shifted = shift_numerator(&c, 2, 1, classic_diagonal_engine()).unwrap();
        let direct = pade(&c, 3, 1).unwrap().expand(4).unwrap();
        let got = shifted.expand(4).unwrap();
        for i in 0..=4 {
            assert_close(got.coeffs()[i], direct.coeffs()[i], 1e-12);
        }
    }

    #[test]
    fn numerator_shift_with_constant_inner() {
        // n = 1, p = 0: prefix c_0 plus t times the constant c_1.
        let c = FormalPowerSeries::exp(2);
        let shifted = shift_numerator(&c, 1, 0, classic_diagonal_engine()).unwrap();
        let d = shifted.expand(1).unwrap();
        assert_close(d.coeffs()[0], r(1.0), 1e-15);
        assert_close(d.coeffs()[1], r(1.0), 1e-15);
        assert_eq!(shifted.eval(r(0.0)), EvalValue::Finite(r(1.0)));
    }

    #[test]
    fn denominator_shift_matches_direct_construction() {
        // n = 1, p = 1 on the exponential equals the [1/2] approximant.
        let c = FormalPowerSeries::exp(3);
        let shifted = shift_denominator(&c, 1, 1, classic_diagonal_engine()).unwrap();
        let direct = pade(&c, 1, 2).unwrap().expand(3).unwrap();
        let got = shifted.expand(3).unwrap();
        for i in 0..=3 {
            assert_close(got.coeffs()[i], direct.coeffs()[i], 1e-12);
        }
        // Evaluation at the origin takes the series limit.
        match shifted.eval(r(0.0)) {
            EvalValue::Finite(v) => assert_close(v, r(1.0), 1e-12),
            EvalValue::Pole => panic!("unexpected pole at origin"),
        }
        // And away from the origin matches the direct quotient.
        let t = r(0.3);
        let a = shifted.eval(t).finite().unwrap();
        let b = pade(&c, 1, 2).unwrap().eval(t).finite().unwrap();
        assert_close(a, b, 1e-12);
    }

    #[test]
    fn shift_requires_enough_coefficients() {
        let c = FormalPowerSeries::exp(2);
        assert_eq!(
            shift_numerator(&c, 2, 1, classic_diagonal_engine()).unwrap_err(),
            Error::InsufficientOrder { needed: 4, got: 2 }
        );
    }
}
