//! Partial-fraction approximants with simple poles, recovered from series
//! coefficients by a Prony-style procedure.
//!
//! The target shape is `R(t) = sum_i a_i / (1 - p_i t)` with `k + 1`
//! pairwise distinct nodes `p_i`, which matches the first `2k + 2` series
//! coefficients `c_0 ..= c_{2k+1}`.  The steps:
//!
//! 1. solve the Hankel system
//!    `sum_{j=1..k+1} b_j c_{j+n} = -c_n` (`n = 0..k`, `b_0 = 1`) for the
//!    denominator coefficients;
//! 2. read the nodes off as the roots of `B(x) = sum_j b_j x^j` — the
//!    denominator polynomial with its coefficient order reversed, so that
//!    the roots are the `p_i` themselves rather than their reciprocals;
//! 3. solve the Vandermonde system `sum_i a_i p_i^j = c_j` (`j = 0..k`) for
//!    the residues.
//!
//! [`residues_via_derivative`] recomputes the residues from a polynomial
//! quotient by the residue formula, as an independent cross-check, and
//! [`orthogonality_residuals`] exposes the moment conditions the recovered
//! denominator must annihilate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{solve_dense, CMatrix};
use crate::poly::Polynomial;
use crate::series::{matches_through, FormalPowerSeries};
use crate::tol;
use crate::value::EvalValue;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// One simple-pole term `residue / (1 - node * t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartialFractionTerm {
    pub residue: Complex64,
    pub node: Complex64,
}

/// Sum of simple-pole terms `sum_i a_i / (1 - p_i t)` with pairwise
/// distinct nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFraction {
    terms: Vec<PartialFractionTerm>,
}

impl PartialFraction {
    /// Wraps explicit terms; entries must be finite and the nodes pairwise
    /// distinct.
    pub fn new(terms: Vec<PartialFractionTerm>) -> Result<Self> {
        for t in &terms {
            if !t.residue.re.is_finite()
                || !t.residue.im.is_finite()
                || !t.node.re.is_finite()
                || !t.node.im.is_finite()
            {
                return Err(Error::NonFinite);
            }
        }
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if terms[i].node == terms[j].node {
                    return Err(Error::NonDistinctNodes);
                }
            }
        }
        Ok(PartialFraction { terms })
    }

    pub fn terms(&self) -> &[PartialFractionTerm] {
        &self.terms
    }

    /// Evaluates the sum; `t` within the coincidence window of a pole
    /// `1 / p_i` yields the pole marker.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        let window = tol::NODE_HIT_RELATIVE * (1.0 + t.norm());
        for term in &self.terms {
            if term.node != ZERO && (ONE - term.node * t).norm() <= window * term.node.norm() {
                return EvalValue::Pole;
            }
        }
        EvalValue::Finite(
            self.terms
                .iter()
                .map(|term| term.residue / (ONE - term.node * t))
                .sum(),
        )
    }

    /// Power-series coefficients `d_k = sum_i a_i p_i^k` for `k = 0 ..= n`.
    pub fn expand(&self, n: usize) -> Result<FormalPowerSeries> {
        let d = (0..=n)
            .map(|k| {
                self.terms
                    .iter()
                    .map(|term| term.residue * term.node.powu(k as u32))
                    .sum()
            })
            .collect();
        FormalPowerSeries::new(d)
    }
}

/// The raw `(k+1) x (k+1)` Hankel system for the denominator step: matrix
/// entry `(n, j)` is `c_{j+1+n}` (the coefficient multiplying `b_{j+1}`) and
/// the right-hand side is `-c_n`, `n = 0..k`.
///
/// Exposed so the system can be compared entry-by-entry with
/// [`crate::pade::denominator_system`] at `(p, q) = (k, k+1)`: appending the
/// normalization column to each and reversing one's column order makes the
/// two augmented arrays identical; consumes `c_0 ..= c_{2k+1}`.
pub fn hankel_system(c: &FormalPowerSeries, k: usize) -> Result<(CMatrix, Vec<Complex64>)> {
    c.require_order(2 * k + 1)?;
    let m = CMatrix::from_fn(k + 1, k + 1, |n, j| c.coeff((j + 1 + n) as isize))?;
    let rhs: Vec<Complex64> = (0..=k).map(|n| -c.coeff(n as isize)).collect();
    Ok((m, rhs))
}

/// Denominator coefficients `b_0 = 1, b_1 ..= b_{k+1}` from the Hankel
/// system of [`hankel_system`].
///
/// This is the same solution as the order-`(k, k+1)` denominator system of
/// the polynomial-quotient construction with its coefficient numbering
/// reversed; consumes `c_0 ..= c_{2k+1}`.
pub fn hankel_denominator(c: &FormalPowerSeries, k: usize) -> Result<Vec<Complex64>> {
    let (m, rhs) = hankel_system(c, k)?;
    let mut b = vec![ONE];
    b.extend(solve_dense(&m, &rhs)?);
    Ok(b)
}

/// Recovers a `k + 1`-term simple-pole sum matching the series through
/// order `2k + 1`.
///
/// Fails with [`Error::NonDistinctNodes`] when the recovered nodes cluster
/// closer than `NODE_DISTINCT_RELATIVE` times the largest node modulus (the
/// simple-pole form does not exist), and with
/// [`Error::DegenerateDenominator`] when the denominator's leading
/// coefficient vanishes (fewer than `k + 1` finite nodes).  The matching
/// order is verified on the recovered sum (at the looser root-extraction
/// tolerance); series for which the recovery fails to carry it are reported
/// as [`Error::SingularMatrix`] rather than returned silently wrong.
pub fn pfpa(c: &FormalPowerSeries, k: usize) -> Result<PartialFraction> {
    let b = hankel_denominator(c, k)?;
    let bpoly = Polynomial::new(b);
    if bpoly.degree() < k + 1 {
        return Err(Error::DegenerateDenominator);
    }
    let nodes = bpoly.roots()?;

    let max_mod = nodes.iter().map(|p| p.norm()).fold(0.0, f64::max);
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if (nodes[i] - nodes[j]).norm() < tol::NODE_DISTINCT_RELATIVE * max_mod {
                return Err(Error::NonDistinctNodes);
            }
        }
    }

    let v = CMatrix::from_fn(k + 1, k + 1, |j, i| nodes[i].powu(j as u32))?;
    let rhs: Vec<Complex64> = (0..=k).map(|j| c.coeff(j as isize)).collect();
    let residues = solve_dense(&v, &rhs)?;

    let built = PartialFraction::new(
        residues
            .into_iter()
            .zip(nodes)
            .map(|(residue, node)| PartialFractionTerm { residue, node })
            .collect(),
    )?;
    let d = built.expand(2 * k + 1)?;
    if !matches_through(&d, c, 2 * k + 1, tol::RECOVERY_CONTACT_RELATIVE) {
        return Err(Error::SingularMatrix);
    }
    Ok(built)
}

/// Residues of `P / Q` at the poles `1 / p_i` by the derivative formula
/// `a_i = -p_i P(1/p_i) / Q'(1/p_i)`; an independent check on the
/// Vandermonde path of [`pfpa`].
///
/// Nodes must be nonzero and pairwise distinct, and `Q'` must not vanish at
/// any `1 / p_i`.
pub fn residues_via_derivative(
    num: &Polynomial,
    den: &Polynomial,
    nodes: &[Complex64],
) -> Result<Vec<Complex64>> {
    for i in 0..nodes.len() {
        if nodes[i] == ZERO {
            return Err(Error::ZeroNode);
        }
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::NonDistinctNodes);
            }
        }
    }
    let dq = den.derivative();
    nodes
        .iter()
        .map(|&p| {
            let u = ONE / p;
            let slope = dq.eval(u);
            if slope == ZERO {
                return Err(Error::ZeroDerivative);
            }
            Ok(-p * num.eval(u) / slope)
        })
        .collect()
}

/// Moment residuals `r_n = sum_{j=0..k+1} b_j c_{j+n}` for `n = 0..k`,
/// where `b` has length `k + 2`.
///
/// For denominator coefficients that exactly solve the Hankel system all
/// residuals vanish; their numerical size measures the quality of a
/// computed solution.
pub fn orthogonality_residuals(c: &FormalPowerSeries, b: &[Complex64]) -> Result<Vec<Complex64>> {
    if b.len() < 2 {
        return Err(Error::InvalidDenominator(
            "need at least two denominator coefficients",
        ));
    }
    let k = b.len() - 2;
    c.require_order(2 * k + 1)?;
    Ok((0..=k)
        .map(|n| {
            b.iter()
                .enumerate()
                .map(|(j, &bj)| bj * c.coeff((j + n) as isize))
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pade::pade;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} vs {b}");
    }

    /// c_j = 2 * 1^j + 3 * 2^j: a two-term sum with nodes {1, 2} and
    /// residues {2, 3}.
    fn two_term_series() -> FormalPowerSeries {
        FormalPowerSeries::from_real(&[5.0, 8.0, 14.0, 26.0]).unwrap()
    }

    #[test]
    fn hankel_solution_by_hand() {
        // [[8, 14], [14, 26]] (b_1, b_2) = (-5, -8) gives (-3/2, 1/2).
        let b = hankel_denominator(&two_term_series(), 1).unwrap();
        assert_eq!(b[0], ONE);
        assert_close(b[1], r(-1.5), 1e-14);
        assert_close(b[2], r(0.5), 1e-14);
    }

    #[test]
    fn recovers_nodes_and_residues() {
        let pf = pfpa(&two_term_series(), 1).unwrap();
        let mut terms = pf.terms().to_vec();
        terms.sort_by(|s, t| s.node.re.total_cmp(&t.node.re));
        assert_close(terms[0].node, r(1.0), 1e-10);
        assert_close(terms[0].residue, r(2.0), 1e-10);
        assert_close(terms[1].node, r(2.0), 1e-10);
        assert_close(terms[1].residue, r(3.0), 1e-10);

        // The recovered sum reproduces the series exactly through 2k+1.
        let d = pf.expand(3).unwrap();
        for i in 0..=3 {
            assert_close(d.coeffs()[i], two_term_series().coeffs()[i], 1e-9);
        }
    }

    #[test]
    fn single_term_geometric() {
        let c = FormalPowerSeries::geometric(r(2.0), 3);
        let pf = pfpa(&c, 0).unwrap();
        assert_eq!(pf.terms().len(), 1);
        assert_close(pf.terms()[0].node, r(2.0), 1e-12);
        assert_close(pf.terms()[0].residue, r(1.0), 1e-12);
    }

    #[test]
    fn confluent_nodes_are_rejected() {
        // c_j = j + 1 comes from a double pole: B(x) = (1 - x)^2.
        let c = FormalPowerSeries::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(pfpa(&c, 1), Err(Error::NonDistinctNodes));
    }

    #[test]
    fn short_series_is_rejected() {
        let c = FormalPowerSeries::from_real(&[5.0, 8.0, 14.0]).unwrap();
        assert_eq!(
            pfpa(&c, 1),
            Err(Error::InsufficientOrder { needed: 3, got: 2 })
        );
    }

    #[test]
    fn derivative_formula_agrees_with_vandermonde() {
        // The order-(1, 2) quotient of the same series has denominator
        // (1 - t)(1 - 2t); its residues must match the recovered ones.
        let c = two_term_series();
        let pf = pfpa(&c, 1).unwrap();
        let quotient = pade(&c, 1, 2).unwrap();
        let nodes: Vec<Complex64> = pf.terms().iter().map(|t| t.node).collect();
        let a = residues_via_derivative(quotient.num(), quotient.den(), &nodes).unwrap();
        for (ai, term) in a.iter().zip(pf.terms()) {
            assert_close(*ai, term.residue, 1e-9);
        }
    }

    #[test]
    fn derivative_formula_error_paths() {
        let num = Polynomial::one();
        let den = Polynomial::new(vec![r(1.0), r(-2.0), r(1.0)]); // (1 - t)^2
        assert_eq!(
            residues_via_derivative(&num, &den, &[r(0.0)]),
            Err(Error::ZeroNode)
        );
        assert_eq!(
            residues_via_derivative(&num, &den, &[r(1.0), r(1.0)]),
            Err(Error::NonDistinctNodes)
        );
        // Q'(1) = 0 for the double root.
        assert_eq!(
            residues_via_derivative(&num, &den, &[r(1.0)]),
            Err(Error::ZeroDerivative)
        );
    }

    #[test]
    fn moment_residuals_vanish_for_exact_solutions() {
        let c = FormalPowerSeries::exp(7);
        let b = hankel_denominator(&c, 2).unwrap();
        let res = orthogonality_residuals(&c, &b).unwrap();
        for rn in res {
            assert!(rn.norm() <= tol::ORTHOGONALITY_RESIDUAL * c.max_abs());
        }
        // A wrong denominator leaves visible residuals.
        let res = orthogonality_residuals(&c, &[ONE, r(0.5), r(0.5), r(0.5)]).unwrap();
        assert!(res.iter().any(|rn| rn.norm() > 1e-3));
    }

    #[test]
    fn evaluation_marks_poles() {
        let pf = pfpa(&two_term_series(), 1).unwrap();
        assert!(pf.eval(r(0.5)).is_pole()); // t = 1/2 hits the node-2 pole
        let v = pf.eval(r(0.1)).finite().unwrap();
        // 2/(1 - 0.1) + 3/(1 - 0.2)
        assert_close(v, r(2.0 / 0.9 + 3.0 / 0.8), 1e-9);
    }

    #[test]
    fn duplicate_explicit_terms_are_rejected() {
        let t = PartialFractionTerm {
            residue: ONE,
            node: r(2.0),
        };
        assert_eq!(PartialFraction::new(vec![t, t]), Err(Error::NonDistinctNodes));
    }
}
