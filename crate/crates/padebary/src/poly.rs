//! Complex polynomials in one variable: evaluation, calculus, arithmetic,
//! and root finding.
//!
//! Coefficients are stored in ascending order (`p(t) = c_0 + c_1 t + ...`).
//! Roots are computed with the Durand-Kerner simultaneous iteration, which
//! handles complex coefficients directly and is ample for the small degrees
//! (a couple dozen at most) that approximant denominators reach.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Complex polynomial with ascending coefficients.
///
/// The stored representation is canonical: trailing coefficients that are
/// exactly zero are trimmed, and the zero polynomial is kept as the single
/// coefficient `[0]`.  `degree()` therefore reports the true degree (with the
/// convention that the zero polynomial has degree 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// exact zeros.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Polynomial { coeffs }
    }

    /// Constant polynomial.
    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The constant 1.
    pub fn one() -> Self {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    /// Ascending coefficients `c_0 ..= c_degree`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree of the canonical representation (zero polynomial: 0).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `true` for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// Horner evaluation at `t`.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// First derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::constant(Complex64::new(0.0, 0.0));
        }
        let d: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Polynomial::new(d)
    }

    /// Polynomial product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::constant(Complex64::new(0.0, 0.0));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            out[i] += b;
        }
        Polynomial::new(out)
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); k];
        out.extend_from_slice(&self.coeffs);
        Polynomial::new(out)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// All `degree()` roots, with multiplicity, via the Durand-Kerner
    /// simultaneous iteration.
    ///
    /// Every returned root `r` satisfies the residual bound
    /// `|p(r)| <= ROOT_RESIDUAL * max|coeffs| * max(1, |r|)^degree`;
    /// otherwise [`Error::NoConvergence`] is reported.  Constant polynomials
    /// yield an empty root list.  Clustered roots converge only linearly, so
    /// multiple roots come back as tight clusters accurate to roughly the
    /// square root of machine precision — still far inside the residual
    /// bound.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        let d = self.degree();
        if d == 0 {
            return Ok(Vec::new());
        }
        let lead = self.coeffs[d];
        if d == 1 {
            return Ok(vec![-self.coeffs[0] / lead]);
        }

        let monic: Vec<Complex64> = self.coeffs.iter().map(|&c| c / lead).collect();
        let eval_monic = |t: Complex64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &c in monic.iter().rev() {
                acc = acc * t + c;
            }
            acc
        };

        // Cauchy bound: all roots lie inside |z| <= 1 + max|monic coeffs|.
        let radius = 1.0 + monic[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..d)
            .map(|j| {
                // Offset angle keeps the start away from real-axis symmetry.
                let theta = 2.0 * std::f64::consts::PI * j as f64 / d as f64 + 0.4;
                Complex64::from_polar(0.9 * radius, theta)
            })
            .collect();

        let coeff_scale = self.max_abs();
        let residual_ok = |r: Complex64, val: Complex64| {
            val.norm() <= tol::ROOT_RESIDUAL * coeff_scale * r.norm().max(1.0).powi(d as i32)
        };

        const MAX_ITER: usize = 1000;
        for _ in 0..MAX_ITER {
            let mut max_step = 0.0f64;
            let mut all_tiny_residual = true;
            for j in 0..d {
                let val = eval_monic(z[j]);
                if val.norm() > 1e-15 * z[j].norm().max(1.0).powi(d as i32) {
                    all_tiny_residual = false;
                }
                let mut den = Complex64::new(1.0, 0.0);
                for l in 0..d {
                    if l != j {
                        den *= z[j] - z[l];
                    }
                }
                if den == Complex64::new(0.0, 0.0) {
                    // Two iterates collided; nudge and keep going.
                    let nudge = 1e-6 * (1.0 + z[j].norm());
                    z[j] += Complex64::new(nudge, 1e-6);
                    max_step = f64::INFINITY;
                    continue;
                }
                let step = val / den;
                z[j] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
            }
            if all_tiny_residual || max_step <= 1e-14 {
                break;
            }
        }

        for &r in &z {
            let val = self.eval(r);
            if !residual_ok(r, val) {
                return Err(Error::NoConvergence);
            }
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_by_re(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn canonical_trimming() {
        let p = Polynomial::new(vec![r(1.0), r(2.0), r(0.0), r(0.0)]);
        assert_eq!(p.degree(), 1);
        let z = Polynomial::new(vec![r(0.0), r(0.0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
    }

    #[test]
    fn horner_evaluation() {
        let p = Polynomial::new(vec![r(1.0), r(2.0), r(3.0)]);
        assert_eq!(p.eval(r(2.0)), r(17.0));
        assert_eq!(p.eval(r(0.0)), r(1.0));
        // (i)^2 * 3 + 2i + 1 = -3 + 1 + 2i = -2 + 2i
        assert!((p.eval(c(0.0, 1.0)) - c(-2.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn derivative_drops_constant() {
        let p = Polynomial::new(vec![r(1.0), r(2.0), r(3.0)]);
        assert_eq!(p.derivative(), Polynomial::new(vec![r(2.0), r(6.0)]));
        assert!(Polynomial::constant(r(5.0)).derivative().is_zero());
    }

    #[test]
    fn product_of_linear_factors() {
        // (1 - t)(1 - 2t) = 1 - 3t + 2t^2
        let p = Polynomial::new(vec![r(1.0), r(-1.0)]);
        let q = Polynomial::new(vec![r(1.0), r(-2.0)]);
        assert_eq!(p.mul(&q), Polynomial::new(vec![r(1.0), r(-3.0), r(2.0)]));
    }

    #[test]
    fn roots_of_quadratic() {
        // x^2 - 3x + 2 = (x - 1)(x - 2)
        let p = Polynomial::new(vec![r(2.0), r(-3.0), r(1.0)]);
        let roots = sorted_by_re(p.roots().unwrap());
        assert!((roots[0] - r(1.0)).norm() < 1e-10);
        assert!((roots[1] - r(2.0)).norm() < 1e-10);
    }

    #[test]
    fn roots_scale_invariant() {
        // Same roots when the polynomial is globally rescaled.
        let p = Polynomial::new(vec![r(6.0), r(-9.0), r(3.0)]);
        let roots = sorted_by_re(p.roots().unwrap());
        assert!((roots[0] - r(1.0)).norm() < 1e-10);
        assert!((roots[1] - r(2.0)).norm() < 1e-10);
    }

    #[test]
    fn complex_conjugate_pair() {
        // x^2 + 1 = (x - i)(x + i)
        let p = Polynomial::new(vec![r(1.0), r(0.0), r(1.0)]);
        let roots = sorted_by_re(p.roots().unwrap());
        assert!((roots[0] - c(0.0, -1.0)).norm() < 1e-10 || (roots[0] - c(0.0, 1.0)).norm() < 1e-10);
        assert!((roots[0] + roots[1]).norm() < 1e-10);
    }

    #[test]
    fn double_root_comes_back_twice() {
        // 1 - 2x + x^2 = (1 - x)^2
        let p = Polynomial::new(vec![r(1.0), r(-2.0), r(1.0)]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 2);
        for root in roots {
            assert!((root - r(1.0)).norm() < 1e-4);
        }
    }

    #[test]
    fn residual_bound_holds_for_wilkinson_like_degree_8() {
        // (x-1)(x-2)...(x-8) expanded; roots must satisfy the residual bound.
        let mut p = Polynomial::one();
        for k in 1..=8 {
            p = p.mul(&Polynomial::new(vec![r(-(k as f64)), r(1.0)]));
        }
        let scale = p.max_abs();
        for root in p.roots().unwrap() {
            let bound = tol::ROOT_RESIDUAL * scale * root.norm().max(1.0).powi(8);
            assert!(p.eval(root).norm() <= bound);
        }
    }

    #[test]
    fn constant_has_no_roots() {
        assert_eq!(Polynomial::constant(r(4.0)).roots().unwrap(), Vec::new());
    }

    #[test]
    fn linear_root_is_exact() {
        let p = Polynomial::new(vec![r(3.0), r(-6.0)]);
        assert_eq!(p.roots().unwrap(), vec![r(0.5)]);
    }
}
