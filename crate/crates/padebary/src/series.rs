//! Formal power series truncated at a finite order, plus the stock test
//! series used throughout the crate.
//!
//! A series stores the complex coefficients `c_0 ..= c_N` of
//! `f(t) = sum c_k t^k`; `N` is called the *order*.  Constructions state how
//! many coefficients they consume and reject shorter inputs, so indexing
//! inside the crate never runs off the end.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Truncated formal power series with complex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalPowerSeries {
    coeffs: Vec<Complex64>,
}

impl FormalPowerSeries {
    /// Wraps explicit coefficients `c_0 ..= c_N`; at least `c_0` must be
    /// present and every entry must be finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InsufficientOrder { needed: 0, got: 0 });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(FormalPowerSeries { coeffs })
    }

    /// Real convenience constructor for tests and examples.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        FormalPowerSeries::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Highest stored index `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All stored coefficients.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_i`, with `c_i = 0` for negative `i`.
    ///
    /// Indices beyond the stored order are a caller bug — public
    /// constructions validate the order they need up front — and panic.
    pub fn coeff(&self, i: isize) -> Complex64 {
        if i < 0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[i as usize]
        }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Errors unless the series carries coefficients at least through
    /// order `needed`.
    pub fn require_order(&self, needed: usize) -> Result<()> {
        if self.order() < needed {
            Err(Error::InsufficientOrder {
                needed,
                got: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Copy truncated to order `n` (which must not exceed the stored order).
    pub fn truncated(&self, n: usize) -> Result<Self> {
        self.require_order(n)?;
        Ok(FormalPowerSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        })
    }

    /// Series of `tan(omega t) / (omega t)` through order `n`.
    ///
    /// The tangent coefficients come from the recurrence
    /// `(m + 1) T_{m+1} = [m = 0] + sum_{i+j=m} T_i T_j` implied by
    /// `tan' = 1 + tan^2`; then `c_k = T_{k+1} omega^k`.  Odd-index
    /// coefficients are exactly zero by construction.
    pub fn tan_over_t(omega: f64, n: usize) -> Self {
        // T_0 ..= T_{n+1} of tan(x) = sum T_m x^m.
        let mut t = vec![0.0f64; n + 2];
        if n + 1 >= 1 {
            t[1] = 1.0;
        }
        for m in 1..=n {
            let conv: f64 = (0..=m).map(|i| t[i] * t[m - i]).sum();
            t[m + 1] = conv / (m as f64 + 1.0);
        }
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut pow = 1.0f64;
        for k in 0..=n {
            coeffs.push(Complex64::new(t[k + 1] * pow, 0.0));
            pow *= omega;
        }
        FormalPowerSeries { coeffs }
    }

    /// Series of `log(1 + t) / t`: coefficients `(-1)^k / (k + 1)`.
    pub fn log1p_over_t(n: usize) -> Self {
        let coeffs = (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                Complex64::new(sign / (k as f64 + 1.0), 0.0)
            })
            .collect();
        FormalPowerSeries { coeffs }
    }

    /// Geometric series `1 / (1 - r t)`: coefficients `r^k`.
    pub fn geometric(r: Complex64, n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut pow = Complex64::new(1.0, 0.0);
        for _ in 0..=n {
            coeffs.push(pow);
            pow *= r;
        }
        FormalPowerSeries { coeffs }
    }

    /// Exponential series: coefficients `1 / k!`.
    pub fn exp(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = Complex64::new(1.0, 0.0);
        coeffs.push(c);
        for k in 1..=n {
            c /= k as f64;
            coeffs.push(c);
        }
        FormalPowerSeries { coeffs }
    }

    /// Copy with every coefficient shifted by an independent real offset
    /// drawn uniformly from `[-eps, eps]`.
    ///
    /// The generator is ChaCha8 keyed by `seed` alone, and offsets are drawn
    /// in index order, so a given `(eps, seed)` pair reproduces the same
    /// perturbation on every platform and run.
    pub fn perturbed(&self, eps: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c + Complex64::new(rng.gen_range(-eps..=eps), 0.0))
            .collect();
        FormalPowerSeries { coeffs }
    }

    /// Partial sum `c_0 + c_1 t + ... + c_n t^n` as a polynomial.
    pub fn partial_sum(&self, n: usize) -> Result<Polynomial> {
        self.require_order(n)?;
        Ok(Polynomial::new(self.coeffs[..=n].to_vec()))
    }

    /// Cauchy product truncated to order `n`; both factors must carry
    /// coefficients through order `n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Result<Self> {
        self.require_order(n)?;
        other.require_order(n)?;
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .map(|i| self.coeffs[i] * other.coeffs[k - i])
                    .sum::<Complex64>()
            })
            .collect();
        Ok(FormalPowerSeries { coeffs })
    }
}

/// True when `d` reproduces `c` coefficientwise through index `upto`, each
/// deviation at most `rel` times the largest modulus among `c_0 ..= c_upto`.
///
/// Constructors use this to confirm, before returning, that a freshly built
/// approximant actually carries its promised matching order; a violation
/// means roundoff in a near-degenerate construction destroyed the property.
pub(crate) fn matches_through(
    d: &FormalPowerSeries,
    c: &FormalPowerSeries,
    upto: usize,
    rel: f64,
) -> bool {
    let scale = (0..=upto)
        .map(|k| c.coeff(k as isize).norm())
        .fold(0.0, f64::max);
    let bound = rel * scale;
    (0..=upto).all(|k| (d.coeff(k as isize) - c.coeff(k as isize)).norm() <= bound)
}
