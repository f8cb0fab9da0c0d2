//! Barycentric rational approximants of power series.
//!
//! Two equivalent representations are supported, differing in how a node
//! enters a term:
//!
//! * **Form 1** — `R(t) = (sum_i a_i / (p_i - t)) / (sum_i b_i / (z_i - t))`.
//!   Nodes sit in the finite plane and must be nonzero (each term's value at
//!   the origin involves `1 / node`).
//! * **Form 2** — `R(t) = (sum_i a_i / (1 - p_i t)) / (sum_i b_i / (1 - z_i t))`.
//!   A node `p_i` places a pole at `1 / p_i`; zero nodes are allowed and
//!   simply contribute constant terms.
//!
//! The correspondence `p <-> 1/p`, `a <-> a/p` maps one form onto the other
//! term by term.
//!
//! Given series coefficients, [`bpa_form1`]/[`bpa_form2`] determine *both*
//! coefficient families from one linear system (agreement through order
//! `p + q`, with the denominator normalized to 1 at the origin), while
//! [`bpta_form1`]/[`bpta_form2`] keep the caller's denominator weights fixed
//! and determine the numerator family only (agreement through order `p`).
//! [`interpolatory_form1`] instead prescribes point values at the nodes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{solve_dense, CMatrix};
use crate::pade::RationalFunction;
use crate::poly::Polynomial;
use crate::series::{matches_through, FormalPowerSeries};
use crate::tol;
use crate::value::EvalValue;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Validates one node family: non-empty, finite, pairwise distinct, and
/// (when `require_nonzero`) free of exact zeros.
fn check_family(nodes: &[Complex64], require_nonzero: bool) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::InvalidNodes("node family is empty"));
    }
    if nodes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if require_nonzero && nodes.contains(&ZERO) {
        return Err(Error::ZeroNode);
    }
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::InvalidNodes("duplicate node in family"));
            }
        }
    }
    Ok(())
}

fn check_coeffs(v: &[Complex64]) -> Result<()> {
    if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Confirms that a freshly solved quotient reproduces the input coefficients
/// through index `upto` before it is handed to the caller.
///
/// Expansion failures propagate unchanged.  A coefficient mismatch means the
/// linear system sat close enough to singular that roundoff destroyed the
/// matching property — for instance by pushing a denominator zero toward the
/// origin, where tiny solution errors grow geometrically in the expansion —
/// and is reported as [`Error::SingularMatrix`] rather than returned as a
/// silently wrong approximant.
fn confirm_contact(
    expansion: Result<FormalPowerSeries>,
    c: &FormalPowerSeries,
    upto: usize,
) -> Result<()> {
    let d = expansion?;
    if matches_through(&d, c, upto, tol::CONTACT_RELATIVE) {
        Ok(())
    } else {
        Err(Error::SingularMatrix)
    }
}

/// Index of the first node whose pole location is hit by `t`, under the
/// relative window `NODE_HIT_RELATIVE * (1 + |t|)`.
///
/// For form 1 the pole of term `i` sits at the node itself; for form 2 it
/// sits at `1 / p_i`, and the window is transformed accordingly
/// (`|t - 1/p| <= w` is `|1 - p t| <= w |p|`).
fn hit_direct(nodes: &[Complex64], t: Complex64) -> Option<usize> {
    let window = tol::NODE_HIT_RELATIVE * (1.0 + t.norm());
    nodes.iter().position(|&z| (t - z).norm() <= window)
}

fn hit_reciprocal(nodes: &[Complex64], t: Complex64) -> Option<usize> {
    let window = tol::NODE_HIT_RELATIVE * (1.0 + t.norm());
    nodes
        .iter()
        .position(|&z| z != ZERO && (ONE - z * t).norm() <= window * z.norm())
}

/// Shared node-limit logic for both forms.
///
/// `p_hit`/`z_hit` say whether `t` lands on a pole-family or zero-family
/// singular point:
///
/// * both: the singular factors cancel and the limit is `a_i / b_j`
///   (pole if `b_j` is zero);
/// * pole family only: genuine pole;
/// * zero family only: the denominator blows up, so the value is 0;
/// * neither: the caller evaluates the two sums directly.
fn node_limit(
    a: &[Complex64],
    b: &[Complex64],
    p_hit: Option<usize>,
    z_hit: Option<usize>,
) -> Option<EvalValue> {
    match (p_hit, z_hit) {
        (Some(i), Some(j)) => {
            if b[j] == ZERO {
                Some(EvalValue::Pole)
            } else {
                Some(EvalValue::Finite(a[i] / b[j]))
            }
        }
        (Some(_), None) => Some(EvalValue::Pole),
        (None, Some(_)) => Some(EvalValue::Finite(ZERO)),
        (None, None) => None,
    }
}

/// Power-series coefficients of a weighted sum of elementary terms:
/// `sum_i w_i / (node_i - t)` expands with `k`-th coefficient
/// `sum_i w_i / node_i^{k+1}`, and `sum_i w_i / (1 - node_i t)` with
/// `sum_i w_i node_i^k`.
fn sum_coeff_direct(w: &[Complex64], nodes: &[Complex64], k: usize) -> Complex64 {
    w.iter()
        .zip(nodes)
        .map(|(&wi, &ni)| wi / ni.powu(k as u32 + 1))
        .sum()
}

fn sum_coeff_reciprocal(w: &[Complex64], nodes: &[Complex64], k: usize) -> Complex64 {
    w.iter()
        .zip(nodes)
        .map(|(&wi, &ni)| wi * ni.powu(k as u32))
        .sum()
}

/// Long division of the numerator-sum series by the denominator-sum series:
/// `d_k = (N_k - sum_{j<k} D_{k-j} d_j) / D_0`, shared by both forms.
fn divide_series(
    num_coeff: impl Fn(usize) -> Complex64,
    den_coeff: impl Fn(usize) -> Complex64,
    den_scale: f64,
    n: usize,
) -> Result<FormalPowerSeries> {
    let d0 = den_coeff(0);
    // The denominator value at the origin must stand clear of the roundoff
    // floor of the sum that produced it.
    if d0.norm() <= tol::DEGENERATE_ORIGIN * den_scale.max(1.0) {
        return Err(Error::DegenerateDenominator);
    }
    let den: Vec<Complex64> = (0..=n).map(den_coeff).collect();
    let mut d: Vec<Complex64> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num_coeff(k);
        for j in 0..k {
            acc -= den[k - j] * d[j];
        }
        d.push(acc / d0);
    }
    FormalPowerSeries::new(d)
}

/// The numerator polynomial of a combined fraction: for weights `w` over
/// linear factors `L_i(t)`, returns `sum_i w_i prod_{l != i} L_l(t)`.
fn combined_numerator(w: &[Complex64], factors: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::constant(ZERO);
    for (i, &wi) in w.iter().enumerate() {
        if wi == ZERO {
            continue;
        }
        let mut term = Polynomial::constant(wi);
        for (l, f) in factors.iter().enumerate() {
            if l != i {
                term = term.mul(f);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Pairs off bitwise-equal nodes across the two families; returns flags
/// (`p_cancelled`, `z_cancelled`) marking factors that drop from the
/// combined quotient.
fn match_shared_nodes(pnodes: &[Complex64], znodes: &[Complex64]) -> (Vec<bool>, Vec<bool>) {
    let mut p_used = vec![false; pnodes.len()];
    let mut z_used = vec![false; znodes.len()];
    for (i, &p) in pnodes.iter().enumerate() {
        if let Some(j) = znodes
            .iter()
            .enumerate()
            .position(|(j, &z)| !z_used[j] && z == p)
        {
            p_used[i] = true;
            z_used[j] = true;
        }
    }
    (p_used, z_used)
}

/// Form-1 barycentric quotient `(sum a_i / (p_i - t)) / (sum b_i / (z_i - t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct BarycentricForm1 {
    a: Vec<Complex64>,
    pnodes: Vec<Complex64>,
    b: Vec<Complex64>,
    znodes: Vec<Complex64>,
}

/// Form-2 barycentric quotient `(sum a_i / (1 - p_i t)) / (sum b_i / (1 - z_i t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct BarycentricForm2 {
    a: Vec<Complex64>,
    pnodes: Vec<Complex64>,
    b: Vec<Complex64>,
    znodes: Vec<Complex64>,
}

impl BarycentricForm1 {
    /// Wraps explicit coefficient/node families.  Within each family the
    /// nodes must be distinct and nonzero, and each coefficient vector must
    /// match its node vector in length.
    pub fn new(
        a: Vec<Complex64>,
        pnodes: Vec<Complex64>,
        b: Vec<Complex64>,
        znodes: Vec<Complex64>,
    ) -> Result<Self> {
        check_family(&pnodes, true)?;
        check_family(&znodes, true)?;
        check_coeffs(&a)?;
        check_coeffs(&b)?;
        if a.len() != pnodes.len() || b.len() != znodes.len() {
            return Err(Error::DimensionMismatch(
                "coefficient and node vectors differ in length",
            ));
        }
        Ok(BarycentricForm1 { a, pnodes, b, znodes })
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn pnodes(&self) -> &[Complex64] {
        &self.pnodes
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    pub fn znodes(&self) -> &[Complex64] {
        &self.znodes
    }

    /// Evaluates the quotient, applying the node-limit rules when `t` falls
    /// inside the coincidence window of a node of either family.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        let p_hit = hit_direct(&self.pnodes, t);
        let z_hit = hit_direct(&self.znodes, t);
        if let Some(v) = node_limit(&self.a, &self.b, p_hit, z_hit) {
            return v;
        }
        let num: Complex64 = self
            .a
            .iter()
            .zip(&self.pnodes)
            .map(|(&a, &p)| a / (p - t))
            .sum();
        let den: Complex64 = self
            .b
            .iter()
            .zip(&self.znodes)
            .map(|(&b, &z)| b / (z - t))
            .sum();
        if den == ZERO {
            EvalValue::Pole
        } else {
            EvalValue::Finite(num / den)
        }
    }

    /// Power-series coefficients `d_0 ..= d_n` around the origin, by long
    /// division of the term-sum expansions; fails with
    /// [`Error::DegenerateDenominator`] when the denominator sum vanishes at
    /// the origin.
    pub fn expand(&self, n: usize) -> Result<FormalPowerSeries> {
        let den_scale: f64 = self
            .b
            .iter()
            .zip(&self.znodes)
            .map(|(&b, &z)| (b / z).norm())
            .sum();
        divide_series(
            |k| sum_coeff_direct(&self.a, &self.pnodes, k),
            |k| sum_coeff_direct(&self.b, &self.znodes, k),
            den_scale,
            n,
        )
    }

    /// The same function in form 2, mapping each node to its reciprocal.
    /// Never fails: form-1 nodes are nonzero by construction.
    pub fn to_form2(&self) -> BarycentricForm2 {
        BarycentricForm2 {
            a: self.a.iter().zip(&self.pnodes).map(|(&a, &p)| a / p).collect(),
            pnodes: self.pnodes.iter().map(|&p| ONE / p).collect(),
            b: self.b.iter().zip(&self.znodes).map(|(&b, &z)| b / z).collect(),
            znodes: self.znodes.iter().map(|&z| ONE / z).collect(),
        }
    }

    /// Clears denominators into one polynomial quotient.  Factors belonging
    /// to bitwise-equal nodes shared by the two families cancel
    /// symbolically, so coincident-node quotients come out with degrees at
    /// most `(p, q)` instead of `(p + q + 1, p + q + 1)`.
    pub fn to_rational(&self) -> Result<RationalFunction> {
        let p_factors: Vec<Polynomial> = self
            .pnodes
            .iter()
            .map(|&p| Polynomial::new(vec![p, -ONE]))
            .collect();
        let z_factors: Vec<Polynomial> = self
            .znodes
            .iter()
            .map(|&z| Polynomial::new(vec![z, -ONE]))
            .collect();
        let (p_cancel, z_cancel) = match_shared_nodes(&self.pnodes, &self.znodes);

        let mut num = combined_numerator(&self.a, &p_factors);
        for (j, f) in z_factors.iter().enumerate() {
            if !z_cancel[j] {
                num = num.mul(f);
            }
        }
        let mut den = combined_numerator(&self.b, &z_factors);
        for (i, f) in p_factors.iter().enumerate() {
            if !p_cancel[i] {
                den = den.mul(f);
            }
        }
        RationalFunction::new(num, den)
    }
}

impl BarycentricForm2 {
    /// Wraps explicit coefficient/node families.  Within each family the
    /// nodes must be distinct; zero nodes are legal and contribute constant
    /// terms.
    pub fn new(
        a: Vec<Complex64>,
        pnodes: Vec<Complex64>,
        b: Vec<Complex64>,
        znodes: Vec<Complex64>,
    ) -> Result<Self> {
        check_family(&pnodes, false)?;
        check_family(&znodes, false)?;
        check_coeffs(&a)?;
        check_coeffs(&b)?;
        if a.len() != pnodes.len() || b.len() != znodes.len() {
            return Err(Error::DimensionMismatch(
                "coefficient and node vectors differ in length",
            ));
        }
        Ok(BarycentricForm2 { a, pnodes, b, znodes })
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn pnodes(&self) -> &[Complex64] {
        &self.pnodes
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    pub fn znodes(&self) -> &[Complex64] {
        &self.znodes
    }

    /// Evaluates the quotient; the singular point of a node `p_i` is
    /// `1 / p_i`, and the node-limit rules apply inside its coincidence
    /// window.
    pub fn eval(&self, t: Complex64) -> EvalValue {
        let p_hit = hit_reciprocal(&self.pnodes, t);
        let z_hit = hit_reciprocal(&self.znodes, t);
        if let Some(v) = node_limit(&self.a, &self.b, p_hit, z_hit) {
            return v;
        }
        let num: Complex64 = self
            .a
            .iter()
            .zip(&self.pnodes)
            .map(|(&a, &p)| a / (ONE - p * t))
            .sum();
        let den: Complex64 = self
            .b
            .iter()
            .zip(&self.znodes)
            .map(|(&b, &z)| b / (ONE - z * t))
            .sum();
        if den == ZERO {
            EvalValue::Pole
        } else {
            EvalValue::Finite(num / den)
        }
    }

    /// Power-series coefficients `d_0 ..= d_n` around the origin.
    pub fn expand(&self, n: usize) -> Result<FormalPowerSeries> {
        let den_scale: f64 = self.b.iter().map(|b| b.norm()).sum();
        divide_series(
            |k| sum_coeff_reciprocal(&self.a, &self.pnodes, k),
            |k| sum_coeff_reciprocal(&self.b, &self.znodes, k),
            den_scale,
            n,
        )
    }

    /// The same function in form 1; fails with [`Error::ZeroNode`] when any
    /// node is zero, since form 1 places nodes at reciprocals.
    pub fn to_form1(&self) -> Result<BarycentricForm1> {
        if self.pnodes.iter().chain(&self.znodes).any(|&z| z == ZERO) {
            return Err(Error::ZeroNode);
        }
        Ok(BarycentricForm1 {
            a: self.a.iter().zip(&self.pnodes).map(|(&a, &p)| a / p).collect(),
            pnodes: self.pnodes.iter().map(|&p| ONE / p).collect(),
            b: self.b.iter().zip(&self.znodes).map(|(&b, &z)| b / z).collect(),
            znodes: self.znodes.iter().map(|&z| ONE / z).collect(),
        })
    }

    /// Clears denominators into one polynomial quotient; linear factors
    /// `1 - node t` of bitwise-equal shared nodes cancel symbolically, and
    /// zero nodes contribute trivial factors that drop out on their own.
    pub fn to_rational(&self) -> Result<RationalFunction> {
        let p_factors: Vec<Polynomial> = self
            .pnodes
            .iter()
            .map(|&p| Polynomial::new(vec![ONE, -p]))
            .collect();
        let z_factors: Vec<Polynomial> = self
            .znodes
            .iter()
            .map(|&z| Polynomial::new(vec![ONE, -z]))
            .collect();
        let (p_cancel, z_cancel) = match_shared_nodes(&self.pnodes, &self.znodes);

        let mut num = combined_numerator(&self.a, &p_factors);
        for (j, f) in z_factors.iter().enumerate() {
            if !z_cancel[j] {
                num = num.mul(f);
            }
        }
        let mut den = combined_numerator(&self.b, &z_factors);
        for (i, f) in p_factors.iter().enumerate() {
            if !p_cancel[i] {
                den = den.mul(f);
            }
        }
        RationalFunction::new(num, den)
    }
}

/// Determines both coefficient families of a form-1 quotient with the given
/// nodes so that the result matches the series through order `p + q`
/// (`p + 1` pole-family nodes, `q + 1` zero-family nodes).
///
/// The linear system stacks a normalization row
/// `sum_i b_i / z_i = 1` — the denominator is 1 at the origin — on top of
/// the `p + q + 1` order conditions
/// `sum_i a_i / p_i^{k+1} - sum_i b_i s_ik = c_k` with
/// `s_ik = sum_{j=0..k-1} c_j / z_i^{k-j+1}`.
///
/// The matching order is verified on the solved result; node/series
/// configurations for which the computed solution fails to carry it are
/// reported as [`Error::SingularMatrix`].
pub fn bpa_form1(
    c: &FormalPowerSeries,
    pnodes: &[Complex64],
    znodes: &[Complex64],
) -> Result<BarycentricForm1> {
    check_family(pnodes, true)?;
    check_family(znodes, true)?;
    let p = pnodes.len() - 1;
    let q = znodes.len() - 1;
    c.require_order(p + q)?;

    let n = p + q + 2;
    let m = CMatrix::from_fn(n, n, |row, col| {
        if row == 0 {
            if col <= p {
                ZERO
            } else {
                ONE / znodes[col - p - 1]
            }
        } else {
            let k = row - 1;
            if col <= p {
                ONE / pnodes[col].powu(k as u32 + 1)
            } else {
                let z = znodes[col - p - 1];
                let s: Complex64 = (0..k)
                    .map(|j| c.coeff(j as isize) / z.powu((k - j) as u32 + 1))
                    .sum();
                -s
            }
        }
    })?;
    let mut rhs = vec![ONE];
    rhs.extend((0..=p + q).map(|k| c.coeff(k as isize)));

    let x = solve_dense(&m, &rhs)?;
    let built = BarycentricForm1::new(
        x[..=p].to_vec(),
        pnodes.to_vec(),
        x[p + 1..].to_vec(),
        znodes.to_vec(),
    )?;
    confirm_contact(built.expand(p + q), c, p + q)?;
    Ok(built)
}

/// Determines both coefficient families of a form-2 quotient with the given
/// nodes so that the result matches the series through order `p + q`.
///
/// The normalization row is `sum_i b_i = 1`, and the order conditions read
/// `sum_i a_i p_i^k - sum_i b_i s_ik = c_k` with
/// `s_ik = sum_{j=0..k-1} c_j z_i^{k-j}`.  The matching order is verified on
/// the solved result as in [`bpa_form1`].
pub fn bpa_form2(
    c: &FormalPowerSeries,
    pnodes: &[Complex64],
    znodes: &[Complex64],
) -> Result<BarycentricForm2> {
    check_family(pnodes, false)?;
    check_family(znodes, false)?;
    let p = pnodes.len() - 1;
    let q = znodes.len() - 1;
    c.require_order(p + q)?;

    let n = p + q + 2;
    let m = CMatrix::from_fn(n, n, |row, col| {
        if row == 0 {
            if col <= p {
                ZERO
            } else {
                ONE
            }
        } else {
            let k = row - 1;
            if col <= p {
                pnodes[col].powu(k as u32)
            } else {
                let z = znodes[col - p - 1];
                let s: Complex64 = (0..k)
                    .map(|j| c.coeff(j as isize) * z.powu((k - j) as u32))
                    .sum();
                -s
            }
        }
    })?;
    let mut rhs = vec![ONE];
    rhs.extend((0..=p + q).map(|k| c.coeff(k as isize)));

    let x = solve_dense(&m, &rhs)?;
    let built = BarycentricForm2::new(
        x[..=p].to_vec(),
        pnodes.to_vec(),
        x[p + 1..].to_vec(),
        znodes.to_vec(),
    )?;
    confirm_contact(built.expand(p + q), c, p + q)?;
    Ok(built)
}

/// Determines the numerator family of a form-1 quotient whose denominator
/// weights `b` (over `znodes`) are prescribed; the result matches the
/// series through order `p`.
///
/// Row `k` of the `(p+1) x (p+1)` system reads
/// `sum_i a_i / p_i^{k+1} = sum_i b_i sum_{j=0..k} c_j / z_i^{k-j+1}`,
/// i.e. the numerator expansion is forced to equal the expansion of
/// (series x denominator) through order `p`.  The matching order is
/// verified on the solved result as in [`bpa_form1`].
pub fn bpta_form1(
    c: &FormalPowerSeries,
    b: &[Complex64],
    pnodes: &[Complex64],
    znodes: &[Complex64],
) -> Result<BarycentricForm1> {
    check_family(pnodes, true)?;
    check_family(znodes, true)?;
    check_coeffs(b)?;
    if b.len() != znodes.len() {
        return Err(Error::DimensionMismatch(
            "denominator weights and nodes differ in length",
        ));
    }
    let p = pnodes.len() - 1;
    c.require_order(p)?;

    let m = CMatrix::from_fn(p + 1, p + 1, |k, i| ONE / pnodes[i].powu(k as u32 + 1))?;
    let rhs: Vec<Complex64> = (0..=p)
        .map(|k| {
            b.iter()
                .zip(znodes)
                .map(|(&bi, &zi)| {
                    (0..=k)
                        .map(|j| c.coeff(j as isize) / zi.powu((k - j) as u32 + 1))
                        .sum::<Complex64>()
                        * bi
                })
                .sum()
        })
        .collect();

    let a = solve_dense(&m, &rhs)?;
    let built = BarycentricForm1::new(a, pnodes.to_vec(), b.to_vec(), znodes.to_vec())?;
    confirm_contact(built.expand(p), c, p)?;
    Ok(built)
}

/// Form-2 counterpart of [`bpta_form1`]: prescribed denominator weights,
/// numerator family from
/// `sum_i a_i p_i^k = sum_i b_i sum_{j=0..k} c_j z_i^{k-j}`.
pub fn bpta_form2(
    c: &FormalPowerSeries,
    b: &[Complex64],
    pnodes: &[Complex64],
    znodes: &[Complex64],
) -> Result<BarycentricForm2> {
    check_family(pnodes, false)?;
    check_family(znodes, false)?;
    check_coeffs(b)?;
    if b.len() != znodes.len() {
        return Err(Error::DimensionMismatch(
            "denominator weights and nodes differ in length",
        ));
    }
    let p = pnodes.len() - 1;
    c.require_order(p)?;

    let m = CMatrix::from_fn(p + 1, p + 1, |k, i| pnodes[i].powu(k as u32))?;
    let rhs: Vec<Complex64> = (0..=p)
        .map(|k| {
            b.iter()
                .zip(znodes)
                .map(|(&bi, &zi)| {
                    (0..=k)
                        .map(|j| c.coeff(j as isize) * zi.powu((k - j) as u32))
                        .sum::<Complex64>()
                        * bi
                })
                .sum()
        })
        .collect();

    let a = solve_dense(&m, &rhs)?;
    let built = BarycentricForm2::new(a, pnodes.to_vec(), b.to_vec(), znodes.to_vec())?;
    confirm_contact(built.expand(p), c, p)?;
    Ok(built)
}

/// Form-1 interpolant: with `a_i = w_i * f_i`, `b_i = w_i`, and coincident
/// node families, the quotient takes the value `f_i` at node `i` regardless
/// of the (nonzero) weights `w`.
pub fn interpolatory_form1(
    nodes: &[Complex64],
    values: &[Complex64],
    weights: &[Complex64],
) -> Result<BarycentricForm1> {
    check_family(nodes, true)?;
    check_coeffs(values)?;
    check_coeffs(weights)?;
    if values.len() != nodes.len() || weights.len() != nodes.len() {
        return Err(Error::DimensionMismatch(
            "nodes, values and weights differ in length",
        ));
    }
    if weights.contains(&ZERO) {
        return Err(Error::InvalidDenominator("interpolation weight is zero"));
    }
    let a = weights
        .iter()
        .zip(values)
        .map(|(&w, &f)| w * f)
        .collect();
    BarycentricForm1::new(a, nodes.to_vec(), weights.to_vec(), nodes.to_vec())
}
