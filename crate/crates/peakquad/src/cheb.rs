//! The basic rule on [−1, 1]: interpolate the smooth factor f at
//! Chebyshev points of the first kind, convert the interpolant to the
//! power basis, and integrate it exactly against the Gaussian weight
//! using the moment vector.
//!
//! Two index conventions here differ from the usual textbook display and
//! are deliberate: the quadrature keeps the halved constant term
//! (c₀/2)·w₀ that the degree-weighted sum would otherwise drop, and the
//! coefficient formula uses separate interpolation and node indices.
//! Both follow from re-deriving the rule; dropping either breaks
//! constant integrands.

use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::kahan::NeumaierSum;
use crate::moments::{reflect_moments, weight_moments, GaussianWeight};
use crate::DEGREE_CAP;

/// Chebyshev points of the first kind, x_j = cos((2j+1)π/(2m+2)) for
/// j = 0..=m, in strictly decreasing order.
///
/// The lower half is the exact negation of the upper half (the middle
/// node of an even-degree rule is exactly 0.0), so symmetric integrands
/// cancel without rounding residue.
pub fn chebyshev_nodes(m: usize) -> Vec<f64> {
    let count = m + 1;
    let mut nodes = vec![0.0; count];
    for j in 0..count / 2 {
        let theta = (2 * j + 1) as f64 * std::f64::consts::PI / (2 * count) as f64;
        let c = theta.cos();
        nodes[j] = c;
        nodes[m - j] = -c;
    }
    nodes
}

/// Coefficients c_0..c_m of the Chebyshev interpolant
/// p_m(x) = c₀/2 + Σ_{j≥1} c_j·T_j(x) of f at the first-kind nodes:
/// c_j = (2/(m+1))·Σ_k f(x_k)·cos(j·θ_k).
///
/// # Errors
///
/// A non-finite sample f(x_k) aborts with the offending node coordinate.
pub fn chebyshev_coefficients<F>(f: &F, m: usize) -> Result<Vec<f64>>
where
    F: Integrand + ?Sized,
{
    let nodes = chebyshev_nodes(m);
    let mut samples = Vec::with_capacity(m + 1);
    for &x in &nodes {
        let y = f.eval(x);
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand { x, interval: None });
        }
        samples.push(y);
    }
    let denom = (2 * m + 2) as f64;
    let scale = 2.0 / (m + 1) as f64;
    let mut coeffs = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut s = 0.0;
        for (k, &fk) in samples.iter().enumerate() {
            // T_j at a first-kind node is exactly cos(j·θ_k).
            let angle = (j * (2 * k + 1)) as f64 * std::f64::consts::PI / denom;
            s += fk * angle.cos();
        }
        coeffs.push(scale * s);
    }
    Ok(coeffs)
}

/// C(n, k) computed exactly in integer arithmetic (valid through n = 61
/// before u64 could overflow; callers stay at n < 40).
fn binomial_exact(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut c: u64 = 1;
    for i in 1..=k {
        c = c * (n - k + i) as u64 / i as u64;
    }
    c as f64
}

/// The power-basis conversion number A_{j,k} in
/// T_j(x) = j·Σ_{k=0}^{⌊j/2⌋} A_{j,k}·x^(j−2k), namely
/// A_{j,k} = (−1)^k·(j−k−1)!/(k!·(j−2k)!)·2^(j−2k−1).
///
/// Evaluated as ±C(j−k−1, k)·2^(j−2k−1)/(j−2k) with an exact binomial
/// and an exact power of two, so the only rounding is the final
/// division. These numbers grow like 2^(j−1), which is why the crate
/// caps degrees at [`DEGREE_CAP`](crate::DEGREE_CAP).
///
/// # Panics
///
/// Panics unless j ≥ 1 and k ≤ j/2, the triangle where the identity is
/// defined.
pub fn power_number(j: usize, k: usize) -> f64 {
    assert!(
        j >= 1 && 2 * k <= j,
        "power_number: need j >= 1 and k <= j/2, got ({j}, {k})"
    );
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    if 2 * k == j {
        // Constant term of even T_j: (j/2−1)!/(j/2)! halves to 1/j.
        return sign / j as f64;
    }
    sign * binomial_exact(j - k - 1, k) * 2f64.powi((j - 2 * k - 1) as i32) / (j - 2 * k) as f64
}

/// The basic quadrature rule of degree m on [−1, 1]: build once, apply
/// to any integrand and weight.
///
/// `integrate` returns Q = (c₀/2)·w₀ + Σ_{j=1}^{m} j·c_j·Σ_k A_{j,k}·w_{j−2k},
/// the exact integral of the Chebyshev interpolant against the weight.
/// The rule is therefore exact (up to rounding) whenever f is a
/// polynomial of degree ≤ m.
///
/// # Examples
///
/// ```
/// use peakquad::{ChebyshevRule, GaussianWeight};
///
/// let rule = ChebyshevRule::new(4).unwrap();
/// let w = GaussianWeight::new(10.0, 0.0).unwrap();
/// // ∫ x² e^{−100x²} dx over [−1,1] = 2·M₂[10, 1]
/// let q = rule.integrate(&|x: f64| x * x, &w).unwrap();
/// let exact = 2.0 * peakquad::moment_base(2, 10.0, 1.0).unwrap();
/// assert!((q - exact).abs() <= 1e-13 * exact);
/// ```
#[derive(Debug, Clone)]
pub struct ChebyshevRule {
    m: usize,
    nodes: Vec<f64>,
    power_numbers: Vec<Vec<f64>>,
}

impl ChebyshevRule {
    /// Builds the degree-m rule: nodes and the triangular A_{j,k} table.
    ///
    /// # Errors
    ///
    /// Degrees beyond [`DEGREE_CAP`](crate::DEGREE_CAP) are rejected:
    /// the A numbers grow like 2^(j−1) and the conversion loses all
    /// accuracy well past the cap.
    pub fn new(m: usize) -> Result<Self> {
        if m > DEGREE_CAP {
            return Err(Error::DegreeCap {
                requested: m,
                cap: DEGREE_CAP,
            });
        }
        let power_numbers = (0..=m)
            .map(|j| {
                if j == 0 {
                    Vec::new()
                } else {
                    (0..=j / 2).map(|k| power_number(j, k)).collect()
                }
            })
            .collect();
        Ok(ChebyshevRule {
            m,
            nodes: chebyshev_nodes(m),
            power_numbers,
        })
    }

    /// Polynomial degree m; the rule samples m+1 nodes.
    pub fn degree(&self) -> usize {
        self.m
    }

    /// Interpolation nodes in decreasing order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Row j holds A_{j,k} for k = 0..=⌊j/2⌋; row 0 is empty because
    /// the constant term goes through the halved c₀ path instead.
    pub fn power_numbers(&self) -> &[Vec<f64>] {
        &self.power_numbers
    }

    /// Integrates f against the weight over [−1, 1].
    ///
    /// Peaks right of the interval (β > 0) are handled by reflecting the
    /// moment vector internally. Exactly m+1 evaluations of f are made.
    pub fn integrate<F>(&self, f: &F, weight: &GaussianWeight) -> Result<f64>
    where
        F: Integrand + ?Sized,
    {
        let coeffs = chebyshev_coefficients(f, self.m)?;
        let moments = if weight.beta() > 0.0 {
            let mirrored = GaussianWeight::new(weight.alpha(), -weight.beta())?;
            reflect_moments(&weight_moments(&mirrored, self.m)?)
        } else {
            weight_moments(weight, self.m)?
        };
        let w = moments.values();
        let mut acc = NeumaierSum::new();
        acc.add(0.5 * coeffs[0] * w[0]);
        for j in 1..=self.m {
            let mut inner = 0.0;
            for (k, a) in self.power_numbers[j].iter().enumerate() {
                inner += a * w[j - 2 * k];
            }
            acc.add(coeffs[j] * j as f64 * inner);
        }
        Ok(acc.total())
    }
}

/// One-shot form of [`ChebyshevRule::integrate`]: degree-m basic rule
/// applied to f under the given weight.
pub fn basic_rule<F>(f: &F, m: usize, weight: &GaussianWeight) -> Result<f64>
where
    F: Integrand + ?Sized,
{
    ChebyshevRule::new(m)?.integrate(f, weight)
}

/// A-priori error bound for the degree-m basic rule:
/// √π/(2^m·(m+1)!·α) times a sup-norm bound of f^(m+1) on [−1, 1].
///
/// The bound follows from the Chebyshev interpolation remainder paired
/// with the total weight mass √π/α, so it holds for every peak position.
///
/// # Panics
///
/// Panics if `alpha` is not positive or `deriv_bound` is negative.
pub fn basic_rule_error_bound(m: usize, alpha: f64, deriv_bound: f64) -> f64 {
    assert!(
        alpha.is_finite() && alpha > 0.0,
        "basic_rule_error_bound: alpha must be positive, got {alpha}"
    );
    assert!(
        deriv_bound >= 0.0,
        "basic_rule_error_bound: deriv_bound must be nonnegative, got {deriv_bound}"
    );
    let mut factorial = 1.0;
    for i in 2..=(m + 1) {
        factorial *= i as f64;
    }
    crate::SQRT_PI / (2f64.powi(m as i32) * factorial * alpha) * deriv_bound
}
