//! Uniform-mesh composite rules, kept as the control group.
//!
//! Equidistant nodes are blind to a peak of width 1/α until the step
//! drops below that width, so for ∫₀¹ e^{−α²x²} dx the node budget must
//! grow linearly with α before the error starts falling at the rule's
//! nominal rate. The graded schemes exist to beat exactly this; the
//! benchmark tables quote these rules in their "Uniform" columns, and
//! the divergence diagnostics sample them directly.
//!
//! Both rules integrate the full integrand pointwise (weight included);
//! nothing here knows about moments.

use crate::integrand::Integrand;
use crate::kahan::NeumaierSum;

/// Which uniform rule a benchmark column refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniformKind {
    /// Piecewise-linear endpoints rule, n + 1 nodes.
    Trapezoid,
    /// One Simpson panel per subinterval, 2n + 1 distinct nodes with
    /// shared endpoints.
    Simpson,
}

/// A uniform composite rule on [0, 1] with n equal subintervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformRule {
    pub kind: UniformKind,
    pub n: usize,
}

impl UniformRule {
    /// Number of distinct evaluation points.
    pub fn node_count(&self) -> usize {
        match self.kind {
            UniformKind::Trapezoid => self.n + 1,
            UniformKind::Simpson => 2 * self.n + 1,
        }
    }

    /// Applies the rule to g on [0, 1].
    pub fn integrate<F>(&self, g: &F) -> f64
    where
        F: Integrand + ?Sized,
    {
        match self.kind {
            UniformKind::Trapezoid => composite_trapezoid(g, self.n),
            UniformKind::Simpson => composite_simpson(g, self.n),
        }
    }
}

/// Composite trapezoid value of ∫₀¹ g(x) dx on n equal subintervals.
///
/// # Panics
///
/// Panics if n = 0.
pub fn composite_trapezoid<F>(g: &F, n: usize) -> f64
where
    F: Integrand + ?Sized,
{
    assert!(n >= 1, "composite rule needs at least one subinterval");
    let nf = n as f64;
    let mut acc = NeumaierSum::new();
    acc.add(0.5 * (g.eval(0.0) + g.eval(1.0)));
    for i in 1..n {
        acc.add(g.eval(i as f64 / nf));
    }
    acc.total() / nf
}

/// Composite Simpson value of ∫₀¹ g(x) dx: one Simpson panel on each of
/// n equal subintervals, 2n + 1 distinct nodes.
///
/// # Panics
///
/// Panics if n = 0.
pub fn composite_simpson<F>(g: &F, n: usize) -> f64
where
    F: Integrand + ?Sized,
{
    assert!(n >= 1, "composite rule needs at least one subinterval");
    let nf = n as f64;
    let mut acc = NeumaierSum::new();
    acc.add(g.eval(0.0) + g.eval(1.0));
    for i in 1..n {
        acc.add(2.0 * g.eval(i as f64 / nf));
    }
    for i in 0..n {
        acc.add(4.0 * g.eval((2 * i + 1) as f64 / (2.0 * nf)));
    }
    acc.total() / (6.0 * nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::erf;
    use crate::SQRT_PI;

    fn assert_rel(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol * expected.abs(),
            "actual {actual:e} vs expected {expected:e}"
        );
    }

    #[test]
    fn trapezoid_is_exact_on_linears() {
        for &n in &[1usize, 2, 7, 100] {
            let q = composite_trapezoid(&|x: f64| x, n);
            assert!((q - 0.5).abs() <= 1e-15, "n={n}: {q}");
        }
        let q = composite_trapezoid(&|x: f64| 3.0 - 2.0 * x, 11);
        assert!((q - 2.0).abs() <= 1e-14);
    }

    #[test]
    fn trapezoid_hand_value_for_x_squared() {
        // Nodes 0, 1/2, 1 are exact doubles, so the value is exactly
        // (1/2)·(0/2 + 1/4 + 1/2) = 3/8.
        assert_eq!(composite_trapezoid(&|x: f64| x * x, 2), 0.375);
    }

    #[test]
    fn simpson_is_exact_on_cubics() {
        let g = |x: f64| x * x * x - 0.7 * x * x + 0.3 * x - 0.9;
        let exact = 0.25 - 0.7 / 3.0 + 0.15 - 0.9;
        for &n in &[1usize, 3, 10] {
            assert_rel(composite_simpson(&g, n), exact, 1e-14);
        }
    }

    #[test]
    fn trapezoid_misses_the_peak_until_nodes_resolve_it() {
        // ∫₀¹ e^{−α²x²} dx = √π·erf(α)/(2α) with 100 nodes: accurate
        // while the step 0.01 resolves the peak width 1/α, useless
        // once it does not. The absolute error enters the plotted
        // blow-up regime (> 1e−3) by α = 1000.
        let mut last_re = 0.0;
        for &alpha in &[100.0f64, 1000.0, 10000.0] {
            let exact = SQRT_PI * erf(alpha) / (2.0 * alpha);
            let q = composite_trapezoid(&|x: f64| (-alpha * alpha * x * x).exp(), 100);
            let re = (q - exact).abs() / exact;
            assert!(re > last_re, "alpha={alpha}: {re} after {last_re}");
            last_re = re;
            if alpha == 1000.0 {
                assert!((q - exact).abs() > 1e-3, "alpha=1000 AE {:e}", q - exact);
            }
        }
        assert!(last_re > 10.0, "alpha=10000 RE {last_re}");
    }

    #[test]
    fn simpson_reproduces_the_uniform_benchmark_entries() {
        // The published uniform-column entries for the x² integrand at
        // (α, n) = (20, 20) and (40, 20), and for the e^{−x²} integrand
        // at α = 30 with 15 nodes (n = 7).
        let weighted_x2 = |alpha: f64| {
            move |x: f64| x * x * (-alpha * alpha * x * x).exp()
        };
        let exact_x2 = |alpha: f64| {
            (SQRT_PI * erf(alpha) / 2.0 - alpha * (-alpha * alpha).exp())
                / (2.0 * alpha.powi(3))
        };
        let q = composite_simpson(&weighted_x2(20.0), 20);
        let re = (q - exact_x2(20.0)).abs() / exact_x2(20.0);
        assert!((re - 6.46e-4).abs() <= 1e-4, "re {re:e}");
        let q = composite_simpson(&weighted_x2(40.0), 20);
        let re = (q - exact_x2(40.0)).abs() / exact_x2(40.0);
        assert!((re - 2.21e-1).abs() <= 1e-2, "re {re:e}");

        let alpha = 30.0f64;
        let g = move |x: f64| (-x * x).exp() * (-alpha * alpha * x * x).exp();
        let s = (alpha * alpha + 1.0).sqrt();
        let exact = SQRT_PI * erf(s) / (2.0 * s);
        let re = (composite_simpson(&g, 7) - exact).abs() / exact;
        assert!((re - 1.61e-1).abs() <= 1e-2, "re {re:e}");
    }

    #[test]
    fn rule_struct_matches_the_free_functions() {
        let g = |x: f64| (1.3 * x).cos();
        let t = UniformRule {
            kind: UniformKind::Trapezoid,
            n: 9,
        };
        let s = UniformRule {
            kind: UniformKind::Simpson,
            n: 9,
        };
        assert_eq!(t.integrate(&g), composite_trapezoid(&g, 9));
        assert_eq!(s.integrate(&g), composite_simpson(&g, 9));
        assert_eq!(t.node_count(), 10);
        assert_eq!(s.node_count(), 19);
    }
}
