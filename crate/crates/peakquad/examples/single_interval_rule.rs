//! One interval, one rule: interpolate f at Chebyshev points, integrate
//! the interpolant against the Gaussian weight exactly through its
//! moments. This is the building block the composite schemes repeat on
//! every mesh cell, and on its own it covers the regimes they exclude:
//! wide bells and peaks outside the integration range.
//!
//! Run with `cargo run --example single_interval_rule`.

use peakquad::{basic_rule, basic_rule_error_bound, basic_rule_unit, ChebyshevRule, GaussianWeight};

fn main() {
    // A degree-8 rule spends exactly 9 evaluations of f, wherever the
    // peak is. cos has |f^(9)| <= 1, so the a-priori bound is concrete.
    let f = |x: f64| x.cos();
    let m = 8;
    println!("degree {m} rule on [-1, 1], f(x) = cos(x), 9 evaluations each:");
    println!("{:>8} {:>8} {:>24} {:>12}", "alpha", "beta", "value", "bound");
    for &(alpha, beta) in &[(0.5, 0.0), (3.0, -0.8), (3.0, -1.6), (3.0, 2.5)] {
        let w = GaussianWeight::new(alpha, beta).unwrap();
        let q = basic_rule(&f, m, &w).unwrap();
        let bound = basic_rule_error_bound(m, alpha, 1.0);
        println!("{alpha:>8} {beta:>8} {q:>24.16e} {bound:>12.2e}");
    }
    println!();

    // The reusable form amortizes the node and coefficient tables when
    // one degree serves many weights.
    let rule = ChebyshevRule::new(12).unwrap();
    println!("a degree-{} rule holds {} nodes, first three:", rule.degree(), rule.nodes().len());
    for x in rule.nodes().iter().take(3) {
        println!("  {x:+.16}");
    }
    println!();

    // Wide-peak fallback on [0, 1]: α = 0.8 is below the graded schemes'
    // domain, but a single mapped interval handles it directly.
    // ∫₀¹ e^{−α²x²}dx = √π·erf(α)/(2α).
    let alpha = 0.8;
    let q = basic_rule_unit(&|_: f64| 1.0, alpha, 0.0, 14).unwrap();
    let exact = std::f64::consts::PI.sqrt() * peakquad::erf(alpha) / (2.0 * alpha);
    println!("wide peak on [0, 1], alpha = {alpha}:");
    println!("  degree-14 value {q:.16e}");
    println!("  closed form     {exact:.16e}");
    println!("  rel error       {:.2e}", (q - exact).abs() / exact);
}
