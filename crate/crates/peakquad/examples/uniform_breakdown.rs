//! Why uniform rules lose: a trapezoid or Simpson mesh must place nodes
//! inside the peak to see it at all, so the cost scales with α and the
//! answer silently degrades long before it visibly diverges. The graded
//! mesh pins its nodes where the weight lives and the cost stays flat.
//!
//! Run with `cargo run --example uniform_breakdown`.

use peakquad::{composite_simpson, quadp, UniformKind, UniformRule};

fn main() {
    // f(x) = x² against e^{−α²x²}; all three rules integrate the full
    // product, the graded scheme integrates f against the weight.
    let f = |x: f64| x * x;
    let exact = |alpha: f64| {
        (std::f64::consts::PI.sqrt() * peakquad::erf(alpha) / 2.0
            - alpha * (-alpha * alpha).exp())
            / (2.0 * alpha.powi(3))
    };

    println!(
        "{:>8} {:>22} {:>22} {:>22}",
        "alpha", "trapezoid(101 nodes)", "simpson(101 nodes)", "graded(25 nodes)"
    );
    for &alpha in &[10.0, 100.0, 1000.0, 10000.0] {
        let weighted = move |x: f64| x * x * (-alpha * alpha * x * x).exp();
        let trap = UniformRule { kind: UniformKind::Trapezoid, n: 100 }.integrate(&weighted);
        let simp = composite_simpson(&weighted, 50);
        let graded = quadp(&f, alpha, 5, 4).unwrap().value;
        let truth = exact(alpha);
        let re = |v: f64| (v - truth).abs() / truth;
        println!(
            "{:>8} {:>22.3e} {:>22.3e} {:>22.3e}",
            alpha,
            re(trap),
            re(simp),
            re(graded)
        );
    }
    println!();
    println!("at alpha = 10000 the uniform meshes place one node inside the peak");
    println!("(its half-width is ~1e-4) and report garbage; the graded mesh still");
    println!("returns 13+ digits from the same 25 evaluations it used at alpha = 10.");
}
