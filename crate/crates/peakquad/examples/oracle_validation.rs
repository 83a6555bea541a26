//! The independent referee: a Gauss–Kronrod adaptive integrator that
//! shares no code with the moment pipeline. It bisects worst-first,
//! pre-splits around the peak so sharp bells cannot hide between
//! nodes, and reports when a tolerance is unreachable instead of
//! returning a wrong answer.
//!
//! Run with `cargo run --example oracle_validation`.

use peakquad::{adaptive_oracle, quade, Error, GaussianWeight};

fn main() {
    // ∫₋₁¹ e^{−(100(x−0.3))²} dx = √π/100 to 1e-147: an interior bell
    // 200x narrower than the interval.
    let w = GaussianWeight::new(100.0, 0.3).unwrap();
    let exact = std::f64::consts::PI.sqrt() / 100.0;
    println!("interior bell, alpha = 100, beta = 0.3:");
    println!("{:>10} {:>24} {:>12}", "tol", "value", "rel error");
    for &tol in &[1e-6, 1e-10, 1e-13] {
        let v = adaptive_oracle(&|_: f64| 1.0, &w, tol).unwrap();
        println!("{tol:>10.0e} {v:>24.16e} {:>12.2e}", (v - exact).abs() / exact);
    }
    println!();

    // Referee duty: validate a graded-scheme value end to end. Mapping
    // [0, 1] onto [-1, 1] halves the sharpness and moves the peak to -1.
    let alpha = 50.0;
    let f = |x: f64| (-x * x).exp();
    let scheme = quade(&f, alpha, 4).unwrap();
    let mapped = |t: f64| {
        let x = 0.5 * (t + 1.0);
        (-x * x).exp()
    };
    let w = GaussianWeight::new(alpha / 2.0, -1.0).unwrap();
    let referee = 0.5 * adaptive_oracle(&mapped, &w, 1e-13).unwrap();
    println!("growing-degree value vs oracle at alpha = {alpha}:");
    println!("  scheme  {:.16e}", scheme.value);
    println!("  oracle  {referee:.16e}");
    println!("  |diff|  {:.2e}  (scheme truncation is ~1e-10 relative here)", (scheme.value - referee).abs());
    println!();

    // Honest failure modes: a tolerance below the floor is rejected up
    // front, and an integrand the budget cannot resolve reports that.
    match adaptive_oracle(&|_: f64| 1.0, &w, 1e-16) {
        Err(Error::OracleTolerance { tol }) => println!("tol {tol:e} rejected: below the floor"),
        other => println!("unexpected: {other:?}"),
    }
    match adaptive_oracle(&|x: f64| (1e7 * x).sin(), &GaussianWeight::new(1.0, 0.0).unwrap(), 1e-13)
    {
        Err(Error::OracleBudget { intervals }) => {
            println!("oscillation at 1e7 rad: budget of {intervals} intervals exhausted")
        }
        other => println!("unexpected: {other:?}"),
    }
}
