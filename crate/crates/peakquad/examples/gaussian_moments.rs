//! The engine room: moments w_k = ∫₋₁¹ x^k·e^{−α²(x−β)²} dx of the
//! Gaussian weight over the reference interval. Every quadrature rule
//! in this crate is built by integrating these exactly; they stay
//! accurate whether the peak sits inside the interval, at its edge, or
//! several standard deviations outside.
//!
//! Run with `cargo run --example gaussian_moments`.

use peakquad::{moment_base, reflect_moments, weight_moments, GaussianWeight};

fn main() {
    let alpha = 10.0;

    // Peak inside the interval: the bell at β = -0.25 is fully resolved
    // and w_0 has the closed form √π·(erf(α(1+β)) + erf(α(1−β)))/(2α).
    let interior = GaussianWeight::new(alpha, -0.25).unwrap();
    let w = weight_moments(&interior, 8).unwrap();
    let closed = std::f64::consts::PI.sqrt()
        * (peakquad::erf(alpha * 0.75) + peakquad::erf(alpha * 1.25))
        / (2.0 * alpha);
    println!("peak at β = -0.25, α = {alpha}:");
    println!("  w_0 computed   {:.16e}", w.values()[0]);
    println!("  w_0 closed     {closed:.16e}");
    for (k, v) in w.values().iter().enumerate().take(5) {
        println!("  w_{k} = {v:>24.16e}");
    }
    println!();

    // Peak outside the interval: only the far tail of the bell crosses
    // [-1, 1], so every moment is tiny but still carries full relative
    // precision. The sanity anchor is the one-sided closed form
    // M_j[α, b] = ∫₀^b x^j e^{−α²x²} dx via w_0 = M(3) − M(1) at β = −2.
    let exterior = GaussianWeight::new(alpha, -2.0).unwrap();
    let t = weight_moments(&exterior, 8).unwrap();
    let anchor = moment_base(0, alpha, 3.0).unwrap() - moment_base(0, alpha, 1.0).unwrap();
    println!("peak at β = -2 (one standard deviation is {:.3}):", exterior.c0());
    println!("  w_0 computed   {:.16e}", t.values()[0]);
    println!("  w_0 anchor     {anchor:.16e}");
    println!("  w_8 / w_0      {:.6}  (tail mass leans toward x = -1)", t.values()[8] / t.values()[0]);
    println!();

    // Peaks right of the interval come from reflection: x ↦ -x flips
    // the sign of every odd moment and nothing else.
    let mirrored = reflect_moments(&t);
    println!("reflected to β = +2:");
    println!("  w_1 before {:>24.16e}", t.values()[1]);
    println!("  w_1 after  {:>24.16e}", mirrored.values()[1]);
    println!("  weight now peaks at β = {}", mirrored.weight().beta());
}
