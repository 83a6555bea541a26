//! Independent adaptive integrator used to cross-check the moment rules.
//!
//! Everything else in the crate integrates the weight exactly and
//! samples only the smooth factor; this module does the opposite and
//! samples the full product f·G pointwise with an embedded
//! Gauss–Kronrod 7/15 pair, so an agreement between the two is evidence
//! neither shares a bug with the other. Two provisions keep the sampler
//! honest against sharp bells: the initial partition places cuts at the
//! peak and at one and ten standard-width multiples around it (a bell of
//! width 1/α would otherwise slip between the nodes of a single panel
//! and report a confident zero), and refinement is worst-first, always
//! bisecting the leaf with the largest error estimate.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::kahan::NeumaierSum;
use crate::moments::GaussianWeight;

/// Tightest tolerance the oracle accepts; below ~100 eps the 7/15
/// difference estimate is indistinguishable from rounding noise.
const TOL_FLOOR: f64 = 1e-14;

/// Leaf-count budget. The benchmark integrands converge in well under a
/// hundred leaves; hitting this means the integrand resists refinement.
const LEAF_BUDGET: usize = 4096;

/// Kronrod abscissas on [0, 1] (positive half, descending; the last
/// entry is the shared center). Odd indices are the embedded 7-point
/// Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// 15-point Kronrod weights matching [`XGK`].
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// 7-point Gauss weights for the odd entries of [`XGK`] plus the center.
const WG: [f64; 4] = [
    0.129_484_966_168_869_69,
    0.279_705_391_489_276_67,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

struct Leaf {
    err: f64,
    a: f64,
    b: f64,
    val: f64,
}

impl PartialEq for Leaf {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Leaf {}

impl PartialOrd for Leaf {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Leaf {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Max-heap by error estimate; leftmost leaf wins ties so runs
        // are deterministic.
        self.err
            .total_cmp(&other.err)
            .then(other.a.total_cmp(&self.a))
    }
}

/// One Kronrod panel on [a, b]: returns the 15-point value and the
/// 7/15 difference as its error estimate.
fn gk15<F>(f: &F, weight: &GaussianWeight, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Integrand + ?Sized,
{
    let h = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let phi = |x: f64| -> Result<f64> {
        let y = f.eval(x) * weight.eval(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFiniteIntegrand { x, interval: None })
        }
    };

    let center = phi(mid)?;
    let mut k = WGK[7] * center;
    let mut g = WG[3] * center;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate().take(7) {
        let dx = h * x;
        let pair = phi(mid - dx)? + phi(mid + dx)?;
        k += wk * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    Ok((k * h, (k - g).abs() * h))
}

/// High-accuracy value of ∫₋₁¹ f(x)·e^(−α²(x−β)²) dx by adaptive
/// bisection, refined until the summed panel estimates drop below
/// `tol` relative to the accumulated absolute mass.
///
/// The result is deterministic: equal inputs refine in the same order
/// and sum in interval order. Tolerances below 1e−14 are rejected, and
/// an integrand that resists refinement (oscillation faster than the
/// budget can resolve, say) fails with the budget error rather than
/// returning a value that missed its target.
///
/// # Examples
///
/// ```
/// let w = peakquad::GaussianWeight::new(10.0, 0.0).unwrap();
/// let v = peakquad::adaptive_oracle(&|_: f64| 1.0, &w, 1e-13).unwrap();
/// let exact = 0.17724538509055159; // √π·erf(10)/10
/// assert!((v - exact).abs() <= 1e-13 * exact);
/// ```
pub fn adaptive_oracle<F>(f: &F, weight: &GaussianWeight, tol: f64) -> Result<f64>
where
    F: Integrand + ?Sized,
{
    if !(tol >= TOL_FLOOR) {
        return Err(Error::OracleTolerance { tol });
    }

    let beta = weight.beta();
    let c = weight.alpha().recip();
    let mut pts = vec![-1.0f64, 1.0];
    for p in [
        beta - 10.0 * c,
        beta - c,
        beta,
        beta + c,
        beta + 10.0 * c,
    ] {
        if p > -1.0 && p < 1.0 {
            pts.push(p);
        }
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup();

    let mut heap = BinaryHeap::new();
    let mut total_err = 0.0f64;
    let mut mass = 0.0f64;
    for pair in pts.windows(2) {
        let (val, err) = gk15(f, weight, pair[0], pair[1])?;
        total_err += err;
        mass += val.abs();
        heap.push(Leaf {
            err,
            a: pair[0],
            b: pair[1],
            val,
        });
    }

    while total_err > tol * mass {
        if heap.len() >= LEAF_BUDGET {
            return Err(Error::OracleBudget {
                intervals: heap.len(),
            });
        }
        let worst = heap.pop().expect("at least one leaf");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Width at the resolution of f64: no further split can
            // improve the estimate.
            return Err(Error::OracleBudget {
                intervals: heap.len() + 1,
            });
        }
        total_err -= worst.err;
        mass -= worst.val.abs();
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (val, err) = gk15(f, weight, a, b)?;
            total_err += err;
            mass += val.abs();
            heap.push(Leaf { err, a, b, val });
        }
    }

    let mut leaves = heap.into_vec();
    leaves.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut acc = NeumaierSum::new();
    for leaf in &leaves {
        acc.add(leaf.val);
    }
    Ok(acc.total())
}
