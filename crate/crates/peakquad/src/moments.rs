//! Closed-form moments of the Gaussian weight: the half-line moments
//! M_j[α, b] = ∫₀ᵇ x^j e^(−α²x²) dx and the interval moments
//! w_{α,β,k} = ∫₋₁¹ x^k e^(−α²(x−β)²) dx built from them.
//!
//! The closed forms are exact identities, but evaluating them in plain
//! doubles loses up to six digits for moderate α·b: the even-index form
//! subtracts a Γ-weighted double sum from an erf term of nearly equal
//! size. All kernels here therefore run in double-double arithmetic and
//! round once at the end. The erf and exp inputs are computed in plain
//! f64 and shared verbatim between the closed forms and the recurrence
//! oracle, so comparing the two routes measures arithmetic error only.
//!
//! Two regimes need different algorithms entirely. The closed forms
//! express M_j[α, b] as (full-line moment) − (tail correction), so their
//! sensitivity to the rounded erf/exp inputs is the ratio
//! M_j[α, ∞]/M_j[α, b]. When α·b falls well below √(j/2) (the mode of
//! x^j·e^(−α²x²) in units of 1/α) that ratio explodes: at α·b = 1,
//! j = 20 it is ~10⁷, and no working precision can recover digits the
//! inputs never had. [`weight_moments`] therefore evaluates its
//! half-line tables through a kernel that switches to the Taylor
//! expansion of e^(−α²x²), which needs no transcendental inputs at all,
//! whenever (α·b)² < 16.
//!
//! The second bad regime is a peak outside the interval, β = −1 − d
//! with d > 0. The binomial route reaches those moments by cancelling
//! half-line moments against each other under β-power weights, and the
//! cancellation deepens with α·d: the whole integral lives in a tail
//! window of relative size e^(−(αd)²) while the cancelled ingredients
//! keep their full size. Measured against quadrature truth the route
//! loses its last digits by α·d ≈ 4 and is already down to eight or
//! nine digits over much of the band before that, so every β < −1
//! vector is built instead from integrals anchored at the near edge
//! x = −1, which see the tail window at its own scale and cancel
//! nothing. The scalar [`moment_base`] keeps the closed form
//! unconditionally: its contract is bit-shared inputs with
//! [`moment_recurrence_oracle`], and in the deep-truncation regime its
//! documented accuracy degrades with the condition number above.

use crate::dd::{Dd, SQRT_PI};
use crate::error::{Error, Result};
use crate::specfun::{erf, erfc, factorial_dd, gamma_half_dd};
use crate::DEGREE_CAP;

/// Treat β this close above −1 as exactly −1. The interior expansion
/// divides the interval at the peak, and for 1 + β below this
/// threshold the short piece carries no double-precision information
/// anyway. Below −1 no fold is needed: the exterior assembly is
/// continuous through vanishing peak distance.
const BETA_NEG_ONE_TOL: f64 = 1e-12;

/// The weight e^(−α²(x−β)²): a Gaussian bell of standard deviation
/// c₀ = 1/(√2·α) centered at β.
///
/// Large α means a sharp peak; the interesting regime for everything in
/// this crate is α from 10 up to 10⁷.
///
/// # Examples
///
/// ```
/// let w = peakquad::GaussianWeight::new(50.0, 0.0).unwrap();
/// assert_eq!(w.eval(0.0), 1.0);
/// assert!((w.c0() * w.alpha() * 2f64.sqrt() - 1.0).abs() < 1e-15);
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianWeight {
    alpha: f64,
    beta: f64,
    c0: f64,
    /// Exact peak-to-endpoint distance for weights built by
    /// [`GaussianWeight::outside`]; `beta` alone cannot carry it, since
    /// storing −1 − gap as one f64 rounds the gap to absolute ulp(1).
    edge_gap: Option<f64>,
}

impl GaussianWeight {
    /// Builds the weight with sharpness α > 0 and peak position β.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::WeightAlpha { alpha });
        }
        if !beta.is_finite() {
            return Err(Error::MomentDomain {
                name: "beta",
                value: beta,
            });
        }
        Ok(GaussianWeight {
            alpha,
            beta,
            c0: 1.0 / (std::f64::consts::SQRT_2 * alpha),
            edge_gap: None,
        })
    }

    /// Builds a weight whose peak sits `gap` left of the interval, at
    /// β = −1 − gap, keeping the gap itself at full precision.
    ///
    /// For peaks just outside the interval the moments depend on the
    /// gap through erfc(α·gap), and recovering the gap from a rounded β
    /// as −1 − β loses it to absolute ulp(1). Callers that know the gap
    /// exactly (the graded mesh does: its value is 2·x_{j−1}/h_j)
    /// should construct the weight through this entry so the moment
    /// routines can use it directly. A gap of 0 puts the peak exactly
    /// at the endpoint.
    ///
    /// # Errors
    ///
    /// Same α domain as [`GaussianWeight::new`]; a negative, infinite
    /// or NaN gap is reported as [`Error::MomentDomain`].
    pub fn outside(alpha: f64, gap: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::WeightAlpha { alpha });
        }
        if !(gap.is_finite() && gap >= 0.0) {
            return Err(Error::MomentDomain {
                name: "gap",
                value: gap,
            });
        }
        Ok(GaussianWeight {
            alpha,
            beta: -1.0 - gap,
            c0: 1.0 / (std::f64::consts::SQRT_2 * alpha),
            edge_gap: Some(gap),
        })
    }

    /// The exact peak-to-endpoint distance when the weight was built by
    /// [`GaussianWeight::outside`].
    pub fn edge_gap(&self) -> Option<f64> {
        self.edge_gap
    }

    /// Sharpness parameter α.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Peak position β.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Standard deviation c₀ = 1/(√2·α) of the bell.
    pub fn c0(&self) -> f64 {
        self.c0
    }

    /// Evaluates the weight at x.
    pub fn eval(&self, x: f64) -> f64 {
        let t = self.alpha * (x - self.beta);
        f64::exp(-t * t)
    }
}

/// The moments w_{α,β,k} for k = 0..=k_max, packaged with their weight.
#[derive(Debug, Clone)]
pub struct MomentVector {
    weight: GaussianWeight,
    values: Vec<f64>,
}

impl MomentVector {
    /// The weight these moments belong to.
    pub fn weight(&self) -> &GaussianWeight {
        &self.weight
    }

    /// Entry k is w_{α,β,k} = ∫₋₁¹ x^k e^(−α²(x−β)²) dx.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest moment index stored.
    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }
}

fn check_moment_args(j: usize, alpha: f64, b: f64) -> Result<()> {
    if j > DEGREE_CAP {
        return Err(Error::DegreeCap {
            requested: j,
            cap: DEGREE_CAP,
        });
    }
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::MomentDomain {
            name: "alpha",
            value: alpha,
        });
    }
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::MomentDomain { name: "b", value: b });
    }
    Ok(())
}

/// Shared scalar inputs for both evaluation routes: erf(αb), e^(−(αb)²),
/// and 1 − e^(−(αb)²), each rounded to f64 exactly once.
fn shared_inputs(alpha: f64, b: f64) -> (f64, f64, f64) {
    let t = b * alpha;
    let e = f64::exp(-t * t);
    (erf(t), e, 1.0 - e)
}

/// M_j[α, b] in double-double, assuming validated arguments.
fn moment_base_inner(j: usize, alpha: f64, b: f64) -> Dd {
    let (erf_t, e, one_minus_e) = shared_inputs(alpha, b);
    let alpha2 = Dd::from_f64(alpha).mul(Dd::from_f64(alpha));
    let inv = alpha2.recip();
    let bb = Dd::from_f64(b);
    if j % 2 == 1 {
        // Odd index 2q+1: pure exponential closed form.
        let q = (j - 1) / 2;
        let lead = inv.powi(q as u32 + 1).mul_f64(one_minus_e);
        let mut sum = Dd::ZERO;
        let mut l_fact = Dd::ONE;
        for l in 1..=q {
            l_fact = l_fact.mul_f64(l as f64);
            let term = bb
                .powi(2 * l as u32)
                .mul(inv.powi((q + 1 - l) as u32))
                .div(l_fact);
            sum = sum.add(term);
        }
        factorial_dd(q)
            .mul_f64(0.5)
            .mul(lead.sub(sum.mul_f64(e)))
    } else {
        // Even index 2q: erf leading term minus a Γ-weighted double sum.
        let q = j / 2;
        let alpha_pow = alpha2.powi(q as u32).mul_f64(alpha); // α^{2q+1}
        let lead = gamma_half_dd(q)
            .mul_f64(0.5)
            .mul_f64(erf_t)
            .mul(alpha_pow.recip());
        let fact_q = factorial_dd(q);
        let mut sum = Dd::ZERO;
        for l in 1..=q {
            for i in 0..l {
                let num = fact_q
                    .mul(gamma_half_dd(l - i - 1))
                    .mul(gamma_half_dd(q - l))
                    .mul(bb.powi(2 * i as u32 + 1));
                let den = factorial_dd(q - l)
                    .mul(factorial_dd(l - i - 1))
                    .mul(factorial_dd(i))
                    .mul_f64(l as f64);
                let term = num.div(den).mul_f64(e).mul(inv.powi((q - i) as u32));
                sum = sum.add(term);
            }
        }
        let two_pi = SQRT_PI.mul(SQRT_PI).mul_f64(2.0);
        lead.sub(sum.div(two_pi))
    }
}

/// M_j[α, b] by the Taylor expansion of the Gaussian factor:
/// b^(j+1)·Σ_l (−t)^l/(l!·(j+2l+1)) with t = (αb)². Free of erf/exp
/// inputs, so it is accurate to double-double wherever the alternating
/// sum is tame; the caller keeps t below 16, where the internal growth
/// e^(2t) costs at most ~14 of the 32 digits.
fn moment_series_dd(j: usize, alpha: f64, b: f64) -> Dd {
    let bb = Dd::from_f64(b);
    let ab = Dd::from_f64(alpha).mul(bb);
    let t = ab.mul(ab);
    let mut sum = Dd::ZERO;
    let mut pow = Dd::ONE; // (−t)^l / l!
    let mut peak = 0.0f64;
    for l in 0..=200usize {
        let term = pow.div(Dd::from_f64((j + 2 * l + 1) as f64));
        sum = sum.add(term);
        peak = peak.max(term.value().abs());
        if l as f64 > t.value() && term.value().abs() <= 1e-36 * peak {
            break;
        }
        pow = pow.mul(t).div(Dd::from_f64(-((l + 1) as f64)));
    }
    bb.powi(j as u32 + 1).mul(sum)
}

/// Half-line moment kernel for the interval-moment tables.
///
/// The binomial recombination in [`weight_moments`] cancels its terms
/// down by as much as ten orders when |β| > 1, so the table entries
/// must be accurate in double-double absolutely, not just relative to
/// themselves. The series kernel delivers that for (αb)² < 16 (its
/// alternating growth e^(2t) costs at most ~14 of the 32 digits, for
/// any j up to the degree cap). Beyond t = 16 the closed form takes
/// over; its f64 erf/exp inputs then carry a window factor e^(−t)
/// below 1e−7, which keeps the leaked absolute error harmless.
fn moment_kernel_dd(j: usize, alpha: f64, b: f64) -> Dd {
    if alpha * alpha * b * b < 16.0 {
        moment_series_dd(j, alpha, b)
    } else {
        moment_base_inner(j, alpha, b)
    }
}

/// Route split inside the exterior assembly. Sharper subintervals go
/// through the profile recurrence; wider ones through the σ-series,
/// whose internal growth e^(4α²) fits inside double-double headroom
/// only for small α.
const EXTERIOR_SHARP_ALPHA: f64 = 2.5;

/// Strategy split inside [`edge_profiles`]: above this the downward
/// recurrence converges in an affordable number of buffer steps, below
/// it the shift-series cancellation stays within double-double.
const PROFILE_DOWNWARD_Z: f64 = 1.2;

/// Γ(n/2) for n ≥ 1, routed to the cached factorial and half-integer
/// gamma tables.
fn gamma_of_half(n: usize) -> Dd {
    if n % 2 == 0 {
        factorial_dd(n / 2 - 1)
    } else {
        gamma_half_dd(n / 2)
    }
}

/// Profile integrals g_i(z) = ∫₀^∞ s^i e^(−(s+z)²) ds for i < count,
/// in double-double.
///
/// Two strategies. Near the edge (z below the split) the shift factor
/// is expanded: e^(−(s+z)²) = e^(−z²)·e^(−2zs)·e^(−s²) turns g_i into
/// an alternating sum of half-integer gamma values in which even and
/// odd orders each advance by an exact rational step. The only rounded
/// inputs are the scalar e^(−z²) and the gamma seeds, both acting
/// coherently, and the cancellation costs at most e^(2z·√(2i)), a
/// handful of the thirty-two digits carried. Farther out the series
/// loses digits faster than the three-term recurrence
/// g_{i+1} = (i/2)·g_{i−1} − z·g_i gains them, so the recurrence runs
/// downward from trial seeds (Miller's device): upward its
/// sign-alternating companion solution dominates, while downward the
/// wanted solution dominates and every step adds positives. The trial
/// values are normalized by the known g₀ = (√π/2)·erfc(z), with the
/// buffer sized from the per-step contraction
/// (√(z²+2i) − z)/(√(z²+2i) + z) to push seed contamination below
/// e^(−40). When erfc underflows (z ≥ 27.25) every profile is zero to
/// double precision and the zero vector comes back.
fn edge_profiles(z: f64, count: usize) -> Vec<Dd> {
    if count == 0 {
        return Vec::new();
    }
    let zd = Dd::from_f64(z);
    if z < PROFILE_DOWNWARD_Z {
        let half_e = Dd::from_f64(f64::exp(-z * z)).mul_f64(0.5);
        let four_z2 = zd.mul(zd).mul_f64(4.0);
        let mut g = Vec::with_capacity(count);
        for i in 0..count {
            // Terms (−2z)^m/m!·Γ((i+m+1)/2); `even` holds order m,
            // `odd` order m + 1.
            let mut even = gamma_of_half(i + 1);
            let mut odd = gamma_of_half(i + 2).mul(zd).mul_f64(-2.0);
            let mut acc = Dd::ZERO;
            let mut peak = 0.0f64;
            let mut m = 0usize;
            loop {
                acc = acc.add(even).add(odd);
                let span = even.value().abs().max(odd.value().abs());
                peak = peak.max(span);
                let turned = m as f64 > 2.0 * z * (2.0 * (i + m) as f64).sqrt();
                if m > 200 || (turned && span <= 1e-36 * peak) {
                    break;
                }
                even = even
                    .mul(four_z2)
                    .mul_f64((i + m + 1) as f64)
                    .div(Dd::from_f64((2 * (m + 1) * (m + 2)) as f64));
                odd = odd
                    .mul(four_z2)
                    .mul_f64((i + m + 2) as f64)
                    .div(Dd::from_f64((2 * (m + 2) * (m + 3)) as f64));
                m += 2;
            }
            g.push(acc.mul(half_e));
        }
        g
    } else {
        let erfc_z = erfc(z);
        if erfc_z == 0.0 {
            return vec![Dd::ZERO; count];
        }
        let g0 = SQRT_PI.mul_f64(0.5).mul_f64(erfc_z);
        // Contraction budget: Σ ln ρ ≈ −2z·(√(2·top) − √(2·count)) must
        // reach −40 by the time the descent hits the wanted indices.
        let need = 20.0 / z + (2.0 * (count + 1) as f64).sqrt();
        let top = ((0.5 * need * need).ceil() as usize + 10).max(count + 20);
        let mut g = vec![Dd::ZERO; top + 2];
        g[top] = Dd::ONE;
        for i in (1..=top).rev() {
            g[i - 1] = g[i + 1]
                .add(zd.mul(g[i]))
                .mul_f64(2.0)
                .div(Dd::from_f64(i as f64));
        }
        let scale = g0.div(g[0]);
        g.truncate(count);
        for v in &mut g {
            *v = v.mul(scale);
        }
        g
    }
}

/// Exterior moments for a sharp subinterval (α past the route split):
/// in the scaled variable s = α·(x + 1), each edge-anchored integral is
/// a near-edge profile minus the binomially shifted far-edge profiles,
///
///   I_j = ∫₀² v^j e^(−α²(v+d)²) dv
///       = α^(−j−1)·(g_j(αd) − Σ_i C(j,i)·(2α)^(j−i)·g_i(α(d+2))),
///
/// and w_k = Σ_j C(k,j)·(−1)^(k−j)·I_j. The far-edge subtraction never
/// cancels deeply: the scaled integrand's mode (√((αd)²+2j) − αd)/2
/// stays below √(j/2) ≤ 4.5, left of the scaled far edge 2α ≥ 5, for
/// every j up to the degree cap. The monomial recombination does
/// cancel, worst when the peak's pull places the mass near x = 0, so
/// the whole assembly runs in double-double; entries suppressed that
/// deeply still come out with absolute accuracy near 1e−20·w₀.
fn exterior_sharp(alpha: f64, d: f64, k_max: usize) -> Vec<f64> {
    let g_near = edge_profiles(alpha * d, k_max + 1);
    let g_far = edge_profiles(alpha * (d + 2.0), k_max + 1);
    let inv_a = Dd::from_f64(alpha).recip();
    let two_a = Dd::from_f64(2.0 * alpha);

    let mut edge = vec![Dd::ZERO; k_max + 1];
    let mut row: Vec<f64> = vec![1.0];
    let mut inv_pow = inv_a; // α^(−j−1)
    for (j, slot) in edge.iter_mut().enumerate() {
        if j > 0 {
            row = pascal_step(&row);
            inv_pow = inv_pow.mul(inv_a);
        }
        let mut tail = Dd::ZERO;
        // A zero g_far[0] means erfc underflowed at the far edge, and
        // with it the whole shifted sum; skipping it also keeps the
        // power prefactor from meeting an infinity at extreme α.
        if g_far[0].value() > 0.0 {
            let mut shift = two_a.powi(j as u32); // (2α)^(j−i)
            for (i, &g) in g_far.iter().take(j + 1).enumerate() {
                tail = tail.add(g.mul(shift).mul_f64(row[i]));
                shift = shift.mul(inv_a).mul_f64(0.5);
            }
        }
        *slot = g_near[j].sub(tail).mul(inv_pow);
    }

    let mut values = vec![0.0f64; k_max + 1];
    let mut row: Vec<f64> = vec![1.0];
    for (k, slot) in values.iter_mut().enumerate() {
        if k > 0 {
            row = pascal_step(&row);
        }
        let mut sum = Dd::ZERO;
        for (j, &e) in edge.iter().take(k + 1).enumerate() {
            let term = e.mul_f64(row[j]);
            sum = if (k - j) % 2 == 0 {
                sum.add(term)
            } else {
                sum.sub(term)
            };
        }
        *slot = sum.value();
    }
    values
}

/// Exterior moments for a wide subinterval (α below the route split):
/// factor the window scale out of the weight,
/// e^(−α²(v+d)²) = e^(−(αd)²)·e^(−σv)·e^(−α²v²) with σ = 2α²d, expand
/// the last factor, and reduce to F_p = ∫₀² v^p e^(−σv) dv:
///
///   w_k = e^(−(αd)²)·Σ_j C(k,j)·(−1)^(k−j)·Σ_i (−α²)^i/i!·F_(j+2i).
///
/// Everything after the two scalar exponentials runs in double-double:
/// the α²-series grows by at most e^(4α²) before it turns over, and for
/// nearly flat windows (σ small) the monomial recombination amplifies
/// by up to 3^k, costs the headroom comfortably absorbs. The F table
/// itself is built in whichever direction is stable: downward, seeded
/// by the confluent series F_p = (2^(p+1)·e^(−2σ)/(p+1))·Σ_q Π_r
/// 2σ/(p+1+r), every operation adds positives; the upward recurrence
/// takes over when 2σ clears the table top, where its subtraction is
/// benign and the downward seed would converge slowly.
fn exterior_series(alpha: f64, d: f64, k_max: usize) -> Vec<f64> {
    let z = alpha * d;
    let sigma = 2.0 * alpha * z;
    let window = f64::exp(-z * z);
    // The window scale bounds every moment; once it underflows the
    // vector is zero to double precision (this also keeps an overflowed
    // σ, possible only for absurd β, out of the arithmetic below).
    if window == 0.0 || !sigma.is_finite() {
        return vec![0.0; k_max + 1];
    }
    let e_end = f64::exp(-2.0 * sigma);

    // Order cap for the α²-series: terms turn over by i ≈ 4α² + 4 < 30
    // at the route split, so 80 is never the binding truncation.
    const SERIES_CAP: usize = 80;
    let p_max = k_max + 2 * SERIES_CAP;
    let sigma_dd = Dd::from_f64(sigma);
    let e_dd = Dd::from_f64(e_end);
    let mut f = vec![Dd::ZERO; p_max + 1];
    if 2.0 * sigma >= (p_max + 20) as f64 {
        f[0] = Dd::from_f64(1.0 - e_end).div(sigma_dd);
        let mut two_p = Dd::ONE; // 2^p
        for p in 1..=p_max {
            two_p = two_p.mul_f64(2.0);
            f[p] = f[p - 1]
                .mul_f64(p as f64)
                .sub(two_p.mul(e_dd))
                .div(sigma_dd);
        }
    } else {
        let pm = p_max as f64;
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for q in 1..=4000usize {
            term = term
                .mul(sigma_dd)
                .mul_f64(2.0)
                .div(Dd::from_f64(pm + 1.0 + q as f64));
            sum = sum.add(term);
            if term.value() <= 1e-34 * sum.value() {
                break;
            }
        }
        let two_top = Dd::from_f64(2.0).powi(p_max as u32 + 1);
        f[p_max] = two_top.mul(e_dd).mul(sum).div(Dd::from_f64(pm + 1.0));
        let mut two_p = two_top.mul_f64(0.5); // 2^p
        for p in (1..=p_max).rev() {
            f[p - 1] = sigma_dd
                .mul(f[p])
                .add(two_p.mul(e_dd))
                .div(Dd::from_f64(p as f64));
            two_p = two_p.mul_f64(0.5);
        }
    }

    let a2 = alpha * alpha;
    let a2_dd = Dd::from_f64(alpha).mul(Dd::from_f64(alpha));
    let mut j_vals = vec![Dd::ZERO; k_max + 1];
    for (j, slot) in j_vals.iter_mut().enumerate() {
        let mut acc = Dd::ZERO;
        let mut coef = Dd::ONE; // (−α²)^i / i!
        let mut peak = 0.0f64;
        for i in 0..=SERIES_CAP {
            let term = coef.mul(f[j + 2 * i]);
            acc = acc.add(term);
            peak = peak.max(term.value().abs());
            if i as f64 > 4.0 * a2 + 4.0 && term.value().abs() <= 1e-36 * peak {
                break;
            }
            coef = coef.mul(a2_dd).div(Dd::from_f64(-((i + 1) as f64)));
        }
        *slot = acc;
    }

    let mut values = vec![0.0f64; k_max + 1];
    let mut row: Vec<f64> = vec![1.0];
    for (k, slot) in values.iter_mut().enumerate() {
        if k > 0 {
            row = pascal_step(&row);
        }
        let mut sum = Dd::ZERO;
        for (j, &jv) in j_vals.iter().take(k + 1).enumerate() {
            let term = jv.mul_f64(row[j]);
            sum = if (k - j) % 2 == 0 {
                sum.add(term)
            } else {
                sum.sub(term)
            };
        }
        *slot = sum.mul_f64(window).value();
    }
    values
}

/// Extends the Pascal row C(k−1, ·) to C(k, ·); exact in f64 for every
/// k up to the degree cap.
fn pascal_step(row: &[f64]) -> Vec<f64> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(1.0);
    for j in 1..row.len() {
        next.push(row[j - 1] + row[j]);
    }
    next.push(1.0);
    next
}

/// Moment vector for a peak outside the interval, β = −1 − d with
/// d > 0. Both routes expand around the near edge, so neither pays the
/// cancellation the binomial route would: that route reaches the tail
/// window, of relative size e^(−(αd)²), by differencing full-size
/// half-line moments, and its ingredient errors blow up against the
/// result roughly like e^(2(αd)²) on top of the β-power amplification.
fn exterior_moments(alpha: f64, d: f64, k_max: usize) -> Vec<f64> {
    if alpha >= EXTERIOR_SHARP_ALPHA {
        exterior_sharp(alpha, d, k_max)
    } else {
        exterior_series(alpha, d, k_max)
    }
}

/// Computes the half-line moment M_j[α, b] = ∫₀ᵇ x^j e^(−α²x²) dx from
/// its closed form: a pure exponential expression for odd j, an erf term
/// minus a Γ-weighted double sum for even j.
///
/// Accuracy note: the closed form reconstructs M_j from the full-line
/// moment, so its relative error grows with M_j[α, ∞]/M_j[α, b]. That
/// ratio is O(1) whenever αb ≳ √(j/2) and explodes below it; quadrature
/// weight vectors avoid the bad regime internally (see
/// [`weight_moments`]), but direct callers probing deep truncation
/// (small αb, large j) should expect the degradation.
///
/// # Errors
///
/// Returns a domain error when j exceeds [`DEGREE_CAP`](crate::DEGREE_CAP)
/// or when α or b is not positive and finite.
///
/// # Examples
///
/// ```
/// // M_0[α, b] = √π·erf(αb)/(2α)
/// let m0 = peakquad::moment_base(0, 2.0, 1.0).unwrap();
/// let exact = std::f64::consts::PI.sqrt() * peakquad::erf(2.0) / 4.0;
/// assert!((m0 - exact).abs() <= 1e-15 * exact);
/// ```
pub fn moment_base(j: usize, alpha: f64, b: f64) -> Result<f64> {
    check_moment_args(j, alpha, b)?;
    Ok(moment_base_inner(j, alpha, b).value())
}

/// Computes M_j[α, b] by the integration-by-parts recurrence
/// M_j = ((j−1)·M_{j−2} − b^(j−1)·e^(−α²b²)) / (2α²), seeded with the
/// j = 0 and j = 1 base cases.
///
/// This is an independent evaluation route used to validate
/// [`moment_base`]: the two share their erf/exp inputs bit for bit, so
/// any disagreement is arithmetic error in one of the routes, not input
/// rounding.
///
/// # Errors
///
/// Same domain as [`moment_base`].
pub fn moment_recurrence_oracle(j: usize, alpha: f64, b: f64) -> Result<f64> {
    check_moment_args(j, alpha, b)?;
    let (erf_t, e, one_minus_e) = shared_inputs(alpha, b);
    let alpha2 = Dd::from_f64(alpha).mul(Dd::from_f64(alpha));
    let half_inv = alpha2.recip().mul_f64(0.5); // 1/(2α²)
    let m0 = SQRT_PI.mul_f64(0.5).mul_f64(erf_t).div(Dd::from_f64(alpha));
    if j == 0 {
        return Ok(m0.value());
    }
    let m1 = half_inv.mul_f64(one_minus_e);
    if j == 1 {
        return Ok(m1.value());
    }
    let bb = Dd::from_f64(b);
    let mut bpow = bb; // b^{k-1} for k = 2
    let (mut prev2, mut prev1) = (m0, m1);
    for k in 2..=j {
        let mk = prev2
            .mul_f64((k - 1) as f64)
            .sub(bpow.mul_f64(e))
            .mul(half_inv);
        prev2 = prev1;
        prev1 = mk;
        bpow = bpow.mul(bb);
    }
    Ok(prev1.value())
}

/// Computes the moment vector w_{α,β,k} for k = 0..=k_max by binomial
/// expansion into half-line moments, for peaks at or left of the
/// interval: β ≤ 0.
///
/// The expansion splits ∫₋₁¹ at the peak when β ∈ (−1, 0] and uses the
/// single half-line piece of length 2 when β = −1. Each entry is
/// accumulated in double-double and rounded once, and the half-line
/// tables switch to a series kernel in the regime where the closed
/// forms are input-limited, so the vector holds near machine accuracy
/// for every α, wide peaks included. Peaks left of the interval
/// (β < −1) do not use the expansion at all: differencing half-line
/// moments cancels catastrophically there, and those vectors are
/// assembled from integrals anchored at the near edge instead (see the
/// module notes).
///
/// # Errors
///
/// β > 0 is a domain error (build the vector for −β and apply
/// [`reflect_moments`]); k_max beyond [`DEGREE_CAP`](crate::DEGREE_CAP)
/// is a domain error.
///
/// # Examples
///
/// ```
/// let w = peakquad::GaussianWeight::new(5.0, -1.0).unwrap();
/// let moments = peakquad::weight_moments(&w, 0).unwrap();
/// // w_{α,−1,0} = M₀[α, 2] = √π·erf(2α)/(2α)
/// let exact = std::f64::consts::PI.sqrt() * peakquad::erf(10.0) / 10.0;
/// assert!((moments.values()[0] - exact).abs() <= 1e-15 * exact);
/// ```
pub fn weight_moments(weight: &GaussianWeight, k_max: usize) -> Result<MomentVector> {
    let (alpha, beta) = (weight.alpha(), weight.beta());
    if beta > 0.0 {
        return Err(Error::BetaNotLeft { beta });
    }
    if k_max > DEGREE_CAP {
        return Err(Error::DegreeCap {
            requested: k_max,
            cap: DEGREE_CAP,
        });
    }

    // An exactly known gap beats the −1 − β reconstruction below, whose
    // absolute ulp(1) rounding costs near-edge peaks ~ulp(1)/gap in
    // relative terms.
    if let Some(gap) = weight.edge_gap {
        if gap > 0.0 {
            return Ok(MomentVector {
                weight: *weight,
                values: exterior_moments(alpha, gap, k_max),
            });
        }
        // gap = 0 lands on β = −1 exactly; fall through to the peak-at-
        // endpoint split.
    }

    if beta < -1.0 {
        return Ok(MomentVector {
            weight: *weight,
            values: exterior_moments(alpha, -1.0 - beta, k_max),
        });
    }

    // Half-line moment tables for the one or two pieces of the split,
    // through the regime-aware kernel so high-index entries stay
    // truth-accurate even when a piece is short relative to 1/α.
    let at_peak = 1.0 + beta < BETA_NEG_ONE_TOL;
    let (m_right, m_left): (Vec<Dd>, Option<Vec<Dd>>) = if at_peak {
        let table = (0..=k_max)
            .map(|j| moment_kernel_dd(j, alpha, 2.0))
            .collect();
        (table, None)
    } else {
        let right = (0..=k_max)
            .map(|j| moment_kernel_dd(j, alpha, 1.0 - beta))
            .collect();
        let left = (0..=k_max)
            .map(|j| moment_kernel_dd(j, alpha, 1.0 + beta))
            .collect();
        (right, Some(left))
    };

    let beta_dd = Dd::from_f64(beta);
    let mut values = Vec::with_capacity(k_max + 1);
    let mut binom_row: Vec<f64> = vec![1.0]; // Pascal row for the current k
    for k in 0..=k_max {
        if k > 0 {
            binom_row = pascal_step(&binom_row);
        }
        let mut sum = Dd::ZERO;
        for j in 0..=k {
            let piece = if at_peak {
                // β = −1: single piece, sign (−1)^{k−j}
                if (k - j) % 2 == 0 {
                    m_right[j]
                } else {
                    m_right[j].neg()
                }
            } else {
                // β ∈ (−1, 0]: both pieces, the left one reversed
                let left = m_left.as_ref().expect("split tables exist unless beta = -1");
                let m_j = if j % 2 == 0 {
                    m_right[j].add(left[j])
                } else {
                    m_right[j].sub(left[j])
                };
                m_j.mul(beta_dd.powi((k - j) as u32))
            };
            sum = sum.add(piece.mul_f64(binom_row[j]));
        }
        values.push(sum.value());
    }
    Ok(MomentVector {
        weight: *weight,
        values,
    })
}

/// Mirrors a moment vector built for (α, −β) into the vector for (α, β):
/// the substitution x ↦ −x flips the sign of every odd-index entry.
///
/// This is how callers obtain moments for peaks right of the interval
/// (β > 0), which [`weight_moments`] rejects.
pub fn reflect_moments(vector: &MomentVector) -> MomentVector {
    let w = vector.weight();
    // A left-edge gap does not describe the mirrored weight, so it is
    // dropped rather than carried over with the wrong meaning.
    let reflected = GaussianWeight {
        alpha: w.alpha(),
        beta: -w.beta(),
        c0: w.c0(),
        edge_gap: None,
    };
    let values = vector
        .values()
        .iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { *v } else { -*v })
        .collect();
    MomentVector {
        weight: reflected,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Total mass bound: ∫ℝ e^(−α²(x−β)²) dx = √π/α dominates every
    /// interval moment since |x^k| ≤ 1 on [−1, 1].
    fn mass_bound(alpha: f64) -> f64 {
        crate::SQRT_PI / alpha
    }

    fn assert_rel(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol * expected.abs(),
            "actual {actual:e} vs expected {expected:e}"
        );
    }

    #[test]
    fn series_kernel_agrees_with_the_closed_form_where_both_hold() {
        // At α = 1, b = 1.8 the series applies (t = 3.24 is under the
        // switch point) while αb sits past the moment mode for small j,
        // so the closed form is well conditioned too; both must match
        // the frozen quadrature truth.
        let truths = [
            (0usize, 0.8765586342591597518),
            (3, 0.41697254239014740367),
            (6, 0.85585028333321335843),
            (9, 2.7185543406110905554),
            (12, 10.518147856907033923),
        ];
        for &(j, truth) in &truths {
            assert_rel(moment_kernel_dd(j, 1.0, 1.8).value(), truth, 5e-15);
            assert_rel(moment_base_inner(j, 1.0, 1.8).value(), truth, 5e-15);
            assert_rel(moment_series_dd(j, 1.0, 1.8).value(), truth, 5e-15);
        }
    }

    #[test]
    fn weight_moments_hold_up_in_the_deep_truncation_regime() {
        // High-index entries at wide α: the closed forms alone are
        // input-limited here (the α = 0.5, β = −1 vector is every graded
        // mesh's first subinterval), and the β = −2 rows land on the
        // exterior assembly at a mild window where the old binomial
        // route already cancelled away three digits. Frozen 40-digit
        // values.
        let cases: [(f64, f64, usize, f64); 7] = [
            (0.5, -1.0, 8, 0.15574123195085733716),
            (0.5, -1.0, 16, 0.081609889632743525605),
            (0.5, -1.0, 20, 0.065902971562040084328),
            (0.4, -0.4, 13, -0.014481836119938982571),
            (0.4, -0.4, 20, 0.080820260581223589162),
            (1.0, -2.0, 17, -0.018392132152476018102),
            (1.0, -2.0, 24, 0.013634022963230224714),
        ];
        for &(alpha, beta, k, truth) in &cases {
            let w = GaussianWeight::new(alpha, beta).unwrap();
            let got = weight_moments(&w, k).unwrap().values()[k];
            assert!(
                (got - truth).abs() <= 1e-14 * truth.abs(),
                "w({alpha},{beta},{k}): got {got:e} want {truth:e}"
            );
        }
    }

    #[test]
    fn far_exterior_vectors_match_quadrature_truths() {
        // Frozen 21-digit adaptive quadrature values across both exterior
        // routes: a sharp subinterval (profile route), the mid-α far
        // subinterval of the α = 10, n = 5 graded mesh (series route),
        // and a wide flat window where the monomial recombination is at
        // its worst (series route, internal growth ~3^k against entries
        // of window size e^(−(αd)²)).
        let cases: [(f64, f64, usize, f64); 10] = [
            (4.0, -2.0, 0, 3.41579726696935120228e-9),
            (4.0, -2.0, 5, -2.96468087448971801791e-9),
            (4.0, -2.0, 12, 2.50243673754481914349e-9),
            (4.0, -2.0, 20, 2.12417174790446958216e-9),
            (2.18829337404825441, -3.56977118269128724, 0, 7.39013952821641889e-16),
            (2.18829337404825441, -3.56977118269128724, 10, 5.24997039152812097e-16),
            (2.18829337404825441, -3.56977118269128724, 20, 4.0788963304514806e-16),
            (0.3, -15.0, 0, 8.40185084040555767964e-9),
            (0.3, -15.0, 7, -2.10022434677054689478e-9),
            (0.3, -15.0, 16, 1.13189821874181560603e-9),
        ];
        for &(alpha, beta, k, truth) in &cases {
            let w = GaussianWeight::new(alpha, beta).unwrap();
            let got = weight_moments(&w, k).unwrap().values()[k];
            assert!(
                (got - truth).abs() <= 1e-12 * truth.abs(),
                "w({alpha},{beta},{k}): got {got:e} want {truth:e}"
            );
        }
    }

    #[test]
    fn outside_weights_keep_small_gaps_at_full_precision() {
        // gap = 2^-12 is exact in f64. Routed through beta = -1 - gap
        // the gap's relative error is ulp(1)/gap ~ 9e-13 and the
        // moments inherit it scaled by the erfc sensitivity; routed
        // through the gap itself they hold ~1e-15.
        let gap = 0.000244140625;
        let w = GaussianWeight::outside(40.0, gap).unwrap();
        let got = weight_moments(&w, 1).unwrap();
        let truth = [2.1911540272118365907e-2, -2.1604419570156460953e-2];
        for (k, want) in truth.into_iter().enumerate() {
            assert_rel(got.values()[k], want, 1e-14);
        }

        // A zero gap is the peak-at-endpoint case, bit for bit.
        let pinned = GaussianWeight::outside(7.0, 0.0).unwrap();
        let folded = GaussianWeight::new(7.0, -1.0).unwrap();
        assert_eq!(
            weight_moments(&pinned, 12).unwrap().values(),
            weight_moments(&folded, 12).unwrap().values()
        );

        assert!(GaussianWeight::outside(5.0, -0.25).is_err());
        assert!(GaussianWeight::outside(5.0, f64::NAN).is_err());
        assert_eq!(w.edge_gap(), Some(gap));
        assert_eq!(w.beta(), -1.0 - gap);
    }

    #[test]
    fn exterior_assembly_is_continuous_across_its_seams() {
        // Straddle every switch line against frozen quadrature truths:
        // the interior/exterior boundary at β = −1 (α = 2, β = −1∓0.005),
        // the series/profile route split at α = 2.5 (β = −3 rows), the
        // profile strategy split at αd = 1.2 (α = 4 rows), and the α = 2,
        // β ≈ −3 pair that brackets a window deep enough to have broken
        // the binomial route.
        let cases: [(f64, f64, usize, f64); 24] = [
            (2.0, -0.995, 0, 0.448113288647342310071),
            (2.0, -0.995, 9, -0.0949337120535267190449),
            (2.0, -0.995, 18, 0.0517688723849421130903),
            (2.0, -1.005, 0, 0.438113623097190805416),
            (2.0, -1.005, 9, -0.0943007207310769046364),
            (2.0, -1.005, 18, 0.0515685688103520069483),
            (4.0, -1.2975, 0, 0.0204700061651560052029),
            (4.0, -1.2975, 9, -0.0118864505660974437141),
            (4.0, -1.2975, 18, 0.00831402082013135015145),
            (4.0, -1.3025, 0, 0.0192852931367445742144),
            (4.0, -1.3025, 9, -0.011247900341828626914),
            (4.0, -1.3025, 18, 0.00788333050929277178445),
            (2.0, -2.995, 0, 7.41736991104158660577e-9),
            (2.0, -2.995, 9, -4.75507775045354532473e-9),
            (2.0, -2.995, 18, 3.51049352750999428406e-9),
            (2.0, -3.005, 0, 6.2908549871203509578e-9),
            (2.0, -3.005, 9, -4.03972344126274292181e-9),
            (2.0, -3.005, 18, 2.98471597311271153098e-9),
            (2.49, -3.0, 0, 6.70673943641706985323e-13),
            (2.49, -3.0, 11, -4.65205723134072413733e-13),
            (2.49, -3.0, 20, 3.72488812769017263976e-13),
            (2.51, -3.0, 0, 4.42559541982683443535e-13),
            (2.51, -3.0, 11, -3.08465952185864509177e-13),
            (2.51, -3.0, 20, 2.47522573529271092691e-13),
        ];
        for &(alpha, beta, k, truth) in &cases {
            let w = GaussianWeight::new(alpha, beta).unwrap();
            let got = weight_moments(&w, k).unwrap().values()[k];
            assert!(
                (got - truth).abs() <= 1e-12 * truth.abs(),
                "w({alpha},{beta},{k}): got {got:e} want {truth:e}"
            );
        }
    }

    #[test]
    fn exterior_vectors_vanish_once_the_window_underflows() {
        // At α·d ≥ 27.25 even erfc underflows: the true moments are
        // below 1e−300 relative to anything and the assembly must come
        // back exactly zero rather than NaN, on both routes.
        for &(alpha, beta) in &[(30.0, -2.0), (1.0, -30.0), (2000.0, -1.1)] {
            let w = GaussianWeight::new(alpha, beta).unwrap();
            let v = weight_moments(&w, 12).unwrap();
            for (k, val) in v.values().iter().enumerate() {
                assert_eq!(*val, 0.0, "alpha={alpha} beta={beta} k={k}");
            }
        }
    }

    #[test]
    fn weight_constructor_validates() {
        assert!(GaussianWeight::new(50.0, 0.5).is_ok());
        assert!(matches!(
            GaussianWeight::new(0.0, 0.0),
            Err(Error::WeightAlpha { .. })
        ));
        assert!(matches!(
            GaussianWeight::new(-3.0, 0.0),
            Err(Error::WeightAlpha { .. })
        ));
        assert!(matches!(
            GaussianWeight::new(f64::NAN, 0.0),
            Err(Error::WeightAlpha { .. })
        ));
        assert!(matches!(
            GaussianWeight::new(2.0, f64::INFINITY),
            Err(Error::MomentDomain { .. })
        ));
    }

    #[test]
    fn weight_c0_identity() {
        for alpha in [0.5, 1.0, 37.0, 1e6] {
            let w = GaussianWeight::new(alpha, 0.0).unwrap();
            assert!((w.c0() * alpha * 2f64.sqrt() - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn moment_base_low_indices_match_hand_forms() {
        for &(alpha, b) in &[(1.0, 1.0), (2.0, 0.5), (10.0, 2.0), (50.0, 3.0)] {
            let t: f64 = b * alpha;
            let m0 = crate::SQRT_PI * erf(t) / (2.0 * alpha);
            let m1 = (1.0 - f64::exp(-t * t)) / (2.0 * alpha * alpha);
            assert_rel(moment_base(0, alpha, b).unwrap(), m0, 1e-15);
            assert_rel(moment_base(1, alpha, b).unwrap(), m1, 1e-15);
        }
    }

    #[test]
    fn moment_base_matches_frozen_oracle_values() {
        // 50-digit quadrature values rounded to doubles before the build.
        assert_rel(moment_base(5, 1.0, 1.0).unwrap(), 0.08030139707139419, 2e-15);
        assert_rel(moment_base(2, 1.0, 1.0).unwrap(), 0.18947234582049235, 2e-15);
        assert_rel(moment_base(0, 10.0, 2.0).unwrap(), 0.0886226925452758, 2e-15);
    }

    #[test]
    fn recurrence_one_step_examples() {
        let m0 = crate::SQRT_PI * erf(1.0) / 2.0;
        let m1 = (1.0 - (-1.0f64).exp()) / 2.0;
        let e1 = (-1.0f64).exp();
        assert_rel(
            moment_recurrence_oracle(2, 1.0, 1.0).unwrap(),
            (m0 - e1) / 2.0,
            1e-14,
        );
        assert_rel(
            moment_recurrence_oracle(3, 1.0, 1.0).unwrap(),
            (2.0 * m1 - e1) / 2.0,
            1e-14,
        );
        assert_eq!(
            moment_recurrence_oracle(0, 7.0, 0.3).unwrap(),
            moment_base(0, 7.0, 0.3).unwrap()
        );
    }

    #[test]
    fn closed_form_agrees_with_recurrence_on_the_hard_grid() {
        // The corner that breaks plain f64: small α with b up to 3, where
        // the even closed form cancels around six digits.
        for &alpha in &[0.5, 1.0, 5.0, 50.0, 500.0] {
            for &b in &[0.5, 1.0, 2.0, 3.0] {
                let m0 = moment_base(0, alpha, b).unwrap();
                for j in 0..=20 {
                    let closed = moment_base(j, alpha, b).unwrap();
                    let rec = moment_recurrence_oracle(j, alpha, b).unwrap();
                    assert!(
                        (closed - rec).abs() <= 1e-9 * m0,
                        "j={j} alpha={alpha} b={b}: {closed:e} vs {rec:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn moments_positive_and_decaying_for_short_intervals() {
        for &alpha in &[2.0, 10.0, 100.0] {
            for &b in &[0.5, 1.0] {
                let mut prev = f64::INFINITY;
                for j in 0..=30 {
                    let m = moment_base(j, alpha, b).unwrap();
                    assert!(m > 0.0, "j={j} alpha={alpha} b={b}: {m:e}");
                    assert!(m < prev, "j={j} alpha={alpha} b={b}: not decaying");
                    prev = m;
                }
            }
        }
    }

    #[test]
    fn differentiating_in_alpha_squared_steps_the_index_by_two() {
        // d/da M_j[√a, b] at a = 1 equals −M_{j+2}[1, b].
        let h = 1e-5f64;
        for &b in &[0.5, 2.0] {
            for j in 0..=6 {
                let plus = moment_base(j, (1.0 + h).sqrt(), b).unwrap();
                let minus = moment_base(j, (1.0 - h).sqrt(), b).unwrap();
                let diff = (plus - minus) / (2.0 * h);
                let target = -moment_base(j + 2, 1.0, b).unwrap();
                assert_rel(diff, target, 1e-6);
            }
        }
    }

    #[test]
    fn moment_domain_errors() {
        assert!(matches!(
            moment_base(DEGREE_CAP + 1, 1.0, 1.0),
            Err(Error::DegreeCap { .. })
        ));
        assert!(matches!(
            moment_base(2, -1.0, 1.0),
            Err(Error::MomentDomain { name: "alpha", .. })
        ));
        assert!(matches!(
            moment_base(2, 1.0, 0.0),
            Err(Error::MomentDomain { name: "b", .. })
        ));
    }

    #[test]
    fn weight_moments_beta_zero_kills_odd_entries() {
        let w = GaussianWeight::new(7.0, 0.0).unwrap();
        let v = weight_moments(&w, 9).unwrap();
        for k in (1..=9).step_by(2) {
            assert_eq!(v.values()[k], 0.0, "k = {k}");
        }
        // Even entries are twice the b = 1 half-line moments.
        for k in (0..=8).step_by(2) {
            assert_rel(v.values()[k], 2.0 * moment_base(k, 7.0, 1.0).unwrap(), 1e-15);
        }
    }

    /// Spot-vector tolerance: the frozen values were computed with exact
    /// erf/exp inputs, while the library rounds those inputs to f64 and
    /// the alternating binomial sum amplifies that 1-ulp difference by an
    /// order of magnitude or so.
    const SNAPSHOT_TOL: f64 = 2e-14;

    #[test]
    fn weight_moments_match_adaptive_oracle_snapshots() {
        // Frozen 1e−30-accurate quadrature values for the three branch
        // shapes: β ∈ (−1, 0), β = −1, and a reflected β > 0 vector.
        let w = GaussianWeight::new(2.0, -1.5).unwrap();
        let v = weight_moments(&w, 6).unwrap();
        let expected = [
            0.06970139631948423,
            -0.05856716433453204,
            0.05057849089356731,
            -0.044524597279289674,
            0.039768899855855966,
            -0.03593071827873448,
            0.032766709679845414,
        ];
        for (k, e) in expected.iter().enumerate() {
            assert_rel(v.values()[k], *e, SNAPSHOT_TOL);
        }

        let w = GaussianWeight::new(5.0, -1.0).unwrap();
        let v = weight_moments(&w, 4).unwrap();
        let expected = [
            0.1772453850905516,
            -0.1572453850905516,
            0.14079029279236263,
            -0.1270801081959847,
            0.11552752576352646,
        ];
        for (k, e) in expected.iter().enumerate() {
            assert_rel(v.values()[k], *e, SNAPSHOT_TOL);
        }

        let w = GaussianWeight::new(3.0, -0.4).unwrap();
        let v = reflect_moments(&weight_moments(&w, 6).unwrap());
        assert_eq!(v.weight().beta(), 0.4);
        let expected = [
            0.5875951857271007,
            0.23286230355365087,
            0.12361332524360122,
            0.07314314864399007,
            0.04768370716883151,
            0.033151745162341005,
            0.02433039911580265,
        ];
        for (k, e) in expected.iter().enumerate() {
            assert_rel(v.values()[k], *e, SNAPSHOT_TOL);
        }
    }

    #[test]
    fn weight_moments_near_peak_threshold_uses_single_piece() {
        // β within 1e−12 of −1 must take the β = −1 branch, not divide
        // by a vanishing piece.
        let w = GaussianWeight::new(4.0, -1.0 + 1e-13).unwrap();
        let exact = weight_moments(&GaussianWeight::new(4.0, -1.0).unwrap(), 5).unwrap();
        let near = weight_moments(&w, 5).unwrap();
        for k in 0..=5 {
            assert_rel(near.values()[k], exact.values()[k], 1e-12);
        }
    }

    #[test]
    fn weight_moments_respect_mass_bound() {
        for &alpha in &[0.7, 3.0, 40.0] {
            for &beta in &[0.0, -0.3, -1.0, -2.6] {
                let w = GaussianWeight::new(alpha, beta).unwrap();
                let v = weight_moments(&w, 12).unwrap();
                for (k, val) in v.values().iter().enumerate() {
                    assert!(
                        val.abs() <= mass_bound(alpha) + 1e-15,
                        "alpha={alpha} beta={beta} k={k}: {val:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_moments_reject_right_peaks_and_huge_degrees() {
        let w = GaussianWeight::new(2.0, 0.5).unwrap();
        assert!(matches!(
            weight_moments(&w, 3),
            Err(Error::BetaNotLeft { .. })
        ));
        let w = GaussianWeight::new(2.0, -0.5).unwrap();
        assert!(matches!(
            weight_moments(&w, DEGREE_CAP + 1),
            Err(Error::DegreeCap { .. })
        ));
    }

    #[test]
    fn reflect_is_an_involution_that_fixes_even_entries() {
        let w = GaussianWeight::new(6.0, -0.8).unwrap();
        let v = weight_moments(&w, 7).unwrap();
        let r = reflect_moments(&v);
        assert_eq!(r.values()[0], v.values()[0]);
        assert_eq!(r.values()[1], -v.values()[1]);
        let rr = reflect_moments(&r);
        assert_eq!(rr.values(), v.values());
        assert_eq!(rr.weight().beta(), v.weight().beta());
    }
}
