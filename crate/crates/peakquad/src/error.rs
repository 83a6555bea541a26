//! Error type shared across the crate.

/// Errors reported by quadrature construction and evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The Gaussian weight needs a positive, finite peak sharpness.
    #[error("weight parameter alpha = {alpha} must be positive and finite")]
    WeightAlpha { alpha: f64 },

    /// Graded meshes are built for sharply peaked weights only; for
    /// `alpha <= 1` the peak is wide and a single application of
    /// [`basic_rule_unit`](crate::basic_rule_unit) is the right tool.
    #[error("alpha = {alpha} is out of range: graded schemes need alpha > 1 (for wide peaks use basic_rule_unit on a single interval)")]
    AlphaNotSharp { alpha: f64 },

    /// A graded mesh needs at least two subintervals.
    #[error("mesh size n = {n} is too small: need n >= 2")]
    MeshTooCoarse { n: usize },

    /// Degrees past the cap make the Chebyshev-to-monomial conversion
    /// ill-conditioned: the power-basis numbers grow like 2^(j-1), so the
    /// moment-weighted sums lose roughly j bits of accuracy.
    #[error("degree {requested} exceeds the power-basis cap {cap}; results beyond the cap are numerically unstable")]
    DegreeCap { requested: usize, cap: usize },

    /// The half-integer gamma table is precomputed up to a fixed index.
    #[error("gamma table index {requested} exceeds the cap {cap}")]
    GammaCap { requested: usize, cap: usize },

    /// A scalar argument fell outside its documented domain.
    #[error("parameter {name} = {value} is outside its domain")]
    MomentDomain { name: &'static str, value: f64 },

    /// Interval moments are computed for peaks at or left of the interval;
    /// peaks on the right come out of [`reflect_moments`](crate::reflect_moments).
    #[error("weight moments need beta <= 0, got beta = {beta}; build the mirrored vector and reflect it")]
    BetaNotLeft { beta: f64 },

    /// Splitting an interior peak needs the peak strictly inside (0, 1).
    #[error("peak position beta = {beta} must lie strictly inside (0, 1); for edge or exterior peaks use basic_rule_unit")]
    PeakNotInterior { beta: f64 },

    /// The integrand returned NaN or an infinity at a quadrature node.
    #[error("integrand evaluated to a non-finite value at x = {x}{}", interval.map(|j| format!(" (subinterval {j})")).unwrap_or_default())]
    NonFiniteIntegrand { x: f64, interval: Option<usize> },

    /// Oracle tolerances below ~100 eps are not meaningful in f64.
    #[error("oracle tolerance {tol} is tighter than the 1e-14 floor")]
    OracleTolerance { tol: f64 },

    /// The adaptive oracle ran out of refinement budget.
    #[error("adaptive oracle exhausted its refinement budget ({intervals} subintervals) before reaching the tolerance")]
    OracleBudget { intervals: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
