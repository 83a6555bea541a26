//! Quadrature for sharply peaked Gaussian-weighted integrals.
//!
//! Crate docs are finalized at the bottom-most build step; see the
//! examples directory for runnable entry points.

mod baseline;
mod bench;
mod cheb;
mod dd;
mod error;
mod graded;
mod integrand;
mod kahan;
mod moments;
mod oracle;
mod specfun;

pub use baseline::{composite_simpson, composite_trapezoid, UniformKind, UniformRule};
pub use bench::{
    figure_to_csv, figure_to_markdown, rows_to_csv, rows_to_markdown, run_figure, run_table,
    BenchRow, Cell, FigureData, FigureId, ReferenceIntegral, Scheme, TableId,
};
pub use cheb::{
    basic_rule, basic_rule_error_bound, chebyshev_coefficients, chebyshev_nodes, power_number,
    ChebyshevRule,
};
pub use error::{Error, Result};
pub use graded::{
    basic_rule_unit, integrate_shifted, quade, quade_condition, quade_degrees, quadp,
    quadp_error_bound, CompositeScheme, GradedMesh, IntervalTransform, IntervalValue,
    QuadratureReport, ShiftedReport,
};
pub use integrand::Integrand;
pub use moments::{
    moment_base, moment_recurrence_oracle, reflect_moments, weight_moments, GaussianWeight,
    MomentVector,
};
pub use oracle::adaptive_oracle;
pub use specfun::{
    erf, erfc, gaussian_derivative, half_integer_gamma, hermite_eval, HalfIntegerGammaTable,
    GAMMA_CAP, HERMITE_DEGREE_CAP,
};

/// Largest polynomial degree the power-basis machinery accepts.
///
/// The Chebyshev-to-monomial conversion numbers grow like 2^(j−1), so
/// degrees past this cap cannot deliver table-level accuracy in double
/// precision. Every benchmark configuration stays at or below 30.
pub const DEGREE_CAP: usize = 40;

/// √π rounded to the nearest double, shared by the scalar kernels.
pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516_027_3;
