//! The integrand contract shared by every quadrature entry point.

/// A scalar function f that the quadrature rules sample pointwise.
///
/// The weight factor e^(−α²(x−β)²) is never part of the integrand: rules
/// integrate f against the weight exactly through moments, so `eval` only
/// ever sees the smooth factor. Evaluation must be deterministic (equal
/// input, equal output); the library calls nodes sequentially in index
/// order, so implementations need not be thread-safe unless the caller
/// shares them across threads.
///
/// Any `Fn(f64) -> f64` closure is an `Integrand` with no derivative
/// information. Implement the trait directly when a sup-norm bound on
/// some derivative is available, which unlocks the a-priori error
/// predictors.
pub trait Integrand {
    /// Evaluates f at x.
    fn eval(&self, x: f64) -> f64;

    /// Sup-norm bound of the order-th derivative of f on the domain of
    /// interest, if known. `None` (the default) disables the a-priori
    /// error predictors for this integrand.
    fn derivative_bound(&self, order: usize) -> Option<f64> {
        let _ = order;
        None
    }

    /// Short name used in reports and error messages.
    fn label(&self) -> &str {
        "f"
    }
}

impl<F> Integrand for F
where
    F: Fn(f64) -> f64,
{
    fn eval(&self, x: f64) -> f64 {
        self(x)
    }
}
