//! Neumaier-compensated accumulation for the quadrature sums.

/// Running sum with a first-order error term (Neumaier's variant of
/// Kahan summation). The sums over Chebyshev coefficients multiply
/// terms of mixed magnitude and sign; the compensation keeps the
/// accumulated rounding at one ulp of the result.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.s + self.c
    }
}
