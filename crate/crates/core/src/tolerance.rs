//! Composite absolute/relative comparison used throughout the crate.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-10, rel: 1e-12 }
    }
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }

    pub fn bound(&self, lhs: f64, rhs: f64) -> f64 {
        self.abs + self.rel * lhs.abs().max(rhs.abs())
    }

    pub fn close(&self, lhs: f64, rhs: f64) -> bool {
        (lhs - rhs).abs() <= self.bound(lhs, rhs)
    }
}
