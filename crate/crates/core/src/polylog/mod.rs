//! Polylogarithms and the auxiliary special functions the identities need.
//!
//! Real arguments above one follow the lower-lip convention: `li2_real(x)` for
//! `x > 1` is the limit from below the branch cut, so its imaginary part is
//! `-π ln x`. `li2_complex` applies the same limit on the cut itself.

mod clausen;
mod consts;
mod dilog;
mod gamma;
mod trilog;

use crate::error::{domain, Result};

pub use clausen::{clausen_cl2, li2_unit_circle};
pub use consts::{catalan, gieseking, zeta3};
pub use dilog::{li2, li2_complex, li2_complex_with, li2_real, li2_real_with};
pub use gamma::{gamma_fn, trigamma, zeta_fn};
pub use trilog::{li3_real, li3_real_with};

/// π²/6, the value of Li₂(1).
pub const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Series controls shared by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { abs_tol: 1e-14, max_terms: 10_000 }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return domain(format!("abs_tol must be positive, got {}", self.abs_tol));
        }
        if self.max_terms < 16 {
            return domain(format!("max_terms must be at least 16, got {}", self.max_terms));
        }
        Ok(())
    }

    pub(crate) fn negligible(&self, term: f64, sum: f64) -> bool {
        term.abs() <= 0.5 * f64::EPSILON * sum.abs() || term.abs() < 1e-3 * self.abs_tol
    }
}

/// Legendre chi function χ₂(x) = [Li₂(x) − Li₂(−x)]/2 for |x| ≤ 1.
pub fn chi2(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 {
        return domain(format!("chi2 needs |x| <= 1, got {x}"));
    }
    Ok(0.5 * (li2(x)? - li2(-x)?))
}
