//! Small evaluators shared by the entry tables.

use std::f64::consts::PI;

use crate::analysis::value_of;
use crate::error::Result;
use crate::polylog::{li2_complex, li2_real, trigamma};
use crate::ComplexValue as C;

pub(crate) const PI2: f64 = PI * PI;
pub(crate) const I: C = C::new(0.0, 1.0);

pub(crate) fn phi() -> f64 {
    value_of("phi")
}

pub(crate) fn c(x: f64) -> C {
    C::new(x, 0.0)
}

/// Li₂ of a real argument, lower lip above one.
pub(crate) fn l(x: f64) -> Result<C> {
    li2_real(x)
}

pub(crate) fn lz(z: C) -> Result<C> {
    li2_complex(z)
}

/// Principal logarithm of a real number (iπ for negative input).
pub(crate) fn ln(x: f64) -> C {
    C::new(x, 0.0).ln()
}

pub(crate) fn psi1(x: f64) -> Result<f64> {
    trigamma(x)
}

/// Left side minus right side of the five-term identity at shape factor a and X = e^{x₁}.
pub(crate) fn five_term(a: f64, x: f64) -> Result<C> {
    let m = (x - 1.0) / (x + a);
    Ok(l(-a / x)? - l(1.0 / x)? + PI2 / 6.0 - l(-a)? - ln(x) * ln((x + a) / (x - 1.0)) + l(-a * m)? - l(m)?)
}

/// Three-term identity for integration limits at the fixed point 1 + √(1 + a).
pub(crate) fn first_fixed_point(a: f64) -> Result<C> {
    let s = 1.0 + (1.0 + a).sqrt();
    Ok(l(-a / s)? - l(1.0 / s)? - 0.5 * l(-a)? + PI2 / 12.0 - 0.5 * ln(s) * ln(s))
}

pub(crate) fn second_fixed_point(x: f64) -> Result<C> {
    Ok(l(2.0 - x)? - l(1.0 / x)? - 0.5 * l(2.0 * x - x * x)? + PI2 / 12.0 - 0.5 * ln(x) * ln(x))
}

/// Li₂(1/xⁿ⁻ᵐ) + Li₂(−xᵐ) + n²/2·ln²x for a root of xⁿ = xᵐ + 1.
pub(crate) fn trinomial(n: f64, m: f64, x: f64) -> Result<C> {
    let lx = x.ln();
    Ok(l(x.powf(m - n))? + l(-x.powf(m))? + c(0.5 * n * n * lx * lx))
}

/// Left side of Σ cₖ Li₂(x^{−eₖ}) for integer exponents.
pub(crate) fn ladder(x: f64, terms: &[(f64, i32)]) -> Result<C> {
    let mut s = C::new(0.0, 0.0);
    for &(coef, e) in terms {
        s += coef * l(x.powi(-e))?;
    }
    Ok(s)
}
