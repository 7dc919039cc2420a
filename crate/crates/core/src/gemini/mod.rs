//! The self-inverse gemini family y = b·ln((1 + a e^{−x/b}) / (1 − e^{−x/b})) and its areas.

mod median;
mod scale;

use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::polylog::{li2, ZETA2};

pub use median::{
    inverse_pair_prediction, median, median_rule_residuals, pair_area_ratio, InversePair,
};
pub use scale::{a_of_p, atot_of_a_p, critical_a, scale_fit, scale_fit_areas, AreaFit};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeminiParams {
    /// Shape factor, a ≥ −1.
    pub a: f64,
    /// Scale factor, b > 0.
    pub b: f64,
}

impl Default for GeminiParams {
    fn default() -> Self {
        GeminiParams { a: 1.0, b: 1.0 }
    }
}

impl GeminiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let p = GeminiParams { a, b };
        p.check()?;
        Ok(p)
    }

    pub fn shape(a: f64) -> Result<Self> {
        Self::new(a, 1.0)
    }

    pub fn check(&self) -> Result<()> {
        if !self.a.is_finite() || self.a < -1.0 {
            return domain(format!("shape factor must be >= -1, got {}", self.a));
        }
        if !self.b.is_finite() || self.b <= 0.0 {
            return domain(format!("scale factor must be > 0, got {}", self.b));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaDecomposition {
    /// Area under the whole curve.
    pub total: f64,
    /// Square on the fixed point, x₀².
    pub middle_square: f64,
    /// Area beyond the upper limit (equal to the one above the lower limit by symmetry).
    pub apex: f64,
    /// Rectangle x₁·x₂ spanned by the limits.
    pub rectangle: f64,
    /// Area under the curve between the limits.
    pub between_limits: f64,
}

/// Gemini function value at x > 0.
pub fn value(p: &GeminiParams, x: f64) -> Result<f64> {
    p.check()?;
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("gemini value needs x > 0, got {x}"));
    }
    let y = x / p.b;
    let e = (-y).exp();
    let pole = if e < 0.5 { (-e).ln_1p() } else { (-(-y).exp_m1()).ln() };
    Ok(p.b * ((p.a * e).ln_1p() - pole))
}

/// b²[Li₂(−a e^{−x/b}) − Li₂(e^{−x/b})], an antiderivative that vanishes at infinity.
pub fn antiderivative(p: &GeminiParams, x: f64) -> Result<f64> {
    p.check()?;
    if !x.is_finite() || x < 0.0 {
        return domain(format!("antiderivative needs x >= 0, got {x}"));
    }
    let e = (-x / p.b).exp();
    Ok(p.b * p.b * (li2(-p.a * e)? - li2(e)?))
}

pub fn total_area(p: &GeminiParams) -> Result<f64> {
    p.check()?;
    Ok(p.b * p.b * (ZETA2 - li2(-p.a)?))
}

/// x₀ = ln(1 + √(1 + a)), where the curve meets y = x (b = 1).
pub fn fixed_point(a: f64) -> Result<f64> {
    if !a.is_finite() || a < -1.0 {
        return domain(format!("fixed point needs a >= -1, got {a}"));
    }
    Ok((1.0 + a).sqrt().ln_1p())
}

/// The abscissa x₂ = ln((X + a)/(X − 1)), X = e^{x₁}, mirrored from x₁ across y = x.
pub fn symmetric_partner(a: f64, x1: f64) -> Result<f64> {
    if !a.is_finite() || a < -1.0 {
        return domain(format!("shape factor must be >= -1, got {a}"));
    }
    if !x1.is_finite() {
        return domain(format!("x1 must be finite, got {x1}"));
    }
    let xm1 = x1.exp_m1();
    if xm1 <= 1e-12 {
        return domain(format!("e^x1 must exceed 1 by more than 1e-12, got x1 = {x1}"));
    }
    let big = xm1 + 1.0;
    if big + a <= 0.0 {
        return domain(format!("e^x1 + a must be positive (x1 = {x1}, a = {a})"));
    }
    Ok((big + a).ln() - xm1.ln())
}

/// Areas for the limits x₁ and its partner x₂ (b = 1).
pub fn area_decomposition_at(a: f64, x1: f64) -> Result<AreaDecomposition> {
    let p = GeminiParams::shape(a)?;
    let x2 = symmetric_partner(a, x1)?;
    let x0 = fixed_point(a)?;
    let total = total_area(&p)?;
    let f1 = antiderivative(&p, x1)?;
    let f2 = antiderivative(&p, x2.max(0.0))?;
    Ok(AreaDecomposition {
        total,
        middle_square: x0 * x0,
        apex: -f2,
        rectangle: x1 * x2,
        between_limits: f2 - f1,
    })
}

/// Areas for limits at the fixed point, where A_tot = A₀ + 2A_a.
pub fn area_decomposition(a: f64) -> Result<AreaDecomposition> {
    let p = GeminiParams::shape(a)?;
    let x0 = fixed_point(a)?;
    let total = total_area(&p)?;
    let sq = x0 * x0;
    Ok(AreaDecomposition {
        total,
        middle_square: sq,
        apex: 0.5 * (total - sq),
        rectangle: sq,
        between_limits: 0.0,
    })
}

/// A_tot / A₀ for b = 1.
pub fn area_ratio_r(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= -1.0 {
        return domain(format!("area ratio needs a > -1, got {a}"));
    }
    let x0 = fixed_point(a)?;
    Ok((ZETA2 - li2(-a)?) / (x0 * x0))
}

/// Area ratio for the exponentiated lower limit x ∈ (1, 1 + √(1 + a)).
pub fn area_ratio_rxa(x: f64, a: f64) -> Result<f64> {
    if !a.is_finite() || a < -1.0 {
        return domain(format!("shape factor must be >= -1, got {a}"));
    }
    let top = 1.0 + (1.0 + a).sqrt();
    if !(x > 1.0 && x < top) {
        return domain(format!("x must lie in (1, {top}), got {x}"));
    }
    let la = li2(-a)?;
    let den = ZETA2 - x.ln() * ((x + a) / (x - 1.0)).ln() - la - 2.0 * li2(1.0 / x)? + 2.0 * li2(-a / x)?;
    Ok((la - ZETA2) / den)
}

/// The degenerate form rotated by π/4: (1/√2)·ln(2cosh(x√2) + 2).
pub fn rotated_degenerate(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain(format!("x must be finite, got {x}"));
    }
    let u = (x * SQRT_2).abs();
    Ok((u + 2.0 * (-u).exp().ln_1p()) / SQRT_2)
}

/// Li₂(−e^{−x√2}) + x²/2.
pub fn rotated_antiderivative(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain(format!("x must be finite, got {x}"));
    }
    Ok(li2(-(-x * SQRT_2).exp())? + 0.5 * x * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const PHI: f64 = 1.618_033_988_749_895;

    #[test]
    fn printed_values() {
        let one = GeminiParams::default();
        assert!((value(&one, PHI.ln()).unwrap() - 3.0 * PHI.ln()).abs() < 1e-14);
        let deg = GeminiParams::shape(0.0).unwrap();
        assert!((value(&deg, 2f64.ln()).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!((total_area(&one).unwrap() - PI * PI / 4.0).abs() < 1e-15);
        let fit = GeminiParams::new(0.0, 1.5f64.sqrt()).unwrap();
        assert!((total_area(&fit).unwrap() - PI * PI / 4.0).abs() < 1e-14);
        assert_eq!(total_area(&GeminiParams::new(-1.0, 3.0).unwrap()).unwrap(), 0.0);
        assert!((fixed_point(3.0).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert_eq!(fixed_point(-1.0).unwrap(), 0.0);
    }

    #[test]
    fn partner_examples() {
        assert!((symmetric_partner(1.0, PHI.ln()).unwrap() - 3.0 * PHI.ln()).abs() < 1e-14);
        let a = PHI.powi(3);
        assert!((symmetric_partner(a, 2.0 * PHI.ln()).unwrap() - a.ln()).abs() < 1e-14);
        assert!(symmetric_partner(0.0, 0.0).is_err());
        assert!(symmetric_partner(0.0, 1e-14).is_err());
    }

    #[test]
    fn antiderivative_endpoints() {
        let one = GeminiParams::default();
        let f0 = antiderivative(&one, 0.0).unwrap();
        assert!((f0 + PI * PI / 4.0).abs() < 1e-15);
        let deg = GeminiParams::shape(0.0).unwrap();
        let li2_half = PI * PI / 12.0 - 0.5 * 2f64.ln().powi(2);
        assert!((-antiderivative(&deg, 2f64.ln()).unwrap() - li2_half).abs() < 1e-15);
        assert!(antiderivative(&one, 800.0).unwrap().abs() < 1e-300);
    }

    #[test]
    fn decomposition_examples() {
        let d = area_decomposition(0.0).unwrap();
        let ln2 = 2f64.ln();
        assert!((d.middle_square - ln2 * ln2).abs() < 1e-15);
        assert!((d.apex - (PI * PI / 12.0 - 0.5 * ln2 * ln2)).abs() < 1e-15);
        let z = area_decomposition(-1.0).unwrap();
        assert_eq!((z.total, z.middle_square, z.apex), (0.0, 0.0, 0.0));
        let g = area_decomposition_at(0.7, 0.4).unwrap();
        // head area ∫₀^{x1} = rectangle + apex
        let head = antiderivative(&GeminiParams::shape(0.7).unwrap(), 0.4).unwrap() + g.total;
        assert!((head - g.rectangle - g.apex).abs() < 1e-12);
    }

    #[test]
    fn ratio_examples() {
        let k = PI * PI / (4.0 * (1.0 + 2f64.sqrt()).ln().powi(2));
        assert!((area_ratio_r(1.0).unwrap() - k).abs() < 1e-14);
        assert!((area_ratio_r(1.0).unwrap() - 3.176286).abs() < 1e-6);
        assert!(area_ratio_r(-1.0).is_err());
        assert!((area_ratio_rxa(PHI, 0.0).unwrap() - 5.0).abs() < 1e-12);
        assert!((area_ratio_rxa(PHI, 1.0).unwrap() - 3.0).abs() < 1e-12);
        assert!((area_ratio_rxa(PHI, PHI).unwrap() - 2.629569).abs() < 1e-6);
        assert!((area_ratio_rxa(PHI.sqrt(), PHI).unwrap() - 1.583522).abs() < 1e-6);
        assert!(area_ratio_rxa(3.0, 0.0).is_err());
    }

    #[test]
    fn rotated_forms() {
        assert!((rotated_degenerate(0.0).unwrap() - 4f64.ln() / SQRT_2).abs() < 1e-15);
        for &x in &[0.3, 2.0, 40.0] {
            assert_eq!(rotated_degenerate(x).unwrap(), rotated_degenerate(-x).unwrap());
            let direct = (2.0 * (x * SQRT_2).cosh() + 2.0).ln() / SQRT_2;
            assert!((rotated_degenerate(x).unwrap() - direct).abs() < 1e-13 * direct);
            let h = 1e-5;
            let d = (rotated_antiderivative(x + h).unwrap() - rotated_antiderivative(x - h).unwrap()) / (2.0 * h);
            assert!((d - direct).abs() < 1e-7 * direct.max(1.0));
        }
    }
}
