use std::f64::consts::PI;

use serde::Serialize;

use super::{total_area, value, GeminiParams};
use crate::analysis::{find_root, integrate, Limit, QuadratureSpec};
use crate::error::{domain, Error, Result};
use crate::polylog::{li2, ZETA2};

/// Scale factor b that gives gemini (a2, b) the same total area as (a1, 1).
pub fn scale_fit(a1: f64, a2: f64) -> Result<f64> {
    if !(a1 > -1.0 && a2 > -1.0) || !a1.is_finite() || !a2.is_finite() {
        return domain(format!("scale fit needs both shape factors > -1, got {a1}, {a2}"));
    }
    let t1 = total_area(&GeminiParams::shape(a1)?)?;
    let t2 = total_area(&GeminiParams::shape(a2)?)?;
    Ok((t1 / t2).sqrt())
}

/// Intersections of the fitted pair and the signed areas between the two curves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaFit {
    pub b: f64,
    pub x1: f64,
    pub x2: f64,
    /// ∫₀^{x1} of (fitted − reference).
    pub head: f64,
    /// ∫_{x1}^{x2}, opposite in sign to head and tail.
    pub middle: f64,
    /// ∫_{x2}^∞.
    pub tail: f64,
}

pub fn scale_fit_areas(a1: f64, a2: f64) -> Result<AreaFit> {
    let b = scale_fit(a1, a2)?;
    let reference = GeminiParams::shape(a1)?;
    let fitted = GeminiParams::new(a2, b)?;
    let d = |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        value(&fitted, x).unwrap_or(f64::NAN) - value(&reference, x).unwrap_or(f64::NAN)
    };
    let step = 0.02;
    let mut roots = Vec::new();
    let mut prev = (step, d(step));
    for k in 2..=800 {
        let x = step * k as f64;
        let v = d(x);
        if prev.1 * v < 0.0 {
            roots.push(find_root(d, prev.0, x, 1e-15)?);
        }
        prev = (x, v);
    }
    if roots.len() < 2 {
        return domain(format!("fitted pair ({a1}, {a2}) has {} crossings, need 2", roots.len()));
    }
    let (x1, x2) = (roots[0], roots[roots.len() - 1]);
    let head = integrate(d, &QuadratureSpec::new(Limit::LogSingular(0.0), Limit::Finite(x1)))?;
    let middle = integrate(d, &QuadratureSpec::finite(x1, x2))?;
    let tail = integrate(d, &QuadratureSpec::new(Limit::Finite(x2), Limit::PosInfinity))?;
    Ok(AreaFit { b, x1, x2, head, middle, tail })
}

/// Total area of gemini (a, b) with b = 1/(a + p).
pub fn atot_of_a_p(a: f64, p: f64) -> Result<f64> {
    if !a.is_finite() || a < -1.0 || !p.is_finite() {
        return domain(format!("need a >= -1 and finite p, got a = {a}, p = {p}"));
    }
    let s = a + p;
    if s == 0.0 {
        return domain(format!("a + p must be nonzero, got a = {a}, p = {p}"));
    }
    Ok((ZETA2 - li2(-a)?) / (s * s))
}

fn critical_residual(a: f64, p: f64) -> f64 {
    if a == 0.0 {
        return 0.5 * p - ZETA2;
    }
    li2(-a).unwrap_or(f64::NAN) - ZETA2 + (a + p) / (2.0 * a) * a.ln_1p()
}

/// Shape factor maximizing atot_of_a_p for fixed p > 1.
pub fn critical_a(p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return domain(format!("critical shape factor needs p > 1, got {p}"));
    }
    let f = |a: f64| critical_residual(a, p);
    let f0 = f(0.0);
    if f0 == 0.0 {
        return Ok(0.0);
    }
    if f0 < 0.0 {
        return find_root(f, -1.0 + f64::EPSILON, 0.0, 1e-15);
    }
    let mut hi = 1.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::Accuracy { estimate: hi, error: f64::INFINITY });
        }
    }
    find_root(f, 0.0, hi, 1e-15)
}

/// ∫_{−1}^{∞} atot_of_a_p(a, p) da = π²/(2p) + ln²(p − 1)/(2p).
pub fn a_of_p(p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return domain(format!("A(p) needs p > 1, got {p}"));
    }
    let l = (p - 1.0).ln();
    Ok((PI * PI + l * l) / (2.0 * p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_examples() {
        assert!((scale_fit(1.0, 0.0).unwrap() - 1.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(scale_fit(2.5, 2.5).unwrap(), 1.0);
        assert!(scale_fit(1.0, -1.0).is_err());
        let fit = scale_fit_areas(1.0, 0.0).unwrap();
        assert!((fit.x1 - 0.219604).abs() < 1e-6 && (fit.x2 - 2.213083).abs() < 1e-6);
    }

    #[test]
    fn fit_areas_balance() {
        for &(a1, a2) in &[(1.0, 0.0), (3.0, -0.5), (0.5, 5.0), (10.0, 1.0)] {
            let f = scale_fit_areas(a1, a2).unwrap();
            let b = GeminiParams::new(a2, f.b).unwrap();
            let t = total_area(&b).unwrap() - total_area(&GeminiParams::shape(a1).unwrap()).unwrap();
            assert!(t.abs() < 1e-10);
            assert!((f.head + f.middle + f.tail).abs() < 1e-9, "({a1}, {a2})");
            assert!((f.head - f.tail).abs() < 1e-9, "({a1}, {a2})");
            assert!(f.middle * f.head < 0.0);
            let partner = super::super::symmetric_partner(a1, f.x1).unwrap();
            assert!((partner - f.x2).abs() < 1e-9);
        }
    }

    #[test]
    fn critical_shape_factor() {
        assert!((critical_a(2.0).unwrap() + 0.514091).abs() < 1e-6);
        assert!(critical_a(PI * PI / 3.0).unwrap().abs() < 1e-12);
        let peak = atot_of_a_p(0.0, PI * PI / 3.0).unwrap();
        assert!((peak - 3.0 / (2.0 * PI * PI)).abs() < 1e-15);
        for &p in &[1.5, 2.0, 5.0] {
            let a = critical_a(p).unwrap();
            let top = atot_of_a_p(a, p).unwrap();
            for &h in &[1e-3, 1e-2, 0.1] {
                assert!(top > atot_of_a_p(a + h, p).unwrap(), "p = {p}");
                assert!(top > atot_of_a_p(a - h, p).unwrap(), "p = {p}");
            }
        }
        assert!(critical_a(1.0).is_err());
    }

    #[test]
    fn a_of_p_matches_quadrature() {
        assert!((a_of_p(2.0).unwrap() - PI * PI / 4.0).abs() < 1e-15);
        for &p in &[1.5, 2.0, 4.0] {
            let f = |a: f64| atot_of_a_p(a, p).unwrap();
            let near = integrate(f, &QuadratureSpec::finite(-1.0, 0.0)).unwrap();
            let far = integrate(f, &QuadratureSpec::new(Limit::Finite(0.0), Limit::PosInfinity)).unwrap();
            assert!((near + far - a_of_p(p).unwrap()).abs() < 1e-7, "p = {p}");
        }
    }
}
