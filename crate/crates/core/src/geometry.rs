//! Solids of revolution built from gemini curves, curvature of the geminoid, and two
//! sweep-area constructions.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::analysis::{find_root, integrate, Limit, QuadratureSpec};
use crate::error::{domain, Result};
use crate::gemini::{fixed_point, value, GeminiParams};
use crate::polylog::{gamma_fn, li3_real, zeta3, zeta_fn};

/// Volume of the solid swept by rotating the curve about the y-axis: 2πb³[ζ(3) − Li₃(−a)].
pub fn geminoid_volume(p: &GeminiParams) -> Result<f64> {
    p.check()?;
    Ok(2.0 * PI * p.b.powi(3) * (zeta3() - li3_real(-p.a)?))
}

/// Closed forms for the shape factors where Li₃(−a) reduces to classical constants.
pub fn geminoid_volume_closed_form(a: f64) -> Option<f64> {
    let z3 = zeta3();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let (l2, lp) = (2f64.ln(), phi.ln());
    let close = |t: f64| (a - t).abs() < 1e-15;
    if close(-0.5) {
        Some(2.0 * PI * (z3 / 8.0 - l2.powi(3) / 6.0 + PI * PI * l2 / 12.0))
    } else if close(-1.0 / (phi * phi)) {
        Some(2.0 * PI * (z3 / 5.0 - 2.0 * lp.powi(3) / 3.0 + 2.0 * PI * PI * lp / 15.0))
    } else if close(0.0) {
        Some(2.0 * PI * z3)
    } else if close(1.0) {
        Some(3.5 * PI * z3)
    } else if close(-1.0) {
        Some(0.0)
    } else {
        None
    }
}

/// Shell-method volume 2π∫₀^∞ x·value(p, x) dx by quadrature.
pub fn shell_volume(p: &GeminiParams) -> Result<f64> {
    p.check()?;
    let spec = QuadratureSpec::new(Limit::LogSingular(0.0), Limit::PosInfinity).with_tol(1e-13);
    let f = |x: f64| if x > 0.0 { x * value(p, x).unwrap_or(f64::NAN) } else { 0.0 };
    Ok(2.0 * PI * integrate(f, &spec)?)
}

/// Volume over the cylinder on the middle square, 2[ζ(3) − Li₃(−a)]/ln³(1+√(1+a)).
pub fn volume_ratio(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= -1.0 {
        return domain(format!("volume ratio needs a > -1, got {a}"));
    }
    let x0 = fixed_point(a)?;
    Ok(2.0 * (zeta3() - li3_real(-a)?) / x0.powi(3))
}

/// ∫₀^∞ xˢ ln(1/(1 − e^{−x})) dx = Γ(s+1)ζ(s+2).
pub fn raw_moment(s: f64) -> Result<f64> {
    if !s.is_finite() || s < 0.0 {
        return domain(format!("raw moment needs s >= 0, got {s}"));
    }
    Ok(gamma_fn(s + 1.0)? * zeta_fn(s + 2.0)?)
}

fn neg_log_one_minus_exp(x: f64) -> f64 {
    -(-(-x).exp_m1()).ln()
}

pub fn raw_moment_quadrature(s: f64) -> Result<f64> {
    if !s.is_finite() || s < 0.0 {
        return domain(format!("raw moment needs s >= 0, got {s}"));
    }
    let spec = QuadratureSpec::new(Limit::LogSingular(0.0), Limit::PosInfinity).with_tol(1e-9);
    integrate(|x: f64| if x > 0.0 { x.powf(s) * neg_log_one_minus_exp(x) } else { 0.0 }, &spec)
}

/// ∫₀^∞ [sζ(s+2)/ζ(s)·x^{s−1}/(eˣ−1) − xˢ ln(1/(1−e^{−x}))] dx, which vanishes for s > 1.
pub fn combined_zeta_gamma_residual(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return domain(format!("combined integral needs s > 1, got {s}"));
    }
    let c = s * zeta_fn(s + 2.0)? / zeta_fn(s)?;
    let spec = QuadratureSpec::new(Limit::LogSingular(0.0), Limit::PosInfinity).with_tol(1e-11);
    integrate(
        |x: f64| {
            if x <= 0.0 {
                return 0.0;
            }
            c * x.powf(s - 1.0) / x.exp_m1() - x.powf(s) * neg_log_one_minus_exp(x)
        },
        &spec,
    )
}

/// Local geometry of the surface obtained by rotating a gemini curve about the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeminoidProfile {
    pub params: GeminiParams,
    pub x: f64,
    pub y: f64,
    /// Signed curvature of the meridian.
    pub kappa1: f64,
    /// Arc length measured from the fixed point.
    pub arc_length: f64,
    /// Angle between the tangent and the y-axis.
    pub theta: f64,
    pub r1: f64,
    pub r2: f64,
    pub kg: f64,
}

// First and second derivatives of value(p, x).
fn slopes(p: &GeminiParams, x: f64) -> (f64, f64) {
    let u = x / p.b;
    let e = (-u).exp();
    let q = -(-u).exp_m1();
    let ae = p.a * e;
    let d1 = -ae / (1.0 + ae) - e / q;
    let d2 = ae / ((1.0 + ae) * (1.0 + ae)) + e / (q * q);
    (d1, d2 / p.b)
}

pub fn curvature_profile(p: &GeminiParams, x: f64) -> Result<GeminoidProfile> {
    p.check()?;
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("curvature needs x > 0, got {x}"));
    }
    let y = value(p, x)?;
    let (d1, d2) = slopes(p, x);
    let w = 1.0 + d1 * d1;
    let kappa1 = d2 / w.powf(1.5);
    let r2 = -y * w.sqrt();
    let x0 = p.b * fixed_point(p.a)?;
    let arc_length = if x0 > 0.0 {
        let speed = |t: f64| (1.0 + slopes(p, t).0.powi(2)).sqrt();
        let (lo, hi, sign) = if x >= x0 { (x0, x, 1.0) } else { (x, x0, -1.0) };
        sign * integrate(speed, &QuadratureSpec::finite(lo, hi))?
    } else {
        f64::NAN
    };
    Ok(GeminoidProfile {
        params: *p,
        x,
        y,
        kappa1,
        arc_length,
        theta: (-1.0 / d1).atan(),
        r1: 1.0 / kappa1,
        r2,
        kg: -d2 / (y * w * w),
    })
}

/// Abscissa where the two principal radii of the unit geminoid have equal magnitude.
pub fn equal_radii_point() -> Result<f64> {
    let unit = GeminiParams::default();
    find_root(
        |x: f64| x.cosh() - value(&unit, x).unwrap_or(f64::NAN),
        0.1,
        2.0,
        1e-15,
    )
}

/// 2·artanh(tan(θ/2)) on (−π/2, π/2).
pub fn arcgd(theta: f64) -> f64 {
    2.0 * (0.5 * theta).tan().atanh()
}

/// arcgd(θ)/sin(θ), continued by 1 at θ = 0.
pub fn arcgd_over_sin(theta: f64) -> f64 {
    if theta.abs() < 1e-3 {
        let t2 = theta * theta;
        1.0 + t2 / 3.0 + 4.0 * t2 * t2 / 45.0
    } else {
        arcgd(theta) / theta.sin()
    }
}

fn half_range(f: impl Fn(f64) -> f64) -> Result<f64> {
    let spec = QuadratureSpec::new(Limit::Finite(0.0), Limit::LogSingular(FRAC_PI_2));
    integrate(f, &spec)
}

/// Tangent-sweep area ½∫₀^{π/2}(arcgd θ / sin θ)² dθ.
pub fn mamikon_area() -> Result<f64> {
    Ok(0.5 * half_range(|t| arcgd_over_sin(t).powi(2))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiHole {
    pub volume: f64,
    pub cross_section: f64,
    /// Area of the narrowest circular section.
    pub throat: f64,
    pub depth: f64,
}

/// The solid from rotating arcgd(θ)/sin(θ), θ ∈ (−π/2, π/2), about the θ-axis.
pub fn pi_hole() -> Result<PiHole> {
    let sq = half_range(|t| arcgd_over_sin(t).powi(2))?;
    let lin = half_range(arcgd_over_sin)?;
    let r0 = arcgd_over_sin(0.0);
    Ok(PiHole {
        volume: 2.0 * PI * sq,
        cross_section: 4.0 * lin,
        throat: PI * r0 * r0,
        depth: PI,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::constant;

    #[test]
    fn printed_volumes() {
        let v = |a: f64| geminoid_volume(&GeminiParams::shape(a).unwrap()).unwrap();
        assert!((v(0.0) - 7.552746).abs() < 1e-6);
        assert!((v(1.0) - 13.217306).abs() < 1e-6);
        assert!((v(-0.5) - 4.177336).abs() < 1e-6);
        assert_eq!(v(-1.0), 0.0);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for a in [-0.5, -1.0 / (phi * phi), 0.0, 1.0] {
            let closed = geminoid_volume_closed_form(a).unwrap();
            assert!((v(a) - closed).abs() < 1e-13 * closed, "a = {a}");
            let shell = shell_volume(&GeminiParams::shape(a).unwrap()).unwrap();
            assert!((shell - closed).abs() < 1e-7 * closed, "a = {a}: {shell}");
        }
        assert!(geminoid_volume_closed_form(2.0).is_none());
    }

    #[test]
    fn volume_ratio_behaviour() {
        let z = volume_ratio(0.0).unwrap();
        assert!((z - 2.0 * zeta3() / 2f64.ln().powi(3)).abs() < 1e-13);
        assert!(volume_ratio(-1.0 + 1e-6).unwrap() > 1e3);
        // slow logarithmic approach to 8/3
        let big = volume_ratio(1e8).unwrap();
        assert!((big - 2.7472).abs() < 1e-4, "{big}");
        assert!((volume_ratio(1e300).unwrap() - 8.0 / 3.0).abs() < 1e-3);
        assert!(volume_ratio(-1.0).is_err());
    }

    #[test]
    fn moments() {
        assert!((raw_moment(1.0).unwrap() - zeta3()).abs() < 1e-14);
        assert!((raw_moment(0.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        for s in [0.5, 1.0, 2.0, 3.5, 5.0] {
            let q = raw_moment_quadrature(s).unwrap();
            assert!((q - raw_moment(s).unwrap()).abs() < 1e-8, "s = {s}");
        }
        for s in [1.5, 2.0, 3.0] {
            assert!(combined_zeta_gamma_residual(s).unwrap().abs() < 1e-7, "s = {s}");
        }
        assert!(raw_moment(-0.5).is_err());
    }

    #[test]
    fn unit_geminoid_curvature() {
        let unit = GeminiParams::default();
        for x in [0.05, 0.4, 1.0, 3.0, 8.0] {
            let c = curvature_profile(&unit, x).unwrap();
            let (sh, ch) = (x.sinh(), x.cosh());
            assert!((c.kappa1 - sh / (ch * ch)).abs() < 1e-13 * c.kappa1.abs().max(1e-3));
            assert!((c.arc_length - sh.ln()).abs() < 1e-10, "x = {x}");
            assert!((c.theta - sh.atan()).abs() < 1e-13);
            let y = (1.0 / (0.5 * x).tanh()).ln();
            let kg = -sh * sh / (ch.powi(3) * y);
            assert!((c.kg - kg).abs() < 1e-12 * kg.abs().max(1e-3));
            assert!((c.kg * c.r1 * c.r2 - 1.0).abs() < 1e-12);
        }
        let far = curvature_profile(&unit, 20.0).unwrap();
        assert!((far.kg + 1.0).abs() < 1e-6);
        assert!(curvature_profile(&unit, 1e-4).unwrap().kg.abs() < 1e-6);
        assert!(curvature_profile(&unit, 0.0).is_err());
    }

    #[test]
    fn equal_radii_and_laplace_limit() {
        let lambda = constant("lambda").unwrap().value;
        let x = equal_radii_point().unwrap();
        assert!((x - lambda.asinh()).abs() < 1e-13);
        let c = curvature_profile(&GeminiParams::default(), x).unwrap();
        assert!((c.r1.abs() - c.r2.abs()).abs() < 1e-12);
        assert!((c.r1 - (1.0 / lambda + lambda)).abs() < 1e-12, "{} {}", c.r1, c.r2);
        assert!((c.r1 - 2.171623).abs() < 1e-6);
        let l2 = lambda * lambda;
        assert!((c.kg + l2 / ((1.0 + l2) * (1.0 + l2))).abs() < 1e-13);
        assert!((c.kg + 0.212045).abs() < 1e-5);
        assert!((c.theta - 0.585281).abs() < 1e-6);
        let cfp = constant("c_cfp").unwrap().value;
        assert!((c.y - cfp).abs() < 1e-12);
        assert!(((1.0 / lambda).asinh() - cfp).abs() < 1e-12);
    }

    #[test]
    fn general_profile_scales() {
        let p = GeminiParams::new(0.5, 2.0).unwrap();
        let q = GeminiParams::shape(0.5).unwrap();
        let (c, d) = (curvature_profile(&p, 1.2).unwrap(), curvature_profile(&q, 0.6).unwrap());
        assert!((c.kappa1 - d.kappa1 / 2.0).abs() < 1e-14);
        assert!((c.kg - d.kg / 4.0).abs() < 1e-14);
        let h = 1e-5;
        let fd = (value(&p, 1.2 + h).unwrap() - value(&p, 1.2 - h).unwrap()) / (2.0 * h);
        assert!((slopes(&p, 1.2).0 - fd).abs() < 1e-9);
    }

    #[test]
    fn arcgd_series_and_sweeps() {
        for t in [1e-3, 2e-3, 1e-2] {
            let series = {
                let t2: f64 = t * t;
                1.0 + t2 / 3.0 + 4.0 * t2 * t2 / 45.0
            };
            assert!((series - arcgd(t) / f64::sin(t)).abs() < 1e-12);
        }
        assert_eq!(arcgd_over_sin(0.0), 1.0);
        assert!((mamikon_area().unwrap() - PI * PI / 4.0).abs() < 1e-7);
        let hole = pi_hole().unwrap();
        assert!((hole.volume - PI.powi(3)).abs() < 1e-6);
        assert!((hole.cross_section - PI * PI).abs() < 1e-7);
        assert_eq!(hole.throat, PI);
    }
}
