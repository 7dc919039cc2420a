use std::f64::consts::PI;

use num_complex::Complex64;

use super::ZETA2;
use crate::error::{domain, Result};
use crate::ComplexValue;

// |B_{2k}| / (2k (2k+1)!) for k = 1..25.
const SERIES: [f64; 25] = [
    1.3888888888888889e-2,
    6.9444444444444444e-5,
    7.873519778281683e-7,
    1.1482216343327454e-8,
    1.8978869988970999e-10,
    3.3873013709535213e-12,
    6.3726364431831804e-14,
    1.2462059912950672e-15,
    2.5105444608999546e-17,
    5.1782588060906235e-19,
    1.0887357368300849e-20,
    2.3257441143020872e-22,
    5.0351952131473896e-24,
    1.1026499294381215e-25,
    2.4386585509007345e-27,
    5.4401426788562523e-29,
    1.2228340131217352e-30,
    2.7672634689679506e-32,
    6.3000905918320139e-34,
    1.4420868388418475e-35,
    3.3170939991595428e-37,
    7.6639135579206579e-39,
    1.7778714733830658e-40,
    4.1396058982341373e-42,
    9.6715570360811018e-44,
];

/// Clausen function Cl₂(θ) = Σ sin(kθ)/k².
///
/// The logarithmic part `θ − θ ln|θ|` is split off analytically, which leaves a
/// power series in θ² that converges geometrically on the reduced range (−π, π].
pub fn clausen_cl2(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return domain(format!("clausen argument must be finite, got {theta}"));
    }
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let t2 = t * t;
    let mut sum = t - t * t.abs().ln();
    let mut p = t;
    for c in SERIES {
        p *= t2;
        let term = c * p;
        sum += term;
        if term.abs() <= 0.25 * f64::EPSILON * sum.abs().max(1e-300) {
            break;
        }
    }
    Ok(sum)
}

/// Li₂(e^{iπp/q}) from Kummer's real-part rule and the Clausen function.
pub fn li2_unit_circle(p: i64, q: i64) -> Result<ComplexValue> {
    if q <= 0 {
        return domain(format!("unit-circle denominator must be positive, got {q}"));
    }
    let reduced = p.rem_euclid(2 * q);
    let theta = PI * reduced as f64 / q as f64;
    let re = ZETA2 - theta * (2.0 * PI - theta) / 4.0;
    Ok(Complex64::new(re, clausen_cl2(theta)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fourier(theta: f64) -> f64 {
        (1..2_000_000).map(|k| (k as f64 * theta).sin() / (k as f64 * k as f64)).sum()
    }

    #[test]
    fn matches_slow_fourier_sum() {
        for &t in &[0.4, 1.0, 2.0, 3.0] {
            assert!((clausen_cl2(t).unwrap() - fourier(t)).abs() < 1e-9, "theta = {t}");
        }
    }

    #[test]
    fn zero_and_pi_are_roots() {
        assert_eq!(clausen_cl2(0.0).unwrap(), 0.0);
        assert!(clausen_cl2(PI).unwrap().abs() < 1e-15);
    }

    #[test]
    fn unit_circle_rejects_zero_denominator() {
        assert!(li2_unit_circle(1, 0).is_err());
        let one = li2_unit_circle(0, 1).unwrap();
        assert!((one.re - ZETA2).abs() < 1e-16 && one.im == 0.0);
    }
}
