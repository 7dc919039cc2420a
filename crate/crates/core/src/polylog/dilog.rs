use std::f64::consts::PI;

use num_complex::Complex64;

use super::{EvalOptions, ZETA2};
use crate::error::{domain, Result};
use crate::ComplexValue;

// B_{2k} / (2k+1)! for k = 1.., the tail of Li₂(z) = u − u²/4 + Σ c_k u^{2k+1}, u = −ln(1−z).
const LOG_SERIES: [f64; 15] = [
    2.7777777777777778e-2,
    -2.7777777777777778e-4,
    4.7241118669690098e-6,
    -9.1857730746619636e-8,
    1.8978869988970999e-9,
    -4.0647616451442255e-11,
    8.9216910204564526e-13,
    -1.9939295860721076e-14,
    4.5189800296199182e-16,
    -1.0356517612181247e-17,
    2.3952186210261867e-19,
    -5.5817858743250093e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.3159756527022034e-26,
];

/// Li₂(x) for real `x` with the default options.
pub fn li2_real(x: f64) -> Result<ComplexValue> {
    li2_real_with(x, &EvalOptions::default())
}

/// Li₂(x) for real `x`; for `x > 1` the imaginary part is `-π ln x`.
pub fn li2_real_with(x: f64, opts: &EvalOptions) -> Result<ComplexValue> {
    if !x.is_finite() {
        return domain(format!("li2 argument must be finite, got {x}"));
    }
    opts.validate()?;
    let v = if x < -1.0 {
        let l = (-x).ln();
        Complex64::new(-core_real(1.0 / x, opts) - ZETA2 - 0.5 * l * l, 0.0)
    } else if x <= 0.5 {
        Complex64::new(core_real(x, opts), 0.0)
    } else if x < 1.0 {
        Complex64::new(ZETA2 - x.ln() * (-x).ln_1p() - core_real(1.0 - x, opts), 0.0)
    } else if x == 1.0 {
        Complex64::new(ZETA2, 0.0)
    } else if x <= 2.0 {
        let l = x.ln();
        Complex64::new(ZETA2 - l * (x - 1.0).ln() - core_real(1.0 - x, opts), -PI * l)
    } else {
        let l = x.ln();
        Complex64::new(2.0 * ZETA2 - 0.5 * l * l - core_real(1.0 / x, opts), -PI * l)
    };
    Ok(v)
}

/// Real-valued Li₂(x) for `x ≤ 1`.
pub fn li2(x: f64) -> Result<f64> {
    if x > 1.0 {
        return domain(format!("real-valued li2 needs x <= 1, got {x}"));
    }
    Ok(li2_real(x)?.re)
}

/// Principal-branch Li₂(z); on the cut `z > 1` it agrees with [`li2_real`].
pub fn li2_complex(z: ComplexValue) -> Result<ComplexValue> {
    li2_complex_with(z, &EvalOptions::default())
}

pub fn li2_complex_with(z: ComplexValue, opts: &EvalOptions) -> Result<ComplexValue> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return domain(format!("li2 argument must be finite, got {z}"));
    }
    if z.im == 0.0 {
        return li2_real_with(z.re, opts);
    }
    opts.validate()?;
    if z.norm_sqr() > 1.0 {
        let l = (-z).ln();
        Ok(-unit_disk(z.inv(), opts) - ZETA2 - 0.5 * l * l)
    } else {
        Ok(unit_disk(z, opts))
    }
}

// |x| small or in [-1, 1/2]: log series in u = -ln(1-x).
fn core_real(x: f64, opts: &EvalOptions) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let u = -(-x).ln_1p();
    let u2 = u * u;
    let mut sum = u - 0.25 * u2;
    let mut p = u;
    for (k, c) in LOG_SERIES.iter().enumerate() {
        if k >= opts.max_terms {
            break;
        }
        p *= u2;
        let t = c * p;
        sum += t;
        if opts.negligible(t, sum) {
            break;
        }
    }
    sum
}

// |z| <= 1 off the real axis.
fn unit_disk(z: Complex64, opts: &EvalOptions) -> Complex64 {
    if z.re > 0.5 {
        let w = Complex64::new(1.0, 0.0) - z;
        return ZETA2 - z.ln() * w.ln() - core_complex(w, opts);
    }
    core_complex(z, opts)
}

fn core_complex(z: Complex64, opts: &EvalOptions) -> Complex64 {
    if z.norm_sqr() < 0.0625 {
        return direct_series(z, opts);
    }
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let mut sum = u - 0.25 * u2;
    let mut p = u;
    for (k, c) in LOG_SERIES.iter().enumerate() {
        if k >= opts.max_terms {
            break;
        }
        p *= u2;
        let t = p * *c;
        sum += t;
        if opts.negligible(t.norm(), sum.norm()) {
            break;
        }
    }
    sum
}

fn direct_series(z: Complex64, opts: &EvalOptions) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    for k in 1..=opts.max_terms {
        p *= z;
        let t = p / (k * k) as f64;
        sum += t;
        if opts.negligible(t.norm(), sum.norm()) {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(x: f64) -> f64 {
        (1..200_000).map(|k| x.powi(k) / (k as f64 * k as f64)).sum()
    }

    #[test]
    fn matches_defining_series_inside_the_disk() {
        for &x in &[-0.9f64, -0.5, -0.1, 0.05, 0.3, 0.5, 0.7, 0.9] {
            let v = li2_real(x).unwrap();
            assert!((v.re - brute(x)).abs() < 1e-14, "x = {x}");
            assert_eq!(v.im, 0.0);
        }
    }

    #[test]
    fn complex_agrees_with_real_just_off_the_axis() {
        for &x in &[-3.0, -0.7, 0.2, 0.8] {
            let a = li2_complex(Complex64::new(x, 1e-13)).unwrap();
            let b = li2_real(x).unwrap();
            assert!((a.re - b.re).abs() < 1e-11, "x = {x}");
        }
    }

    #[test]
    fn lower_lip_matches_limit_from_below() {
        for &x in &[1.5, 2.0, 7.0] {
            let below = li2_complex(Complex64::new(x, -1e-12)).unwrap();
            let on = li2_real(x).unwrap();
            assert!((below - on).norm() < 1e-9, "x = {x}");
        }
    }

    #[test]
    fn rejects_non_finite() {
        assert!(li2_real(f64::NAN).is_err());
        assert!(li2_complex(Complex64::new(f64::INFINITY, 0.0)).is_err());
        assert!(li2(1.5).is_err());
    }
}
