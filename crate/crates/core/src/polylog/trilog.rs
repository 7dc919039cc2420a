use super::{consts::zeta3, EvalOptions, ZETA2};
use crate::error::{domain, Result};

// ζ(3−k)/k! for k = 4, 6, 8, ...; the odd k ≥ 5 coefficients vanish.
const LOG_SERIES: [f64; 11] = [
    -3.4722222222222222e-3,
    1.1574074074074074e-5,
    -9.8418997228521038e-8,
    1.1482216343327454e-9,
    -1.5815724990809166e-11,
    2.4195009792525152e-13,
    -3.9828977769894877e-15,
    6.9233666183059291e-17,
    -1.2552722304499773e-18,
    2.3537540027684652e-20,
    -4.536398903458687e-22,
];

pub fn li3_real(x: f64) -> Result<f64> {
    li3_real_with(x, &EvalOptions::default())
}

/// Trilogarithm for real `x ≤ 1`.
pub fn li3_real_with(x: f64, opts: &EvalOptions) -> Result<f64> {
    if !x.is_finite() || x > 1.0 {
        return domain(format!("li3 needs finite x <= 1, got {x}"));
    }
    opts.validate()?;
    Ok(eval(x, opts))
}

fn eval(x: f64, opts: &EvalOptions) -> f64 {
    if x == 1.0 {
        zeta3()
    } else if x < -1.0 {
        let l = (-x).ln();
        eval(1.0 / x, opts) - ZETA2 * l - l * l * l / 6.0
    } else if x.abs() <= 0.5 {
        direct(x, opts)
    } else if x > 0.5 {
        near_one(x.ln(), opts)
    } else {
        0.25 * eval(x * x, opts) - eval(-x, opts)
    }
}

fn direct(x: f64, opts: &EvalOptions) -> f64 {
    let mut sum = 0.0;
    let mut p = 1.0;
    for k in 1..=opts.max_terms {
        p *= x;
        let kf = k as f64;
        let t = p / (kf * kf * kf);
        sum += t;
        if opts.negligible(t, sum) {
            break;
        }
    }
    sum
}

// Expansion in μ = ln x, valid for |μ| < 2π.
fn near_one(mu: f64, opts: &EvalOptions) -> f64 {
    let mu2 = mu * mu;
    let mut sum = zeta3() + ZETA2 * mu + (1.5 - (-mu).ln()) * 0.5 * mu2 - mu2 * mu / 12.0;
    let mut p = mu2;
    for c in LOG_SERIES {
        p *= mu2;
        let t = c * p;
        sum += t;
        if opts.negligible(t, sum) {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_direct_series_across_the_switch() {
        let opts = EvalOptions::default();
        for &x in &[0.49f64, 0.51, 0.6, -0.6, -0.49] {
            let brute: f64 = (1..5000).map(|k| x.powi(k) / (k as f64).powi(3)).sum();
            assert!((eval(x, &opts) - brute).abs() < 1e-15, "x = {x}");
        }
    }

    #[test]
    fn rejects_above_one() {
        assert!(li3_real(1.0001).is_err());
        assert!(li3_real(f64::NAN).is_err());
    }
}
