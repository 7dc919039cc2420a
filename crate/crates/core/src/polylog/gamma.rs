use std::f64::consts::PI;

use crate::error::{domain, Result};

const BERNOULLI: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

// B_{2k} / (2k)!
const EM: [f64; 11] = [
    8.3333333333333333e-2,
    -1.3888888888888889e-3,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
];

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ψ₁(x) = Σ_{n≥0} 1/(n+x)² for x > 0.
pub fn trigamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("trigamma needs finite x > 0, got {x}"));
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc += 1.0 / (y * y);
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut tail = inv + 0.5 * inv2;
    let mut p = inv;
    for b in BERNOULLI {
        p *= inv2;
        let t = b * p;
        tail += t;
        if t.abs() < 1e-18 * tail {
            break;
        }
    }
    Ok(acc + tail)
}

/// Γ(s) for s > 0 (Lanczos approximation, g = 7).
pub fn gamma_fn(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return domain(format!("gamma needs finite s > 0, got {s}"));
    }
    if s < 0.5 {
        return Ok(PI / ((PI * s).sin() * lanczos(1.0 - s)));
    }
    Ok(lanczos(s))
}

fn lanczos(s: f64) -> f64 {
    let x = s - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// Riemann ζ(s) for s > 1 by Euler–Maclaurin summation.
pub fn zeta_fn(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return domain(format!("zeta needs finite s > 1, got {s}"));
    }
    const N: usize = 16;
    let n = N as f64;
    let mut sum: f64 = (1..N).map(|k| (k as f64).powf(-s)).sum();
    let npow = n.powf(-s);
    sum += npow * n / (s - 1.0) + 0.5 * npow;
    // Rising factorial s(s+1)…(s+2k−2) times N^{−s−2k+1}
    let mut rising = s;
    let mut p = npow / n;
    for (k, c) in EM.iter().enumerate() {
        let t = c * rising * p;
        sum += t;
        if t.abs() < 1e-17 * sum {
            break;
        }
        let kk = (2 * k + 1) as f64;
        rising *= (s + kk) * (s + kk + 1.0);
        p /= n * n;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trigamma_recurrence_and_values() {
        let pi2 = PI * PI;
        assert!((trigamma(1.0).unwrap() - pi2 / 6.0).abs() < 1e-14);
        assert!((trigamma(0.5).unwrap() - pi2 / 2.0).abs() < 1e-13);
        for i in 1..=100 {
            let x = 0.1 * i as f64;
            let lhs = trigamma(x + 1.0).unwrap();
            let rhs = trigamma(x).unwrap() - 1.0 / (x * x);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs(), "x = {x}");
        }
        assert!(trigamma(0.0).is_err());
    }

    #[test]
    fn gamma_matches_factorials() {
        let mut f = 1.0;
        for n in 1..15 {
            assert!((gamma_fn(n as f64).unwrap() - f).abs() <= 1e-13 * f, "n = {n}");
            f *= n as f64;
        }
        assert!((gamma_fn(0.5).unwrap() - PI.sqrt()).abs() < 1e-14);
        assert!((gamma_fn(0.25).unwrap() - 3.625_609_908_221_908).abs() < 1e-13);
        assert!(gamma_fn(-1.0).is_err());
    }

    #[test]
    fn zeta_even_values() {
        let pi2 = PI * PI;
        assert!((zeta_fn(2.0).unwrap() - pi2 / 6.0).abs() < 1e-15);
        assert!((zeta_fn(4.0).unwrap() - pi2 * pi2 / 90.0).abs() < 1e-15);
        assert!((zeta_fn(3.0).unwrap() - super::super::zeta3()).abs() < 1e-15);
        assert!((zeta_fn(1.01).unwrap() - 100.577_943_338_497).abs() < 1e-9);
        assert!(zeta_fn(1.0).is_err());
    }
}
