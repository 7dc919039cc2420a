use serde::Serialize;

use super::{antiderivative, fixed_point, symmetric_partner, total_area, GeminiParams};
use crate::analysis::find_root;
use crate::error::{domain, Result};
use crate::polylog::{li2, ZETA2};

fn tail(a: f64, m: f64) -> Result<f64> {
    Ok(li2(1.0 / m)? - li2(-a / m)?)
}

/// Median abscissa ln m: the area beyond it is half of the total (b = 1).
pub fn median(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= -1.0 {
        return domain(format!("median needs a > -1, got {a}"));
    }
    let half = 0.5 * (ZETA2 - li2(-a)?);
    let h = |m: f64| tail(a, m).map(|t| t - half).unwrap_or(f64::NAN);
    let mut hi = 2.0;
    while h(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return domain(format!("median bracket did not close for a = {a}"));
        }
    }
    Ok(find_root(h, 1.0, hi, 1e-15)?.ln())
}

/// (A_c − A_r, A_{1/2} − A₀/2): the area between the median and its partner
/// against their rectangle, and the area between the median and the fixed point
/// against half the middle square.
pub fn median_rule_residuals(a: f64) -> Result<(f64, f64)> {
    let x1 = median(a)?;
    let x2 = symmetric_partner(a, x1)?;
    let x0 = fixed_point(a)?;
    let p = GeminiParams::shape(a)?;
    let f1 = antiderivative(&p, x1)?;
    let rule1 = antiderivative(&p, x2)? - f1 - x1 * x2;
    let rule2 = antiderivative(&p, x0)? - f1 - 0.5 * x0 * x0;
    Ok((rule1, rule2))
}

/// Coefficients of Li₂(−a) = c₁·π²/6 + c₂·ln²a and Li₂(−1/a) = d₁·π²/6 + d₂·ln²a for
/// a pair whose areas stand in the ratio n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InversePair {
    pub n: f64,
    pub direct_pi2: f64,
    pub direct_ln2: f64,
    pub inverse_pi2: f64,
    pub inverse_ln2: f64,
}

pub fn inverse_pair_prediction(n: f64) -> Result<InversePair> {
    if !n.is_finite() || n <= 0.0 {
        return domain(format!("inverse pair needs n > 0, got {n}"));
    }
    let k = n + 1.0;
    Ok(InversePair {
        n,
        direct_pi2: -(2.0 * n - 1.0) / k,
        direct_ln2: -0.5 * n / k,
        inverse_pi2: (n - 2.0) / k,
        inverse_ln2: -0.5 / k,
    })
}

impl InversePair {
    pub fn direct_residual(&self, a: f64) -> Result<f64> {
        let l = a.ln();
        Ok(li2(-a)? - self.direct_pi2 * ZETA2 - self.direct_ln2 * l * l)
    }

    pub fn inverse_residual(&self, a: f64) -> Result<f64> {
        let l = a.ln();
        Ok(li2(-1.0 / a)? - self.inverse_pi2 * ZETA2 - self.inverse_ln2 * l * l)
    }

    /// The shape factor a > 1/2 solving the direct relation.
    pub fn solve_a(&self) -> Result<f64> {
        let f = |a: f64| self.direct_residual(a).unwrap_or(f64::NAN);
        let mut hi = 2.0;
        while f(hi) > 0.0 {
            hi *= 2.0;
            if hi > 1e300 {
                return domain(format!("inverse pair bracket did not close for n = {}", self.n));
            }
        }
        find_root(f, 0.5, hi, 1e-15)
    }

    /// Crossing abscissa X > 1 of the pair: ln((X+a)/(X−1)) = n·ln((X+1/a)/(X−1)).
    pub fn abscissa(&self, a: f64) -> Result<f64> {
        if self.n <= 1.0 || a <= self.n {
            return domain(format!("abscissa needs n > 1 and a > n, got n = {}, a = {a}", self.n));
        }
        let n = self.n;
        let g = |x: f64| {
            let d = x - 1.0;
            ((x + a) / d).ln() - n * ((x + 1.0 / a) / d).ln()
        };
        let mut hi = 2.0;
        while g(hi) < 0.0 {
            hi *= 2.0;
            if hi > 1e300 {
                return domain(format!("abscissa bracket did not close for n = {n}"));
            }
        }
        find_root(g, 1.0 + 1e-12, hi, 1e-15)
    }
}

/// Total-area ratio of the pair (a, 1/a).
pub fn pair_area_ratio(a: f64) -> Result<f64> {
    Ok(total_area(&GeminiParams::shape(a)?)? / total_area(&GeminiParams::shape(1.0 / a)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{integrate, Limit, QuadratureSpec};
    use crate::gemini::value;

    fn tail_by_quadrature(a: f64, x: f64) -> f64 {
        let p = GeminiParams::shape(a).unwrap();
        let spec = QuadratureSpec::new(Limit::Finite(x), Limit::PosInfinity);
        integrate(|t| if t > 0.0 { value(&p, t).unwrap() } else { 0.0 }, &spec).unwrap()
    }

    #[test]
    fn median_halves_the_area() {
        for &a in &[-0.9, 0.0, 1.0, 5.0, 40.0] {
            let x = median(a).unwrap();
            let total = total_area(&GeminiParams::shape(a).unwrap()).unwrap();
            assert!((tail_by_quadrature(a, x) - 0.5 * total).abs() < 1e-9, "a = {a}");
        }
        assert!(median(-1.0).is_err());
    }

    #[test]
    fn median_closed_cases() {
        let a = 1.798533;
        assert!((median(a).unwrap() - a.ln()).abs() < 1e-5);
        let m: f64 = 2.019283;
        assert!((median(m * m).unwrap() - m.ln()).abs() < 1e-5);
        let m: f64 = 2.905862;
        assert!((median(m.powi(3)).unwrap() - m.ln()).abs() < 1e-5);
    }

    #[test]
    fn rules_against_quadrature() {
        for &a in &[0.0, 1.0, 5.0] {
            let (r1, r2) = median_rule_residuals(a).unwrap();
            assert!(r1.abs() < 1e-9 && r2.abs() < 1e-9, "a = {a}: {r1} {r2}");
            // independent: area between limits from the integrand itself
            let x1 = median(a).unwrap();
            let x2 = symmetric_partner(a, x1).unwrap();
            let between = tail_by_quadrature(a, x1) - tail_by_quadrature(a, x2);
            assert!((between - x1 * x2).abs() < 1e-9);
        }
    }

    #[test]
    fn inverse_pairs() {
        let table = [
            (2.0, 3.531384, 1.837919),
            (3.0, 7.900377, 1.959590),
            (4.0, 14.759176, 2.083189),
            (5.0, 24.941163, 2.201980),
        ];
        for &(n, a_ref, x_ref) in &table {
            let pair = inverse_pair_prediction(n).unwrap();
            let a = pair.solve_a().unwrap();
            assert!((a - a_ref).abs() < 1e-5, "n = {n}: {a}");
            assert!(pair.inverse_residual(a).unwrap().abs() < 1e-12);
            assert!((pair_area_ratio(a).unwrap() - n).abs() < 1e-11);
            let x = pair.abscissa(a).unwrap();
            assert!((x - x_ref).abs() < 1e-5, "n = {n}: {x}");
            let d = x - 1.0;
            assert!((((x + a) / d).ln() - n * ((x + 1.0 / a) / d).ln()).abs() < 1e-12);
        }
        let one = inverse_pair_prediction(1.0).unwrap();
        assert!((one.solve_a().unwrap() - 1.0).abs() < 1e-14);
        assert!(one.abscissa(1.0).is_err());
        assert!(inverse_pair_prediction(0.0).is_err());
    }
}
