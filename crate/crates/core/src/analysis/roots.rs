use crate::error::{domain, Error, Result};

/// Brent's method on a sign-changing bracket.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) || !(tol > 0.0) {
        return domain(format!("bad root bracket [{lo}, {hi}] or tolerance {tol}"));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa * fb < 0.0) {
        return Err(Error::Bracket { lo, hi, f_lo: fa, f_hi: fb });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..500 {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if !fb.is_finite() {
            return domain(format!("function not finite at {b} while root finding"));
        }
    }
    Err(Error::Accuracy { estimate: b, error: (c - b).abs() })
}

/// Unique root above 1 of xⁿ − xᵐ − 1 for n > m > 0.
pub fn solve_trinomial(n: f64, m: f64) -> Result<f64> {
    if !(n > m && m > 0.0) || !n.is_finite() {
        return domain(format!("trinomial needs n > m > 0, got n = {n}, m = {m}"));
    }
    let f = |x: f64| x.powf(n) - x.powf(m) - 1.0;
    let mut hi = 2.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    find_root(f, 1.0, hi, 1e-15)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepSign {
    /// N-bonacci: x^{N+1} − 2x^N + 1 = 0.
    Minus,
    /// N-addinacci: x^{N+1} − 2x^N − 1 = 0.
    Plus,
}

/// Limiting ratio of the N-step recurrence F_i = 2F_{i−1} ∓ F_{i−N−1}.
pub fn solve_nstep(n: u32, sign: StepSign) -> Result<f64> {
    if n < 2 {
        return domain(format!("N-step constants need N >= 2, got {n}"));
    }
    let k = n as i32;
    // divided by x^N so the spurious root x = 1 of the minus case drops out of the bracket
    match sign {
        StepSign::Minus => find_root(|x: f64| x - 2.0 + x.powi(-k), 1.5, 2.0, 1e-15),
        StepSign::Plus => find_root(|x: f64| x - 2.0 - x.powi(-k), 2.0, 3.0, 1e-15),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_and_bracket_error() {
        let phi = find_root(|x| x * x - x - 1.0, 1.0, 2.0, 1e-15).unwrap();
        assert!((phi - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!(matches!(find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12), Err(Error::Bracket { .. })));
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| x.cos() - x;
        let a = find_root(f, 0.0, 1.0, 1e-13).unwrap();
        let b = find_root(f, 0.0, 1.0, 1e-13).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn trinomial_back_substitutes() {
        for &(n, m) in &[(2.0, 1.0), (3.0, 1.0), (4.0, 3.0), (4.0, 1.0), (3.0, 2.0), (1.01, 1.0)] {
            let x: f64 = solve_trinomial(n, m).unwrap();
            assert!((x.powf(n) - x.powf(m) - 1.0).abs() < 1e-13, "({n}, {m})");
        }
        assert!(solve_trinomial(1.0, 2.0).is_err());
    }

    #[test]
    fn nstep_roots() {
        let t = solve_nstep(3, StepSign::Minus).unwrap();
        assert!((t * t * t - t * t - t - 1.0).abs() < 1e-14);
        let phi = solve_nstep(2, StepSign::Minus).unwrap();
        assert!((phi - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        for n in [2, 3, 4, 7] {
            let x = solve_nstep(n, StepSign::Minus).unwrap();
            assert!((x - 1.0 - (1.0 - x.powi(1 - n as i32)).sqrt()).abs() < 1e-14);
        }
        assert!((solve_nstep(40, StepSign::Plus).unwrap() - 2.0).abs() < 1e-9);
        assert!((solve_nstep(40, StepSign::Minus).unwrap() - 2.0).abs() < 1e-9);
        assert!(solve_nstep(1, StepSign::Plus).is_err());
    }
}
