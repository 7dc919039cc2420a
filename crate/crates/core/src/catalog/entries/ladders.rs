//! Pisot-number ladders, the k₀ trinomial constant and N-step ladders.

use std::f64::consts::SQRT_2;

use crate::analysis::{integrate, solve_nstep, value_of, QuadratureSpec, StepSign};
use crate::catalog::terms::{c, ladder, l, ln, phi, trinomial, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::gemini::rotated_degenerate;

const PLASTIC: (&str, &str) = ("plastic constant", "related to the plastic constant $P$");
const SEMI: (&str, &str) = ("plastic constant", "can also be called a semi-trivial");
const SIMILAR: (&str, &str) = ("plastic constant", "a similar kind of two term identity");
const TRIVIAL: (&str, &str) = ("plastic constant", "which can be trivially derived");
const P_LADDER: (&str, &str) = ("plastic constant", "Several ladders can be derived");
const SUPERGOLDEN: (&str, &str) = ("supergolden ratio", "derive a ladder by using");
const THETA: (&str, &str) = ("quartic Pisot number", "generate a six-term ladder");
const A4: (&str, &str) = ("quartic non-Pisot constant", "without being a Pisot number");
const A4_SEVEN: (&str, &str) = ("quartic non-Pisot constant", "has seven dilogarithm terms");
const TRINOMIAL: (&str, &str) = ("trinomial identity", "general identity formula based on");
const K0: (&str, &str) = ("irrational trinomial constant", "satisfies the trinomial equation identity");
const SECTOR: (&str, &str) = ("irrational trinomial constant", "We can obtain the same area");
const K0_THIRD: (&str, &str) = ("irrational trinomial constant", "third two-term identity for the constant");
const STAR: (&str, &str) = ("irrational trinomial constant", "area of this star like figure");
const OCTAGON: (&str, &str) = ("irrational trinomial constant", "area of the octagon");
const BONACCI: (&str, &str) = ("N-step constants", "contains only three dilogarithm terms");
const ADDINACCI: (&str, &str) = ("N-step constants", "includes five dilogarithm terms");
const ADDINACCI4: (&str, &str) = ("N-step constants", "corresponding to the 4-addinacci constant");
const TRIB1: (&str, &str) = ("N-step constants", "three-term 3-bonacci constant ladder");
const TRIB2: (&str, &str) = ("N-step constants", "another tribonacci ladder");
const TRIB3: (&str, &str) = ("N-step constants", "Combining these two formulae");

static BONACCI_N: [f64; 4] = [2.0, 3.0, 4.0, 5.0];
static ADDINACCI_N: [f64; 3] = [2.0, 3.0, 4.0];

fn plastic() -> (f64, f64) {
    let p = value_of("plastic");
    (p, p.ln())
}

fn supergolden() -> (f64, f64) {
    let s = value_of("supergolden");
    (s, s.ln())
}

fn theta1() -> (f64, f64) {
    let t = value_of("theta1");
    (t, t.ln())
}

fn a4() -> (f64, f64) {
    let a = value_of("a4");
    (a, a.ln())
}

fn k0() -> (f64, f64) {
    let k = value_of("k0");
    (k, k.ln())
}

fn pisot() -> Vec<E> {
    vec![
        E::closed("plastic_semi_trivial", 7, SEMI, |_| {
            let (p, lp) = plastic();
            Ok(l(1.0 / p)? + 0.5 * l(-1.0 / p)? - PI2 / 12.0 + 2.0 * lp * lp)
        }),
        E::closed("plastic_half_square", 7, SIMILAR, |_| {
            let (p, lp) = plastic();
            Ok(l(1.0 / p)? + 0.5 * l(1.0 / (p * p))? - PI2 / 6.0 + 4.0 * lp * lp)
        }),
        E::closed("plastic_minus_one", 7, TRIVIAL, |_| {
            let (p, _) = plastic();
            Ok(l(p - 1.0)? - l(p.powi(-4))?)
        }),
        E::closed("plastic_square_minus_two", 7, TRIVIAL, |_| {
            let (p, _) = plastic();
            Ok(l(p * p - 2.0)? - l(-p.powi(-5))?)
        }),
        E::closed("plastic_cube", 7, TRIVIAL, |_| {
            let (p, lp) = plastic();
            Ok(l(1.0 / p)? - 0.5 * l(p.powi(-3))? - PI2 / 12.0 + lp * lp)
        }),
        E::closed("plastic_fifth", 7, TRIVIAL, |_| {
            let (p, lp) = plastic();
            Ok(l(1.0 / p)? + l(p.powi(-5))? - PI2 / 6.0 + 5.0 * lp * lp)
        }),
        E::closed("plastic_minus_fourth", 7, TRIVIAL, |_| {
            let (p, lp) = plastic();
            Ok(l(1.0 / p)? - l(-p.powi(-4))? - PI2 / 6.0 + 4.5 * lp * lp)
        }),
        E::closed("plastic_fifth_minus_fourth", 7, PLASTIC, |_| {
            let (p, lp) = plastic();
            Ok(l(p.powi(-5))? + l(-p.powi(-4))? + 0.5 * lp * lp)
        }),
        E::closed("plastic_ladder", 7, P_LADDER, |_| {
            let (p, lp) = plastic();
            Ok(ladder(p, &[(2.0, 3), (2.0, 4), (2.0, 5), (-1.0, 8)])? - PI2 / 3.0 + 15.0 * lp * lp)
        }),
        E::closed("supergolden_ladder", 7, SUPERGOLDEN, |_| {
            let (s, ls) = supergolden();
            Ok(ladder(s, &[(4.0, 2), (-2.0, 3), (4.0, 5), (1.0, 6), (-2.0, 10)])? - PI2 / 3.0 + 8.0 * ls * ls)
        }),
        E::closed("supergolden_minus_one", 7, SUPERGOLDEN, |_| {
            let (s, _) = supergolden();
            Ok(l(s - 1.0)? - l(s.powi(-2))?)
        }),
        E::closed("supergolden_square_minus_two", 7, SUPERGOLDEN, |_| {
            let (s, _) = supergolden();
            Ok(l(s * s - 2.0)? - l(s.powi(-5))?)
        }),
        E::closed("supergolden_minus_square", 7, SUPERGOLDEN, |_| {
            let (s, ls) = supergolden();
            Ok(l(1.0 / s)? - l(-s.powi(-2))? - PI2 / 6.0 + 2.5 * ls * ls)
        }),
        E::closed("supergolden_cube", 7, SUPERGOLDEN, |_| {
            let (s, ls) = supergolden();
            Ok(l(1.0 / s)? + l(s.powi(-3))? - PI2 / 6.0 + 3.0 * ls * ls)
        }),
        E::closed("supergolden_combined", 7, SUPERGOLDEN, |_| {
            let (s, ls) = supergolden();
            Ok(l(s.powi(-3))? + l(-s.powi(-2))? + 0.5 * ls * ls)
        }),
        E::closed("supergolden_combined_radical", 7, SUPERGOLDEN, |_| {
            let (s, ls) = supergolden();
            let l2 = 2f64.ln();
            Ok(l(3.0 - 2.0 * s)? + l(-0.5 * s.powi(-5))?
                - ln(s * s / 2.0) * ln(3.0 * s.powi(7) - 2.0 * s.powi(8))
                + 0.5 * l2 * l2
                - 2.0 * l2 * ls
                + 2.0 * ls * ls)
        }),
        E::closed("theta1_ladder", 7, THETA, |_| {
            let (t, lt) = theta1();
            let (u, v) = (t * t + 1.0, 1.0 + t.powi(7));
            Ok(ladder(t, &[(2.0, 1), (2.0, 2), (1.0, 4), (-2.0, 5), (-2.0, 7), (1.0, 14)])? - PI2 / 3.0
                + 2.0 * lt * u.ln()
                + 45.0 * lt * lt
                + v.ln() * (v / t.powi(14)).ln()
                - u.ln() * (u / t.powi(4)).ln())
        }),
        E::closed("theta1_minus_one", 7, THETA, |_| {
            let (t, _) = theta1();
            Ok(l(t - 1.0)? - l(t.powi(-3))?)
        }),
        E::closed("theta1_fourth", 7, THETA, |_| {
            let (t, lt) = theta1();
            Ok(l(1.0 / t)? + l(t.powi(-4))? - PI2 / 6.0 + 4.0 * lt * lt)
        }),
        E::closed("theta1_minus_cube", 7, THETA, |_| {
            let (t, lt) = theta1();
            Ok(l(1.0 / t)? - l(-t.powi(-3))? - PI2 / 6.0 + 3.5 * lt * lt)
        }),
        E::closed("theta1_combined", 7, THETA, |_| {
            let (t, lt) = theta1();
            Ok(l(t.powi(-4))? + l(-t.powi(-3))? + 0.5 * lt * lt)
        }),
        E::closed("a4_ladder", 7, A4, |_| {
            let (a, la) = a4();
            let (u, v) = (a * a + 1.0, a.powi(5) + 1.0);
            Ok(ladder(a, &[(2.0, 1), (4.0, 2), (-2.0, 3), (-1.0, 4), (-2.0, 5), (1.0, 10)])? - PI2 / 3.0
                + 21.0 * la * la
                + v.ln() * (v / a.powi(10)).ln()
                + 2.0 * la * u.ln()
                - u.ln() * (u / a.powi(4)).ln())
        }),
        E::closed("a4_seven_term_ladder", 7, A4_SEVEN, |_| {
            let (a, la) = a4();
            Ok(ladder(a, &[(2.0, 1), (1.0, 2), (2.0, 3), (-1.0, 4), (2.0, 5), (2.0, 7), (-1.0, 10)])?
                - 2.0 * PI2 / 3.0
                + 38.0 * la * la)
        }),
        E::closed("trinomial_golden", 7, TRINOMIAL, |_| trinomial(2.0, 1.0, phi())),
        E::closed("trinomial_plastic_3_1", 7, TRINOMIAL, |_| trinomial(3.0, 1.0, plastic().0)),
        E::closed("trinomial_plastic_5_4", 7, TRINOMIAL, |_| trinomial(5.0, 4.0, plastic().0)),
        E::closed("trinomial_supergolden", 7, TRINOMIAL, |_| trinomial(3.0, 2.0, supergolden().0)),
        E::closed("trinomial_theta1", 7, TRINOMIAL, |_| trinomial(4.0, 3.0, theta1().0)),
        E::closed("trinomial_a4", 7, TRINOMIAL, |_| trinomial(4.0, 1.0, a4().0)),
    ]
}

fn k0_family() -> Vec<E> {
    vec![
        E::closed("k0_trinomial", 8, K0, |_| trinomial(SQRT_2 + 1.0, SQRT_2, k0().0)),
        E::closed("k0_trinomial_log_form", 8, K0, |_| {
            let (k, lk) = k0();
            Ok(l(1.0 / k)? + l(-k.powf(SQRT_2))? + lk * ln(k * k.sqrt() / (k - 1.0)))
        }),
        E::closed("k0_sector_area", 8, SECTOR, |_| {
            let (k, lk) = k0();
            let area = integrate(|x| rotated_degenerate(x).unwrap_or(f64::NAN), &QuadratureSpec::finite(-lk, lk))?;
            Ok(l(1.0 / k)? - l((k - 1.0) / k)? - area + lk * ln(k / (k - 1.0)))
        }),
        E::closed("k0_third", 8, K0_THIRD, |_| {
            let (k, lk) = k0();
            Ok(l(k.powf(-(SQRT_2 + 1.0)))? + l(-k.powf(-SQRT_2))? + 0.5 * lk * lk)
        }),
        E::closed("k0_star_area", 8, STAR, |_| {
            let (k, lk) = k0();
            Ok(8.0 * lk * ln(k / (k - 1.0)) + 16.0 * l((k - 1.0) / k)? - 9.837682)
        })
        .tol_floor(1e-6),
        E::closed("k0_octagon_ratio", 8, OCTAGON, |_| {
            let (k, lk) = k0();
            Ok(c(lk / (k / (k - 1.0)).ln() - (SQRT_2 - 1.0)))
        }),
    ]
}

fn nstep() -> Vec<E> {
    vec![
        E::param("bonacci_ladder", 8, BONACCI, vec![D::points("N", &BONACCI_N)], |p| {
            let n = p[0] as i32;
            let x = solve_nstep(n as u32, StepSign::Minus)?;
            let lx = x.ln();
            Ok(ladder(x, &[(2.0, 1), (1.0, n - 1), (-2.0, n)])? - PI2 / 6.0 + lx * lx)
        }),
        E::param("addinacci_ladder", 8, ADDINACCI, vec![D::points("N", &ADDINACCI_N)], |p| {
            let n = p[0] as i32;
            let x = solve_nstep(n as u32, StepSign::Plus)?;
            let lx = x.ln();
            Ok(ladder(x, &[(4.0, 1), (-2.0, n - 1), (4.0, n), (1.0, 2 * n - 2), (-2.0, 2 * n)])? - PI2 / 3.0
                + 2.0 * lx * lx)
        }),
        E::closed("addinacci4_constant", 8, ADDINACCI4, |_| {
            let x = value_of("addinacci4");
            Ok(c(x.powi(5) - 2.0 * x.powi(4) - 1.0))
        }),
        E::closed("tribonacci_three_term", 8, TRIB1, |_| {
            let t = value_of("tribonacci");
            let lt = t.ln();
            Ok(ladder(t, &[(2.0, 1), (1.0, 2), (-2.0, 3)])? - PI2 / 6.0 + lt * lt)
        }),
        E::closed("tribonacci_four_term", 8, TRIB2, |_| {
            let t = value_of("tribonacci");
            let lt = t.ln();
            Ok(ladder(t, &[(2.0, 1), (2.0, 2), (2.0, 3), (-1.0, 4)])? - PI2 / 3.0 + 3.0 * lt * lt)
        }),
        E::closed("tribonacci_combined", 8, TRIB3, |_| {
            let t = value_of("tribonacci");
            let lt = t.ln();
            Ok(ladder(t, &[(6.0, 1), (5.0, 2), (2.0, 3), (-2.0, 4)])? - 5.0 * PI2 / 6.0 + 7.0 * lt * lt)
        }),
    ]
}

pub(super) fn entries() -> Vec<E> {
    let mut v = pisot();
    v.extend(k0_family());
    v.extend(nstep());
    v
}
