//! Area ratios, medians, inverse pairs and the scale-factor analytics.

use std::f64::consts::PI;

use crate::analysis::{find_root, integrate, value_of, Limit, QuadratureSpec};
use crate::catalog::terms::{c, l, ln, lz, phi, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::gemini::{
    a_of_p, area_ratio_r, area_ratio_rxa, atot_of_a_p, critical_a, inverse_pair_prediction, median,
    median_rule_residuals, scale_fit, scale_fit_areas, total_area, value, GeminiParams,
};
use crate::polylog::{li2, ZETA2};
use crate::ComplexValue as C;

const LIMITING: (&str, &str) = ("area ratio", "limiting values for this ratio");
const KRIVINE: (&str, &str) = ("area ratio", "Grothendieck--Krivine constant");
const CRITICAL: (&str, &str) = ("middle square", "define the critical shape factor");
const DEGENERATE: (&str, &str) = ("middle square", "initial conditions for the degenerate form");
const NO_CONSTANT: (&str, &str) = ("middle square", "identity without the constant terms");
const COMMON_ROOT: (&str, &str) = ("middle square", "common root for the both identities");
const CONSTANT_FREE: (&str, &str) = ("middle square", "constant term free identities");
const MEDIAN: (&str, &str) = ("medians", "the formula for a median is given by");
const RULE1: (&str, &str) = ("medians", "is equal to the rectangle area");
const RULE2: (&str, &str) = ("medians", "always half of the area");
const LOG_A: (&str, &str) = ("medians", "the identity becomes extremely simple");
const SQUARE: (&str, &str) = ("medians", "the median equation is given by");
const SQUARE_TWO_TERM: (&str, &str) = ("medians", "We can derive another two-term identity based on the previous result");
const CUBE: (&str, &str) = ("medians", "If $n=3$, we get");
const INDETERMINATE: (&str, &str) = ("medians", "an indeterminate form");
const ASYMPTOTIC: (&str, &str) = ("medians", "asymptotic median equation");
const FOR_DEGENERATE: (&str, &str) = ("ratio for shifted limits", "For the degenerate form we can write");
const FUNDAMENTAL: (&str, &str) = ("ratio for shifted limits", "For the fundamental we get similarly");
const TWO_MORE: (&str, &str) = ("ratio for shifted limits", "two more exact values for the ratio");
const INVERSE_PAIR: (&str, &str) = ("inverse pairs", "an inverse gemini function pair");
const PAIR_TABLE: (&str, &str) = ("inverse pairs", "values for the inverse function pairs");
const SPECIAL: (&str, &str) = ("inverse pairs", "argument value -2.393308 for a dilogarithm is special");
const COMPLEX_PAIR: (&str, &str) = ("inverse pairs", "extremely simple complex valued two-term identity");
const DOMINATE: (&str, &str) = ("scale factor", "scale factor starts to dominate");
const IMPROPER: (&str, &str) = ("scale factor", "The result of this improper integral");
const SINGLE_TERM: (&str, &str) = ("scale factor", "single-term dilogarithm representation");
const FIT: (&str, &str) = ("scale factor", "fit an arbitrary gemini function");

static PAIR_N: [f64; 6] = [2.0, 3.0, 4.0, 5.0, 6.0, 7.0];

fn e_pi_sqrt6() -> f64 {
    (PI / 6f64.sqrt()).exp()
}

fn middle_square_root_check(x: f64) -> f64 {
    let lx = x.ln();
    lx * lx + 2.0 * li2(1.0 / x).unwrap_or(f64::NAN) - ZETA2 + li2(2.0 * x - x * x).unwrap_or(f64::NAN)
}

fn median_tail_quadrature(a: f64, x: f64) -> crate::Result<f64> {
    let p = GeminiParams::shape(a)?;
    integrate(
        |t| value(&p, t).unwrap_or(f64::NAN),
        &QuadratureSpec::new(Limit::Finite(x), Limit::PosInfinity),
    )
}

fn ratios_and_medians() -> Vec<E> {
    vec![
        E::closed("ratio_unit_closed_form", 11, KRIVINE, |_| {
            let d = (1.0 + 2f64.sqrt()).ln();
            Ok(c(area_ratio_r(1.0)? - PI2 / (4.0 * d * d)))
        }),
        E::closed("ratio_limit_two", 11, LIMITING, |_| Ok(c(area_ratio_r(1e300)? - 2.0))).limit(1e-3),
        E::closed("ratio_critical_three", 11, CRITICAL, |_| Ok(c(area_ratio_r(value_of("a_c"))? - 3.0))),
        E::closed("middle_square_root_two", 11, DEGENERATE, |_| {
            Ok(c(find_root(middle_square_root_check, 1.2, 2.5, 1e-15)? - 2.0))
        }),
        E::closed("e_pi_sqrt6_three_term", 11, NO_CONSTANT, |_| {
            let k = e_pi_sqrt6();
            Ok(l(2.0 - k)? - l(1.0 / k)? - 0.5 * l(2.0 * k - k * k)?)
        }),
        E::closed("e_pi_sqrt6_four_term", 11, COMMON_ROOT, |_| {
            let k = e_pi_sqrt6();
            Ok(l(k)? + l(2.0 - 1.0 / k)? + l(1.0 - 2.0 * k)? - l(2.0 * k - 1.0)?)
        })
        .lower_lip(),
        E::closed("e_pi_sqrt6_four_term_reciprocal", 11, COMMON_ROOT, |_| {
            let k = 1.0 / e_pi_sqrt6();
            Ok(l(k)? + l(2.0 - 1.0 / k)? + l(1.0 - 2.0 * k)? - l(2.0 * k - 1.0)?)
        })
        .lower_lip(),
        E::param("constant_free_four_term", 11, CONSTANT_FREE, vec![D::log("k", 0.01, 100.0)], |p| {
            let k = p[0];
            Ok(l(1.0 / k - 1.0)? - l(1.0 - 1.0 / k)? - l(1.0 - 2.0 * k)? + l(2.0 * k - 1.0)? - PI2 / 4.0
                + ln(1.0 / k - 1.0) * ln(2.0 * k - 1.0))
        })
        .lower_lip(),
        E::param("median_halves_area", 11, MEDIAN, vec![D::linear("a", -0.99, 50.0)], |p| {
            let a = p[0];
            let half = 0.5 * total_area(&GeminiParams::shape(a)?)?;
            Ok(c(median_tail_quadrature(a, median(a)?)? - half))
        }),
        E::param("median_rule_rectangle", 11, RULE1, vec![D::linear("a", -0.99, 50.0)], |p| {
            Ok(c(median_rule_residuals(p[0])?.0))
        }),
        E::param("median_rule_half_square", 11, RULE2, vec![D::linear("a", -0.99, 50.0)], |p| {
            Ok(c(median_rule_residuals(p[0])?.1))
        }),
        E::closed("median_equals_log_a", 11, LOG_A, |_| {
            let a = value_of("median_log_a");
            Ok(c(median(a)? - a.ln()))
        }),
        E::closed("median_of_square", 11, SQUARE, |_| {
            let m = value_of("median_square");
            Ok(c(median(m * m)? - m.ln()))
        }),
        E::closed("median_square_equation", 11, SQUARE, |_| {
            let m = value_of("median_square");
            Ok(-l(-m)? + l(1.0 / m)? + 0.5 * l(-m * m)? - PI2 / 12.0)
        }),
        E::closed("median_square_two_term", 11, SQUARE_TWO_TERM, |_| {
            let m = value_of("median_square");
            let m2 = m * m;
            Ok(l(2.0 / (m2 + 1.0))? - l((m2 - 1.0) / (2.0 * m2))? + PI2 / 12.0 + ln(m) * ln(m)
                - 2.0 * ln(m) * ln(2.0 * m2 / (m2 - 1.0))
                + 0.5 * ln((m2 + 1.0) / 2.0) * ln((2.0 * m2 + 2.0) / (m2 * m2 - 2.0 * m2 + 1.0)))
        }),
        E::closed("median_of_cube", 11, CUBE, |_| {
            let m = value_of("median_cube");
            Ok(c(median(m * m * m)? - m.ln()))
        }),
        E::closed("median_cube_equation", 11, CUBE, |_| {
            let m = value_of("median_cube");
            Ok(-l(-m * m)? + l(1.0 / m)? + 0.5 * l(-m * m * m)? - PI2 / 12.0)
        }),
        E::closed("median_asymptotic_indeterminate", 11, INDETERMINATE, |_| {
            let m: f64 = 1e6;
            let s = 2f64.sqrt();
            Ok(0.5 * l(-m.powf(s + 2.0))? - l(-m.powf(s + 1.0))? - PI2 / 12.0)
        })
        .limit(1e-3),
        E::closed("median_asymptotic_equation", 11, ASYMPTOTIC, |_| {
            let m: f64 = 1e6;
            let s = 2f64.sqrt();
            Ok(0.5 * l(-m.powf(s))? - l(-m)? - PI2 / 12.0)
        })
        .limit(1e-3),
    ]
}

fn shifted_ratios_and_pairs() -> Vec<E> {
    vec![
        E::closed("ratio_phi_degenerate", 11, FOR_DEGENERATE, |_| Ok(c(area_ratio_rxa(phi(), 0.0)? - 5.0))),
        E::closed("ratio_phi_fundamental", 11, FUNDAMENTAL, |_| Ok(c(area_ratio_rxa(phi(), 1.0)? - 3.0))),
        E::closed("ratio_phi_phi", 11, TWO_MORE, |_| {
            let (p, lp, l2) = (phi(), phi().ln(), 2f64.ln());
            let closed = (8.0 * PI2 + 30.0 * lp * lp) / (3.0 * PI2 - 60.0 * l2 * l2 - 30.0 * (p / 4.0).ln() * (2.0 * p).ln());
            Ok(c(area_ratio_rxa(p, p)? - closed))
        }),
        E::closed("ratio_sqrt_phi_phi", 11, TWO_MORE, |_| {
            let (p, lp) = (phi(), phi().ln());
            let sp = p.sqrt();
            let closed = (16.0 * PI2 + 60.0 * lp * lp)
                / (10.0 * PI2 - 105.0 * lp * lp + 30.0 * lp * ((sp + p) / (sp - 1.0)).ln());
            Ok(c(area_ratio_rxa(sp, p)? - closed))
        }),
        E::param("inverse_pair", 11, INVERSE_PAIR, vec![D::points("n", &PAIR_N)], |p| {
            let pair = inverse_pair_prediction(p[0])?;
            let a = pair.solve_a()?;
            Ok(c(pair.inverse_residual(a)?))
        }),
        E::param("inverse_pair_table", 11, PAIR_TABLE, vec![D::points("n", &PAIR_N)], |p| {
            let (a_printed, x_printed) = match p[0] as u32 {
                2 => (3.531384, 0.6086340),
                3 => (7.900377, 0.6727353),
                4 => (14.759176, 0.7338999),
                5 => (24.941163, 0.7893570),
                6 => (39.482044, 0.8393198),
                _ => (59.654746, 0.8844966),
            };
            let pair = inverse_pair_prediction(p[0])?;
            let a = pair.solve_a()?;
            Ok(C::new(a - a_printed, pair.abscissa(a)?.ln() - x_printed))
        })
        .tol_floor(1e-6),
        E::closed("inverse_pair_golden", 11, INVERSE_PAIR, |_| {
            let p = phi();
            let lp = p.ln();
            let n = 22.0 * PI2 / (7.0 * PI2 - 15.0 * lp * lp) - 2.0;
            Ok(c(inverse_pair_prediction(n)?.direct_residual(p)?))
        }),
        E::closed("inverse_pair_pi2_only", 11, SPECIAL, |_| {
            let a = find_root(|a| li2(-a).unwrap_or(f64::NAN) + ZETA2, 1.0, 4.0, 1e-15)?;
            Ok(l(-1.0 / a)? + 0.5 * ln(a) * ln(a))
        }),
        E::closed("complex_pair_e_pi_sqrt3", 11, COMPLEX_PAIR, |_| {
            let e = C::from_polar(1.0, PI / 3f64.sqrt());
            Ok(lz(-e)? + lz(-1.0 / e)?)
        }),
    ]
}

fn scale_factor() -> Vec<E> {
    vec![
        E::closed("critical_shape_factor_p2", 12, DOMINATE, |_| {
            let (a, p) = (value_of("critical_a_p2"), 2.0);
            let s = a + p;
            Ok(c(a.ln_1p() / (a * s * s) - 2.0 * (ZETA2 - li2(-a)?) / (s * s * s)))
        }),
        E::param("area_integral_closed_form", 12, IMPROPER, vec![D::linear("p", 1.2, 10.0).with_count(12)], |p| {
            let p = p[0];
            let f = |a: f64| atot_of_a_p(a, p).unwrap_or(f64::NAN);
            let near = integrate(f, &QuadratureSpec::finite(-1.0, 0.0))?;
            let far = integrate(f, &QuadratureSpec::new(Limit::Finite(0.0), Limit::PosInfinity))?;
            Ok(c(near + far - a_of_p(p)?))
        }),
        E::closed("median_at_zero_half_split", 12, SINGLE_TERM, |_| {
            let p = value_of("p_median");
            let f = |a: f64| atot_of_a_p(a, p).unwrap_or(f64::NAN);
            Ok(c(integrate(f, &QuadratureSpec::finite(-1.0, 0.0))? - 0.5 * a_of_p(p)?))
        }),
        E::closed("maximum_total_area", 12, DOMINATE, |_| {
            let p = PI2 / 3.0;
            Ok(C::new(atot_of_a_p(0.0, p)? - 3.0 / (2.0 * PI2), critical_a(p)?))
        }),
        E::closed("area_fit_scale", 12, FIT, |_| Ok(c(scale_fit(1.0, 0.0)? - 1.5f64.sqrt()))),
        E::closed("area_fit_zero_sum", 12, FIT, |_| {
            let f = scale_fit_areas(1.0, 0.0)?;
            Ok(c(f.head + f.middle + f.tail))
        }),
        E::closed("area_fit_half_split", 12, FIT, |_| {
            let f = scale_fit_areas(1.0, 0.0)?;
            Ok(C::new(f.head - f.tail, f.head + 0.5 * f.middle))
        }),
    ]
}

pub(super) fn entries() -> Vec<E> {
    let mut v = ratios_and_medians();
    v.extend(shifted_ratios_and_pairs());
    v.extend(scale_factor());
    v
}
