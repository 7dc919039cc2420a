//! Fundamental form, generating identities and the classical relations.

use crate::analysis::{integrate, Limit, QuadratureSpec};
use crate::catalog::terms::{c, first_fixed_point, five_term, l, ln, second_fixed_point, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::gemini::{antiderivative, value, GeminiParams};

const FUNDAMENTAL: (&str, &str) = ("fundamental form", "integral of the fundamental form");
const TOTAL: (&str, &str) = ("fundamental form", "bounded by the fundamental form");
const FIVE: (&str, &str) = ("five-term identity", "final form of the five-term gemini-identity");
const FP1: (&str, &str) = ("fixed-point identities", "first fixed-point gemini identity");
const FP2: (&str, &str) = ("fixed-point identities", "express the shape factor as a function");
const REFLECTION: (&str, &str) = ("reflection", "setting the shape factor $a$ equal to zero");
const INVERSION: (&str, &str) = ("inversion", "based on two equal integrals");
const LANDEN: (&str, &str) = ("Landen", "based on the equal segment areas");
const DUPLICATION: (&str, &str) = ("duplication", "outcome is simply the duplication identity");
const CANCEL_A: (&str, &str) = ("cancellation identities", "following new three-term identity");
const CANCEL_B: (&str, &str) = ("cancellation identities", "three-term dilogarithm relation such that");

fn unit(x: f64) -> f64 {
    value(&GeminiParams::default(), x).unwrap_or(f64::NAN)
}

pub(super) fn entries() -> Vec<E> {
    vec![
        E::param("fundamental_integral", 1, FUNDAMENTAL, vec![D::log("x", 0.05, 10.0)], |p| {
            let tail = integrate(unit, &QuadratureSpec::new(Limit::Finite(p[0]), Limit::PosInfinity))?;
            Ok(c(tail + antiderivative(&GeminiParams::default(), p[0])?))
        }),
        E::closed("total_area_fundamental", 1, TOTAL, |_| {
            let head = integrate(unit, &QuadratureSpec::new(Limit::LogSingular(0.0), Limit::Finite(1.0)))?;
            let tail = integrate(unit, &QuadratureSpec::new(Limit::Finite(1.0), Limit::PosInfinity))?;
            Ok(c(head + tail - PI2 / 4.0))
        }),
        E::param(
            "five_term",
            2,
            FIVE,
            vec![D::linear("a", -1.0, 20.0).with_count(16), D::log("x", 1.001, 50.0).with_count(16)],
            |p| five_term(p[0], p[1]),
        ),
        E::param("first_fixed_point", 2, FP1, vec![D::linear("a", -1.0, 50.0)], |p| first_fixed_point(p[0])),
        E::param("second_fixed_point", 2, FP2, vec![D::log("x", 1.001, 50.0)], |p| second_fixed_point(p[0])),
        E::param("reflection", 3, REFLECTION, vec![D::log("x", 1.001, 1e3)], |p| {
            let x = p[0];
            Ok(l(1.0 / x)? + l(1.0 - 1.0 / x)? - PI2 / 6.0 + ln(x) * ln(x / (x - 1.0)))
        }),
        E::closed("reflection_at_two", 3, REFLECTION, |_| {
            Ok(l(0.5)? - PI2 / 12.0 + 0.5 * ln(2.0) * ln(2.0))
        }),
        E::param("inversion", 3, INVERSION, vec![D::log("x", 1.001, 1e3)], |p| {
            let x = p[0];
            Ok(l(-x)? + l(-1.0 / x)? + PI2 / 6.0 + 0.5 * ln(x) * ln(x))
        }),
        E::param("landen", 3, LANDEN, vec![D::log("x", 1e-3, 1e3)], |p| {
            let x = p[0];
            Ok(l(1.0 / (1.0 + x))? - l(-x)? - PI2 / 6.0 + 0.5 * ln(1.0 + x) * ln((1.0 + x) / (x * x)))
        }),
        E::param("duplication", 3, DUPLICATION, vec![D::log("x", 1.001, 1e3)], |p| {
            let x = p[0];
            Ok(l(1.0 / x)? + l(-1.0 / x)? - 0.5 * l(1.0 / (x * x))?)
        }),
        E::param("cancellation_a", 3, CANCEL_A, vec![D::log("a", 1.001, 1e3)], |p| {
            let a = p[0];
            let q = a * a - a + 1.0;
            Ok(l((a - 1.0) / (a * a))? + l(1.0 / q)? - l(a / q)? + ln(a / (a - 1.0)) * ln(a * a / q))
        }),
        E::param("cancellation_b", 3, CANCEL_B, vec![D::log("a", 1e-3, 1e3)], |p| {
            let a = p[0];
            let q = a * a + a + 1.0;
            Ok(l(a / ((a + 1.0) * (a + 1.0)))? + l(1.0 / q)? - l((a + 1.0) / q)?
                + ln((a + 1.0) / a) * ln((a + 1.0) * (a + 1.0) / q))
        }),
    ]
}
