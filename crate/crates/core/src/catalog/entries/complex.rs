//! Complex-domain values and the real forms of Li₂(−1/2).

use std::f64::consts::{FRAC_PI_3, PI, SQRT_2};

use crate::catalog::terms::{c, l, ln, lz, phi, psi1, I, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::polylog::{catalan, gieseking};
use crate::ComplexValue as C;

const INVERSION: (&str, &str) = ("complex inversion", "more familiar complex domain identity");
const EXACT: (&str, &str) = ("complex inversion", "the exact values for");
const HALF_MINUS_I: (&str, &str) = ("imaginary arguments", "calculating the exact value for");
const UNEXPECTED: (&str, &str) = ("imaginary arguments", "unexpected simple outcome");
const KEY_ROLE: (&str, &str) = ("imaginary arguments", "plays the key role now");
const ARBITRARY: (&str, &str) = ("imaginary arguments", "choose an arbitrary complex number");
const SINGLE: (&str, &str) = ("imaginary arguments", "final single value representation");
const REAL_PART: (&str, &str) = ("real parts", "exact value for a real part");
const ANOTHER_REAL: (&str, &str) = ("real parts", "another exact real part");
const IMAG_GOLDEN: (&str, &str) = ("imaginary golden ratio", "related to the imaginary golden ratio");
const TRIGAMMA: (&str, &str) = ("imaginary golden ratio", "a nice trigamma-identity of the form");
const IM_HALF: (&str, &str) = ("imaginary golden ratio", "derive the imaginary part for");
const IM_TWO: (&str, &str) = ("imaginary golden ratio", "exploit the above result");
const THREE_TERM: (&str, &str) = ("forms of Li2(-1/2)", "couple of three-term identities");
const UNORTHODOX: (&str, &str) = ("forms of Li2(-1/2)", "an unorthodox maneuver");
const SUBSTITUTE: (&str, &str) = ("forms of Li2(-1/2)", "substitute this value in the all");
const MAGIC: (&str, &str) = ("forms of Li2(-1/2)", "magic angle");
const RE_SUM: (&str, &str) = ("forms of Li2(-1/2)", "two-term identity related to");
const COMBINED: (&str, &str) = ("forms of Li2(-1/2)", "including the complex golden ratio");

/// e^{iπ/3}.
fn phi_i() -> C {
    C::from_polar(1.0, FRAC_PI_3)
}

fn lp() -> f64 {
    phi().ln()
}

fn complex_domain() -> Vec<E> {
    vec![
        E::param("complex_inversion", 9, INVERSION, vec![D::log("x", 1.001, 1e3)], |p| {
            let x = p[0];
            Ok(l(x)? + l(1.0 / x)? - PI2 / 3.0 + 0.5 * ln(x) * ln(x) + I * PI * x.ln())
        })
        .lower_lip(),
        E::closed("li2_two", 9, EXACT, |_| Ok(l(2.0)? - PI2 / 4.0 + I * PI * 2f64.ln())).lower_lip(),
        E::closed("li2_phi", 9, EXACT, |_| {
            Ok(l(phi())? - 7.0 * PI2 / 30.0 - 0.5 * lp() * lp() + I * PI * lp())
        })
        .lower_lip(),
        E::closed("li2_phi_squared", 9, EXACT, |_| {
            Ok(l(phi() * phi())? - 4.0 * PI2 / 15.0 + lp() * lp() + 2.0 * I * PI * lp())
        })
        .lower_lip(),
        E::closed("li2_i", 9, HALF_MINUS_I, |_| Ok(lz(I)? + PI2 / 48.0 - I * catalan())),
        E::closed("li2_half_minus_half_i", 9, HALF_MINUS_I, |_| {
            let l2 = 2f64.ln();
            Ok(lz(C::new(0.5, -0.5))? - 5.0 * PI2 / 96.0 + l2 * l2 / 8.0 - I * (PI * l2 / 8.0 - catalan()))
        }),
        E::closed("imaginary_two_minus_sqrt3", 9, UNEXPECTED, |_| {
            let s3 = 3f64.sqrt();
            let z = I * (2.0 - s3);
            Ok(lz(z)? - lz(-z)? - I * (4.0 / 3.0 * catalan() - PI * (2.0 + s3).ln() / 6.0))
        }),
        E::closed("imaginary_sqrt2_minus_one", 9, KEY_ROLE, |_| {
            let z = I * (SQRT_2 - 1.0);
            let t = psi1(0.125)? + psi1(0.375)? - psi1(0.625)? - psi1(0.875)?;
            Ok(lz(z)? - lz(-z)? - I * (t / (32.0 * SQRT_2) - PI * (SQRT_2 + 1.0).ln() / 4.0))
        }),
        E::closed("imaginary_fifth_root", 9, ARBITRARY, |_| {
            let p = phi();
            let w = I / (5f64.powf(0.25) * p.powf(1.5));
            let t = |x: f64| psi1(x);
            let sum = (1.0 / p) * t(0.1)? + (4.0 / p + 1.0) * t(0.2)? + t(0.3)? + (1.0 / p - 4.0) * t(0.4)?
                + (4.0 - 1.0 / p) * t(0.6)?
                - t(0.7)?
                - (4.0 / p + 1.0) * t(0.8)?
                - (1.0 / p) * t(0.9)?;
            let rhs = I * (p * p + 1.0).sqrt() / 200.0 * sum - I * PI / 20.0 * (5.0 * p.powi(6)).ln();
            Ok(lz(w)? - lz(-w)? - rhs)
        }),
        E::closed("single_value_half_plus_i", 9, SINGLE, |_| {
            let p = phi();
            let r = (p * p + 1.0).sqrt();
            let z = C::new(0.5, r / (2.0 * p * p));
            let t = |x: f64| psi1(x);
            let im = r / 200.0 * (t(0.1)? + t(0.4)? - t(0.6)? - t(0.9)?)
                + r / (200.0 * p) * (t(0.8)? + t(0.7)? - t(0.3)? - t(0.2)?)
                - PI * lp() / 5.0;
            Ok(lz(z)? - (19.0 * PI2 / 300.0 - 0.5 * lp() * lp()) - I * im)
        }),
        E::closed("real_part_three_sqrt7", 9, REAL_PART, |_| {
            let s7 = 7f64.sqrt();
            let l2 = 2f64.ln();
            let rhs = -PI2 / 24.0 - l2 * l2 / 4.0 + PI * (s7 / 5.0).atan() / 2.0 + (s7 / 3.0).atan() * s7.atan() / 2.0;
            Ok(c(lz(C::new(1.5, s7 / 2.0))?.re - rhs))
        }),
        E::closed("real_part_five_sqrt7", 9, ANOTHER_REAL, |_| {
            let s7 = 7f64.sqrt();
            let l2 = 2f64.ln();
            let rhs = 7.0 * PI2 / 24.0 - l2 * l2 / 4.0 - PI * (s7 / 5.0).atan() / 2.0 - 1.5 * (s7 / 3.0).atan() * s7.atan();
            Ok(c(lz(C::new(5.0 / 8.0, s7 / 8.0))?.re - rhs))
        }),
        E::closed("li2_phi_i", 9, IMAG_GOLDEN, |_| Ok(lz(phi_i())? - PI2 / 36.0 - I * gieseking())),
        E::closed("gieseking_trigamma", 9, IMAG_GOLDEN, |_| {
            Ok(c(gieseking() - (9.0 - psi1(2.0 / 3.0)? + psi1(4.0 / 3.0)?) / (4.0 * 3f64.sqrt())))
        }),
        E::closed("imaginary_inv_sqrt3", 9, IMAG_GOLDEN, |_| {
            let z = I / 3f64.sqrt();
            Ok(lz(z)? - lz(-z)? - I * (5.0 / 3.0 * gieseking() - PI * 3f64.ln() / 6.0))
        }),
        E::closed("trigamma_sum", 9, TRIGAMMA, |_| {
            Ok(c(psi1(1.0 / 6.0)? + 5.0 * psi1(1.0 / 3.0)? + 5.0 * psi1(2.0 / 3.0)? + psi1(5.0 / 6.0)?
                - 32.0 * PI2 / 3.0))
        }),
        E::closed("imag_half_phi_i", 9, IM_HALF, |_| {
            Ok(c(lz(phi_i() / 2.0)?.im - (5.0 / 6.0 * gieseking() - PI * 2f64.ln() / 6.0)))
        }),
        E::closed("imag_two_phi_i", 9, IM_TWO, |_| {
            Ok(c(lz(2.0 * phi_i())?.im - (5.0 / 6.0 * gieseking() + PI * 2f64.ln() / 2.0)))
        }),
    ]
}

fn minus_half() -> Vec<E> {
    vec![
        E::closed("minus_half_item_1", 10, THREE_TERM, |_| {
            let l2 = ln(2.0);
            Ok(l(-0.5)? - PI2 / 24.0 + l((1.0 + SQRT_2) / 3.0)? + l((1.0 - SQRT_2) / 3.0)?
                + ln((2.0 - SQRT_2) / 3.0) * ln((1.0 + SQRT_2) / 3.0)
                + 0.5 * l2 * ln((2.0 * SQRT_2 - 2.0) / 3.0))
        }),
        E::closed("minus_half_item_2", 10, THREE_TERM, |_| {
            let s3 = 3f64.sqrt();
            let (l2, l3) = (ln(2.0), ln(3.0));
            let v = 2.0 / 3.0 * l((1.0 - s3) / 4.0)? + 2.0 / 3.0 * l((1.0 + s3) / 4.0)? - PI2 / 9.0
                + 5.0 / 6.0 * l2 * l2
                - l3 * l3 / 3.0
                + l3 * ln(0.75) / 6.0
                + 4.0 / 3.0 * l2 * ln(1.5)
                + ln((16.0 - 8.0 * s3) / 3.0) * ln((6.0 + 2.0 * s3) / 3.0) / 3.0;
            Ok(l(-0.5)? - v)
        }),
        E::closed("minus_half_item_3", 10, THREE_TERM, |_| {
            let l2 = ln(2.0);
            let v = l((3.0 * SQRT_2 - 4.0) / 2.0)? - l(4.0 - 3.0 * SQRT_2)? - PI2 / 8.0 - 5.0 / 8.0 * l2 * l2
                + 0.5 * l2 * ln(4.0 + 3.0 * SQRT_2);
            Ok(l(-0.5)? - v)
        }),
        E::closed("minus_half_item_4", 10, THREE_TERM, |_| {
            let s3 = 3f64.sqrt();
            let (l2, l3) = (ln(2.0), ln(3.0));
            let v = 2.0 / 3.0 * l(3.0 - 2.0 * s3)? - 2.0 / 3.0 * l((2.0 * s3 - 3.0) / 3.0)? + l3 * l3 / 12.0
                - l2 * l2 / 2.0
                + l2 * l3
                - l3 * ln(3.0 + 2.0 * s3) / 3.0;
            Ok(l(-0.5)? - v)
        }),
        E::closed("minus_half_item_5", 10, THREE_TERM, |_| {
            let (p4, l2, lp) = (phi().powi(4), 2f64.ln(), lp());
            let v = 0.5 * l(1.0 / (2.0 * p4))? - 0.5 * l(2.0 / p4)? - PI2 / 24.0 - l2 * l2 / 4.0 + 2.0 * l2 * lp
                - 2.0 * lp * lp;
            Ok(l(-0.5)? - v)
        }),
        E::closed("minus_half_item_6", 10, THREE_TERM, |_| {
            let (p4, l2, lp) = (phi().powi(4), 2f64.ln(), lp());
            let v = l(1.0 / (8.0 * p4))? / 6.0 + l(p4 / 8.0)? / 6.0 - PI2 / 12.0 - 4.0 / 3.0 * lp * lp + l2 * l2;
            Ok(l(-0.5)? - v)
        }),
        E::closed("minus_half_item_7", 10, UNORTHODOX, |_| {
            let l2 = 2f64.ln();
            Ok(l(-0.5)? + 2.0 * lz(2.0 * phi_i())?.re + 0.5 * l2 * l2)
        }),
        E::closed("minus_half_item_8", 10, SUBSTITUTE, |_| {
            let l2 = 2f64.ln();
            Ok(l(-0.5)? - 2.0 * lz(phi_i() / 2.0)?.re + PI2 / 9.0 - 0.5 * l2 * l2)
        }),
        E::closed("minus_half_item_9", 10, MAGIC, |_| {
            let (l2, l3) = (2f64.ln(), 3f64.ln());
            let v = -lz(C::new(2.0, 2.0 * SQRT_2))?.re + PI2 / 12.0 - SQRT_2.atan().powi(2) - l2 * l2 / 2.0 - l3 * l3 / 4.0;
            Ok(l(-0.5)? - v)
        })
        .flagged("mixes a real Li2(3/4) step with complex logarithms"),
        E::closed("minus_half_real_part_sum", 10, RE_SUM, |_| {
            let l2 = 2f64.ln();
            Ok(c(lz(phi_i() / 2.0)?.re + lz(2.0 * phi_i())?.re - PI2 / 18.0 + 0.5 * l2 * l2))
        }),
        E::closed("minus_half_complex_sum", 10, COMBINED, |_| {
            let l2 = 2f64.ln();
            Ok(lz(phi_i() / 2.0)? + lz(2.0 * phi_i())? - PI2 / 18.0 + 0.5 * l2 * l2
                - I * (5.0 / 3.0 * gieseking() + PI * l2 / 3.0))
        }),
    ]
}

pub(super) fn entries() -> Vec<E> {
    let mut v = complex_domain();
    v.extend(minus_half());
    v
}
