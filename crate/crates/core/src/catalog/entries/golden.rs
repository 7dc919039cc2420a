//! Golden-ratio closed forms, Ramanujan-type identities and the φ³ connections.

use crate::catalog::terms::{c, five_term, l, ln, phi, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::polylog::chi2;

const KNOWN: (&str, &str) = ("known real values", "eighth known exact real values");
const INV_PHI2: (&str, &str) = ("golden-ratio closed forms", "the respective evaluation is given by");
const CHI_PHI3: (&str, &str) = ("golden-ratio closed forms", "aid of the Legendre's chi-function");
const REDERIVE: (&str, &str) = ("golden-ratio closed forms", "verify the statement introduced in");
const SILVER: (&str, &str) = ("silver-ratio chi value", "considered by a number of authors");
const ROOT_HALF: (&str, &str) = ("square-root-two relations", "an old and well known result");
const SIX_TERM: (&str, &str) = ("square-root-two relations", "might be a new one");
const SQRT_PHI: (&str, &str) = ("golden-ratio two-term identities", "After a workable algebra");
const SECOND_TERM: (&str, &str) = ("golden-ratio two-term identities", "Let the second term be");
const NEGATIVE_ROOT: (&str, &str) = ("golden-ratio two-term identities", "we choose the negative root");
const THIRD: (&str, &str) = ("golden-ratio two-term identities", "third two-term identity with the aid");
const KHOI: (&str, &str) = ("golden-ratio two-term identities", "A remarkable result due to Khoi");
const BINET: (&str, &str) = ("Fibonacci identities", "expressed with the Binet's formula");
const SAME_RESULT: (&str, &str) = ("golden-ratio two-term identities", "exactly the same result");
const FOUR_TERM: (&str, &str) = ("golden-ratio two-term identities", "outcome is a four-term identity");
const RAMANUJAN: (&str, &str) = ("Ramanujan identities", "evaluations from Ramanujan");
const RAMANUJAN_MORE: (&str, &str) = ("Ramanujan identities", "two other Ramanujan's identities");
const SIMPLE_TWO: (&str, &str) = ("Ramanujan identities", "a very simple two-term identity");
const CONNECTIONS: (&str, &str) = ("cubic golden-ratio connections", "all the known simplest real valued connections");
const NICE: (&str, &str) = ("cubic golden-ratio connections", "nice and simple formula below");
const CONNECTION: (&str, &str) = ("cubic golden-ratio connections", "derive the connection between");
const MUTUAL: (&str, &str) = ("cubic golden-ratio connections", "derive their mutual connection");
const LIMITS: (&str, &str) = ("cubic golden-ratio connections", "with the integration limits");
const PRIOR_WORK: (&str, &str) = ("cubic golden-ratio connections", "also introduced in the paper of");

static BINET_N: [f64; 8] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];

fn lp() -> f64 {
    phi().ln()
}

fn known_values() -> Vec<E> {
    vec![
        E::closed("li2_half", 4, KNOWN, |_| Ok(l(0.5)? - PI2 / 12.0 + 0.5 * ln(2.0) * ln(2.0))),
        E::closed("li2_zero", 4, KNOWN, |_| l(0.0)),
        E::closed("li2_one", 4, KNOWN, |_| Ok(l(1.0)? - PI2 / 6.0)),
        E::closed("li2_minus_one", 4, KNOWN, |_| Ok(l(-1.0)? + PI2 / 12.0)),
        E::closed("li2_minus_inv_phi", 4, KNOWN, |_| {
            Ok(l(-1.0 / phi())? + PI2 / 15.0 - 0.5 * lp() * lp())
        }),
        E::closed("li2_inv_phi", 4, KNOWN, |_| Ok(l(1.0 / phi())? - PI2 / 10.0 + lp() * lp())),
        E::closed("li2_inv_phi2", 4, KNOWN, |_| Ok(l(1.0 / (phi() * phi()))? - PI2 / 15.0 + lp() * lp())),
        E::closed("li2_minus_phi", 4, KNOWN, |_| Ok(l(-phi())? + PI2 / 10.0 + lp() * lp())),
    ]
}

fn golden_forms() -> Vec<E> {
    vec![
        E::closed("li2_inv_phi2_five_term", 4, INV_PHI2, |_| five_term(phi() * phi(), phi())),
        E::closed("chi2_inv_phi3", 4, CHI_PHI3, |_| {
            Ok(c(chi2(phi().powi(-3))? - PI2 / 24.0 + 0.75 * lp() * lp()))
        }),
        E::closed("chi2_inv_phi3_five_term", 4, CHI_PHI3, |_| five_term(1.0, phi())),
        E::closed("chi2_inv_phi3_rederived", 4, REDERIVE, |_| five_term(phi().powi(3), phi() * phi())),
        E::closed("chi2_silver", 4, SILVER, |_| {
            let s = 2f64.sqrt();
            Ok(c(chi2(s - 1.0)? - PI2 / 16.0 + 0.25 * (s + 1.0).ln().powi(2)))
        }),
        E::closed("li2_inv_sqrt2_difference", 4, ROOT_HALF, |_| {
            let s = 2f64.sqrt();
            Ok(l(1.0 / s)? - l(s - 1.0)? - PI2 / 24.0 + ln(2.0) * ln(2.0) / 8.0
                - 0.5 * ln(1.0 + s) * ln((s + 1.0) / 2.0))
        }),
        E::closed("six_li2_sqrt2_minus_one", 4, SIX_TERM, |_| {
            let s = 2f64.sqrt();
            let rhs = 11.0 * PI2 / 24.0 - 0.375 * ln(2.0) * ln(2.0) - ln(3.0 - 2.0 * s) * ln(2.0 * s - 2.0)
                - 1.5 * ln(s + 1.0) * ln(s + 1.0)
                - 1.5 * ln(2.0) * ln(2.0 + s)
                + ln(s + 1.0) * (0.5 * ln(2.0) + ln(2.0 + s));
            Ok(6.0 * l(s - 1.0)? + l((2.0 - s) / 4.0)? - rhs)
        })
        .flagged("long printed constant, transcription-risky"),
        E::closed("sqrt_phi_two_term", 4, SQRT_PHI, |_| {
            let p = phi();
            let sp = p.sqrt();
            let p2 = p * p;
            let p3 = p2 * p;
            let big = (p3 * p3 + p3 * p2 * sp + p2 * p2 + 2.0 * p3 * sp).sqrt();
            Ok(l((1.0 + sp) / p2)? + l(p3 - p2 * sp)? - 17.0 * PI2 / 60.0 + 11.0 / 8.0 * lp() * lp()
                + ln(p3 * sp - p3) * ln(p2 * sp - 2.0 * p)
                + ln(p3 * sp - p3) * ln(big))
        })
        .flagged("radical-heavy printed constant, transcription-risky"),
        E::closed("phi_second_term", 4, SECOND_TERM, |_| {
            let p = phi();
            let r = (4.0 * p - 3.0).sqrt();
            Ok(l(((p.powi(7) + 3.0 * p.powi(5)).sqrt() - p * p - 3.0 * p) / 2.0)? - l((1.0 + r) / (2.0 * p))?
                + PI2 / 10.0
                - lp() * lp()
                + ln((p * p + 1.0 + (4.0 * p.powi(3) - 3.0 * p * p).sqrt()) / 2.0) * ln((2.0 * p - 1.0 + r) / (2.0 * p)))
        }),
        E::closed("phi_negative_root", 4, NEGATIVE_ROOT, |_| {
            let p = phi();
            let q = ((p * p + 2.0) / p.powi(3)).sqrt();
            Ok(l(p / 2.0 - q / 2.0)? - l(1.0 / (2.0 * p * p) - q / 2.0)? - PI2 / 10.0 - lp() * lp()
                - 2.0 * lp() * ln(-1.0 / (2.0 * p) + ((p * p + 2.0) / p).sqrt() / 2.0))
        }),
        E::closed("phi_third_two_term", 4, THIRD, |_| {
            let p = phi();
            let q = ((p * p + 2.0) / p.powi(3)).sqrt();
            Ok(l((p * p + 3.0 * p).sqrt() / 2.0 - (p * p + 1.0) / (2.0 * p))? - l(1.0 / (2.0 * p * p) + q / 2.0)?
                + PI2 / 15.0
                - lp() * lp()
                + ln(p * p / 2.0 + ((p * p + 2.0) / p).sqrt() / 2.0) * ln(p / 2.0 + q / 2.0))
        }),
        E::closed("khoi", 4, KHOI, |_| {
            let sp = phi().sqrt();
            Ok(l(1.0 - 1.0 / sp)? - l(1.0 / (1.0 + 1.0 / sp))? + PI2 / 20.0 + 0.5 * lp() * lp()
                - 0.5 * ln(1.0 + 1.0 / sp) * ln(1.0 + 1.0 / sp))
        }),
        E::param("binet", 4, BINET, vec![D::points("n", &BINET_N)], |p| {
            let n = p[0];
            let f = phi();
            let alt = |k: f64| if k.rem_euclid(2.0) == 0.0 { f.powf(-k) } else { -f.powf(-k) };
            let a = (f.powf(n + 1.0) - alt(n + 1.0)) / (2.0 * f.powf(n + 1.0) - f.powf(n));
            let b = (f.powf(n) - alt(n)) / (2.0 * f.powf(n + 2.0) - f.powf(n + 1.0));
            Ok(l(a)? + l(b)? - PI2 / 6.0 + ln(a) * ln(b))
        }),
        E::closed("binet_limit", 4, BINET, |_| {
            let (a, b) = (phi() / 5f64.sqrt(), 1.0 / (5f64.sqrt() * phi()));
            Ok(l(a)? + l(b)? - PI2 / 6.0 + ln(a) * ln(b))
        }),
        E::closed("phi_squared_plus_one", 4, SAME_RESULT, |_| {
            let p2 = phi() * phi();
            let u = (p2 + 1.0) / p2;
            Ok(l(-1.0 / p2)? + l((p2 + 1.0) / (5.0 * p2))? + 0.5 * ln(u) * ln(u))
        }),
        E::closed("four_term_phi", 4, FOUR_TERM, |_| {
            let p = phi();
            let p2 = p * p;
            let r5 = 5f64.sqrt();
            Ok(2.0 * l(1.0 / (p * r5))? - l(r5 / p2)? + PI2 / 30.0 + ln(5.0) * ln(5.0) / 8.0
                + 0.5 * lp() * ln(125.0 / p.powi(7))
                + ln(p2 + 1.0) * ln((p2 + 1.0).sqrt() / p2))
        })
        .flagged("four-term modification, printed constant unverified"),
    ]
}

fn ramanujan() -> Vec<E> {
    vec![
        E::closed("ramanujan_half_ninth", 5, RAMANUJAN, |_| {
            let (l2, l3) = (ln(2.0), ln(3.0));
            Ok(l(-0.5)? + l(1.0 / 9.0)? / 6.0 + PI2 / 18.0 - l2 * l3 + 0.5 * l2 * l2 + l3 * l3 / 3.0)
        }),
        E::closed("ramanujan_quarter_ninth", 5, RAMANUJAN_MORE, |_| {
            let (l2, l3) = (ln(2.0), ln(3.0));
            Ok(l(0.25)? + l(1.0 / 9.0)? / 3.0 - PI2 / 18.0 + 2.0 * l2 * l2 - l2 * l3 + 2.0 * l3 * l3 / 3.0)
        })
        .flagged("printed with ln2·ln3; the identity needs 2·ln2·ln3"),
        E::closed("ramanujan_quarter_ninth_corrected", 5, RAMANUJAN_MORE, |_| {
            let (l2, l3) = (ln(2.0), ln(3.0));
            Ok(l(0.25)? + l(1.0 / 9.0)? / 3.0 - PI2 / 18.0 + 2.0 * l2 * l2 - 2.0 * l2 * l3 + 2.0 * l3 * l3 / 3.0)
        }),
        E::closed("ramanujan_eighth_ninth", 5, RAMANUJAN_MORE, |_| {
            Ok(l(-0.125)? + l(1.0 / 9.0)? + 0.5 * ln(9.0 / 8.0) * ln(9.0 / 8.0))
        }),
        E::closed("ramanujan_half_ninth_initials", 5, RAMANUJAN, |_| five_term(-1.0 / 3.0, 4.0 / 3.0)),
        E::closed("ramanujan_quarter_ninth_initials", 5, RAMANUJAN_MORE, |_| five_term(-2.0 / 3.0, 2.0)),
        E::closed("ramanujan_eighth_ninth_initials", 5, RAMANUJAN_MORE, |_| five_term(9.0 / 8.0, 81.0 / 64.0)),
        E::closed("third_two_term", 5, SIMPLE_TWO, |_| {
            Ok(l(1.0 / 3.0)? + 0.5 * l(-3.0)? + 0.5 * ln(3.0) * ln(3.0))
        }),
    ]
}

macro_rules! connection {
    ($id:literal, $f:expr) => {
        E::closed($id, 6, CONNECTIONS, |_| {
            let p = phi();
            let (lp, l2) = (lp(), 2f64.ln());
            let rhs: crate::ComplexValue = $f(p, lp, l2)?;
            Ok(l(p.powi(-3))? - rhs)
        })
    };
}

fn cubic_connections() -> Vec<E> {
    type R = crate::Result<crate::ComplexValue>;
    vec![
        connection!("phi3_connection_01", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(l(-p.powi(-3))? + PI2 / 12.0 - 1.5 * lp * lp)
        }),
        connection!("phi3_connection_02", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(-l(-p.powi(3))? - PI2 / 12.0 - 6.0 * lp * lp)
        }),
        connection!("phi3_connection_03", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(l(p.powi(-6))? / 4.0 + PI2 / 24.0 - 0.75 * lp * lp)
        }),
        connection!("phi3_connection_04", |p: f64, lp: f64, l2: f64| -> R {
            Ok(l(p / 2.0)? - PI2 / 12.0 + 0.5 * l2 * l2 + 2.0 * l2 * lp - 4.0 * lp * lp)
        }),
        connection!("phi3_connection_05", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(l(-2.0 * p)? + PI2 / 6.0 - 1.5 * lp * ln(p / 4.0))
        }),
        connection!("phi3_connection_06", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(-l(-1.0 / (2.0 * p))? - 0.5 * ln(2.0 * p) * ln(2.0 * p) - 1.5 * lp * ln(p / 4.0))
        }),
        connection!("phi3_connection_07", |p: f64, _lp: f64, _l2: f64| -> R {
            Ok(-l(2.0 / (p * p))? + PI2 / 6.0 - ln(p.powi(-3)) * ln(2.0 / (p * p)))
        }),
        connection!("phi3_connection_08", |p: f64, _lp: f64, l2: f64| -> R {
            let u = ln(2.0 * p);
            Ok(-l(1.0 / (2.0 * p * p))? + PI2 / 12.0 - 2.0 * u * u + 5.0 * l2 * u - 3.5 * l2 * l2)
        }),
        connection!("phi3_connection_09", |p: f64, lp: f64, _l2: f64| -> R {
            Ok(-l(4.0 / p.powi(3))? / 4.0 + PI2 / 12.0 - 0.75 * lp * lp - 1.5 * lp * ln(p.powi(3) / 4.0))
        }),
        connection!("phi3_connection_10", |p: f64, lp: f64, l2: f64| -> R {
            Ok(l(-4.0 * p.powi(3))? / 4.0 + PI2 / 12.0 - 0.75 * lp * lp + 3.0 * l2 * lp)
        }),
        E::closed("two_over_phi2_minus_two_phi", 6, NICE, |_| {
            let p = phi();
            Ok(l(2.0 / (p * p))? + l(-2.0 * p)? + 4.5 * lp() * lp())
        }),
        E::closed("inv_phi3_half_phi", 6, CONNECTION, |_| {
            let (p, lp, l2) = (phi(), lp(), 2f64.ln());
            Ok(l(p.powi(-3))? - l(p / 2.0)? + PI2 / 12.0 - 0.5 * l2 * l2 - 2.0 * l2 * lp + 4.0 * lp * lp)
        }),
        E::closed("half_inv_phi2_two_over_phi2", 6, MUTUAL, |_| {
            let (p, lp, l2) = (phi(), lp(), 2f64.ln());
            Ok(l(1.0 / (2.0 * p * p))? - l(2.0 / (p * p))? + PI2 / 12.0 + 0.5 * l2 * l2 - 2.0 * lp * ln(p * p / 2.0))
        }),
        E::closed("half_inv_phi2_minus_half_inv_phi", 6, LIMITS, |_| {
            let (p, lp, l2) = (phi(), lp(), 2f64.ln());
            Ok(l(1.0 / (2.0 * p * p))? - l(-1.0 / (2.0 * p))? - PI2 / 12.0 + lp * l2)
        }),
        E::closed("half_phi_minus_half_inv_phi", 6, PRIOR_WORK, |_| {
            let (p, lp, l2) = (phi(), lp(), 2f64.ln());
            Ok(l(p / 2.0)? + l(-1.0 / (2.0 * p))? - PI2 / 12.0 - 2.0 * lp * lp + l2 * l2)
        }),
    ]
}

pub(super) fn entries() -> Vec<E> {
    let mut v = known_values();
    v.extend(golden_forms());
    v.extend(ramanujan());
    v.extend(cubic_connections());
    v
}
