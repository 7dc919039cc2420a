//! The conjectured golden-ratio identity and its chain, real-part rules, base-½
//! ladders, and the solids of revolution.

use std::f64::consts::PI;

use crate::analysis::value_of;
use crate::catalog::terms::{c, l, ln, lz, phi, psi1, I, PI2};
use crate::catalog::{IdentityEntry as E, ParamDomain as D};
use crate::gemini::GeminiParams;
use crate::geometry::{
    combined_zeta_gamma_residual, curvature_profile, equal_radii_point, geminoid_volume,
    geminoid_volume_closed_form, mamikon_area, pi_hole, raw_moment, raw_moment_quadrature, shell_volume,
    volume_ratio,
};
use crate::ComplexValue as C;

const CAMPBELL: (&str, &str) = ("conjectured golden-ratio identity", "a numerically discovered identity");
const TRIGAMMA: (&str, &str) = ("conjectured golden-ratio identity", "workable exercise with trigamma functions");
const KUMMER: (&str, &str) = ("real parts on lines", "aid of Kummer's rule");
const HALF_LINE: (&str, &str) = ("real parts on lines", "real part can always be determined");
const BASE_HALF: (&str, &str) = ("base one-half ladders", "ladders in the base");
const FIVE_TERM: (&str, &str) = ("addinacci application", "derive a five-term ladder");
const VOLUME: (&str, &str) = ("geminoid volumes", "volume of a solid of revolution");
const CONE: (&str, &str) = ("geminoid volumes", "resembling an Euclidean 3D cone");
const MOMENT: (&str, &str) = ("raw moments", "raw moment for a non-normalized");
const ZETA_GAMMA: (&str, &str) = ("raw moments", "connects the Riemann zeta and gamma");
const LAPLACE: (&str, &str) = ("geminoid curvature", "is the Laplace limit");
const CFP: (&str, &str) = ("geminoid curvature", "hyperbolic cotangent fixed point constant");
const MAMIKON: (&str, &str) = ("tangent sweep", "Mamikon's tangent sweep theorem");
const PI_HOLE: (&str, &str) = ("pi-hole", "we call this solid of revolution a $\\pi$-hole");

static VOLUME_A: [f64; 4] = [-0.5, -0.381_966_011_250_105_1, 0.0, 1.0];
static MOMENT_S: [f64; 3] = [1.0, 2.0, 3.5];
static ZETA_GAMMA_S: [f64; 2] = [1.5, 3.0];

fn lp() -> f64 {
    phi().ln()
}

fn e5() -> C {
    C::from_polar(1.0, PI / 5.0)
}

/// (1 + i√(5 − 2√5))/2, a root of a² − a + 1 = 1/φ.
fn root_a() -> C {
    C::new(0.5, 0.5 * (5.0 - 2.0 * 5f64.sqrt()).sqrt())
}

/// (1 + i√(√5 φ³))/2.
fn zz() -> C {
    C::new(0.5, 0.5 * (5f64.sqrt() * phi().powi(3)).sqrt())
}

/// (1 − √((1 − 2φ)(1 + 2φ)))/2 with the principal square root.
fn zc() -> C {
    let p = phi();
    (1.0 - C::new((1.0 - 2.0 * p) * (1.0 + 2.0 * p), 0.0).sqrt()) / 2.0
}

fn campbell_chain() -> Vec<E> {
    vec![
        E::closed("campbell_identity", 13, CAMPBELL, |_| {
            let p = phi();
            let c1 = lz(1.0 / (2.0 * p * p) - C::new(-1.0 - 1.0 / (p * p), 0.0).sqrt() / 2.0)?;
            Ok(c1 - lz(zc())? - (0.5 * lp() * lp() + 0.6 * I * PI * lp() + PI2 / 150.0))
        }),
        E::closed("campbell_reflection_step", 13, CAMPBELL, |_| {
            let p = phi();
            let c1 = lz(1.0 / (2.0 * p * p) - C::new(-1.0 - 1.0 / (p * p), 0.0).sqrt() / 2.0)?;
            Ok(c1 - (-lz(e5())? + 13.0 * PI2 / 150.0 + I * PI * lp() / 5.0))
        }),
        E::closed("campbell_shape_root", 13, CAMPBELL, |_| {
            let a = root_a();
            Ok(1.0 / (a * a - a + 1.0) - phi())
        }),
        E::closed("campbell_first_argument", 13, CAMPBELL, |_| {
            let a = root_a();
            Ok((a - 1.0) / (a * a) - C::new(0.5, 0.5 * (5.0 + 2.0 * 5f64.sqrt()).sqrt()))
        }),
        E::closed("campbell_first_argument_radical", 13, CAMPBELL, |_| {
            Ok(zz() - C::new(0.5, 0.5 * (5.0 + 2.0 * 5f64.sqrt()).sqrt()))
        }),
        E::closed("campbell_third_argument", 13, CAMPBELL, |_| {
            let a = root_a();
            Ok(a / (a * a - a + 1.0) - e5())
        }),
        E::closed("campbell_log_product", 13, CAMPBELL, |_| {
            let a = root_a();
            Ok((a / (a - 1.0)).ln() * (a / (a * a - a + 1.0)).ln() - (6.0 * PI2 / 25.0 + 0.6 * I * PI * lp()))
        })
        .flagged("principal logarithms give a different branch than the printed product"),
        E::closed("campbell_three_term_sum", 13, CAMPBELL, |_| {
            Ok(lz(zz())? + l(phi())? - lz(e5())? + 6.0 * PI2 / 25.0 + 0.6 * I * PI * lp() - 2.0 * PI2 / 5.0)
        })
        .lower_lip(),
        E::closed("campbell_cancellation_complex", 13, CAMPBELL, |_| {
            let a = root_a();
            let q = a * a - a + 1.0;
            Ok(lz((a - 1.0) / (a * a))? + lz(1.0 / q)? - lz(a / q)? + (a / (a - 1.0)).ln() * (a * a / q).ln())
        })
        .flagged("real-argument cancellation identity continued to a complex shape factor"),
        E::closed("campbell_real_part", 13, CAMPBELL, |_| {
            Ok(c(lz(zz())?.re - PI2 / 300.0 + 0.5 * lp() * lp()))
        }),
        E::closed("campbell_two_term", 13, CAMPBELL, |_| {
            Ok(lz(zz())? - lz(e5())? + 11.0 * PI2 / 150.0 + 0.5 * lp() * lp() - 0.4 * I * PI * lp())
        }),
        E::closed("campbell_conjugate_reflection", 13, CAMPBELL, |_| {
            Ok(lz(zc())? + lz(zz())? - PI2 / 6.0 + 4.0 * PI2 / 25.0 + lp() * lp())
        }),
        E::closed("campbell_conjugate_arguments", 13, CAMPBELL, |_| Ok(zc() - zz().conj())),
        E::closed("campbell_final", 13, CAMPBELL, |_| {
            Ok(-lz(zc())? - (lz(e5())? - 2.0 * PI2 / 25.0 + 0.5 * lp() * lp() + 0.4 * I * PI * lp()))
        }),
        E::closed("li2_e_i_pi_fifth", 13, TRIGAMMA, |_| {
            let p = phi();
            let t = |x: f64| psi1(x);
            let im = (5f64.sqrt() / p).sqrt() * (t(0.1)? + t(0.4)? - t(0.6)? - t(0.9)?)
                + (p * p + 1.0).sqrt() * (t(0.2)? + t(0.3)? - t(0.7)? - t(0.8)?);
            Ok(lz(e5())? - 23.0 * PI2 / 300.0 - I * im / 200.0)
        }),
    ]
}

fn real_parts_and_ladders() -> Vec<E> {
    vec![
        E::param("kummer_real_part", 13, KUMMER, vec![D::linear("theta", 0.01, 2.0 * PI - 0.01)], |p| {
            let t = p[0];
            Ok(c(lz(C::from_polar(1.0, t))?.re - PI2 / 6.0 + (2.0 * PI * t - t * t) / 4.0))
        }),
        E::param("half_line_real_part", 13, HALF_LINE, vec![D::linear("u", -10.0, 10.0)], |p| {
            let u = p[0];
            let w = ((1.0 + 4.0 * u * u) / 4.0).ln();
            let at = (2.0 * u).atan();
            Ok(c(lz(C::new(0.5, u))?.re - PI2 / 12.0 + w * w / 8.0 + at * at / 2.0))
        }),
        E::closed("base_half_five_term", 13, BASE_HALF, |_| {
            let l2 = ln(2.0);
            Ok(4.0 * l(0.25)? - 2.0 * l(8.0)? + 4.0 * l(2.0)? + l(64.0)? - 2.0 * l(4.0)? - PI2 / 3.0 + 8.0 * l2 * l2)
        })
        .lower_lip(),
        E::closed("base_half_ladder", 13, BASE_HALF, |_| {
            let l2 = ln(2.0);
            Ok(4.0 * l(0.5)? - 6.0 * l(0.25)? - 2.0 * l(0.125)? + l(1.0 / 64.0)? - l2 * l2)
        }),
        E::closed("base_half_pi_ladder", 13, BASE_HALF, |_| {
            Ok(36.0 * l(0.5)? - 36.0 * l(0.25)? - 12.0 * l(0.125)? + 6.0 * l(1.0 / 64.0)? - PI2)
        }),
    ]
}

fn tri_x() -> f64 {
    2.0 * value_of("tribonacci") + 2.0
}

fn tribonacci_application() -> Vec<E> {
    vec![
        E::closed("tribonacci_application_root", 13, FIVE_TERM, |_| {
            let x = tri_x();
            let s33 = 33f64.sqrt();
            let radical = (8.0 + (152.0 - 24.0 * s33).cbrt() + 2.0 * (19.0 + 3.0 * s33).cbrt()) / 3.0;
            Ok(C::new(x - 1.0 - (1.0 + x.powf(1.75)).sqrt(), x - radical))
        }),
        E::closed("tribonacci_application_x", 13, FIVE_TERM, |_| {
            let x = tri_x();
            Ok(4.0 * l(1.0 / x)? - 2.0 * l(x.powf(1.75))? + 4.0 * l(x.powf(0.75))? + l(x.powf(3.5))?
                - 2.0 * l(x.powf(1.5))?
                - PI2 / 3.0
                - 2.0 * ln(x) * ln(x))
        })
        .lower_lip()
        .flagged("printed with -2ln^2(x); the five-term ladder gives +2ln^2(x)"),
        E::closed("tribonacci_application_x_corrected", 13, FIVE_TERM, |_| {
            let x = tri_x();
            Ok(4.0 * l(1.0 / x)? - 2.0 * l(x.powf(1.75))? + 4.0 * l(x.powf(0.75))? + l(x.powf(3.5))?
                - 2.0 * l(x.powf(1.5))?
                - PI2 / 3.0
                + 2.0 * ln(x) * ln(x))
        })
        .lower_lip(),
        E::closed("tribonacci_application_y", 13, FIVE_TERM, |_| {
            let y = tri_x().powf(0.25);
            let y4 = ln(y.powi(4));
            Ok(4.0 * l(y.powi(-4))? - 2.0 * l(y.powi(7))? + 4.0 * l(y.powi(3))? + l(y.powi(14))?
                - 2.0 * l(y.powi(6))?
                - PI2 / 3.0
                - 2.0 * y4 * y4)
        })
        .lower_lip()
        .flagged("printed with -2ln^2(y^4); the five-term ladder gives +2ln^2(y^4)"),
        E::closed("tribonacci_application_y_reciprocal", 13, FIVE_TERM, |_| {
            let y = tri_x().powf(0.25);
            let ly = y.ln();
            Ok(4.0 * l(y.powi(-3))? - 4.0 * l(y.powi(-4))? - 2.0 * l(y.powi(-6))? - 2.0 * l(y.powi(-7))?
                + l(y.powi(-14))?
                - ly * ly)
        }),
        E::closed("tribonacci_application_t", 13, FIVE_TERM, |_| {
            let t = value_of("tribonacci");
            let lq = ((t + 1.0) / t).ln();
            Ok(4.0 * l(1.0 / (2.0 * t))? - 4.0 * l(1.0 / (2.0 * t + 2.0))? - 2.0 * l(1.0 / (4.0 * t * t))?
                - 2.0 * l((2.0 - t) / (4.0 * t - 4.0))?
                + l((5.0 * t - 9.0) / (64.0 * t - 32.0))?
                - lq * lq)
        }),
        E::closed("tribonacci_application_y_value", 13, FIVE_TERM, |_| {
            let t = value_of("tribonacci");
            Ok(c(tri_x().powf(0.25) - (t + 1.0) / t))
        }),
    ]
}

fn solids() -> Vec<E> {
    vec![
        E::param("volume_closed_form", 14, VOLUME, vec![D::points("a", &VOLUME_A)], |p| {
            let v = geminoid_volume(&GeminiParams::shape(p[0])?)?;
            let closed = geminoid_volume_closed_form(p[0]).unwrap_or(f64::NAN);
            Ok(c(v - closed))
        }),
        E::param("volume_shell_quadrature", 14, VOLUME, vec![D::points("a", &VOLUME_A)], |p| {
            let g = GeminiParams::shape(p[0])?;
            Ok(c(shell_volume(&g)? - geminoid_volume(&g)?))
        }),
        E::param("volume_printed", 14, VOLUME, vec![D::points("a", &VOLUME_A)], |p| {
            let printed = match p[0] {
                -0.5 => 4.177336,
                a if a < 0.0 => 5.022608,
                0.0 => 7.552746,
                _ => 13.217306,
            };
            Ok(c(geminoid_volume(&GeminiParams::shape(p[0])?)? - printed))
        })
        .tol_floor(1e-6),
        E::closed("volume_ratio_limit", 14, CONE, |_| Ok(c(volume_ratio(1e300)? - 8.0 / 3.0))).limit(1e-2),
        E::param("raw_moment", 14, MOMENT, vec![D::points("s", &MOMENT_S)], |p| {
            Ok(c(raw_moment_quadrature(p[0])? - raw_moment(p[0])?))
        }),
        E::param("zeta_gamma_integral", 14, ZETA_GAMMA, vec![D::points("s", &ZETA_GAMMA_S)], |p| {
            Ok(c(combined_zeta_gamma_residual(p[0])?))
        }),
        E::closed("laplace_gaussian_curvature", 14, LAPLACE, |_| {
            let lam = value_of("lambda");
            let prof = curvature_profile(&GeminiParams::default(), lam.asinh())?;
            let q = 1.0 + lam * lam;
            Ok(c(prof.kg + lam * lam / (q * q)))
        }),
        E::closed("laplace_equal_radii", 14, LAPLACE, |_| {
            let lam = value_of("lambda");
            let prof = curvature_profile(&GeminiParams::default(), lam.asinh())?;
            let r = 1.0 / lam + lam;
            Ok(C::new(prof.r1.abs() - r, prof.r2.abs() - r))
        }),
        E::closed("laplace_equal_radii_point", 14, LAPLACE, |_| {
            Ok(c(equal_radii_point()? - value_of("lambda").asinh()))
        }),
        E::closed("laplace_normal_angle", 14, LAPLACE, |_| {
            let lam = value_of("lambda");
            let prof = curvature_profile(&GeminiParams::default(), lam.asinh())?;
            Ok(c(prof.theta - lam.atan()))
        }),
        E::closed("cotangent_fixed_point", 14, CFP, |_| {
            let lam = value_of("lambda");
            let prof = curvature_profile(&GeminiParams::default(), lam.asinh())?;
            let cfp = value_of("c_cfp");
            Ok(C::new(cfp - (1.0 / lam).asinh(), prof.y - cfp))
        }),
        E::closed("mamikon_sweep", 14, MAMIKON, |_| Ok(c(mamikon_area()? - PI2 / 4.0))),
        E::closed("pi_hole", 14, PI_HOLE, |_| {
            let h = pi_hole()?;
            let dev = [h.volume - PI * PI2, h.cross_section - PI2, h.throat - PI, h.depth - PI];
            Ok(c(dev.iter().map(|d| d.abs()).sum()))
        }),
    ]
}

pub(super) fn entries() -> Vec<E> {
    let mut v = campbell_chain();
    v.extend(real_parts_and_ladders());
    v.extend(tribonacci_application());
    v.extend(solids());
    v
}
