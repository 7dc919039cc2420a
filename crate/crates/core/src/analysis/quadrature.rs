use crate::error::{domain, Error, Result};

/// One end of an integration range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Finite(f64),
    /// Finite endpoint where the integrand has an integrable (log-type) singularity.
    LogSingular(f64),
    /// Upper limit only.
    PosInfinity,
}

impl Limit {
    fn point(self) -> Option<f64> {
        match self {
            Limit::Finite(x) | Limit::LogSingular(x) => Some(x),
            Limit::PosInfinity => None,
        }
    }

    fn singular(self) -> bool {
        matches!(self, Limit::LogSingular(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub lower: Limit,
    pub upper: Limit,
    pub abs_tol: f64,
    pub max_depth: usize,
}

impl QuadratureSpec {
    pub fn new(lower: Limit, upper: Limit) -> Self {
        QuadratureSpec { lower, upper, abs_tol: 1e-12, max_depth: 40 }
    }

    pub fn finite(a: f64, b: f64) -> Self {
        Self::new(Limit::Finite(a), Limit::Finite(b))
    }

    pub fn with_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 4000;
const TANH_SINH_LEVELS: usize = 12;

/// ∫ f over the range in `spec`.
///
/// Finite smooth ranges use adaptive Gauss–Kronrod (7/15) with global
/// subdivision. A flagged endpoint switches the finite piece to tanh-sinh.
/// An infinite upper limit is split off at `lower + 1` and mapped onto
/// [0, 1) with x = c + t/(1−t).
pub fn integrate<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    if !(spec.abs_tol > 0.0) {
        return domain(format!("abs_tol must be positive, got {}", spec.abs_tol));
    }
    let a = match spec.lower.point() {
        Some(a) if a.is_finite() => a,
        _ => return domain("lower limit must be finite"),
    };
    match spec.upper {
        Limit::PosInfinity => {
            let c = a + 1.0;
            let head = finite(&f, a, c, spec.lower.singular(), false, spec)?;
            let mapped = |t: f64| {
                let s = 1.0 - t;
                let v = f(c + t / s);
                if v == 0.0 {
                    0.0
                } else {
                    v / (s * s)
                }
            };
            let tail = gauss_kronrod(&mapped, 0.0, 1.0, spec)?;
            Ok(head + tail)
        }
        upper => {
            let b = upper.point().unwrap();
            if !b.is_finite() {
                return domain("upper limit must be finite or PosInfinity");
            }
            if a == b {
                return Ok(0.0);
            }
            if b < a {
                return domain(format!("lower limit {a} exceeds upper limit {b}"));
            }
            finite(&f, a, b, spec.lower.singular(), upper.singular(), spec)
        }
    }
}

fn finite<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    sing_a: bool,
    sing_b: bool,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if sing_a || sing_b {
        tanh_sinh(f, a, b, spec)
    } else {
        gauss_kronrod(f, a, b, spec)
    }
}

struct Segment {
    a: f64,
    b: f64,
    est: f64,
    err: f64,
    depth: usize,
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    let (est, err) = kronrod(f, a, b);
    let mut segs = vec![Segment { a, b, est, err, depth: 0 }];
    loop {
        let total: f64 = segs.iter().map(|s| s.est).sum();
        let error: f64 = segs.iter().map(|s| s.err).sum();
        if !total.is_finite() {
            return Err(Error::Accuracy { estimate: total, error });
        }
        if error <= spec.abs_tol.max(4.0 * f64::EPSILON * total.abs()) {
            return Ok(total);
        }
        let (idx, worst) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, s)| (i, s.depth))
            .unwrap();
        if worst >= spec.max_depth || segs.len() >= MAX_INTERVALS {
            return Err(Error::Accuracy { estimate: total, error });
        }
        let s = segs.swap_remove(idx);
        let m = 0.5 * (s.a + s.b);
        let (e1, r1) = kronrod(f, s.a, m);
        let (e2, r2) = kronrod(f, m, s.b);
        segs.push(Segment { a: s.a, b: m, est: e1, err: r1, depth: s.depth + 1 });
        segs.push(Segment { a: m, b: s.b, est: e2, err: r2, depth: s.depth + 1 });
    }
}

// Double-exponential rule; abscissae are formed as offsets from the nearer
// endpoint so points next to a singular end keep full relative precision.
fn tanh_sinh<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    use std::f64::consts::FRAC_PI_2;
    let half = 0.5 * (b - a);
    let t_max = 3.5;
    let node = |t: f64| -> f64 {
        // weight and value at ±t; offset = half·(1 − tanh u) = half·2/(e^{2u}+1)
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        let off = 2.0 * half / ((2.0 * u).exp() + 1.0);
        let mut s = 0.0;
        let l = f(a + off);
        if l.is_finite() {
            s += l;
        }
        let r = f(b - off);
        if r.is_finite() {
            s += r;
        }
        w * s
    };
    let mut h = 1.0;
    let mut sum = FRAC_PI_2 * f(a + half);
    let mut k = 1.0;
    while k <= t_max {
        sum += node(k);
        k += 1.0;
    }
    let mut prev = sum * h * half;
    for level in 1..=TANH_SINH_LEVELS {
        h *= 0.5;
        let mut t = h;
        while t <= t_max {
            sum += node(t);
            t += 2.0 * h;
        }
        let cur = sum * h * half;
        let diff = (cur - prev).abs();
        if level >= 3 && diff <= spec.abs_tol.max(8.0 * f64::EPSILON * cur.abs()) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Accuracy { estimate: prev, error: f64::NAN })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn smooth_polynomial_is_exact() {
        let spec = QuadratureSpec::finite(0.0, 2.0);
        let v = integrate(|x| x * x * x, &spec).unwrap();
        assert!((v - 4.0).abs() < 1e-14);
        assert_eq!(integrate(|_| 0.0, &QuadratureSpec::finite(0.0, 1.0)).unwrap(), 0.0);
    }

    #[test]
    fn log_singular_endpoint() {
        let spec = QuadratureSpec::new(Limit::LogSingular(0.0), Limit::Finite(1.0));
        let v = integrate(|x: f64| -x.ln(), &spec).unwrap();
        assert!((v - 1.0).abs() < 1e-13);
    }

    #[test]
    fn infinite_range_with_singular_start() {
        let spec = QuadratureSpec::new(Limit::LogSingular(0.0), Limit::PosInfinity);
        let v = integrate(|x: f64| (1.0 / (0.5 * x).tanh()).ln(), &spec).unwrap();
        assert!((v - PI * PI / 4.0).abs() < 1e-11);
        let w = integrate(|x: f64| -(-(-x).exp()).ln_1p(), &spec).unwrap();
        assert!((w - PI * PI / 6.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_reversed_and_unconverged() {
        assert!(integrate(|x| x, &QuadratureSpec::finite(1.0, 0.0)).is_err());
        let mut spec = QuadratureSpec::finite(0.0, 1.0).with_tol(1e-15);
        spec.max_depth = 2;
        let r = integrate(|x: f64| (1.0 / x).sin(), &spec);
        assert!(matches!(r, Err(Error::Accuracy { .. })));
    }
}
