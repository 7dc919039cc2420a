use gemini_dilog::Complex64;

/// Precision 15 after the leading digit: fixed notation for moderate magnitudes,
/// scientific otherwise.
pub fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:.15e}");
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).expect("integer exponent");
    if (-5..15).contains(&exp) {
        format!("{v:.*}", (15 - exp) as usize)
    } else {
        sci
    }
}

pub fn complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {} i", num(z.re), num(z.im.abs()))
}

/// A real result when the imaginary part vanishes exactly.
pub fn real_or_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        num(z.re)
    } else {
        complex(z)
    }
}

pub fn csv_row(cells: &[f64]) -> String {
    cells.iter().map(|&c| num(c)).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_fifteen() {
        assert_eq!(num(std::f64::consts::LN_2 * std::f64::consts::PI), "2.177586090303602");
        assert_eq!(num(0.5822405264650125), "0.5822405264650125");
        assert_eq!(num(-1234.5), "-1234.500000000000");
        assert_eq!(num(-0.00123456789012345678), "-0.001234567890123457");
        assert_eq!(num(1e-9), "1.000000000000000e-9");
        assert_eq!(num(0.0), "0");
    }

    #[test]
    fn complex_sign_is_spelled_out() {
        assert_eq!(complex(Complex64::new(1.0, -2.0)), "1.000000000000000 - 2.000000000000000 i");
        assert_eq!(complex(Complex64::new(1.0, 2.0)), "1.000000000000000 + 2.000000000000000 i");
    }
}
