//! Fixed-precision number formatting shared by every output format.

/// `%.12g`: 12 significant digits, trailing zeros dropped, scientific
/// notation outside `1e-4 ≤ |x| < 1e12`. Infinities print as `inf`/`-inf`,
/// NaN as `nan`, and `-0` as `0`.
pub fn format_g(x: f64) -> String {
    const DIGITS: usize = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= DIGITS as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Empty for a missing value.
pub fn format_cell(x: Option<f64>) -> String {
    x.map(format_g).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (0.5, "0.5"),
            (1.584962500721156, "1.58496250072"),
            (-std::f64::consts::LOG2_E, "-1.44269504089"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (1e-5, "1e-05"),
            (1.5e-20, "1.5e-20"),
            (0.0001234, "0.0001234"),
            (f64::INFINITY, "inf"),
            (2.0 / 3.0, "0.666666666667"),
            (9.9999999999999e-6, "1e-05"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g(x), want, "{x:e}");
        }
    }

    #[test]
    fn missing_cells_are_empty() {
        assert_eq!(format_cell(None), "");
        assert_eq!(format_cell(Some(0.25)), "0.25");
    }
}
