//! Scalar helpers on top of `libm`, plus the classical entropies used by the
//! finite-dimensional bounds. `0·log 0` is taken to be 0 throughout.

use core::f64::consts::LN_2;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub fn log10(x: f64) -> f64 {
    libm::log10(x)
}

#[inline]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn atanh(x: f64) -> f64 {
    libm::atanh(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// `log₂((1 + x)/(1 − x))` for `0 ≤ x ≤ 1`, evaluated through `atanh` so
/// small arguments keep full relative precision.
pub fn log2_ratio(x: f64) -> f64 {
    if x >= 1.0 {
        return f64::INFINITY;
    }
    2.0 * atanh(x) / LN_2
}

/// `x·log₂ x`, continuous at 0.
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * log2(x)
    }
}

/// Binary entropy `h(p) = −p log₂ p − (1−p) log₂(1−p)`.
pub fn binary_entropy(p: f64) -> f64 {
    -xlog2x(p) - xlog2x(1.0 - p)
}

/// Shannon entropy in bits of a probability vector.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    -probs.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// `ζ(a, b) = a·b·log₂(a/b)`, with `ζ(a, 0) = 0`.
pub fn zeta(a: f64, b: f64) -> f64 {
    if b == 0.0 || a == 0.0 {
        0.0
    } else {
        a * b * log2(a / b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropies_at_the_edges() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(1.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
        assert!((shannon_entropy(&[0.25; 4]) - 2.0).abs() < 1e-15);
        assert_eq!(shannon_entropy(&[1.0, 0.0, 0.0, 0.0]), 0.0);
    }

    #[test]
    fn log2_ratio_matches_direct_form() {
        assert!((log2_ratio(1e-12) - 2e-12 / LN_2).abs() < 1e-27);
        for &x in &[0.1, 0.5, 0.9] {
            let direct = log2((1.0 + x) / (1.0 - x));
            assert!((log2_ratio(x) - direct).abs() <= 1e-14 * direct.max(1e-12));
        }
        assert!(log2_ratio(1.0).is_infinite());
    }

    #[test]
    fn zeta_vanishes_on_zero_argument() {
        assert_eq!(zeta(4.0, 0.0), 0.0);
        assert!((zeta(2.0, 1.0) - 2.0).abs() < 1e-15);
    }
}
