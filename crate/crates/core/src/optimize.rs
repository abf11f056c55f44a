//! One-dimensional optimization on a closed interval: a uniform grid picks
//! the best bracket, golden-section search refines it.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Location and value of an optimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

/// Maximizes `f` on `[lo, hi]`.
///
/// `grid` points (at least 3) are evaluated, the best one is bracketed by
/// its neighbours, and golden-section search narrows the bracket to `tol`.
/// The endpoints are always candidates, so maxima on the boundary are found
/// exactly.
pub fn maximize<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, grid: usize, tol: f64) -> Extremum {
    let grid = grid.max(3);
    let step = (hi - lo) / (grid - 1) as f64;
    let at = |i: usize| if i == grid - 1 { hi } else { lo + step * i as f64 };

    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..grid {
        let v = f(at(i));
        if v > best_val {
            best = i;
            best_val = v;
        }
    }

    let mut a = at(best.saturating_sub(1));
    let mut b = at((best + 1).min(grid - 1));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }

    let mid = 0.5 * (a + b);
    let fm = f(mid);
    if fm >= best_val {
        Extremum { x: mid, value: fm }
    } else {
        Extremum {
            x: at(best),
            value: best_val,
        }
    }
}

/// Minimizes `f` on `[lo, hi]`; see [`maximize`].
pub fn minimize<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, grid: usize, tol: f64) -> Extremum {
    let m = maximize(|x| -f(x), lo, hi, grid, tol);
    Extremum {
        x: m.x,
        value: -m.value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_interior_maximum() {
        let m = maximize(|x| -(x - 0.3141) * (x - 0.3141), 0.0, 1.0, 11, 1e-12);
        assert!((m.x - 0.3141).abs() < 1e-6);
        assert!(m.value.abs() < 1e-12);
    }

    #[test]
    fn keeps_boundary_optimum() {
        let m = maximize(|x| x, 0.0, 1.0, 5, 1e-10);
        assert_eq!(m.value, 1.0);
        let m = minimize(|x| x, 0.0, 2.0, 5, 1e-10);
        assert_eq!(m.value, 0.0);
    }

    #[test]
    fn degenerate_interval() {
        let m = maximize(|x| x * x, 0.5, 0.5, 101, 1e-10);
        assert_eq!(m.x, 0.5);
    }
}
