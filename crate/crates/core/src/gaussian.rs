//! Zero-mean Gaussian states: covariance matrices, symplectic transforms,
//! Williamson spectra and von Neumann entropies.
//!
//! Vacuum variance is 1 (the vacuum covariance matrix is the identity).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::matrix::Matrix;

/// Symmetry tolerance, relative to the largest entry.
const SYMMETRY_TOL: f64 = 1e-12;
/// Symplectic eigenvalues in `[1 − PHYSICAL_SLACK, 1]` are clamped to 1.
pub const PHYSICAL_SLACK: f64 = 1e-9;
const SYMPLECTIC_TOL: f64 = 1e-10;
/// Degenerate-pair matching tolerance, relative to the largest eigenvalue.
const PAIRING_TOL: f64 = 1e-8;

/// The standard symplectic form `⊕ₖ [[0, 1], [−1, 0]]` on `modes` modes.
pub fn symplectic_form(modes: usize) -> Matrix {
    let mut omega = Matrix::zeros(2 * modes);
    for k in 0..modes {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

/// Covariance matrix of an `M`-mode Gaussian state (2M×2M, symmetric,
/// all symplectic eigenvalues ≥ 1).
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    modes: usize,
    entries: Matrix,
}

impl CovarianceMatrix {
    /// Validates symmetry and physicality.
    pub fn new(entries: Matrix) -> Result<Self> {
        let cov = Self::from_symmetric(entries)?;
        symplectic_eigenvalues(&cov)?;
        Ok(cov)
    }

    fn from_symmetric(entries: Matrix) -> Result<Self> {
        let dim = entries.dim();
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: dim.div_ceil(2).max(1),
                found: dim / 2,
            });
        }
        let asym = entries.asymmetry();
        if asym > SYMMETRY_TOL * entries.max_abs().max(1.0) {
            return Err(Error::NotSymmetric(asym));
        }
        Ok(CovarianceMatrix {
            modes: dim / 2,
            entries,
        })
    }

    /// `M`-mode vacuum.
    pub fn vacuum(modes: usize) -> Self {
        CovarianceMatrix {
            modes,
            entries: Matrix::identity(2 * modes),
        }
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &CovarianceMatrix) -> CovarianceMatrix {
        let n1 = self.entries.dim();
        let n = n1 + other.entries.dim();
        let mut m = Matrix::zeros(n);
        for i in 0..n1 {
            for j in 0..n1 {
                m[(i, j)] = self.entries[(i, j)];
            }
        }
        for i in n1..n {
            for j in n1..n {
                m[(i, j)] = other.entries[(i - n1, j - n1)];
            }
        }
        CovarianceMatrix {
            modes: self.modes + other.modes,
            entries: m,
        }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    /// Entry `(i, j)` of the 2M×2M matrix.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn determinant_via_spectrum(&self) -> Result<f64> {
        let (vals, _) = self.entries.symmetric_eigen()?;
        Ok(vals.iter().product())
    }
}

/// A real 2M×2M matrix `S` with `S Ω Sᵀ = Ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticTransform {
    modes: usize,
    entries: Matrix,
}

impl SymplecticTransform {
    /// Validates the symplectic condition to 1e-10 entrywise.
    pub fn new(entries: Matrix) -> Result<Self> {
        let dim = entries.dim();
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: dim.div_ceil(2).max(1),
                found: dim / 2,
            });
        }
        let s = SymplecticTransform {
            modes: dim / 2,
            entries,
        };
        let dev = s.symplectic_deviation();
        if dev > SYMPLECTIC_TOL {
            return Err(Error::NotSymplectic(dev));
        }
        Ok(s)
    }

    pub fn identity(modes: usize) -> Self {
        SymplecticTransform {
            modes,
            entries: Matrix::identity(2 * modes),
        }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    /// Max entrywise deviation of `S Ω Sᵀ` from `Ω`.
    pub fn symplectic_deviation(&self) -> f64 {
        let omega = symplectic_form(self.modes);
        omega.congruence(&self.entries).max_abs_diff(&omega)
    }

    /// `self · rhs` (apply `rhs` first).
    pub fn then_after(&self, rhs: &SymplecticTransform) -> Result<SymplecticTransform> {
        if self.modes != rhs.modes {
            return Err(Error::DimensionMismatch {
                expected: self.modes,
                found: rhs.modes,
            });
        }
        Ok(SymplecticTransform {
            modes: self.modes,
            entries: &self.entries * &rhs.entries,
        })
    }
}

/// Symplectic eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpectrum {
    values: Vec<f64>,
}

impl SymplecticSpectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `Σₖ g(νₖ)`.
    pub fn entropy(&self) -> f64 {
        self.values.iter().map(|&nu| g_unchecked(nu)).sum()
    }
}

fn g_unchecked(x: f64) -> f64 {
    if x <= 1.0 {
        return 0.0;
    }
    if x.is_infinite() {
        return f64::INFINITY;
    }
    let up = (x + 1.0) / 2.0;
    let down = (x - 1.0) / 2.0;
    up * math::log2(up) - down * math::log2(down)
}

/// Entropy in bits of a single mode with symplectic eigenvalue `x`:
/// `((x+1)/2) log₂((x+1)/2) − ((x−1)/2) log₂((x−1)/2)`.
///
/// Values in `[1 − 1e-9, 1]` are treated as 1 (pure mode, entropy 0).
pub fn g_entropy(x: f64) -> Result<f64> {
    if x.is_nan() || x < 1.0 - PHYSICAL_SLACK {
        return Err(Error::domain("x", x, "x >= 1"));
    }
    Ok(g_unchecked(x))
}

/// Single-mode thermal state `(1 + 2N)·I₂`.
pub fn thermal_cov(mean_photons: f64) -> Result<CovarianceMatrix> {
    if !(mean_photons >= 0.0) || !mean_photons.is_finite() {
        return Err(Error::domain("N", mean_photons, "0 <= N < inf"));
    }
    let v = 1.0 + 2.0 * mean_photons;
    Ok(CovarianceMatrix {
        modes: 1,
        entries: Matrix::diagonal(&[v, v]),
    })
}

fn check_pair(i: usize, j: usize, total_modes: usize) -> Result<()> {
    for index in [i, j] {
        if index >= total_modes {
            return Err(Error::InvalidMode {
                index,
                modes: total_modes,
            });
        }
    }
    if i == j {
        return Err(Error::DuplicateMode(i));
    }
    Ok(())
}

/// Beamsplitter of transmissivity `T` between modes `i` and `j`:
///
/// ```text
/// [ √T·I      √(1−T)·I ]   (rows of mode i)
/// [ −√(1−T)·I  √T·I    ]   (rows of mode j)
/// ```
///
/// identity on every other mode.
pub fn beamsplitter(transmissivity: f64, i: usize, j: usize, total_modes: usize) -> Result<SymplecticTransform> {
    if !(0.0..=1.0).contains(&transmissivity) {
        return Err(Error::domain("T", transmissivity, "0 <= T <= 1"));
    }
    check_pair(i, j, total_modes)?;
    let t = math::sqrt(transmissivity);
    let r = math::sqrt(1.0 - transmissivity);
    let mut m = Matrix::identity(2 * total_modes);
    for k in 0..2 {
        let (a, b) = (2 * i + k, 2 * j + k);
        m[(a, a)] = t;
        m[(a, b)] = r;
        m[(b, a)] = -r;
        m[(b, b)] = t;
    }
    Ok(SymplecticTransform {
        modes: total_modes,
        entries: m,
    })
}

/// Two-mode squeezer with gain `G = cosh² r` between modes `i` and `j`:
///
/// ```text
/// [ √G·I        √(G−1)·σz ]
/// [ √(G−1)·σz   √G·I      ]
/// ```
pub fn two_mode_squeezer(gain: f64, i: usize, j: usize, total_modes: usize) -> Result<SymplecticTransform> {
    if !(gain >= 1.0) || !gain.is_finite() {
        return Err(Error::domain("G", gain, "1 <= G < inf"));
    }
    check_pair(i, j, total_modes)?;
    let c = math::sqrt(gain);
    let s = math::sqrt(gain - 1.0);
    let mut m = Matrix::identity(2 * total_modes);
    for (k, sign) in [(0, 1.0), (1, -1.0)] {
        let (a, b) = (2 * i + k, 2 * j + k);
        m[(a, a)] = c;
        m[(a, b)] = sign * s;
        m[(b, a)] = sign * s;
        m[(b, b)] = c;
    }
    Ok(SymplecticTransform {
        modes: total_modes,
        entries: m,
    })
}

/// `S Γ Sᵀ`.
pub fn apply(s: &SymplecticTransform, cov: &CovarianceMatrix) -> Result<CovarianceMatrix> {
    if s.modes != cov.modes {
        return Err(Error::DimensionMismatch {
            expected: cov.modes,
            found: s.modes,
        });
    }
    let mut out = cov.entries.congruence(&s.entries);
    // Re-symmetrize rounding noise.
    let n = out.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (out[(i, j)] + out[(j, i)]);
            out[(i, j)] = avg;
            out[(j, i)] = avg;
        }
    }
    Ok(CovarianceMatrix {
        modes: cov.modes,
        entries: out,
    })
}

fn validate_subset(keep: &[usize], modes: usize) -> Result<()> {
    if keep.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    for (n, &m) in keep.iter().enumerate() {
        if m >= modes {
            return Err(Error::InvalidMode { index: m, modes });
        }
        if keep[..n].contains(&m) {
            return Err(Error::DuplicateMode(m));
        }
    }
    Ok(())
}

/// Partial trace: the principal submatrix on the kept modes, in the order
/// given.
pub fn reduce(cov: &CovarianceMatrix, keep: &[usize]) -> Result<CovarianceMatrix> {
    validate_subset(keep, cov.modes)?;
    let indices: Vec<usize> = keep.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect();
    Ok(CovarianceMatrix {
        modes: keep.len(),
        entries: cov.entries.principal_submatrix(&indices),
    })
}

/// Williamson spectrum of `Γ`.
///
/// The eigenvalues of `ΩΓ` are `±iνₖ`. With `R = Γ^{1/2}`, `ΩΓ` is similar
/// to the antisymmetric `A = RΩR`, and `−(ΩΓ)²` to `AᵀA`. Rather than square
/// (which loses half the digits of small ν next to large ones) the
/// symmetric embedding `[[0, A], [Aᵀ, 0]]` is diagonalized: its positive
/// eigenvalues are the singular values of `A`, i.e. each `νₖ` twice.
pub fn symplectic_eigenvalues(cov: &CovarianceMatrix) -> Result<SymplecticSpectrum> {
    let n = cov.entries.dim();
    let m = cov.modes;

    let (lambda, v) = cov.entries.symmetric_eigen()?;
    if lambda.iter().any(|&l| !(l > 0.0)) {
        return Err(Error::Numeric("covariance matrix is not positive definite"));
    }
    let sqrt_lambda: Vec<f64> = lambda.iter().map(|&l| math::sqrt(l)).collect();
    let root = Matrix::diagonal(&sqrt_lambda).congruence(&v);
    let omega = symplectic_form(m);
    let a = &(&root * &omega) * &root;

    let mut embed = Matrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            // Symmetrize A's antisymmetry exactly before embedding.
            let aij = 0.5 * (a[(i, j)] - a[(j, i)]);
            embed[(i, n + j)] = aij;
            embed[(n + j, i)] = aij;
        }
    }
    let (mut mu, _) = embed.symmetric_eigen()?;
    mu.sort_by(|x, y| y.total_cmp(x));
    let positive = &mu[..n];

    let scale = positive[0].max(1.0);
    // Backward error of the eigensolvers is a few ulps of the largest
    // covariance eigenvalue; strongly squeezed pure states need that slack.
    let lambda_max = lambda.iter().copied().fold(0.0, f64::max);
    let slack = PHYSICAL_SLACK.max(64.0 * f64::EPSILON * lambda_max);
    let mut values = Vec::with_capacity(m);
    for k in 0..m {
        let (x, y) = (positive[2 * k], positive[2 * k + 1]);
        if !(y > 0.0) || (x - y).abs() > PAIRING_TOL * scale {
            return Err(Error::Numeric("symplectic eigenvalues do not pair up"));
        }
        let nu = 0.5 * (x + y);
        if nu < 1.0 - slack {
            return Err(Error::Unphysical(nu));
        }
        values.push(nu.max(1.0));
    }
    Ok(SymplecticSpectrum { values })
}

/// Von Neumann entropy in bits, `Σₖ g(νₖ)`.
pub fn gaussian_entropy(cov: &CovarianceMatrix) -> Result<f64> {
    Ok(symplectic_eigenvalues(cov)?.entropy())
}

/// `H(B|C) = H(BC) − H(C)`, where `B` and `C` are disjoint mode subsets.
/// An empty `C` gives `H(B)`.
pub fn conditional_entropy(cov: &CovarianceMatrix, b: &[usize], c: &[usize]) -> Result<f64> {
    if let Some(&m) = b.iter().find(|m| c.contains(m)) {
        return Err(Error::Overlap(m));
    }
    let joint: Vec<usize> = b.iter().chain(c).copied().collect();
    let h_joint = gaussian_entropy(&reduce(cov, &joint)?)?;
    if c.is_empty() {
        return Ok(h_joint);
    }
    let h_c = gaussian_entropy(&reduce(cov, c)?)?;
    Ok(h_joint - h_c)
}
