//! Squashed-entanglement upper bounds on Q₂ and P₂.
//!
//! Gaussian channels: [`esq_finite_n`] (mean photon number `N`) and
//! [`esq_asymptotic`] (`N → ∞`), with the equivalent `(τ, ν)` and `χ`
//! forms and the additive-noise limit. Finite-dimensional channels:
//! erasure, amplitude damping, Pauli and depolarizing, plus the convexity
//! and entanglement-breaking rules.

use core::f64::consts::LN_2;
use core::fmt;

use crate::channels::{
    mode, validate_distribution, Channel, PhaseInsensitiveChannel, PhotonConstraint, QubitChannelSpec,
};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::gaussian::{apply, conditional_entropy, thermal_cov, CovarianceMatrix};
use crate::math::{self, binary_entropy, log2_ratio, shannon_entropy, xlog2x, zeta};
use crate::optimize::{maximize, minimize};

/// `|GT − 1|` below which the general asymptotic expression (0/0 at
/// `GT = 1`) is replaced by its limit.
pub const ADDITIVE_BRANCH_TOL: f64 = 1e-6;

const RADICAND_TOL: f64 = 1e-9;
const OPT_TOL: f64 = 1e-10;
const AD_GRID: usize = 101;
const DEPOL_GRID: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Upper,
    Lower,
    Exact,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Exact => "exact",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a formula comes from: implemented from first principles here, or
/// taken as a closed form from the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaSource {
    Local,
    ExternalCited,
}

impl FormulaSource {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaSource::Local => "local",
            FormulaSource::ExternalCited => "external-cited",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    EsqFiniteN,
    EsqAsymptotic,
    EsqAdditiveLimit,
    EsqChiForm,
    ErasureExact,
    AmplitudeDamping,
    Pauli,
    DepolarizingPauli,
    Depolarizing,
    ConvexCombination,
    EbZero,
    PirandolaAd,
    RciAd,
    PirandolaAmplifier,
    PirandolaAdditive,
    CoherentInfoAdditive,
    PlobPureLoss,
    TakeokaPureLoss,
}

impl BoundKind {
    pub const fn as_str(self) -> &'static str {
        match self {
            BoundKind::EsqFiniteN => "esq-finite-N",
            BoundKind::EsqAsymptotic => "esq-asymptotic",
            BoundKind::EsqAdditiveLimit => "esq-additive-limit",
            BoundKind::EsqChiForm => "esq-chi-form",
            BoundKind::ErasureExact => "erasure-exact",
            BoundKind::AmplitudeDamping => "esq-amplitude-damping",
            BoundKind::Pauli => "esq-pauli",
            BoundKind::DepolarizingPauli => "esq-depolarizing-pauli",
            BoundKind::Depolarizing => "esq-depolarizing",
            BoundKind::ConvexCombination => "esq-convex",
            BoundKind::EbZero => "eb-zero",
            BoundKind::PirandolaAd => "pirandola-ad",
            BoundKind::RciAd => "rci-ad",
            BoundKind::PirandolaAmplifier => "pirandola-amplifier",
            BoundKind::PirandolaAdditive => "pirandola-additive",
            BoundKind::CoherentInfoAdditive => "coherent-info-additive",
            BoundKind::PlobPureLoss => "plob-pure-loss",
            BoundKind::TakeokaPureLoss => "takeoka-pure-loss",
        }
    }

    pub const fn source(self) -> FormulaSource {
        match self {
            BoundKind::PlobPureLoss => FormulaSource::ExternalCited,
            _ => FormulaSource::Local,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound in bits. `value` may be `+∞` (e.g. the identity channel).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    pub kind: BoundKind,
    pub direction: Direction,
    pub channel: Channel,
    pub constraint: PhotonConstraint,
}

impl BoundResult {
    pub(crate) fn new(value: f64, kind: BoundKind, direction: Direction, channel: Channel) -> Self {
        BoundResult {
            value,
            kind,
            direction,
            channel,
            constraint: PhotonConstraint::Unbounded,
        }
    }

    fn with_constraint(mut self, constraint: PhotonConstraint) -> Self {
        self.constraint = constraint;
        self
    }
}

/// Symplectic eigenvalues of the squashed output on `E₁′E₂′` and
/// `BE₁′E₂′`, each sorted in descending order. `nu_be[2]` is always 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormSpectra {
    pub nu_e: [f64; 2],
    pub nu_be: [f64; 3],
    pub omega_plus: f64,
    pub omega_minus: f64,
}

struct DdSpectra {
    nu_e: [Dd; 2],
    nu_be: [Dd; 2],
    omega_plus: Dd,
    omega_minus: Dd,
}

fn checked_sqrt(radicand: Dd) -> Result<Dd> {
    if radicand.to_f64() < -RADICAND_TOL {
        return Err(Error::Numeric("negative radicand in closed-form spectrum"));
    }
    Ok(radicand.sqrt())
}

fn sorted_pair(a: Dd, b: Dd) -> [Dd; 2] {
    if a >= b {
        [a, b]
    } else {
        [b, a]
    }
}

fn spectra_dd(g: f64, t: f64, n: f64) -> Result<DdSpectra> {
    let g = Dd::from_f64(g);
    let n = Dd::from_f64(n);
    let gt = g * t;
    let one_n = n + 1.0;

    let base = one_n.sqr() - n * t * 4.0 + (g + gt * n).sqr();
    let cross = g * one_n * (n * t - 1.0) * 2.0;
    let omega_plus = checked_sqrt(base + cross)?;
    let omega_minus = checked_sqrt(base - cross)?;

    let p_e = g.sqr() + 1.0 + n * ((g - 1.0) * gt - t + 1.0) * 2.0 + (n * (gt - 1.0)).sqr();
    let q_e = g - 1.0 + n * (gt - 1.0);
    let p_be = g.sqr() + 1.0 + n * ((g + 1.0) * gt - t + 1.0) * 2.0 + (n * (gt + 1.0)).sqr();
    let q_be = g + 1.0 + n * (gt + 1.0);

    let eig = |p: Dd, q: Dd, omega: Dd| {
        let s = q * omega;
        sorted_pair(((p + s).abs() / 2.0).sqrt(), ((p - s).abs() / 2.0).sqrt())
    };
    Ok(DdSpectra {
        nu_e: eig(p_e, q_e, omega_minus),
        nu_be: eig(p_be, q_be, omega_plus),
        omega_plus,
        omega_minus,
    })
}

fn check_gtn(g: f64, t: f64, n: f64) -> Result<()> {
    if !(g >= 1.0 && g.is_finite()) {
        return Err(Error::domain("G", g, "G >= 1"));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain("T", t, "0 <= T <= 1"));
    }
    if !(n >= 0.0 && n.is_finite()) {
        return Err(Error::domain("N", n, "N >= 0"));
    }
    Ok(())
}

/// Closed-form symplectic spectra of the squashed channel output for a
/// thermal input with `N` mean photons.
pub fn closed_form_spectra(g: f64, t: f64, n: f64) -> Result<ClosedFormSpectra> {
    check_gtn(g, t, n)?;
    let s = spectra_dd(g, t, n)?;
    Ok(ClosedFormSpectra {
        nu_e: [s.nu_e[0].to_f64(), s.nu_e[1].to_f64()],
        nu_be: [s.nu_be[0].to_f64(), s.nu_be[1].to_f64(), 1.0],
        omega_plus: s.omega_plus.to_f64(),
        omega_minus: s.omega_minus.to_f64(),
    })
}

fn g_entropy_dd(x: Dd) -> Dd {
    if x <= Dd::ONE {
        return Dd::ZERO;
    }
    let p = (x + 1.0) / 2.0;
    let m = (x - 1.0) / 2.0;
    p * p.log2() - m * m.log2()
}

/// `H(B|E₁′E₂′)` from the closed-form spectra.
fn finite_n_value(g: f64, t: f64, n: f64) -> Result<f64> {
    // No transmission: B is independent of the input and the g-sums cancel
    // exactly; skip the rounding residue.
    if t == 0.0 {
        return Ok(0.0);
    }
    let s = spectra_dd(g, t, n)?;
    let v = g_entropy_dd(s.nu_be[0]) + g_entropy_dd(s.nu_be[1]) - g_entropy_dd(s.nu_e[0]) - g_entropy_dd(s.nu_e[1]);
    Ok(v.to_f64().max(0.0))
}

fn check_photons(n: f64) -> Result<()> {
    if n >= 0.0 && n.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("N", n, "N >= 0"))
    }
}

/// Squashed-entanglement bound for inputs with mean photon number `N`.
pub fn esq_finite_n(ch: &PhaseInsensitiveChannel, n: f64) -> Result<BoundResult> {
    check_photons(n)?;
    let value = finite_n_value(ch.gain(), ch.transmissivity(), n)?;
    Ok(
        BoundResult::new(value, BoundKind::EsqFiniteN, Direction::Upper, Channel::Gaussian(*ch))
            .with_constraint(PhotonConstraint::Finite(n)),
    )
}

/// Full 5-mode output covariance `D·(thermal(N) ⊕ vacuum⁴)·Dᵀ`, modes
/// ordered `(B, E₁′, F₁′, E₂′, F₂′)`.
pub fn squashed_output(ch: &PhaseInsensitiveChannel, n: f64) -> Result<CovarianceMatrix> {
    check_photons(n)?;
    let input = thermal_cov(n)?.direct_sum(&CovarianceMatrix::vacuum(mode::COUNT - 1));
    apply(&ch.squashing_pipeline()?, &input)
}

/// `(H(B|E₁′E₂′), H(B|F₁′F₂′))` via the generic Gaussian machinery.
pub fn squashed_conditional_entropies(ch: &PhaseInsensitiveChannel, n: f64) -> Result<(f64, f64)> {
    let out = squashed_output(ch, n)?;
    let e = conditional_entropy(&out, &[mode::B], &[mode::E1, mode::E2])?;
    let f = conditional_entropy(&out, &[mode::B], &[mode::F1, mode::F2])?;
    Ok((e, f))
}

/// Same quantity as [`esq_finite_n`], computed by building the output
/// covariance and diagonalizing it numerically.
pub fn esq_finite_n_oracle(ch: &PhaseInsensitiveChannel, n: f64) -> Result<BoundResult> {
    let out = squashed_output(ch, n)?;
    let value = conditional_entropy(&out, &[mode::B], &[mode::E1, mode::E2])?;
    Ok(
        BoundResult::new(value, BoundKind::EsqFiniteN, Direction::Upper, Channel::Gaussian(*ch))
            .with_constraint(PhotonConstraint::Finite(n)),
    )
}

/// `(T² + 1)/(2T)·log₂((1+T)/(1−T)) − 1/ln 2`.
fn additive_limit_t(t: f64) -> f64 {
    if t >= 1.0 {
        return f64::INFINITY;
    }
    if t <= 0.0 {
        return 0.0;
    }
    // q = atanh(T)/T − 1, by series when direct evaluation would cancel.
    let q = if t < 0.25 {
        let t2 = t * t;
        let mut term = 1.0;
        let mut q = 0.0;
        for k in 1..80 {
            term *= t2;
            let add = term / (2 * k + 1) as f64;
            q += add;
            if add < 1e-18 * q {
                break;
            }
        }
        q
    } else {
        math::atanh(t) / t - 1.0
    };
    (t * t * (1.0 + q) + q) / LN_2
}

/// Asymptotic bound in `(T, G)` form.
pub fn gbound1(t: f64, g: f64) -> f64 {
    if t == 1.0 && g == 1.0 {
        return f64::INFINITY;
    }
    if g == 1.0 {
        return log2_ratio(t);
    }
    if t == 1.0 {
        return log2_ratio(1.0 / g);
    }
    if (g * t - 1.0).abs() < ADDITIVE_BRANCH_TOL {
        return additive_limit_t(t);
    }
    ((1.0 - t * t) * g * log2_ratio(t) - (g * g - 1.0) * t * log2_ratio(1.0 / g)) / (1.0 - g * g * t * t)
}

/// Asymptotic bound in `(τ, ν)` form.
pub fn gbound2(tau: f64, nu: f64) -> f64 {
    if (tau - 1.0).abs() < ADDITIVE_BRANCH_TOL {
        return additive_limit_t(2.0 * tau / (tau + nu + 1.0));
    }
    (zeta(1.0 + nu + 3.0 * tau, 1.0 + nu - tau) - tau * zeta(tau + nu + 3.0, tau + nu - 1.0))
        / (2.0 * (1.0 + nu + tau) * (1.0 - tau * tau))
}

/// Unconstrained (`N → ∞`) squashed-entanglement bound.
pub fn esq_asymptotic(ch: &PhaseInsensitiveChannel) -> BoundResult {
    let value = gbound1(ch.transmissivity(), ch.gain());
    BoundResult::new(
        value,
        BoundKind::EsqAsymptotic,
        Direction::Upper,
        Channel::Gaussian(*ch),
    )
}

/// [`esq_asymptotic`] evaluated directly from `(τ, ν)`.
pub fn esq_asymptotic_tau_nu(tau: f64, nu: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::from_tau_nu(tau, nu)?;
    Ok(BoundResult::new(
        gbound2(tau, nu),
        BoundKind::EsqAsymptotic,
        Direction::Upper,
        Channel::Gaussian(ch),
    ))
}

/// Limit of the asymptotic bound on the line `GT = 1`, written for the
/// additive-noise channel with noise variance `n̄`.
pub fn esq_additive_limit(noise: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::additive(noise)?;
    let value = additive_limit_t(1.0 / (noise + 1.0));
    Ok(BoundResult::new(
        value,
        BoundKind::EsqAdditiveLimit,
        Direction::Upper,
        Channel::Gaussian(ch),
    ))
}

/// Asymptotic bound in terms of the excess noise `χ = ν − 1 + τ`.
pub fn esq_chi_form(tau: f64, chi: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::from_chi(tau, chi)?;
    let value = if (tau - 1.0).abs() < ADDITIVE_BRANCH_TOL {
        gbound2(tau, ch.nu())
    } else {
        (zeta(chi + 2.0 + 2.0 * tau, chi + 2.0 - 2.0 * tau) - tau * zeta(chi + 4.0, chi))
            / ((4.0 + 2.0 * chi) * (1.0 - tau * tau))
    };
    Ok(BoundResult::new(
        value,
        BoundKind::EsqChiForm,
        Direction::Upper,
        Channel::Gaussian(ch),
    ))
}

/// Finite-`N` or asymptotic bound, according to the constraint.
pub fn esq_gaussian(ch: &PhaseInsensitiveChannel, constraint: PhotonConstraint) -> Result<BoundResult> {
    match constraint {
        PhotonConstraint::Finite(n) => esq_finite_n(ch, n),
        PhotonConstraint::Unbounded => Ok(esq_asymptotic(ch)),
    }
}

/// `Q₂ = P₂ = (1 − p)·log₂ d` for the `d`-dimensional erasure channel.
pub fn erasure_capacity(dimension: u32, p: f64) -> Result<BoundResult> {
    let spec = QubitChannelSpec::Erasure { dimension, p };
    spec.validate()?;
    let value = (1.0 - p) * math::log2(dimension as f64);
    Ok(BoundResult::new(
        value,
        BoundKind::ErasureExact,
        Direction::Exact,
        spec.into(),
    ))
}

/// Half the entanglement-assisted capacity of amplitude damping,
/// `½·max_p [h(p) + h((1−γ)p) − h(γp)]`.
pub fn amplitude_damping_bound(gamma: f64) -> Result<BoundResult> {
    let spec = QubitChannelSpec::AmplitudeDamping { gamma };
    spec.validate()?;
    let objective = |p: f64| binary_entropy(p) + binary_entropy((1.0 - gamma) * p) - binary_entropy(gamma * p);
    let best = maximize(objective, 0.0, 1.0, AD_GRID, OPT_TOL);
    let value = (0.5 * best.value).max(0.0);
    Ok(BoundResult::new(
        value,
        BoundKind::AmplitudeDamping,
        Direction::Upper,
        spec.into(),
    ))
}

/// `1 − ½·H(p̄)` for a Pauli channel, floored at 0.
pub fn pauli_bound(probs: [f64; 4]) -> Result<BoundResult> {
    validate_distribution(&probs)?;
    let value = (1.0 - 0.5 * shannon_entropy(&probs)).max(0.0);
    let spec = QubitChannelSpec::Pauli { probs };
    Ok(BoundResult::new(value, BoundKind::Pauli, Direction::Upper, spec.into()))
}

fn dp1(p: f64) -> f64 {
    (3.0 * xlog2x(p) + xlog2x(4.0 - 3.0 * p)) / 8.0
}

/// The Pauli bound specialized to depolarizing noise,
/// `(3p log₂ p + (4−3p) log₂(4−3p))/8`.
pub fn depolarizing_pauli_bound(p: f64) -> Result<BoundResult> {
    let spec = QubitChannelSpec::Depolarizing { p };
    spec.validate()?;
    Ok(BoundResult::new(
        dp1(p).max(0.0),
        BoundKind::DepolarizingPauli,
        Direction::Upper,
        spec.into(),
    ))
}

/// Depolarizing bound improved by convexity: the channel with parameter
/// `p` is a mixture of the one with parameter `ε ≤ p` (weight `1 − α`) and
/// the entanglement-breaking one at `p = 2/3` (weight `α`).
pub fn depolarizing_bound(p: f64) -> Result<BoundResult> {
    let spec = QubitChannelSpec::Depolarizing { p };
    spec.validate()?;
    const EB: f64 = 2.0 / 3.0;
    let value = if p >= EB {
        0.0
    } else {
        let mixed = |eps: f64| (EB - p) / (EB - eps) * dp1(eps);
        minimize(mixed, 0.0, p, DEPOL_GRID, OPT_TOL).value.max(0.0)
    };
    Ok(BoundResult::new(
        value,
        BoundKind::Depolarizing,
        Direction::Upper,
        spec.into(),
    ))
}

/// `Σ wᵢ·vᵢ` for a channel written as the mixture `Σ wᵢ Nᵢ`, given upper
/// bounds `vᵢ` for the components.
pub fn convex_combination_bound(channel: Channel, terms: &[(f64, BoundResult)]) -> Result<BoundResult> {
    if terms.is_empty() {
        return Err(Error::InvalidWeights("no terms"));
    }
    if terms.iter().any(|(w, _)| !(*w >= 0.0 && w.is_finite())) {
        return Err(Error::InvalidWeights("weights must be finite and nonnegative"));
    }
    let total: f64 = terms.iter().map(|(w, _)| w).sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidWeights("weights must sum to 1"));
    }
    if terms.iter().any(|(_, b)| b.direction == Direction::Lower) {
        return Err(Error::InvalidWeights(
            "lower bounds cannot be mixed into an upper bound",
        ));
    }
    let value = terms.iter().filter(|(w, _)| *w > 0.0).map(|(w, b)| w * b.value).sum();
    let result = BoundResult::new(value, BoundKind::ConvexCombination, Direction::Upper, channel);
    Ok(result.with_constraint(terms[0].1.constraint))
}

/// Zero, for a channel the caller knows to be entanglement breaking.
pub fn eb_zero_bound(channel: Channel) -> BoundResult {
    BoundResult::new(0.0, BoundKind::EbZero, Direction::Upper, channel)
}
