//! Channel descriptions: phase-insensitive Gaussian channels in the
//! `(τ, ν)` / `(T, G)` parameterizations, finite-dimensional qubit-type
//! channels, and the 5-mode dilation-plus-squashing transform.

use core::fmt;

use crate::error::{Error, Result};
use crate::gaussian::{beamsplitter, two_mode_squeezer, SymplecticTransform};

/// Tolerance on the validity condition `ν ≥ |1 − τ|`.
const VALIDITY_TOL: f64 = 1e-12;

/// Mode slots of the 5-mode squashing pipeline. Inputs are
/// `(A′, E₁, F₁, E₂, F₂)`; the outputs `(B, E₁′, F₁′, E₂′, F₂′)` occupy the
/// same slots.
pub mod mode {
    pub const A_PRIME: usize = 0;
    pub const B: usize = 0;
    pub const E1: usize = 1;
    pub const F1: usize = 2;
    pub const E2: usize = 3;
    pub const F2: usize = 4;
    pub const COUNT: usize = 5;
}

/// A phase-insensitive Gaussian channel.
///
/// Canonical parameters are the loss/gain `τ ≥ 0` and noise `ν ≥ |1 − τ|`.
/// The Stinespring dilation is a beamsplitter of transmissivity
/// `T = 2τ/(τ+ν+1)` followed by a two-mode squeezer of gain
/// `G = (τ+ν+1)/2`; the constructors for the named families fill in
/// `(T, G)` from their own closed forms so that e.g. a pure-loss channel
/// has `G = 1` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseInsensitiveChannel {
    tau: f64,
    nu: f64,
    transmissivity: f64,
    gain: f64,
}

fn finite_at_least(name: &'static str, x: f64, lo: f64, expected: &'static str) -> Result<()> {
    if x.is_finite() && x >= lo {
        Ok(())
    } else {
        Err(Error::domain(name, x, expected))
    }
}

fn unit_interval(name: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(name, x, "0 <= x <= 1"))
    }
}

impl PhaseInsensitiveChannel {
    /// General channel from `(τ, ν)`.
    pub fn from_tau_nu(tau: f64, nu: f64) -> Result<Self> {
        finite_at_least("tau", tau, 0.0, "tau >= 0")?;
        if !nu.is_finite() || nu < (1.0 - tau).abs() - VALIDITY_TOL {
            return Err(Error::InvalidChannel { tau, nu });
        }
        let sum = tau + nu + 1.0;
        Ok(PhaseInsensitiveChannel {
            tau,
            nu,
            transmissivity: (2.0 * tau / sum).min(1.0),
            gain: (sum / 2.0).max(1.0),
        })
    }

    /// Channel from the dilation parameters `T ∈ [0, 1]`, `G ≥ 1`.
    pub fn from_transmissivity_gain(transmissivity: f64, gain: f64) -> Result<Self> {
        unit_interval("T", transmissivity)?;
        finite_at_least("G", gain, 1.0, "G >= 1")?;
        let tau = gain * transmissivity;
        Ok(PhaseInsensitiveChannel {
            tau,
            nu: 2.0 * gain - 1.0 - tau,
            transmissivity,
            gain,
        })
    }

    /// Pure-loss channel of transmissivity `η`: `τ = η`, `ν = 1 − η`.
    pub fn pure_loss(eta: f64) -> Result<Self> {
        unit_interval("eta", eta)?;
        Ok(PhaseInsensitiveChannel {
            tau: eta,
            nu: 1.0 - eta,
            transmissivity: eta,
            gain: 1.0,
        })
    }

    /// Thermal-loss channel: transmissivity `η`, environment with
    /// `N_B` mean photons. `τ = η`, `ν = (1 − η)(2N_B + 1)`.
    pub fn thermal(eta: f64, thermal_photons: f64) -> Result<Self> {
        unit_interval("eta", eta)?;
        finite_at_least("N_B", thermal_photons, 0.0, "N_B >= 0")?;
        let gain = (1.0 - eta) * thermal_photons + 1.0;
        Ok(PhaseInsensitiveChannel {
            tau: eta,
            nu: (1.0 - eta) * (2.0 * thermal_photons + 1.0),
            transmissivity: eta / gain,
            gain,
        })
    }

    /// Additive-noise channel with noise variance `n̄ > 0`:
    /// `T = 1/(n̄+1)`, `G = n̄+1`, i.e. `τ = 1`, `ν = 2n̄`.
    pub fn additive(noise: f64) -> Result<Self> {
        if !(noise > 0.0 && noise.is_finite()) {
            return Err(Error::domain("nbar", noise, "nbar > 0"));
        }
        Ok(PhaseInsensitiveChannel {
            tau: 1.0,
            nu: 2.0 * noise,
            transmissivity: 1.0 / (noise + 1.0),
            gain: noise + 1.0,
        })
    }

    /// Quantum-limited amplifier with gain `G > 1`: `τ = G`, `ν = G − 1`.
    pub fn amplifier(gain: f64) -> Result<Self> {
        if !(gain > 1.0 && gain.is_finite()) {
            return Err(Error::domain("G", gain, "G > 1"));
        }
        Ok(PhaseInsensitiveChannel {
            tau: gain,
            nu: gain - 1.0,
            transmissivity: 1.0,
            gain,
        })
    }

    /// Lossy channel with excess noise `χ ≥ 0` over the quantum limit:
    /// `ν = 1 − τ + χ`.
    pub fn from_chi(tau: f64, chi: f64) -> Result<Self> {
        finite_at_least("chi", chi, 0.0, "chi >= 0")?;
        if chi == 0.0 && (0.0..=1.0).contains(&tau) {
            return Self::pure_loss(tau);
        }
        Self::from_tau_nu(tau, 1.0 - tau + chi)
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Beamsplitter transmissivity `T` of the dilation.
    pub fn transmissivity(&self) -> f64 {
        self.transmissivity
    }

    /// Two-mode squeezer gain `G` of the dilation.
    pub fn gain(&self) -> f64 {
        self.gain
    }

    /// `ν ≥ τ + 1`, equivalently `G(1 − T) ≥ 1`.
    pub fn is_entanglement_breaking(&self) -> bool {
        self.nu >= self.tau + 1.0
    }

    /// The identity channel (`T = 1`, `G = 1`).
    pub fn is_identity(&self) -> bool {
        self.transmissivity == 1.0 && self.gain == 1.0
    }

    /// `D = B₃·S·B₂·B₁` on modes `(A′, E₁, F₁, E₂, F₂)`:
    ///
    /// * `B₁`: transmissivity `T` on `(A′, E₁)` (channel loss),
    /// * `B₂`: balanced on `(E₁, F₁)` (squashing),
    /// * `S`: gain `G` on `(A′, E₂)` (channel amplification),
    /// * `B₃`: balanced on `(E₂, F₂)` (squashing).
    pub fn squashing_pipeline(&self) -> Result<SymplecticTransform> {
        use mode::*;
        let b1 = beamsplitter(self.transmissivity, A_PRIME, E1, COUNT)?;
        let b2 = beamsplitter(0.5, E1, F1, COUNT)?;
        let s = two_mode_squeezer(self.gain, A_PRIME, E2, COUNT)?;
        let b3 = beamsplitter(0.5, E2, F2, COUNT)?;
        b3.then_after(&s)?.then_after(&b2)?.then_after(&b1)
    }
}

impl fmt::Display for PhaseInsensitiveChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phase-insensitive(tau={}, nu={}, T={}, G={})",
            self.tau, self.nu, self.transmissivity, self.gain
        )
    }
}

/// Finite-dimensional channels with closed-form bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QubitChannelSpec {
    /// `d`-dimensional erasure with erasure probability `p`.
    Erasure { dimension: u32, p: f64 },
    /// Qubit amplitude damping with damping `γ`.
    AmplitudeDamping { gamma: f64 },
    /// Pauli channel `p₀ρ + p₁XρX + p₂(XZ)ρ(XZ)† + p₃ZρZ`.
    Pauli { probs: [f64; 4] },
    /// `(1 − p)ρ + p·I/2`.
    Depolarizing { p: f64 },
}

impl QubitChannelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            QubitChannelSpec::Erasure { dimension, p } => {
                if dimension < 2 {
                    return Err(Error::domain("d", dimension as f64, "d >= 2"));
                }
                unit_interval("p", p)
            }
            QubitChannelSpec::AmplitudeDamping { gamma } => unit_interval("gamma", gamma),
            QubitChannelSpec::Pauli { probs } => validate_distribution(&probs),
            QubitChannelSpec::Depolarizing { p } => unit_interval("p", p),
        }
    }

    /// Pauli probabilities of the depolarizing channel,
    /// `(1 − 3p/4, p/4, p/4, p/4)`.
    pub fn depolarizing_as_pauli(p: f64) -> [f64; 4] {
        let q = p / 4.0;
        [1.0 - 3.0 * q, q, q, q]
    }
}

pub(crate) fn validate_distribution(probs: &[f64]) -> Result<()> {
    let sum: f64 = probs.iter().sum();
    if probs.iter().any(|&p| !(p >= 0.0)) || (sum - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidDistribution { sum });
    }
    Ok(())
}

impl fmt::Display for QubitChannelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QubitChannelSpec::Erasure { dimension, p } => write!(f, "erasure(d={dimension}, p={p})"),
            QubitChannelSpec::AmplitudeDamping { gamma } => {
                write!(f, "amplitude-damping(gamma={gamma})")
            }
            QubitChannelSpec::Pauli { probs } => write!(
                f,
                "pauli(p0={}, p1={}, p2={}, p3={})",
                probs[0], probs[1], probs[2], probs[3]
            ),
            QubitChannelSpec::Depolarizing { p } => write!(f, "depolarizing(p={p})"),
        }
    }
}

/// Mean-photon-number constraint on the channel input.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PhotonConstraint {
    Finite(f64),
    #[default]
    Unbounded,
}

impl PhotonConstraint {
    pub fn finite(n: f64) -> Result<Self> {
        finite_at_least("N", n, 0.0, "N >= 0")?;
        Ok(PhotonConstraint::Finite(n))
    }
}

impl fmt::Display for PhotonConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhotonConstraint::Finite(n) => write!(f, "N={n}"),
            PhotonConstraint::Unbounded => f.write_str("N=inf"),
        }
    }
}

/// The channel a bound refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Channel {
    Gaussian(PhaseInsensitiveChannel),
    Qubit(QubitChannelSpec),
}

impl From<PhaseInsensitiveChannel> for Channel {
    fn from(ch: PhaseInsensitiveChannel) -> Self {
        Channel::Gaussian(ch)
    }
}

impl From<QubitChannelSpec> for Channel {
    fn from(spec: QubitChannelSpec) -> Self {
        Channel::Qubit(spec)
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Channel::Gaussian(ch) => ch.fmt(f),
            Channel::Qubit(spec) => spec.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12
    }

    #[test]
    fn tau_nu_examples() {
        let eta = 0.37;
        let ch = PhaseInsensitiveChannel::from_tau_nu(eta, 1.0 - eta).unwrap();
        assert!(close(ch.transmissivity(), eta) && close(ch.gain(), 1.0));

        let nbar = 0.8;
        let ch = PhaseInsensitiveChannel::from_tau_nu(1.0, 2.0 * nbar).unwrap();
        assert!(close(ch.transmissivity(), 1.0 / (nbar + 1.0)));
        assert!(close(ch.gain(), nbar + 1.0));

        assert!(matches!(
            PhaseInsensitiveChannel::from_tau_nu(0.5, 0.1),
            Err(Error::InvalidChannel { .. })
        ));
        assert!(PhaseInsensitiveChannel::from_tau_nu(-0.1, 2.0).is_err());
    }

    #[test]
    fn named_families() {
        let pl = PhaseInsensitiveChannel::pure_loss(0.5).unwrap();
        assert_eq!((pl.transmissivity(), pl.gain()), (0.5, 1.0));
        assert!(PhaseInsensitiveChannel::pure_loss(1.0).unwrap().is_identity());
        assert_eq!(PhaseInsensitiveChannel::pure_loss(0.0).unwrap().transmissivity(), 0.0);
        assert!(PhaseInsensitiveChannel::pure_loss(1.2).is_err());

        assert_eq!(
            PhaseInsensitiveChannel::thermal(0.3, 0.0).unwrap(),
            PhaseInsensitiveChannel::pure_loss(0.3).unwrap()
        );
        let th = PhaseInsensitiveChannel::thermal(0.5, 1.0).unwrap();
        assert!(close(th.gain(), 1.5) && close(th.transmissivity(), 1.0 / 3.0));
        let th = PhaseInsensitiveChannel::thermal(0.4, 1.0).unwrap();
        assert!(close(th.gain() * (1.0 - th.transmissivity()), 1.2));
        assert!(th.is_entanglement_breaking());

        let add = PhaseInsensitiveChannel::additive(1.0).unwrap();
        assert_eq!((add.transmissivity(), add.gain()), (0.5, 2.0));
        assert!(PhaseInsensitiveChannel::additive(0.0).is_err());

        let amp = PhaseInsensitiveChannel::amplifier(2.0).unwrap();
        assert_eq!(amp.nu(), (1.0 - amp.tau()).abs());
        assert!(PhaseInsensitiveChannel::amplifier(1.0).is_err());

        assert_eq!(
            PhaseInsensitiveChannel::from_chi(0.6, 0.0).unwrap(),
            PhaseInsensitiveChannel::pure_loss(0.6).unwrap()
        );
        assert!(PhaseInsensitiveChannel::from_chi(0.6, -1.0).is_err());
    }

    #[test]
    fn entanglement_breaking_examples() {
        assert!(!PhaseInsensitiveChannel::pure_loss(0.5)
            .unwrap()
            .is_entanglement_breaking());
        for g in [1.01, 2.0, 50.0] {
            assert!(!PhaseInsensitiveChannel::amplifier(g)
                .unwrap()
                .is_entanglement_breaking());
        }
    }

    #[test]
    fn identity_channel_pipeline_only_mixes_vacuum_arms() {
        let ch = PhaseInsensitiveChannel::pure_loss(1.0).unwrap();
        let d = ch.squashing_pipeline().unwrap();
        let m = d.matrix();
        // A′ passes straight through to B.
        assert_eq!(m[(0, 0)], 1.0);
        assert_eq!(m[(1, 1)], 1.0);
        for j in 2..10 {
            assert_eq!(m[(0, j)], 0.0);
        }
        assert!(d.symplectic_deviation() < 1e-12);
    }

    #[test]
    fn pipeline_matches_printed_transform() {
        let (g, t): (f64, f64) = (2.0, 0.5);
        let ch = PhaseInsensitiveChannel::from_transmissivity_gain(t, g).unwrap();
        let d = ch.squashing_pipeline().unwrap();
        let h = libm::sqrt(0.5);
        let (sgt, sg1t, sg1) = (libm::sqrt(g * t), libm::sqrt(g * (1.0 - t)), libm::sqrt(g - 1.0));
        let a = libm::sqrt((1.0 - t) / 2.0);
        let b = libm::sqrt(t / 2.0);
        let c = libm::sqrt((g - 1.0) * t / 2.0);
        let e = libm::sqrt((g - 1.0) * (1.0 - t) / 2.0);
        let f = libm::sqrt(g / 2.0);
        #[rustfmt::skip]
        let expected = Matrix::from_rows([
            [sgt, 0.0, sg1t, 0.0, 0.0, 0.0, sg1, 0.0, 0.0, 0.0],
            [0.0, sgt, 0.0, sg1t, 0.0, 0.0, 0.0, -sg1, 0.0, 0.0],
            [-a, 0.0, b, 0.0, h, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -a, 0.0, b, 0.0, h, 0.0, 0.0, 0.0, 0.0],
            [a, 0.0, -b, 0.0, h, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, a, 0.0, -b, 0.0, h, 0.0, 0.0, 0.0, 0.0],
            [c, 0.0, e, 0.0, 0.0, 0.0, f, 0.0, h, 0.0],
            [0.0, -c, 0.0, -e, 0.0, 0.0, 0.0, f, 0.0, h],
            [-c, 0.0, -e, 0.0, 0.0, 0.0, -f, 0.0, h, 0.0],
            [0.0, c, 0.0, e, 0.0, 0.0, 0.0, -f, 0.0, h],
        ]);
        assert!(d.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn qubit_spec_validation() {
        assert!(QubitChannelSpec::Erasure { dimension: 1, p: 0.2 }.validate().is_err());
        assert!(QubitChannelSpec::Pauli {
            probs: [0.5, 0.5, 0.1, -0.1]
        }
        .validate()
        .is_err());
        assert!(QubitChannelSpec::Pauli {
            probs: [0.5, 0.2, 0.2, 0.2]
        }
        .validate()
        .is_err());
        assert!(QubitChannelSpec::Pauli { probs: [0.25; 4] }.validate().is_ok());
        assert!(QubitChannelSpec::AmplitudeDamping { gamma: 1.1 }.validate().is_err());
        let p = QubitChannelSpec::depolarizing_as_pauli(0.4);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn photon_constraint() {
        assert!(PhotonConstraint::finite(-1.0).is_err());
        assert_eq!(PhotonConstraint::finite(0.1).unwrap(), PhotonConstraint::Finite(0.1));
    }
}
