//! Reference bounds from the literature, used to benchmark the squashed
//! entanglement bounds: entanglement-flux upper bounds, reverse coherent
//! information and coherent-information lower bounds, and the secret-key
//! capacity of the pure-loss channel.

use core::f64::consts::LN_2;

pub use crate::bounds::FormulaSource;
use crate::bounds::{BoundKind, BoundResult, Direction};
use crate::channels::{Channel, PhaseInsensitiveChannel, QubitChannelSpec};
use crate::error::Result;
use crate::math::{binary_entropy, log2, log2_ratio};
use crate::optimize::maximize;

/// Name, direction and provenance of a comparison curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonCurve {
    pub name: &'static str,
    pub direction: Direction,
    pub source: FormulaSource,
}

impl ComparisonCurve {
    pub const fn new(kind: BoundKind, direction: Direction) -> Self {
        ComparisonCurve {
            name: kind.as_str(),
            direction,
            source: kind.source(),
        }
    }

    pub fn of(result: &BoundResult) -> Self {
        ComparisonCurve {
            name: result.kind.as_str(),
            direction: result.direction,
            source: result.kind.source(),
        }
    }
}

fn ad_channel(gamma: f64) -> Result<Channel> {
    let spec = QubitChannelSpec::AmplitudeDamping { gamma };
    spec.validate()?;
    Ok(spec.into())
}

/// Entanglement-flux bound for amplitude damping, `min{1, −log₂ γ}`.
/// `γ = 0` (the identity channel) gives 1.
pub fn pirandola_ad(gamma: f64) -> Result<BoundResult> {
    let channel = ad_channel(gamma)?;
    let value = if gamma == 0.0 { 1.0 } else { (-log2(gamma)).min(1.0) };
    Ok(BoundResult::new(
        value.max(0.0),
        BoundKind::PirandolaAd,
        Direction::Upper,
        channel,
    ))
}

/// Reverse coherent information of amplitude damping,
/// `max_p [h(p) − h(γp)]`.
pub fn rci_ad(gamma: f64) -> Result<BoundResult> {
    let channel = ad_channel(gamma)?;
    let best = maximize(|p| binary_entropy(p) - binary_entropy(gamma * p), 0.0, 1.0, 101, 1e-10);
    Ok(BoundResult::new(
        best.value.max(0.0),
        BoundKind::RciAd,
        Direction::Lower,
        channel,
    ))
}

/// `Q₂ = P₂ = log₂(G/(G−1))` of the quantum-limited amplifier.
pub fn pirandola_amplifier(gain: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::amplifier(gain)?;
    let value = log2(gain / (gain - 1.0));
    Ok(BoundResult::new(
        value,
        BoundKind::PirandolaAmplifier,
        Direction::Exact,
        ch.into(),
    ))
}

/// Entanglement-flux bound for additive noise, `(n̄ − 1)/ln 2 − log₂ n̄`.
/// Returned exactly as the closed form gives it, with no clamping.
pub fn pirandola_additive(noise: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::additive(noise)?;
    let value = (noise - 1.0) / LN_2 - log2(noise);
    Ok(BoundResult::new(
        value,
        BoundKind::PirandolaAdditive,
        Direction::Upper,
        ch.into(),
    ))
}

/// Coherent information of additive noise, `−1/ln 2 − log₂ n̄`. May be
/// negative.
pub fn coherent_info_additive(noise: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::additive(noise)?;
    let value = -1.0 / LN_2 - log2(noise);
    Ok(BoundResult::new(
        value,
        BoundKind::CoherentInfoAdditive,
        Direction::Lower,
        ch.into(),
    ))
}

/// Secret-key capacity of the pure-loss channel, `−log₂(1 − η)`.
pub fn plob_pure_loss(eta: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::pure_loss(eta)?;
    let value = if eta == 1.0 {
        f64::INFINITY
    } else {
        -crate::math::ln_1p(-eta) / LN_2
    };
    Ok(BoundResult::new(
        value,
        BoundKind::PlobPureLoss,
        Direction::Exact,
        ch.into(),
    ))
}

/// `log₂((1+η)/(1−η))`, the pure-loss bound from the squashed
/// entanglement with the trivial squashing channel.
pub fn takeoka_pure_loss(eta: f64) -> Result<BoundResult> {
    let ch = PhaseInsensitiveChannel::pure_loss(eta)?;
    Ok(BoundResult::new(
        log2_ratio(eta),
        BoundKind::TakeokaPureLoss,
        Direction::Upper,
        ch.into(),
    ))
}

/// Capacities are nonnegative; lower bounds below 0 are displayed as 0.
pub fn capacity_floor(result: &BoundResult) -> f64 {
    result.value.max(0.0)
}
