//! `esq bound`: every applicable bound for a single channel.

use std::io::Write;

use esq_core::bounds::{
    amplitude_damping_bound, depolarizing_bound, depolarizing_pauli_bound, eb_zero_bound, erasure_capacity,
    esq_additive_limit, esq_asymptotic, esq_finite_n, pauli_bound,
};
use esq_core::comparisons::{
    capacity_floor, coherent_info_additive, pirandola_ad, pirandola_additive, pirandola_amplifier, plob_pure_loss,
    rci_ad, takeoka_pure_loss,
};
use esq_core::{BoundResult, Channel, Direction, PhaseInsensitiveChannel, PhotonConstraint, QubitChannelSpec};
use serde_json::json;

use crate::args::{BoundChannel, BoundFormat};
use crate::format::format_g;
use crate::output::json_number;
use crate::{resolve_gaussian, CliError};

/// All bounds for one channel, upper, lower and exact.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub channel: Channel,
    pub constraint: PhotonConstraint,
    pub entanglement_breaking: bool,
    pub bounds: Vec<BoundResult>,
}

pub fn gaussian_report(ch: PhaseInsensitiveChannel, photons: Option<f64>) -> Result<BoundReport, CliError> {
    let (constraint, primary) = match photons {
        Some(n) => (PhotonConstraint::finite(n)?, esq_finite_n(&ch, n)?),
        None => (PhotonConstraint::Unbounded, esq_asymptotic(&ch)),
    };
    let mut bounds = vec![primary];
    if photons.is_some() {
        bounds.push(esq_asymptotic(&ch));
    }
    let (t, g, tau, nu) = (ch.transmissivity(), ch.gain(), ch.tau(), ch.nu());
    if g == 1.0 {
        bounds.push(takeoka_pure_loss(t)?);
        bounds.push(plob_pure_loss(t)?);
    } else if t == 1.0 {
        bounds.push(pirandola_amplifier(g)?);
    } else if tau == 1.0 && nu > 0.0 {
        let nbar = nu / 2.0;
        bounds.push(esq_additive_limit(nbar)?);
        bounds.push(pirandola_additive(nbar)?);
        bounds.push(coherent_info_additive(nbar)?);
    }
    let entanglement_breaking = ch.is_entanglement_breaking();
    if entanglement_breaking {
        bounds.push(eb_zero_bound(ch.into()));
    }
    Ok(BoundReport {
        channel: ch.into(),
        constraint,
        entanglement_breaking,
        bounds,
    })
}

pub fn qubit_report(spec: QubitChannelSpec) -> Result<BoundReport, CliError> {
    spec.validate()?;
    let (mut bounds, eb) = match spec {
        QubitChannelSpec::Erasure { dimension, p } => (vec![erasure_capacity(dimension, p)?], p == 1.0),
        QubitChannelSpec::AmplitudeDamping { gamma } => (
            vec![amplitude_damping_bound(gamma)?, pirandola_ad(gamma)?, rci_ad(gamma)?],
            gamma == 1.0,
        ),
        // A Pauli channel is entanglement breaking iff no Bell weight of
        // its Choi state exceeds 1/2.
        QubitChannelSpec::Pauli { probs } => (vec![pauli_bound(probs)?], probs.iter().all(|&p| p <= 0.5)),
        QubitChannelSpec::Depolarizing { p } => (
            vec![depolarizing_bound(p)?, depolarizing_pauli_bound(p)?],
            p >= 2.0 / 3.0,
        ),
    };
    if eb {
        bounds.push(eb_zero_bound(spec.into()));
    }
    Ok(BoundReport {
        channel: spec.into(),
        constraint: PhotonConstraint::Unbounded,
        entanglement_breaking: eb,
        bounds,
    })
}

pub fn report(channel: &BoundChannel) -> Result<(BoundReport, BoundFormat), CliError> {
    Ok(match channel {
        BoundChannel::Gaussian {
            channel,
            photons,
            output,
        } => (gaussian_report(resolve_gaussian(channel)?, *photons)?, output.format),
        BoundChannel::Erasure { d, p, output } => (
            qubit_report(QubitChannelSpec::Erasure { dimension: *d, p: *p })?,
            output.format,
        ),
        BoundChannel::AmplitudeDamping { gamma, output } => (
            qubit_report(QubitChannelSpec::AmplitudeDamping { gamma: *gamma })?,
            output.format,
        ),
        BoundChannel::Pauli { p0, p1, p2, p3, output } => (
            qubit_report(QubitChannelSpec::Pauli {
                probs: [*p0, *p1, *p2, *p3],
            })?,
            output.format,
        ),
        BoundChannel::Depolarizing { p, output } => {
            (qubit_report(QubitChannelSpec::Depolarizing { p: *p })?, output.format)
        }
    })
}

pub fn cmd_bound(channel: BoundChannel, out: &mut dyn Write) -> Result<(), CliError> {
    let (report, format) = report(&channel)?;
    let text = match format {
        BoundFormat::Table => render_table(&report),
        BoundFormat::Csv => render_csv(&report),
        BoundFormat::Json => render_json(&report),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn constraint_label(c: PhotonConstraint) -> String {
    match c {
        PhotonConstraint::Finite(n) => format!("N={}", format_g(n)),
        PhotonConstraint::Unbounded => "N=inf".into(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable table. Negative lower bounds show as 0, since
/// capacities are nonnegative; csv and json keep the raw value.
pub fn render_table(r: &BoundReport) -> String {
    let mut s = format!(
        "channel: {}\nconstraint: {}\nentanglement-breaking: {}\n",
        r.channel,
        constraint_label(r.constraint),
        yes_no(r.entanglement_breaking)
    );
    let width = r.bounds.iter().map(|b| b.kind.as_str().len()).max().unwrap_or(5).max(5);
    s.push_str(&format!(
        "{:<width$}  {:<9}  {:<14}  value\n",
        "bound", "direction", "source"
    ));
    for b in &r.bounds {
        let v = if b.direction == Direction::Lower {
            capacity_floor(b)
        } else {
            b.value
        };
        s.push_str(&format!(
            "{:<width$}  {:<9}  {:<14}  {}\n",
            b.kind.as_str(),
            b.direction.as_str(),
            b.kind.source().as_str(),
            format_g(v)
        ));
    }
    s
}

pub fn render_csv(r: &BoundReport) -> String {
    let mut s = format!(
        "# channel: {}\n# constraint: {}\n# entanglement-breaking: {}\nbound,direction,source,value\n",
        r.channel,
        constraint_label(r.constraint),
        yes_no(r.entanglement_breaking)
    );
    for b in &r.bounds {
        s.push_str(&format!(
            "{},{},{},{}\n",
            b.kind.as_str(),
            b.direction.as_str(),
            b.kind.source().as_str(),
            format_g(b.value)
        ));
    }
    s
}

pub fn render_json(r: &BoundReport) -> String {
    let bounds: Vec<_> = r
        .bounds
        .iter()
        .map(|b| {
            json!({
                "name": b.kind.as_str(),
                "direction": b.direction.as_str(),
                "source": b.kind.source().as_str(),
                "value": json_number(b.value),
            })
        })
        .collect();
    let doc = json!({
        "channel": r.channel.to_string(),
        "constraint": constraint_label(r.constraint),
        "entanglement_breaking": r.entanglement_breaking,
        "bounds": bounds,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use esq_core::BoundKind;

    fn value(r: &BoundReport, kind: BoundKind) -> f64 {
        r.bounds.iter().find(|b| b.kind == kind).unwrap().value
    }

    #[test]
    fn thermal_eb_channel_lists_both_bounds() {
        let r = gaussian_report(PhaseInsensitiveChannel::thermal(0.4, 1.0).unwrap(), None).unwrap();
        assert!(r.entanglement_breaking);
        assert_eq!(value(&r, BoundKind::EbZero), 0.0);
        assert!(value(&r, BoundKind::EsqAsymptotic) > 0.0);
    }

    #[test]
    fn family_comparisons_are_attached() {
        let r = gaussian_report(PhaseInsensitiveChannel::additive(1.0).unwrap(), None).unwrap();
        let kinds: Vec<_> = r.bounds.iter().map(|b| b.kind).collect();
        assert!(kinds.contains(&BoundKind::PirandolaAdditive));
        assert!(kinds.contains(&BoundKind::CoherentInfoAdditive));
        assert!((value(&r, BoundKind::EsqAsymptotic) - value(&r, BoundKind::EsqAdditiveLimit)).abs() < 1e-12);

        let r = gaussian_report(PhaseInsensitiveChannel::amplifier(2.0).unwrap(), Some(1.0)).unwrap();
        assert_eq!(r.bounds[0].kind, BoundKind::EsqFiniteN);
        assert!(r.bounds.iter().any(|b| b.kind == BoundKind::PirandolaAmplifier));
    }

    #[test]
    fn table_floors_negative_lower_bounds() {
        let r = gaussian_report(PhaseInsensitiveChannel::additive(2.0).unwrap(), None).unwrap();
        assert!(value(&r, BoundKind::CoherentInfoAdditive) < 0.0);
        let table = render_table(&r);
        let line = table.lines().find(|l| l.starts_with("coherent-info-additive")).unwrap();
        assert!(line.ends_with(" 0"), "{line}");
        assert!(render_csv(&r).contains("coherent-info-additive,lower,local,-"));
    }

    #[test]
    fn pauli_eb_flag() {
        let r = qubit_report(QubitChannelSpec::Pauli { probs: [0.25; 4] }).unwrap();
        assert!(r.entanglement_breaking);
        let r = qubit_report(QubitChannelSpec::Pauli {
            probs: [0.6, 0.2, 0.1, 0.1],
        })
        .unwrap();
        assert!(!r.entanglement_breaking);
    }
}
