//! Curves over a one-parameter family of channels, evaluated on a grid.

use esq_core::bounds::{
    amplitude_damping_bound, depolarizing_bound, depolarizing_pauli_bound, erasure_capacity, esq_asymptotic,
    esq_finite_n, FormulaSource,
};
use esq_core::comparisons::{
    coherent_info_additive, pirandola_ad, pirandola_additive, pirandola_amplifier, plob_pure_loss, rci_ad,
    takeoka_pure_loss,
};
use esq_core::{BoundKind, BoundResult, Direction, PhaseInsensitiveChannel, PhotonConstraint};
use rayon::prelude::*;

use crate::args::{Family, FigureId};
use crate::CliError;

type Eval = Box<dyn Fn(f64) -> esq_core::Result<BoundResult> + Send + Sync>;

pub struct Curve {
    pub name: &'static str,
    pub direction: Direction,
    pub source: FormulaSource,
    aliases: &'static [&'static str],
    eval: Eval,
}

impl Curve {
    fn new<F>(kind: BoundKind, direction: Direction, aliases: &'static [&'static str], eval: F) -> Self
    where
        F: Fn(f64) -> esq_core::Result<BoundResult> + Send + Sync + 'static,
    {
        Curve {
            name: kind.as_str(),
            direction,
            source: kind.source(),
            aliases,
            eval: Box::new(eval),
        }
    }

    fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.contains(&name)
    }

    /// `None` where the parameter is outside the curve's domain.
    fn at(&self, x: f64) -> Result<Option<f64>, CliError> {
        match (self.eval)(x) {
            Ok(b) => Ok(Some(b.value)),
            Err(e) if crate::is_input_error(&e) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// `points ≥ 2` values from `start` to `stop`, both endpoints exact.
pub fn grid(start: f64, stop: f64, points: usize, scale: Scale) -> Result<Vec<f64>, CliError> {
    if !(start.is_finite() && stop.is_finite()) || start >= stop {
        return Err(CliError::Usage(format!(
            "sweep needs start < stop (got {start}, {stop})"
        )));
    }
    if points < 2 {
        return Err(CliError::Usage("sweep needs at least 2 points".into()));
    }
    if scale == Scale::Log && start <= 0.0 {
        return Err(CliError::Usage("logarithmic sweep needs start > 0".into()));
    }
    let last = points - 1;
    Ok((0..points)
        .map(|i| {
            if i == 0 {
                return start;
            }
            if i == last {
                return stop;
            }
            let f = i as f64 / last as f64;
            match scale {
                Scale::Linear => start + (stop - start) * f,
                Scale::Log => 10f64.powf(start.log10() + (stop.log10() - start.log10()) * f),
            }
        })
        .collect())
}

/// An evaluated table: one row per grid point, one column per curve.
pub struct Dataset {
    pub title: String,
    pub channel: String,
    pub constraint: PhotonConstraint,
    pub x_label: String,
    pub notes: Vec<String>,
    pub columns: Vec<ColumnInfo>,
    pub omitted: Vec<(&'static str, &'static str)>,
    pub xs: Vec<f64>,
    pub rows: Vec<Vec<Option<f64>>>,
}

#[derive(Debug, Clone, Copy)]
pub struct ColumnInfo {
    pub name: &'static str,
    pub direction: Direction,
    pub source: FormulaSource,
}

impl Dataset {
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let k = self.columns.iter().position(|c| c.name == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

/// Channel family with its curves and axis description.
pub struct FamilySpec {
    pub channel: String,
    pub constraint: PhotonConstraint,
    pub x_label: String,
    pub default_range: (f64, f64),
    pub curves: Vec<Curve>,
}

fn esq_curve<F>(photons: Option<f64>, make: F) -> Curve
where
    F: Fn(f64) -> esq_core::Result<PhaseInsensitiveChannel> + Send + Sync + 'static,
{
    match photons {
        Some(n) => Curve::new(BoundKind::EsqFiniteN, Direction::Upper, &["esq"], move |x| {
            esq_finite_n(&make(x)?, n)
        }),
        None => Curve::new(BoundKind::EsqAsymptotic, Direction::Upper, &["esq"], move |x| {
            Ok(esq_asymptotic(&make(x)?))
        }),
    }
}

pub struct FamilyOptions {
    pub thermal_photons: f64,
    pub dimension: u32,
    pub photons: Option<f64>,
}

pub fn family(family: Family, opts: &FamilyOptions) -> Result<FamilySpec, CliError> {
    let constraint = match opts.photons {
        Some(n) => PhotonConstraint::finite(n)?,
        None => PhotonConstraint::Unbounded,
    };
    let gaussian_only = |name: &str| -> Result<(), CliError> {
        if opts.photons.is_some() {
            Err(CliError::Usage(format!(
                "--photons does not apply to the {name} family"
            )))
        } else {
            Ok(())
        }
    };
    let photons = opts.photons;
    let spec = match family {
        Family::PureLoss => FamilySpec {
            channel: "pure-loss".into(),
            constraint,
            x_label: "eta".into(),
            default_range: (0.0, 0.99),
            curves: vec![
                esq_curve(photons, PhaseInsensitiveChannel::pure_loss),
                Curve::new(BoundKind::PlobPureLoss, Direction::Exact, &["plob"], plob_pure_loss),
                Curve::new(
                    BoundKind::TakeokaPureLoss,
                    Direction::Upper,
                    &["takeoka"],
                    takeoka_pure_loss,
                ),
            ],
        },
        Family::Thermal => {
            let nb = opts.thermal_photons;
            if !(nb >= 0.0 && nb.is_finite()) {
                return Err(CliError::Usage(format!("--nb must be >= 0 (got {nb})")));
            }
            FamilySpec {
                channel: format!("thermal(N_B={})", crate::format::format_g(nb)),
                constraint,
                x_label: "eta".into(),
                default_range: (0.0, 0.99),
                curves: vec![esq_curve(photons, move |eta| PhaseInsensitiveChannel::thermal(eta, nb))],
            }
        }
        Family::Additive => FamilySpec {
            channel: "additive-noise".into(),
            constraint,
            x_label: "nbar".into(),
            default_range: (0.1, 10.0),
            curves: vec![
                esq_curve(photons, PhaseInsensitiveChannel::additive),
                Curve::new(
                    BoundKind::PirandolaAdditive,
                    Direction::Upper,
                    &["pirandola"],
                    pirandola_additive,
                ),
                Curve::new(
                    BoundKind::CoherentInfoAdditive,
                    Direction::Lower,
                    &["coherent-info"],
                    coherent_info_additive,
                ),
            ],
        },
        Family::Amplifier => FamilySpec {
            channel: "quantum-limited amplifier".into(),
            constraint,
            x_label: "G".into(),
            default_range: (1.1, 10.0),
            curves: vec![
                esq_curve(photons, PhaseInsensitiveChannel::amplifier),
                Curve::new(
                    BoundKind::PirandolaAmplifier,
                    Direction::Exact,
                    &["pirandola"],
                    pirandola_amplifier,
                ),
            ],
        },
        Family::AmplitudeDamping => {
            gaussian_only("amplitude-damping")?;
            FamilySpec {
                channel: "amplitude-damping".into(),
                constraint,
                x_label: "gamma".into(),
                default_range: (0.0, 1.0),
                curves: vec![
                    Curve::new(
                        BoundKind::AmplitudeDamping,
                        Direction::Upper,
                        &["esq"],
                        amplitude_damping_bound,
                    ),
                    Curve::new(BoundKind::PirandolaAd, Direction::Upper, &["pirandola"], pirandola_ad),
                    Curve::new(BoundKind::RciAd, Direction::Lower, &["rci"], rci_ad),
                ],
            }
        }
        Family::Depolarizing => {
            gaussian_only("depolarizing")?;
            FamilySpec {
                channel: "depolarizing".into(),
                constraint,
                x_label: "p".into(),
                default_range: (0.0, 1.0),
                curves: vec![
                    Curve::new(BoundKind::Depolarizing, Direction::Upper, &["esq"], depolarizing_bound),
                    Curve::new(
                        BoundKind::DepolarizingPauli,
                        Direction::Upper,
                        &["dp1", "pauli"],
                        depolarizing_pauli_bound,
                    ),
                ],
            }
        }
        Family::Erasure => {
            gaussian_only("erasure")?;
            let d = opts.dimension;
            FamilySpec {
                channel: format!("erasure(d={d})"),
                constraint,
                x_label: "p".into(),
                default_range: (0.0, 1.0),
                curves: vec![Curve::new(
                    BoundKind::ErasureExact,
                    Direction::Exact,
                    &["esq", "exact"],
                    move |p| erasure_capacity(d, p),
                )],
            }
        }
    };
    Ok(spec)
}

/// Keeps the requested curves, in the requested order. Empty = all.
pub fn select(curves: Vec<Curve>, wanted: &[String]) -> Result<Vec<Curve>, CliError> {
    if wanted.is_empty() {
        return Ok(curves);
    }
    let mut pool: Vec<Option<Curve>> = curves.into_iter().map(Some).collect();
    let mut out = Vec::with_capacity(wanted.len());
    for name in wanted {
        let slot = pool
            .iter_mut()
            .find(|c| c.as_ref().is_some_and(|c| c.matches(name)))
            .ok_or_else(|| CliError::Usage(format!("unknown or repeated curve '{name}'")))?;
        out.push(slot.take().expect("slot checked above"));
    }
    Ok(out)
}

/// Evaluates every curve at every grid point. Points are independent and
/// run in parallel; rows come back in grid order.
pub fn evaluate(
    curves: &[Curve],
    xs: &[f64],
    to_param: impl Fn(f64) -> f64 + Sync,
) -> Result<Vec<Vec<Option<f64>>>, CliError> {
    xs.par_iter()
        .map(|&x| {
            let param = to_param(x);
            curves.iter().map(|c| c.at(param)).collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

pub fn columns(curves: &[Curve]) -> Vec<ColumnInfo> {
    curves
        .iter()
        .map(|c| ColumnInfo {
            name: c.name,
            direction: c.direction,
            source: c.source,
        })
        .collect()
}

const NOT_AVAILABLE: &str = "closed form not available";

struct FigureLayout {
    family: Family,
    options: FamilyOptions,
    range: (f64, f64),
    decibel: bool,
    notes: &'static [&'static str],
    omitted: &'static [(&'static str, &'static str)],
}

fn layout(id: FigureId) -> FigureLayout {
    let opts = |photons| FamilyOptions {
        thermal_photons: 1.0,
        dimension: 2,
        photons,
    };
    match id {
        FigureId::Fig1Ad => FigureLayout {
            family: Family::AmplitudeDamping,
            options: opts(None),
            range: (0.0, 1.0),
            decibel: false,
            notes: &[],
            omitted: &[],
        },
        FigureId::Fig2Depol => FigureLayout {
            family: Family::Depolarizing,
            options: opts(None),
            range: (0.0, 1.0),
            decibel: false,
            notes: &[],
            omitted: &[
                ("takeoka-depolarizing", NOT_AVAILABLE),
                ("pirandola-depolarizing", NOT_AVAILABLE),
                ("rci-depolarizing", NOT_AVAILABLE),
            ],
        },
        FigureId::Fig3Additive => FigureLayout {
            family: Family::Additive,
            options: opts(None),
            range: (0.1, 2.0),
            decibel: false,
            notes: &[],
            omitted: &[("takeoka-additive", NOT_AVAILABLE)],
        },
        FigureId::Fig4Thermal => FigureLayout {
            family: Family::Thermal,
            options: opts(None),
            range: (0.1, 30.0),
            decibel: true,
            notes: &[],
            omitted: &[
                ("takeoka-thermal", NOT_AVAILABLE),
                ("pirandola-thermal", NOT_AVAILABLE),
                ("rci-thermal", NOT_AVAILABLE),
            ],
        },
        FigureId::Fig5PurelossFinite => FigureLayout {
            family: Family::PureLoss,
            options: opts(Some(0.1)),
            range: (0.0, 2e-20),
            decibel: false,
            notes: &["the earlier finite-energy pure-loss squashed bound coincides with esq-finite-N"],
            omitted: &[],
        },
        FigureId::Fig6ThermalFinite => FigureLayout {
            family: Family::Thermal,
            options: opts(Some(0.1)),
            range: (0.0, 1.0),
            decibel: false,
            notes: &[],
            omitted: &[
                ("pirandola-thermal", NOT_AVAILABLE),
                ("takeoka-thermal-finite", NOT_AVAILABLE),
            ],
        },
    }
}

pub fn figure_name(id: FigureId) -> &'static str {
    match id {
        FigureId::Fig1Ad => "fig1-ad",
        FigureId::Fig2Depol => "fig2-depol",
        FigureId::Fig3Additive => "fig3-additive",
        FigureId::Fig4Thermal => "fig4-thermal",
        FigureId::Fig5PurelossFinite => "fig5-pureloss-finite",
        FigureId::Fig6ThermalFinite => "fig6-thermal-finite",
    }
}

/// Dataset for one of the standard comparison plots.
pub fn figure(id: FigureId, points: usize) -> Result<Dataset, CliError> {
    let layout = layout(id);
    let mut spec = family(layout.family, &layout.options)?;
    if id == FigureId::Fig5PurelossFinite {
        spec.curves.retain(|c| c.name != BoundKind::TakeokaPureLoss.as_str());
    }
    let xs = grid(layout.range.0, layout.range.1, points, Scale::Linear)?;
    let mut notes: Vec<String> = layout.notes.iter().map(|s| s.to_string()).collect();
    let x_label = if layout.decibel {
        notes.push("x is the loss in dB; eta = 10^(-x/10)".into());
        "loss_db".to_string()
    } else {
        spec.x_label.clone()
    };
    let rows = if layout.decibel {
        evaluate(&spec.curves, &xs, |db| 10f64.powf(-db / 10.0))?
    } else {
        evaluate(&spec.curves, &xs, |x| x)?
    };
    Ok(Dataset {
        title: figure_name(id).into(),
        channel: spec.channel,
        constraint: spec.constraint,
        x_label,
        notes,
        columns: columns(&spec.curves),
        omitted: layout.omitted.to_vec(),
        xs,
        rows,
    })
}

/// Dataset for an ad-hoc sweep.
pub fn sweep(
    family_id: Family,
    opts: &FamilyOptions,
    range: (Option<f64>, Option<f64>),
    points: usize,
    scale: Scale,
    wanted: &[String],
) -> Result<Dataset, CliError> {
    let spec = family(family_id, opts)?;
    let start = range.0.unwrap_or(spec.default_range.0);
    let stop = range.1.unwrap_or(spec.default_range.1);
    let xs = grid(start, stop, points, scale)?;
    let curves = select(spec.curves, wanted)?;
    let rows = evaluate(&curves, &xs, |x| x)?;
    Ok(Dataset {
        title: "sweep".into(),
        channel: spec.channel,
        constraint: spec.constraint,
        x_label: spec.x_label,
        notes: Vec::new(),
        columns: columns(&curves),
        omitted: Vec::new(),
        xs,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_hit_both_endpoints() {
        let g = grid(0.0, 0.9, 10, Scale::Linear).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!((g[0], g[9]), (0.0, 0.9));
        assert!((g[1] - 0.1).abs() < 1e-15);
        let g = grid(0.1, 10.0, 3, Scale::Log).unwrap();
        assert_eq!(g[0], 0.1);
        assert!((g[1] - 1.0).abs() < 1e-15);
        assert_eq!(g[2], 10.0);
    }

    #[test]
    fn grid_rejects_bad_specs() {
        assert!(grid(1.0, 1.0, 10, Scale::Linear).is_err());
        assert!(grid(0.0, 1.0, 1, Scale::Linear).is_err());
        assert!(grid(0.0, 1.0, 5, Scale::Log).is_err());
    }

    #[test]
    fn curve_selection_uses_aliases_and_order() {
        let opts = FamilyOptions {
            thermal_photons: 1.0,
            dimension: 2,
            photons: None,
        };
        let spec = family(Family::PureLoss, &opts).unwrap();
        let picked = select(spec.curves, &["plob".into(), "esq-asymptotic".into()]).unwrap();
        let names: Vec<_> = picked.iter().map(|c| c.name).collect();
        assert_eq!(names, ["plob-pure-loss", "esq-asymptotic"]);

        let spec = family(Family::PureLoss, &opts).unwrap();
        assert!(select(spec.curves, &["nope".into()]).is_err());
    }

    #[test]
    fn out_of_domain_points_are_missing() {
        let opts = FamilyOptions {
            thermal_photons: 1.0,
            dimension: 2,
            photons: None,
        };
        let spec = family(Family::Amplifier, &opts).unwrap();
        let rows = evaluate(&spec.curves, &[0.5, 2.0], |x| x).unwrap();
        assert_eq!(rows[0], vec![None, None]);
        assert!(rows[1].iter().all(|v| v.is_some()));
    }
}
