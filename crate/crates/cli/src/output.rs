//! Dataset rendering and the `sweep` and `figure` commands.

use std::io::Write;
use std::path::Path;

use esq_core::bounds::FormulaSource;
use esq_core::PhotonConstraint;
use serde_json::{json, Value};

use crate::args::{DataFormat, DataOutput, FigureArgs, SweepArgs};
use crate::dataset::{self, Dataset, FamilyOptions, Scale};
use crate::format::{format_cell, format_g};
use crate::CliError;

/// Finite values as numbers; infinities and NaN as their `%g` strings,
/// since JSON has no literal for them.
pub fn json_number(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::String(format_g(x))
    }
}

fn constraint_label(c: PhotonConstraint) -> String {
    match c {
        PhotonConstraint::Finite(n) => format!("N={}", format_g(n)),
        PhotonConstraint::Unbounded => "N=inf".into(),
    }
}

pub fn to_csv(d: &Dataset) -> String {
    let mut s = String::new();
    s.push_str(&format!("# dataset: {}\n", d.title));
    s.push_str(&format!("# channel: {}\n", d.channel));
    s.push_str(&format!("# constraint: {}\n", constraint_label(d.constraint)));
    s.push_str(&format!("# x: {}\n", d.x_label));
    for note in &d.notes {
        s.push_str(&format!("# note: {note}\n"));
    }
    for c in &d.columns {
        s.push_str(&format!(
            "# curve {}: {}, {}\n",
            c.name,
            c.direction.as_str(),
            c.source.as_str()
        ));
        if c.source == FormulaSource::ExternalCited {
            s.push_str(&format!("# source {}: external-cited\n", c.name));
        }
    }
    for (name, why) in &d.omitted {
        s.push_str(&format!("# omitted: {name}: {why}\n"));
    }
    s.push('x');
    for c in &d.columns {
        s.push(',');
        s.push_str(c.name);
    }
    s.push('\n');
    for (x, row) in d.xs.iter().zip(&d.rows) {
        s.push_str(&format_g(*x));
        for v in row {
            s.push(',');
            s.push_str(&format_cell(*v));
        }
        s.push('\n');
    }
    s
}

pub fn to_json(d: &Dataset) -> String {
    let curves: Vec<Value> = d
        .columns
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let points: Vec<Value> =
                d.xs.iter()
                    .zip(&d.rows)
                    .map(|(x, row)| json!([json_number(*x), row[k].map_or(Value::Null, json_number)]))
                    .collect();
            json!({
                "name": c.name,
                "direction": c.direction.as_str(),
                "source": c.source.as_str(),
                "points": points,
            })
        })
        .collect();
    let omitted: Vec<Value> = d
        .omitted
        .iter()
        .map(|(name, why)| json!({"name": name, "reason": why}))
        .collect();
    let doc = json!({
        "dataset": d.title,
        "channel": d.channel,
        "constraint": constraint_label(d.constraint),
        "x": d.x_label,
        "notes": d.notes,
        "curves": curves,
        "omitted": omitted,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn write_text(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit(d: &Dataset, out: &DataOutput, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = match out.format {
        DataFormat::Csv => to_csv(d),
        DataFormat::Json => to_json(d),
    };
    write_text(out.out.as_deref(), &text, stdout)?;
    if let Some(path) = &out.svg {
        std::fs::write(path, crate::svg::render(d))?;
    }
    Ok(())
}

pub fn cmd_sweep(args: SweepArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let opts = FamilyOptions {
        thermal_photons: args.nb,
        dimension: args.d,
        photons: args.photons,
    };
    let scale = if args.log { Scale::Log } else { Scale::Linear };
    let d = dataset::sweep(
        args.family,
        &opts,
        (args.start, args.stop),
        args.points,
        scale,
        &args.curves,
    )?;
    emit(&d, &args.output, stdout)
}

pub fn cmd_figure(args: FigureArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let d = dataset::figure(args.id, args.points)?;
    emit(&d, &args.output, stdout)
}
