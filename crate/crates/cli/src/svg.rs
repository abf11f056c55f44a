//! Minimal line plots. Decorative only; the CSV is the data contract.

use std::fmt::Write;

use crate::dataset::Dataset;
use crate::format::format_g;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 6] = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e", "#8c564b"];

pub fn render(d: &Dataset) -> String {
    let finite = |v: &Option<f64>| v.filter(|y| y.is_finite());
    let ys: Vec<f64> = d.rows.iter().flatten().filter_map(finite).collect();
    let (x0, x1) = (d.xs[0], d.xs[d.xs.len() - 1]);
    let mut y0 = ys.iter().copied().fold(f64::INFINITY, f64::min).min(0.0);
    let mut y1 = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !y1.is_finite() || y1 <= y0 {
        y0 = 0.0;
        y1 = 1.0;
    }
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{m} {m} V{b} H{r}" fill="none" stroke="black"/>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    let label = |s: &mut String, x: f64, y: f64, anchor: &str, text: &str| {
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{y:.1}" font-size="11" text-anchor="{anchor}" font-family="sans-serif">{text}</text>"#
        );
    };
    label(&mut s, MARGIN, HEIGHT - MARGIN + 16.0, "middle", &format_g(x0));
    label(&mut s, WIDTH - MARGIN, HEIGHT - MARGIN + 16.0, "middle", &format_g(x1));
    label(&mut s, WIDTH / 2.0, HEIGHT - 12.0, "middle", &d.x_label);
    label(&mut s, MARGIN - 6.0, py(y0) + 4.0, "end", &format_g(y0));
    label(&mut s, MARGIN - 6.0, py(y1) + 4.0, "end", &format_g(y1));
    label(&mut s, WIDTH / 2.0, 20.0, "middle", &d.title);

    for (k, col) in d.columns.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        // Missing or infinite values split the line.
        let mut path = String::new();
        let mut pen_down = false;
        for (x, row) in d.xs.iter().zip(&d.rows) {
            match finite(&row[k]) {
                Some(y) => {
                    let _ = write!(path, "{}{:.2} {:.2} ", if pen_down { "L" } else { "M" }, px(*x), py(y));
                    pen_down = true;
                }
                None => pen_down = false,
            }
        }
        if !path.is_empty() {
            let _ = writeln!(
                s,
                r#"<path d="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
                path.trim_end()
            );
        }
        label(&mut s, WIDTH - MARGIN, MARGIN + 14.0 * k as f64, "end", col.name);
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{color}" stroke-width="2"/>"#,
            WIDTH - MARGIN + 4.0,
            MARGIN + 14.0 * k as f64 - 4.0,
            WIDTH - MARGIN + 20.0,
            MARGIN + 14.0 * k as f64 - 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}
