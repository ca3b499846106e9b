//! Deterministic SVG line charts of sweep rows: one panel per
//! `(index, param)`, one polyline per family, `log10` on the y axis.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;
use topoindex_core::{Family, IndexKind};

use crate::sweep::SweepRow;

const WIDTH: f64 = 640.0;
const PANEL_HEIGHT: f64 = 360.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("row {row}: {source}")]
    UnknownIndex {
        row: usize,
        source: topoindex_core::indices::UnknownIndex,
    },
    #[error("row {row}: value_log10 is not finite")]
    NonFinite { row: usize },
}

fn color(f: Family) -> &'static str {
    match f {
        Family::Silicate => "#1f77b4",
        Family::ChainSilicate => "#ff7f0e",
        Family::Hexagonal => "#2ca02c",
        Family::Oxide => "#d62728",
        Family::Honeycomb => "#9467bd",
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Step from {1, 2, 5} x 10^k no smaller than `raw`.
fn nice_step(raw: f64) -> f64 {
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * mag)
}

fn ticks(lo: f64, hi: f64, target: f64) -> (Vec<f64>, usize) {
    let step = nice_step((hi - lo) / target);
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10()).ceil() as usize
    };
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    ((first..=last).map(|k| k as f64 * step).collect(), decimals)
}

fn label(v: f64, decimals: usize) -> String {
    // adding 0.0 turns -0.0 into 0.0
    format!("{:.*}", decimals, v + 0.0)
}

/// Padded range; a degenerate range grows by one on each side.
fn span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if lo == hi {
        (lo - 1.0, hi + 1.0)
    } else {
        (lo, hi)
    }
}

type Panel<'a> = BTreeMap<Family, Vec<&'a SweepRow>>;

fn panel_title(kind: IndexKind, param: &str) -> String {
    let symbol = match kind {
        IndexKind::MultFirst => "c",
        IndexKind::SumConnectivity => "alpha",
        _ => "",
    };
    if param.is_empty() || symbol.is_empty() {
        format!("{} ({kind})", kind.title())
    } else {
        format!("{} ({kind}, {symbol} = {param})", kind.title())
    }
}

fn draw_panel(out: &mut String, slot: usize, kind: IndexKind, param: &str, panel: &Panel) {
    let y0 = slot as f64 * PANEL_HEIGHT;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = PANEL_HEIGHT - TOP - BOTTOM;
    let rows = || panel.values().flatten();
    let (nx_lo, nx_hi) = span(rows().map(|r| f64::from(r.n)));
    let (ny_lo, ny_hi) = span(rows().map(|r| r.value_log10));
    let x = |n: f64| LEFT + (n - nx_lo) / (nx_hi - nx_lo) * plot_w;
    let y = |v: f64| TOP + (ny_hi - v) / (ny_hi - ny_lo) * plot_h;

    let _ = writeln!(
        out,
        r#"<g class="panel" data-index="{}" data-param="{}" transform="translate(0,{y0:.0})">"#,
        kind.code(),
        escape(param)
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        LEFT + plot_w / 2.0,
        escape(&panel_title(kind, param))
    );
    let _ = writeln!(
        out,
        r##"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="#444"/>"##
    );

    let (xt, xd) = ticks(nx_lo, nx_hi, 10.0);
    for t in xt {
        let px = x(t);
        let _ = writeln!(
            out,
            r##"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="#444"/><text x="{px:.2}" y="{:.2}" text-anchor="middle" font-size="11">{}</text>"##,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 18.0,
            label(t, xd)
        );
    }
    let (yt, yd) = ticks(ny_lo, ny_hi, 6.0);
    for t in yt {
        let py = y(t);
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT:.2}" y2="{py:.2}" stroke="#444"/><text x="{:.2}" y="{:.2}" text-anchor="end" font-size="11">{}</text>"##,
            LEFT - 5.0,
            LEFT - 8.0,
            py + 4.0,
            label(t, yd)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">n</text>"#,
        LEFT + plot_w / 2.0,
        PANEL_HEIGHT - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="16" y="{:.2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 {:.2})">log10 value</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    for (i, (&family, series)) in panel.iter().enumerate() {
        let c = color(family);
        if let [only] = series.as_slice() {
            let _ = writeln!(
                out,
                r#"<circle class="series" data-family="{family}" cx="{:.2}" cy="{:.2}" r="4" fill="{c}"/>"#,
                x(f64::from(only.n)),
                y(only.value_log10)
            );
        } else {
            let points: Vec<String> = series
                .iter()
                .map(|r| format!("{:.2},{:.2}", x(f64::from(r.n)), y(r.value_log10)))
                .collect();
            let _ = writeln!(
                out,
                r#"<polyline class="series" data-family="{family}" fill="none" stroke="{c}" stroke-width="2" points="{}"/>"#,
                points.join(" ")
            );
        }
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{c}" stroke-width="3"/><text x="{:.2}" y="{:.2}" font-size="12">{} {}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            family.code(),
            escape(family.name())
        );
    }
    out.push_str("</g>\n");
}

/// Renders rows into an SVG document. Identical input gives identical bytes.
pub fn render_svg(rows: &[SweepRow]) -> Result<String, PlotError> {
    let mut panels: BTreeMap<(IndexKind, String), Panel> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        let kind: IndexKind = r
            .index
            .parse()
            .map_err(|source| PlotError::UnknownIndex { row: i + 1, source })?;
        if !r.value_log10.is_finite() {
            return Err(PlotError::NonFinite { row: i + 1 });
        }
        panels
            .entry((kind, r.param.clone()))
            .or_default()
            .entry(r.family)
            .or_default()
            .push(r);
    }
    for panel in panels.values_mut() {
        for series in panel.values_mut() {
            series.sort_by_key(|r| r.n);
        }
    }

    let height = PANEL_HEIGHT * panels.len().max(1) as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}" font-family="sans-serif">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if panels.is_empty() {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="14">no data</text>"#,
            WIDTH / 2.0,
            height / 2.0
        );
    }
    for (slot, ((kind, param), panel)) in panels.iter().enumerate() {
        draw_panel(&mut out, slot, *kind, param, panel);
    }
    out.push_str("</svg>\n");
    Ok(out)
}
