//! Self-contained SVG charts of experiment rows.
//!
//! Values are plotted against N. When the row set contains several rows for
//! the same N (the numeric tables do), rows are grouped by list size and each
//! group gets its own series. No GUI or external renderer is involved; the
//! output is a single SVG document.

use std::collections::BTreeMap;

use crate::experiment::ExperimentRow;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    Line,
    Bar,
}

/// Which column of the rows to plot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    CMtf,
    CImtf,
    Gain,
}

impl SeriesKind {
    fn label(self) -> &'static str {
        match self {
            SeriesKind::CMtf => "C_MTF",
            SeriesKind::CImtf => "C_IMTF",
            SeriesKind::Gain => "g",
        }
    }

    fn value(self, row: &ExperimentRow) -> f64 {
        match self {
            SeriesKind::CMtf => row.c_mtf as f64,
            SeriesKind::CImtf => row.c_imtf as f64,
            SeriesKind::Gain => row.gain_percent,
        }
    }
}

/// One plotted series: `(n, value)` points in ascending `n` order.
#[derive(Debug, Clone, PartialEq)]
pub struct DataSeries {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

/// The chart's data layer, independent of pixel layout.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartData {
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<DataSeries>,
}

/// Extracts the plotted series from rows: one series per requested kind, or
/// one per (kind, list size) when several rows share the same N.
pub fn chart_data(rows: &[ExperimentRow], kinds: &[SeriesKind]) -> Result<ChartData> {
    if rows.is_empty() || kinds.is_empty() {
        return Err(Error::NoRows);
    }

    let mut n_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for row in rows {
        *n_counts.entry(row.n).or_insert(0) += 1;
    }
    let group_by_l = n_counts.values().any(|&c| c > 1);

    let mut groups: BTreeMap<Option<usize>, Vec<&ExperimentRow>> = BTreeMap::new();
    for row in rows {
        let key = group_by_l.then_some(row.l);
        groups.entry(key).or_default().push(row);
    }

    let mut series = Vec::new();
    for kind in kinds {
        for (key, group) in &groups {
            let mut points: Vec<(f64, f64)> = group
                .iter()
                .map(|row| (row.n as f64, kind.value(row)))
                .collect();
            points.sort_by(|a, b| a.0.total_cmp(&b.0));
            let label = match key {
                Some(l) => format!("{} L={}", kind.label(), l),
                None => kind.label().to_string(),
            };
            series.push(DataSeries { label, points });
        }
    }

    let y_label = if kinds.iter().all(|k| *k == SeriesKind::Gain) {
        "gain (%)"
    } else if kinds.contains(&SeriesKind::Gain) {
        "value"
    } else {
        "total access cost"
    };
    Ok(ChartData {
        x_label: "N (request sequence length)".into(),
        y_label: y_label.into(),
        series,
    })
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 70.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f",
];

struct Scale {
    min: f64,
    max: f64,
    out_min: f64,
    out_max: f64,
}

impl Scale {
    fn map(&self, v: f64) -> f64 {
        let span = self.max - self.min;
        if span == 0.0 {
            return (self.out_min + self.out_max) / 2.0;
        }
        self.out_min + (v - self.min) / span * (self.out_max - self.out_min)
    }
}

fn tick_label(v: f64) -> String {
    if v.abs() >= 10.0 || v == 0.0 {
        format!("{v:.0}")
    } else {
        format!("{v:.1}")
    }
}

/// Renders rows as a single SVG document with labeled axes and a legend.
pub fn emit_chart(rows: &[ExperimentRow], kind: ChartKind, kinds: &[SeriesKind]) -> Result<String> {
    let data = chart_data(rows, kinds)?;

    let values = data.series.iter().flat_map(|s| s.points.iter());
    let y_max = values.clone().map(|p| p.1).fold(f64::MIN, f64::max);
    let y_min = values
        .clone()
        .map(|p| p.1)
        .fold(f64::MAX, f64::min)
        .min(0.0);
    let x_max = values.clone().map(|p| p.0).fold(f64::MIN, f64::max);
    let x_min = values.map(|p| p.0).fold(f64::MAX, f64::min);
    let headroom = ((y_max - y_min) * 0.05).max(1.0);

    let x = Scale {
        min: x_min,
        max: x_max,
        out_min: MARGIN_LEFT,
        out_max: WIDTH - MARGIN_RIGHT,
    };
    let y = Scale {
        min: y_min,
        max: y_max + headroom,
        out_min: HEIGHT - MARGIN_BOTTOM,
        out_max: MARGIN_TOP,
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"sans-serif\" font-size=\"13\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // axes
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    svg.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n\
         <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n"
    ));
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let yv = y.min + t * (y.max - y.min);
        let yp = y.map(yv);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{yp}\" x2=\"{x0}\" y2=\"{yp}\" stroke=\"black\"/>\
             <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
            x0 - 5.0,
            x0 - 9.0,
            yp + 4.0,
            tick_label(yv)
        ));
        let xv = x.min + t * (x.max - x.min);
        let xp = x.map(xv);
        svg.push_str(&format!(
            "<line x1=\"{xp}\" y1=\"{y0}\" x2=\"{xp}\" y2=\"{}\" stroke=\"black\"/>\
             <text x=\"{xp}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            y0 + 5.0,
            y0 + 20.0,
            tick_label(xv)
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 20.0,
        data.x_label
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">{}</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        data.y_label
    ));

    match kind {
        ChartKind::Line => {
            for (si, series) in data.series.iter().enumerate() {
                let color = PALETTE[si % PALETTE.len()];
                let points: Vec<String> = series
                    .points
                    .iter()
                    .map(|&(px, py)| format!("{:.1},{:.1}", x.map(px), y.map(py)))
                    .collect();
                svg.push_str(&format!(
                    "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
                    points.join(" ")
                ));
                for &(px, py) in &series.points {
                    svg.push_str(&format!(
                        "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"3\" fill=\"{color}\"/>\n",
                        x.map(px),
                        y.map(py)
                    ));
                }
            }
        }
        ChartKind::Bar => {
            // clusters at each distinct N, one bar per series
            let mut categories: Vec<f64> = data
                .series
                .iter()
                .flat_map(|s| s.points.iter().map(|p| p.0))
                .collect();
            categories.sort_by(f64::total_cmp);
            categories.dedup();
            let cluster_w = (x1 - x0) / categories.len() as f64;
            let bar_w = cluster_w * 0.8 / data.series.len() as f64;
            let baseline = y.map(0.0_f64.max(y.min));
            for (si, series) in data.series.iter().enumerate() {
                let color = PALETTE[si % PALETTE.len()];
                for &(px, py) in &series.points {
                    let ci = categories
                        .iter()
                        .position(|&c| c == px)
                        .expect("category from the same rows");
                    let cx = x0 + ci as f64 * cluster_w + cluster_w * 0.1 + si as f64 * bar_w;
                    let yp = y.map(py);
                    let (top, h) = if yp <= baseline {
                        (yp, baseline - yp)
                    } else {
                        (baseline, yp - baseline)
                    };
                    svg.push_str(&format!(
                        "<rect x=\"{cx:.1}\" y=\"{top:.1}\" width=\"{bar_w:.1}\" \
                         height=\"{h:.1}\" fill=\"{color}\"/>\n"
                    ));
                }
            }
        }
    }

    // legend
    for (si, series) in data.series.iter().enumerate() {
        let color = PALETTE[si % PALETTE.len()];
        let ly = MARGIN_TOP + 10.0 + si as f64 * 22.0;
        svg.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"14\" height=\"14\" fill=\"{color}\"/>\
             <text x=\"{}\" y=\"{}\">{}</text>\n",
            x1 + 15.0,
            ly,
            x1 + 35.0,
            ly + 12.0,
            xml_escape(&series.label)
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
