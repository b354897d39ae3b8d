//! Minimal deterministic SVG emission: polylines, step paths, and shaded
//! rectangles. Coordinates are rounded to two decimals and no timestamps
//! are embedded, so identical inputs yield identical bytes.

use chrono::{Datelike, NaiveDate};

pub const WIDTH: f64 = 960.0;
pub const HEIGHT: f64 = 480.0;
pub const MARGIN: f64 = 40.0;

/// Affine map from a data domain onto a pixel range.
#[derive(Debug, Clone, Copy)]
pub struct LinearScale {
    d0: f64,
    d1: f64,
    r0: f64,
    r1: f64,
}

impl LinearScale {
    pub fn new(domain: (f64, f64), range: (f64, f64)) -> Self {
        let (d0, d1) = domain;
        let span = if d1 == d0 { 1.0 } else { d1 - d0 };
        LinearScale {
            d0,
            d1: d0 + span,
            r0: range.0,
            r1: range.1,
        }
    }

    pub fn map(&self, v: f64) -> f64 {
        self.r0 + (v - self.d0) / (self.d1 - self.d0) * (self.r1 - self.r0)
    }
}

/// Days since the common era, used as the x coordinate for dates.
pub fn date_num(d: NaiveDate) -> f64 {
    d.num_days_from_ce() as f64
}

pub struct Svg {
    body: String,
}

impl Svg {
    pub fn new(title: &str) -> Self {
        let mut body = String::new();
        body.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
             viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
        ));
        body.push_str(&format!(
            "<!-- polecon {} -->\n",
            env!("CARGO_PKG_VERSION")
        ));
        body.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        body.push_str(&format!(
            "<text x=\"{MARGIN}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">{}</text>\n",
            escape(title)
        ));
        Svg { body }
    }

    pub fn shaded_rect(&mut self, x0: f64, x1: f64, fill: &str) {
        self.body.push_str(&format!(
            "<rect x=\"{:.2}\" y=\"{MARGIN:.2}\" width=\"{:.2}\" height=\"{:.2}\" \
             fill=\"{fill}\" fill-opacity=\"0.25\"/>\n",
            x0,
            (x1 - x0).max(1.0),
            HEIGHT - 2.0 * MARGIN,
        ));
    }

    pub fn polyline(&mut self, points: &[(f64, f64)], stroke: &str) {
        if points.is_empty() {
            return;
        }
        let coords: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        self.body.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.5\"/>\n",
            coords.join(" ")
        ));
    }

    /// Horizontal-then-vertical path through the points (stepwise series).
    pub fn step_path(&mut self, points: &[(f64, f64)], x_end: f64, stroke: &str) {
        if points.is_empty() {
            return;
        }
        let mut d = format!("M {:.2} {:.2}", points[0].0, points[0].1);
        for w in points.windows(2) {
            d.push_str(&format!(
                " H {:.2} V {:.2}",
                w[1].0, w[1].1
            ));
        }
        d.push_str(&format!(" H {x_end:.2}"));
        self.body.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.5\"/>\n"
        ));
    }

    pub fn hline(&mut self, y: f64, stroke: &str) {
        self.body.push_str(&format!(
            "<line x1=\"{MARGIN:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"{stroke}\" stroke-width=\"1\"/>\n",
            WIDTH - MARGIN
        ));
    }

    pub fn label(&mut self, x: f64, y: f64, fill: &str, text: &str) {
        self.body.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             fill=\"{fill}\">{}</text>\n",
            escape(text)
        ));
    }

    pub fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
