//! Self-contained SVG line plots: static markup, no scripts, no external
//! assets. One builder covers the sweep curves (log-scale ratio vs guard
//! width) and the linear overlays used by the demo page.

use crate::error::{DhtError, Result};
use crate::report::SweepTable;

const SERIES_COLORS: [&str; 4] = ["#2c6fbb", "#d9541e", "#2e8540", "#8a2be2"];
const LOG_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YScale {
    Linear,
    Log10,
}

#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub markers: bool,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
            markers: false,
        }
    }

    pub fn with_markers(mut self) -> Self {
        self.markers = true;
        self
    }
}

#[derive(Debug, Clone)]
pub struct LinePlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub y_scale: YScale,
    width: f64,
    height: f64,
    series: Vec<Series>,
}

// Pixel margins around the data area.
const MARGIN_LEFT: f64 = 78.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 46.0;
const MARGIN_BOTTOM: f64 = 58.0;

impl LinePlot {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
        y_scale: YScale,
    ) -> Self {
        Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            y_scale,
            width: 720.0,
            height: 480.0,
            series: Vec::new(),
        }
    }

    pub fn add_series(&mut self, series: Series) -> &mut Self {
        self.series.push(series);
        self
    }

    fn y_value(&self, y: f64) -> f64 {
        match self.y_scale {
            YScale::Linear => y,
            YScale::Log10 => y.max(LOG_FLOOR).log10(),
        }
    }

    fn bounds(&self) -> Result<(f64, f64, f64, f64)> {
        let mut any = false;
        let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
        for s in &self.series {
            for &(x, y) in &s.points {
                any = true;
                x_min = x_min.min(x);
                x_max = x_max.max(x);
                let y = self.y_value(y);
                y_min = y_min.min(y);
                y_max = y_max.max(y);
            }
        }
        if !any {
            return Err(DhtError::InvalidInput("nothing to plot".into()));
        }
        // Degenerate extents still need a drawable span.
        if x_min == x_max {
            x_min -= 1.0;
            x_max += 1.0;
        }
        if y_min == y_max {
            y_min -= 1.0;
            y_max += 1.0;
        }
        Ok((x_min, x_max, y_min, y_max))
    }

    /// Maps a data point to pixel coordinates (the y value is taken on the
    /// plot's scale). Exposed so tests can locate plotted markers.
    pub fn map_point(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let (x_min, x_max, y_min, y_max) = self.bounds()?;
        let plot_w = self.width - MARGIN_LEFT - MARGIN_RIGHT;
        let plot_h = self.height - MARGIN_TOP - MARGIN_BOTTOM;
        let px = MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w;
        let yv = self.y_value(y);
        let py = MARGIN_TOP + (y_max - yv) / (y_max - y_min) * plot_h;
        Ok((px, py))
    }

    pub fn to_svg(&self) -> Result<String> {
        let (x_min, x_max, y_min, y_max) = self.bounds()?;
        let (w, h) = (self.width, self.height);
        let plot_right = w - MARGIN_RIGHT;
        let plot_bottom = h - MARGIN_BOTTOM;

        let mut svg = String::with_capacity(4096);
        svg.push_str(&format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{:.1}" y="26" text-anchor="middle" font-size="16">{}</text>"#,
            w / 2.0,
            escape(&self.title)
        ));
        svg.push('\n');

        // Grid and ticks.
        let plot_w = plot_right - MARGIN_LEFT;
        for tick in x_ticks(x_min, x_max) {
            let px = MARGIN_LEFT + (tick - x_min) / (x_max - x_min) * plot_w;
            svg.push_str(&format!(
                r##"<line x1="{px:.2}" y1="{MARGIN_TOP}" x2="{px:.2}" y2="{plot_bottom}" stroke="#dddddd" stroke-width="1"/>"##
            ));
            svg.push('\n');
            svg.push_str(&format!(
                r#"<text x="{px:.2}" y="{:.1}" text-anchor="middle" font-size="12">{}</text>"#,
                plot_bottom + 18.0,
                format_tick(tick)
            ));
            svg.push('\n');
        }
        for (yv, label) in y_ticks(self.y_scale, y_min, y_max) {
            let plot_h = h - MARGIN_TOP - MARGIN_BOTTOM;
            let py = MARGIN_TOP + (y_max - yv) / (y_max - y_min) * plot_h;
            svg.push_str(&format!(
                r##"<line x1="{MARGIN_LEFT}" y1="{py:.2}" x2="{plot_right}" y2="{py:.2}" stroke="#dddddd" stroke-width="1"/>"##
            ));
            svg.push('\n');
            svg.push_str(&format!(
                r#"<text x="{:.1}" y="{:.2}" text-anchor="end" font-size="12">{label}</text>"#,
                MARGIN_LEFT - 8.0,
                py + 4.0
            ));
            svg.push('\n');
        }

        // Axes.
        svg.push_str(&format!(
            r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{:.1}" height="{:.1}" fill="none" stroke="black" stroke-width="1"/>"#,
            plot_right - MARGIN_LEFT,
            plot_bottom - MARGIN_TOP
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="13">{}</text>"#,
            (MARGIN_LEFT + plot_right) / 2.0,
            h - 14.0,
            escape(&self.x_label)
        ));
        svg.push('\n');
        svg.push_str(&format!(
            r#"<text x="18" y="{:.1}" text-anchor="middle" font-size="13" transform="rotate(-90 18 {:.1})">{}</text>"#,
            (MARGIN_TOP + plot_bottom) / 2.0,
            (MARGIN_TOP + plot_bottom) / 2.0,
            escape(&self.y_label)
        ));
        svg.push('\n');

        // Series.
        for (idx, series) in self.series.iter().enumerate() {
            let color = SERIES_COLORS[idx % SERIES_COLORS.len()];
            if series.points.len() > 1 {
                let mut points = String::new();
                for &(x, y) in &series.points {
                    let (px, py) = self.map_point(x, y)?;
                    points.push_str(&format!("{px:.2},{py:.2} "));
                }
                svg.push_str(&format!(
                    r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
                    points.trim_end()
                ));
                svg.push('\n');
            }
            if series.markers || series.points.len() == 1 {
                for &(x, y) in &series.points {
                    let (px, py) = self.map_point(x, y)?;
                    svg.push_str(&format!(
                        r#"<circle cx="{px:.2}" cy="{py:.2}" r="2.5" fill="{color}"/>"#
                    ));
                    svg.push('\n');
                }
            }
        }

        // Legend only when there is something to distinguish.
        if self.series.len() > 1 {
            for (idx, series) in self.series.iter().enumerate() {
                let color = SERIES_COLORS[idx % SERIES_COLORS.len()];
                let ly = MARGIN_TOP + 16.0 + 18.0 * idx as f64;
                svg.push_str(&format!(
                    r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/>"#,
                    MARGIN_LEFT + 10.0,
                    MARGIN_LEFT + 34.0
                ));
                svg.push('\n');
                svg.push_str(&format!(
                    r#"<text x="{:.1}" y="{:.1}" font-size="12">{}</text>"#,
                    MARGIN_LEFT + 40.0,
                    ly + 4.0,
                    escape(&series.label)
                ));
                svg.push('\n');
            }
        }

        svg.push_str("</svg>\n");
        Ok(svg)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn format_tick(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e9 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

/// Round step sizes from the 1-2-5 ladder, targeting at most 8 ticks.
fn x_ticks(min: f64, max: f64) -> Vec<f64> {
    let range = max - min;
    let mut step = 10f64.powf((range / 8.0).log10().floor());
    for mult in [1.0, 2.0, 5.0, 10.0] {
        if range / (step * mult) <= 8.0 {
            step *= mult;
            break;
        }
    }
    let mut ticks = Vec::new();
    let mut t = (min / step).ceil() * step;
    while t <= max + 1e-9 * range {
        ticks.push(t);
        t += step;
    }
    ticks
}

/// Linear scale reuses the 1-2-5 ladder; log scale ticks at whole decades.
fn y_ticks(scale: YScale, y_min: f64, y_max: f64) -> Vec<(f64, String)> {
    match scale {
        YScale::Linear => x_ticks(y_min, y_max)
            .into_iter()
            .map(|t| (t, format_tick(t)))
            .collect(),
        YScale::Log10 => {
            let lo = y_min.floor() as i32;
            let hi = y_max.ceil() as i32;
            (lo..=hi)
                .filter(|p| {
                    let v = *p as f64;
                    v >= y_min - 1e-9 && v <= y_max + 1e-9
                })
                .map(|p| (p as f64, format_decade(p)))
                .collect()
        }
    }
}

fn format_decade(p: i32) -> String {
    if p >= 0 {
        format!("{}", 10f64.powi(p) as i64)
    } else {
        format!("{}", 10f64.powi(p))
    }
}

/// The guard-band experiment figure: ratio percentage against guard width,
/// log-scale y since the curves span 100% down to well below 1%.
pub fn sweep_plot(table: &SweepTable) -> LinePlot {
    let mut plot = LinePlot::new(
        format!("{} (N = {})", table.label, table.width),
        "guard band m",
        "RMS error ratio (% of m = 0)",
        YScale::Log10,
    );
    let points = table
        .rows
        .iter()
        .map(|r| (r.guard as f64, r.ratio_percent))
        .collect();
    plot.add_series(Series::new(table.label.clone(), points).with_markers());
    plot
}

pub fn sweep_svg(table: &SweepTable) -> Result<String> {
    sweep_plot(table).to_svg()
}
