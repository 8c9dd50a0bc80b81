//! Deterministic SVG rendering for zero scatters and limit-set overlays.
//!
//! The markup is assembled by hand in a fixed order with fixed-precision
//! pixel coordinates, so a figure is byte-identical across runs and diffable
//! in version control. Axes, tick labels, and a legend are embedded, making
//! each file self-describing. No graphics dependencies.

use bkw_core::limitset::Window;
use num_complex::Complex64;
use std::fmt::Write as _;

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 900.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 55.0;
const TICKS: usize = 7;

/// Stroke colors cycled over equimodular curve pairs.
pub const CURVE_COLORS: [&str; 6] = [
    "#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Fill color for a zero of `P_n`, darkening as `n` grows so the eye can
/// follow the migration of the roots across the index range.
pub fn n_color(n: i64, n_from: i64, n_to: i64) -> String {
    let t = if n_to > n_from {
        (n - n_from) as f64 / (n_to - n_from) as f64
    } else {
        1.0
    };
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        lerp(158.0, 8.0),
        lerp(202.0, 48.0),
        lerp(225.0, 107.0)
    )
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick label: trimmed fixed-point decimal (no trailing zeros, no `-0`).
fn fmt_tick(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// One figure: a window-mapped coordinate frame with axes already drawn.
pub struct Figure {
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    buf: String,
}

impl Figure {
    pub fn new(title: &str, window: &Window) -> Self {
        let mut fig = Figure {
            re_min: window.re_min,
            re_max: window.re_max,
            im_min: window.im_min,
            im_max: window.im_max,
            buf: String::new(),
        };
        let b = &mut fig.buf;
        let _ = writeln!(
            b,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
        );
        let _ = writeln!(
            b,
            "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>"
        );
        let _ = writeln!(
            b,
            "<text x=\"{MARGIN_LEFT}\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#111111\">{}</text>",
            esc(title)
        );
        let (x0, x1) = (MARGIN_LEFT, WIDTH - MARGIN_RIGHT);
        let (y0, y1) = (MARGIN_TOP, HEIGHT - MARGIN_BOTTOM);
        for i in 0..TICKS {
            let f = i as f64 / (TICKS - 1) as f64;
            let re = fig.re_min + f * (fig.re_max - fig.re_min);
            let im = fig.im_min + f * (fig.im_max - fig.im_min);
            let x = x0 + f * (x1 - x0);
            // The vertical axis grows upward, so tick rows are laid top-down.
            let y = y1 - f * (y1 - y0);
            let _ = writeln!(
                b,
                "<line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{y1:.2}\" stroke=\"#e4e4e4\" stroke-width=\"1\"/>"
            );
            let _ = writeln!(
                b,
                "<line x1=\"{x0:.2}\" y1=\"{y:.2}\" x2=\"{x1:.2}\" y2=\"{y:.2}\" stroke=\"#e4e4e4\" stroke-width=\"1\"/>"
            );
            let _ = writeln!(
                b,
                "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" text-anchor=\"middle\">{}</text>",
                y1 + 18.0,
                fmt_tick(re)
            );
            let _ = writeln!(
                b,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" text-anchor=\"end\">{}</text>",
                x0 - 8.0,
                y + 4.0,
                fmt_tick(im)
            );
        }
        let _ = writeln!(
            b,
            "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>",
            x1 - x0,
            y1 - y0
        );
        let _ = writeln!(
            b,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\" text-anchor=\"middle\">Re(z)</text>",
            (x0 + x1) / 2.0,
            HEIGHT - 12.0
        );
        let _ = writeln!(
            b,
            "<text x=\"18\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">Im(z)</text>",
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0
        );
        fig
    }

    fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    fn map(&self, z: Complex64) -> (f64, f64) {
        let fx = (z.re - self.re_min) / (self.re_max - self.re_min);
        let fy = (z.im - self.im_min) / (self.im_max - self.im_min);
        (
            MARGIN_LEFT + fx * (WIDTH - MARGIN_RIGHT - MARGIN_LEFT),
            HEIGHT - MARGIN_BOTTOM - fy * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM),
        )
    }

    /// A curve polyline. Single points (one-vertex polylines) render as a
    /// small open circle so they stay visible.
    pub fn polyline(&mut self, points: &[Complex64], color: &str) {
        if points.is_empty() {
            return;
        }
        if points.len() == 1 {
            let (x, y) = self.map(points[0]);
            let _ = writeln!(
                self.buf,
                "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\"/>"
            );
            return;
        }
        let mut d = String::new();
        for (i, &p) in points.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{x:.2} {y:.2}", if i == 0 { "M" } else { " L" });
        }
        let _ = writeln!(
            self.buf,
            "<path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\" stroke-linejoin=\"round\"/>"
        );
    }

    /// A zero of `P_n`, tagged with its index via `data-n` and skipped when
    /// outside the window (an empty intersection leaves axes only).
    pub fn dot(&mut self, z: Complex64, color: &str, n: i64) {
        if !self.contains(z) {
            return;
        }
        let (x, y) = self.map(z);
        let _ = writeln!(
            self.buf,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.2\" fill=\"{color}\" fill-opacity=\"0.75\" data-n=\"{n}\"/>"
        );
    }

    /// An isolated or persistent limit point, drawn as a diagonal cross.
    pub fn cross(&mut self, z: Complex64, color: &str) {
        if !self.contains(z) {
            return;
        }
        let (x, y) = self.map(z);
        let r = 5.0;
        let _ = writeln!(
            self.buf,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x - r,
            y - r,
            x + r,
            y + r
        );
        let _ = writeln!(
            self.buf,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x - r,
            y + r,
            x + r,
            y - r
        );
    }

    /// Legend entries as `(kind, color, label)` with kind one of
    /// `"dot" | "line" | "cross"`, stacked in the top-right corner.
    pub fn legend(&mut self, entries: &[(&str, &str, String)]) {
        if entries.is_empty() {
            return;
        }
        let w = 230.0;
        let h = 14.0 + 20.0 * entries.len() as f64;
        let x = WIDTH - MARGIN_RIGHT - w - 10.0;
        let y = MARGIN_TOP + 10.0;
        let _ = writeln!(
            self.buf,
            "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{w:.2}\" height=\"{h:.2}\" fill=\"#ffffff\" fill-opacity=\"0.88\" stroke=\"#999999\" stroke-width=\"0.8\"/>"
        );
        for (i, (kind, color, label)) in entries.iter().enumerate() {
            let cy = y + 17.0 + 20.0 * i as f64;
            let cx = x + 16.0;
            match *kind {
                "line" => {
                    let _ = writeln!(
                        self.buf,
                        "<line x1=\"{:.2}\" y1=\"{cy:.2}\" x2=\"{:.2}\" y2=\"{cy:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                        cx - 8.0,
                        cx + 8.0
                    );
                }
                "cross" => {
                    let r = 4.0;
                    let _ = writeln!(
                        self.buf,
                        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                        cx - r,
                        cy - r,
                        cx + r,
                        cy + r
                    );
                    let _ = writeln!(
                        self.buf,
                        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                        cx - r,
                        cy + r,
                        cx + r,
                        cy - r
                    );
                }
                _ => {
                    let _ = writeln!(
                        self.buf,
                        "<circle cx=\"{cx:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                        cy - 1.0
                    );
                }
            }
            let _ = writeln!(
                self.buf,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">{}</text>",
                cx + 14.0,
                cy + 3.0,
                esc(label)
            );
        }
    }

    pub fn finish(mut self) -> String {
        self.buf.push_str("</svg>\n");
        self.buf
    }
}
