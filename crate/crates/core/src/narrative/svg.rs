//! Inline SVG charts for the regression report.

use std::fmt::Write;

use crate::regression::Point;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 320.0;
const LEFT: f64 = 56.0;
const RIGHT: f64 = 16.0;
const TOP: f64 = 32.0;
const BOTTOM: f64 = 44.0;

pub(crate) fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            _ => out.push(c),
        }
    }
    out
}

#[derive(Default)]
pub(crate) struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub points: Vec<Point>,
    pub lines: Vec<Vec<Point>>,
    /// Upper and lower edges of a shaded band over the same x values.
    pub band: Option<(Vec<Point>, Vec<Point>)>,
    pub hline: Option<f64>,
    pub diagonal: bool,
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)
    }
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    if !(lo.is_finite() && hi.is_finite()) {
        return (0.0, 1.0);
    }
    let span = hi - lo;
    if span <= 0.0 {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
        return (lo - pad, hi + pad);
    }
    (lo - 0.05 * span, hi + 0.05 * span)
}

fn fmt_tick(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-3..1e5).contains(&a) {
        format!("{v:.2e}")
    } else {
        let s = format!("{v:.3}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".to_string()
        } else {
            s.to_string()
        }
    }
}

fn path(frame: &Frame, pts: &[Point]) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let _ = write!(d, "{}{:.2},{:.2}", if i == 0 { "M" } else { " L" }, frame.px(p.x), frame.py(p.y));
    }
    d
}

impl Chart {
    fn frame(&self) -> Frame {
        let mut all: Vec<Point> = self.points.clone();
        all.extend(self.lines.iter().flatten());
        if let Some((u, l)) = &self.band {
            all.extend(u);
            all.extend(l);
        }
        let fold = |f: fn(&Point) -> f64| {
            all.iter()
                .map(f)
                .filter(|v| v.is_finite())
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
        };
        let (mut xl, mut xh) = fold(|p| p.x);
        let (mut yl, mut yh) = fold(|p| p.y);
        if let Some(h) = self.hline {
            yl = yl.min(h);
            yh = yh.max(h);
        }
        if self.diagonal {
            let lo = xl.min(yl);
            let hi = xh.max(yh);
            (xl, xh, yl, yh) = (lo, hi, lo, hi);
        }
        let (x0, x1) = padded(xl, xh);
        let (y0, y1) = padded(yl, yh);
        Frame { x0, x1, y0, y1 }
    }

    pub fn render(&self) -> String {
        let f = self.frame();
        let mut s = String::new();
        let _ = write!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" role="img">"#
        );
        let _ = write!(s, "<title>{}</title>", escape_xml(&self.title));
        let (left, right, top, bottom) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
        let _ = write!(
            s,
            r##"<rect x="{left}" y="{top}" width="{}" height="{}" fill="#fff" stroke="#999"/>"##,
            right - left,
            bottom - top
        );
        for i in 0..=4 {
            let t = i as f64 / 4.0;
            let xv = f.x0 + t * (f.x1 - f.x0);
            let yv = f.y0 + t * (f.y1 - f.y0);
            let _ = write!(
                s,
                r##"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{}</text>"##,
                f.px(xv),
                bottom + 14.0,
                fmt_tick(xv)
            );
            let _ = write!(
                s,
                r##"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{}</text>"##,
                left - 4.0,
                f.py(yv) + 3.0,
                fmt_tick(yv)
            );
        }
        if let Some((upper, lower)) = &self.band {
            let mut pts = upper.clone();
            pts.extend(lower.iter().rev());
            let _ = write!(s, r##"<path d="{} Z" fill="#9ecae1" fill-opacity="0.5" stroke="none"/>"##, path(&f, &pts));
        }
        if let Some(h) = self.hline {
            let _ = write!(
                s,
                r##"<line x1="{left}" x2="{right}" y1="{y:.2}" y2="{y:.2}" stroke="#888" stroke-dasharray="4 3"/>"##,
                y = f.py(h)
            );
        }
        if self.diagonal {
            let (lo, hi) = (f.x0.max(f.y0), f.x1.min(f.y1));
            let _ = write!(
                s,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#888" stroke-dasharray="4 3"/>"##,
                f.px(lo),
                f.py(lo),
                f.px(hi),
                f.py(hi)
            );
        }
        for line in &self.lines {
            let _ = write!(s, r##"<path d="{}" fill="none" stroke="#c0392b" stroke-width="2"/>"##, path(&f, line));
        }
        for p in self.points.iter().filter(|p| p.x.is_finite() && p.y.is_finite()) {
            let _ = write!(s, r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#2c7fb8"/>"##, f.px(p.x), f.py(p.y));
        }
        let _ = write!(
            s,
            r##"<text x="{:.2}" y="18" font-size="13" text-anchor="middle">{}</text>"##,
            (left + right) / 2.0,
            escape_xml(&self.title)
        );
        let _ = write!(
            s,
            r##"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">{}</text>"##,
            (left + right) / 2.0,
            HEIGHT - 8.0,
            escape_xml(&self.x_label)
        );
        let _ = write!(
            s,
            r##"<text x="14" y="{cy:.2}" font-size="11" text-anchor="middle" transform="rotate(-90 14 {cy:.2})">{}</text>"##,
            escape_xml(&self.y_label),
            cy = (top + bottom) / 2.0
        );
        s.push_str("</svg>");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_escaped_and_deterministic() {
        let chart = Chart {
            title: "a < b & c".into(),
            x_label: "x".into(),
            y_label: "y".into(),
            points: vec![Point { x: 0.0, y: 1.0 }, Point { x: 1.0, y: 3.0 }],
            hline: Some(0.0),
            ..Chart::default()
        };
        let a = chart.render();
        assert!(a.contains("a &lt; b &amp; c"));
        assert_eq!(a, chart.render());
        assert_eq!(a.matches("<circle").count(), 2);
    }

    #[test]
    fn single_point_has_finite_frame() {
        let chart = Chart { points: vec![Point { x: 2.0, y: 2.0 }], ..Chart::default() };
        assert!(!chart.render().contains("NaN"));
    }
}
