//! Self-contained HTML report for a regression analysis.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::num::display4;
use crate::regression::{self, Point, RegressionAnalysis, RegressionError, RegressionInput};

use super::svg::{escape_xml, Chart};

pub const MATHJAX_URL: &str = "https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-chtml.js";
pub const PAYLOAD_ID: &str = "replay-payload";
const SHOWN_ROWS: usize = 200;

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRequest {
    pub input: RegressionInput,
    #[serde(default = "default_true")]
    pub include_steps: bool,
}

/// The request as compact JSON with `<`, `>` and `&` written as `\u00XX`,
/// so it can sit inside a `<script>` element unchanged.
pub fn replay_payload(req: &ReportRequest) -> String {
    let json = serde_json::to_string(req).expect("request serializes");
    let mut out = String::with_capacity(json.len());
    for c in json.chars() {
        match c {
            '<' => out.push_str("\\u003c"),
            '>' => out.push_str("\\u003e"),
            '&' => out.push_str("\\u0026"),
            _ => out.push(c),
        }
    }
    out
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), display4)
}

fn p_cell(v: Option<f64>) -> String {
    v.map_or_else(
        || "undefined".to_string(),
        |p| {
            if p < super::inference::SMALL_P {
                "&lt; 0.0001".to_string()
            } else {
                display4(p)
            }
        },
    )
}

fn sample_sd(values: &[f64], mean: f64) -> f64 {
    let ss: f64 = crate::num::compensated_sum(values.iter().map(|v| (v - mean) * (v - mean)));
    (ss / (values.len() as f64 - 1.0)).sqrt()
}

fn push_row(html: &mut String, cells: &[String]) {
    html.push_str("<tr>");
    for c in cells {
        let _ = write!(html, "<td>{c}</td>");
    }
    html.push_str("</tr>\n");
}

const STYLE: &str = "body{font-family:sans-serif;max-width:60em;margin:2em auto;padding:0 1em;color:#222}\
table{border-collapse:collapse;margin:1em 0}td,th{border:1px solid #ccc;padding:.25em .6em;text-align:right}\
th{background:#f4f4f4}.plots svg{margin:.5em}.note{color:#666;font-size:.9em}";

fn charts(input: &RegressionInput, a: &RegressionAnalysis) -> Vec<String> {
    let points: Vec<Point> = input.x.iter().zip(&input.y).map(|(&x, &y)| Point { x, y }).collect();
    let lo = input.x.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = input.x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let line = vec![
        Point { x: lo, y: a.fit.beta0_hat + a.fit.beta1_hat * lo },
        Point { x: hi, y: a.fit.beta0_hat + a.fit.beta1_hat * hi },
    ];
    let band = a.band.as_ref().map(|b| {
        let upper = b.grid.iter().zip(&b.upper).map(|(&x, &y)| Point { x, y }).collect();
        let lower = b.grid.iter().zip(&b.lower).map(|(&x, &y)| Point { x, y }).collect();
        (upper, lower)
    });
    let mut out = vec![Chart {
        title: format!("{} against {}", input.y_label, input.x_label),
        x_label: input.x_label.clone(),
        y_label: input.y_label.clone(),
        points,
        lines: vec![line],
        band,
        ..Chart::default()
    }
    .render()];
    if let Some(d) = &a.diagnostics {
        out.push(
            Chart {
                title: "Residuals vs fitted".into(),
                x_label: "Fitted values".into(),
                y_label: "Residuals".into(),
                points: d.residuals_vs_fitted.clone(),
                hline: Some(0.0),
                ..Chart::default()
            }
            .render(),
        );
        out.push(
            Chart {
                title: "Normal Q-Q".into(),
                x_label: "Theoretical quantiles".into(),
                y_label: "Standardized residuals".into(),
                points: d.qq_points.clone(),
                diagonal: true,
                ..Chart::default()
            }
            .render(),
        );
        out.push(
            Chart {
                title: "Scale-location".into(),
                x_label: "Fitted values".into(),
                y_label: "√|standardized residuals|".into(),
                points: d.scale_location.clone(),
                ..Chart::default()
            }
            .render(),
        );
        let lev = d
            .leverage
            .iter()
            .zip(&d.standardized_residuals)
            .filter_map(|(&h, r)| r.map(|r| Point { x: h, y: r }))
            .collect();
        out.push(
            Chart {
                title: "Residuals vs leverage".into(),
                x_label: "Leverage".into(),
                y_label: "Standardized residuals".into(),
                points: lev,
                hline: Some(0.0),
                ..Chart::default()
            }
            .render(),
        );
    }
    out
}

/// Renders the report. Identical requests give identical bytes.
pub fn regression_report(req: &ReportRequest) -> Result<String, RegressionError> {
    let input = &req.input;
    let a = regression::analyze(input)?;
    let fit = &a.fit;
    let (xl, yl) = (escape_xml(&input.x_label), escape_xml(&input.y_label));
    let mut h = String::new();
    h.push_str("<!DOCTYPE html>\n<html xmlns=\"http://www.w3.org/1999/xhtml\" lang=\"en\">\n<head>\n");
    h.push_str("<meta charset=\"utf-8\"/>\n");
    let _ = writeln!(h, "<title>Linear regression of {yl} on {xl}</title>");
    let _ = writeln!(h, "<style>{STYLE}</style>");
    let _ = writeln!(h, "<script id=\"MathJax-script\" async=\"async\" src=\"{MATHJAX_URL}\"></script>");
    h.push_str("</head>\n<body>\n");
    let _ = writeln!(h, "<h1>Linear regression of {yl} on {xl}</h1>");

    h.push_str("<section id=\"data\">\n<h2>Data</h2>\n<table>\n");
    let _ = writeln!(h, "<tr><th>i</th><th>{xl}</th><th>{yl}</th><th>Fitted</th><th>Residual</th></tr>");
    for i in 0..fit.n.min(SHOWN_ROWS) {
        push_row(
            &mut h,
            &[
                (i + 1).to_string(),
                display4(input.x[i]),
                display4(input.y[i]),
                display4(fit.fitted[i]),
                display4(fit.residuals[i]),
            ],
        );
    }
    h.push_str("</table>\n");
    if fit.n > SHOWN_ROWS {
        let _ = writeln!(h, "<p class=\"note\">Showing the first {SHOWN_ROWS} of {} points.</p>", fit.n);
    }
    h.push_str("</section>\n");

    h.push_str("<section id=\"summary\">\n<h2>Summary statistics</h2>\n<table>\n");
    h.push_str("<tr><th>n</th><th>mean x</th><th>mean y</th><th>sd x</th><th>sd y</th><th>r</th></tr>\n");
    let r = (fit.sst > 0.0).then(|| fit.sxy / (fit.sxx * fit.sst).sqrt());
    push_row(
        &mut h,
        &[
            fit.n.to_string(),
            display4(fit.x_mean),
            display4(fit.y_mean),
            display4(sample_sd(&input.x, fit.x_mean)),
            display4(sample_sd(&input.y, fit.y_mean)),
            opt(r),
        ],
    );
    h.push_str("</table>\n</section>\n");

    if req.include_steps {
        h.push_str("<section id=\"derivation\">\n<h2>Derivation</h2>\n<ol>\n");
        for section in &a.derivation.sections {
            for step in &section.steps {
                let _ = writeln!(h, "<li>\\[{}\\]</li>", escape_xml(&step.display));
            }
        }
        h.push_str("</ol>\n</section>\n");
    }

    h.push_str("<section id=\"coefficients\">\n<h2>Coefficients</h2>\n<table>\n");
    h.push_str("<tr><th>Term</th><th>Estimate</th><th>Std. error</th><th>t</th><th>p-value</th></tr>\n");
    for row in &a.table.rows {
        push_row(
            &mut h,
            &[escape_xml(&row.term), display4(row.estimate), opt(row.std_error), opt(row.t_value), p_cell(row.p_value)],
        );
    }
    h.push_str("</table>\n");
    let _ = writeln!(
        h,
        "<p>Residual standard error {} on {} degrees of freedom. R² = {}, adjusted R² = {}.</p>",
        display4(fit.sigma_hat),
        fit.df_resid,
        opt(fit.r_squared),
        opt(fit.adj_r_squared)
    );
    if fit.degenerate {
        h.push_str("<p class=\"note\">The points lie exactly on a line; inference is not defined.</p>\n");
    }
    h.push_str("</section>\n");

    let _ = writeln!(
        h,
        "<section id=\"interpretation\">\n<h2>Interpretation</h2>\n<p>{}</p>\n</section>",
        escape_xml(&a.interpretation)
    );

    h.push_str("<section id=\"plots\" class=\"plots\">\n<h2>Plots</h2>\n");
    for svg in charts(input, &a) {
        h.push_str(&svg);
        h.push('\n');
    }
    h.push_str("</section>\n");

    let _ = writeln!(h, "<script type=\"application/json\" id=\"{PAYLOAD_ID}\">{}</script>", replay_payload(req));
    h.push_str("</body>\n</html>\n");
    Ok(h)
}

/// The raw text of the replay payload element, if present.
pub fn extract_payload(html: &str) -> Option<&str> {
    let open = format!("<script type=\"application/json\" id=\"{PAYLOAD_ID}\">");
    let start = html.find(&open)? + open.len();
    let end = html[start..].find("</script>")?;
    Some(&html[start..start + end])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request() -> ReportRequest {
        let mut input = RegressionInput::new(vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 3.0, 5.0, 4.0]);
        input.x_label = "dose <mg> & more".into();
        ReportRequest { input, include_steps: true }
    }

    #[test]
    fn payload_round_trips_byte_exact() {
        let req = request();
        let html = regression_report(&req).unwrap();
        let raw = extract_payload(&html).unwrap();
        assert_eq!(raw, replay_payload(&req));
        assert!(!raw.contains('<') && !raw.contains('&'));
        let back: ReportRequest = serde_json::from_str(raw).unwrap();
        assert_eq!(back, req);
    }

    #[test]
    fn deterministic_and_steps_optional() {
        let req = request();
        assert_eq!(regression_report(&req).unwrap(), regression_report(&req).unwrap());
        let with = regression_report(&req).unwrap();
        assert!(with.contains("id=\"derivation\""));
        let without = regression_report(&ReportRequest { include_steps: false, ..req }).unwrap();
        assert!(!without.contains("id=\"derivation\""));
        assert!(without.contains(MATHJAX_URL));
    }

    #[test]
    fn degenerate_fit_still_renders() {
        let req = ReportRequest {
            input: RegressionInput::new(vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]),
            include_steps: true,
        };
        let html = regression_report(&req).unwrap();
        assert!(html.contains("undefined"));
    }
}
