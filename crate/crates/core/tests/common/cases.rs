#![allow(dead_code)]

//! Representative inputs for the golden files, shared by the core golden
//! test and the acceptance suite.

use std::collections::BTreeMap;

use statlab_core::distributions::{catalog, DistributionSpec, ProbabilityQuery};
use statlab_core::inference::{run_test, InferenceRequest};
use statlab_core::narrative::{self, regression_report, ReportRequest};
use statlab_core::regression::{analyze, RegressionInput};

pub fn representative_params(tag: &str, names: &[&str]) -> BTreeMap<String, f64> {
    names
        .iter()
        .map(|&name| {
            let v = match (tag, name) {
                ("hypergeometric", "population") => 20.0,
                ("hypergeometric", _) => 5.0,
                ("binomial", "n") => 10.0,
                (_, "p") | (_, "prob") => 0.4,
                (_, "location") | (_, "mu") | (_, "meanlog") => 1.0,
                _ => 3.0,
            };
            (name.to_string(), v)
        })
        .collect()
}

/// One document per family for P(1 ≤ X ≤ 2.5), as (file name, text).
/// Panics if a document lacks the Solution/Details structure.
pub fn distribution_documents() -> Vec<(String, String)> {
    catalog()
        .into_iter()
        .map(|info| {
            let names: Vec<&str> = info.params.iter().map(|p| p.name).collect();
            let spec = DistributionSpec::from_params(info.tag, &representative_params(info.tag, &names)).unwrap();
            let r = spec.probability(&ProbabilityQuery::Interval { a: 1.0, b: 2.5 }).unwrap();
            let titles: Vec<&str> = r.derivation.sections.iter().map(|s| s.title.as_str()).collect();
            assert_eq!(titles, ["Solution", "Details"], "{}", info.tag);
            let text = format!("{}\n{}", r.derivation.to_tex(), r.derivation.to_plain());
            (format!("distribution_{}.txt", info.tag), text)
        })
        .collect()
}

pub fn inference_cases() -> Vec<(&'static str, serde_json::Value)> {
    use serde_json::json;
    vec![
        (
            "one_mean",
            json!({
                "setting": "one_mean",
                "samples": [{"type": "raw", "data": [5.1, 4.9, 5.6, 5.8, 6.0, 5.3, 5.7, 6.1]}],
                "config": {"h0": 5.0}
            }),
        ),
        (
            "two_means_independent",
            json!({
                "setting": "two_means_independent",
                "samples": [
                    {"type": "mean_summary", "n": 12, "mean": 24.9, "sd": 3.2},
                    {"type": "mean_summary", "n": 15, "mean": 21.7, "sd": 4.1}
                ],
                "config": {"alternative": "greater"}
            }),
        ),
        (
            "two_means_paired",
            json!({
                "setting": "two_means_paired",
                "samples": [
                    {"type": "raw", "data": [12.0, 14.5, 11.2, 13.8, 15.1, 12.9]},
                    {"type": "raw", "data": [11.1, 13.9, 11.5, 12.2, 14.0, 12.0]}
                ]
            }),
        ),
        (
            "one_proportion",
            json!({
                "setting": "one_proportion",
                "samples": [{"type": "proportion_summary", "n": 120, "successes": 71}],
                "config": {"h0": 0.5}
            }),
        ),
        (
            "two_proportions",
            json!({
                "setting": "two_proportions",
                "samples": [
                    {"type": "proportion_summary", "n": 200, "successes": 64},
                    {"type": "proportion_summary", "n": 180, "successes": 41}
                ],
                "config": {"pooled_se": true, "alpha": 0.01}
            }),
        ),
        (
            "one_variance",
            json!({
                "setting": "one_variance",
                "samples": [{"type": "variance_summary", "n": 25, "var": 6.3}],
                "config": {"h0": 4.0, "alternative": "greater"}
            }),
        ),
        (
            "two_variances",
            json!({
                "setting": "two_variances",
                "samples": [
                    {"type": "variance_summary", "n": 16, "var": 2.8},
                    {"type": "variance_summary", "n": 21, "var": 1.5}
                ],
                "config": {"alternative": "less", "alpha": 0.1}
            }),
        ),
    ]
}

/// One four-section test document per setting. Panics on a structural
/// mismatch (section titles, four steps in the test section).
pub fn test_documents() -> Vec<(String, String)> {
    inference_cases()
        .into_iter()
        .map(|(name, body)| {
            let req: InferenceRequest = serde_json::from_value(body).unwrap();
            let r = run_test(&req).unwrap();
            let titles: Vec<&str> = r.narrative.sections.iter().map(|s| s.title.as_str()).collect();
            assert_eq!(
                titles,
                [narrative::DATA_TITLE, narrative::CI_TITLE, narrative::TEST_TITLE, narrative::INTERPRETATION_TITLE],
                "{name}"
            );
            let test = r.narrative.section(narrative::TEST_TITLE).unwrap();
            assert_eq!(test.steps.len(), 4, "{name}");
            let text = format!("{}\n{}", r.narrative.to_tex(), r.narrative.to_plain());
            (format!("inference_{name}.txt"), text)
        })
        .collect()
}

pub fn fixture_input() -> RegressionInput {
    RegressionInput::new(vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 3.0, 5.0, 4.0])
}

pub fn fixture_document() -> (String, String) {
    let a = analyze(&fixture_input()).unwrap();
    assert_eq!(a.derivation.sections[0].steps.len(), 4);
    let text = format!("{}\n{}\n{}\n", a.derivation.to_tex(), a.derivation.to_plain(), a.interpretation);
    ("regression_fixture.txt".to_string(), text)
}

pub fn report_request() -> ReportRequest {
    let mut input = RegressionInput::new(
        vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0],
        vec![2.1, 3.9, 6.2, 7.8, 10.1, 12.2, 13.8, 16.1],
    );
    input.x_label = "hours studied".into();
    input.y_label = "score".into();
    ReportRequest { input, include_steps: true }
}

/// Panics unless two renderings are byte-identical.
pub fn report_document() -> (String, String) {
    let req = report_request();
    let html = regression_report(&req).unwrap();
    assert_eq!(html, regression_report(&req).unwrap(), "report is not deterministic");
    ("regression_report.html".to_string(), html)
}

pub fn all_documents() -> Vec<(String, String)> {
    let mut out = distribution_documents();
    out.extend(test_documents());
    out.push(fixture_document());
    out.push(report_document());
    out
}
