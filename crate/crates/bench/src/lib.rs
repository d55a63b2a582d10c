//! Deterministic inputs shared by the benchmarks.

use std::collections::BTreeMap;

use statlab_core::distributions::{catalog, DistributionSpec};
use statlab_core::inference::InferenceRequest;
use statlab_core::regression::RegressionInput;

/// One moderate parameter set per family, keyed by tag.
pub fn specs() -> Vec<DistributionSpec> {
    catalog()
        .into_iter()
        .map(|info| {
            let params: BTreeMap<String, f64> = info
                .params
                .iter()
                .map(|p| {
                    let v = match (info.tag, p.name) {
                        ("hypergeometric", "population") => 500.0,
                        ("hypergeometric", _) => 40.0,
                        ("binomial", "n") => 60.0,
                        (_, "p") | (_, "prob") => 0.3,
                        (_, "location") | (_, "mu") | (_, "meanlog") => 1.0,
                        _ => 4.0,
                    };
                    (p.name.to_string(), v)
                })
                .collect();
            DistributionSpec::from_params(info.tag, &params).unwrap()
        })
        .collect()
}

/// Evenly spread, mildly wiggly observations.
pub fn sample(n: usize, centre: f64) -> Vec<f64> {
    (0..n).map(|i| centre + ((i * 7919) % 101) as f64 / 25.0 - 2.0).collect()
}

/// One request per setting with `n` raw observations per sample (or
/// summaries for the proportion settings).
pub fn inference_requests(n: usize) -> Vec<InferenceRequest> {
    let raw = |c: f64| serde_json::json!({"type": "raw", "data": sample(n, c)});
    let prop = |k: usize| serde_json::json!({"type": "proportion_summary", "n": n, "successes": k});
    [
        serde_json::json!({"setting": "one_mean", "samples": [raw(5.0)], "config": {"h0": 5.0}}),
        serde_json::json!({"setting": "two_means_independent", "samples": [raw(5.0), raw(5.5)]}),
        serde_json::json!({"setting": "two_means_paired", "samples": [raw(5.0), raw(5.2)]}),
        serde_json::json!({"setting": "one_proportion", "samples": [prop(n / 3)], "config": {"h0": 0.3}}),
        serde_json::json!({"setting": "two_proportions", "samples": [prop(n / 3), prop(n / 4)]}),
        serde_json::json!({"setting": "one_variance", "samples": [raw(5.0)], "config": {"h0": 1.0}}),
        serde_json::json!({"setting": "two_variances", "samples": [raw(5.0), raw(9.0)]}),
    ]
    .into_iter()
    .map(|v| serde_json::from_value(v).unwrap())
    .collect()
}

/// A noisy line with `n` points.
pub fn regression_input(n: usize) -> RegressionInput {
    let x: Vec<f64> = (0..n).map(|i| i as f64 * 0.5).collect();
    let y = x.iter().zip(sample(n, 0.0)).map(|(a, e)| 3.0 + 1.7 * a + e).collect();
    RegressionInput::new(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_accepted() {
        assert_eq!(specs().len(), 18);
        for req in inference_requests(30) {
            statlab_core::inference::run_test(&req).unwrap();
        }
        statlab_core::regression::analyze(&regression_input(50)).unwrap();
    }
}
