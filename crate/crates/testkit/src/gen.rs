//! Random inputs: distribution parameters keyed by tag, inference requests
//! as JSON bodies, and regression datasets.
//!
//! Ranges stay inside regions where the quadrature and brute-force oracles
//! are themselves reliable.

use std::collections::BTreeMap;

use rand::Rng;
use serde_json::{json, Value};

fn uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

/// Parameter map accepted by `DistributionSpec::from_params(tag, ..)`.
pub fn random_params<R: Rng>(tag: &str, rng: &mut R) -> BTreeMap<String, f64> {
    let pairs: Vec<(&str, f64)> = match tag {
        "beta" => vec![("alpha", uniform(rng, 0.5, 10.0)), ("beta", uniform(rng, 0.5, 10.0))],
        "binomial" => vec![("n", rng.random_range(1..=200) as f64), ("p", uniform(rng, 0.01, 0.99))],
        "cauchy" | "logistic" => {
            vec![("location", uniform(rng, -10.0, 10.0)), ("scale", uniform(rng, 0.1, 5.0))]
        }
        "chi_square" => vec![("df", uniform(rng, 0.5, 50.0))],
        "exponential" => vec![("rate", uniform(rng, 0.1, 10.0))],
        "fisher" => vec![("df1", uniform(rng, 1.0, 30.0)), ("df2", uniform(rng, 1.0, 50.0))],
        "gamma" => vec![("shape", uniform(rng, 0.5, 20.0)), ("rate", uniform(rng, 0.1, 5.0))],
        "geometric_failures" | "geometric_trials" => vec![("p", uniform(rng, 0.05, 0.95))],
        "hypergeometric" => {
            let n_pop = rng.random_range(2..=500u64);
            let k = rng.random_range(1..=n_pop);
            let draws = rng.random_range(1..=n_pop);
            vec![("population", n_pop as f64), ("successes", k as f64), ("draws", draws as f64)]
        }
        "log_normal" => vec![("meanlog", uniform(rng, -2.0, 2.0)), ("sdlog", uniform(rng, 0.1, 1.5))],
        "negative_binomial_size_prob" => {
            vec![("size", uniform(rng, 0.5, 20.0)), ("prob", uniform(rng, 0.05, 0.95))]
        }
        "negative_binomial_mean_size" => {
            vec![("mu", uniform(rng, 0.1, 50.0)), ("size", uniform(rng, 0.5, 20.0))]
        }
        "normal" => vec![("mu", uniform(rng, -10.0, 10.0)), ("var", uniform(rng, 0.01, 25.0))],
        "poisson" => vec![("lambda", uniform(rng, 0.1, 100.0))],
        "student_t" => vec![("df", uniform(rng, 0.5, 50.0))],
        "weibull" => vec![("shape", uniform(rng, 0.5, 5.0)), ("scale", uniform(rng, 0.1, 10.0))],
        other => panic!("no generator for `{other}`"),
    };
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub const SETTINGS: [&str; 7] = [
    "one_mean",
    "two_means_independent",
    "two_means_paired",
    "one_proportion",
    "two_proportions",
    "one_variance",
    "two_variances",
];

fn normal_sample<R: Rng>(rng: &mut R, n: usize, mu: f64, sd: f64) -> Vec<f64> {
    let law = rand_distr::Normal::new(mu, sd).unwrap();
    (0..n).map(|_| rng.sample(law)).collect()
}

fn bernoulli_sample<R: Rng>(rng: &mut R, n: usize, p: f64) -> Vec<f64> {
    (0..n).map(|_| if rng.random::<f64>() < p { 1.0 } else { 0.0 }).collect()
}

fn alternative<R: Rng>(rng: &mut R) -> &'static str {
    ["two_sided", "greater", "less"][rng.random_range(0..3)]
}

fn raw(data: Vec<f64>) -> Value {
    json!({ "type": "raw", "data": data })
}

/// A random inference request body `{setting, samples, config}` with raw
/// samples. Some requests are legitimately rejected by the engine (for
/// instance a proportion sample with no successes).
pub fn random_inference_request<R: Rng>(setting: &str, rng: &mut R) -> Value {
    let alpha = rng.random_range(0.01..0.2);
    let alt = alternative(rng);
    let mut config = json!({ "alpha": alpha, "alternative": alt });
    let samples = match setting {
        "one_mean" => {
            let n = rng.random_range(2..40);
            let (mu, sd) = (rng.random_range(-20.0..20.0), rng.random_range(0.1..10.0));
            config["h0"] = json!(mu + rng.random_range(-1.0..1.0) * sd);
            if rng.random_bool(0.3) {
                config["sigma"] = json!(sd * rng.random_range(0.5..2.0));
            }
            vec![raw(normal_sample(rng, n, mu, sd))]
        }
        "two_means_independent" => {
            let (n1, n2) = (rng.random_range(2..40), rng.random_range(2..40));
            let mu = rng.random_range(-20.0..20.0);
            let (sd1, sd2) = (rng.random_range(0.1..10.0), rng.random_range(0.1..10.0));
            config["h0"] = json!(rng.random_range(-1.0..1.0) * (sd1 + sd2));
            match rng.random_range(0..3) {
                0 => config["equal_variances"] = json!(true),
                1 => {
                    config["sigma"] = json!(sd1);
                    config["sigma2"] = json!(sd2);
                }
                _ => {}
            }
            let shift = rng.random_range(-1.0..1.0) * sd1;
            vec![raw(normal_sample(rng, n1, mu + shift, sd1)), raw(normal_sample(rng, n2, mu, sd2))]
        }
        "two_means_paired" => {
            let n = rng.random_range(2..40);
            let mu = rng.random_range(-20.0..20.0);
            let sd = rng.random_range(0.1..10.0);
            let x1 = normal_sample(rng, n, mu, sd);
            let noise = rng.random_range(0.1..3.0);
            let shift = rng.random_range(-1.0..1.0) * noise;
            let x2 = x1.iter().map(|v| v + shift + noise * rng.random_range(-1.0..1.0)).collect();
            config["h0"] = json!(rng.random_range(-1.0..1.0) * noise);
            if rng.random_bool(0.3) {
                config["sigma"] = json!(noise);
            }
            vec![raw(x1), raw(x2)]
        }
        "one_proportion" => {
            let n = rng.random_range(5..300);
            let p: f64 = rng.random_range(0.05..0.95);
            config["h0"] = json!((p + rng.random_range(-0.1..0.1)).clamp(0.01, 0.99));
            vec![raw(bernoulli_sample(rng, n, p))]
        }
        "two_proportions" => {
            let (n1, n2) = (rng.random_range(5..300), rng.random_range(5..300));
            let p: f64 = rng.random_range(0.05..0.95);
            let p1 = (p + rng.random_range(-0.1..0.1)).clamp(0.02, 0.98);
            if rng.random_bool(0.5) {
                config["pooled_se"] = json!(true);
            } else {
                config["h0"] = json!(rng.random_range(-0.1..0.1));
            }
            vec![raw(bernoulli_sample(rng, n1, p1)), raw(bernoulli_sample(rng, n2, p))]
        }
        "one_variance" => {
            let n = rng.random_range(2..40);
            let sd = rng.random_range(0.1..10.0);
            config["h0"] = json!(sd * sd * rng.random_range(0.3..3.0));
            let mu = rng.random_range(-5.0..5.0);
            vec![raw(normal_sample(rng, n, mu, sd))]
        }
        "two_variances" => {
            let (n1, n2) = (rng.random_range(2..40), rng.random_range(2..40));
            let (sd1, sd2) = (rng.random_range(0.1..10.0), rng.random_range(0.1..10.0));
            config["h0"] = json!(rng.random_range(0.3..3.0));
            vec![raw(normal_sample(rng, n1, 0.0, sd1)), raw(normal_sample(rng, n2, 1.0, sd2))]
        }
        other => panic!("unknown setting `{other}`"),
    };
    json!({ "setting": setting, "samples": samples, "config": config })
}

/// Small regression dataset: n ∈ [3, 50], a noisy line through random
/// coefficients with x drawn from a random interval.
pub fn random_regression_data<R: Rng>(rng: &mut R) -> (Vec<f64>, Vec<f64>) {
    let n = rng.random_range(3..=50);
    let (b0, b1) = (rng.random_range(-50.0..50.0), rng.random_range(-5.0..5.0));
    let lo = rng.random_range(-100.0..100.0);
    let width = rng.random_range(0.5..50.0);
    let noise = rng.random_range(0.01..10.0);
    loop {
        let x: Vec<f64> = (0..n).map(|_| lo + width * rng.random::<f64>()).collect();
        if x.iter().any(|&v| v != x[0]) {
            let law = rand_distr::Normal::new(0.0, noise).unwrap();
            let y = x.iter().map(|&v| b0 + b1 * v + rng.sample(law)).collect();
            return (x, y);
        }
    }
}
