//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Pass criterion ids (`P4`) to run a subset.

#[path = "../../core/tests/common/cases.rs"]
mod cases;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use statlab_core::distributions::{catalog, DistributionSpec, ProbabilityQuery, TAGS};
use statlab_core::inference::{
    in_rejection_region, run_test, Decision, InferenceError, InferenceRequest, InferenceResult, SampleInput,
    SampleKind, Setting, TestConfig,
};
use statlab_core::narrative::report::extract_payload;
use statlab_core::narrative::{regression_report, ReportRequest, DATA_TITLE};
use statlab_core::regression::{analyze, diagnostics, fit, RegressionInput};
use statlab_service::api;
use statlab_service::error::CODES;
use statlab_service::{router, ApiError, Config};
use statlab_testkit::gen::{random_inference_request, random_params, random_regression_data, SETTINGS};
use statlab_testkit::oracle;
use statlab_testkit::quad::integrate;
use tower::ServiceExt;

type Outcome = Result<String, String>;
type Check = (&'static str, &'static str, fn() -> Outcome, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

fn rng(seed: u64) -> rand::rngs::StdRng {
    rand::rngs::StdRng::seed_from_u64(seed)
}

fn is_discrete(tag: &str) -> bool {
    catalog().iter().any(|f| f.tag == tag && f.discrete)
}

fn spec(tag: &str, params: &BTreeMap<String, f64>) -> DistributionSpec {
    DistributionSpec::from_params(tag, params).unwrap()
}

fn p1_worked_normal() -> Outcome {
    let s = spec("normal", &BTreeMap::from([("mu".into(), 0.0), ("var".into(), 1.0)]));
    let q = ProbabilityQuery::LowerTail { x: 1.0 };
    let r = s.probability(&q).unwrap();
    ensure!(r.display_value == "0.8413", "displayed {}", r.display_value);
    let want = 0.5 * (1.0 + oracle::erf_taylor(std::f64::consts::FRAC_1_SQRT_2, 60));
    ensure!((r.value - want).abs() < 1e-15, "value {} vs series {want}", r.value);
    let mut times: Vec<Duration> = (0..200)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(s.probability(std::hint::black_box(&q)).unwrap());
            t.elapsed()
        })
        .collect();
    times.sort();
    let median = times[times.len() / 2];
    ensure!(median < Duration::from_millis(1), "median latency {median:?}");
    Ok(format!("0.8413, median {median:?} per request"))
}

/// Oracle pmf table on the integers `lo..`, long enough that the
/// remaining mass is negligible.
fn oracle_table(tag: &str, p: &BTreeMap<String, f64>) -> (u64, Vec<f64>) {
    let tail = |mean: f64, var: f64| (mean + 40.0 * var.sqrt() + 60.0) as u64;
    match tag {
        "binomial" => (0, oracle::binomial_pmf_table(p["n"] as u64, p["p"])),
        "poisson" => (0, oracle::poisson_pmf_table(p["lambda"], tail(p["lambda"], p["lambda"]))),
        "geometric_failures" | "geometric_trials" => {
            let q = p["p"];
            let kmax = (40.0 * 10f64.ln() / -(1.0 - q).ln()) as u64 + 10;
            (u64::from(tag == "geometric_trials"), oracle::geometric_pmf_table(q, kmax))
        }
        "negative_binomial_size_prob" => {
            let (r, q) = (p["size"], p["prob"]);
            let kmax = tail(r * (1.0 - q) / q, r * (1.0 - q) / (q * q));
            (0, oracle::neg_binomial_pmf_table(r, q, kmax))
        }
        "negative_binomial_mean_size" => {
            let (mu, r) = (p["mu"], p["size"]);
            let kmax = tail(mu, mu + mu * mu / r);
            (0, oracle::neg_binomial_pmf_table(r, r / (r + mu), kmax))
        }
        "hypergeometric" => {
            oracle::hypergeometric_pmf_table(p["population"] as u64, p["successes"] as u64, p["draws"] as u64)
        }
        other => panic!("no oracle for {other}"),
    }
}

fn p2_discrete_cdf() -> Outcome {
    let mut rng = rng(2);
    let mut points = 0usize;
    let mut worst = 0.0f64;
    let families: Vec<&str> = TAGS.into_iter().filter(|t| is_discrete(t)).collect();
    for &tag in &families {
        for _ in 0..50 {
            let params = random_params(tag, &mut rng);
            let s = spec(tag, &params);
            let (lo, table) = oracle_table(tag, &params);
            let below = s.cdf(lo as f64 - 0.5).unwrap();
            ensure!(below == 0.0, "{tag} {params:?}: cdf below support {below}");
            let mut cum = 0.0;
            for (i, pk) in table.iter().enumerate() {
                cum += pk;
                let k = (lo + i as u64) as f64;
                for x in [k, k + 0.5] {
                    let err = (s.cdf(x).unwrap() - cum).abs();
                    worst = worst.max(err);
                    ensure!(err <= 1e-10, "{tag} {params:?}: cdf({x}) off by {err:e}");
                    points += 1;
                }
            }
        }
    }
    Ok(format!("{} families x 50 parameter sets, {points} points, max error {worst:.1e}", families.len()))
}

fn p3_continuous_cdf() -> Outcome {
    let mut rng = rng(3);
    let (mut worst_area, mut worst_round) = (0.0f64, 0.0f64);
    let families: Vec<&str> = TAGS.into_iter().filter(|t| !is_discrete(t)).collect();
    for &tag in &families {
        for _ in 0..50 {
            let params = random_params(tag, &mut rng);
            let s = spec(tag, &params);
            for _ in 0..4 {
                let (u, v): (f64, f64) = (rng.random_range(0.001..0.999), rng.random_range(0.001..0.999));
                let a = s.quantile(u.min(v)).unwrap();
                let b = s.quantile(u.max(v)).unwrap();
                let area = integrate(|t| s.pdf_or_pmf(t).unwrap(), a, b, 1e-12);
                let err = (s.cdf(b).unwrap() - s.cdf(a).unwrap() - area).abs();
                worst_area = worst_area.max(err);
                ensure!(err <= 1e-8, "{tag} {params:?}: [{a}, {b}] off by {err:e}");
            }
            for _ in 0..10 {
                let p = rng.random_range(1e-6..1.0 - 1e-6);
                let err = (s.cdf(s.quantile(p).unwrap()).unwrap() - p).abs();
                worst_round = worst_round.max(err);
                ensure!(err <= 1e-9, "{tag} {params:?}: round trip at p={p} off by {err:e}");
            }
        }
    }
    Ok(format!(
        "{} families x 50 parameter sets, max interval error {worst_area:.1e}, max round-trip error {worst_round:.1e}",
        families.len()
    ))
}

/// Whether the fourth moment is finite, which the standard error of the
/// sample variance needs.
fn fourth_moment_finite(tag: &str, p: &BTreeMap<String, f64>) -> bool {
    match tag {
        "cauchy" => false,
        "student_t" => p["df"] > 4.0,
        "fisher" => p["df2"] > 8.0,
        _ => true,
    }
}

fn p4_moments() -> Outcome {
    const DRAWS: usize = 1_000_000;
    let mut rng = rng(4);
    let mut checked = 0;
    let mut worst = 0.0f64;
    for tag in TAGS {
        if tag == "cauchy" {
            continue;
        }
        let params = loop {
            let p = random_params(tag, &mut rng);
            if fourth_moment_finite(tag, &p) {
                break p;
            }
        };
        let s = spec(tag, &params);
        let m = s.moments();
        let (Some(mean), Some(var)) = (m.mean, m.variance) else {
            return Err(format!("{tag} {params:?}: moments undefined"));
        };
        let xs: Vec<f64> = (0..DRAWS)
            .map(|_| {
                let u = loop {
                    let u: f64 = rng.random();
                    if u > 0.0 {
                        break u;
                    }
                };
                s.quantile(u).unwrap()
            })
            .collect();
        if var == 0.0 {
            ensure!(xs.iter().all(|&x| x == mean), "{tag} {params:?}: point mass at {mean} drew other values");
            checked += 1;
            continue;
        }
        let n = DRAWS as f64;
        let xbar = xs.iter().sum::<f64>() / n;
        let (m2, m4) = xs.iter().fold((0.0, 0.0), |(a, b), x| {
            let d = (x - xbar) * (x - xbar);
            (a + d, b + d * d)
        });
        let (s2, m4) = (m2 / (n - 1.0), m4 / n);
        let se_mean = (s2 / n).sqrt();
        let se_var = ((m4 - s2 * s2) / n).sqrt();
        let (z_mean, z_var) = ((xbar - mean) / se_mean, (s2 - var) / se_var);
        worst = worst.max(z_mean.abs()).max(z_var.abs());
        ensure!(z_mean.abs() <= 5.0, "{tag} {params:?}: sample mean {xbar} vs {mean} ({z_mean:.2} SE)");
        ensure!(z_var.abs() <= 5.0, "{tag} {params:?}: sample variance {s2} vs {var} ({z_var:.2} SE)");
        checked += 1;
    }
    Ok(format!("{checked} families, 10^6 draws each, worst deviation {worst:.2} SE"))
}

fn random_results(total: usize, seed: u64) -> Vec<(InferenceRequest, InferenceResult)> {
    let mut rng = rng(seed);
    let per_setting = total.div_ceil(SETTINGS.len());
    let mut out = Vec::new();
    for setting in SETTINGS {
        let mut done = 0;
        while done < per_setting {
            let req: InferenceRequest = serde_json::from_value(random_inference_request(setting, &mut rng)).unwrap();
            match run_test(&req) {
                Ok(r) => {
                    out.push((req, r));
                    done += 1;
                }
                Err(InferenceError::DegenerateVariance(_)) => {}
                Err(e) => panic!("{setting}: {e} for {req:?}"),
            }
        }
    }
    out
}

fn summarized(req: &InferenceRequest, r: &InferenceResult) -> InferenceRequest {
    let samples = r
        .summary_stats
        .iter()
        .map(|s| match req.setting.kind() {
            SampleKind::Mean | SampleKind::Variance => {
                SampleInput::MeanSummary { n: s.n, mean: s.mean.unwrap(), var: s.var, sd: None }
            }
            SampleKind::Proportion => SampleInput::ProportionSummary { n: s.n, successes: s.successes.unwrap() },
        })
        .collect();
    InferenceRequest { setting: req.setting, samples, config: req.config }
}

fn without_observations(r: &InferenceResult) -> Value {
    let mut r = r.clone();
    r.observations.clear();
    r.narrative.sections.retain(|s| s.title != DATA_TITLE);
    serde_json::to_value(r).unwrap()
}

fn p5_decisions() -> Outcome {
    let results = random_results(10_000, 5);
    let mut summaries = 0;
    for (req, r) in &results {
        let by_p = r.p_value < r.alpha;
        let by_region = in_rejection_region(r.statistic, &r.critical_values, r.alternative);
        let by_decision = r.decision == Decision::Reject;
        ensure!(
            by_p == by_region && by_region == by_decision,
            "{:?}: p={} statistic={} critical={:?} decision={:?}",
            req.setting,
            r.p_value,
            r.statistic,
            r.critical_values,
            r.decision
        );
        if req.setting == Setting::TwoMeansPaired {
            let (SampleInput::Raw { data: a }, SampleInput::Raw { data: b }) = (&req.samples[0], &req.samples[1])
            else {
                unreachable!()
            };
            let d = a.iter().zip(b).map(|(u, v)| u - v).collect();
            let one = run_test(&InferenceRequest {
                setting: Setting::OneMean,
                samples: vec![SampleInput::Raw { data: d }],
                config: TestConfig { h0: Some(r.h0), ..req.config },
            })
            .unwrap();
            ensure!(
                (one.statistic, one.p_value, one.ci) == (r.statistic, r.p_value, r.ci),
                "paired test differs from the one-sample test on differences"
            );
        } else {
            let s = run_test(&summarized(req, r)).unwrap();
            ensure!(
                without_observations(&s) == without_observations(r),
                "{:?}: raw and summary inputs disagree",
                req.setting
            );
        }
        summaries += 1;
    }
    Ok(format!(
        "{} requests, p-value/region/decision agree; {summaries} raw-vs-summary comparisons exact",
        results.len()
    ))
}

fn p6_duality() -> Outcome {
    let mut rng = rng(6);
    for setting in ["one_mean", "one_proportion", "one_variance", "two_variances"] {
        let mut checked = 0;
        while checked < 2000 {
            let mut body = random_inference_request(setting, &mut rng);
            body["config"]["alternative"] = "two_sided".into();
            let req: InferenceRequest = serde_json::from_value(body).unwrap();
            let Ok(r) = run_test(&req) else { continue };
            let outside = r.h0 < r.ci.lower || r.h0 > r.ci.upper;
            ensure!(
                outside == (r.decision == Decision::Reject),
                "{setting}: h0={} ci=[{}, {}] decision={:?}",
                r.h0,
                r.ci.lower,
                r.ci.upper,
                r.decision
            );
            checked += 1;
        }
    }
    Ok("4 settings x 2000 two-sided requests, interval excludes h0 exactly when rejected".into())
}

/// Least-squares line by bisection on the profiled derivative of the
/// residual sum of squares. Returns (intercept, slope).
fn bisection_line(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let intercept = |b1: f64| x.iter().zip(y).map(|(a, b)| b - b1 * a).sum::<f64>() / n;
    let gradient = |b1: f64| {
        let b0 = intercept(b1);
        x.iter().zip(y).map(|(a, b)| a * (b - b0 - b1 * a)).sum::<f64>()
    };
    let (mut lo, mut hi) = (-1e6, 1e6);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gradient(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b1 = 0.5 * (lo + hi);
    (intercept(b1), b1)
}

fn magnitude(v: &[f64]) -> f64 {
    v.iter().fold(1.0f64, |m, a| m.max(a.abs()))
}

fn p7_regression() -> Outcome {
    let mut rng = rng(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (x, y) = random_regression_data(&mut rng);
        let input = RegressionInput::new(x.clone(), y.clone());
        let f = fit(&input).unwrap();
        for (o0, o1) in [oracle::normal_equations(&x, &y), bisection_line(&x, &y)] {
            let e1 = (f.beta1_hat - o1).abs() / o1.abs().max(1.0);
            let e0 = (f.beta0_hat - o0).abs() / o0.abs().max(1.0);
            worst = worst.max(e0).max(e1);
            ensure!(e0 <= 1e-8 && e1 <= 1e-8, "coefficients ({}, {}) vs oracle ({o0}, {o1})", f.beta0_hat, f.beta1_hat);
        }

        let c: f64 = rng.random_range(-1e3..1e3);
        let g = fit(&RegressionInput::new(x.clone(), y.iter().map(|v| v + c).collect())).unwrap();
        let ys = magnitude(&y) + c.abs();
        ensure!((g.beta0_hat - f.beta0_hat - c).abs() <= 1e-10 * ys, "shifting y by {c} moved the intercept wrongly");
        ensure!(
            (g.beta1_hat - f.beta1_hat).abs() <= 1e-12 * ys / f.sxx.sqrt().max(1e-300),
            "shifting y changed the slope"
        );

        let k: f64 = rng.random_range(0.01..100.0);
        let g = fit(&RegressionInput::new(x.iter().map(|v| v * k).collect(), y.clone())).unwrap();
        let want = f.beta1_hat / k;
        ensure!(
            (g.beta1_hat - want).abs() <= 1e-10 * want.abs().max(1e-300) + 1e-12,
            "scaling x by {k}: slope {} vs {want}",
            g.beta1_hat
        );

        let h: f64 = diagnostics(&input, &f).unwrap().leverage.iter().sum();
        ensure!((h - 2.0).abs() <= 1e-9, "leverages sum to {h}");
    }
    Ok(format!(
        "100 datasets, max relative coefficient error {worst:.1e}, shift/scale invariance and leverage trace hold"
    ))
}

fn p8_fixture() -> Outcome {
    let (x, y) = ([1.0, 2.0, 3.0, 4.0], [2.0, 3.0, 5.0, 4.0]);
    for (name, (o0, o1)) in
        [("normal equations", oracle::normal_equations(&x, &y)), ("bisection", bisection_line(&x, &y))]
    {
        ensure!((o1 - 0.8).abs() < 1e-12 && (o0 - 1.5).abs() < 1e-12, "{name} oracle gives ({o0}, {o1})");
    }
    let a = analyze(&cases::fixture_input()).unwrap();
    ensure!(
        (a.fit.beta1_hat - 0.8).abs() < 1e-15 && (a.fit.beta0_hat - 1.5).abs() < 1e-15,
        "engine gives ({}, {})",
        a.fit.beta0_hat,
        a.fit.beta1_hat
    );
    let r = api::regression(cases::fixture_input().into()).map_err(|e| e.to_string())?;
    ensure!(
        r.display.beta1_hat == "0.8000" && r.display.beta0_hat == "1.5000",
        "displayed {} and {}",
        r.display.beta1_hat,
        r.display.beta0_hat
    );
    let steps = a.derivation.sections[0].steps.len();
    ensure!(steps == 4, "derivation has {steps} steps");
    let (name, text) = cases::fixture_document();
    ensure!(text == read_golden(&name)?, "{name} differs from the golden file");
    Ok("slope 0.8000, intercept 1.5000, both oracles agree, four-step derivation matches golden".into())
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden")
}

fn read_golden(name: &str) -> Result<String, String> {
    std::fs::read_to_string(golden_dir().join(name)).map_err(|e| format!("{name}: {e}"))
}

fn p9_documents() -> Outcome {
    let docs = std::panic::catch_unwind(cases::all_documents)
        .map_err(|_| "a document failed its structure check".to_string())?;
    ensure!(docs.len() == TAGS.len() + SETTINGS.len() + 2, "{} documents", docs.len());
    for (name, text) in &docs {
        ensure!(*text == read_golden(name)?, "{name} differs from the golden file");
    }
    let req = cases::report_request();
    let html = regression_report(&req).unwrap();
    statlab_testkit::html::check_well_formed(&html)?;
    let payload: Value =
        serde_json::from_str(extract_payload(&html).ok_or("no replay payload")?).map_err(|e| e.to_string())?;
    let replayed: RegressionInput = serde_json::from_value(payload["input"].clone()).map_err(|e| e.to_string())?;
    ensure!(replayed == req.input, "replay payload does not reproduce the input");
    let bare = regression_report(&ReportRequest { include_steps: false, ..req.clone() }).unwrap();
    ensure!(
        html.contains("id=\"derivation\"") && !bare.contains("id=\"derivation\""),
        "include_steps does not control the derivation section"
    );
    Ok(format!("{} golden documents match, report is deterministic, well-formed and replayable", docs.len()))
}

struct Reply {
    status: StatusCode,
    content_type: String,
    body: Vec<u8>,
}

impl Reply {
    fn json(&self) -> Value {
        serde_json::from_slice(&self.body).unwrap_or(Value::Null)
    }
}

async fn send(app: &Router, method: Method, uri: &str, body: Option<Vec<u8>>) -> Reply {
    let mut req = Request::builder().method(method).uri(uri);
    if body.is_some() {
        req = req.header(header::CONTENT_TYPE, "application/json");
    }
    let res = app.clone().oneshot(req.body(body.map_or_else(Body::empty, Body::from)).unwrap()).await.unwrap();
    let status = res.status();
    let content_type =
        res.headers().get(header::CONTENT_TYPE).and_then(|v| v.to_str().ok()).unwrap_or_default().to_string();
    let body = res.into_body().collect().await.unwrap().to_bytes().to_vec();
    Reply { status, content_type, body }
}

/// CLI arguments paired with the equivalent HTTP request.
fn parity_cases() -> Vec<(Vec<&'static str>, String, Value)> {
    let prob = |args: &[&'static str], distribution: &str, params: Value, query: Value| {
        let mut argv = vec!["prob", args[0]];
        argv.extend_from_slice(&args[1..]);
        (
            argv,
            "/api/v1/probability".to_string(),
            json!({"distribution": distribution, "params": params, "query": query}),
        )
    };
    let test = |setting: &'static str, args: &[&'static str], body: Value| {
        let mut argv = vec!["test", setting];
        argv.extend_from_slice(args);
        (argv, format!("/api/v1/inference/{setting}"), body)
    };
    let regress = |args: &[&'static str], body: Value| {
        let mut argv = vec!["regress"];
        argv.extend_from_slice(args);
        (argv, "/api/v1/regression".to_string(), body)
    };
    vec![
        prob(
            &["normal", "--param", "mu=0", "--param", "var=1", "--lower", "1"],
            "normal",
            json!({"mu": 0, "var": 1}),
            json!({"type": "lower_tail", "x": 1}),
        ),
        prob(
            &["binomial", "--param", "n=10", "--param", "p=0.5", "--between", "3", "3"],
            "binomial",
            json!({"n": 10, "p": 0.5}),
            json!({"type": "interval", "a": 3, "b": 3}),
        ),
        prob(
            &["poisson", "--param", "lambda=4", "--upper", "6"],
            "poisson",
            json!({"lambda": 4}),
            json!({"type": "upper_tail", "x": 6}),
        ),
        prob(
            &["student_t", "--param", "df=7", "--between", "-1", "2"],
            "student_t",
            json!({"df": 7}),
            json!({"type": "interval", "a": -1, "b": 2}),
        ),
        prob(
            &["beta", "--param", "alpha=2", "--param", "beta=5", "--lower", "0.3"],
            "beta",
            json!({"alpha": 2, "beta": 5}),
            json!({"type": "lower_tail", "x": 0.3}),
        ),
        prob(
            &[
                "hypergeometric",
                "--param",
                "population=50",
                "--param",
                "successes=12",
                "--param",
                "draws=10",
                "--upper",
                "3",
            ],
            "hypergeometric",
            json!({"population": 50, "successes": 12, "draws": 10}),
            json!({"type": "upper_tail", "x": 3}),
        ),
        prob(
            &["weibull", "--param", "shape=1.5", "--param", "scale=2", "--between", "0.5", "3"],
            "weibull",
            json!({"shape": 1.5, "scale": 2}),
            json!({"type": "interval", "a": 0.5, "b": 3}),
        ),
        prob(
            &["negative_binomial_mean_size", "--param", "mu=3", "--param", "size=2", "--lower", "4"],
            "negative_binomial_mean_size",
            json!({"mu": 3, "size": 2}),
            json!({"type": "lower_tail", "x": 4}),
        ),
        test(
            "one_mean",
            &["--data", "5.1,4.9,5.6,5.8,6.0", "--h0", "5"],
            json!({"samples": [{"type": "raw", "data": [5.1, 4.9, 5.6, 5.8, 6.0]}], "config": {"h0": 5}}),
        ),
        test(
            "two_means_independent",
            &[
                "--n1", "12", "--mean1", "24.9", "--sd1", "3.2", "--n2", "15", "--mean2", "21.7", "--sd2", "4.1",
                "--alt", "greater",
            ],
            json!({"samples": [{"type": "mean_summary", "n": 12, "mean": 24.9, "sd": 3.2}, {"type": "mean_summary", "n": 15, "mean": 21.7, "sd": 4.1}], "config": {"alternative": "greater"}}),
        ),
        test(
            "two_means_paired",
            &["--data", "12,14.5,11.2,13.8", "--data2", "11.1,13.9,11.5,12.2", "--alpha", "0.1"],
            json!({"samples": [{"type": "raw", "data": [12, 14.5, 11.2, 13.8]}, {"type": "raw", "data": [11.1, 13.9, 11.5, 12.2]}], "config": {"alpha": 0.1}}),
        ),
        test(
            "one_proportion",
            &["--n", "120", "--successes", "71", "--h0", "0.5"],
            json!({"samples": [{"type": "proportion_summary", "n": 120, "successes": 71}], "config": {"h0": 0.5}}),
        ),
        test(
            "two_proportions",
            &["--n1", "200", "--successes1", "64", "--n2", "180", "--successes2", "41", "--pooled", "--alpha", "0.01"],
            json!({"samples": [{"type": "proportion_summary", "n": 200, "successes": 64}, {"type": "proportion_summary", "n": 180, "successes": 41}], "config": {"pooled_se": true, "alpha": 0.01}}),
        ),
        test(
            "one_variance",
            &["--n", "25", "--var", "6.3", "--h0", "4", "--alt", "greater"],
            json!({"samples": [{"type": "variance_summary", "n": 25, "var": 6.3}], "config": {"h0": 4, "alternative": "greater"}}),
        ),
        test(
            "two_variances",
            &["--data", "1,3,2,5,4,6", "--data2", "2,2.5,3,2.8", "--alt", "less"],
            json!({"samples": [{"type": "raw", "data": [1, 3, 2, 5, 4, 6]}, {"type": "raw", "data": [2, 2.5, 3, 2.8]}], "config": {"alternative": "less"}}),
        ),
        regress(&["--x", "1,2,3,4", "--y", "2,3,5,4"], json!({"x": [1, 2, 3, 4], "y": [2, 3, 5, 4]})),
        regress(&["--x", "1,2,3", "--y", "2,4,6"], json!({"x": [1, 2, 3], "y": [2, 4, 6]})),
        regress(
            &["--x", "1,2,3,4,5,6", "--y", "1.2,1.9,3.2,3.8,5.1,6.3", "--labels", "dose,response", "--level", "0.9"],
            json!({"x": "1,2,3,4,5,6", "y": [1.2, 1.9, 3.2, 3.8, 5.1, 6.3], "x_label": "dose", "y_label": "response", "confidence_level": 0.9}),
        ),
        regress(
            &["--x", "-3,-1,0,2,5", "--y", "4,2,1,1,-2", "--no-band"],
            json!({"x": [-3, -1, 0, 2, 5], "y": "4;2;1;1;-2", "include_band": false}),
        ),
        regress(
            &["--x", "10,20,30,40,50,60,70", "--y", "3.1,2.9,3.3,3.0,3.2,3.1,2.8", "--level", "0.99"],
            json!({"x": [10, 20, 30, 40, 50, 60, 70], "y": [3.1, 2.9, 3.3, 3.0, 3.2, 3.1, 2.8], "confidence_level": 0.99}),
        ),
    ]
}

async fn api_contract() -> Outcome {
    let app = router(&Config::default());

    let r = send(&app, Method::GET, "/api/v1/distributions", None).await;
    ensure!(r.status == StatusCode::OK, "distributions: {}", r.status);
    ensure!(r.json() == serde_json::to_value(api::distributions()).unwrap(), "distribution catalog differs");
    let r = send(&app, Method::GET, "/api/v1/inference/settings", None).await;
    ensure!(
        r.status == StatusCode::OK && r.json() == serde_json::to_value(api::settings()).unwrap(),
        "settings catalog"
    );
    let r = send(&app, Method::GET, "/api/v1/health", None).await;
    let health: api::Health = serde_json::from_slice(&r.body).map_err(|e| format!("health: {e}"))?;
    ensure!(r.status == StatusCode::OK && health == api::health(), "health");

    let cases = parity_cases();
    for (_, uri, body) in &cases {
        let r = send(&app, Method::POST, uri, Some(serde_json::to_vec(body).unwrap())).await;
        ensure!(r.status == StatusCode::OK, "{uri}: {} {}", r.status, String::from_utf8_lossy(&r.body));
        ensure!(r.content_type.starts_with("application/json"), "{uri}: content type {}", r.content_type);
        let v = r.json();
        let direct = if uri.ends_with("probability") {
            let typed: api::ProbabilityResponse = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
            ensure!(serde_json::to_value(&typed).unwrap() == v, "{uri}: response does not round-trip");
            serde_json::to_value(api::probability(serde_json::from_value(body.clone()).unwrap()).unwrap()).unwrap()
        } else if uri.ends_with("regression") {
            let typed: api::RegressionResponse = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
            ensure!(serde_json::to_value(&typed).unwrap() == v, "{uri}: response does not round-trip");
            serde_json::to_value(api::regression(serde_json::from_value(body.clone()).unwrap()).unwrap()).unwrap()
        } else {
            let typed: api::InferenceResponse = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
            ensure!(serde_json::to_value(&typed).unwrap() == v, "{uri}: response does not round-trip");
            let setting = uri.rsplit('/').next().unwrap();
            serde_json::to_value(api::inference(setting, serde_json::from_value(body.clone()).unwrap()).unwrap())
                .unwrap()
        };
        ensure!(v == direct, "{uri}: HTTP and library responses differ");
    }
    let report_body = json!({"input": {"x": [1, 2, 3, 4, 5], "y": [2.2, 2.9, 4.1, 5.2, 5.8]}});
    let r =
        send(&app, Method::POST, "/api/v1/regression/report", Some(serde_json::to_vec(&report_body).unwrap())).await;
    ensure!(
        r.status == StatusCode::OK && r.content_type.starts_with("text/html"),
        "report: {} {}",
        r.status,
        r.content_type
    );
    let html = String::from_utf8(r.body).map_err(|e| e.to_string())?;
    ensure!(
        html == api::report(serde_json::from_value(report_body).unwrap()).unwrap(),
        "report differs from the library"
    );

    let mut rng = rng(10);
    let seeds: Vec<(String, Value)> = cases.iter().map(|(_, u, b)| (u.clone(), b.clone())).collect();
    let mut statuses = BTreeMap::new();
    for i in 0..10_000 {
        let (uri, seed) = &seeds[i % seeds.len()];
        let body = statlab_testkit::fuzz::fuzz_body(seed, &mut rng);
        let r = send(&app, Method::POST, uri, Some(body.clone())).await;
        *statuses.entry(r.status.as_u16()).or_insert(0) += 1;
        match r.status {
            StatusCode::OK => {}
            StatusCode::UNPROCESSABLE_ENTITY | StatusCode::NOT_FOUND => {
                let e: ApiError = serde_json::from_slice(&r.body).map_err(|e| format!("error body: {e}"))?;
                ensure!(CODES.contains(&e.code.as_str()) && !e.message.is_empty(), "undocumented error {e:?}");
            }
            other => return Err(format!("{other} for {}", String::from_utf8_lossy(&body))),
        }
    }

    for (argv, uri, _) in &cases {
        let mut full = vec!["statlab", "--mode", "json"];
        full.extend(argv.iter().copied());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = statlab_cli::run(full, &mut out, &mut err);
        ensure!(code == statlab_cli::EXIT_OK, "{argv:?}: exit {code}: {}", String::from_utf8_lossy(&err));
        let cli: Value = serde_json::from_slice(&out).map_err(|e| format!("{argv:?}: {e}"))?;
        let body = &cases.iter().find(|c| &c.0 == argv).unwrap().2;
        let http = send(&app, Method::POST, uri, Some(serde_json::to_vec(body).unwrap())).await.json();
        ensure!(cli == http, "{argv:?}: CLI and HTTP output differ");
    }
    Ok(format!(
        "all 7 endpoints round-trip; 10000 fuzzed bodies, statuses {statuses:?}; CLI matches HTTP on {} inputs",
        cases.len()
    ))
}

fn p10_api() -> Outcome {
    tokio::runtime::Builder::new_current_thread().enable_all().build().unwrap().block_on(api_contract())
}

fn main() {
    let minutes = |m: u64| Some(Duration::from_secs(60 * m));
    let checks: [Check; 10] = [
        ("P1", "worked normal probability", p1_worked_normal, None),
        ("P2", "discrete CDFs against pmf sums", p2_discrete_cdf, Some(Duration::from_secs(30))),
        ("P3", "continuous CDFs against quadrature", p3_continuous_cdf, minutes(2)),
        ("P4", "moments against simulation", p4_moments, minutes(5)),
        ("P5", "test decisions and input forms", p5_decisions, minutes(1)),
        ("P6", "interval and test duality", p6_duality, None),
        ("P7", "least squares against oracles", p7_regression, None),
        ("P8", "regression fixture", p8_fixture, None),
        ("P9", "derivation documents and report", p9_documents, None),
        ("P10", "HTTP and CLI contract", p10_api, None),
    ];
    let wanted: Vec<String> =
        std::env::args().skip(1).filter(|a| a.starts_with('P') && a[1..].parse::<u32>().is_ok()).collect();
    let mut failures = 0;
    for (id, name, check, budget) in checks {
        if !wanted.is_empty() && !wanted.iter().any(|w| w == id) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("exceeded the {limit:?} budget")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{elapsed:.2?}]"),
            Err(reason) => {
                failures += 1;
                println!("{id} FAIL {name}: {reason} [{elapsed:.2?}]");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
