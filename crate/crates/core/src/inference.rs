//! Confidence intervals and hypothesis tests for the seven inference
//! settings, from raw data or summary statistics.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distributions::{Distribution, DistributionError, DistributionSpec, PlotData, ShadedRange};
use crate::narrative::{self, DerivationDocument};
use crate::num::NeumaierSum;

/// Largest number of observations accepted per sample.
pub const MAX_OBSERVATIONS: usize = 100_000;
pub const DEFAULT_ALPHA: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InferenceError {
    #[error("unknown inference setting `{0}`")]
    UnknownSetting(String),
    #[error("alpha = {0} must lie strictly between 0 and 0.5")]
    InvalidAlpha(f64),
    #[error("setting `{setting}` takes {expected} sample(s), got {got}")]
    WrongSampleCount { setting: &'static str, expected: usize, got: usize },
    #[error("sample {index}: {found} input cannot be used for setting `{setting}`")]
    IncompatibleSample { index: usize, found: &'static str, setting: &'static str },
    #[error("sample {index}: at least {needed} observations required, got {got}")]
    TooFewObservations { index: usize, needed: usize, got: usize },
    #[error("sample {index}: at most {max} observations accepted, got {got}")]
    TooManyObservations { index: usize, max: usize, got: usize },
    #[error("sample {index}: observation {position} is not a finite number")]
    NonFiniteObservation { index: usize, position: usize },
    #[error("sample {index}: observation {position} = {value} is not 0 or 1")]
    NonBinaryObservation { index: usize, position: usize, value: f64 },
    #[error("sample {index}: `{field}` {reason}")]
    InvalidSummary { index: usize, field: &'static str, reason: &'static str },
    #[error("a null-hypothesis value `h0` is required for setting `{0}`")]
    MissingNull(&'static str),
    #[error("h0 = {value} must satisfy {constraint}")]
    InvalidNull { value: f64, constraint: &'static str },
    #[error("option `{option}` {reason}")]
    InvalidOption { option: &'static str, reason: &'static str },
    #[error("paired samples differ in length ({n1} vs {n2})")]
    PairedLengthMismatch { n1: usize, n2: usize },
    #[error("degenerate variance: {0}")]
    DegenerateVariance(&'static str),
    #[error(transparent)]
    Distribution(#[from] DistributionError),
}

type Result<T> = std::result::Result<T, InferenceError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Setting {
    OneMean,
    TwoMeansIndependent,
    TwoMeansPaired,
    OneProportion,
    TwoProportions,
    OneVariance,
    TwoVariances,
}

/// What a sample summarizes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Mean,
    Proportion,
    Variance,
}

impl Setting {
    pub const ALL: [Setting; 7] = [
        Setting::OneMean,
        Setting::TwoMeansIndependent,
        Setting::TwoMeansPaired,
        Setting::OneProportion,
        Setting::TwoProportions,
        Setting::OneVariance,
        Setting::TwoVariances,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Setting::OneMean => "one_mean",
            Setting::TwoMeansIndependent => "two_means_independent",
            Setting::TwoMeansPaired => "two_means_paired",
            Setting::OneProportion => "one_proportion",
            Setting::TwoProportions => "two_proportions",
            Setting::OneVariance => "one_variance",
            Setting::TwoVariances => "two_variances",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Setting::ALL.into_iter().find(|s| s.tag() == tag).ok_or_else(|| InferenceError::UnknownSetting(tag.to_string()))
    }

    pub fn sample_count(self) -> usize {
        match self {
            Setting::OneMean | Setting::OneProportion | Setting::OneVariance => 1,
            _ => 2,
        }
    }

    pub fn kind(self) -> SampleKind {
        match self {
            Setting::OneMean | Setting::TwoMeansIndependent | Setting::TwoMeansPaired => SampleKind::Mean,
            Setting::OneProportion | Setting::TwoProportions => SampleKind::Proportion,
            Setting::OneVariance | Setting::TwoVariances => SampleKind::Variance,
        }
    }

    /// Null value used when `h0` is omitted; `None` where it is required.
    pub fn default_null(self) -> Option<f64> {
        match self {
            Setting::TwoMeansIndependent | Setting::TwoMeansPaired | Setting::TwoProportions => Some(0.0),
            Setting::TwoVariances => Some(1.0),
            Setting::OneMean | Setting::OneProportion | Setting::OneVariance => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alternative {
    #[default]
    TwoSided,
    Greater,
    Less,
}

/// One sample, as raw observations or summary statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SampleInput {
    Raw {
        data: Vec<f64>,
    },
    MeanSummary {
        n: u64,
        mean: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        var: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sd: Option<f64>,
    },
    ProportionSummary {
        n: u64,
        successes: u64,
    },
    VarianceSummary {
        n: u64,
        var: f64,
    },
}

impl SampleInput {
    fn label(&self) -> &'static str {
        match self {
            SampleInput::Raw { .. } => "raw",
            SampleInput::MeanSummary { .. } => "mean_summary",
            SampleInput::ProportionSummary { .. } => "proportion_summary",
            SampleInput::VarianceSummary { .. } => "variance_summary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestConfig {
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default)]
    pub h0: Option<f64>,
    #[serde(default)]
    pub alternative: Alternative,
    /// Known population standard deviation (first sample, or the
    /// differences in the paired setting).
    #[serde(default)]
    pub sigma: Option<f64>,
    #[serde(default)]
    pub sigma2: Option<f64>,
    #[serde(default)]
    pub equal_variances: bool,
    #[serde(default)]
    pub pooled_se: bool,
}

fn default_alpha() -> f64 {
    DEFAULT_ALPHA
}

impl Default for TestConfig {
    fn default() -> Self {
        TestConfig {
            alpha: DEFAULT_ALPHA,
            h0: None,
            alternative: Alternative::TwoSided,
            sigma: None,
            sigma2: None,
            equal_variances: false,
            pooled_se: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceRequest {
    pub setting: Setting,
    pub samples: Vec<SampleInput>,
    #[serde(default)]
    pub config: TestConfig,
}

/// Per-sample statistics; fields not relevant to the setting are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub n: u64,
    pub mean: Option<f64>,
    pub sd: Option<f64>,
    pub var: Option<f64>,
    pub successes: Option<u64>,
    pub proportion: Option<f64>,
}

impl SampleSummary {
    fn moments(n: u64, mean: Option<f64>, var: f64) -> Self {
        SampleSummary { n, mean, sd: Some(var.sqrt()), var: Some(var), successes: None, proportion: None }
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    fn mean_value(&self) -> f64 {
        self.mean.unwrap_or(f64::NAN)
    }

    fn var_value(&self) -> f64 {
        self.var.unwrap_or(f64::NAN)
    }

    fn proportion_value(&self) -> f64 {
        self.proportion.unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Z,
    T,
    PairedZ,
    PairedT,
    PooledT,
    WelchT,
    UnpooledZ,
    PooledZ,
    ChiSquare,
    F,
}

/// Null distribution of the test statistic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum StatisticFamily {
    Normal,
    StudentT { df: f64 },
    ChiSquare { df: f64 },
    F { df1: f64, df2: f64 },
}

impl StatisticFamily {
    pub fn spec(&self) -> Result<DistributionSpec> {
        let d = match *self {
            StatisticFamily::Normal => Distribution::Normal { mu: 0.0, var: 1.0 },
            StatisticFamily::StudentT { df } => Distribution::StudentT { df },
            StatisticFamily::ChiSquare { df } => Distribution::ChiSquare { df },
            StatisticFamily::F { df1, df2 } => Distribution::Fisher { df1, df2 },
        };
        Ok(DistributionSpec::new(d)?)
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, StatisticFamily::Normal | StatisticFamily::StudentT { .. })
    }

    pub fn df(&self) -> Vec<f64> {
        match *self {
            StatisticFamily::Normal => Vec::new(),
            StatisticFamily::StudentT { df } | StatisticFamily::ChiSquare { df } => vec![df],
            StatisticFamily::F { df1, df2 } => vec![df1, df2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    #[serde(with = "crate::num::extended")]
    pub lower: f64,
    #[serde(with = "crate::num::extended")]
    pub upper: f64,
    pub level: f64,
    /// Two-sided, or one-sided with the infinite (or zero) end on the
    /// side opposite the alternative.
    pub sidedness: Alternative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Reject,
    FailToReject,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceResult {
    pub setting: Setting,
    pub method: Method,
    pub alternative: Alternative,
    pub alpha: f64,
    pub h0: f64,
    pub summary_stats: Vec<SampleSummary>,
    /// Raw observations as entered; empty for summary input.
    pub observations: Vec<Vec<f64>>,
    pub estimate: f64,
    /// Standard error used by the confidence interval.
    pub standard_error: Option<f64>,
    /// Standard error in the test statistic's denominator, where it differs.
    pub test_standard_error: Option<f64>,
    /// Pooled SD (pooled t) or pooled proportion (pooled z).
    pub pooled: Option<f64>,
    /// Known σ values for z variants.
    pub sigma: Vec<f64>,
    pub ci: ConfidenceInterval,
    pub statistic: f64,
    pub statistic_family: StatisticFamily,
    pub df: Vec<f64>,
    pub critical_values: Vec<f64>,
    pub p_value: f64,
    pub decision: Decision,
    /// Normal approximation may be poor (n·p̂ or n·(1 − p̂) below 5).
    pub approximation_warning: bool,
    pub narrative: DerivationDocument,
    pub plot: PlotData,
}

fn validate_raw(index: usize, data: &[f64], needed: usize) -> Result<()> {
    if data.len() > MAX_OBSERVATIONS {
        return Err(InferenceError::TooManyObservations { index, max: MAX_OBSERVATIONS, got: data.len() });
    }
    if let Some(position) = data.iter().position(|v| !v.is_finite()) {
        return Err(InferenceError::NonFiniteObservation { index, position });
    }
    if data.len() < needed {
        return Err(InferenceError::TooFewObservations { index, needed, got: data.len() });
    }
    Ok(())
}

/// Mean and unbiased variance, both compensated.
fn mean_var(data: &[f64]) -> (f64, f64) {
    let n = data.len() as f64;
    let mean = data.iter().copied().collect::<NeumaierSum>().value() / n;
    let ss = data.iter().map(|&x| (x - mean) * (x - mean)).collect::<NeumaierSum>().value();
    (mean, ss / (n - 1.0))
}

fn summary_error(index: usize, field: &'static str, reason: &'static str) -> InferenceError {
    InferenceError::InvalidSummary { index, field, reason }
}

/// Summarizes sample `index` for the given kind of setting.
pub fn summarize_indexed(index: usize, sample: &SampleInput, kind: SampleKind) -> Result<SampleSummary> {
    match (sample, kind) {
        (SampleInput::Raw { data }, SampleKind::Mean | SampleKind::Variance) => {
            validate_raw(index, data, 2)?;
            let (mean, var) = mean_var(data);
            if kind == SampleKind::Variance && var == 0.0 {
                return Err(InferenceError::DegenerateVariance("all observations are equal"));
            }
            Ok(SampleSummary::moments(data.len() as u64, Some(mean), var))
        }
        (SampleInput::Raw { data }, SampleKind::Proportion) => {
            validate_raw(index, data, 1)?;
            if let Some(position) = data.iter().position(|&v| v != 0.0 && v != 1.0) {
                return Err(InferenceError::NonBinaryObservation { index, position, value: data[position] });
            }
            let successes = data.iter().filter(|&&v| v == 1.0).count() as u64;
            proportion_summary(index, data.len() as u64, successes)
        }
        (SampleInput::MeanSummary { n, mean, var, sd }, SampleKind::Mean | SampleKind::Variance) => {
            if *n < 2 {
                return Err(summary_error(index, "n", "must be at least 2"));
            }
            if !mean.is_finite() {
                return Err(summary_error(index, "mean", "must be finite"));
            }
            let var = match (var, sd) {
                (Some(_), Some(_)) => return Err(summary_error(index, "sd", "cannot be given together with var")),
                (None, None) => return Err(summary_error(index, "var", "or sd is required")),
                (Some(v), None) => {
                    if !(v.is_finite() && *v >= 0.0) {
                        return Err(summary_error(index, "var", "must be finite and >= 0"));
                    }
                    *v
                }
                (None, Some(s)) => {
                    if !(s.is_finite() && *s >= 0.0) {
                        return Err(summary_error(index, "sd", "must be finite and >= 0"));
                    }
                    s * s
                }
            };
            if kind == SampleKind::Variance && var == 0.0 {
                return Err(InferenceError::DegenerateVariance("sample variance is 0"));
            }
            Ok(SampleSummary::moments(*n, Some(*mean), var))
        }
        (SampleInput::VarianceSummary { n, var }, SampleKind::Variance) => {
            if *n < 2 {
                return Err(summary_error(index, "n", "must be at least 2"));
            }
            if !(var.is_finite() && *var > 0.0) {
                return Err(summary_error(index, "var", "must be finite and > 0"));
            }
            Ok(SampleSummary::moments(*n, None, *var))
        }
        (SampleInput::ProportionSummary { n, successes }, SampleKind::Proportion) => {
            proportion_summary(index, *n, *successes)
        }
        (other, _) => Err(InferenceError::IncompatibleSample {
            index,
            found: other.label(),
            setting: match kind {
                SampleKind::Mean => "mean",
                SampleKind::Proportion => "proportion",
                SampleKind::Variance => "variance",
            },
        }),
    }
}

/// Summary statistics of one sample: n, x̄, s, s² or p̂.
pub fn summarize(sample: &SampleInput, kind: SampleKind) -> Result<SampleSummary> {
    summarize_indexed(0, sample, kind)
}

fn proportion_summary(index: usize, n: u64, successes: u64) -> Result<SampleSummary> {
    if n < 1 {
        return Err(summary_error(index, "n", "must be at least 1"));
    }
    if n > 1 << 53 {
        return Err(summary_error(index, "n", "is too large"));
    }
    if successes > n {
        return Err(summary_error(index, "successes", "must not exceed n"));
    }
    Ok(SampleSummary {
        n,
        mean: None,
        sd: None,
        var: None,
        successes: Some(successes),
        proportion: Some(successes as f64 / n as f64),
    })
}

fn check_sigma(option: &'static str, v: Option<f64>) -> Result<Option<f64>> {
    match v {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            Err(InferenceError::InvalidOption { option, reason: "must be finite and > 0" })
        }
        other => Ok(other),
    }
}

fn not_applicable(option: &'static str) -> InferenceError {
    InferenceError::InvalidOption { option, reason: "does not apply to this setting" }
}

/// Everything the statistic-specific code decides; the rest is generic.
struct Core {
    method: Method,
    summaries: Vec<SampleSummary>,
    estimate: f64,
    se: Option<f64>,
    test_se: Option<f64>,
    pooled: Option<f64>,
    sigma: Vec<f64>,
    statistic: f64,
    family: StatisticFamily,
    warning: bool,
}

fn validate_config(setting: Setting, config: &TestConfig) -> Result<f64> {
    if !(config.alpha > 0.0 && config.alpha < 0.5) {
        return Err(InferenceError::InvalidAlpha(config.alpha));
    }
    let h0 = match config.h0.or(setting.default_null()) {
        Some(v) => v,
        None => return Err(InferenceError::MissingNull(setting.tag())),
    };
    if !h0.is_finite() {
        return Err(InferenceError::InvalidNull { value: h0, constraint: "finite" });
    }
    match setting {
        Setting::OneProportion if !(h0 > 0.0 && h0 < 1.0) => {
            return Err(InferenceError::InvalidNull { value: h0, constraint: "0 < p0 < 1" })
        }
        Setting::TwoProportions if !(h0 > -1.0 && h0 < 1.0) => {
            return Err(InferenceError::InvalidNull { value: h0, constraint: "-1 < h0 < 1" })
        }
        Setting::OneVariance | Setting::TwoVariances if h0 <= 0.0 => {
            return Err(InferenceError::InvalidNull { value: h0, constraint: "h0 > 0" })
        }
        _ => {}
    }
    check_sigma("sigma", config.sigma)?;
    check_sigma("sigma2", config.sigma2)?;
    let mean_setting = setting.kind() == SampleKind::Mean;
    if !mean_setting && config.sigma.is_some() {
        return Err(not_applicable("sigma"));
    }
    if setting != Setting::TwoMeansIndependent && config.sigma2.is_some() {
        return Err(not_applicable("sigma2"));
    }
    if setting != Setting::TwoMeansIndependent && config.equal_variances {
        return Err(not_applicable("equal_variances"));
    }
    if setting != Setting::TwoProportions && config.pooled_se {
        return Err(not_applicable("pooled_se"));
    }
    if setting == Setting::TwoMeansIndependent {
        if config.sigma.is_some() != config.sigma2.is_some() {
            return Err(InferenceError::InvalidOption {
                option: "sigma2",
                reason: "must be given together with sigma",
            });
        }
        if config.sigma.is_some() && config.equal_variances {
            return Err(InferenceError::InvalidOption {
                option: "equal_variances",
                reason: "cannot be combined with known sigmas",
            });
        }
    }
    if setting == Setting::TwoProportions && config.pooled_se && h0 != 0.0 {
        return Err(InferenceError::InvalidOption { option: "pooled_se", reason: "requires h0 = 0" });
    }
    Ok(h0)
}

fn one_mean_core(s: SampleSummary, h0: f64, sigma: Option<f64>, paired: bool) -> Result<Core> {
    let n = s.nf();
    let mean = s.mean_value();
    let (method, se, family, sig) = match sigma {
        Some(sig) => {
            (if paired { Method::PairedZ } else { Method::Z }, sig / n.sqrt(), StatisticFamily::Normal, vec![sig])
        }
        None => {
            if s.var_value() == 0.0 {
                return Err(InferenceError::DegenerateVariance("sample standard deviation is 0"));
            }
            (
                if paired { Method::PairedT } else { Method::T },
                s.sd.unwrap_or(f64::NAN) / n.sqrt(),
                StatisticFamily::StudentT { df: n - 1.0 },
                Vec::new(),
            )
        }
    };
    Ok(Core {
        method,
        summaries: vec![s],
        estimate: mean,
        se: Some(se),
        test_se: Some(se),
        pooled: None,
        sigma: sig,
        statistic: (mean - h0) / se,
        family,
        warning: false,
    })
}

fn two_means_core(a: SampleSummary, b: SampleSummary, h0: f64, cfg: &TestConfig) -> Result<Core> {
    let (n1, n2) = (a.nf(), b.nf());
    let (v1, v2) = (a.var_value(), b.var_value());
    let estimate = a.mean_value() - b.mean_value();
    let (method, se, pooled, family, sigma) = match (cfg.sigma, cfg.sigma2) {
        (Some(s1), Some(s2)) => {
            (Method::Z, (s1 * s1 / n1 + s2 * s2 / n2).sqrt(), None, StatisticFamily::Normal, vec![s1, s2])
        }
        _ if cfg.equal_variances => {
            let df = n1 + n2 - 2.0;
            let sp2 = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / df;
            if sp2 == 0.0 {
                return Err(InferenceError::DegenerateVariance("pooled variance is 0"));
            }
            let sp = sp2.sqrt();
            (Method::PooledT, sp * (1.0 / n1 + 1.0 / n2).sqrt(), Some(sp), StatisticFamily::StudentT { df }, Vec::new())
        }
        _ => {
            let (q1, q2) = (v1 / n1, v2 / n2);
            if q1 + q2 == 0.0 {
                return Err(InferenceError::DegenerateVariance("both sample variances are 0"));
            }
            let df = (q1 + q2) * (q1 + q2) / (q1 * q1 / (n1 - 1.0) + q2 * q2 / (n2 - 1.0));
            (Method::WelchT, (q1 + q2).sqrt(), None, StatisticFamily::StudentT { df }, Vec::new())
        }
    };
    Ok(Core {
        method,
        summaries: vec![a, b],
        estimate,
        se: Some(se),
        test_se: Some(se),
        pooled,
        sigma,
        statistic: (estimate - h0) / se,
        family,
        warning: false,
    })
}

fn proportion_warning(s: &SampleSummary) -> bool {
    let n = s.nf();
    let p = s.proportion_value();
    n * p < 5.0 || n * (1.0 - p) < 5.0
}

fn one_proportion_core(s: SampleSummary, h0: f64) -> Result<Core> {
    let p = s.proportion_value();
    let se = (p * (1.0 - p) / s.nf()).sqrt();
    if se == 0.0 {
        return Err(InferenceError::DegenerateVariance("sample proportion is 0 or 1, so its standard error is 0"));
    }
    Ok(Core {
        method: Method::Z,
        summaries: vec![s],
        estimate: p,
        se: Some(se),
        test_se: Some(se),
        pooled: None,
        sigma: Vec::new(),
        statistic: (p - h0) / se,
        family: StatisticFamily::Normal,
        warning: proportion_warning(&s),
    })
}

fn two_proportions_core(a: SampleSummary, b: SampleSummary, h0: f64, pooled: bool) -> Result<Core> {
    let (n1, n2) = (a.nf(), b.nf());
    let (p1, p2) = (a.proportion_value(), b.proportion_value());
    let se = (p1 * (1.0 - p1) / n1 + p2 * (1.0 - p2) / n2).sqrt();
    let estimate = p1 - p2;
    let (method, test_se, p_bar) = if pooled {
        let x = (a.successes.unwrap_or(0) + b.successes.unwrap_or(0)) as f64;
        let p_bar = x / (n1 + n2);
        (Method::PooledZ, (p_bar * (1.0 - p_bar) * (1.0 / n1 + 1.0 / n2)).sqrt(), Some(p_bar))
    } else {
        (Method::UnpooledZ, se, None)
    };
    if se == 0.0 || test_se == 0.0 {
        return Err(InferenceError::DegenerateVariance(
            "sample proportions are all 0 or 1, so the standard error is 0",
        ));
    }
    Ok(Core {
        method,
        summaries: vec![a, b],
        estimate,
        se: Some(se),
        test_se: Some(test_se),
        pooled: p_bar,
        sigma: Vec::new(),
        statistic: (estimate - h0) / test_se,
        family: StatisticFamily::Normal,
        warning: proportion_warning(&a) || proportion_warning(&b),
    })
}

fn one_variance_core(s: SampleSummary, h0: f64) -> Core {
    let df = s.nf() - 1.0;
    Core {
        method: Method::ChiSquare,
        summaries: vec![s],
        estimate: s.var_value(),
        se: None,
        test_se: None,
        pooled: None,
        sigma: Vec::new(),
        statistic: df * s.var_value() / h0,
        family: StatisticFamily::ChiSquare { df },
        warning: false,
    }
}

fn two_variances_core(a: SampleSummary, b: SampleSummary, h0: f64) -> Core {
    let ratio = a.var_value() / b.var_value();
    Core {
        method: Method::F,
        summaries: vec![a, b],
        estimate: ratio,
        se: None,
        test_se: None,
        pooled: None,
        sigma: Vec::new(),
        statistic: ratio / h0,
        family: StatisticFamily::F { df1: a.nf() - 1.0, df2: b.nf() - 1.0 },
        warning: false,
    }
}

fn raw_data(sample: &SampleInput) -> Option<&[f64]> {
    match sample {
        SampleInput::Raw { data } => Some(data),
        _ => None,
    }
}

fn build_core(req: &InferenceRequest, h0: f64) -> Result<(Core, Vec<Vec<f64>>)> {
    let setting = req.setting;
    if req.samples.len() != setting.sample_count() {
        return Err(InferenceError::WrongSampleCount {
            setting: setting.tag(),
            expected: setting.sample_count(),
            got: req.samples.len(),
        });
    }
    let observations: Vec<Vec<f64>> = req.samples.iter().filter_map(raw_data).map(<[f64]>::to_vec).collect();
    let kind = setting.kind();
    let cfg = &req.config;
    let core = match setting {
        Setting::OneMean => {
            let s = summarize_indexed(0, &req.samples[0], kind)?;
            one_mean_core(s, h0, cfg.sigma, false)?
        }
        Setting::TwoMeansPaired => {
            let (x1, x2) = match (raw_data(&req.samples[0]), raw_data(&req.samples[1])) {
                (Some(a), Some(b)) => (a, b),
                (None, _) => {
                    return Err(InferenceError::IncompatibleSample {
                        index: 0,
                        found: req.samples[0].label(),
                        setting: setting.tag(),
                    })
                }
                (_, None) => {
                    return Err(InferenceError::IncompatibleSample {
                        index: 1,
                        found: req.samples[1].label(),
                        setting: setting.tag(),
                    })
                }
            };
            validate_raw(0, x1, 2)?;
            validate_raw(1, x2, 2)?;
            if x1.len() != x2.len() {
                return Err(InferenceError::PairedLengthMismatch { n1: x1.len(), n2: x2.len() });
            }
            let d: Vec<f64> = x1.iter().zip(x2).map(|(a, b)| a - b).collect();
            if let Some(position) = d.iter().position(|v| !v.is_finite()) {
                return Err(InferenceError::NonFiniteObservation { index: 0, position });
            }
            let s = summarize_indexed(0, &SampleInput::Raw { data: d }, kind)?;
            one_mean_core(s, h0, cfg.sigma, true)?
        }
        Setting::TwoMeansIndependent => {
            let a = summarize_indexed(0, &req.samples[0], kind)?;
            let b = summarize_indexed(1, &req.samples[1], kind)?;
            two_means_core(a, b, h0, cfg)?
        }
        Setting::OneProportion => {
            let s = summarize_indexed(0, &req.samples[0], kind)?;
            one_proportion_core(s, h0)?
        }
        Setting::TwoProportions => {
            let a = summarize_indexed(0, &req.samples[0], kind)?;
            let b = summarize_indexed(1, &req.samples[1], kind)?;
            two_proportions_core(a, b, h0, cfg.pooled_se)?
        }
        Setting::OneVariance => {
            let s = summarize_indexed(0, &req.samples[0], kind)?;
            one_variance_core(s, h0)
        }
        Setting::TwoVariances => {
            let a = summarize_indexed(0, &req.samples[0], kind)?;
            let b = summarize_indexed(1, &req.samples[1], kind)?;
            two_variances_core(a, b, h0)
        }
    };
    if !core.statistic.is_finite() {
        return Err(InferenceError::DegenerateVariance("the test statistic is not finite"));
    }
    Ok((core, observations))
}

/// Critical values: the rejection region is beyond these points.
fn critical_values(family: &StatisticFamily, law: &DistributionSpec, alpha: f64, alt: Alternative) -> Result<Vec<f64>> {
    Ok(match alt {
        Alternative::TwoSided if family.is_symmetric() => {
            let c = law.quantile(1.0 - alpha / 2.0)?;
            vec![-c, c]
        }
        Alternative::TwoSided => vec![law.quantile(alpha / 2.0)?, law.quantile(1.0 - alpha / 2.0)?],
        Alternative::Greater => vec![law.quantile(1.0 - alpha)?],
        Alternative::Less => vec![law.quantile(alpha)?],
    })
}

fn p_value(family: &StatisticFamily, law: &DistributionSpec, stat: f64, alt: Alternative) -> f64 {
    let p = match alt {
        Alternative::TwoSided if family.is_symmetric() => 2.0 * law.cdf_unchecked(-stat.abs()),
        Alternative::TwoSided => 2.0 * law.cdf_unchecked(stat).min(law.sf_unchecked(stat)),
        Alternative::Greater => law.sf_unchecked(stat),
        Alternative::Less => law.cdf_unchecked(stat),
    };
    p.min(1.0)
}

/// Whether `stat` lies in the rejection region described by `critical`.
pub fn in_rejection_region(stat: f64, critical: &[f64], alt: Alternative) -> bool {
    match (alt, critical) {
        (Alternative::TwoSided, [lo, hi]) => stat < *lo || stat > *hi,
        (Alternative::Greater, [c]) => stat > *c,
        (Alternative::Less, [c]) => stat < *c,
        _ => false,
    }
}

fn interval(core: &Core, law: &DistributionSpec, alpha: f64, alt: Alternative) -> Result<ConfidenceInterval> {
    let level = 1.0 - alpha;
    let (lower, upper) = match core.family {
        StatisticFamily::Normal | StatisticFamily::StudentT { .. } => {
            let se = core.se.unwrap_or(f64::NAN);
            let e = core.estimate;
            match alt {
                Alternative::TwoSided => {
                    let c = law.quantile(1.0 - alpha / 2.0)?;
                    (e - c * se, e + c * se)
                }
                Alternative::Greater => (e - law.quantile(1.0 - alpha)? * se, f64::INFINITY),
                Alternative::Less => (f64::NEG_INFINITY, e + law.quantile(1.0 - alpha)? * se),
            }
        }
        StatisticFamily::ChiSquare { df } => {
            let ss = df * core.estimate;
            match alt {
                Alternative::TwoSided => (ss / law.quantile(1.0 - alpha / 2.0)?, ss / law.quantile(alpha / 2.0)?),
                Alternative::Greater => (ss / law.quantile(1.0 - alpha)?, f64::INFINITY),
                Alternative::Less => (0.0, ss / law.quantile(alpha)?),
            }
        }
        StatisticFamily::F { .. } => {
            let f = core.estimate;
            match alt {
                Alternative::TwoSided => (f / law.quantile(1.0 - alpha / 2.0)?, f / law.quantile(alpha / 2.0)?),
                Alternative::Greater => (f / law.quantile(1.0 - alpha)?, f64::INFINITY),
                Alternative::Less => (0.0, f / law.quantile(alpha)?),
            }
        }
    };
    Ok(ConfidenceInterval { lower, upper, level, sidedness: alt })
}

/// The confidence interval alone, with its derivation section.
pub fn confidence_interval(req: &InferenceRequest) -> Result<(ConfidenceInterval, crate::narrative::Section)> {
    let result = run_test(req)?;
    let section = result
        .narrative
        .section(narrative::CI_TITLE)
        .cloned()
        .expect("test documents always carry a confidence-interval section");
    Ok((result.ci, section))
}

/// Runs the requested test: CI, statistic, critical values, p-value,
/// decision, narrative and rejection-region plot.
pub fn run_test(req: &InferenceRequest) -> Result<InferenceResult> {
    let h0 = validate_config(req.setting, &req.config)?;
    let (core, observations) = build_core(req, h0)?;
    let alpha = req.config.alpha;
    let alt = req.config.alternative;
    let law = core.family.spec()?;
    let critical = critical_values(&core.family, &law, alpha, alt)?;
    let p = p_value(&core.family, &law, core.statistic, alt);
    let decision = if p < alpha { Decision::Reject } else { Decision::FailToReject };
    let ci = interval(&core, &law, alpha, alt)?;
    let mut result = InferenceResult {
        setting: req.setting,
        method: core.method,
        alternative: alt,
        alpha,
        h0,
        summary_stats: core.summaries,
        observations,
        estimate: core.estimate,
        standard_error: core.se,
        test_standard_error: core.test_se,
        pooled: core.pooled,
        sigma: core.sigma,
        ci,
        statistic: core.statistic,
        statistic_family: core.family,
        df: core.family.df(),
        critical_values: critical,
        p_value: p,
        decision,
        approximation_warning: core.warning,
        narrative: DerivationDocument { sections: Vec::new() },
        plot: PlotData {
            support_grid: Vec::new(),
            density_or_mass: Vec::new(),
            shaded: Vec::new(),
            is_discrete: false,
            marker: None,
        },
    };
    result.plot = rejection_plot(&result)?;
    result.narrative = narrative::test_document(&result);
    Ok(result)
}

/// Density of the statistic's null law with the rejection region shaded
/// and the observed statistic marked.
pub fn rejection_plot(result: &InferenceResult) -> Result<PlotData> {
    let law = result.statistic_family.spec()?;
    let mut include = result.critical_values.clone();
    let (support_lo, _) = law.support();
    if support_lo.is_finite() {
        include.push(support_lo);
    }
    // Far-out statistics are marked but do not stretch the axis.
    let lo = law.quantile(1e-6)?;
    let hi = law.quantile(1.0 - 1e-6)?;
    if (lo..=hi).contains(&result.statistic) {
        include.push(result.statistic);
    }
    let (grid, density) = law.plot_grid(&include)?;
    let first = grid[0];
    let last = grid[grid.len() - 1];
    let shaded = match (result.alternative, result.critical_values.as_slice()) {
        (Alternative::TwoSided, [c_lo, c_hi]) => {
            vec![ShadedRange { from: first, to: c_lo.max(first) }, ShadedRange { from: c_hi.min(last), to: last }]
        }
        (Alternative::Greater, [c]) => vec![ShadedRange { from: c.min(last), to: last }],
        (Alternative::Less, [c]) => vec![ShadedRange { from: first, to: c.max(first) }],
        _ => Vec::new(),
    };
    Ok(PlotData {
        support_grid: grid,
        density_or_mass: density,
        shaded,
        is_discrete: false,
        marker: Some(result.statistic),
    })
}

/// Plain-language conclusion at level `alpha`.
pub fn interpret(result: &InferenceResult, alpha: f64) -> String {
    narrative::interpret(result, alpha)
}

/// Catalog entry for one setting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SettingInfo {
    pub tag: &'static str,
    pub name: &'static str,
    pub samples: usize,
    pub inputs: Vec<&'static str>,
    pub null_parameter: &'static str,
    pub default_h0: Option<f64>,
    pub options: Vec<&'static str>,
}

pub fn settings_catalog() -> Vec<SettingInfo> {
    let info = |setting: Setting, name, inputs: Vec<&'static str>, null, options: Vec<&'static str>| SettingInfo {
        tag: setting.tag(),
        name,
        samples: setting.sample_count(),
        inputs,
        null_parameter: null,
        default_h0: setting.default_null(),
        options,
    };
    vec![
        info(Setting::OneMean, "One mean", vec!["raw", "mean_summary"], "population mean μ₀", vec!["sigma"]),
        info(
            Setting::TwoMeansIndependent,
            "Two means (independent samples)",
            vec!["raw", "mean_summary"],
            "difference of means Δ₀ = μ₁ − μ₂",
            vec!["sigma", "sigma2", "equal_variances"],
        ),
        info(Setting::TwoMeansPaired, "Two means (paired samples)", vec!["raw"], "mean difference Δ₀", vec!["sigma"]),
        info(
            Setting::OneProportion,
            "One proportion",
            vec!["raw", "proportion_summary"],
            "population proportion p₀",
            Vec::new(),
        ),
        info(
            Setting::TwoProportions,
            "Two proportions",
            vec!["raw", "proportion_summary"],
            "difference of proportions Δ₀ = p₁ − p₂",
            vec!["pooled_se"],
        ),
        info(
            Setting::OneVariance,
            "One variance",
            vec!["raw", "mean_summary", "variance_summary"],
            "population variance σ₀²",
            Vec::new(),
        ),
        info(
            Setting::TwoVariances,
            "Two variances",
            vec!["raw", "mean_summary", "variance_summary"],
            "variance ratio σ₁²/σ₂²",
            Vec::new(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(data: &[f64]) -> SampleInput {
        SampleInput::Raw { data: data.to_vec() }
    }

    fn request(setting: Setting, samples: Vec<SampleInput>, h0: Option<f64>) -> InferenceRequest {
        InferenceRequest { setting, samples, config: TestConfig { h0, ..TestConfig::default() } }
    }

    #[test]
    fn summarize_examples() {
        let s = summarize(&raw(&[1.0, 2.0, 3.0, 4.0, 5.0]), SampleKind::Mean).unwrap();
        assert_eq!((s.n, s.mean, s.var), (5, Some(3.0), Some(2.5)));
        assert!(matches!(
            summarize(&raw(&[2.0, 2.0, 2.0]), SampleKind::Variance),
            Err(InferenceError::DegenerateVariance(_))
        ));
        let p = summarize(&SampleInput::ProportionSummary { n: 100, successes: 50 }, SampleKind::Proportion).unwrap();
        assert_eq!(p.proportion, Some(0.5));
        assert!(summarize(&raw(&[0.0, 1.0, 2.0]), SampleKind::Proportion).is_err());
    }

    #[test]
    fn one_mean_at_null_does_not_reject() {
        let r = run_test(&request(Setting::OneMean, vec![raw(&[1.0, 2.0, 3.0, 4.0, 5.0])], Some(3.0))).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0);
        assert_eq!(r.decision, Decision::FailToReject);
    }

    #[test]
    fn one_mean_summary_t() {
        let s = SampleInput::MeanSummary { n: 5, mean: 3.0, var: Some(2.5), sd: None };
        let r = run_test(&request(Setting::OneMean, vec![s], Some(0.0))).unwrap();
        assert!((r.statistic - 3.0 / 0.5f64.sqrt()).abs() < 1e-14);
        assert_eq!(r.df, vec![4.0]);
        let t4 = DistributionSpec::new(Distribution::StudentT { df: 4.0 }).unwrap();
        let oracle_c = statlab_testkit::oracle::bisect(|x| t4.cdf(x).unwrap(), 0.975, 0.0, 50.0);
        assert!((r.critical_values[1] - oracle_c).abs() < 1e-10);
        let half = oracle_c * 0.5f64.sqrt();
        assert!((r.ci.lower - (3.0 - half)).abs() < 1e-10);
        assert!((r.ci.upper - (3.0 + half)).abs() < 1e-10);
        assert!((r.p_value - 2.0 * t4.cdf(-r.statistic).unwrap()).abs() < 1e-15);
        assert_eq!(r.decision, Decision::Reject);
    }

    #[test]
    fn variance_settings_at_null() {
        let v = SampleInput::VarianceSummary { n: 10, var: 4.0 };
        let r = run_test(&request(Setting::TwoVariances, vec![v.clone(), v.clone()], None)).unwrap();
        assert_eq!(r.statistic, 1.0);
        assert!((r.p_value - 1.0).abs() < 1e-12);
        let r = run_test(&request(Setting::OneVariance, vec![v], Some(4.0))).unwrap();
        assert_eq!(r.statistic, 9.0);
    }

    #[test]
    fn one_proportion_wald_interval() {
        let s = SampleInput::ProportionSummary { n: 100, successes: 50 };
        let r = run_test(&request(Setting::OneProportion, vec![s], Some(0.5))).unwrap();
        let z = statlab_testkit::oracle::bisect(statlab_testkit::oracle::normal_cdf_taylor, 0.975, 0.0, 5.0);
        assert!((r.ci.lower - (0.5 - z * 0.05)).abs() < 1e-10);
        assert!((r.ci.upper - (0.5 + z * 0.05)).abs() < 1e-10);
    }

    #[test]
    fn greater_alternative_has_open_upper_bound() {
        let mut req = request(Setting::OneMean, vec![raw(&[1.0, 2.0, 3.0, 4.0, 6.0])], Some(2.0));
        req.config.alternative = Alternative::Greater;
        let r = run_test(&req).unwrap();
        assert_eq!(r.ci.upper, f64::INFINITY);
        assert_eq!(r.critical_values.len(), 1);
        assert_eq!(r.plot.shaded.len(), 1);
    }

    #[test]
    fn rejection_plot_examples() {
        let s = SampleInput::ProportionSummary { n: 100, successes: 60 };
        let r = run_test(&request(Setting::OneProportion, vec![s], Some(0.5))).unwrap();
        assert_eq!(format!("{:.2}", r.critical_values[1]), "1.96");
        assert_eq!(r.plot.shaded.len(), 2);
        assert_eq!(format!("{:.2}", r.plot.shaded[0].to), "-1.96");
        assert_eq!(r.plot.marker, Some(r.statistic));
        let v = SampleInput::VarianceSummary { n: 5, var: 3.0 };
        let r = run_test(&request(Setting::OneVariance, vec![v], Some(2.0))).unwrap();
        assert_eq!(r.plot.support_grid[0], 0.0);
    }

    #[test]
    fn validation_errors() {
        let s = raw(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            run_test(&request(Setting::OneMean, vec![s.clone()], None)),
            Err(InferenceError::MissingNull(_))
        ));
        let mut req = request(Setting::OneMean, vec![s.clone()], Some(0.0));
        req.config.alpha = 0.5;
        assert!(matches!(run_test(&req), Err(InferenceError::InvalidAlpha(_))));
        assert!(matches!(
            run_test(&request(Setting::TwoMeansPaired, vec![s.clone(), raw(&[1.0, 2.0])], None)),
            Err(InferenceError::PairedLengthMismatch { .. })
        ));
        let mut req = request(
            Setting::TwoProportions,
            vec![
                SampleInput::ProportionSummary { n: 10, successes: 3 },
                SampleInput::ProportionSummary { n: 10, successes: 5 },
            ],
            Some(0.1),
        );
        req.config.pooled_se = true;
        assert!(matches!(run_test(&req), Err(InferenceError::InvalidOption { .. })));
        assert!(matches!(
            run_test(&request(Setting::OneMean, vec![raw(&[2.0, 2.0])], Some(0.0))),
            Err(InferenceError::DegenerateVariance(_))
        ));
    }

    #[test]
    fn welch_df_is_unrounded_and_bounded() {
        let a = SampleInput::MeanSummary { n: 8, mean: 1.0, var: Some(2.0), sd: None };
        let b = SampleInput::MeanSummary { n: 13, mean: 0.0, var: Some(7.0), sd: None };
        let r = run_test(&request(Setting::TwoMeansIndependent, vec![a, b], None)).unwrap();
        let df = r.df[0];
        assert!(df.fract() != 0.0);
        assert!((7.0..=19.0).contains(&df));
    }

    #[test]
    fn settings_catalog_lists_seven() {
        let tags: Vec<_> = settings_catalog().iter().map(|s| s.tag).collect();
        assert_eq!(tags.len(), 7);
        for s in Setting::ALL {
            assert_eq!(Setting::from_tag(s.tag()).unwrap(), s);
        }
    }
}
