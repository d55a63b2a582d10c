//! Request and response documents, and the endpoint logic behind them.
//!
//! These functions do not touch HTTP, so the CLI calls them directly and
//! prints the same documents the service returns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use statlab_core::distributions::{catalog, FamilyInfo};
use statlab_core::inference::{run_test, settings_catalog, SettingInfo, DEFAULT_ALPHA};
use statlab_core::narrative::{p_value_text, regression_report, ReportRequest};
use statlab_core::num::display4;
use statlab_core::regression::{analyze, DEFAULT_LEVEL};
use statlab_core::{
    DerivationDocument, DistributionSpec, InferenceRequest, InferenceResult, Moments, PlotData, ProbabilityQuery,
    RegressionAnalysis, RegressionInput, SampleInput, Setting, TestConfig,
};

use crate::error::ApiError;
use crate::parse::NumberList;

pub const API_VERSION: &str = "v1";

fn display_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), display4)
}

#[derive(Debug, Clone, Serialize)]
pub struct DistributionCatalog {
    pub distributions: Vec<FamilyInfo>,
}

pub fn distributions() -> DistributionCatalog {
    DistributionCatalog { distributions: catalog() }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbabilityBody {
    pub distribution: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub query: ProbabilityQuery,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentsDisplay {
    pub mean: String,
    pub sd: String,
    pub variance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityResponse {
    pub distribution: String,
    /// Parameters after validation, in canonical names.
    pub params: BTreeMap<String, f64>,
    pub query: ProbabilityQuery,
    pub value: f64,
    pub display_value: String,
    pub moments: Moments,
    pub moments_display: MomentsDisplay,
    pub derivation: DerivationDocument,
    pub plot: PlotData,
}

pub fn probability(body: ProbabilityBody) -> Result<ProbabilityResponse, ApiError> {
    let spec = DistributionSpec::from_params(&body.distribution, &body.params)?;
    let result = spec.probability(&body.query)?;
    let moments = spec.moments();
    Ok(ProbabilityResponse {
        distribution: spec.tag().to_string(),
        params: spec.distribution().params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        query: body.query,
        value: result.value,
        display_value: result.display_value,
        moments,
        moments_display: MomentsDisplay {
            mean: display_opt(moments.mean),
            sd: display_opt(moments.sd),
            variance: display_opt(moments.variance),
        },
        derivation: result.derivation,
        plot: result.plot,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SettingsCatalog {
    pub settings: Vec<SettingInfo>,
}

pub fn settings() -> SettingsCatalog {
    SettingsCatalog { settings: settings_catalog() }
}

/// [`SampleInput`] with raw data given as an array or as pasted text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SampleBody {
    Raw {
        data: NumberList,
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

impl SampleBody {
    fn resolve(self, index: usize) -> Result<SampleInput, ApiError> {
        Ok(match self {
            SampleBody::Raw { data } => SampleInput::Raw {
                data: data.resolve().map_err(|e| ApiError::parse(format!("samples[{index}].data"), &e))?,
            },
            SampleBody::MeanSummary { n, mean, var, sd } => SampleInput::MeanSummary { n, mean, var, sd },
            SampleBody::ProportionSummary { n, successes } => SampleInput::ProportionSummary { n, successes },
            SampleBody::VarianceSummary { n, var } => SampleInput::VarianceSummary { n, var },
        })
    }
}

impl From<SampleInput> for SampleBody {
    fn from(s: SampleInput) -> Self {
        match s {
            SampleInput::Raw { data } => SampleBody::Raw { data: data.into() },
            SampleInput::MeanSummary { n, mean, var, sd } => SampleBody::MeanSummary { n, mean, var, sd },
            SampleInput::ProportionSummary { n, successes } => SampleBody::ProportionSummary { n, successes },
            SampleInput::VarianceSummary { n, var } => SampleBody::VarianceSummary { n, var },
        }
    }
}

/// Body of `POST /inference/{setting}`. `setting` may be repeated in the
/// body but must then agree with the path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InferenceBody {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub setting: Option<String>,
    pub samples: Vec<SampleBody>,
    #[serde(default)]
    pub config: TestConfig,
}

impl InferenceBody {
    pub fn new(samples: Vec<SampleInput>, config: TestConfig) -> Self {
        InferenceBody { setting: None, samples: samples.into_iter().map(SampleBody::from).collect(), config }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceDisplay {
    pub estimate: String,
    pub standard_error: String,
    pub statistic: String,
    pub df: Vec<String>,
    pub critical_values: Vec<String>,
    pub p_value: String,
    /// "= 0.0123" or "< 0.0001".
    pub p_value_text: String,
    pub ci_lower: String,
    pub ci_upper: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceResponse {
    pub result: InferenceResult,
    pub display: InferenceDisplay,
}

pub fn inference_request(setting: &str, body: InferenceBody) -> Result<InferenceRequest, ApiError> {
    let parsed = Setting::from_tag(setting)?;
    if let Some(s) = &body.setting {
        if s != setting {
            return Err(ApiError::new(
                "setting_mismatch",
                format!("body names setting `{s}` but the path names `{setting}`"),
                Some("setting".into()),
            ));
        }
    }
    let samples = body.samples.into_iter().enumerate().map(|(i, s)| s.resolve(i)).collect::<Result<Vec<_>, _>>()?;
    Ok(InferenceRequest { setting: parsed, samples, config: body.config })
}

pub fn inference(setting: &str, body: InferenceBody) -> Result<InferenceResponse, ApiError> {
    let req = inference_request(setting, body)?;
    let result = run_test(&req)?;
    let display = InferenceDisplay {
        estimate: display4(result.estimate),
        standard_error: display_opt(result.standard_error),
        statistic: display4(result.statistic),
        df: result.df.iter().copied().map(display4).collect(),
        critical_values: result.critical_values.iter().copied().map(display4).collect(),
        p_value: display4(result.p_value),
        p_value_text: p_value_text(result.p_value),
        ci_lower: display4(result.ci.lower),
        ci_upper: display4(result.ci.upper),
    };
    Ok(InferenceResponse { result, display })
}

fn default_x_label() -> String {
    "x".to_string()
}

fn default_y_label() -> String {
    "y".to_string()
}

fn default_level() -> f64 {
    DEFAULT_LEVEL
}

fn default_true() -> bool {
    true
}

/// [`RegressionInput`] with `x` and `y` as arrays or pasted text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegressionBody {
    pub x: NumberList,
    pub y: NumberList,
    #[serde(default = "default_x_label")]
    pub x_label: String,
    #[serde(default = "default_y_label")]
    pub y_label: String,
    #[serde(default = "default_level")]
    pub confidence_level: f64,
    #[serde(default = "default_true")]
    pub include_band: bool,
}

impl RegressionBody {
    pub fn resolve(self) -> Result<RegressionInput, ApiError> {
        let x = self.x.resolve().map_err(|e| ApiError::parse("x".into(), &e))?;
        let y = self.y.resolve().map_err(|e| ApiError::parse("y".into(), &e))?;
        Ok(RegressionInput {
            x,
            y,
            x_label: self.x_label,
            y_label: self.y_label,
            confidence_level: self.confidence_level,
            include_band: self.include_band,
        })
    }
}

impl From<RegressionInput> for RegressionBody {
    fn from(i: RegressionInput) -> Self {
        RegressionBody {
            x: i.x.into(),
            y: i.y.into(),
            x_label: i.x_label,
            y_label: i.y_label,
            confidence_level: i.confidence_level,
            include_band: i.include_band,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionDisplay {
    pub beta0_hat: String,
    pub beta1_hat: String,
    pub se_beta0: String,
    pub se_beta1: String,
    pub t0: String,
    pub t1: String,
    pub p0: String,
    pub p1: String,
    pub sigma_hat: String,
    pub r_squared: String,
    pub adj_r_squared: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionResponse {
    pub analysis: RegressionAnalysis,
    pub display: RegressionDisplay,
}

pub fn regression(body: RegressionBody) -> Result<RegressionResponse, ApiError> {
    let input = body.resolve()?;
    let analysis = analyze(&input)?;
    let f = &analysis.fit;
    let display = RegressionDisplay {
        beta0_hat: display4(f.beta0_hat),
        beta1_hat: display4(f.beta1_hat),
        se_beta0: display_opt(f.se_beta0),
        se_beta1: display_opt(f.se_beta1),
        t0: display_opt(f.t0),
        t1: display_opt(f.t1),
        p0: display_opt(f.p0),
        p1: display_opt(f.p1),
        sigma_hat: display4(f.sigma_hat),
        r_squared: display_opt(f.r_squared),
        adj_r_squared: display_opt(f.adj_r_squared),
    };
    Ok(RegressionResponse { analysis, display })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportBody {
    pub input: RegressionBody,
    #[serde(default = "default_true")]
    pub include_steps: bool,
}

pub fn report(body: ReportBody) -> Result<String, ApiError> {
    let req = ReportRequest { input: body.input.resolve()?, include_steps: body.include_steps };
    Ok(regression_report(&req)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub service: String,
    pub version: String,
    pub api_version: String,
    pub core_version: String,
    pub distributions: usize,
    pub settings: usize,
    pub default_alpha: f64,
}

pub fn health() -> Health {
    Health {
        status: "ok".into(),
        service: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        api_version: API_VERSION.into(),
        core_version: statlab_core::VERSION.into(),
        distributions: catalog().len(),
        settings: settings_catalog().len(),
        default_alpha: DEFAULT_ALPHA,
    }
}
