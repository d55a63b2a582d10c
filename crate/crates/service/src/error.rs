//! The error document returned by every endpoint and by the CLI in JSON mode.

use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::{Deserialize, Serialize};
use statlab_core::specfun::SpecFunError;
use statlab_core::{DistributionError, InferenceError, RegressionError};

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
}

/// Every code an endpoint can return.
pub const CODES: &[&str] = &[
    "unknown_distribution",
    "unknown_parameter",
    "missing_parameter",
    "conflicting_parameters",
    "invalid_parameter",
    "invalid_argument",
    "singular_density",
    "probability_out_of_range",
    "interval_order",
    "numerical_failure",
    "unknown_setting",
    "setting_mismatch",
    "invalid_alpha",
    "wrong_sample_count",
    "incompatible_sample",
    "too_few_observations",
    "too_many_observations",
    "non_finite_observation",
    "non_binary_observation",
    "invalid_summary",
    "missing_null",
    "invalid_null",
    "invalid_option",
    "paired_length_mismatch",
    "degenerate_variance",
    "length_mismatch",
    "too_few_points",
    "too_many_points",
    "non_finite_value",
    "degenerate_x",
    "invalid_level",
    "degenerate_fit",
    "parse_error",
    "invalid_request",
    "unsupported_media_type",
    "payload_too_large",
    "not_found",
    "method_not_allowed",
    "internal",
];

impl ApiError {
    pub fn new(code: &str, message: impl Into<String>, field: Option<String>) -> Self {
        debug_assert!(CODES.contains(&code), "undocumented code {code}");
        ApiError { code: code.to_string(), message: message.into(), field }
    }

    pub fn status(&self) -> StatusCode {
        match self.code.as_str() {
            "unknown_distribution" | "unknown_setting" | "not_found" => StatusCode::NOT_FOUND,
            "payload_too_large" => StatusCode::PAYLOAD_TOO_LARGE,
            "unsupported_media_type" => StatusCode::UNSUPPORTED_MEDIA_TYPE,
            "method_not_allowed" => StatusCode::METHOD_NOT_ALLOWED,
            "internal" => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        }
    }

    pub fn parse(field: String, e: &ParseError) -> Self {
        ApiError::new("parse_error", e.to_string(), Some(field))
    }

    fn without_field(mut self) -> Self {
        self.field = None;
        self
    }
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.field {
            Some(field) => write!(f, "{} ({field}): {}", self.code, self.message),
            None => write!(f, "{}: {}", self.code, self.message),
        }
    }
}

impl std::error::Error for ApiError {}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status(), Json(self)).into_response()
    }
}

fn param(name: &str) -> Option<String> {
    Some(format!("params.{name}"))
}

impl From<DistributionError> for ApiError {
    fn from(e: DistributionError) -> Self {
        use DistributionError as E;
        let message = e.to_string();
        let (code, field) = match &e {
            E::UnknownDistribution(_) => ("unknown_distribution", Some("distribution".into())),
            E::UnknownParameter { name, .. } => ("unknown_parameter", param(name)),
            E::MissingParameter { name, .. } => ("missing_parameter", param(name)),
            E::ConflictingParameters { second, .. } => ("conflicting_parameters", param(second)),
            E::InvalidParameter { name, .. } => ("invalid_parameter", param(name)),
            E::NonFiniteArgument => ("invalid_argument", Some("query".into())),
            E::Singularity { .. } => ("singular_density", Some("query".into())),
            E::ProbabilityOutOfRange { .. } => ("probability_out_of_range", Some("query".into())),
            E::IntervalOrder { .. } => ("interval_order", Some("query".into())),
            E::SpecFun(SpecFunError::Domain { .. } | SpecFunError::BracketFailure { .. }) => {
                ("numerical_failure", None)
            }
        };
        ApiError::new(code, message, field)
    }
}

fn sample(index: usize) -> String {
    format!("samples[{index}]")
}

impl From<InferenceError> for ApiError {
    fn from(e: InferenceError) -> Self {
        use InferenceError as E;
        let message = e.to_string();
        let (code, field) = match &e {
            E::UnknownSetting(_) => ("unknown_setting", Some("setting".to_string())),
            E::InvalidAlpha(_) => ("invalid_alpha", Some("config.alpha".into())),
            E::WrongSampleCount { .. } => ("wrong_sample_count", Some("samples".into())),
            E::IncompatibleSample { index, .. } => ("incompatible_sample", Some(format!("{}.type", sample(*index)))),
            E::TooFewObservations { index, .. } => ("too_few_observations", Some(sample(*index))),
            E::TooManyObservations { index, .. } => ("too_many_observations", Some(sample(*index))),
            E::NonFiniteObservation { index, position } => {
                ("non_finite_observation", Some(format!("{}.data[{position}]", sample(*index))))
            }
            E::NonBinaryObservation { index, position, .. } => {
                ("non_binary_observation", Some(format!("{}.data[{position}]", sample(*index))))
            }
            E::InvalidSummary { index, field, .. } => ("invalid_summary", Some(format!("{}.{field}", sample(*index)))),
            E::MissingNull(_) => ("missing_null", Some("config.h0".into())),
            E::InvalidNull { .. } => ("invalid_null", Some("config.h0".into())),
            E::InvalidOption { option, .. } => ("invalid_option", Some(format!("config.{option}"))),
            E::PairedLengthMismatch { .. } => ("paired_length_mismatch", Some("samples".into())),
            E::DegenerateVariance(_) => ("degenerate_variance", Some("samples".into())),
            E::Distribution(d) => return ApiError::from(d.clone()).without_field(),
        };
        ApiError::new(code, message, field)
    }
}

impl From<RegressionError> for ApiError {
    fn from(e: RegressionError) -> Self {
        use RegressionError as E;
        let message = e.to_string();
        let (code, field) = match &e {
            E::LengthMismatch { .. } => ("length_mismatch", Some("y".to_string())),
            E::TooFewPoints(_) => ("too_few_points", Some("x".into())),
            E::TooManyPoints { .. } => ("too_many_points", Some("x".into())),
            E::NonFinite { axis, index } => ("non_finite_value", Some(format!("{axis}[{index}]"))),
            E::DegenerateX => ("degenerate_x", Some("x".into())),
            E::InvalidLevel(_) => ("invalid_level", Some("confidence_level".into())),
            E::DegenerateFit(_) => ("degenerate_fit", None),
            E::Distribution(d) => return ApiError::from(d.clone()).without_field(),
        };
        ApiError::new(code, message, field)
    }
}
