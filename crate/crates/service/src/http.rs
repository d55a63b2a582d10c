//! Router, extractors and configuration.

use std::any::Any;
use std::net::{IpAddr, Ipv4Addr, SocketAddr};

use axum::extract::rejection::JsonRejection;
use axum::extract::{DefaultBodyLimit, FromRequest, Path, Request};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use thiserror::Error;
use tower_http::catch_panic::CatchPanicLayer;
use tower_http::cors::{AllowOrigin, CorsLayer};
use tower_http::trace::TraceLayer;

use crate::api::{self, InferenceBody, ProbabilityBody, RegressionBody, ReportBody};
use crate::error::ApiError;

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_MAX_BODY_BYTES: usize = 8 * 1024 * 1024;
pub const DEFAULT_ALLOWED_ORIGINS: &str = "http://localhost:5173";
pub const REPORT_FILENAME: &str = "regression-report.html";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub bind: IpAddr,
    pub port: u16,
    pub max_body_bytes: usize,
    /// `["*"]` allows any origin; empty disables CORS headers.
    pub allowed_origins: Vec<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bind: IpAddr::V4(Ipv4Addr::LOCALHOST),
            port: DEFAULT_PORT,
            max_body_bytes: DEFAULT_MAX_BODY_BYTES,
            allowed_origins: vec![DEFAULT_ALLOWED_ORIGINS.to_string()],
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{var}: cannot use `{value}`: {reason}")]
pub struct ConfigError {
    pub var: &'static str,
    pub value: String,
    pub reason: String,
}

impl Config {
    /// Reads `STATLAB_BIND`, `STATLAB_PORT`, `STATLAB_MAX_BODY_BYTES` and
    /// `STATLAB_ALLOWED_ORIGINS` (comma-separated) through `lookup`.
    pub fn from_lookup(lookup: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        fn parsed<T: std::str::FromStr>(var: &'static str, raw: &str) -> Result<T, ConfigError>
        where
            T::Err: std::fmt::Display,
        {
            raw.trim().parse().map_err(|e: T::Err| ConfigError { var, value: raw.to_string(), reason: e.to_string() })
        }
        let mut c = Config::default();
        if let Some(v) = lookup("STATLAB_BIND") {
            c.bind = parsed("STATLAB_BIND", &v)?;
        }
        if let Some(v) = lookup("STATLAB_PORT") {
            c.port = parsed("STATLAB_PORT", &v)?;
        }
        if let Some(v) = lookup("STATLAB_MAX_BODY_BYTES") {
            c.max_body_bytes = parsed("STATLAB_MAX_BODY_BYTES", &v)?;
            if c.max_body_bytes == 0 {
                return Err(ConfigError { var: "STATLAB_MAX_BODY_BYTES", value: v, reason: "must be positive".into() });
            }
        }
        if let Some(v) = lookup("STATLAB_ALLOWED_ORIGINS") {
            c.allowed_origins = v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
            for o in &c.allowed_origins {
                if HeaderValue::from_str(o).is_err() {
                    return Err(ConfigError {
                        var: "STATLAB_ALLOWED_ORIGINS",
                        value: o.clone(),
                        reason: "not a valid header value".into(),
                    });
                }
            }
        }
        Ok(c)
    }

    pub fn from_env() -> Result<Self, ConfigError> {
        Self::from_lookup(|k| std::env::var(k).ok())
    }

    pub fn addr(&self) -> SocketAddr {
        SocketAddr::new(self.bind, self.port)
    }
}

/// JSON body extractor whose failures are [`ApiError`] documents.
pub struct ApiJson<T>(pub T);

impl<S, T> FromRequest<S> for ApiJson<T>
where
    T: DeserializeOwned,
    S: Send + Sync,
{
    type Rejection = ApiError;

    async fn from_request(req: Request, state: &S) -> Result<Self, Self::Rejection> {
        match Json::<T>::from_request(req, state).await {
            Ok(Json(v)) => Ok(ApiJson(v)),
            Err(rejection) => Err(json_rejection(rejection)),
        }
    }
}

fn json_rejection(r: JsonRejection) -> ApiError {
    match r.status() {
        StatusCode::PAYLOAD_TOO_LARGE => {
            ApiError::new("payload_too_large", "request body exceeds the configured size limit", None)
        }
        StatusCode::UNSUPPORTED_MEDIA_TYPE => {
            ApiError::new("unsupported_media_type", "expected `Content-Type: application/json`", None)
        }
        _ => ApiError::new("invalid_request", r.body_text(), None),
    }
}

async fn distributions() -> Response {
    Json(api::distributions()).into_response()
}

async fn probability(ApiJson(body): ApiJson<ProbabilityBody>) -> Result<Response, ApiError> {
    Ok(Json(api::probability(body)?).into_response())
}

async fn settings() -> Response {
    Json(api::settings()).into_response()
}

async fn inference(
    Path(setting): Path<String>,
    body: Result<ApiJson<InferenceBody>, ApiError>,
) -> Result<Response, ApiError> {
    // An unknown setting is a 404 even when the body is also wrong.
    statlab_core::Setting::from_tag(&setting)?;
    let ApiJson(body) = body?;
    Ok(Json(api::inference(&setting, body)?).into_response())
}

async fn regression(ApiJson(body): ApiJson<RegressionBody>) -> Result<Response, ApiError> {
    Ok(Json(api::regression(body)?).into_response())
}

async fn report(ApiJson(body): ApiJson<ReportBody>) -> Result<Response, ApiError> {
    let html = api::report(body)?;
    Ok((
        [
            (header::CONTENT_TYPE, "text/html; charset=utf-8".to_string()),
            (header::CONTENT_DISPOSITION, format!("attachment; filename=\"{REPORT_FILENAME}\"")),
        ],
        html,
    )
        .into_response())
}

async fn health() -> Response {
    Json(api::health()).into_response()
}

async fn not_found() -> ApiError {
    ApiError::new("not_found", "no such endpoint", None)
}

async fn method_not_allowed() -> ApiError {
    ApiError::new("method_not_allowed", "method not allowed on this endpoint", None)
}

fn panic_response(_: Box<dyn Any + Send + 'static>) -> Response {
    tracing::error!("handler panicked");
    ApiError::new("internal", "internal error", None).into_response()
}

fn cors(origins: &[String]) -> Option<CorsLayer> {
    if origins.is_empty() {
        return None;
    }
    let allow = if origins.iter().any(|o| o == "*") {
        AllowOrigin::any()
    } else {
        AllowOrigin::list(origins.iter().filter_map(|o| HeaderValue::from_str(o).ok()))
    };
    Some(
        CorsLayer::new()
            .allow_origin(allow)
            .allow_methods([Method::GET, Method::POST])
            .allow_headers([header::CONTENT_TYPE]),
    )
}

/// The `/api/v1` router with body limit, CORS, panic guard and request logs.
pub fn router(config: &Config) -> Router {
    let api = Router::new()
        .route("/distributions", get(distributions))
        .route("/probability", post(probability))
        .route("/inference/settings", get(settings))
        .route("/inference/{setting}", post(inference))
        .route("/regression", post(regression))
        .route("/regression/report", post(report))
        .route("/health", get(health));
    let mut app = Router::new()
        .nest("/api/v1", api)
        .fallback(not_found)
        .method_not_allowed_fallback(method_not_allowed)
        .layer(DefaultBodyLimit::max(config.max_body_bytes))
        .layer(CatchPanicLayer::custom(panic_response));
    if let Some(c) = cors(&config.allowed_origins) {
        app = app.layer(c);
    }
    app.layer(TraceLayer::new_for_http())
}
