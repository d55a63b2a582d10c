//! Simple linear regression y = β₀ + β₁x + ε: fit, coefficient inference,
//! mean-response band and residual diagnostics.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distributions::{Distribution, DistributionError, DistributionSpec};
use crate::narrative::{self, DerivationDocument};
use crate::num::{display4, display_trimmed, NeumaierSum};

pub const MAX_POINTS: usize = 100_000;
pub const BAND_POINTS: usize = 128;
pub const DEFAULT_LEVEL: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegressionError {
    #[error("x has {x} values but y has {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("at least 3 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("at most {max} points are accepted, got {got}")]
    TooManyPoints { max: usize, got: usize },
    #[error("{axis}[{index}] is not a finite number")]
    NonFinite { axis: &'static str, index: usize },
    #[error("x must contain more than one distinct value")]
    DegenerateX,
    #[error("confidence level {0} must lie strictly between 0 and 1")]
    InvalidLevel(f64),
    #[error("the fit is exact (residual standard error 0); {0} is undefined")]
    DegenerateFit(&'static str),
    #[error(transparent)]
    Distribution(#[from] DistributionError),
}

type Result<T> = std::result::Result<T, RegressionError>;

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

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegressionInput {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    #[serde(default = "default_x_label")]
    pub x_label: String,
    #[serde(default = "default_y_label")]
    pub y_label: String,
    #[serde(default = "default_level")]
    pub confidence_level: f64,
    #[serde(default = "default_true")]
    pub include_band: bool,
}

impl RegressionInput {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        RegressionInput {
            x,
            y,
            x_label: default_x_label(),
            y_label: default_y_label(),
            confidence_level: DEFAULT_LEVEL,
            include_band: true,
        }
    }
}

/// Checks lengths, finiteness, size and that x is not constant.
pub fn validate(input: &RegressionInput) -> Result<()> {
    let (nx, ny) = (input.x.len(), input.y.len());
    if nx != ny {
        return Err(RegressionError::LengthMismatch { x: nx, y: ny });
    }
    if nx > MAX_POINTS {
        return Err(RegressionError::TooManyPoints { max: MAX_POINTS, got: nx });
    }
    if let Some(index) = input.x.iter().position(|v| !v.is_finite()) {
        return Err(RegressionError::NonFinite { axis: "x", index });
    }
    if let Some(index) = input.y.iter().position(|v| !v.is_finite()) {
        return Err(RegressionError::NonFinite { axis: "y", index });
    }
    if nx < 3 {
        if nx >= 1 && input.x.iter().all(|&v| v == input.x[0]) {
            return Err(RegressionError::DegenerateX);
        }
        return Err(RegressionError::TooFewPoints(nx));
    }
    if input.x.iter().all(|&v| v == input.x[0]) {
        return Err(RegressionError::DegenerateX);
    }
    let level = input.confidence_level;
    if !(level > 0.0 && level < 1.0) {
        return Err(RegressionError::InvalidLevel(level));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionFit {
    pub n: usize,
    pub x_mean: f64,
    pub y_mean: f64,
    /// Σxᵢyᵢ.
    pub sum_xy: f64,
    /// Σ(xᵢ − x̄)².
    pub sxx: f64,
    /// Σ(xᵢ − x̄)(yᵢ − ȳ), equal to Σxᵢyᵢ − n x̄ȳ.
    pub sxy: f64,
    /// Σ(yᵢ − ȳ)².
    pub sst: f64,
    /// Σeᵢ².
    pub sse: f64,
    pub beta0_hat: f64,
    pub beta1_hat: f64,
    pub se_beta0: Option<f64>,
    pub se_beta1: Option<f64>,
    pub t0: Option<f64>,
    pub t1: Option<f64>,
    pub p0: Option<f64>,
    pub p1: Option<f64>,
    pub sigma_hat: f64,
    pub df_resid: usize,
    /// `None` when y is constant.
    pub r_squared: Option<f64>,
    pub adj_r_squared: Option<f64>,
    pub fitted: Vec<f64>,
    pub residuals: Vec<f64>,
    /// The points lie on a line, so se, t and p are undefined.
    pub degenerate: bool,
}

fn compensated<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().collect::<NeumaierSum>().value()
}

fn two_sided_t(df: f64, t: f64) -> Result<f64> {
    let law = DistributionSpec::new(Distribution::StudentT { df })?;
    Ok((2.0 * law.cdf_unchecked(-t.abs())).min(1.0))
}

/// Least-squares fit with coefficient standard errors and tests.
pub fn fit(input: &RegressionInput) -> Result<RegressionFit> {
    validate(input)?;
    let (x, y) = (&input.x, &input.y);
    let n = x.len();
    let nf = n as f64;
    let x_mean = compensated(x.iter().copied()) / nf;
    let y_mean = compensated(y.iter().copied()) / nf;
    let sum_xy = compensated(x.iter().zip(y).map(|(a, b)| a * b));
    let sxx = compensated(x.iter().map(|&a| (a - x_mean) * (a - x_mean)));
    let sxy = compensated(x.iter().zip(y).map(|(&a, &b)| (a - x_mean) * (b - y_mean)));
    let sst = compensated(y.iter().map(|&b| (b - y_mean) * (b - y_mean)));
    let beta1 = sxy / sxx;
    let beta0 = y_mean - beta1 * x_mean;
    let fitted: Vec<f64> = x.iter().map(|&a| beta0 + beta1 * a).collect();
    let residuals: Vec<f64> = y.iter().zip(&fitted).map(|(b, f)| b - f).collect();
    let sse = compensated(residuals.iter().map(|e| e * e));
    let y_scale = compensated(y.iter().map(|b| b * b));
    let df = n - 2;
    let degenerate = sse <= 1e-28 * nf * y_scale;
    let r_squared = (sst > 0.0).then(|| 1.0 - sse / sst);
    let adj_r_squared = r_squared.map(|r2| 1.0 - (1.0 - r2) * (nf - 1.0) / (nf - 2.0));
    let (sigma_hat, se0, se1, t0, t1, p0, p1) = if degenerate {
        (0.0, None, None, None, None, None, None)
    } else {
        let sigma = (sse / df as f64).sqrt();
        let se1 = sigma / sxx.sqrt();
        let se0 = sigma * (1.0 / nf + x_mean * x_mean / sxx).sqrt();
        let (t0, t1) = (beta0 / se0, beta1 / se1);
        (
            sigma,
            Some(se0),
            Some(se1),
            Some(t0),
            Some(t1),
            Some(two_sided_t(df as f64, t0)?),
            Some(two_sided_t(df as f64, t1)?),
        )
    };
    Ok(RegressionFit {
        n,
        x_mean,
        y_mean,
        sum_xy,
        sxx,
        sxy,
        sst,
        sse,
        beta0_hat: beta0,
        beta1_hat: beta1,
        se_beta0: se0,
        se_beta1: se1,
        t0,
        t1,
        p0,
        p1,
        sigma_hat,
        df_resid: df,
        r_squared,
        adj_r_squared,
        fitted,
        residuals,
        degenerate,
    })
}

/// The four-step derivation of β̂₁ and β̂₀.
pub fn derivation(input: &RegressionInput, fit: &RegressionFit) -> DerivationDocument {
    narrative::regression_document(input, fit)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub term: String,
    pub estimate: f64,
    pub std_error: Option<f64>,
    pub t_value: Option<f64>,
    pub p_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryTable {
    pub rows: Vec<CoefficientRow>,
    pub sigma_hat: f64,
    pub df_resid: usize,
    pub r_squared: Option<f64>,
    pub adj_r_squared: Option<f64>,
    pub degenerate: bool,
}

/// Intercept and slope rows with estimate, SE, t and p.
pub fn summary_table(fit: &RegressionFit, x_label: &str) -> SummaryTable {
    SummaryTable {
        rows: vec![
            CoefficientRow {
                term: "(Intercept)".to_string(),
                estimate: fit.beta0_hat,
                std_error: fit.se_beta0,
                t_value: fit.t0,
                p_value: fit.p0,
            },
            CoefficientRow {
                term: x_label.to_string(),
                estimate: fit.beta1_hat,
                std_error: fit.se_beta1,
                t_value: fit.t1,
                p_value: fit.p1,
            },
        ],
        sigma_hat: fit.sigma_hat,
        df_resid: fit.df_resid,
        r_squared: fit.r_squared,
        adj_r_squared: fit.adj_r_squared,
        degenerate: fit.degenerate,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceBand {
    pub grid: Vec<f64>,
    pub fit: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub level: f64,
}

fn t_critical(fit: &RegressionFit, level: f64) -> Result<f64> {
    let law = DistributionSpec::new(Distribution::StudentT { df: fit.df_resid as f64 })?;
    Ok(law.quantile(1.0 - (1.0 - level) / 2.0)?)
}

/// Pointwise band for the mean response over [min x, max x].
pub fn confidence_band(input: &RegressionInput, fit: &RegressionFit) -> Result<ConfidenceBand> {
    if fit.degenerate {
        return Err(RegressionError::DegenerateFit("the confidence band"));
    }
    let level = input.confidence_level;
    let t = t_critical(fit, level)?;
    let lo = input.x.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = input.x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let step = (hi - lo) / (BAND_POINTS - 1) as f64;
    let nf = fit.n as f64;
    let mut band = ConfidenceBand {
        grid: Vec::with_capacity(BAND_POINTS),
        fit: Vec::with_capacity(BAND_POINTS),
        lower: Vec::with_capacity(BAND_POINTS),
        upper: Vec::with_capacity(BAND_POINTS),
        level,
    };
    for i in 0..BAND_POINTS {
        let x0 = if i == BAND_POINTS - 1 { hi } else { lo + step * i as f64 };
        let y0 = fit.beta0_hat + fit.beta1_hat * x0;
        let dx = x0 - fit.x_mean;
        let half = t * fit.sigma_hat * (1.0 / nf + dx * dx / fit.sxx).sqrt();
        band.grid.push(x0);
        band.fit.push(y0);
        band.lower.push(y0 - half);
        band.upper.push(y0 + half);
    }
    Ok(band)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsBundle {
    pub residuals_vs_fitted: Vec<Point>,
    /// (theoretical, sample) quantiles of the defined standardized residuals.
    pub qq_points: Vec<Point>,
    /// (fitted, √|rᵢ|).
    pub scale_location: Vec<Point>,
    pub leverage: Vec<f64>,
    /// `None` where hᵢᵢ = 1.
    pub cooks_distance: Vec<Option<f64>>,
    pub standardized_residuals: Vec<Option<f64>>,
    /// Indices with hᵢᵢ = 1, whose standardized residual is undefined.
    pub high_leverage_undefined: Vec<usize>,
}

/// Data behind residual, QQ, scale-location and leverage plots.
pub fn diagnostics(input: &RegressionInput, fit: &RegressionFit) -> Result<DiagnosticsBundle> {
    if fit.degenerate {
        return Err(RegressionError::DegenerateFit("standardized residuals"));
    }
    let nf = fit.n as f64;
    let leverage: Vec<f64> = input
        .x
        .iter()
        .map(|&x| {
            let dx = x - fit.x_mean;
            (1.0 / nf + dx * dx / fit.sxx).min(1.0)
        })
        .collect();
    let mut standardized = Vec::with_capacity(fit.n);
    let mut cooks = Vec::with_capacity(fit.n);
    let mut undefined = Vec::new();
    for (i, (&e, &h)) in fit.residuals.iter().zip(&leverage).enumerate() {
        if h >= 1.0 {
            standardized.push(None);
            cooks.push(None);
            undefined.push(i);
        } else {
            let r = e / (fit.sigma_hat * (1.0 - h).sqrt());
            standardized.push(Some(r));
            cooks.push(Some(r * r * h / (2.0 * (1.0 - h))));
        }
    }
    let mut sorted: Vec<f64> = standardized.iter().flatten().copied().collect();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len() as f64;
    let normal = DistributionSpec::new(Distribution::Normal { mu: 0.0, var: 1.0 })?;
    let qq_points = sorted
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let q = normal.quantile((i as f64 + 0.5) / m)?;
            Ok(Point { x: q, y: r })
        })
        .collect::<Result<Vec<_>>>()?;
    let residuals_vs_fitted = fit.fitted.iter().zip(&fit.residuals).map(|(&f, &e)| Point { x: f, y: e }).collect();
    let scale_location = fit
        .fitted
        .iter()
        .zip(&standardized)
        .filter_map(|(&f, r)| r.map(|r| Point { x: f, y: r.abs().sqrt() }))
        .collect();
    Ok(DiagnosticsBundle {
        residuals_vs_fitted,
        qq_points,
        scale_location,
        leverage,
        cooks_distance: cooks,
        standardized_residuals: standardized,
        high_leverage_undefined: undefined,
    })
}

fn significance_level_text(alpha: f64) -> String {
    format!("{}%", display_trimmed(alpha * 100.0))
}

/// Sentences on the slope and intercept, significant or not at `alpha`.
pub fn interpret_fit(fit: &RegressionFit, x_label: &str, y_label: &str, alpha: f64) -> String {
    let level = significance_level_text(alpha);
    let b1 = display4(fit.beta1_hat);
    let b0 = display4(fit.beta0_hat);
    let slope_effect = format!("for each unit increase in {x_label}, {y_label} changes by {b1} on average");
    let intercept_effect = format!("when {x_label} is 0, the expected {y_label} is {b0}");
    if fit.degenerate {
        return format!(
            "The points lie exactly on a line, so standard errors and p-values are undefined. The fitted slope means that {slope_effect}; {intercept_effect}."
        );
    }
    let p_text = |p: Option<f64>| narrative::p_value_text(p.unwrap_or(f64::NAN));
    let slope = match fit.p1 {
        Some(p) if p < alpha => format!(
            "The slope is significantly different from zero at the {level} level (p-value {}): {slope_effect}.",
            p_text(fit.p1)
        ),
        _ => format!(
            "There is no evidence at the {level} level that the slope differs from zero (p-value {}); the estimate suggests that {slope_effect}.",
            p_text(fit.p1)
        ),
    };
    let intercept = match fit.p0 {
        Some(p) if p < alpha => format!(
            "The intercept is significantly different from zero at the {level} level (p-value {}): {intercept_effect}.",
            p_text(fit.p0)
        ),
        _ => format!(
            "There is no evidence at the {level} level that the intercept differs from zero (p-value {}); the estimate suggests that {intercept_effect}.",
            p_text(fit.p0)
        ),
    };
    format!("{slope} {intercept}")
}

/// Everything computed for one regression request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionAnalysis {
    pub fit: RegressionFit,
    pub derivation: DerivationDocument,
    pub table: SummaryTable,
    pub band: Option<ConfidenceBand>,
    pub diagnostics: Option<DiagnosticsBundle>,
    pub interpretation: String,
}

/// Fit plus derivation, table, band (when requested and defined),
/// diagnostics (when defined) and interpretation at the 5% level.
pub fn analyze(input: &RegressionInput) -> Result<RegressionAnalysis> {
    let fit = fit(input)?;
    let derivation = derivation(input, &fit);
    let table = summary_table(&fit, &input.x_label);
    let band = if input.include_band && !fit.degenerate { Some(confidence_band(input, &fit)?) } else { None };
    let diagnostics = if fit.degenerate { None } else { Some(diagnostics(input, &fit)?) };
    let interpretation = interpret_fit(&fit, &input.x_label, &input.y_label, 0.05);
    Ok(RegressionAnalysis { fit, derivation, table, band, diagnostics, interpretation })
}
