//! The eighteen probability distributions: densities, CDFs, quantiles,
//! moments, tail-probability queries and plot data.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::narrative::{self, DerivationDocument};
use crate::num::display4;
use crate::specfun::{
    self, deviance_term, erfc_unchecked, inc_beta_complemented, log_beta_unchecked, log_gamma_unchecked,
    std_normal_cdf, std_normal_pdf, stirling_error, SpecFunError,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistributionError {
    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),
    #[error("unknown parameter `{name}` for distribution `{tag}`")]
    UnknownParameter { tag: &'static str, name: String },
    #[error("missing parameter `{name}` for distribution `{tag}`")]
    MissingParameter { tag: &'static str, name: &'static str },
    #[error("parameters `{first}` and `{second}` are mutually exclusive")]
    ConflictingParameters { first: &'static str, second: &'static str },
    #[error("parameter `{name}` = {value} violates {constraint}")]
    InvalidParameter { name: &'static str, value: f64, constraint: &'static str },
    #[error("argument must not be NaN")]
    NonFiniteArgument,
    #[error("density is unbounded at x = {x}")]
    Singularity { x: f64 },
    #[error("probability {p} is outside the open interval (0, 1)")]
    ProbabilityOutOfRange { p: f64 },
    #[error("interval lower bound {a} exceeds upper bound {b}")]
    IntervalOrder { a: f64, b: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

type Result<T> = std::result::Result<T, DistributionError>;

/// Raw distribution parameters, before validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "distribution", rename_all = "snake_case", deny_unknown_fields)]
pub enum Distribution {
    Beta { alpha: f64, beta: f64 },
    Binomial { n: u64, p: f64 },
    Cauchy { location: f64, scale: f64 },
    ChiSquare { df: f64 },
    Exponential { rate: f64 },
    Fisher { df1: f64, df2: f64 },
    Gamma { shape: f64, rate: f64 },
    GeometricTrials { p: f64 },
    GeometricFailures { p: f64 },
    Hypergeometric { population: u64, successes: u64, draws: u64 },
    Logistic { location: f64, scale: f64 },
    LogNormal { meanlog: f64, sdlog: f64 },
    NegativeBinomialSizeProb { size: f64, prob: f64 },
    NegativeBinomialMeanSize { mu: f64, size: f64 },
    Normal { mu: f64, var: f64 },
    Poisson { lambda: f64 },
    StudentT { df: f64 },
    Weibull { shape: f64, scale: f64 },
}

/// Canonical identifiers, in menu (alphabetical) order.
pub const TAGS: [&str; 18] = [
    "beta",
    "binomial",
    "cauchy",
    "chi_square",
    "exponential",
    "fisher",
    "gamma",
    "geometric_failures",
    "geometric_trials",
    "hypergeometric",
    "log_normal",
    "logistic",
    "negative_binomial_mean_size",
    "negative_binomial_size_prob",
    "normal",
    "poisson",
    "student_t",
    "weibull",
];

/// Largest hypergeometric population accepted; its CDF is a direct sum.
pub const MAX_HYPERGEOMETRIC_POPULATION: u64 = 10_000_000;
const MAX_EXACT_INTEGER: u64 = 1 << 53;
/// Discrete plots with more support points than this are thinned.
pub const MAX_DISCRETE_PLOT_POINTS: usize = 2_001;
pub const CONTINUOUS_PLOT_POINTS: usize = 512;
pub const PLOT_LOWER_QUANTILE: f64 = 0.0005;
pub const PLOT_UPPER_QUANTILE: f64 = 0.9995;

impl Distribution {
    pub fn tag(&self) -> &'static str {
        match self {
            Distribution::Beta { .. } => "beta",
            Distribution::Binomial { .. } => "binomial",
            Distribution::Cauchy { .. } => "cauchy",
            Distribution::ChiSquare { .. } => "chi_square",
            Distribution::Exponential { .. } => "exponential",
            Distribution::Fisher { .. } => "fisher",
            Distribution::Gamma { .. } => "gamma",
            Distribution::GeometricTrials { .. } => "geometric_trials",
            Distribution::GeometricFailures { .. } => "geometric_failures",
            Distribution::Hypergeometric { .. } => "hypergeometric",
            Distribution::Logistic { .. } => "logistic",
            Distribution::LogNormal { .. } => "log_normal",
            Distribution::NegativeBinomialSizeProb { .. } => "negative_binomial_size_prob",
            Distribution::NegativeBinomialMeanSize { .. } => "negative_binomial_mean_size",
            Distribution::Normal { .. } => "normal",
            Distribution::Poisson { .. } => "poisson",
            Distribution::StudentT { .. } => "student_t",
            Distribution::Weibull { .. } => "weibull",
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(
            self,
            Distribution::Binomial { .. }
                | Distribution::GeometricTrials { .. }
                | Distribution::GeometricFailures { .. }
                | Distribution::Hypergeometric { .. }
                | Distribution::NegativeBinomialSizeProb { .. }
                | Distribution::NegativeBinomialMeanSize { .. }
                | Distribution::Poisson { .. }
        )
    }

    /// Named parameter values in catalog order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Distribution::Beta { alpha, beta } => vec![("alpha", alpha), ("beta", beta)],
            Distribution::Binomial { n, p } => vec![("n", n as f64), ("p", p)],
            Distribution::Cauchy { location, scale } | Distribution::Logistic { location, scale } => {
                vec![("location", location), ("scale", scale)]
            }
            Distribution::ChiSquare { df } | Distribution::StudentT { df } => vec![("df", df)],
            Distribution::Exponential { rate } => vec![("rate", rate)],
            Distribution::Fisher { df1, df2 } => vec![("df1", df1), ("df2", df2)],
            Distribution::Gamma { shape, rate } => vec![("shape", shape), ("rate", rate)],
            Distribution::GeometricTrials { p } | Distribution::GeometricFailures { p } => {
                vec![("p", p)]
            }
            Distribution::Hypergeometric { population, successes, draws } => {
                vec![("population", population as f64), ("successes", successes as f64), ("draws", draws as f64)]
            }
            Distribution::LogNormal { meanlog, sdlog } => {
                vec![("meanlog", meanlog), ("sdlog", sdlog)]
            }
            Distribution::NegativeBinomialSizeProb { size, prob } => {
                vec![("size", size), ("prob", prob)]
            }
            Distribution::NegativeBinomialMeanSize { mu, size } => vec![("mu", mu), ("size", size)],
            Distribution::Normal { mu, var } => vec![("mu", mu), ("var", var)],
            Distribution::Poisson { lambda } => vec![("lambda", lambda)],
            Distribution::Weibull { shape, scale } => vec![("shape", shape), ("scale", scale)],
        }
    }
}

fn check(ok: bool, name: &'static str, value: f64, constraint: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(DistributionError::InvalidParameter { name, value, constraint })
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    check(v.is_finite() && v > 0.0, name, v, "> 0")
}

fn finite(name: &'static str, v: f64) -> Result<()> {
    check(v.is_finite(), name, v, "finite")
}

fn validate(d: &Distribution) -> Result<()> {
    match *d {
        Distribution::Beta { alpha, beta } => {
            positive("alpha", alpha)?;
            positive("beta", beta)
        }
        Distribution::Binomial { n, p } => {
            check((1..=MAX_EXACT_INTEGER).contains(&n), "n", n as f64, "a positive integer")?;
            check((0.0..=1.0).contains(&p), "p", p, "0 <= p <= 1")
        }
        Distribution::Cauchy { location, scale } | Distribution::Logistic { location, scale } => {
            finite("location", location)?;
            positive("scale", scale)
        }
        Distribution::ChiSquare { df } | Distribution::StudentT { df } => positive("df", df),
        Distribution::Exponential { rate } => positive("rate", rate),
        Distribution::Fisher { df1, df2 } => {
            positive("df1", df1)?;
            positive("df2", df2)
        }
        Distribution::Gamma { shape, rate } => {
            positive("shape", shape)?;
            positive("rate", rate)
        }
        Distribution::GeometricTrials { p } | Distribution::GeometricFailures { p } => {
            check(p > 0.0 && p <= 1.0, "p", p, "0 < p <= 1")
        }
        Distribution::Hypergeometric { population, successes, draws } => {
            check(
                (1..=MAX_HYPERGEOMETRIC_POPULATION).contains(&population),
                "population",
                population as f64,
                "1 <= N <= 10000000",
            )?;
            check(successes <= population, "successes", successes as f64, "0 <= K <= N")?;
            check(draws <= population, "draws", draws as f64, "0 <= n <= N")
        }
        Distribution::LogNormal { meanlog, sdlog } => {
            finite("meanlog", meanlog)?;
            positive("sdlog", sdlog)
        }
        Distribution::NegativeBinomialSizeProb { size, prob } => {
            positive("size", size)?;
            check(prob > 0.0 && prob <= 1.0, "prob", prob, "0 < prob <= 1")
        }
        Distribution::NegativeBinomialMeanSize { mu, size } => {
            positive("mu", mu)?;
            positive("size", size)
        }
        Distribution::Normal { mu, var } => {
            finite("mu", mu)?;
            positive("var", var)
        }
        Distribution::Poisson { lambda } => positive("lambda", lambda),
        Distribution::Weibull { shape, scale } => {
            positive("shape", shape)?;
            positive("scale", scale)
        }
    }
}

/// A distribution whose parameters have been validated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Distribution", into = "Distribution")]
pub struct DistributionSpec(Distribution);

impl TryFrom<Distribution> for DistributionSpec {
    type Error = DistributionError;

    fn try_from(d: Distribution) -> Result<Self> {
        validate(&d)?;
        Ok(DistributionSpec(d))
    }
}

impl From<DistributionSpec> for Distribution {
    fn from(s: DistributionSpec) -> Self {
        s.0
    }
}

/// Probability requested by the student.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProbabilityQuery {
    /// P(X ≤ x)
    LowerTail {
        #[serde(with = "crate::num::extended")]
        x: f64,
    },
    /// P(X > x)
    UpperTail {
        #[serde(with = "crate::num::extended")]
        x: f64,
    },
    /// P(a ≤ X ≤ b)
    Interval {
        #[serde(with = "crate::num::extended")]
        a: f64,
        #[serde(with = "crate::num::extended")]
        b: f64,
    },
}

impl ProbabilityQuery {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ProbabilityQuery::LowerTail { x } | ProbabilityQuery::UpperTail { x } => {
                if x.is_nan() {
                    return Err(DistributionError::NonFiniteArgument);
                }
            }
            ProbabilityQuery::Interval { a, b } => {
                if a.is_nan() || b.is_nan() {
                    return Err(DistributionError::NonFiniteArgument);
                }
                if a > b {
                    return Err(DistributionError::IntervalOrder { a, b });
                }
            }
        }
        Ok(())
    }
}

/// Mean, standard deviation and variance; `None` where undefined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: Option<f64>,
    pub sd: Option<f64>,
    pub variance: Option<f64>,
}

impl Moments {
    fn from_mean_var(mean: Option<f64>, variance: Option<f64>) -> Self {
        Moments { mean, sd: variance.map(f64::sqrt), variance }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShadedRange {
    pub from: f64,
    pub to: f64,
}

/// Curve or bar data for a density/mass plot with shaded regions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotData {
    pub support_grid: Vec<f64>,
    pub density_or_mass: Vec<f64>,
    pub shaded: Vec<ShadedRange>,
    pub is_discrete: bool,
    /// Observed statistic on rejection-region plots.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marker: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityResult {
    pub value: f64,
    pub display_value: String,
    pub derivation: DerivationDocument,
    pub plot: PlotData,
}

fn normal_quantile_std(p: f64) -> Result<f64> {
    Ok(specfun::invert_cdf_newton(std_normal_cdf, std_normal_pdf, p, (-1.0, 1.0))?)
}

impl DistributionSpec {
    pub fn new(d: Distribution) -> Result<Self> {
        Self::try_from(d)
    }

    /// Builds a spec from a catalog tag and named parameters.
    ///
    /// The Normal family takes `mu` and exactly one of `var` or `sd`.
    pub fn from_params(tag: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let info = catalog()
            .into_iter()
            .find(|f| f.tag == tag)
            .ok_or_else(|| DistributionError::UnknownDistribution(tag.to_string()))?;
        for name in params.keys() {
            let known = info.params.iter().any(|p| p.name == name) || info.alternatives.iter().any(|p| p.name == name);
            if !known {
                return Err(DistributionError::UnknownParameter { tag: info.tag, name: name.clone() });
            }
        }
        let get = |name: &'static str| -> Result<f64> {
            params.get(name).copied().ok_or(DistributionError::MissingParameter { tag: info.tag, name })
        };
        let int = |name: &'static str| -> Result<u64> {
            let v = get(name)?;
            if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= MAX_EXACT_INTEGER as f64 {
                Ok(v as u64)
            } else {
                Err(DistributionError::InvalidParameter { name, value: v, constraint: "a non-negative integer" })
            }
        };
        let d = match info.tag {
            "beta" => Distribution::Beta { alpha: get("alpha")?, beta: get("beta")? },
            "binomial" => Distribution::Binomial { n: int("n")?, p: get("p")? },
            "cauchy" => Distribution::Cauchy { location: get("location")?, scale: get("scale")? },
            "chi_square" => Distribution::ChiSquare { df: get("df")? },
            "exponential" => Distribution::Exponential { rate: get("rate")? },
            "fisher" => Distribution::Fisher { df1: get("df1")?, df2: get("df2")? },
            "gamma" => Distribution::Gamma { shape: get("shape")?, rate: get("rate")? },
            "geometric_trials" => Distribution::GeometricTrials { p: get("p")? },
            "geometric_failures" => Distribution::GeometricFailures { p: get("p")? },
            "hypergeometric" => Distribution::Hypergeometric {
                population: int("population")?,
                successes: int("successes")?,
                draws: int("draws")?,
            },
            "logistic" => Distribution::Logistic { location: get("location")?, scale: get("scale")? },
            "log_normal" => Distribution::LogNormal { meanlog: get("meanlog")?, sdlog: get("sdlog")? },
            "negative_binomial_size_prob" => {
                Distribution::NegativeBinomialSizeProb { size: get("size")?, prob: get("prob")? }
            }
            "negative_binomial_mean_size" => {
                Distribution::NegativeBinomialMeanSize { mu: get("mu")?, size: get("size")? }
            }
            "normal" => {
                let var = match (params.get("var"), params.get("sd")) {
                    (Some(_), Some(_)) => {
                        return Err(DistributionError::ConflictingParameters { first: "var", second: "sd" })
                    }
                    (Some(&v), None) => v,
                    (None, Some(&sd)) => {
                        positive("sd", sd)?;
                        sd * sd
                    }
                    (None, None) => return Err(DistributionError::MissingParameter { tag: "normal", name: "var" }),
                };
                Distribution::Normal { mu: get("mu")?, var }
            }
            "poisson" => Distribution::Poisson { lambda: get("lambda")? },
            "student_t" => Distribution::StudentT { df: get("df")? },
            "weibull" => Distribution::Weibull { shape: get("shape")?, scale: get("scale")? },
            other => return Err(DistributionError::UnknownDistribution(other.to_string())),
        };
        Self::new(d)
    }

    pub fn distribution(&self) -> &Distribution {
        &self.0
    }

    pub fn tag(&self) -> &'static str {
        self.0.tag()
    }

    pub fn is_discrete(&self) -> bool {
        self.0.is_discrete()
    }

    /// Closed support bounds (integer-valued for discrete families).
    pub fn support(&self) -> (f64, f64) {
        match self.0 {
            Distribution::Beta { .. } => (0.0, 1.0),
            Distribution::Binomial { n, .. } => (0.0, n as f64),
            Distribution::Cauchy { .. }
            | Distribution::Logistic { .. }
            | Distribution::Normal { .. }
            | Distribution::StudentT { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            Distribution::ChiSquare { .. }
            | Distribution::Exponential { .. }
            | Distribution::Fisher { .. }
            | Distribution::Gamma { .. }
            | Distribution::LogNormal { .. }
            | Distribution::Weibull { .. }
            | Distribution::GeometricFailures { .. }
            | Distribution::NegativeBinomialSizeProb { .. }
            | Distribution::NegativeBinomialMeanSize { .. }
            | Distribution::Poisson { .. } => (0.0, f64::INFINITY),
            Distribution::GeometricTrials { .. } => (1.0, f64::INFINITY),
            Distribution::Hypergeometric { population, successes, draws } => {
                (draws.saturating_sub(population - successes) as f64, draws.min(successes) as f64)
            }
        }
    }

    /// Density (continuous) or mass (discrete) at `x`.
    ///
    /// Returns [`DistributionError::Singularity`] at the poles of densities
    /// such as Beta(α < 1) at 0.
    pub fn pdf_or_pmf(&self, x: f64) -> Result<f64> {
        if x.is_nan() {
            return Err(DistributionError::NonFiniteArgument);
        }
        let v = self.density_unchecked(x);
        if v.is_infinite() {
            return Err(DistributionError::Singularity { x });
        }
        Ok(v)
    }

    /// Density or mass; `+∞` at poles.
    pub(crate) fn density_unchecked(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return 0.0;
        }
        if self.is_discrete() {
            if x.fract() != 0.0 {
                return 0.0;
            }
            let (lo, hi) = self.support();
            if x < lo || x > hi {
                return 0.0;
            }
            return self.pmf_at(x);
        }
        match self.0 {
            Distribution::Beta { alpha, beta } => {
                if !(0.0..=1.0).contains(&x) {
                    0.0
                } else if x == 0.0 {
                    edge_density(alpha, beta)
                } else if x == 1.0 {
                    edge_density(beta, alpha)
                } else {
                    ((alpha - 1.0) * x.ln() + (beta - 1.0) * (-x).ln_1p() - log_beta_unchecked(alpha, beta)).exp()
                }
            }
            Distribution::Cauchy { location, scale } => {
                let z = (x - location) / scale;
                1.0 / (PI * scale * (1.0 + z * z))
            }
            Distribution::ChiSquare { df } => gamma_density(df / 2.0, 0.5, x),
            Distribution::Exponential { rate } => {
                if x < 0.0 {
                    0.0
                } else {
                    rate * (-rate * x).exp()
                }
            }
            Distribution::Fisher { df1, df2 } => {
                if x < 0.0 {
                    0.0
                } else if x == 0.0 {
                    match df1.partial_cmp(&2.0) {
                        Some(std::cmp::Ordering::Less) => f64::INFINITY,
                        Some(std::cmp::Ordering::Equal) => 1.0,
                        _ => 0.0,
                    }
                } else {
                    let h1 = df1 / 2.0;
                    (h1 * (df1 / df2).ln() + (h1 - 1.0) * x.ln()
                        - (h1 + df2 / 2.0) * (df1 * x / df2).ln_1p()
                        - log_beta_unchecked(h1, df2 / 2.0))
                    .exp()
                }
            }
            Distribution::Gamma { shape, rate } => gamma_density(shape, rate, x),
            Distribution::Logistic { location, scale } => {
                let e = (-((x - location) / scale).abs()).exp();
                e / (scale * (1.0 + e) * (1.0 + e))
            }
            Distribution::LogNormal { meanlog, sdlog } => {
                if x <= 0.0 {
                    0.0
                } else {
                    let z = (x.ln() - meanlog) / sdlog;
                    std_normal_pdf(z) / (x * sdlog)
                }
            }
            Distribution::Normal { mu, var } => {
                let sd = var.sqrt();
                std_normal_pdf((x - mu) / sd) / sd
            }
            Distribution::StudentT { df } => (log_gamma_unchecked((df + 1.0) / 2.0)
                - log_gamma_unchecked(df / 2.0)
                - 0.5 * (df * PI).ln()
                - (df + 1.0) / 2.0 * (x * x / df).ln_1p())
            .exp(),
            Distribution::Weibull { shape, scale } => {
                if x < 0.0 {
                    0.0
                } else if x == 0.0 {
                    match shape.partial_cmp(&1.0) {
                        Some(std::cmp::Ordering::Less) => f64::INFINITY,
                        Some(std::cmp::Ordering::Equal) => 1.0 / scale,
                        _ => 0.0,
                    }
                } else {
                    let z = x / scale;
                    (shape / scale) * z.powf(shape - 1.0) * (-z.powf(shape)).exp()
                }
            }
            _ => unreachable!("discrete families handled above"),
        }
    }

    /// Mass at an integer support point.
    fn pmf_at(&self, k: f64) -> f64 {
        match self.0 {
            Distribution::Binomial { n, p } => {
                let n = n as f64;
                if p == 0.0 {
                    return if k == 0.0 { 1.0 } else { 0.0 };
                }
                if p == 1.0 {
                    return if k == n { 1.0 } else { 0.0 };
                }
                binomial_mass(k, n, p, 1.0 - p)
            }
            Distribution::GeometricTrials { p } => geometric_mass(p, k - 1.0),
            Distribution::GeometricFailures { p } => geometric_mass(p, k),
            Distribution::Hypergeometric { population, successes, draws } => {
                let (big_n, big_k, n) = (population as f64, successes as f64, draws as f64);
                hypergeometric_mass(k, big_k, big_n - big_k, n)
            }
            Distribution::NegativeBinomialSizeProb { size, prob } => neg_binomial_mass(size, prob, 1.0 - prob, k),
            Distribution::NegativeBinomialMeanSize { mu, size } => {
                neg_binomial_mass(size, size / (size + mu), mu / (size + mu), k)
            }
            Distribution::Poisson { lambda } => poisson_mass(k, lambda),
            _ => unreachable!("continuous families have no mass"),
        }
    }

    /// P(X ≤ x). Discrete CDFs floor non-integer `x`.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if x.is_nan() {
            return Err(DistributionError::NonFiniteArgument);
        }
        Ok(self.cdf_unchecked(x))
    }

    pub(crate) fn cdf_unchecked(&self, x: f64) -> f64 {
        if x == f64::NEG_INFINITY {
            return 0.0;
        }
        if x == f64::INFINITY {
            return 1.0;
        }
        if self.is_discrete() {
            let k = x.floor();
            let (lo, hi) = self.support();
            if k < lo {
                return 0.0;
            }
            if k >= hi {
                return 1.0;
            }
            return self.discrete_cdf_at(k);
        }
        match self.0 {
            Distribution::Beta { alpha, beta } => {
                if x <= 0.0 {
                    0.0
                } else if x >= 1.0 {
                    1.0
                } else {
                    inc_beta_complemented(alpha, beta, x, 1.0 - x)
                }
            }
            Distribution::Cauchy { location, scale } => 0.5 + ((x - location) / scale).atan() / PI,
            Distribution::ChiSquare { df } => lower_gamma(df / 2.0, x / 2.0),
            Distribution::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
            Distribution::Fisher { df1, df2 } => {
                if x <= 0.0 {
                    0.0
                } else {
                    let denom = df1 * x + df2;
                    inc_beta_complemented(df1 / 2.0, df2 / 2.0, df1 * x / denom, df2 / denom)
                }
            }
            Distribution::Gamma { shape, rate } => lower_gamma(shape, rate * x),
            Distribution::Logistic { location, scale } => 1.0 / (1.0 + (-(x - location) / scale).exp()),
            Distribution::LogNormal { meanlog, sdlog } => {
                if x <= 0.0 {
                    0.0
                } else {
                    std_normal_cdf((x.ln() - meanlog) / sdlog)
                }
            }
            Distribution::Normal { mu, var } => 0.5 * erfc_unchecked(-(x - mu) / (2.0 * var).sqrt()),
            Distribution::StudentT { df } => student_t_cdf(df, x),
            Distribution::Weibull { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-(x / scale).powf(shape)).exp_m1()
                }
            }
            _ => unreachable!("discrete families handled above"),
        }
    }

    /// CDF at an integer `k` strictly inside the support.
    fn discrete_cdf_at(&self, k: f64) -> f64 {
        match self.0 {
            Distribution::Binomial { n, p } => {
                let n = n as f64;
                if p == 0.0 {
                    1.0
                } else if p == 1.0 {
                    0.0
                } else {
                    inc_beta_complemented(n - k, k + 1.0, 1.0 - p, p)
                }
            }
            Distribution::GeometricTrials { p } => -(k * (-p).ln_1p()).exp_m1(),
            Distribution::GeometricFailures { p } => -((k + 1.0) * (-p).ln_1p()).exp_m1(),
            Distribution::Hypergeometric { .. } => self.hypergeometric_cdf(k),
            Distribution::NegativeBinomialSizeProb { size, prob } => {
                if prob == 1.0 {
                    1.0
                } else {
                    inc_beta_complemented(size, k + 1.0, prob, 1.0 - prob)
                }
            }
            Distribution::NegativeBinomialMeanSize { mu, size } => {
                inc_beta_complemented(size, k + 1.0, size / (size + mu), mu / (size + mu))
            }
            Distribution::Poisson { lambda } => specfun::reg_inc_gamma_upper(k + 1.0, lambda).unwrap_or(f64::NAN),
            _ => unreachable!("continuous families handled elsewhere"),
        }
    }

    fn hypergeometric_cdf(&self, k: f64) -> f64 {
        let (lo, hi) = self.support();
        let mean = self.moments().mean.unwrap_or(lo);
        let mut acc = 0.0;
        if k < mean {
            let mut j = lo;
            while j <= k {
                acc += self.pmf_at(j);
                j += 1.0;
            }
            acc.min(1.0)
        } else {
            let mut j = k + 1.0;
            while j <= hi {
                acc += self.pmf_at(j);
                j += 1.0;
            }
            (1.0 - acc).max(0.0)
        }
    }

    /// P(X > x), evaluated without cancellation for the families used as
    /// test-statistic laws.
    pub fn sf(&self, x: f64) -> Result<f64> {
        if x.is_nan() {
            return Err(DistributionError::NonFiniteArgument);
        }
        Ok(self.sf_unchecked(x))
    }

    pub(crate) fn sf_unchecked(&self, x: f64) -> f64 {
        if x == f64::NEG_INFINITY {
            return 1.0;
        }
        if x == f64::INFINITY {
            return 0.0;
        }
        match self.0 {
            Distribution::Normal { mu, var } => 0.5 * erfc_unchecked((x - mu) / (2.0 * var).sqrt()),
            Distribution::StudentT { df } => student_t_cdf(df, -x),
            Distribution::ChiSquare { df } => upper_gamma(df / 2.0, x / 2.0),
            Distribution::Gamma { shape, rate } => upper_gamma(shape, rate * x),
            Distribution::Fisher { df1, df2 } => {
                if x <= 0.0 {
                    1.0
                } else {
                    let denom = df1 * x + df2;
                    inc_beta_complemented(df2 / 2.0, df1 / 2.0, df2 / denom, df1 * x / denom)
                }
            }
            _ => 1.0 - self.cdf_unchecked(x),
        }
    }

    /// Inverse CDF. Continuous: x with F(x) = p. Discrete: the smallest
    /// support point with F(x) ≥ p.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(DistributionError::ProbabilityOutOfRange { p });
        }
        if self.is_discrete() {
            return Ok(self.discrete_quantile(p));
        }
        let cdf = |x: f64| self.cdf_unchecked(x);
        let pdf = |x: f64| self.density_unchecked(x);
        let q = match self.0 {
            Distribution::Cauchy { location, scale } => location + scale * (PI * (p - 0.5)).tan(),
            Distribution::Exponential { rate } => -(-p).ln_1p() / rate,
            Distribution::Logistic { location, scale } => location + scale * (p / (1.0 - p)).ln(),
            Distribution::Weibull { shape, scale } => scale * (-(-p).ln_1p()).powf(1.0 / shape),
            Distribution::Normal { mu, var } => {
                let z0 = normal_quantile_std(p)?;
                let sd = var.sqrt();
                specfun::invert_cdf_newton(cdf, pdf, p, (mu + sd * (z0 - 1e-6), mu + sd * (z0 + 1e-6)))?
            }
            Distribution::LogNormal { meanlog, sdlog } => (meanlog + sdlog * normal_quantile_std(p)?).exp(),
            Distribution::Beta { .. } => specfun::invert_cdf_newton(cdf, pdf, p, (0.0, 1.0))?,
            Distribution::ChiSquare { df } => {
                specfun::invert_cdf_newton(cdf, pdf, p, (0.0, df + 10.0 * (2.0 * df).sqrt() + 10.0))?
            }
            Distribution::Gamma { shape, rate } => {
                specfun::invert_cdf_newton(cdf, pdf, p, (0.0, (shape + 10.0 * shape.sqrt() + 10.0) / rate))?
            }
            Distribution::Fisher { .. } => specfun::invert_cdf_newton(cdf, pdf, p, (0.0, 10.0))?,
            Distribution::StudentT { .. } => specfun::invert_cdf_newton(cdf, pdf, p, (-10.0, 10.0))?,
            _ => unreachable!("discrete families handled above"),
        };
        Ok(q)
    }

    fn discrete_quantile(&self, p: f64) -> f64 {
        let (lo, hi) = self.support();
        // Absorb rounding in F so that p = F(k) exactly maps back to k.
        let p = p * (1.0 - 64.0 * f64::EPSILON);
        if self.cdf_unchecked(lo) >= p {
            return lo;
        }
        // Find an upper end with F ≥ p, then binary search.
        let moments = self.moments();
        let guess = match (moments.mean, moments.sd) {
            (Some(m), Some(s)) if m.is_finite() && s.is_finite() => (m + 10.0 * s).ceil(),
            _ => lo + 1.0,
        };
        let mut upper = guess.max(lo + 1.0).min(hi);
        let mut lower = lo;
        while self.cdf_unchecked(upper) < p {
            lower = upper;
            if upper >= hi {
                return hi;
            }
            let next = lo + 2.0 * (upper - lo) + 1.0;
            upper = if next.is_finite() { next.min(hi) } else { hi };
            if upper >= 9.0e15 {
                return upper;
            }
        }
        // F(lower) < p ≤ F(upper)
        while upper - lower > 1.0 {
            let mid = (lower + 0.5 * (upper - lower)).floor();
            if self.cdf_unchecked(mid) >= p {
                upper = mid;
            } else {
                lower = mid;
            }
        }
        upper
    }

    /// Closed-form moments; `None` where the moment does not exist.
    pub fn moments(&self) -> Moments {
        let both = |m: f64, v: f64| Moments::from_mean_var(Some(m), Some(v));
        match self.0 {
            Distribution::Beta { alpha, beta } => {
                let s = alpha + beta;
                both(alpha / s, alpha * beta / (s * s * (s + 1.0)))
            }
            Distribution::Binomial { n, p } => {
                let n = n as f64;
                both(n * p, n * p * (1.0 - p))
            }
            Distribution::Cauchy { .. } => Moments::from_mean_var(None, None),
            Distribution::ChiSquare { df } => both(df, 2.0 * df),
            Distribution::Exponential { rate } => both(1.0 / rate, 1.0 / (rate * rate)),
            Distribution::Fisher { df1, df2 } => {
                let mean = (df2 > 2.0).then(|| df2 / (df2 - 2.0));
                let var = (df2 > 4.0)
                    .then(|| 2.0 * df2 * df2 * (df1 + df2 - 2.0) / (df1 * (df2 - 2.0) * (df2 - 2.0) * (df2 - 4.0)));
                Moments::from_mean_var(mean, var)
            }
            Distribution::Gamma { shape, rate } => both(shape / rate, shape / (rate * rate)),
            Distribution::GeometricTrials { p } => both(1.0 / p, (1.0 - p) / (p * p)),
            Distribution::GeometricFailures { p } => both((1.0 - p) / p, (1.0 - p) / (p * p)),
            Distribution::Hypergeometric { population, successes, draws } => {
                let (big_n, big_k, n) = (population as f64, successes as f64, draws as f64);
                let mean = n * big_k / big_n;
                let var = if population > 1 {
                    n * (big_k / big_n) * ((big_n - big_k) / big_n) * ((big_n - n) / (big_n - 1.0))
                } else {
                    0.0
                };
                both(mean, var)
            }
            Distribution::Logistic { location, scale } => both(location, scale * scale * PI * PI / 3.0),
            Distribution::LogNormal { meanlog, sdlog } => {
                let s2 = sdlog * sdlog;
                both((meanlog + s2 / 2.0).exp(), s2.exp_m1() * (2.0 * meanlog + s2).exp())
            }
            Distribution::NegativeBinomialSizeProb { size, prob } => {
                let q = 1.0 - prob;
                both(size * q / prob, size * q / (prob * prob))
            }
            Distribution::NegativeBinomialMeanSize { mu, size } => both(mu, mu + mu * mu / size),
            Distribution::Normal { mu, var } => both(mu, var),
            Distribution::Poisson { lambda } => both(lambda, lambda),
            Distribution::StudentT { df } => {
                Moments::from_mean_var((df > 1.0).then_some(0.0), (df > 2.0).then(|| df / (df - 2.0)))
            }
            Distribution::Weibull { shape, scale } => {
                let g1 = log_gamma_unchecked(1.0 + 1.0 / shape).exp();
                let g2 = log_gamma_unchecked(1.0 + 2.0 / shape).exp();
                both(scale * g1, scale * scale * (g2 - g1 * g1))
            }
        }
    }

    /// Probability of the query region, with its derivation and plot.
    pub fn probability(&self, query: &ProbabilityQuery) -> Result<ProbabilityResult> {
        query.validate()?;
        let value = self.query_value(query);
        let moments = self.moments();
        let derivation = narrative::distribution_document(self, query, value, &moments);
        let plot = self.plot_data(query)?;
        Ok(ProbabilityResult { value, display_value: display4(value), derivation, plot })
    }

    fn query_value(&self, query: &ProbabilityQuery) -> f64 {
        let v = match *query {
            ProbabilityQuery::LowerTail { x } => self.cdf_unchecked(x),
            ProbabilityQuery::UpperTail { x } => 1.0 - self.cdf_unchecked(x),
            ProbabilityQuery::Interval { a, b } => {
                self.cdf_unchecked(b) - self.cdf_unchecked(self.interval_lower_edge(a))
            }
        };
        v.clamp(0.0, 1.0)
    }

    /// Point whose CDF is subtracted for P(a ≤ X ≤ b): `a` itself for
    /// continuous laws, ⌈a⌉ − 1 for discrete ones so that the atom at `a`
    /// is included.
    pub fn interval_lower_edge(&self, a: f64) -> f64 {
        if self.is_discrete() && a.is_finite() {
            a.ceil() - 1.0
        } else {
            a
        }
    }

    /// Density or mass curve over the central 99.9% of the law, extended to
    /// the query bounds, with the query region shaded.
    pub fn plot_data(&self, query: &ProbabilityQuery) -> Result<PlotData> {
        query.validate()?;
        let bounds: Vec<f64> = match *query {
            ProbabilityQuery::LowerTail { x } => vec![x],
            ProbabilityQuery::UpperTail { x } if self.is_discrete() => vec![x, x.floor() + 1.0],
            ProbabilityQuery::UpperTail { x } => vec![x],
            ProbabilityQuery::Interval { a, b } => vec![a, b],
        };
        let (grid, density) = self.plot_grid(&bounds)?;
        let first = grid[0];
        let last = grid[grid.len() - 1];
        let range = if self.is_discrete() {
            match *query {
                ProbabilityQuery::LowerTail { x } => (first, x.floor()),
                ProbabilityQuery::UpperTail { x } => (x.floor() + 1.0, last),
                ProbabilityQuery::Interval { a, b } => (a.ceil(), b.floor()),
            }
        } else {
            match *query {
                ProbabilityQuery::LowerTail { x } => (first, x),
                ProbabilityQuery::UpperTail { x } => (x, last),
                ProbabilityQuery::Interval { a, b } => (a, b),
            }
        };
        let shaded = clamp_range(range, first, last).into_iter().collect();
        Ok(PlotData {
            support_grid: grid,
            density_or_mass: density,
            shaded,
            is_discrete: self.is_discrete(),
            marker: None,
        })
    }

    /// Plot grid covering [F⁻¹(0.0005), F⁻¹(0.9995)] extended to `include`.
    pub(crate) fn plot_grid(&self, include: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        let mut lo = self.quantile(PLOT_LOWER_QUANTILE)?;
        let mut hi = self.quantile(PLOT_UPPER_QUANTILE)?;
        let (s_lo, s_hi) = self.support();
        for &b in include.iter().filter(|b| b.is_finite()) {
            if self.is_discrete() {
                let k = b.floor().clamp(s_lo, s_hi);
                lo = lo.min(k);
                hi = hi.max(k);
            } else {
                lo = lo.min(b);
                hi = hi.max(b);
            }
        }
        if self.is_discrete() {
            let count = hi - lo + 1.0;
            let stride = if count > MAX_DISCRETE_PLOT_POINTS as f64 {
                (count / (MAX_DISCRETE_PLOT_POINTS - 1) as f64).ceil()
            } else {
                1.0
            };
            let mut grid = Vec::new();
            let mut k = lo;
            while k <= hi && grid.len() < MAX_DISCRETE_PLOT_POINTS {
                grid.push(k);
                k += stride;
            }
            if *grid.last().unwrap() < hi && grid.len() < MAX_DISCRETE_PLOT_POINTS + 1 {
                grid.push(hi);
            }
            let mass = grid.iter().map(|&k| self.pmf_at(k)).collect();
            return Ok((grid, mass));
        }
        if hi <= lo {
            hi = lo + lo.abs().max(1.0) * 1e-9;
        }
        let mut grid: Vec<f64> = Vec::with_capacity(CONTINUOUS_PLOT_POINTS);
        let step = (hi - lo) / (CONTINUOUS_PLOT_POINTS - 1) as f64;
        for i in 0..CONTINUOUS_PLOT_POINTS {
            let x = if i == CONTINUOUS_PLOT_POINTS - 1 { hi } else { lo + step * i as f64 };
            if grid.last().map_or(true, |&prev| x > prev) {
                grid.push(x);
            }
        }
        let mut density: Vec<f64> = grid.iter().map(|&x| self.density_unchecked(x)).collect();
        // Poles are drawn at the height of the tallest finite point.
        let peak = density.iter().copied().filter(|d| d.is_finite()).fold(0.0, f64::max);
        for d in density.iter_mut().filter(|d| !d.is_finite()) {
            *d = peak;
        }
        Ok((grid, density))
    }
}

fn clamp_range((from, to): (f64, f64), first: f64, last: f64) -> Option<ShadedRange> {
    let from = from.max(first);
    let to = to.min(last);
    (from <= to).then_some(ShadedRange { from, to })
}

fn edge_density(near: f64, far: f64) -> f64 {
    match near.partial_cmp(&1.0) {
        Some(std::cmp::Ordering::Less) => f64::INFINITY,
        Some(std::cmp::Ordering::Equal) => far,
        _ => 0.0,
    }
}

fn gamma_density(shape: f64, rate: f64, x: f64) -> f64 {
    if x < 0.0 {
        0.0
    } else if x == 0.0 {
        edge_density(shape, rate)
    } else {
        (shape * rate.ln() + (shape - 1.0) * x.ln() - rate * x - log_gamma_unchecked(shape)).exp()
    }
}

fn lower_gamma(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        specfun::reg_inc_gamma_lower(a, x).unwrap_or(f64::NAN)
    }
}

fn upper_gamma(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        1.0
    } else {
        specfun::reg_inc_gamma_upper(a, x).unwrap_or(f64::NAN)
    }
}

fn student_t_cdf(df: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 0.5;
    }
    let t2 = t * t;
    let (x, y) = if t2.is_infinite() { (0.0, 1.0) } else { (df / (df + t2), 1.0 / (1.0 + df / t2)) };
    let tail = 0.5 * inc_beta_complemented(df / 2.0, 0.5, x, y);
    if t > 0.0 {
        1.0 - tail
    } else {
        tail
    }
}

fn geometric_mass(p: f64, failures: f64) -> f64 {
    if failures < 0.0 {
        return 0.0;
    }
    if p == 1.0 {
        return if failures == 0.0 { 1.0 } else { 0.0 };
    }
    (p.ln() + failures * (-p).ln_1p()).exp()
}

fn neg_binomial_mass(size: f64, prob: f64, q: f64, k: f64) -> f64 {
    if q == 0.0 {
        return if k == 0.0 { 1.0 } else { 0.0 };
    }
    if k == 0.0 {
        return (size * prob.ln()).exp();
    }
    // r/(r+k) · Bin(r; r + k, p), as in Loader's formulation.
    size / (size + k) * binomial_mass(size, size + k, prob, q)
}

/// Binomial-type mass C(n, x) p^x q^(n−x) for real n ≥ x ≥ 0, via
/// Loader's saddle-point expansion.
fn binomial_mass(x: f64, n: f64, p: f64, q: f64) -> f64 {
    if p == 0.0 {
        return if x == 0.0 { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if x == n { 1.0 } else { 0.0 };
    }
    if x == 0.0 {
        if n == 0.0 {
            return 1.0;
        }
        let lc = if p < 0.1 { -deviance_term(n, n * q) - n * p } else { n * q.ln() };
        return lc.exp();
    }
    if x == n {
        let lc = if q < 0.1 { -deviance_term(n, n * p) - n * q } else { n * p.ln() };
        return lc.exp();
    }
    if x < 0.0 || x > n {
        return 0.0;
    }
    let lc = stirling_error(n)
        - stirling_error(x)
        - stirling_error(n - x)
        - deviance_term(x, n * p)
        - deviance_term(n - x, n * q);
    let lf = (2.0 * PI).ln() + x.ln() + (-x / n).ln_1p();
    (lc - 0.5 * lf).exp()
}

fn poisson_mass(x: f64, lambda: f64) -> f64 {
    if x == 0.0 {
        return (-lambda).exp();
    }
    (-stirling_error(x) - deviance_term(x, lambda)).exp() / (2.0 * PI * x).sqrt()
}

/// C(r, x) C(b, n − x) / C(r + b, n) as a ratio of binomial masses.
fn hypergeometric_mass(x: f64, r: f64, b: f64, n: f64) -> f64 {
    if x < 0.0 || x > r || n - x > b {
        return 0.0;
    }
    if n == 0.0 {
        return if x == 0.0 { 1.0 } else { 0.0 };
    }
    let p = n / (r + b);
    let q = (r + b - n) / (r + b);
    let p1 = binomial_mass(x, r, p, q);
    let p2 = binomial_mass(n - x, b, p, q);
    let p3 = binomial_mass(n, r + b, p, q);
    p1 * p2 / p3
}

/// Catalog description of one parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamInfo {
    pub name: &'static str,
    pub symbol: &'static str,
    pub constraint: &'static str,
    pub integer: bool,
}

/// Catalog entry for one distribution family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyInfo {
    pub tag: &'static str,
    pub name: &'static str,
    pub discrete: bool,
    pub params: Vec<ParamInfo>,
    /// Parameters accepted in place of a canonical one (Normal `sd`).
    pub alternatives: Vec<ParamInfo>,
    pub support: &'static str,
}

const fn param(name: &'static str, symbol: &'static str, constraint: &'static str, integer: bool) -> ParamInfo {
    ParamInfo { name, symbol, constraint, integer }
}

/// The eighteen families in menu order.
pub fn catalog() -> Vec<FamilyInfo> {
    let fam = |tag, name, discrete, params: Vec<ParamInfo>, support| FamilyInfo {
        tag,
        name,
        discrete,
        params,
        alternatives: Vec::new(),
        support,
    };
    vec![
        fam(
            "beta",
            "Beta",
            false,
            vec![param("alpha", "α", "> 0", false), param("beta", "β", "> 0", false)],
            "0 ≤ x ≤ 1",
        ),
        fam(
            "binomial",
            "Binomial",
            true,
            vec![param("n", "n", "integer ≥ 1", true), param("p", "p", "0 ≤ p ≤ 1", false)],
            "x = 0, 1, …, n",
        ),
        fam(
            "cauchy",
            "Cauchy",
            false,
            vec![param("location", "x₀", "real", false), param("scale", "γ", "> 0", false)],
            "−∞ < x < ∞",
        ),
        fam("chi_square", "Chi-square", false, vec![param("df", "k", "> 0", false)], "x ≥ 0"),
        fam("exponential", "Exponential", false, vec![param("rate", "λ", "> 0", false)], "x ≥ 0"),
        fam(
            "fisher",
            "Fisher",
            false,
            vec![param("df1", "d₁", "> 0", false), param("df2", "d₂", "> 0", false)],
            "x ≥ 0",
        ),
        fam(
            "gamma",
            "Gamma",
            false,
            vec![param("shape", "α", "> 0", false), param("rate", "β", "> 0", false)],
            "x ≥ 0",
        ),
        fam(
            "geometric_failures",
            "Geometric (failures before the first success)",
            true,
            vec![param("p", "p", "0 < p ≤ 1", false)],
            "x = 0, 1, 2, …",
        ),
        fam(
            "geometric_trials",
            "Geometric (trial of the first success)",
            true,
            vec![param("p", "p", "0 < p ≤ 1", false)],
            "x = 1, 2, 3, …",
        ),
        fam(
            "hypergeometric",
            "Hypergeometric",
            true,
            vec![
                param("population", "N", "integer 1 ≤ N ≤ 10⁷", true),
                param("successes", "K", "integer 0 ≤ K ≤ N", true),
                param("draws", "n", "integer 0 ≤ n ≤ N", true),
            ],
            "x = max(0, n − (N − K)), …, min(n, K)",
        ),
        fam(
            "log_normal",
            "Log-Normal",
            false,
            vec![param("meanlog", "μ", "real", false), param("sdlog", "σ", "> 0", false)],
            "x > 0",
        ),
        fam(
            "logistic",
            "Logistic",
            false,
            vec![param("location", "μ", "real", false), param("scale", "s", "> 0", false)],
            "−∞ < x < ∞",
        ),
        fam(
            "negative_binomial_mean_size",
            "Negative Binomial (mean μ, size r)",
            true,
            vec![param("mu", "μ", "> 0", false), param("size", "r", "> 0", false)],
            "x = 0, 1, 2, …",
        ),
        fam(
            "negative_binomial_size_prob",
            "Negative Binomial (size r, probability p)",
            true,
            vec![param("size", "r", "> 0", false), param("prob", "p", "0 < p ≤ 1", false)],
            "x = 0, 1, 2, …",
        ),
        FamilyInfo {
            tag: "normal",
            name: "Normal",
            discrete: false,
            params: vec![param("mu", "μ", "real", false), param("var", "σ²", "> 0", false)],
            alternatives: vec![param("sd", "σ", "> 0", false)],
            support: "−∞ < x < ∞",
        },
        fam("poisson", "Poisson", true, vec![param("lambda", "λ", "> 0", false)], "x = 0, 1, 2, …"),
        fam("student_t", "Student's t", false, vec![param("df", "ν", "> 0", false)], "−∞ < x < ∞"),
        fam(
            "weibull",
            "Weibull",
            false,
            vec![param("shape", "k", "> 0", false), param("scale", "λ", "> 0", false)],
            "x ≥ 0",
        ),
    ]
}
