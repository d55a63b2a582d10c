//! Numerical core of the statistics engine: special functions, probability
//! distributions, hypothesis tests, simple linear regression and the
//! derivation narratives that explain each result.

pub mod distributions;
pub mod inference;
pub mod narrative;
pub mod num;
pub mod regression;
pub mod specfun;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use distributions::{
    Distribution, DistributionError, DistributionSpec, Moments, PlotData, ProbabilityQuery, ProbabilityResult,
};
pub use inference::{
    Alternative, ConfidenceInterval, Decision, InferenceError, InferenceRequest, InferenceResult, SampleInput, Setting,
    TestConfig,
};
pub use narrative::{DerivationDocument, ReportRequest, Section, Step};
pub use regression::{RegressionAnalysis, RegressionError, RegressionFit, RegressionInput};
