use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use statlab_service::parse_numeric_list;

#[derive(Debug, Parser)]
#[command(
    name = "statlab",
    version,
    about = "Probabilities, hypothesis tests and linear regression, with worked derivations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Mode::Text, global = true)]
    pub mode: Mode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Json,
    Text,
    Tex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability of a tail or interval for one of the 18 distributions.
    Prob(ProbArgs),
    /// Confidence interval and hypothesis test for one of the 7 settings.
    Test(TestArgs),
    /// Simple linear regression of y on x.
    Regress(RegressArgs),
}

/// A single number in the same grammar as pasted lists.
pub fn number(s: &str) -> Result<f64, String> {
    match parse_numeric_list(s) {
        Ok(v) if v.len() == 1 => Ok(v[0]),
        Ok(_) => Err("expected a single number".into()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn param(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err("parameter name is empty".into());
    }
    Ok((name.to_string(), number(value)?))
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("query").required(true).args(["lower", "upper", "between"])))]
pub struct ProbArgs {
    /// Distribution tag, e.g. `normal` or `negative_binomial_mean_size`.
    pub distribution: String,
    /// Parameter as NAME=VALUE; repeat for each parameter.
    #[arg(long = "param", value_parser = param, value_name = "NAME=VALUE")]
    pub params: Vec<(String, f64)>,
    /// P(X ≤ x).
    #[arg(long, value_parser = number, allow_hyphen_values = true, value_name = "X")]
    pub lower: Option<f64>,
    /// P(X > x).
    #[arg(long, value_parser = number, allow_hyphen_values = true, value_name = "X")]
    pub upper: Option<f64>,
    /// P(a ≤ X ≤ b).
    #[arg(long, num_args = 2, value_parser = number, allow_hyphen_values = true, value_names = ["A", "B"])]
    pub between: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Alt {
    #[value(alias = "two_sided")]
    Two,
    Greater,
    Less,
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Setting tag, e.g. `one_mean` or `two_proportions`.
    pub setting: String,
    /// Raw observations of the first sample (comma, semicolon or newline separated).
    #[arg(long, allow_hyphen_values = true)]
    pub data: Option<String>,
    /// Raw observations of the second sample.
    #[arg(long, allow_hyphen_values = true)]
    pub data2: Option<String>,
    #[arg(long, visible_alias = "n1")]
    pub n: Option<u64>,
    #[arg(long, visible_alias = "mean1", value_parser = number, allow_hyphen_values = true)]
    pub mean: Option<f64>,
    #[arg(long, visible_alias = "var1", value_parser = number)]
    pub var: Option<f64>,
    #[arg(long, visible_alias = "sd1", value_parser = number)]
    pub sd: Option<f64>,
    #[arg(long, visible_alias = "successes1")]
    pub successes: Option<u64>,
    #[arg(long)]
    pub n2: Option<u64>,
    #[arg(long, value_parser = number, allow_hyphen_values = true)]
    pub mean2: Option<f64>,
    #[arg(long, value_parser = number)]
    pub var2: Option<f64>,
    #[arg(long, value_parser = number)]
    pub sd2: Option<f64>,
    #[arg(long)]
    pub successes2: Option<u64>,
    /// Known population SD (first sample, or the differences when paired).
    #[arg(long, value_parser = number)]
    pub sigma: Option<f64>,
    /// Known population SD of the second sample.
    #[arg(long, value_parser = number)]
    pub sigma2: Option<f64>,
    /// Pooled two-sample t test.
    #[arg(long)]
    pub equal_variances: bool,
    /// Pooled standard error in the two-proportion z test.
    #[arg(long, visible_alias = "pooled-se")]
    pub pooled: bool,
    #[arg(long, value_parser = number)]
    pub alpha: Option<f64>,
    /// Null-hypothesis value.
    #[arg(long, value_parser = number, allow_hyphen_values = true)]
    pub h0: Option<f64>,
    #[arg(long, value_enum, default_value_t = Alt::Two)]
    pub alt: Alt,
}

#[derive(Debug, Args)]
pub struct RegressArgs {
    /// Predictor values.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Response values.
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    /// Axis labels as `X_LABEL,Y_LABEL`.
    #[arg(long)]
    pub labels: Option<String>,
    /// Confidence level of the mean-response band.
    #[arg(long, value_parser = number)]
    pub level: Option<f64>,
    /// Skip the confidence band.
    #[arg(long)]
    pub no_band: bool,
    /// Write the HTML report to this file.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
    /// Leave the derivation out of the report.
    #[arg(long)]
    pub no_steps: bool,
}
