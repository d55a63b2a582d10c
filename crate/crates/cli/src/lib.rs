//! The `statlab` command-line tool.
//!
//! Exit codes: 0 success, 2 invalid input (including usage errors),
//! 3 I/O failure.

pub mod args;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde::Serialize;
use statlab_core::num::display4;
use statlab_core::regression::SummaryTable;
use statlab_core::{Alternative, ProbabilityQuery, TestConfig};
use statlab_service::api::{self, InferenceBody, ProbabilityBody, RegressionBody, ReportBody, SampleBody};
use statlab_service::{parse_numeric_list, ApiError, NumberList};

use args::{Alt, Cli, Command, Mode, ProbArgs, RegressArgs, TestArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_IO: i32 = 3;

enum Failure {
    Invalid(ApiError),
    Io(String),
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        Failure::Invalid(e)
    }
}

fn invalid(message: impl Into<String>, flag: &str) -> Failure {
    Failure::Invalid(ApiError::new("invalid_request", message, Some(flag.to_string())))
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INVALID
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let mode = cli.mode;
    let result = match cli.command {
        Command::Prob(a) => prob(a, mode, out),
        Command::Test(a) => test(a, mode, out),
        Command::Regress(a) => regress(a, mode, out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(err, "error: {e}");
            if mode == Mode::Json {
                let _ = print_json(out, &e);
            }
            EXIT_INVALID
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Io(format!("cannot write output: {e}"))
}

fn print_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{s}").map_err(io)
}

pub fn prob_body(a: &ProbArgs) -> ProbabilityBody {
    let query = match (a.lower, a.upper, &a.between) {
        (Some(x), _, _) => ProbabilityQuery::LowerTail { x },
        (_, Some(x), _) => ProbabilityQuery::UpperTail { x },
        (_, _, Some(ab)) => ProbabilityQuery::Interval { a: ab[0], b: ab[1] },
        _ => unreachable!("clap requires one query flag"),
    };
    ProbabilityBody {
        distribution: a.distribution.clone(),
        params: a.params.iter().cloned().collect::<BTreeMap<_, _>>(),
        query,
    }
}

fn prob(a: ProbArgs, mode: Mode, out: &mut dyn Write) -> Result<(), Failure> {
    let r = api::probability(prob_body(&a))?;
    let m = &r.moments_display;
    let text = match mode {
        Mode::Json => return print_json(out, &r),
        Mode::Text => format!(
            "value = {}\nE(X) = {}, SD(X) = {}, Var(X) = {}\n\n{}",
            r.display_value,
            m.mean,
            m.sd,
            m.variance,
            r.derivation.to_plain()
        ),
        Mode::Tex => format!(
            "% value = {}\n% E(X) = {}, SD(X) = {}, Var(X) = {}\n{}",
            r.display_value,
            m.mean,
            m.sd,
            m.variance,
            r.derivation.to_tex()
        ),
    };
    write!(out, "{text}").map_err(io)
}

struct SampleFlags<'a> {
    data: Option<&'a str>,
    n: Option<u64>,
    mean: Option<f64>,
    var: Option<f64>,
    sd: Option<f64>,
    successes: Option<u64>,
    suffix: &'a str,
}

impl SampleFlags<'_> {
    fn flag(&self, name: &str) -> String {
        format!("--{name}{}", self.suffix)
    }

    fn any_summary(&self) -> bool {
        self.n.is_some() || self.mean.is_some() || self.var.is_some() || self.sd.is_some() || self.successes.is_some()
    }

    fn build(&self) -> Result<Option<SampleBody>, Failure> {
        if let Some(text) = self.data {
            if self.any_summary() {
                return Err(invalid(
                    format!("{} cannot be combined with summary flags for the same sample", self.flag("data")),
                    &self.flag("data"),
                ));
            }
            let data =
                parse_numeric_list(text).map_err(|e| Failure::Invalid(ApiError::parse(self.flag("data"), &e)))?;
            return Ok(Some(SampleBody::Raw { data: NumberList::Values(data) }));
        }
        if !self.any_summary() {
            return Ok(None);
        }
        let n = self
            .n
            .ok_or_else(|| invalid(format!("{} is required with summary flags", self.flag("n")), &self.flag("n")))?;
        if let Some(successes) = self.successes {
            if self.mean.is_some() || self.var.is_some() || self.sd.is_some() {
                return Err(invalid(
                    format!("{} cannot be combined with mean or spread flags", self.flag("successes")),
                    &self.flag("successes"),
                ));
            }
            return Ok(Some(SampleBody::ProportionSummary { n, successes }));
        }
        match (self.mean, self.var, self.sd) {
            (Some(mean), var, sd) => Ok(Some(SampleBody::MeanSummary { n, mean, var, sd })),
            (None, Some(var), None) => Ok(Some(SampleBody::VarianceSummary { n, var })),
            (None, None, Some(sd)) => Ok(Some(SampleBody::VarianceSummary { n, var: sd * sd })),
            (None, Some(_), Some(_)) => {
                Err(invalid(format!("give only one of {} and {}", self.flag("var"), self.flag("sd")), &self.flag("sd")))
            }
            (None, None, None) => Err(invalid(
                format!(
                    "{} needs {}, {}, {} or {}",
                    self.flag("n"),
                    self.flag("mean"),
                    self.flag("var"),
                    self.flag("sd"),
                    self.flag("successes")
                ),
                &self.flag("n"),
            )),
        }
    }
}

/// The request body the `test` flags describe.
pub fn test_body(a: &TestArgs) -> Result<InferenceBody, ApiError> {
    test_body_inner(a).map_err(|f| match f {
        Failure::Invalid(e) => e,
        Failure::Io(m) => ApiError::new("internal", m, None),
    })
}

fn test_body_inner(a: &TestArgs) -> Result<InferenceBody, Failure> {
    let first = SampleFlags {
        data: a.data.as_deref(),
        n: a.n,
        mean: a.mean,
        var: a.var,
        sd: a.sd,
        successes: a.successes,
        suffix: "",
    }
    .build()?;
    let second = SampleFlags {
        data: a.data2.as_deref(),
        n: a.n2,
        mean: a.mean2,
        var: a.var2,
        sd: a.sd2,
        successes: a.successes2,
        suffix: "2",
    }
    .build()?;
    let mut samples = Vec::new();
    match (first, second) {
        (Some(f), s) => {
            samples.push(f);
            samples.extend(s);
        }
        (None, _) => return Err(invalid("no data for the first sample: give --data or summary flags", "--data")),
    }
    let mut config = TestConfig {
        h0: a.h0,
        alternative: match a.alt {
            Alt::Two => Alternative::TwoSided,
            Alt::Greater => Alternative::Greater,
            Alt::Less => Alternative::Less,
        },
        sigma: a.sigma,
        sigma2: a.sigma2,
        equal_variances: a.equal_variances,
        pooled_se: a.pooled,
        ..TestConfig::default()
    };
    if let Some(alpha) = a.alpha {
        config.alpha = alpha;
    }
    Ok(InferenceBody { setting: None, samples, config })
}

fn test(a: TestArgs, mode: Mode, out: &mut dyn Write) -> Result<(), Failure> {
    let body = test_body_inner(&a)?;
    let r = api::inference(&a.setting, body)?;
    match mode {
        Mode::Json => print_json(out, &r),
        Mode::Text => write!(out, "{}", r.result.narrative.to_plain()).map_err(io),
        Mode::Tex => write!(out, "{}", r.result.narrative.to_tex()).map_err(io),
    }
}

/// The request body the `regress` flags describe.
pub fn regress_body(a: &RegressArgs) -> Result<RegressionBody, ApiError> {
    let x = parse_numeric_list(&a.x).map_err(|e| ApiError::parse("--x".into(), &e))?;
    let y = parse_numeric_list(&a.y).map_err(|e| ApiError::parse("--y".into(), &e))?;
    let mut input = statlab_core::RegressionInput::new(x, y);
    if let Some(labels) = &a.labels {
        let (xl, yl) = labels.split_once(',').ok_or_else(|| {
            ApiError::new("invalid_request", "expected --labels X_LABEL,Y_LABEL", Some("--labels".into()))
        })?;
        input.x_label = xl.trim().to_string();
        input.y_label = yl.trim().to_string();
    }
    if let Some(level) = a.level {
        input.confidence_level = level;
    }
    input.include_band = !a.no_band;
    Ok(input.into())
}

fn table_text(t: &SummaryTable) -> String {
    let cell = |v: Option<f64>| v.map_or_else(|| "undefined".to_string(), display4);
    let mut s = format!("{:<12} {:>12} {:>12} {:>12} {:>12}\n", "Term", "Estimate", "Std. error", "t", "p-value");
    for r in &t.rows {
        s.push_str(&format!(
            "{:<12} {:>12} {:>12} {:>12} {:>12}\n",
            r.term,
            display4(r.estimate),
            cell(r.std_error),
            cell(r.t_value),
            cell(r.p_value)
        ));
    }
    s.push_str(&format!(
        "\nResidual standard error {} on {} degrees of freedom; R² = {}, adjusted R² = {}\n",
        display4(t.sigma_hat),
        t.df_resid,
        cell(t.r_squared),
        cell(t.adj_r_squared)
    ));
    s
}

fn table_tex(t: &SummaryTable) -> String {
    let cell = |v: Option<f64>| v.map_or_else(|| r"\text{undefined}".to_string(), display4);
    let mut s = String::from("\\begin{tabular}{lrrrr}\nTerm & Estimate & Std. error & $t$ & $p$ \\\\\n\\hline\n");
    for r in &t.rows {
        s.push_str(&format!(
            "{} & {} & {} & {} & {} \\\\\n",
            r.term.replace('_', r"\_"),
            display4(r.estimate),
            cell(r.std_error),
            cell(r.t_value),
            cell(r.p_value)
        ));
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn regress(a: RegressArgs, mode: Mode, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let body = regress_body(&a)?;
    let r = api::regression(body.clone())?;
    if let Some(path) = &a.report {
        let html = api::report(ReportBody { input: body, include_steps: !a.no_steps })?;
        std::fs::write(path, html).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
        let _ = writeln!(err, "report written to {}", path.display());
    }
    let an = &r.analysis;
    match mode {
        Mode::Json => print_json(out, &r),
        Mode::Text => {
            write!(out, "{}{}\n{}\n", an.derivation.to_plain(), table_text(&an.table), an.interpretation).map_err(io)
        }
        Mode::Tex => {
            write!(out, "{}{}\n% {}\n", an.derivation.to_tex(), table_tex(&an.table), an.interpretation).map_err(io)
        }
    }
}
