use crate::inference::{Alternative, Decision, InferenceResult, Method, SampleSummary, Setting, StatisticFamily};
use crate::num::{display4, display_trimmed};

use super::{DerivationDocument, Section, Step};

pub const DATA_TITLE: &str = "Data";
pub const CI_TITLE: &str = "Confidence interval";
pub const TEST_TITLE: &str = "Hypothesis test";
pub const INTERPRETATION_TITLE: &str = "Interpretation";

/// p-values below this display as "< 0.0001".
pub const SMALL_P: f64 = 0.00005;
const SHOWN_OBSERVATIONS: usize = 20;

/// p-value as shown to students.
pub fn p_value_text(p: f64) -> String {
    if p < SMALL_P {
        "< 0.0001".to_string()
    } else {
        format!("= {}", display4(p))
    }
}

fn parameter_symbol(setting: Setting) -> &'static str {
    match setting {
        Setting::OneMean => r"\mu",
        Setting::TwoMeansIndependent => r"\mu_1 - \mu_2",
        Setting::TwoMeansPaired => r"\mu_D",
        Setting::OneProportion => "p",
        Setting::TwoProportions => "p_1 - p_2",
        Setting::OneVariance => r"\sigma^2",
        Setting::TwoVariances => r"\sigma_1^2/\sigma_2^2",
    }
}

fn parameter_phrase(setting: Setting) -> &'static str {
    match setting {
        Setting::OneMean => "the population mean",
        Setting::TwoMeansIndependent => "the difference between the population means (μ₁ − μ₂)",
        Setting::TwoMeansPaired => "the mean of the paired differences",
        Setting::OneProportion => "the population proportion",
        Setting::TwoProportions => "the difference between the population proportions (p₁ − p₂)",
        Setting::OneVariance => "the population variance",
        Setting::TwoVariances => "the ratio of the population variances (σ₁²/σ₂²)",
    }
}

fn relation(alt: Alternative) -> &'static str {
    match alt {
        Alternative::TwoSided => r"\neq",
        Alternative::Greater => r"\gt",
        Alternative::Less => r"\lt",
    }
}

fn direction_phrase(alt: Alternative) -> &'static str {
    match alt {
        Alternative::TwoSided => "different from",
        Alternative::Greater => "greater than",
        Alternative::Less => "less than",
    }
}

/// Plain-language conclusion.
pub fn interpret(result: &InferenceResult, alpha: f64) -> String {
    let verdict = match result.decision {
        Decision::Reject => "we reject H₀",
        Decision::FailToReject => "we do not reject H₀",
    };
    let evidence = match result.decision {
        Decision::Reject => "The data provide evidence",
        Decision::FailToReject => "The data do not provide sufficient evidence",
    };
    let mut text = format!(
        "At the α = {} significance level {verdict} (p-value {}). {evidence} that {} is {} {}.",
        display_trimmed(alpha),
        p_value_text(result.p_value),
        parameter_phrase(result.setting),
        direction_phrase(result.alternative),
        display_trimmed(result.h0),
    );
    if result.approximation_warning {
        text.push_str(" Note: n·p̂ or n·(1 − p̂) is below 5, so the normal approximation may be inaccurate.");
    }
    text
}

fn sample_step(setting: Setting, s: &SampleSummary, suffix: &str) -> Step {
    let sub = if suffix.is_empty() { String::new() } else { format!("_{suffix}") };
    let key = |k: &str| format!("{k}{suffix}");
    let n = key("n");
    match (setting.kind(), setting) {
        (_, Setting::TwoMeansPaired) => Step::new(
            r"d_i = x_{1i} - x_{2i}, \quad n = <<n>>, \quad \bar{d} = <<mean>>, \quad s_d = <<sd>>",
            &[("n", s.n as f64), ("mean", s.mean.unwrap_or(f64::NAN)), ("sd", s.sd.unwrap_or(f64::NAN))],
        ),
        (crate::inference::SampleKind::Mean, _) => {
            let (m, sd) = (key("mean"), key("sd"));
            Step::new(
                format!(r"n{sub} = <<{n}>>, \quad \bar{{x}}{sub} = <<{m}>>, \quad s{sub} = <<{sd}>>"),
                &[
                    (n.as_str(), s.n as f64),
                    (m.as_str(), s.mean.unwrap_or(f64::NAN)),
                    (sd.as_str(), s.sd.unwrap_or(f64::NAN)),
                ],
            )
        }
        (crate::inference::SampleKind::Proportion, _) => {
            let (x, p) = (key("successes"), key("p_hat"));
            Step::new(
                format!(
                    r"n{sub} = <<{n}>>, \quad x{sub} = <<{x}>>, \quad \hat{{p}}{sub} = \frac{{x{sub}}}{{n{sub}}} = <<{p}>>"
                ),
                &[
                    (n.as_str(), s.n as f64),
                    (x.as_str(), s.successes.unwrap_or(0) as f64),
                    (p.as_str(), s.proportion.unwrap_or(f64::NAN)),
                ],
            )
        }
        (crate::inference::SampleKind::Variance, _) => {
            let v = key("var");
            Step::new(
                format!(r"n{sub} = <<{n}>>, \quad s{sub}^2 = <<{v}>>"),
                &[(n.as_str(), s.n as f64), (v.as_str(), s.var.unwrap_or(f64::NAN))],
            )
        }
    }
}

fn data_section(r: &InferenceResult) -> Section {
    let steps = if r.summary_stats.len() == 1 {
        vec![sample_step(r.setting, &r.summary_stats[0], "")]
    } else {
        r.summary_stats.iter().enumerate().map(|(i, s)| sample_step(r.setting, s, &(i + 1).to_string())).collect()
    };
    let section = Section::new(DATA_TITLE, steps);
    if r.observations.is_empty() {
        return section;
    }
    let lines: Vec<String> = r
        .observations
        .iter()
        .enumerate()
        .map(|(i, obs)| {
            let shown: Vec<String> = obs.iter().take(SHOWN_OBSERVATIONS).map(|v| v.to_string()).collect();
            let more = if obs.len() > SHOWN_OBSERVATIONS { ", …" } else { "" };
            let label = if r.observations.len() > 1 { format!("Sample {} ", i + 1) } else { String::new() };
            format!("{label}({} observations): {}{more}", obs.len(), shown.join(", "))
        })
        .collect();
    section.with_text(lines.join("\n"))
}

/// Symbolic and numeric forms of estimate and standard error.
struct LocationForms {
    estimate_sym: &'static str,
    estimate_num: &'static str,
    se_sym: &'static str,
    se_num: &'static str,
}

fn location_forms(method: Method) -> LocationForms {
    match method {
        Method::T => LocationForms {
            estimate_sym: r"\bar{x}",
            estimate_num: "<<mean>>",
            se_sym: r"s/\sqrt{n}",
            se_num: r"<<sd>>/\sqrt{<<n>>}",
        },
        Method::Z => LocationForms {
            estimate_sym: r"\bar{x}",
            estimate_num: "<<mean>>",
            se_sym: r"\sigma/\sqrt{n}",
            se_num: r"<<sigma>>/\sqrt{<<n>>}",
        },
        Method::PairedT => LocationForms {
            estimate_sym: r"\bar{d}",
            estimate_num: "<<mean>>",
            se_sym: r"s_d/\sqrt{n}",
            se_num: r"<<sd>>/\sqrt{<<n>>}",
        },
        Method::PairedZ => LocationForms {
            estimate_sym: r"\bar{d}",
            estimate_num: "<<mean>>",
            se_sym: r"\sigma_d/\sqrt{n}",
            se_num: r"<<sigma>>/\sqrt{<<n>>}",
        },
        Method::PooledT => LocationForms {
            estimate_sym: r"(\bar{x}_1 - \bar{x}_2)",
            estimate_num: "(<<mean1>> - <<mean2>>)",
            se_sym: r"s_p \sqrt{1/n_1 + 1/n_2}",
            se_num: r"<<sp>> \sqrt{1/<<n1>> + 1/<<n2>>}",
        },
        Method::WelchT => LocationForms {
            estimate_sym: r"(\bar{x}_1 - \bar{x}_2)",
            estimate_num: "(<<mean1>> - <<mean2>>)",
            se_sym: r"\sqrt{s_1^2/n_1 + s_2^2/n_2}",
            se_num: r"\sqrt{<<var1>>/<<n1>> + <<var2>>/<<n2>>}",
        },
        Method::UnpooledZ | Method::PooledZ => LocationForms {
            estimate_sym: r"(\hat{p}_1 - \hat{p}_2)",
            estimate_num: "(<<p_hat1>> - <<p_hat2>>)",
            se_sym: r"\sqrt{\hat{p}_1(1 - \hat{p}_1)/n_1 + \hat{p}_2(1 - \hat{p}_2)/n_2}",
            se_num: r"\sqrt{<<p_hat1>>(1 - <<p_hat1>>)/<<n1>> + <<p_hat2>>(1 - <<p_hat2>>)/<<n2>>}",
        },
        Method::ChiSquare | Method::F => unreachable!("scale settings have no location form"),
    }
}

/// Two-sample z for means uses known σ's.
fn location_forms_for(r: &InferenceResult) -> LocationForms {
    match (r.setting, r.method) {
        (Setting::TwoMeansIndependent, Method::Z) => LocationForms {
            estimate_sym: r"(\bar{x}_1 - \bar{x}_2)",
            estimate_num: "(<<mean1>> - <<mean2>>)",
            se_sym: r"\sqrt{\sigma_1^2/n_1 + \sigma_2^2/n_2}",
            se_num: r"\sqrt{<<sigma1>>^2/<<n1>> + <<sigma2>>^2/<<n2>>}",
        },
        (Setting::OneProportion, _) => LocationForms {
            estimate_sym: r"\hat{p}",
            estimate_num: "<<p_hat>>",
            se_sym: r"\sqrt{\hat{p}(1 - \hat{p})/n}",
            se_num: r"\sqrt{<<p_hat>>(1 - <<p_hat>>)/<<n>>}",
        },
        (_, m) => location_forms(m),
    }
}

/// Values every template may reference.
fn base_values(r: &InferenceResult) -> Vec<(String, f64)> {
    let mut v: Vec<(String, f64)> = vec![
        ("alpha".into(), r.alpha),
        ("h0".into(), r.h0),
        ("statistic".into(), r.statistic),
        ("p_value".into(), r.p_value),
        ("estimate".into(), r.estimate),
        ("lower".into(), r.ci.lower),
        ("upper".into(), r.ci.upper),
    ];
    let suffixes: Vec<String> = if r.summary_stats.len() == 1 {
        vec![String::new()]
    } else {
        (1..=r.summary_stats.len()).map(|i| i.to_string()).collect()
    };
    for (s, suf) in r.summary_stats.iter().zip(&suffixes) {
        v.push((format!("n{suf}"), s.n as f64));
        if let Some(m) = s.mean {
            v.push((format!("mean{suf}"), m));
        }
        if let Some(sd) = s.sd {
            v.push((format!("sd{suf}"), sd));
        }
        if let Some(var) = s.var {
            v.push((format!("var{suf}"), var));
        }
        if let Some(p) = s.proportion {
            v.push((format!("p_hat{suf}"), p));
        }
        if let Some(x) = s.successes {
            v.push((format!("successes{suf}"), x as f64));
        }
    }
    match r.sigma.as_slice() {
        [s] => v.push(("sigma".into(), *s)),
        [s1, s2] => {
            v.push(("sigma1".into(), *s1));
            v.push(("sigma2".into(), *s2));
        }
        _ => {}
    }
    if let Some(p) = r.pooled {
        let name = if r.method == Method::PooledT { "sp" } else { "p_pooled" };
        v.push((name.into(), p));
    }
    if let Some(se) = r.test_standard_error {
        v.push(("se".into(), se));
    }
    match r.df.as_slice() {
        [df] => v.push(("df".into(), *df)),
        [d1, d2] => {
            v.push(("df1".into(), *d1));
            v.push(("df2".into(), *d2));
        }
        _ => {}
    }
    match r.critical_values.as_slice() {
        [lo, hi] => {
            v.push(("critical_lower".into(), *lo));
            v.push(("critical_upper".into(), *hi));
            v.push(("critical".into(), *hi));
        }
        [c] => v.push(("critical".into(), *c)),
        _ => {}
    }
    v
}

/// Step restricted to the placeholders its template uses.
fn step(template: String, all: &[(String, f64)]) -> Step {
    let used = super::placeholders(&template);
    let values: Vec<(&str, f64)> =
        all.iter().filter(|(k, _)| used.contains(&k.as_str())).map(|(k, v)| (k.as_str(), *v)).collect();
    Step::new(template, &values)
}

/// Quantile symbol with upper-tail area `area` (TeX) for the family.
fn quantile_symbol(family: &StatisticFamily, area: &str) -> String {
    match family {
        StatisticFamily::Normal => format!("z_{{{area}}}"),
        StatisticFamily::StudentT { .. } => format!("t_{{{area}, <<df>>}}"),
        StatisticFamily::ChiSquare { .. } => format!(r"\chi^2_{{{area}, <<df>>}}"),
        StatisticFamily::F { .. } => format!("F_{{{area}; <<df1>>, <<df2>>}}"),
    }
}

fn statistic_symbol(family: &StatisticFamily) -> &'static str {
    match family {
        StatisticFamily::Normal => "z",
        StatisticFamily::StudentT { .. } => "t",
        StatisticFamily::ChiSquare { .. } => r"\chi^2",
        StatisticFamily::F { .. } => "F",
    }
}

fn ci_template(r: &InferenceResult) -> String {
    let fam = &r.statistic_family;
    match fam {
        StatisticFamily::Normal | StatisticFamily::StudentT { .. } => {
            let f = location_forms_for(r);
            let (e, en, s, sn) = (f.estimate_sym, f.estimate_num, f.se_sym, f.se_num);
            match r.alternative {
                Alternative::TwoSided => {
                    let q = match (r.setting, fam) {
                        (Setting::OneMean, StatisticFamily::StudentT { .. }) => r"t_{\alpha/2, n - 1}".to_string(),
                        (_, StatisticFamily::Normal) => r"z_{\alpha/2}".to_string(),
                        _ => r"t_{\alpha/2, \nu}".to_string(),
                    };
                    format!(
                        r"{e} \pm \left({q} \times {s}\right) = {en} \pm \left(<<critical>> \times {sn}\right) = [<<lower>>; <<upper>>]"
                    )
                }
                Alternative::Greater => {
                    let q = quantile_symbol(fam, r"\alpha");
                    format!(
                        r"\left[{e} - {q} \times {s}; +\infty\right) = \left[{en} - <<critical>> \times {sn}; +\infty\right) = [<<lower>>; +\infty)"
                    )
                }
                Alternative::Less => {
                    let q = quantile_symbol(fam, r"\alpha");
                    format!(
                        r"\left(-\infty; {e} + {q} \times {s}\right] = \left(-\infty; {en} + <<critical_abs>> \times {sn}\right] = (-\infty; <<upper>>]"
                    )
                }
            }
        }
        StatisticFamily::ChiSquare { .. } => {
            let ss = r"(n - 1)s^2";
            let ssn = r"(<<n>> - 1) \times <<var>>";
            match r.alternative {
                Alternative::TwoSided => format!(
                    r"\left[\frac{{{ss}}}{{{}}}; \frac{{{ss}}}{{{}}}\right] = \left[\frac{{{ssn}}}{{<<critical_upper>>}}; \frac{{{ssn}}}{{<<critical_lower>>}}\right] = [<<lower>>; <<upper>>]",
                    quantile_symbol(&r.statistic_family, r"\alpha/2"),
                    quantile_symbol(&r.statistic_family, r"1 - \alpha/2"),
                ),
                Alternative::Greater => format!(
                    r"\left[\frac{{{ss}}}{{{}}}; +\infty\right) = \left[\frac{{{ssn}}}{{<<critical>>}}; +\infty\right) = [<<lower>>; +\infty)",
                    quantile_symbol(&r.statistic_family, r"\alpha"),
                ),
                Alternative::Less => format!(
                    r"\left[0; \frac{{{ss}}}{{{}}}\right] = \left[0; \frac{{{ssn}}}{{<<critical>>}}\right] = [<<lower>>; <<upper>>]",
                    quantile_symbol(&r.statistic_family, r"1 - \alpha"),
                ),
            }
        }
        StatisticFamily::F { .. } => {
            let f = r"s_1^2/s_2^2";
            let fnum = "<<var1>>/<<var2>>";
            match r.alternative {
                Alternative::TwoSided => format!(
                    r"\left[\frac{{{f}}}{{{}}}; \frac{{{f}}}{{{}}}\right] = \left[\frac{{{fnum}}}{{<<critical_upper>>}}; \frac{{{fnum}}}{{<<critical_lower>>}}\right] = [<<lower>>; <<upper>>]",
                    quantile_symbol(&r.statistic_family, r"\alpha/2"),
                    quantile_symbol(&r.statistic_family, r"1 - \alpha/2"),
                ),
                Alternative::Greater => format!(
                    r"\left[\frac{{{f}}}{{{}}}; +\infty\right) = \left[\frac{{{fnum}}}{{<<critical>>}}; +\infty\right) = [<<lower>>; +\infty)",
                    quantile_symbol(&r.statistic_family, r"\alpha"),
                ),
                Alternative::Less => format!(
                    r"\left[0; \frac{{{f}}}{{{}}}\right] = \left[0; \frac{{{fnum}}}{{<<critical>>}}\right] = [<<lower>>; <<upper>>]",
                    quantile_symbol(&r.statistic_family, r"1 - \alpha"),
                ),
            }
        }
    }
}

fn statistic_template(r: &InferenceResult) -> String {
    let sym = statistic_symbol(&r.statistic_family);
    match (r.setting, r.method) {
        (Setting::OneVariance, _) => {
            r"\chi^2 = \frac{(n - 1)s^2}{\sigma_0^2} = \frac{(<<n>> - 1) \times <<var>>}{<<h0>>} = <<statistic>>".to_string()
        }
        (Setting::TwoVariances, _) => {
            r"F = \frac{s_1^2/s_2^2}{(\sigma_1^2/\sigma_2^2)_0} = \frac{<<var1>>/<<var2>>}{<<h0>>} = <<statistic>>".to_string()
        }
        (Setting::TwoProportions, Method::PooledZ) => {
            r"\bar{p} = \frac{x_1 + x_2}{n_1 + n_2} = <<p_pooled>>, \quad z = \frac{\hat{p}_1 - \hat{p}_2}{\sqrt{\bar{p}(1 - \bar{p})(1/n_1 + 1/n_2)}} = \frac{<<p_hat1>> - <<p_hat2>>}{\sqrt{<<p_pooled>>(1 - <<p_pooled>>)(1/<<n1>> + 1/<<n2>>)}} = <<statistic>>".to_string()
        }
        (Setting::TwoProportions, _) => format!(
            r"z = \frac{{\hat{{p}}_1 - \hat{{p}}_2 - \Delta_0}}{{{}}} = \frac{{<<p_hat1>> - <<p_hat2>> - <<h0>>}}{{<<se>>}} = <<statistic>>",
            location_forms(Method::UnpooledZ).se_sym
        ),
        _ => {
            let f = location_forms_for(r);
            let null = match r.setting {
                Setting::OneMean => r"\mu_0",
                Setting::OneProportion => "p_0",
                _ => r"\Delta_0",
            };
            let plain_estimate = f.estimate_sym.trim_start_matches('(').trim_end_matches(')');
            let plain_num = f.estimate_num.trim_start_matches('(').trim_end_matches(')');
            let mut t = String::new();
            if r.method == Method::PooledT {
                t.push_str(r"s_p = \sqrt{\frac{(n_1 - 1)s_1^2 + (n_2 - 1)s_2^2}{n_1 + n_2 - 2}} = <<sp>>, \quad ");
            }
            t.push_str(&format!(
                r"{sym} = \frac{{{plain_estimate} - {null}}}{{{}}} = \frac{{{plain_num} - <<h0>>}}{{{}}} = <<statistic>>",
                f.se_sym, f.se_num
            ));
            if r.method == Method::WelchT {
                t.push_str(r", \quad \nu = \frac{(s_1^2/n_1 + s_2^2/n_2)^2}{\frac{(s_1^2/n_1)^2}{n_1 - 1} + \frac{(s_2^2/n_2)^2}{n_2 - 1}} = <<df>>");
            }
            t
        }
    }
}

fn critical_template(r: &InferenceResult) -> String {
    let fam = &r.statistic_family;
    let sym = statistic_symbol(fam);
    if fam.is_symmetric() {
        match r.alternative {
            Alternative::TwoSided => format!(
                r"{} = <<critical>>, \quad \text{{reject }} H_0 \text{{ if }} |{sym}| \gt <<critical>>",
                quantile_symbol(fam, r"\alpha/2")
            ),
            Alternative::Greater => format!(
                r"{} = <<critical>>, \quad \text{{reject }} H_0 \text{{ if }} {sym} \gt <<critical>>",
                quantile_symbol(fam, r"\alpha")
            ),
            Alternative::Less => format!(
                r"-{} = <<critical>>, \quad \text{{reject }} H_0 \text{{ if }} {sym} \lt <<critical>>",
                quantile_symbol(fam, r"\alpha")
            ),
        }
    } else {
        match r.alternative {
            Alternative::TwoSided => format!(
                r"{} = <<critical_lower>>, \quad {} = <<critical_upper>>, \quad \text{{reject }} H_0 \text{{ if }} {sym} \lt <<critical_lower>> \text{{ or }} {sym} \gt <<critical_upper>>",
                quantile_symbol(fam, r"1 - \alpha/2"),
                quantile_symbol(fam, r"\alpha/2")
            ),
            Alternative::Greater => format!(
                r"{} = <<critical>>, \quad \text{{reject }} H_0 \text{{ if }} {sym} \gt <<critical>>",
                quantile_symbol(fam, r"\alpha")
            ),
            Alternative::Less => format!(
                r"{} = <<critical>>, \quad \text{{reject }} H_0 \text{{ if }} {sym} \lt <<critical>>",
                quantile_symbol(fam, r"1 - \alpha")
            ),
        }
    }
}

fn conclusion_template(r: &InferenceResult) -> String {
    let p = if r.p_value < SMALL_P { r"p \lt <<p_threshold>>" } else { "p = <<p_value>>" };
    match r.decision {
        Decision::Reject => format!(r"{p} \lt \alpha = <<alpha>> \Rightarrow \text{{reject }} H_0"),
        Decision::FailToReject => {
            format!(r"{p} \geq \alpha = <<alpha>> \Rightarrow \text{{do not reject }} H_0")
        }
    }
}

/// The four-section narrative of a test result.
pub fn test_document(r: &InferenceResult) -> DerivationDocument {
    let mut values = base_values(r);
    if let [c] = r.critical_values.as_slice() {
        values.push(("critical_abs".into(), c.abs()));
    }
    values.push(("p_threshold".into(), 0.0001));
    let sym = parameter_symbol(r.setting);
    let hypotheses =
        format!(r"H_0: {sym} = <<h0>> \quad \text{{versus}} \quad H_1: {sym} {} <<h0>>", relation(r.alternative));
    let test = Section::new(
        TEST_TITLE,
        vec![
            step(hypotheses, &values),
            step(statistic_template(r), &values),
            step(critical_template(r), &values),
            step(conclusion_template(r), &values),
        ],
    );
    let ci = Section::new(CI_TITLE, vec![step(ci_template(r), &values)]);
    let p_step =
        if r.p_value < SMALL_P { r"p\text{-value} \lt <<p_threshold>>" } else { r"p\text{-value} = <<p_value>>" };
    let interpretation =
        Section::new(INTERPRETATION_TITLE, vec![step(p_step.to_string(), &values)]).with_text(interpret(r, r.alpha));
    DerivationDocument { sections: vec![data_section(r), ci, test, interpretation] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inference::{run_test, InferenceRequest, SampleInput, TestConfig};

    fn one_mean(alt: Alternative) -> InferenceResult {
        run_test(&InferenceRequest {
            setting: Setting::OneMean,
            samples: vec![SampleInput::MeanSummary { n: 5, mean: 3.0, var: Some(2.5), sd: None }],
            config: TestConfig { h0: Some(0.0), alternative: alt, ..TestConfig::default() },
        })
        .unwrap()
    }

    #[test]
    fn four_sections_four_steps() {
        let r = one_mean(Alternative::TwoSided);
        let titles: Vec<_> = r.narrative.sections.iter().map(|s| s.title.as_str()).collect();
        assert_eq!(titles, [DATA_TITLE, CI_TITLE, TEST_TITLE, INTERPRETATION_TITLE]);
        assert_eq!(r.narrative.sections[2].steps.len(), 4);
    }

    #[test]
    fn one_mean_ci_template() {
        let r = one_mean(Alternative::TwoSided);
        let t = &r.narrative.sections[1].steps[0].tex_template;
        assert!(t.starts_with(r"\bar{x} \pm \left(t_{\alpha/2, n - 1} \times s/\sqrt{n}\right) = "));
        assert!(t.ends_with("= [<<lower>>; <<upper>>]"));
    }

    #[test]
    fn greater_ci_is_half_open() {
        let r = one_mean(Alternative::Greater);
        let d = &r.narrative.sections[1].steps[0].display;
        assert!(d.ends_with(r"; +\infty)"), "{d}");
    }

    #[test]
    fn interpretation_wording() {
        let r = one_mean(Alternative::TwoSided);
        let text = interpret(&r, 0.05);
        assert!(text.contains("reject"));
        assert!(!text.contains("do not reject"));
        assert!(text.contains("0.05"));
        assert!(text.contains(&display4(r.p_value)));
        let r = one_mean(Alternative::Less);
        assert!(interpret(&r, 0.05).contains("do not reject"));
    }

    #[test]
    fn tiny_p_values_use_threshold_text() {
        assert_eq!(p_value_text(0.000_049_9), "< 0.0001");
        assert_eq!(p_value_text(0.000_05), "= 0.0001");
        assert_eq!(p_value_text(0.0021), "= 0.0021");
    }
}
