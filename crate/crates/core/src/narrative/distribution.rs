use crate::distributions::{Distribution, DistributionSpec, Moments, ProbabilityQuery};

use super::{DerivationDocument, Section, Step};

/// Notation line and density/mass formula for a family.
fn family_templates(d: &Distribution) -> (&'static str, &'static str) {
    match d {
        Distribution::Beta { .. } => (
            r"X \sim \text{Beta}(\alpha = <<alpha>>, \beta = <<beta>>)",
            r"f(x) = \frac{x^{<<alpha>> - 1} (1 - x)^{<<beta>> - 1}}{B(<<alpha>>, <<beta>>)}, \quad 0 \leq x \leq 1",
        ),
        Distribution::Binomial { .. } => (
            r"X \sim \text{Bin}(n = <<n>>, p = <<p>>)",
            r"P(X = x) = \binom{<<n>>}{x} <<p>>^{x} (1 - <<p>>)^{<<n>> - x}, \quad x = 0, 1, \ldots, <<n>>",
        ),
        Distribution::Cauchy { .. } => (
            r"X \sim \text{Cauchy}(x_0 = <<location>>, \gamma = <<scale>>)",
            r"f(x) = \frac{1}{\pi \cdot <<scale>> \left[1 + \left(\frac{x - <<location>>}{<<scale>>}\right)^2\right]}, \quad -\infty \lt x \lt \infty",
        ),
        Distribution::ChiSquare { .. } => (
            r"X \sim \chi^2(<<df>>)",
            r"f(x) = \frac{1}{2^{<<df>>/2} \Gamma(<<df>>/2)} x^{<<df>>/2 - 1} e^{-x/2}, \quad x \gt 0",
        ),
        Distribution::Exponential { .. } => {
            (r"X \sim \text{Exp}(\lambda = <<rate>>)", r"f(x) = <<rate>> e^{-<<rate>> x}, \quad x \geq 0")
        }
        Distribution::Fisher { .. } => (
            r"X \sim F(<<df1>>, <<df2>>)",
            r"f(x) = \frac{\sqrt{\frac{(<<df1>> x)^{<<df1>>} \cdot <<df2>>^{<<df2>>}}{(<<df1>> x + <<df2>>)^{<<df1>> + <<df2>>}}}}{x \, B(<<df1>>/2, <<df2>>/2)}, \quad x \gt 0",
        ),
        Distribution::Gamma { .. } => (
            r"X \sim \text{Gamma}(\alpha = <<shape>>, \beta = <<rate>>)",
            r"f(x) = \frac{<<rate>>^{<<shape>>}}{\Gamma(<<shape>>)} x^{<<shape>> - 1} e^{-<<rate>> x}, \quad x \gt 0",
        ),
        Distribution::GeometricTrials { .. } => (
            r"X \sim \text{Geom}(p = <<p>>) \text{ (trial of the first success)}",
            r"P(X = x) = (1 - <<p>>)^{x - 1} \cdot <<p>>, \quad x = 1, 2, \ldots",
        ),
        Distribution::GeometricFailures { .. } => (
            r"X \sim \text{Geom}(p = <<p>>) \text{ (failures before the first success)}",
            r"P(X = x) = (1 - <<p>>)^{x} \cdot <<p>>, \quad x = 0, 1, 2, \ldots",
        ),
        Distribution::Hypergeometric { .. } => (
            r"X \sim \text{HG}(N = <<population>>, K = <<successes>>, n = <<draws>>)",
            r"P(X = x) = \frac{\binom{<<successes>>}{x} \binom{<<population>> - <<successes>>}{<<draws>> - x}}{\binom{<<population>>}{<<draws>>}}, \quad x = <<support_min>>, \ldots, <<support_max>>",
        ),
        Distribution::Logistic { .. } => (
            r"X \sim \text{Logistic}(\mu = <<location>>, s = <<scale>>)",
            r"f(x) = \frac{e^{-(x - <<location>>)/<<scale>>}}{<<scale>> \left(1 + e^{-(x - <<location>>)/<<scale>>}\right)^2}, \quad -\infty \lt x \lt \infty",
        ),
        Distribution::LogNormal { .. } => (
            r"X \sim \text{Lognormal}(\mu = <<meanlog>>, \sigma = <<sdlog>>)",
            r"f(x) = \frac{1}{x \cdot <<sdlog>> \sqrt{2\pi}} e^{-\frac{(\ln x - <<meanlog>>)^2}{2 \cdot <<sdlog>>^2}}, \quad x \gt 0",
        ),
        Distribution::NegativeBinomialSizeProb { .. } => (
            r"X \sim \text{NB}(r = <<size>>, p = <<prob>>)",
            r"P(X = x) = \frac{\Gamma(x + <<size>>)}{\Gamma(<<size>>) \, x!} <<prob>>^{<<size>>} (1 - <<prob>>)^{x}, \quad x = 0, 1, 2, \ldots",
        ),
        Distribution::NegativeBinomialMeanSize { .. } => (
            r"X \sim \text{NB}(\mu = <<mu>>, r = <<size>>)",
            r"P(X = x) = \frac{\Gamma(x + <<size>>)}{\Gamma(<<size>>) \, x!} \left(\frac{<<size>>}{<<size>> + <<mu>>}\right)^{<<size>>} \left(\frac{<<mu>>}{<<size>> + <<mu>>}\right)^{x}, \quad x = 0, 1, 2, \ldots",
        ),
        Distribution::Normal { .. } => (
            r"X \sim \mathcal{N}(\mu = <<mu>>, \sigma^2 = <<var>>)",
            r"f(x) = \frac{1}{\sqrt{2\pi \cdot <<var>>}} e^{-\frac{(x - <<mu>>)^2}{2 \cdot <<var>>}}, \quad -\infty \lt x \lt \infty",
        ),
        Distribution::Poisson { .. } => (
            r"X \sim \text{Pois}(\lambda = <<lambda>>)",
            r"P(X = x) = \frac{e^{-<<lambda>>} \, <<lambda>>^{x}}{x!}, \quad x = 0, 1, 2, \ldots",
        ),
        Distribution::StudentT { .. } => (
            r"X \sim t_{<<df>>}",
            r"f(x) = \frac{\Gamma\left(\frac{<<df>> + 1}{2}\right)}{\sqrt{<<df>> \pi} \, \Gamma\left(\frac{<<df>>}{2}\right)} \left(1 + \frac{x^2}{<<df>>}\right)^{-\frac{<<df>> + 1}{2}}, \quad -\infty \lt x \lt \infty",
        ),
        Distribution::Weibull { .. } => (
            r"X \sim \text{Weibull}(k = <<shape>>, \lambda = <<scale>>)",
            r"f(x) = \frac{<<shape>>}{<<scale>>} \left(\frac{x}{<<scale>>}\right)^{<<shape>> - 1} e^{-(x/<<scale>>)^{<<shape>>}}, \quad x \geq 0",
        ),
    }
}

fn moment_step(label: &str, key: &str, value: Option<f64>) -> Step {
    match value {
        Some(v) => Step::new(format!("{label} = <<{key}>>"), &[(key, v)]),
        None => Step::new(format!(r"{label} = \text{{undefined}}"), &[]),
    }
}

/// Solution and Details sections for a probability query.
pub fn distribution_document(
    spec: &DistributionSpec,
    query: &ProbabilityQuery,
    result: f64,
    moments: &Moments,
) -> DerivationDocument {
    let (notation, density) = family_templates(spec.distribution());
    let mut params = spec.distribution().params();
    if let Distribution::Hypergeometric { .. } = spec.distribution() {
        let (lo, hi) = spec.support();
        params.push(("support_min", lo));
        params.push(("support_max", hi));
    }
    let statement = match *query {
        ProbabilityQuery::LowerTail { x } => {
            Step::new(r"P(X \leq <<x>>) = <<probability>>", &[("x", x), ("probability", result)])
        }
        ProbabilityQuery::UpperTail { x } => Step::new(
            r"P(X \gt <<x>>) = 1 - P(X \leq <<x>>) = 1 - <<cdf_x>> = <<probability>>",
            &[("x", x), ("cdf_x", spec.cdf_unchecked(x)), ("probability", result)],
        ),
        ProbabilityQuery::Interval { a, b } => {
            let edge = spec.interval_lower_edge(a);
            let values = [
                ("a", a),
                ("b", b),
                ("edge", edge),
                ("cdf_b", spec.cdf_unchecked(b)),
                ("cdf_edge", spec.cdf_unchecked(edge)),
                ("probability", result),
            ];
            let template = if spec.is_discrete() {
                r"P(<<a>> \leq X \leq <<b>>) = P(X \leq <<b>>) - P(X \leq <<edge>>) = <<cdf_b>> - <<cdf_edge>> = <<probability>>"
            } else {
                r"P(<<a>> \leq X \leq <<b>>) = P(X \leq <<b>>) - P(X \lt <<edge>>) = <<cdf_b>> - <<cdf_edge>> = <<probability>>"
            };
            Step::new(template, &values)
        }
    };
    let solution = Section::new("Solution", vec![Step::new(notation, &params), statement]);
    let details = Section::new(
        "Details",
        vec![
            Step::new(density, &params),
            moment_step("E(X)", "mean", moments.mean),
            moment_step("SD(X)", "sd", moments.sd),
            moment_step(r"\text{Var}(X)", "variance", moments.variance),
        ],
    );
    DerivationDocument { sections: vec![solution, details] }
}
