use crate::regression::{RegressionFit, RegressionInput};

use super::{DerivationDocument, Section, Step};

pub const STEPS_TITLE: &str = "Least-squares estimates";

/// Four steps from the sample means to β̂₁ and β̂₀.
pub fn regression_document(_input: &RegressionInput, fit: &RegressionFit) -> DerivationDocument {
    let n = fit.n as f64;
    let means = Step::new(
        r"n = <<n>>, \quad \bar{x} = \frac{1}{n} \sum x_i = <<x_mean>>, \quad \bar{y} = \frac{1}{n} \sum y_i = <<y_mean>>",
        &[("n", n), ("x_mean", fit.x_mean), ("y_mean", fit.y_mean)],
    );
    let sums = Step::new(
        r"\sum x_i y_i = <<sum_xy>>, \quad \sum (x_i - \bar{x})^2 = <<sxx>>",
        &[("sum_xy", fit.sum_xy), ("sxx", fit.sxx)],
    );
    let slope = Step::new(
        r"\hat{\beta}_1 = \frac{\sum x_i y_i - n \bar{x} \bar{y}}{\sum (x_i - \bar{x})^2} = \frac{<<sum_xy>> - <<n>> \times <<x_mean>> \times <<y_mean>>}{<<sxx>>} = \frac{<<numerator>>}{<<sxx>>} = <<beta1>>",
        &[
            ("sum_xy", fit.sum_xy),
            ("n", n),
            ("x_mean", fit.x_mean),
            ("y_mean", fit.y_mean),
            ("numerator", fit.sxy),
            ("sxx", fit.sxx),
            ("beta1", fit.beta1_hat),
        ],
    );
    let intercept = Step::new(
        r"\hat{\beta}_0 = \bar{y} - \hat{\beta}_1 \bar{x} = <<y_mean>> - <<beta1>> \times <<x_mean>> = <<beta0>>",
        &[("y_mean", fit.y_mean), ("beta1", fit.beta1_hat), ("x_mean", fit.x_mean), ("beta0", fit.beta0_hat)],
    );
    DerivationDocument { sections: vec![Section::new(STEPS_TITLE, vec![means, sums, slope, intercept])] }
}
