//! Derivation documents: TeX templates paired with the numbers substituted
//! into them, plus the downloadable regression report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::num::tex_number;

mod distribution;
mod inference;
mod plain;
mod regression;
pub mod report;
mod svg;

pub use distribution::distribution_document;
pub use inference::{interpret, p_value_text, test_document, CI_TITLE, DATA_TITLE, INTERPRETATION_TITLE, TEST_TITLE};
pub use plain::tex_to_plain;
pub use regression::regression_document;
pub use report::{regression_report, ReportRequest};

/// One formula with its substituted values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    /// TeX math with `<<name>>` placeholders.
    pub tex_template: String,
    #[serde(with = "crate::num::extended_map")]
    pub values: BTreeMap<String, f64>,
    /// The template with every placeholder replaced by its display form.
    pub display: String,
}

impl Step {
    pub fn new(template: impl Into<String>, values: &[(&str, f64)]) -> Self {
        let tex_template = template.into();
        let values: BTreeMap<String, f64> = values.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let display = render_template(&tex_template, &values);
        Step { tex_template, values, display }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub steps: Vec<Step>,
    /// Prose accompanying the steps, such as an interpretation sentence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl Section {
    pub fn new(title: &str, steps: Vec<Step>) -> Self {
        Section { title: title.to_string(), steps, text: None }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivationDocument {
    pub sections: Vec<Section>,
}

impl DerivationDocument {
    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    /// Every step's display TeX, one per line, under section headings.
    pub fn to_tex(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            out.push_str("% ");
            out.push_str(&section.title);
            out.push('\n');
            for step in &section.steps {
                out.push_str(&step.display);
                out.push('\n');
            }
            if let Some(text) = &section.text {
                out.push_str(text);
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }

    /// Readable plain text with numbered steps.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            out.push_str(&section.title);
            out.push('\n');
            out.push_str(&"-".repeat(section.title.chars().count()));
            out.push('\n');
            let numbered = section.steps.len() > 1;
            for (i, step) in section.steps.iter().enumerate() {
                if numbered {
                    out.push_str(&format!("({}) ", i + 1));
                }
                out.push_str(&tex_to_plain(&step.display));
                out.push('\n');
            }
            if let Some(text) = &section.text {
                out.push_str(text);
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }
}

/// Placeholder names in order of appearance.
pub fn placeholders(template: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut rest = template;
    while let Some(start) = rest.find("<<") {
        let after = &rest[start + 2..];
        match after.find(">>") {
            Some(end) => {
                out.push(&after[..end]);
                rest = &after[end + 2..];
            }
            None => break,
        }
    }
    out
}

/// Replaces `<<name>>` with the TeX form of `values[name]`.
pub fn render_template(template: &str, values: &BTreeMap<String, f64>) -> String {
    let mut out = String::with_capacity(template.len() + 16);
    let mut rest = template;
    while let Some(start) = rest.find("<<") {
        out.push_str(&rest[..start]);
        let after = &rest[start + 2..];
        let Some(end) = after.find(">>") else {
            out.push_str(&rest[start..]);
            return out;
        };
        let name = &after[..end];
        match values.get(name) {
            Some(&v) => out.push_str(&tex_number(v)),
            None => {
                debug_assert!(false, "placeholder `{name}` has no value");
                out.push_str(&rest[start..start + end + 4]);
            }
        }
        rest = &after[end + 2..];
    }
    out.push_str(rest);
    out
}
