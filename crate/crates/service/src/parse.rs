//! Pasted number lists.
//!
//! Items are separated by commas, semicolons or line breaks. Whitespace
//! around an item is ignored, the decimal separator is always `.`, and
//! every item must be a finite number.

use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemProblem {
    Empty,
    NotANumber,
    NotFinite,
}

/// `index` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("item {index}: {}", describe(*.problem, .item))]
pub struct ParseError {
    pub index: usize,
    pub item: String,
    pub problem: ItemProblem,
}

fn describe(problem: ItemProblem, item: &str) -> String {
    match problem {
        ItemProblem::Empty => "empty value".to_string(),
        ItemProblem::NotANumber => format!("`{item}` is not a number"),
        ItemProblem::NotFinite => format!("`{item}` is not a finite number"),
    }
}

fn is_separator(c: char) -> bool {
    matches!(c, ',' | ';' | '\n' | '\r')
}

fn looks_numeric(s: &str) -> bool {
    // Rust's float parser also takes "inf" and "NaN", which students never mean.
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    body.starts_with(|c: char| c.is_ascii_digit() || c == '.')
        && body.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
}

pub fn parse_numeric_list(text: &str) -> Result<Vec<f64>, ParseError> {
    let text = text.replace("\r\n", "\n");
    let mut out = Vec::new();
    for (i, raw) in text.trim().split(is_separator).enumerate() {
        let index = i + 1;
        let item = raw.trim();
        if item.is_empty() {
            return Err(ParseError { index, item: String::new(), problem: ItemProblem::Empty });
        }
        if !looks_numeric(item) {
            return Err(ParseError { index, item: item.to_string(), problem: ItemProblem::NotANumber });
        }
        let v: f64 =
            item.parse().map_err(|_| ParseError { index, item: item.to_string(), problem: ItemProblem::NotANumber })?;
        if !v.is_finite() {
            return Err(ParseError { index, item: item.to_string(), problem: ItemProblem::NotFinite });
        }
        out.push(v);
    }
    Ok(out)
}

/// A list of numbers given either as a JSON array or as pasted text.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum NumberList {
    Values(Vec<f64>),
    Text(String),
}

impl NumberList {
    pub fn resolve(self) -> Result<Vec<f64>, ParseError> {
        match self {
            NumberList::Values(v) => Ok(v),
            NumberList::Text(t) => parse_numeric_list(&t),
        }
    }
}

impl From<Vec<f64>> for NumberList {
    fn from(v: Vec<f64>) -> Self {
        NumberList::Values(v)
    }
}

struct NumberListVisitor;

impl<'de> Visitor<'de> for NumberListVisitor {
    type Value = NumberList;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an array of numbers or a comma-separated string")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<NumberList, E> {
        Ok(NumberList::Text(v.to_string()))
    }

    fn visit_string<E: de::Error>(self, v: String) -> Result<NumberList, E> {
        Ok(NumberList::Text(v))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<NumberList, A::Error> {
        let mut out = Vec::with_capacity(seq.size_hint().unwrap_or(0).min(4096));
        while let Some(v) = seq.next_element::<f64>()? {
            out.push(v);
        }
        Ok(NumberList::Values(out))
    }
}

impl<'de> Deserialize<'de> for NumberList {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(NumberListVisitor)
    }
}
