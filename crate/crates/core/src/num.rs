//! Number formatting, compensated summation and JSON encoding of extended reals.

use std::fmt::Write as _;

/// Formats `v` with four decimals, rounding half away from zero.
///
/// Non-finite values render as `Infinity`, `-Infinity` or `NaN`, and a
/// negative value that rounds to zero renders as `0.0000`.
pub fn display4(v: f64) -> String {
    fixed_half_away(v, 4)
}

/// Formats `v` with `decimals` fractional digits, rounding half away from zero.
pub fn fixed_half_away(v: f64, decimals: u32) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "Infinity" } else { "-Infinity" }.to_string();
    }
    let decimals = decimals.min(15);
    let unit = 10f64.powi(decimals as i32);
    let twice_scale = 2.0 * unit;
    let twice = v * twice_scale;
    // An exact tie means v * 2·10^d is an odd integer and the product is exact.
    let is_tie = twice.abs() < 9.007_199_254_740_992e15
        && twice.fract() == 0.0
        && (twice % 2.0).abs() == 1.0
        && v.mul_add(twice_scale, -twice) == 0.0;
    let out = if is_tie {
        let units = ((twice.abs() + 1.0) / 2.0) as u64;
        let div = 10u64.pow(decimals);
        let mut s = String::new();
        if v < 0.0 {
            s.push('-');
        }
        if decimals == 0 {
            let _ = write!(s, "{units}");
        } else {
            let _ = write!(s, "{}.{:0width$}", units / div, units % div, width = decimals as usize);
        }
        s
    } else {
        format!("{:.*}", decimals as usize, v)
    };
    if out.starts_with('-') && out[1..].chars().all(|c| c == '0' || c == '.') {
        out[1..].to_string()
    } else {
        out
    }
}

/// Formats a number for display inside TeX: integral values without
/// decimals, everything else with four.
pub fn tex_number(v: f64) -> String {
    if v.is_nan() {
        return r"\text{NaN}".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { r"+\infty" } else { r"-\infty" }.to_string();
    }
    if v == v.trunc() && v.abs() < 1e15 {
        let i = v as i64;
        return i.to_string();
    }
    display4(v)
}

/// Formats a number the way [`tex_number`] does, for plain-text output.
pub fn plain_number(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "+∞" } else { "-∞" }.to_string();
    }
    if v.is_nan() {
        return "NaN".to_string();
    }
    tex_number(v)
}

/// Formats a number with four decimals and strips trailing zeros, e.g.
/// `0.05` instead of `0.0500`.
pub fn display_trimmed(v: f64) -> String {
    let s = display4(v);
    if !v.is_finite() || !s.contains('.') {
        return s;
    }
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator of reals.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<NeumaierSum>().value()
}

/// Serde adapter for reals that may be infinite.
///
/// Finite values are plain JSON numbers; `±∞` and NaN are the strings
/// `"Infinity"`, `"-Infinity"` and `"NaN"`.
pub mod extended {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("NaN")
        } else if *v > 0.0 {
            s.serialize_str("Infinity")
        } else {
            s.serialize_str("-Infinity")
        }
    }

    struct ExtendedVisitor;

    impl Visitor<'_> for ExtendedVisitor {
        type Value = f64;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a number or one of \"Infinity\", \"-Infinity\", \"NaN\"")
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
            Ok(v)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
            Ok(v as f64)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
            match v {
                "Infinity" | "+Infinity" => Ok(f64::INFINITY),
                "-Infinity" => Ok(f64::NEG_INFINITY),
                "NaN" => Ok(f64::NAN),
                other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
            }
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        d.deserialize_any(ExtendedVisitor)
    }
}

/// [`extended`] for `Vec<f64>`.
pub mod extended_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(serde::Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::extended")] f64);

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&Wrap(*x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        let v: Vec<Wrap> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|w| w.0).collect())
    }
}

/// [`extended`] for `BTreeMap<String, f64>`.
pub mod extended_map {
    use serde::ser::SerializeMap;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    #[derive(serde::Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::extended")] f64);

    pub fn serialize<S: Serializer>(v: &BTreeMap<String, f64>, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(v.len()))?;
        for (k, x) in v {
            map.serialize_entry(k, &Wrap(*x))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, f64>, D::Error> {
        let v: BTreeMap<String, Wrap> = BTreeMap::deserialize(d)?;
        Ok(v.into_iter().map(|(k, w)| (k, w.0)).collect())
    }
}

/// [`extended`] for `Option<f64>`.
pub mod extended_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(serde::Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::extended")] f64);

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::extended::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        let v: Option<Wrap> = Option::deserialize(d)?;
        Ok(v.map(|w| w.0))
    }
}
