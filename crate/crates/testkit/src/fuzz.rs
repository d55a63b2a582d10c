//! Malformed and adversarial request bodies for API fuzzing.

use rand::seq::IndexedRandom;
use rand::Rng;
use serde_json::{json, Map, Number, Value};

const WORDS: &[&str] = &[
    "normal",
    "binomial",
    "poisson",
    "lower_tail",
    "upper_tail",
    "interval",
    "raw",
    "mean_summary",
    "proportion_summary",
    "variance_summary",
    "greater",
    "less",
    "two_sided",
    "one_mean",
    "two_variances",
    "x",
    "y",
    "mu",
    "var",
    "sd",
    "n",
    "p",
    "data",
    "type",
    "Infinity",
    "-Infinity",
    "NaN",
    "1,,2",
    "1;2\n3",
    "",
    " ",
    "<script>",
    "é",
    "∞",
];

const NUMBERS: &[f64] = &[
    0.0,
    -0.0,
    1.0,
    -1.0,
    0.5,
    1e-320,
    5e-324,
    1e308,
    -1e308,
    1.7976931348623157e308,
    9007199254740993.0,
    1e16,
    0.05,
    0.2,
    0.999999999,
    2.0,
    3.0,
    100000.0,
    100001.0,
    4294967296.0,
];

fn random_number<R: Rng>(rng: &mut R) -> Value {
    match rng.random_range(0..4) {
        0 => json!(*NUMBERS.choose(rng).unwrap()),
        1 => json!(rng.random_range(-5i64..200)),
        2 => json!(rng.random::<u64>()),
        _ => Number::from_f64(rng.random_range(-1e6..1e6)).map_or(Value::Null, Value::Number),
    }
}

/// An arbitrary JSON value of bounded depth.
pub fn random_json<R: Rng>(rng: &mut R, depth: u32) -> Value {
    let pick = if depth == 0 { rng.random_range(0..4) } else { rng.random_range(0..6) };
    match pick {
        0 => Value::Null,
        1 => Value::Bool(rng.random()),
        2 => random_number(rng),
        3 => json!(*WORDS.choose(rng).unwrap()),
        4 => {
            let len = rng.random_range(0..6);
            Value::Array((0..len).map(|_| random_json(rng, depth - 1)).collect())
        }
        _ => {
            let len = rng.random_range(0..5);
            let mut m = Map::new();
            for _ in 0..len {
                m.insert(WORDS.choose(rng).unwrap().to_string(), random_json(rng, depth - 1));
            }
            Value::Object(m)
        }
    }
}

/// Applies one structural mutation somewhere inside `v`.
pub fn mutate<R: Rng>(v: &mut Value, rng: &mut R) {
    match v {
        Value::Object(m) if !m.is_empty() && rng.random_bool(0.7) => {
            let keys: Vec<String> = m.keys().cloned().collect();
            let key = keys.choose(rng).unwrap().clone();
            match rng.random_range(0..5) {
                0 => {
                    m.remove(&key);
                }
                1 => {
                    m.insert(key, random_json(rng, 2));
                }
                2 => {
                    m.insert(WORDS.choose(rng).unwrap().to_string(), random_json(rng, 1));
                }
                _ => mutate(m.get_mut(&key).unwrap(), rng),
            }
        }
        Value::Array(a) if !a.is_empty() && rng.random_bool(0.7) => {
            let i = rng.random_range(0..a.len());
            match rng.random_range(0..4) {
                0 => {
                    a.remove(i);
                }
                1 => a.push(random_json(rng, 1)),
                _ => mutate(&mut a[i], rng),
            }
        }
        _ => *v = random_json(rng, 2),
    }
}

/// Raw body bytes: usually a mutated `seed`, sometimes truncated or garbage.
pub fn fuzz_body<R: Rng>(seed: &Value, rng: &mut R) -> Vec<u8> {
    let mut v = seed.clone();
    for _ in 0..rng.random_range(1..=3) {
        mutate(&mut v, rng);
    }
    let text = serde_json::to_string(&v).unwrap();
    match rng.random_range(0..10) {
        0 => {
            let mut cut = rng.random_range(0..=text.len());
            while !text.is_char_boundary(cut) {
                cut -= 1;
            }
            text.as_bytes()[..cut].to_vec()
        }
        1 => (0..rng.random_range(0..64)).map(|_| rng.random()).collect(),
        _ => text.into_bytes(),
    }
}
