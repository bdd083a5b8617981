//! `key = value` parameter files.
//!
//! ```text
//! # Tribonacci
//! r = 1
//! s = 1
//! t = 1
//! v0 = 0
//! v1 = 1
//! v2 = 1
//! ```
//!
//! All six keys are required. Values are integers or `p/q` rationals;
//! floats are rejected.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::parse_rational;
use crate::sequence::RecurrenceParams;

const KEYS: [&str; 6] = ["r", "s", "t", "v0", "v1", "v2"];

pub fn parse_params(text: &str) -> Result<RecurrenceParams<BigRational>> {
    let mut seen: BTreeMap<&str, BigRational> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::InvalidConfig(format!("line {}: {msg}", lineno + 1));
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| bad(format!("expected `key = value`, got `{line}`")))?;
        let key = key.trim().to_ascii_lowercase();
        let key = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| bad(format!("unknown key `{key}`")))?;
        let value = parse_rational(value).map_err(|e| bad(e.to_string()))?;
        if seen.insert(key, value).is_some() {
            return Err(bad(format!("duplicate key `{key}`")));
        }
    }
    let mut take = |k: &str| {
        seen.remove(k)
            .ok_or_else(|| Error::InvalidConfig(format!("missing key `{k}`")))
    };
    Ok(RecurrenceParams {
        r: take("r")?,
        s: take("s")?,
        t: take("t")?,
        v0: take("v0")?,
        v1: take("v1")?,
        v2: take("v2")?,
    })
}
