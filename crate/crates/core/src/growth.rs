//! Sampled growth functions (Dehn functions of presentations and of 2-complexes).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthValue {
    Finite(u64),
    Infinite,
    Unknown,
}

impl fmt::Display for GrowthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthValue::Finite(v) => write!(f, "{v}"),
            GrowthValue::Infinite => write!(f, "inf"),
            GrowthValue::Unknown => write!(f, "unknown"),
        }
    }
}

impl std::str::FromStr for GrowthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(GrowthValue::Infinite),
            "unknown" => Ok(GrowthValue::Unknown),
            t => t
                .parse()
                .map(GrowthValue::Finite)
                .map_err(|_| Error::Parse(format!("bad growth value `{t}`"))),
        }
    }
}

/// Values of a function on an initial segment `0..len` of the naturals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrowthTable {
    entries: BTreeMap<usize, GrowthValue>,
}

impl GrowthTable {
    pub fn from_values(values: impl IntoIterator<Item = GrowthValue>) -> Self {
        GrowthTable {
            entries: values.into_iter().enumerate().collect(),
        }
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> u64) -> Self {
        Self::from_values((0..len).map(|j| GrowthValue::Finite(f(j))))
    }

    pub fn get(&self, n: usize) -> Option<GrowthValue> {
        self.entries.get(&n).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, GrowthValue)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Two-column CSV with a `n,value` header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,value\n");
        for (n, v) in self.iter() {
            s.push_str(&format!("{n},{v}\n"));
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (i == 0 && line.starts_with('n')) {
                continue;
            }
            let (n, v) = line
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("csv line {}: expected `n,value`", i + 1)))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("csv line {}: bad n", i + 1)))?;
            if n != values.len() {
                return Err(Error::Parse(format!(
                    "csv line {}: domain must be an initial segment (expected n = {})",
                    i + 1,
                    values.len()
                )));
            }
            values.push(v.parse()?);
        }
        Ok(Self::from_values(values))
    }
}
