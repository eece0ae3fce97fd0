//! Quasi-isometry checks between finite semimetric spaces.
//!
//! All constants are exact rationals. Spaces are given as [`Semimetric`]s
//! over ball vertices; the `*_in` variants take any semimetric, the plain
//! ones use the ball's own truncated distances.
//!
//! [`Semimetric`]: crate::cayley::Semimetric

mod embedding;
mod inverse;
mod tree;
mod types;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cayley::VertexId;
use crate::error::{Error, Result};
use crate::Rational;

pub use embedding::{
    check_quasi_dense, check_quasi_dense_in, embedding_slack, verify_qi_embedding, verify_qi_embedding_in,
    DensityReport, DensityVerdict, EmbeddingReport, EmbeddingVerdict,
};
pub use inverse::{
    check_inverse_conclusions, inverse_constants, quasi_inverse, quasi_inverse_construction, quasi_inverse_in,
    QuasiInverse,
};
pub use tree::{check_bushy_hypotheses, BushyReport, BushyVerdict};
pub use types::{type_leq, type_witness_search, TypeReport, TypeVerdict};

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The `{"verdict", "witness", "skipped"}` shape shared by the reports.
pub(crate) fn verdict_json<S: serde::Serializer, W: Serialize>(
    s: S,
    verdict: &str,
    witness: Option<W>,
    skipped: usize,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Report", 3)?;
    st.serialize_field("verdict", verdict)?;
    st.serialize_field("witness", &witness)?;
    st.serialize_field("skipped", &skipped)?;
    st.end()
}

pub(crate) fn int(k: u64) -> Rational {
    Rational::from_integer(k as i64)
}

/// Constants of a (λ, ε, μ)-quasi-isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QiSpec {
    pub lambda: Rational,
    pub eps: Rational,
    pub mu: Rational,
}

impl QiSpec {
    /// Requires `λ >= 1`, `ε > 0` and `μ >= 0`.
    pub fn new(lambda: Rational, eps: Rational, mu: Rational) -> Result<Self> {
        if lambda < Rational::from_integer(1) {
            return Err(Error::InvalidSpec(format!("lambda = {lambda} must be at least 1")));
        }
        if eps <= Rational::from_integer(0) {
            return Err(Error::InvalidSpec(format!("epsilon = {eps} must be positive")));
        }
        if mu < Rational::from_integer(0) {
            return Err(Error::InvalidSpec(format!("mu = {mu} must be non-negative")));
        }
        Ok(QiSpec { lambda, eps, mu })
    }

    pub fn from_ints(lambda: i64, eps: i64, mu: i64) -> Result<Self> {
        Self::new(lambda.into(), eps.into(), mu.into())
    }
}

impl fmt::Display for QiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lambda, self.eps, self.mu)
    }
}

impl Serialize for QiSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QiSpec", 3)?;
        st.serialize_field("lambda", &self.lambda.to_string())?;
        st.serialize_field("eps", &self.eps.to_string())?;
        st.serialize_field("mu", &self.mu.to_string())?;
        st.end()
    }
}

/// The constant `m = max(λ² + (λ+1)ε + 2μ + 1, (λ+ε)n)`, rounded up.
pub fn m_bound(spec: &QiSpec, n: u64) -> u64 {
    let QiSpec { lambda: l, eps: e, mu: m } = *spec;
    let one = Rational::from_integer(1);
    let first = l * l + (l + one) * e + Rational::from_integer(2) * m + one;
    let second = (l + e) * int(n);
    let v = first.max(second).ceil().to_integer();
    v as u64
}

/// A total map between the vertex sets of two balls.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMap {
    table: Vec<VertexId>,
    target_size: usize,
}

impl VertexMap {
    pub fn new(table: Vec<VertexId>, target_size: usize) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&t| t >= target_size) {
            return Err(Error::MapOutOfRange(bad));
        }
        Ok(VertexMap { table, target_size })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            table: (0..n).collect(),
            target_size: n,
        }
    }

    /// Reads lines `src -> dst`; `#` starts a comment.
    pub fn from_text(text: &str, source_size: usize, target_size: usize) -> Result<Self> {
        let mut table = vec![None; source_size];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |msg: &str| Error::Syntax {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (s, d) = line.split_once("->").ok_or_else(|| syntax("expected `src -> dst`"))?;
            let s: usize = s.trim().parse().map_err(|_| syntax("source is not a vertex id"))?;
            let d: usize = d.trim().parse().map_err(|_| syntax("target is not a vertex id"))?;
            if s >= source_size {
                return Err(syntax(&format!("source {s} is not a vertex of the source space")));
            }
            if d >= target_size {
                return Err(Error::MapOutOfRange(d));
            }
            if table[s].replace(d).is_some_and(|old| old != d) {
                return Err(syntax(&format!("vertex {s} is mapped twice")));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(s, d)| d.ok_or(Error::NonTotalMap(s)))
            .collect::<Result<_>>()?;
        Ok(VertexMap { table, target_size })
    }

    pub fn to_text(&self) -> String {
        self.table.iter().enumerate().map(|(s, d)| format!("{s} -> {d}\n")).collect()
    }

    pub fn get(&self, x: VertexId) -> VertexId {
        self.table[x]
    }

    pub fn source_size(&self) -> usize {
        self.table.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn table(&self) -> &[VertexId] {
        &self.table
    }

    pub fn image(&self) -> BTreeSet<VertexId> {
        self.table.iter().copied().collect()
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &VertexMap) -> Result<VertexMap> {
        if then.source_size() != self.target_size {
            return Err(Error::InvalidSpec(format!(
                "cannot compose: target has {} points, next map expects {}",
                self.target_size,
                then.source_size()
            )));
        }
        Ok(VertexMap {
            table: self.table.iter().map(|&y| then.get(y)).collect(),
            target_size: then.target_size,
        })
    }

    /// Checks the map against concrete space sizes.
    pub fn check_sizes(&self, source_size: usize, target_size: usize) -> Result<()> {
        if self.table.len() < source_size {
            return Err(Error::NonTotalMap(self.table.len()));
        }
        if self.table.len() > source_size {
            return Err(Error::InvalidSpec(format!(
                "map has {} sources but the space has {source_size} points",
                self.table.len()
            )));
        }
        if self.target_size > target_size {
            if let Some(&bad) = self.table.iter().find(|&&t| t >= target_size) {
                return Err(Error::MapOutOfRange(bad));
            }
        }
        Ok(())
    }
}
