//! Membership oracles for subsets X of the naturals, selected by spec string.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A decidable subset of the naturals. Must be pure and thread-safe.
pub trait MembershipOracle: Send + Sync + fmt::Debug {
    fn contains(&self, n: u64) -> bool;

    /// The spec string this oracle parses from.
    fn spec(&self) -> String;
}

#[derive(Debug, Clone)]
pub struct FiniteSet(BTreeSet<u64>);

#[derive(Debug, Clone)]
pub struct CofiniteSet(BTreeSet<u64>);

/// `n` is a member iff `n >= threshold` and `n mod period` is a listed residue.
#[derive(Debug, Clone)]
pub struct UltimatelyPeriodic {
    threshold: u64,
    period: u64,
    residues: BTreeSet<u64>,
}

#[derive(Debug, Clone, Copy)]
pub struct Evens;

fn join(set: &BTreeSet<u64>) -> String {
    set.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl MembershipOracle for FiniteSet {
    fn contains(&self, n: u64) -> bool {
        self.0.contains(&n)
    }
    fn spec(&self) -> String {
        format!("finite:{}", join(&self.0))
    }
}

impl MembershipOracle for CofiniteSet {
    fn contains(&self, n: u64) -> bool {
        !self.0.contains(&n)
    }
    fn spec(&self) -> String {
        format!("cofinite:{}", join(&self.0))
    }
}

impl MembershipOracle for UltimatelyPeriodic {
    fn contains(&self, n: u64) -> bool {
        n >= self.threshold && self.residues.contains(&(n % self.period))
    }
    fn spec(&self) -> String {
        format!(
            "periodic:t={},p={},r={}",
            self.threshold,
            self.period,
            join(&self.residues)
        )
    }
}

impl MembershipOracle for Evens {
    fn contains(&self, n: u64) -> bool {
        n.is_multiple_of(2)
    }
    fn spec(&self) -> String {
        "evens".into()
    }
}

impl FiniteSet {
    pub fn new(members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = members.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidOracle("finite set must be nonempty".into()));
        }
        Ok(FiniteSet(set))
    }
}

impl CofiniteSet {
    pub fn new(excluded: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = excluded.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidOracle(
                "cofinite set must exclude something (X = N is not proper)".into(),
            ));
        }
        Ok(CofiniteSet(set))
    }
}

impl UltimatelyPeriodic {
    pub fn new(threshold: u64, period: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidOracle("period must be positive".into()));
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if residues.is_empty() {
            return Err(Error::InvalidOracle("no residues: X would be empty".into()));
        }
        if let Some(r) = residues.iter().find(|&&r| r >= period) {
            return Err(Error::InvalidOracle(format!("residue {r} not below period {period}")));
        }
        if threshold == 0 && residues.len() as u64 == period {
            return Err(Error::InvalidOracle("every residue from 0: X = N is not proper".into()));
        }
        Ok(UltimatelyPeriodic {
            threshold,
            period,
            residues,
        })
    }
}

fn numbers(list: &str) -> Result<Vec<u64>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::InvalidOracle(format!("bad number `{s}`")))
        })
        .collect()
}

fn parse_finite(arg: &str) -> Result<Arc<dyn MembershipOracle>> {
    Ok(Arc::new(FiniteSet::new(numbers(arg)?)?))
}

fn parse_cofinite(arg: &str) -> Result<Arc<dyn MembershipOracle>> {
    Ok(Arc::new(CofiniteSet::new(numbers(arg)?)?))
}

fn parse_evens(arg: &str) -> Result<Arc<dyn MembershipOracle>> {
    if !arg.is_empty() {
        return Err(Error::InvalidOracle("evens takes no argument".into()));
    }
    Ok(Arc::new(Evens))
}

/// `t=4,p=3,r=0,2`: the `r=` list runs to the end of the string.
fn parse_periodic(arg: &str) -> Result<Arc<dyn MembershipOracle>> {
    let bad = || Error::InvalidOracle(format!("periodic: expected `t=..,p=..,r=..`, got `{arg}`"));
    let rest = arg.strip_prefix("t=").ok_or_else(bad)?;
    let (t, rest) = rest.split_once(",p=").ok_or_else(bad)?;
    let (p, r) = rest.split_once(",r=").ok_or_else(bad)?;
    let t = t.trim().parse().map_err(|_| bad())?;
    let p = p.trim().parse().map_err(|_| bad())?;
    Ok(Arc::new(UltimatelyPeriodic::new(t, p, numbers(r)?)?))
}

pub struct OracleKind {
    pub name: &'static str,
    pub syntax: &'static str,
    parse: fn(&str) -> Result<Arc<dyn MembershipOracle>>,
}

pub static ORACLE_KINDS: &[OracleKind] = &[
    OracleKind {
        name: "finite",
        syntax: "finite:1,3,5",
        parse: parse_finite,
    },
    OracleKind {
        name: "cofinite",
        syntax: "cofinite:0,2",
        parse: parse_cofinite,
    },
    OracleKind {
        name: "periodic",
        syntax: "periodic:t=4,p=3,r=0,2",
        parse: parse_periodic,
    },
    OracleKind {
        name: "evens",
        syntax: "evens",
        parse: parse_evens,
    },
];

pub fn parse_oracle(spec: &str) -> Result<Arc<dyn MembershipOracle>> {
    let spec = spec.trim();
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let kind = ORACLE_KINDS
        .iter()
        .find(|k| k.name == name)
        .ok_or_else(|| Error::InvalidOracle(format!("unknown oracle kind `{name}`")))?;
    (kind.parse)(arg)
}
