use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::{GrowthTable, GrowthValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeVerdict {
    /// `f(j) <= a g(aj) + aj` on the whole checkable range.
    Holds,
    Violation(usize),
    /// No violation, but some entries were unknown.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeReport {
    pub verdict: TypeVerdict,
    /// Number of `j` for which the inequality was decided.
    pub checked: usize,
    pub skipped: usize,
}

impl Serialize for TypeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (name, witness) = match self.verdict {
            TypeVerdict::Holds => ("holds", None),
            TypeVerdict::Violation(j) => ("violation", Some(j)),
            TypeVerdict::Inconclusive => ("inconclusive", None),
        };
        super::verdict_json(s, name, witness, self.skipped)
    }
}

/// Checks `f ≺ g` with the witness `a` for every `j` in `f`'s table such
/// that `aj` is in `g`'s table.
pub fn type_leq(f: &GrowthTable, g: &GrowthTable, a: u64) -> Result<TypeReport> {
    if a == 0 {
        return Err(Error::InvalidSpec("the witness a must be at least 1".into()));
    }
    let a = a as usize;
    let mut checked = 0;
    let mut skipped = 0;
    for (j, fj) in f.iter() {
        let Some(gj) = g.get(a * j) else { continue };
        let ok = match (fj, gj) {
            (_, GrowthValue::Infinite) => Some(true),
            (GrowthValue::Unknown, _) | (_, GrowthValue::Unknown) => None,
            (GrowthValue::Infinite, GrowthValue::Finite(_)) => Some(false),
            (GrowthValue::Finite(x), GrowthValue::Finite(y)) => {
                Some(x as u128 <= a as u128 * y as u128 + (a * j) as u128)
            }
        };
        match ok {
            Some(true) => checked += 1,
            Some(false) => {
                return Ok(TypeReport {
                    verdict: TypeVerdict::Violation(j),
                    checked,
                    skipped,
                })
            }
            None => skipped += 1,
        }
    }
    if checked + skipped == 0 {
        return Err(Error::EmptyRange);
    }
    let verdict = if skipped == 0 {
        TypeVerdict::Holds
    } else {
        TypeVerdict::Inconclusive
    };
    Ok(TypeReport { verdict, checked, skipped })
}

/// Smallest `a <= a_max` for which [`type_leq`] holds, if any. Since `≺`
/// quantifies over all `a`, `None` only means no witness up to `a_max`.
pub fn type_witness_search(f: &GrowthTable, g: &GrowthTable, a_max: u64) -> Result<Option<u64>> {
    let mut any_range = false;
    for a in 1..=a_max {
        match type_leq(f, g, a) {
            Ok(r) => {
                any_range = true;
                if r.verdict == TypeVerdict::Holds {
                    return Ok(Some(a));
                }
            }
            Err(Error::EmptyRange) => {}
            Err(e) => return Err(e),
        }
    }
    if any_range {
        Ok(None)
    } else {
        Err(Error::EmptyRange)
    }
}
