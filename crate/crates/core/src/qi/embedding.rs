use std::collections::BTreeSet;

use serde::Serialize;

use crate::cayley::{BallMetric, CayleyBall, ExtendedDistance, Semimetric, VertexId};
use crate::error::{Error, Result};
use crate::Rational;

use super::{int, QiSpec, VertexMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    Pass,
    Counterexample(VertexId, VertexId),
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub verdict: EmbeddingVerdict,
    /// Ordered pairs skipped because some distance was unresolved.
    pub skipped: usize,
}

impl Serialize for EmbeddingReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (name, witness) = match self.verdict {
            EmbeddingVerdict::Pass => ("pass", None),
            EmbeddingVerdict::Counterexample(a, b) => ("counterexample", Some(vec![a, b])),
            EmbeddingVerdict::Inconclusive => ("inconclusive", None),
        };
        super::verdict_json(s, name, witness, self.skipped)
    }
}

/// Whether `d_Y` lies within the two bounds given by `d_X`, with `None`
/// for infinity. An infinite `d_X` makes the upper bound vacuous and
/// forces `d_Y` to be infinite through the lower one.
fn within(dx: Option<u64>, dy: Option<u64>, spec: &QiSpec) -> bool {
    match (dx, dy) {
        (None, None) => true,
        (None, Some(_)) | (Some(_), None) => false,
        (Some(a), Some(b)) => {
            let (a, b) = (int(a), int(b));
            a / spec.lambda - spec.eps <= b && b <= spec.lambda * a + spec.eps
        }
    }
}

/// Checks the embedding inequalities for `f: X -> Y` on the balls' own
/// distances.
pub fn verify_qi_embedding(x: &CayleyBall, y: &CayleyBall, f: &VertexMap, spec: &QiSpec) -> Result<EmbeddingReport> {
    verify_qi_embedding_in(&BallMetric::new(x), &BallMetric::new(y), f, spec)
}

/// Checks `d_X(a,b)/λ - ε <= d_Y(f(a), f(b)) <= λ d_X(a,b) + ε` over all
/// ordered pairs in id order and reports the first violation.
pub fn verify_qi_embedding_in(
    x: &dyn Semimetric,
    y: &dyn Semimetric,
    f: &VertexMap,
    spec: &QiSpec,
) -> Result<EmbeddingReport> {
    f.check_sizes(x.size(), y.size())?;
    let mut skipped = 0;
    for a in 0..x.size() {
        for b in 0..x.size() {
            if a == b {
                continue;
            }
            let (Some(dx), Some(dy)) = (x.dist(a, b).exact_value(), y.dist(f.get(a), f.get(b)).exact_value()) else {
                skipped += 1;
                continue;
            };
            if !within(dx, dy, spec) {
                return Ok(EmbeddingReport {
                    verdict: EmbeddingVerdict::Counterexample(a, b),
                    skipped,
                });
            }
        }
    }
    let verdict = if skipped == 0 {
        EmbeddingVerdict::Pass
    } else {
        EmbeddingVerdict::Inconclusive
    };
    Ok(EmbeddingReport { verdict, skipped })
}

/// Smallest `ε >= 0` for which `f` satisfies both embedding inequalities
/// with the given `λ`, or `None` when some distance is unresolved or no
/// finite `ε` works.
pub fn embedding_slack(x: &dyn Semimetric, y: &dyn Semimetric, f: &VertexMap, lambda: Rational) -> Option<Rational> {
    let mut eps = Rational::from_integer(0);
    for a in 0..x.size() {
        for b in 0..x.size() {
            let dx = x.dist(a, b).exact_value()?;
            let dy = y.dist(f.get(a), f.get(b)).exact_value()?;
            match (dx, dy) {
                (None, None) => {}
                (Some(p), Some(q)) => {
                    let (p, q) = (int(p), int(q));
                    eps = eps.max(p / lambda - q).max(q - lambda * p);
                }
                _ => return None,
            }
        }
    }
    Some(eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityVerdict {
    Pass,
    Counterexample(VertexId),
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityReport {
    pub verdict: DensityVerdict,
    /// Points for which neither a witness nor a certified failure was found.
    pub skipped: usize,
}

impl Serialize for DensityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (name, witness) = match self.verdict {
            DensityVerdict::Pass => ("pass", None),
            DensityVerdict::Counterexample(y) => ("counterexample", Some(y)),
            DensityVerdict::Inconclusive => ("inconclusive", None),
        };
        super::verdict_json(s, name, witness, self.skipped)
    }
}

fn certainly_exceeds(d: ExtendedDistance, mu: Rational) -> bool {
    match d.lower_bound() {
        None => true,
        Some(k) => int(k) > mu,
    }
}

fn exactly_within(d: ExtendedDistance, mu: Rational) -> bool {
    d.as_finite().is_some_and(|k| int(k) <= mu)
}

pub fn check_quasi_dense(y: &CayleyBall, image: &BTreeSet<VertexId>, mu: Rational) -> Result<DensityReport> {
    check_quasi_dense_in(&BallMetric::new(y), image, mu)
}

/// Looks for every `y` a point `z` of the image with `d(y,z) <= μ` and
/// `d(z,y) <= μ`. A point fails when every candidate is certified too far
/// in some direction.
pub fn check_quasi_dense_in(y: &dyn Semimetric, image: &BTreeSet<VertexId>, mu: Rational) -> Result<DensityReport> {
    if let Some(&bad) = image.iter().find(|&&z| z >= y.size()) {
        return Err(Error::MapOutOfRange(bad));
    }
    let mut skipped = 0;
    for p in 0..y.size() {
        if image.contains(&p) {
            continue;
        }
        let mut all_fail = true;
        let mut found = false;
        for &z in image {
            let (there, back) = (y.dist(p, z), y.dist(z, p));
            if exactly_within(there, mu) && exactly_within(back, mu) {
                found = true;
                break;
            }
            if !(certainly_exceeds(there, mu) || certainly_exceeds(back, mu)) {
                all_fail = false;
            }
        }
        if found {
            continue;
        }
        if all_fail {
            return Ok(DensityReport {
                verdict: DensityVerdict::Counterexample(p),
                skipped,
            });
        }
        skipped += 1;
    }
    let verdict = if skipped == 0 {
        DensityVerdict::Pass
    } else {
        DensityVerdict::Inconclusive
    };
    Ok(DensityReport { verdict, skipped })
}
