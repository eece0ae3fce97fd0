use std::collections::BTreeMap;

use serde::Serialize;

use crate::cayley::{BallMetric, CayleyBall, Semimetric, VertexId};
use crate::error::{Error, Result};
use crate::Rational;

use super::embedding::{check_quasi_dense_in, verify_qi_embedding_in, DensityVerdict, EmbeddingVerdict};
use super::{int, QiSpec, VertexMap};

/// Output of [`quasi_inverse`]: the map `f: X -> Y`, the constants for
/// which `f` and `g` are both quasi-isometries, and the chosen `x̂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiInverse {
    #[serde(serialize_with = "map_table")]
    pub f: VertexMap,
    pub spec: QiSpec,
    pub hat: Vec<VertexId>,
}

fn map_table<S: serde::Serializer>(m: &VertexMap, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.table().serialize(s)
}

/// `σ = max((ε′+2μ′)/λ′, λ′(ε′+2μ′))`, `ε = max(ε′, σ)`,
/// `μ = max(μ′, ε′+1)` and `λ = λ′`.
pub fn inverse_constants(given: &QiSpec) -> QiSpec {
    let QiSpec { lambda: l, eps: e, mu: m } = *given;
    let spread = e + Rational::from_integer(2) * m;
    let sigma = (spread / l).max(l * spread);
    QiSpec {
        lambda: l,
        eps: e.max(sigma),
        mu: m.max(e + Rational::from_integer(1)),
    }
}

/// The bare construction, without checking any hypothesis on `g`.
///
/// Points of `im(g)` are their own `x̂`; any other `x` takes the smallest
/// image point within `μ′` in both directions. Each image point is sent to
/// its smallest preimage and every `x` to the image of its `x̂`.
pub fn quasi_inverse_construction(
    x: &dyn Semimetric,
    g: &VertexMap,
    mu_prime: Rational,
) -> Result<(VertexMap, Vec<VertexId>)> {
    g.check_sizes(g.source_size(), x.size())?;
    let mut preimage: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (src, &dst) in g.table().iter().enumerate() {
        preimage.entry(dst).or_insert(src);
    }
    let close = |d: crate::cayley::ExtendedDistance| d.as_finite().is_some_and(|k| int(k) <= mu_prime);
    let hat: Vec<VertexId> = (0..x.size())
        .map(|p| {
            if preimage.contains_key(&p) {
                return Ok(p);
            }
            preimage
                .keys()
                .copied()
                .find(|&z| close(x.dist(p, z)) && close(x.dist(z, p)))
                .ok_or_else(|| Error::NoNearbyImagePoint {
                    vertex: p,
                    mu: mu_prime.to_string(),
                })
        })
        .collect::<Result<_>>()?;
    let f = VertexMap::new(hat.iter().map(|h| preimage[h]).collect(), g.source_size())?;
    Ok((f, hat))
}

pub fn quasi_inverse(x: &CayleyBall, y: &CayleyBall, g: &VertexMap, given: &QiSpec) -> Result<QuasiInverse> {
    quasi_inverse_in(&BallMetric::new(x), &BallMetric::new(y), g, given)
}

/// Builds a quasi-inverse `f: X -> Y` of the quasi-isometry `g: Y -> X`.
///
/// `g` is checked against `given` first, on exact distances only. The
/// result is verified exhaustively with [`check_inverse_conclusions`]; a
/// failure there is returned as an error, never as a degraded result.
pub fn quasi_inverse_in(
    x: &dyn Semimetric,
    y: &dyn Semimetric,
    g: &VertexMap,
    given: &QiSpec,
) -> Result<QuasiInverse> {
    g.check_sizes(y.size(), x.size())?;
    let emb = verify_qi_embedding_in(y, x, g, given)?;
    match emb.verdict {
        EmbeddingVerdict::Pass => {}
        EmbeddingVerdict::Counterexample(a, b) => {
            return Err(Error::HypothesisFailed(format!(
                "g breaks the embedding inequalities {given} at the pair ({a}, {b})"
            )));
        }
        EmbeddingVerdict::Inconclusive => {
            return Err(Error::HypothesisFailed(format!(
                "{} pairs have unresolved distances",
                emb.skipped
            )));
        }
    }
    let dense = check_quasi_dense_in(x, &g.image(), given.mu)?;
    match dense.verdict {
        DensityVerdict::Pass => {}
        DensityVerdict::Counterexample(v) => {
            return Err(Error::NoNearbyImagePoint {
                vertex: v,
                mu: given.mu.to_string(),
            });
        }
        DensityVerdict::Inconclusive => {
            return Err(Error::HypothesisFailed(format!(
                "density of im(g) is undecided at {} points",
                dense.skipped
            )));
        }
    }
    let (f, hat) = quasi_inverse_construction(x, g, given.mu)?;
    let spec = inverse_constants(given);
    check_inverse_conclusions(x, y, &f, g, &spec, given.mu)?;
    Ok(QuasiInverse { f, spec, hat })
}

/// Checks that `f` and `g` are both `spec`-quasi-isometries and that
/// `d(y, fg(y))`, `d(fg(y), y) <= μ`, `d(x, gf(x))`, `d(gf(x), x) <= μ′`,
/// `gfg = g` and `fgf = f`. The error names the first failing statement.
pub fn check_inverse_conclusions(
    x: &dyn Semimetric,
    y: &dyn Semimetric,
    f: &VertexMap,
    g: &VertexMap,
    spec: &QiSpec,
    mu_prime: Rational,
) -> Result<()> {
    f.check_sizes(x.size(), y.size())?;
    g.check_sizes(y.size(), x.size())?;
    let fail = |msg: String| Err(Error::HypothesisFailed(msg));
    let within = |m: &dyn Semimetric, a: VertexId, b: VertexId, bound: Rational| {
        m.dist(a, b).as_finite().is_some_and(|k| int(k) <= bound)
    };

    for q in 0..y.size() {
        let back = f.get(g.get(q));
        if !(within(y, q, back, spec.mu) && within(y, back, q, spec.mu)) {
            return fail(format!(
                "(i) fails at y = {q}: fg(y) = {back} is not within {} both ways (d = {:?}, {:?})",
                spec.mu,
                y.dist(q, back).value,
                y.dist(back, q).value
            ));
        }
        if g.get(back) != g.get(q) {
            return fail(format!("(iii) fails at y = {q}"));
        }
    }
    for p in 0..x.size() {
        let back = g.get(f.get(p));
        if !(within(x, p, back, mu_prime) && within(x, back, p, mu_prime)) {
            return fail(format!("(ii) fails at x = {p}: gf(x) = {back} is not within {mu_prime} both ways"));
        }
        if f.get(back) != f.get(p) {
            return fail(format!("(iv) fails at x = {p}"));
        }
    }
    for (name, src, dst, map) in [("f", x, y, f), ("g", y, x, g)] {
        let emb = verify_qi_embedding_in(src, dst, map, spec)?;
        if emb.verdict != EmbeddingVerdict::Pass {
            return fail(format!("{name} is not a {spec}-embedding: {:?}", emb.verdict));
        }
        let dense = check_quasi_dense_in(dst, &map.image(), spec.mu)?;
        if dense.verdict != DensityVerdict::Pass {
            return fail(format!("im({name}) is not {}-dense: {:?}", spec.mu, dense.verdict));
        }
    }
    Ok(())
}
