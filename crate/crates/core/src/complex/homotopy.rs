//! Breadth-first 2-path search, Dehn-function samples of `K_n`, and the
//! n-quasi-simple-connectedness check on a ball.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::cayley::{CayleyBall, EdgeId, VertexId};
use crate::error::{Error, Result};
use crate::growth::{GrowthTable, GrowthValue};

use super::{paths_from, AtomicStep, DirectedPath, DirectedTwoComplex, TwoCell, TwoPath};

/// Default cap on 1-paths visited by one search.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyOutcome {
    /// A minimum-length 2-path.
    Found(TwoPath),
    /// Every 1-path reachable inside the ball was visited; none was the target.
    Exhausted { visited: usize },
    BudgetExhausted { visited: usize },
}

impl HomotopyOutcome {
    pub fn area(&self) -> Option<usize> {
        match self {
            HomotopyOutcome::Found(t) => Some(t.len()),
            _ => None,
        }
    }
}

struct PathCache<'b> {
    ball: &'b CayleyBall,
    n: usize,
    by_root: HashMap<VertexId, BTreeMap<VertexId, Vec<Vec<EdgeId>>>>,
}

impl<'b> PathCache<'b> {
    fn parallel(&mut self, from: VertexId, to: VertexId) -> &[Vec<EdgeId>] {
        let (ball, n) = (self.ball, self.n);
        self.by_root
            .entry(from)
            .or_insert_with(|| paths_from(ball, from, n))
            .get(&to)
            .map_or(&[], Vec::as_slice)
    }
}

/// Shortest 2-path from `p` to `q` in `K_n`, by breadth-first search over
/// 1-paths keyed by their edge sequence.
pub fn homotopy_search(
    k: &DirectedTwoComplex<'_>,
    p: &DirectedPath,
    q: &DirectedPath,
    step_budget: usize,
) -> Result<HomotopyOutcome> {
    if !p.is_parallel(q) {
        return Err(Error::NotParallel);
    }
    let b = k.ball();
    DirectedPath::new(b, p.start(), p.edges().to_vec())?;
    DirectedPath::new(b, q.start(), q.edges().to_vec())?;
    if p == q {
        return Ok(HomotopyOutcome::Found(TwoPath::identity(p.clone())));
    }

    let start = p.start();
    let mut cache = PathCache {
        ball: b,
        n: k.n(),
        by_root: HashMap::new(),
    };
    // state -> (parent state index, step that produced it)
    let mut states: Vec<Vec<EdgeId>> = vec![p.edges().to_vec()];
    let mut parent: Vec<Option<(usize, AtomicStep)>> = vec![None];
    let mut index: HashMap<Vec<EdgeId>, usize> = HashMap::from([(p.edges().to_vec(), 0)]);
    let mut queue = VecDeque::from([0usize]);

    while let Some(si) = queue.pop_front() {
        let cur = states[si].clone();
        let mut verts = Vec::with_capacity(cur.len() + 1);
        verts.push(start);
        verts.extend(cur.iter().map(|&e| b.edge(e).dst));

        for i in 0..=cur.len() {
            for j in i..=cur.len().min(i + k.n()) {
                let factor = &cur[i..j];
                let room = k.n() - factor.len();
                let bottoms: Vec<Vec<EdgeId>> = cache
                    .parallel(verts[i], verts[j])
                    .iter()
                    .filter(|c| c.len() <= room && c.as_slice() != factor)
                    .cloned()
                    .collect();
                for bottom in bottoms {
                    let next: Vec<EdgeId> = [&cur[..i], &bottom[..], &cur[j..]].concat();
                    if index.contains_key(&next) {
                        continue;
                    }
                    let step = AtomicStep {
                        prefix: cur[..i].to_vec(),
                        cell: TwoCell {
                            top: DirectedPath::from_raw(b, verts[i], factor.to_vec()),
                            bottom: DirectedPath::from_raw(b, verts[i], bottom),
                        },
                        suffix: cur[j..].to_vec(),
                    };
                    let ni = states.len();
                    index.insert(next.clone(), ni);
                    states.push(next.clone());
                    parent.push(Some((si, step)));
                    if next == q.edges() {
                        return Ok(HomotopyOutcome::Found(rebuild(b, p, &parent, ni)));
                    }
                    if states.len() > step_budget {
                        return Ok(HomotopyOutcome::BudgetExhausted { visited: states.len() });
                    }
                    queue.push_back(ni);
                }
            }
        }
    }
    Ok(HomotopyOutcome::Exhausted { visited: states.len() })
}

fn rebuild(b: &CayleyBall, p: &DirectedPath, parent: &[Option<(usize, AtomicStep)>], mut at: usize) -> TwoPath {
    let mut steps = Vec::new();
    while let Some((prev, step)) = &parent[at] {
        steps.push(step.clone());
        at = *prev;
    }
    steps.reverse();
    TwoPath::from_steps(b, p.clone(), steps).expect("search produces valid 2-paths")
}

/// Unordered pairs of distinct parallel paths from `root` with total length
/// at most `max_total`, ordered by (total length, p, q).
fn parallel_pairs(b: &CayleyBall, root: VertexId, max_total: usize) -> Vec<(DirectedPath, DirectedPath)> {
    let mut pairs = Vec::new();
    for (&end, group) in &paths_from(b, root, max_total) {
        for (i, p) in group.iter().enumerate() {
            for q in &group[i + 1..] {
                if p.len() + q.len() <= max_total {
                    pairs.push((
                        DirectedPath { start: root, edges: p.clone(), end },
                        DirectedPath { start: root, edges: q.clone(), end },
                    ));
                }
            }
        }
    }
    pairs.sort_by(|(p1, q1), (p2, q2)| {
        let key = |p: &DirectedPath, q: &DirectedPath| (p.len() + q.len(), p.labels(b), q.labels(b));
        key(p1, q1).cmp(&key(p2, q2))
    });
    pairs
}

/// Samples `gamma(i)` for `i <= i_max` over pairs rooted in `roots`.
///
/// A pair whose search space is exhausted counts as infinite area only when
/// the root satisfies the detour bound `len(root) + i_max + n <= L`;
/// otherwise it and any budget exhaustion make the entry `unknown`.
pub fn gamma_sample(
    k: &DirectedTwoComplex<'_>,
    i_max: usize,
    roots: &[VertexId],
    step_budget: usize,
) -> Result<GrowthTable> {
    let b = k.ball();
    for &r in roots {
        let len = b.vertex(r)?.len;
        if len + i_max > b.radius() {
            return Err(Error::BoundarySafety(format!(
                "root {r} at length {len} leaves no room for paths of length {i_max} in a radius-{} ball",
                b.radius()
            )));
        }
    }
    let mut by_total = vec![GrowthValue::Finite(0); i_max + 1];
    for &r in roots {
        let detour_safe = b.vertices()[r].len + i_max + k.n() <= b.radius();
        for (p, q) in parallel_pairs(b, r, i_max) {
            let t = p.len() + q.len();
            let value = match homotopy_search(k, &p, &q, step_budget)? {
                HomotopyOutcome::Found(tp) => GrowthValue::Finite(tp.len() as u64),
                HomotopyOutcome::Exhausted { .. } if detour_safe => GrowthValue::Infinite,
                _ => GrowthValue::Unknown,
            };
            by_total[t] = join(by_total[t], value);
        }
    }
    let mut acc = GrowthValue::Finite(0);
    let values: Vec<GrowthValue> = by_total
        .into_iter()
        .map(|v| {
            acc = join(acc, v);
            acc
        })
        .collect();
    Ok(GrowthTable::from_values(values))
}

/// Supremum, where `unknown` absorbs everything but a certified infinity.
fn join(a: GrowthValue, b: GrowthValue) -> GrowthValue {
    use GrowthValue::*;
    match (a, b) {
        (Infinite, _) | (_, Infinite) => Infinite,
        (Unknown, _) | (_, Unknown) => Unknown,
        (Finite(x), Finite(y)) => Finite(x.max(y)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QscVerdict {
    Pass,
    Fail(DirectedPath, DirectedPath),
    Inconclusive,
}

/// Verdict of [`check_qsc`]; it speaks only about this ball, up to `i_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QscReport {
    pub verdict: QscVerdict,
    pub n: usize,
    pub i_max: usize,
    pub roots: usize,
    pub pairs_checked: usize,
    pub inconclusive_pairs: usize,
}

/// Is every parallel pair with total length at most `i_max` homotopic in
/// `K_n` of the ball? Roots are the vertices with `len + i_max <= L`. A
/// failure is only reported for roots that also satisfy the detour bound
/// `len + i_max + n <= L`; other exhausted searches are inconclusive.
pub fn check_qsc(b: &CayleyBall, n: usize, i_max: usize, step_budget: usize) -> Result<QscReport> {
    let k = super::build_kn(b, n)?;
    if i_max > b.radius() {
        return Err(Error::BoundarySafety(format!(
            "i_max = {i_max} exceeds the ball radius {}",
            b.radius()
        )));
    }
    let roots: Vec<VertexId> = b
        .vertices()
        .iter()
        .filter(|v| v.len + i_max <= b.radius())
        .map(|v| v.id)
        .collect();
    let mut pairs_checked = 0;
    let mut inconclusive_pairs = 0;
    for &r in &roots {
        let detour_safe = b.vertices()[r].len + i_max + n <= b.radius();
        for (p, q) in parallel_pairs(b, r, i_max) {
            pairs_checked += 1;
            match homotopy_search(&k, &p, &q, step_budget)? {
                HomotopyOutcome::Found(_) => {}
                HomotopyOutcome::Exhausted { .. } if detour_safe => {
                    return Ok(QscReport {
                        verdict: QscVerdict::Fail(p, q),
                        n,
                        i_max,
                        roots: roots.len(),
                        pairs_checked,
                        inconclusive_pairs,
                    });
                }
                _ => inconclusive_pairs += 1,
            }
        }
    }
    Ok(QscReport {
        verdict: if inconclusive_pairs == 0 {
            QscVerdict::Pass
        } else {
            QscVerdict::Inconclusive
        },
        n,
        i_max,
        roots: roots.len(),
        pairs_checked,
        inconclusive_pairs,
    })
}
