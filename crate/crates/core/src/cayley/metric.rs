//! Directed distances with exactness bookkeeping.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::rewriting::reduce;
use crate::word::Word;

use super::{CayleyBall, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistValue {
    Finite(u64),
    /// Certified: no word at all leads from source to target.
    Infinite,
    /// Only known to exceed the bound (possibly infinite).
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtendedDistance {
    pub value: DistValue,
    pub exact: bool,
    /// Every path of length at most `bound` was examined.
    pub bound: u64,
}

impl ExtendedDistance {
    pub fn finite(k: u64, bound: u64) -> Self {
        ExtendedDistance {
            value: DistValue::Finite(k),
            exact: true,
            bound,
        }
    }

    pub fn infinite(bound: u64) -> Self {
        ExtendedDistance {
            value: DistValue::Infinite,
            exact: true,
            bound,
        }
    }

    pub fn unresolved(bound: u64) -> Self {
        ExtendedDistance {
            value: DistValue::Unresolved,
            exact: false,
            bound,
        }
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.value {
            DistValue::Finite(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value == DistValue::Infinite
    }

    /// Exact value, with `None` standing for infinity.
    pub fn exact_value(&self) -> Option<Option<u64>> {
        match self.value {
            DistValue::Finite(k) => Some(Some(k)),
            DistValue::Infinite => Some(None),
            DistValue::Unresolved => None,
        }
    }

    /// A certified lower bound on the true distance (`None` for infinity).
    pub fn lower_bound(&self) -> Option<u64> {
        match self.value {
            DistValue::Finite(k) => Some(k),
            DistValue::Infinite => None,
            DistValue::Unresolved => Some(self.bound + 1),
        }
    }
}

impl Serialize for ExtendedDistance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExtendedDistance", 3)?;
        match self.value {
            DistValue::Finite(k) => st.serialize_field("value", &k)?,
            DistValue::Infinite => st.serialize_field("value", "inf")?,
            DistValue::Unresolved => st.serialize_field("value", &Option::<u64>::None)?,
        }
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("bound", &self.bound)?;
        st.end()
    }
}

/// A finite semimetric space whose points are the vertices of a ball.
pub trait Semimetric: Send + Sync {
    fn size(&self) -> usize;
    fn dist(&self, x: VertexId, y: VertexId) -> ExtendedDistance;
}

/// Breadth-first search from `x` inside the ball, truncated at `L - len(x)`.
///
/// Any path of length k from x stays within radius len(x) + k, so the
/// truncated search is complete up to that bound. Graded balls certify
/// infinity for everything the search misses.
pub fn distance(b: &CayleyBall, x: VertexId, y: VertexId) -> Result<ExtendedDistance> {
    b.vertex(x)?;
    b.vertex(y)?;
    Ok(bfs_row(b, x)[y])
}

fn bfs_row(b: &CayleyBall, x: VertexId) -> Vec<ExtendedDistance> {
    let bound = (b.radius() - b.vertices()[x].len) as u64;
    let mut dist: Vec<Option<u64>> = vec![None; b.len()];
    dist[x] = Some(0);
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        if d == bound {
            continue;
        }
        for &e in b.out_edges(v) {
            let w = b.edge(e).dst;
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist.into_iter()
        .map(|d| match d {
            Some(k) => ExtendedDistance::finite(k, bound),
            None if b.is_graded() => ExtendedDistance::infinite(bound),
            None => ExtendedDistance::unresolved(bound),
        })
        .collect()
}

/// The ball's own truncated distances, tabulated.
pub struct BallMetric {
    table: Vec<Vec<ExtendedDistance>>,
}

impl BallMetric {
    pub fn new(b: &CayleyBall) -> Self {
        BallMetric {
            table: (0..b.len()).map(|x| bfs_row(b, x)).collect(),
        }
    }
}

impl Semimetric for BallMetric {
    fn size(&self) -> usize {
        self.table.len()
    }
    fn dist(&self, x: VertexId, y: VertexId) -> ExtendedDistance {
        self.table[x][y]
    }
}

/// Ball vertices as a subspace of the whole Cayley graph: searches run
/// through normal forms of the certified presentation, not limited to the
/// ball, up to `depth` steps.
pub struct SubspaceMetric {
    table: Vec<Vec<ExtendedDistance>>,
}

impl SubspaceMetric {
    pub fn new(b: &CayleyBall, p: &Presentation, depth: usize) -> Result<Self> {
        if !p.is_certified() || !b.is_certified() {
            return Err(Error::NotConfluent(p.name().to_string()));
        }
        let index: HashMap<&Word, VertexId> = b.vertices().iter().map(|v| (&v.repr, v.id)).collect();
        let depth = depth as u64;
        let mut table = Vec::with_capacity(b.len());
        for v in b.vertices() {
            let mut row: Vec<Option<u64>> = vec![None; b.len()];
            row[v.id] = Some(0);
            let mut seen: HashMap<Word, ()> = HashMap::from([(v.repr.clone(), ())]);
            let mut frontier = vec![v.repr.clone()];
            for d in 1..=depth {
                let mut next = Vec::new();
                for w in &frontier {
                    for g in p.alphabet().gens() {
                        let nf = reduce(&w.push(g), p);
                        if seen.insert(nf.clone(), ()).is_none() {
                            if let Some(&id) = index.get(&nf) {
                                row[id] = Some(d);
                            }
                            next.push(nf);
                        }
                    }
                }
                frontier = next;
                if frontier.is_empty() {
                    break;
                }
            }
            table.push(
                row.into_iter()
                    .map(|d| match d {
                        Some(k) => ExtendedDistance::finite(k, depth),
                        None if p.is_graded() && depth >= b.radius() as u64 => {
                            ExtendedDistance::infinite(depth)
                        }
                        None => ExtendedDistance::unresolved(depth),
                    })
                    .collect(),
            );
        }
        Ok(SubspaceMetric { table })
    }
}

impl Semimetric for SubspaceMetric {
    fn size(&self) -> usize {
        self.table.len()
    }
    fn dist(&self, x: VertexId, y: VertexId) -> ExtendedDistance {
        self.table[x][y]
    }
}

pub const METRIC_NAMES: &[&str] = &["ball", "subspace"];

/// Selects a distance strategy by name; `depth` only matters for `subspace`.
pub fn metric_by_name(
    name: &str,
    b: &CayleyBall,
    p: &Presentation,
    depth: usize,
) -> Result<Box<dyn Semimetric>> {
    match name {
        "ball" => Ok(Box::new(BallMetric::new(b))),
        "subspace" => Ok(Box::new(SubspaceMetric::new(b, p, depth)?)),
        other => Err(Error::Parse(format!(
            "unknown metric `{other}` (expected one of {METRIC_NAMES:?})"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::enumerate_ball;
    use crate::presentation::builtin;

    #[test]
    fn ray_distances() {
        let b = enumerate_ball(&builtin("free(1)").unwrap(), 3, 2).unwrap();
        assert_eq!(distance(&b, 0, 1).unwrap(), ExtendedDistance::finite(1, 3));
        // graded: going back down is impossible
        assert_eq!(distance(&b, 1, 0).unwrap(), ExtendedDistance::infinite(2));
        assert_eq!(distance(&b, 2, 2).unwrap().as_finite(), Some(0));
        assert!(matches!(distance(&b, 0, 9), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn bicyclic_distances() {
        let p = builtin("bicyclic").unwrap();
        let b = enumerate_ball(&p, 4, 4).unwrap();
        let a = b.find(&Word(vec![0])).unwrap();
        let bb = b.find(&Word(vec![1])).unwrap();
        assert_eq!(distance(&b, a, 0).unwrap(), ExtendedDistance::finite(1, 3));
        let d = distance(&b, bb, 0).unwrap();
        assert_eq!(d, ExtendedDistance::unresolved(3));
        assert_eq!(d.lower_bound(), Some(4));
    }

    #[test]
    fn subspace_metric_sees_past_the_ball() {
        let p = builtin("f2_group").unwrap();
        let b = enumerate_ball(&p, 2, 2).unwrap();
        let m = SubspaceMetric::new(&b, &p, 4).unwrap();
        let xx = b.find(&Word(vec![0, 0])).unwrap();
        let yy = b.find(&Word(vec![2, 2])).unwrap();
        assert_eq!(m.dist(xx, yy).as_finite(), Some(4));
        assert!(!BallMetric::new(&b).dist(xx, yy).exact);
        assert!(metric_by_name("l2", &b, &p, 4).is_err());
        let s = builtin("section4_S").unwrap();
        let sb = enumerate_ball(&s, 1, 1).unwrap();
        assert!(SubspaceMetric::new(&sb, &s, 2).is_err());
    }
}
