//! The directed 2-complex `K_n` over a Cayley ball: its 2-cells are the
//! ordered pairs of distinct parallel paths of total length at most `n`.
//! Cells are never materialized; they are enumerated per root vertex.

mod homotopy;

use std::collections::BTreeMap;

use serde::Serialize;

pub use homotopy::{
    check_qsc, gamma_sample, homotopy_search, HomotopyOutcome, QscReport, QscVerdict, DEFAULT_STEP_BUDGET,
};

use crate::cayley::{CayleyBall, EdgeId, VertexId};
use crate::error::{Error, Result};
use crate::word::Gen;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedPath {
    start: VertexId,
    edges: Vec<EdgeId>,
    end: VertexId,
}

impl DirectedPath {
    pub fn empty(v: VertexId) -> Self {
        DirectedPath {
            start: v,
            edges: Vec::new(),
            end: v,
        }
    }

    pub fn new(b: &CayleyBall, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        b.vertex(start)?;
        let mut cur = start;
        for &e in &edges {
            let edge = b
                .edges()
                .get(e)
                .ok_or_else(|| Error::InvalidPath(format!("no edge {e}")))?;
            if edge.src != cur {
                return Err(Error::InvalidPath(format!("edge {e} does not leave vertex {cur}")));
            }
            cur = edge.dst;
        }
        Ok(DirectedPath { start, edges, end: cur })
    }

    /// The path from `start` reading `labels`, if it stays inside the ball.
    pub fn from_labels(b: &CayleyBall, start: VertexId, labels: &[Gen]) -> Result<Self> {
        b.vertex(start)?;
        let mut cur = start;
        let mut edges = Vec::with_capacity(labels.len());
        for &g in labels {
            let e = *b
                .out_edges(cur)
                .iter()
                .find(|&&e| b.edge(e).label == g)
                .ok_or_else(|| Error::InvalidPath(format!("no edge labelled {g} out of vertex {cur}")))?;
            edges.push(e);
            cur = b.edge(e).dst;
        }
        Ok(DirectedPath { start, edges, end: cur })
    }

    pub(crate) fn from_raw(b: &CayleyBall, start: VertexId, edges: Vec<EdgeId>) -> Self {
        let end = edges.last().map_or(start, |&e| b.edge(e).dst);
        DirectedPath { start, edges, end }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_parallel(&self, other: &DirectedPath) -> bool {
        self.start == other.start && self.end == other.end
    }

    pub fn labels(&self, b: &CayleyBall) -> Vec<Gen> {
        self.edges.iter().map(|&e| b.edge(e).label).collect()
    }

    pub fn render(&self, b: &CayleyBall) -> String {
        b.alphabet().render(&crate::word::Word(self.labels(b)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCell {
    pub top: DirectedPath,
    pub bottom: DirectedPath,
}

impl TwoCell {
    pub fn inverse(&self) -> TwoCell {
        TwoCell {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }
}

/// `prefix · cell · suffix`: rewrite the cell's top into its bottom in context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicStep {
    pub prefix: Vec<EdgeId>,
    pub cell: TwoCell,
    pub suffix: Vec<EdgeId>,
}

impl AtomicStep {
    pub fn top(&self) -> Vec<EdgeId> {
        [&self.prefix[..], self.cell.top.edges(), &self.suffix[..]].concat()
    }

    pub fn bottom(&self) -> Vec<EdgeId> {
        [&self.prefix[..], self.cell.bottom.edges(), &self.suffix[..]].concat()
    }
}

/// A composable sequence of atomic steps; its length is its area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPath {
    source: DirectedPath,
    steps: Vec<AtomicStep>,
}

impl TwoPath {
    pub fn identity(p: DirectedPath) -> Self {
        TwoPath {
            source: p,
            steps: Vec::new(),
        }
    }

    pub fn from_steps(b: &CayleyBall, source: DirectedPath, steps: Vec<AtomicStep>) -> Result<Self> {
        let t = TwoPath { source, steps };
        t.validate(b)?;
        Ok(t)
    }

    pub fn steps(&self) -> &[AtomicStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn top(&self) -> &DirectedPath {
        &self.source
    }

    pub fn bottom(&self, b: &CayleyBall) -> DirectedPath {
        match self.steps.last() {
            Some(s) => DirectedPath::from_raw(b, self.source.start, s.bottom()),
            None => self.source.clone(),
        }
    }

    /// `self` followed by `other`; requires `bottom(self) == top(other)`.
    pub fn compose(&self, b: &CayleyBall, other: &TwoPath) -> Result<TwoPath> {
        if self.bottom(b) != other.source {
            return Err(Error::InvalidPath("2-paths do not compose".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(TwoPath {
            source: self.source.clone(),
            steps,
        })
    }

    /// Checks the atomic-step conditions and that consecutive steps compose.
    pub fn validate(&self, b: &CayleyBall) -> Result<()> {
        let mut current = self.source.edges.clone();
        for (i, s) in self.steps.iter().enumerate() {
            let prefix = DirectedPath::new(b, self.source.start, s.prefix.clone())?;
            if prefix.end != s.cell.top.start || !s.cell.top.is_parallel(&s.cell.bottom) {
                return Err(Error::InvalidPath(format!("step {i}: cell not attached to its prefix")));
            }
            DirectedPath::new(b, s.cell.top.end, s.suffix.clone())?;
            if s.top() != current {
                return Err(Error::InvalidPath(format!("step {i}: top differs from previous bottom")));
            }
            current = s.bottom();
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct CellJson {
    top: Vec<EdgeId>,
    bottom: Vec<EdgeId>,
}

#[derive(Serialize)]
struct StepJson {
    prefix: Vec<EdgeId>,
    cell: CellJson,
    suffix: Vec<EdgeId>,
}

/// `[{"prefix": [..], "cell": {"top": [..], "bottom": [..]}, "suffix": [..]}, ..]`
/// with edge ids of the ball.
pub fn two_path_to_json(t: &TwoPath) -> String {
    let steps: Vec<StepJson> = t
        .steps
        .iter()
        .map(|s| StepJson {
            prefix: s.prefix.clone(),
            cell: CellJson {
                top: s.cell.top.edges.clone(),
                bottom: s.cell.bottom.edges.clone(),
            },
            suffix: s.suffix.clone(),
        })
        .collect();
    serde_json::to_string(&steps).expect("2-path serializes")
}

/// `K_n` over a ball.
#[derive(Debug, Clone, Copy)]
pub struct DirectedTwoComplex<'b> {
    ball: &'b CayleyBall,
    n: usize,
}

pub fn build_kn(b: &CayleyBall, n: usize) -> Result<DirectedTwoComplex<'_>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("K_n needs n >= 2, got {n}")));
    }
    Ok(DirectedTwoComplex { ball: b, n })
}

/// All paths out of `v` with at most `max_len` edges, grouped by end vertex,
/// each group sorted by (length, edge ids).
pub(crate) fn paths_from(b: &CayleyBall, v: VertexId, max_len: usize) -> BTreeMap<VertexId, Vec<Vec<EdgeId>>> {
    let mut out: BTreeMap<VertexId, Vec<Vec<EdgeId>>> = BTreeMap::new();
    let mut stack: Vec<(VertexId, Vec<EdgeId>)> = vec![(v, Vec::new())];
    while let Some((cur, path)) = stack.pop() {
        if path.len() < max_len {
            for &e in b.out_edges(cur) {
                let mut p = path.clone();
                p.push(e);
                stack.push((b.edge(e).dst, p));
            }
        }
        out.entry(cur).or_default().push(path);
    }
    for group in out.values_mut() {
        group.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    }
    out
}

impl<'b> DirectedTwoComplex<'b> {
    pub fn ball(&self) -> &'b CayleyBall {
        self.ball
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_cell(&self, top: &DirectedPath, bottom: &DirectedPath) -> bool {
        top.is_parallel(bottom) && top != bottom && top.len() + bottom.len() <= self.n
    }

    /// Every cell whose paths start at `v`, ordered by (top, bottom).
    pub fn cells_rooted_at(&self, v: VertexId) -> Result<Vec<TwoCell>> {
        self.ball.vertex(v)?;
        let mut cells = Vec::new();
        for (&end, group) in &paths_from(self.ball, v, self.n) {
            for p in group {
                for q in group {
                    if p != q && p.len() + q.len() <= self.n {
                        cells.push(TwoCell {
                            top: DirectedPath { start: v, edges: p.clone(), end },
                            bottom: DirectedPath { start: v, edges: q.clone(), end },
                        });
                    }
                }
            }
        }
        cells.sort_by(|a, b| {
            (a.top.len(), &a.top.edges, a.bottom.len(), &a.bottom.edges)
                .cmp(&(b.top.len(), &b.top.edges, b.bottom.len(), &b.bottom.edges))
        });
        Ok(cells)
    }
}
