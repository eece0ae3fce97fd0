//! Radius-L balls of right Cayley graphs.
//!
//! A ball holds every element at distance at most L from the identity,
//! together with every edge `x -s-> xs` whose target is also in the ball.
//! Frontier vertices (distance exactly L) therefore only carry the edges that
//! fall back inside.

mod export;
mod metric;
mod quasimetric;
mod scc;
mod undirected;

use std::collections::HashMap;

pub use export::{ball_from_json, ball_to_dot, ball_to_json, BallJson};
pub use metric::{
    distance, metric_by_name, BallMetric, DistValue, ExtendedDistance, Semimetric, SubspaceMetric,
    METRIC_NAMES,
};
pub use quasimetric::{check_quasimetric, check_quasimetric_in, QuasimetricReport, QuasimetricVerdict};
pub use scc::{schutzenberger_graph, strongly_connected_components, Component, SubDigraph};
pub use undirected::UndirectedView;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::rewriting::{reduce, DEFAULT_WORD_BUDGET};
use crate::word::{Alphabet, Gen, Word};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Default cap on ball vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub repr: Word,
    pub len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: VertexId,
    pub label: Gen,
    pub dst: VertexId,
}

/// A product that might coincide with an earlier vertex, but the bounded
/// search could not tell; it was kept as the separate vertex `vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnresolvedMerge {
    pub vertex: VertexId,
    pub product: Word,
}

#[derive(Debug, Clone)]
pub struct CayleyBall {
    radius: usize,
    alphabet: Alphabet,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeId>>,
    inc: Vec<Vec<EdgeId>>,
    frontier: Vec<VertexId>,
    certified: bool,
    graded: bool,
    unresolved: Vec<UnresolvedMerge>,
}

#[derive(Debug, Clone, Copy)]
pub struct BallOptions {
    pub depth_bound: usize,
    pub vertex_budget: usize,
    pub word_budget: usize,
}

impl Default for BallOptions {
    fn default() -> Self {
        BallOptions {
            depth_bound: 6,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            word_budget: DEFAULT_WORD_BUDGET,
        }
    }
}

impl CayleyBall {
    /// Assembles a ball from BFS-ordered vertices and edges.
    ///
    /// `graded` may only be set for certified balls of length-preserving
    /// presentations: it licenses certifying infinite distances.
    pub fn from_parts(
        radius: usize,
        alphabet: Alphabet,
        vertices: Vec<Vertex>,
        mut edges: Vec<Edge>,
        certified: bool,
        graded: bool,
        unresolved: Vec<UnresolvedMerge>,
    ) -> Result<Self> {
        let n = vertices.len();
        if n == 0 || !vertices[0].repr.is_empty() || vertices[0].len != 0 {
            return Err(Error::InvalidPath("vertex 0 must be the identity".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.id != i {
                return Err(Error::UnknownVertex(v.id));
            }
        }
        edges.sort();
        edges.dedup();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (eid, e) in edges.iter().enumerate() {
            if e.src >= n {
                return Err(Error::UnknownVertex(e.src));
            }
            if e.dst >= n {
                return Err(Error::UnknownVertex(e.dst));
            }
            out[e.src].push(eid);
            inc[e.dst].push(eid);
        }
        let frontier = vertices.iter().filter(|v| v.len == radius).map(|v| v.id).collect();
        Ok(CayleyBall {
            radius,
            alphabet,
            vertices,
            edges,
            out,
            inc,
            frontier,
            certified,
            graded: graded && certified,
            unresolved,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> Result<&Vertex> {
        self.vertices.get(id).ok_or(Error::UnknownVertex(id))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Out-edge ids of `v`, in label order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn frontier(&self) -> &[VertexId] {
        &self.frontier
    }

    pub fn is_frontier(&self, v: VertexId) -> bool {
        self.vertices[v].len == self.radius
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Certified, and every edge raises length by one in the whole monoid.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn unresolved(&self) -> &[UnresolvedMerge] {
        &self.unresolved
    }

    pub fn find(&self, repr: &Word) -> Option<VertexId> {
        self.vertices.iter().position(|v| &v.repr == repr)
    }

    /// The vertex reached from `from` by reading `labels`, if the walk stays in the ball.
    pub fn follow(&self, from: VertexId, labels: &[Gen]) -> Option<VertexId> {
        let mut cur = from;
        for &g in labels {
            let e = self.out[cur].iter().find(|&&e| self.edges[e].label == g)?;
            cur = self.edges[*e].dst;
        }
        Some(cur)
    }

    pub fn successor(&self, v: VertexId, g: Gen) -> Option<VertexId> {
        self.follow(v, &[g])
    }

    /// Directed forest rooted at the identity: the root has no in-edges and
    /// every other vertex has exactly one predecessor vertex, one layer below.
    pub fn is_directed_forest(&self) -> bool {
        self.vertices.iter().all(|v| {
            let mut preds: Vec<VertexId> = self.inc[v.id].iter().map(|&e| self.edges[e].src).collect();
            preds.sort_unstable();
            preds.dedup();
            if v.id == 0 {
                preds.is_empty()
            } else {
                preds.len() == 1 && self.vertices[preds[0]].len + 1 == v.len
            }
        })
    }

    /// Distinct out-neighbours of `v`.
    pub fn out_degree(&self, v: VertexId) -> usize {
        let mut t: Vec<VertexId> = self.out[v].iter().map(|&e| self.edges[e].dst).collect();
        t.sort_unstable();
        t.dedup();
        t.len()
    }

    pub fn render(&self, v: VertexId) -> String {
        self.alphabet.render(&self.vertices[v].repr)
    }
}

/// Decides which existing vertex, if any, a product `repr(x)·s` equals.
trait ProductResolver {
    fn resolve(&mut self, product: &Word, known: &HashMap<Word, VertexId>, reprs: &[Vertex]) -> Resolution;
}

enum Resolution {
    Existing(VertexId),
    New { repr: Word, unresolved: bool },
}

/// Certified presentations: products are identified through normal forms.
struct NormalFormResolver<'p> {
    pres: &'p Presentation,
}

impl ProductResolver for NormalFormResolver<'_> {
    fn resolve(&mut self, product: &Word, known: &HashMap<Word, VertexId>, _: &[Vertex]) -> Resolution {
        let nf = reduce(product, self.pres);
        match known.get(&nf) {
            Some(&id) => Resolution::Existing(id),
            None => Resolution::New {
                repr: nf,
                unresolved: false,
            },
        }
    }
}

/// Uncertified presentations: one bounded breadth-first search from the
/// product; the earliest vertex it reaches is the match.
struct SearchResolver<'p> {
    pres: &'p Presentation,
    depth_bound: usize,
    word_budget: usize,
}

impl ProductResolver for SearchResolver<'_> {
    fn resolve(&mut self, product: &Word, known: &HashMap<Word, VertexId>, _: &[Vertex]) -> Resolution {
        if let Some(&id) = known.get(product) {
            return Resolution::Existing(id);
        }
        let mut seen: HashMap<Word, ()> = HashMap::from([(product.clone(), ())]);
        let mut frontier = vec![product.clone()];
        let mut best: Option<VertexId> = None;
        let mut exhausted = false;
        for _ in 0..self.depth_bound {
            let mut next = Vec::new();
            for w in &frontier {
                for n in self.pres.neighbors(w) {
                    if seen.insert(n.clone(), ()).is_none() {
                        if let Some(&id) = known.get(&n) {
                            best = Some(best.map_or(id, |b| b.min(id)));
                        }
                        next.push(n);
                    }
                }
            }
            if next.is_empty() {
                exhausted = true;
                break;
            }
            if seen.len() > self.word_budget {
                break;
            }
            frontier = next;
        }
        match best {
            Some(id) => Resolution::Existing(id),
            None => Resolution::New {
                repr: product.clone(),
                unresolved: !exhausted,
            },
        }
    }
}

pub fn enumerate_ball(p: &Presentation, radius: usize, depth_bound: usize) -> Result<CayleyBall> {
    enumerate_ball_with(
        p,
        radius,
        &BallOptions {
            depth_bound,
            ..BallOptions::default()
        },
    )
}

/// Breadth-first closure from the identity. Vertex ids follow BFS order with
/// generators taken in presentation order.
pub fn enumerate_ball_with(p: &Presentation, radius: usize, opts: &BallOptions) -> Result<CayleyBall> {
    let mut resolver: Box<dyn ProductResolver + '_> = if p.is_certified() {
        Box::new(NormalFormResolver { pres: p })
    } else {
        Box::new(SearchResolver {
            pres: p,
            depth_bound: opts.depth_bound,
            word_budget: opts.word_budget,
        })
    };

    let mut vertices = vec![Vertex {
        id: 0,
        repr: Word::empty(),
        len: 0,
    }];
    let mut known: HashMap<Word, VertexId> = HashMap::from([(Word::empty(), 0)]);
    let mut edges = Vec::new();
    let mut unresolved = Vec::new();

    let mut next = 0;
    while next < vertices.len() {
        let (repr, len) = (vertices[next].repr.clone(), vertices[next].len);
        for g in p.alphabet().gens() {
            let product = repr.push(g);
            let dst = match resolver.resolve(&product, &known, &vertices) {
                Resolution::Existing(id) => {
                    if !p.is_certified() {
                        known.entry(product).or_insert(id);
                    }
                    id
                }
                Resolution::New { .. } if len == radius => continue,
                Resolution::New { repr: nrepr, unresolved: u } => {
                    if vertices.len() >= opts.vertex_budget {
                        return Err(Error::BudgetExceeded {
                            what: "vertex",
                            budget: opts.vertex_budget,
                        });
                    }
                    let id = vertices.len();
                    if u {
                        unresolved.push(UnresolvedMerge {
                            vertex: id,
                            product: product.clone(),
                        });
                    }
                    known.insert(nrepr.clone(), id);
                    vertices.push(Vertex {
                        id,
                        repr: nrepr,
                        len: len + 1,
                    });
                    id
                }
            };
            edges.push(Edge { src: next, label: g, dst });
        }
        next += 1;
    }

    let certified = p.is_certified() && unresolved.is_empty();
    CayleyBall::from_parts(
        radius,
        p.alphabet().clone(),
        vertices,
        edges,
        certified,
        p.is_graded(),
        unresolved,
    )
}
