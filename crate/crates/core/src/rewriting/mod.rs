//! Relation application, bounded equality search, confluent normal forms and
//! Dehn-function sampling.

mod dehn;

use std::collections::HashMap;

use serde::Serialize;

pub use dehn::{dehn_sample, dehn_sample_with_budget};

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Relation};
use crate::word::Word;

/// Default cap on words visited by one search.
pub const DEFAULT_WORD_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LhsToRhs,
    RhsToLhs,
}

/// Replaces the occurrence of one side of `r` at `position` by the other side.
pub fn apply_relation_once(w: &Word, r: &Relation, position: usize, direction: Direction) -> Result<Word> {
    let (from, to, side) = match direction {
        Direction::LhsToRhs => (&r.lhs, &r.rhs, "left"),
        Direction::RhsToLhs => (&r.rhs, &r.lhs, "right"),
    };
    if !w.occurs_at(from.symbols(), position) {
        return Err(Error::NotApplicable { side, position });
    }
    Ok(w.splice(position, from.len(), to.symbols()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Equal,
    NotEqual,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub status: Status,
    /// Minimal number of relation applications; present iff `Equal`.
    pub area: Option<usize>,
    pub depth_used: usize,
}

impl EqualityVerdict {
    fn not_equal(depth_used: usize) -> Self {
        EqualityVerdict {
            status: Status::NotEqual,
            area: None,
            depth_used,
        }
    }

    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }
}

/// Unique irreducible descendant of `w` under the declared orientation.
pub fn normal_form_confluent(w: &Word, p: &Presentation) -> Result<Word> {
    if !p.is_certified() {
        return Err(Error::NotConfluent(p.name().to_string()));
    }
    p.check_word(w)?;
    Ok(reduce(w, p))
}

pub(crate) fn reduce(w: &Word, p: &Presentation) -> Word {
    let mut cur = w.clone();
    while let Some(redex) = p.leftmost_redex(&cur) {
        cur = redex.apply(&cur);
    }
    cur
}

pub fn equality_search(u: &Word, v: &Word, p: &Presentation, depth_bound: usize) -> Result<EqualityVerdict> {
    equality_search_with_budget(u, v, p, depth_bound, DEFAULT_WORD_BUDGET)
}

/// Bidirectional breadth-first search over the undirected rewrite graph.
///
/// Layers are expanded whole, alternating towards the smaller frontier; the
/// first layer that meets the other side yields the exact minimum area.
/// When the word budget runs out the verdict is `Unknown` with `depth_used`
/// set to the depth actually completed.
pub fn equality_search_with_budget(
    u: &Word,
    v: &Word,
    p: &Presentation,
    depth_bound: usize,
    word_budget: usize,
) -> Result<EqualityVerdict> {
    p.check_word(u)?;
    p.check_word(v)?;
    if u == v {
        return Ok(EqualityVerdict {
            status: Status::Equal,
            area: Some(0),
            depth_used: 0,
        });
    }
    if p.is_certified() && reduce(u, p) != reduce(v, p) {
        return Ok(EqualityVerdict::not_equal(0));
    }

    let mut side_a = Side::new(u);
    let mut side_b = Side::new(v);
    let mut depth = 0;
    while depth < depth_bound {
        if side_a.frontier.is_empty() || side_b.frontier.is_empty() {
            // One equivalence class was exhausted without meeting the other word.
            return Ok(EqualityVerdict::not_equal(depth));
        }
        let (grow, other) = if side_a.frontier.len() <= side_b.frontier.len() {
            (&mut side_a, &side_b)
        } else {
            (&mut side_b, &side_a)
        };
        let met = grow.expand(p, other);
        depth += 1;
        if let Some(area) = met {
            return Ok(EqualityVerdict {
                status: Status::Equal,
                area: Some(area),
                depth_used: depth,
            });
        }
        if side_a.seen.len() + side_b.seen.len() > word_budget {
            return Ok(EqualityVerdict {
                status: Status::Unknown,
                area: None,
                depth_used: depth,
            });
        }
    }
    if side_a.frontier.is_empty() || side_b.frontier.is_empty() {
        return Ok(EqualityVerdict::not_equal(depth));
    }
    Ok(EqualityVerdict {
        status: Status::Unknown,
        area: None,
        depth_used: depth_bound,
    })
}

struct Side {
    seen: HashMap<Word, usize>,
    frontier: Vec<Word>,
    radius: usize,
}

impl Side {
    fn new(start: &Word) -> Self {
        Side {
            seen: HashMap::from([(start.clone(), 0)]),
            frontier: vec![start.clone()],
            radius: 0,
        }
    }

    fn expand(&mut self, p: &Presentation, other: &Side) -> Option<usize> {
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        let r = self.radius + 1;
        for w in &self.frontier {
            for n in p.neighbors(w) {
                if self.seen.contains_key(&n) {
                    continue;
                }
                if let Some(&d) = other.seen.get(&n) {
                    best = Some(best.map_or(r + d, |b| b.min(r + d)));
                }
                self.seen.insert(n.clone(), r);
                next.push(n);
            }
        }
        next.sort_by(|a, b| a.shortlex().cmp(&b.shortlex()));
        self.frontier = next;
        self.radius = r;
        best
    }
}
