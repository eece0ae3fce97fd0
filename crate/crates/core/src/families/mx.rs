//! The five-generator monoids M(X) = <a,b,c,d,e | a b^i c = a b^i d (i in X),
//! a b^j c = a b^j e (j not in X)>.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cayley::{CayleyBall, Edge, Vertex, VertexId, DEFAULT_VERTEX_BUDGET};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Redex, Relation, RuleOracle};
use crate::word::{Alphabet, Gen, Word};

use super::MembershipOracle;

pub const A: Gen = 0;
pub const B: Gen = 1;
pub const C: Gen = 2;
pub const D: Gen = 3;
pub const E: Gen = 4;

pub fn mx_alphabet() -> Alphabet {
    Alphabet::new(["a", "b", "c", "d", "e"]).expect("static alphabet")
}

fn check(w: &Word) -> Result<()> {
    match w.symbols().iter().find(|&&g| g > E) {
        Some(&g) => Err(Error::WrongAlphabet(g)),
        None => Ok(()),
    }
}

/// The letter that closes `a b^i` when `c` is rewritten.
fn closing(x: &dyn MembershipOracle, i: usize) -> Gen {
    if x.contains(i as u64) {
        D
    } else {
        E
    }
}

/// Length `i` of a trailing `a b^i`, if `w` ends that way.
fn trailing_ab(w: &[Gen]) -> Option<usize> {
    let bs = w.iter().rev().take_while(|&&g| g == B).count();
    (w.len() > bs && w[w.len() - bs - 1] == A).then_some(bs)
}

/// Every factor `a b^i t` with `t` in {c, d, e}: (start of the a, i, t).
fn closed_factors(w: &[Gen]) -> Vec<(usize, usize, Gen)> {
    let mut out = Vec::new();
    let mut run: Option<(usize, usize)> = None;
    for (pos, &g) in w.iter().enumerate() {
        run = match (g, run) {
            (A, _) => Some((pos, 0)),
            (B, Some((s, i))) => Some((s, i + 1)),
            (t @ (C | D | E), Some((s, i))) => {
                out.push((s, i, t));
                None
            }
            _ => None,
        };
    }
    out
}

/// The oriented rule family as a leftmost-match oracle.
#[derive(Debug, Clone)]
pub struct MxRules {
    x: Arc<dyn MembershipOracle>,
}

impl MxRules {
    pub fn new(x: Arc<dyn MembershipOracle>) -> Self {
        MxRules { x }
    }
}

impl RuleOracle for MxRules {
    fn describe(&self) -> String {
        format!("mx({})", self.x.spec())
    }

    fn leftmost_redex(&self, w: &Word) -> Option<Redex> {
        let (start, i, _) = closed_factors(w.symbols()).into_iter().find(|&(_, _, t)| t == C)?;
        let mut replacement = vec![A];
        replacement.extend(std::iter::repeat_n(B, i));
        replacement.push(closing(self.x.as_ref(), i));
        Some(Redex {
            position: start,
            len: i + 2,
            replacement: Word(replacement),
        })
    }

    fn neighbors(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        for (start, i, t) in closed_factors(w.symbols()) {
            let last = start + i + 1;
            let partner = closing(self.x.as_ref(), i);
            match t {
                C => out.push(w.splice(last, 1, &[partner])),
                t if t == partner => out.push(w.splice(last, 1, &[C])),
                _ => {}
            }
        }
        out
    }

    fn is_homogeneous(&self) -> bool {
        true
    }
}

pub fn mx_presentation(x: Arc<dyn MembershipOracle>) -> Presentation {
    let name = format!("mx({})", x.spec());
    Presentation::oracle(name, mx_alphabet(), Arc::new(MxRules::new(x)))
}

/// The explicit relations with `i <= max_i`, without a confluence claim.
pub fn mx_truncated_presentation(x: &dyn MembershipOracle, max_i: usize) -> Presentation {
    let rels = (0..=max_i)
        .map(|i| {
            let mut lhs = vec![A];
            lhs.extend(std::iter::repeat_n(B, i));
            let mut rhs = lhs.clone();
            lhs.push(C);
            rhs.push(closing(x, i));
            Relation::new(Word(lhs), Word(rhs))
        })
        .collect();
    Presentation::finite(format!("mx({})<={max_i}", x.spec()), mx_alphabet(), rels).expect("relations over the alphabet")
}

/// A word with no factor `a b^i c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MxNormalForm(Word);

impl MxNormalForm {
    pub fn new(w: Word) -> Result<Self> {
        check(&w)?;
        if is_mx_normal_form(&w) {
            Ok(MxNormalForm(w))
        } else {
            Err(Error::Parse(format!("`{}` contains a factor a b^i c", mx_alphabet().render(&w))))
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

pub fn is_mx_normal_form(w: &Word) -> bool {
    closed_factors(w.symbols()).iter().all(|&(_, _, t)| t != C)
}

/// Single left-to-right pass. Also returns the total unary weight of the
/// membership queries made, which never exceeds `|w|`.
pub fn mx_normal_form_traced(w: &Word, x: &dyn MembershipOracle) -> Result<(MxNormalForm, usize)> {
    check(w)?;
    let mut out = Vec::with_capacity(w.len());
    let mut run: Option<usize> = None;
    let mut weight = 0;
    for &g in w.symbols() {
        let emitted = match (g, run) {
            (C, Some(i)) => {
                weight += i;
                closing(x, i)
            }
            _ => g,
        };
        run = match (g, run) {
            (A, _) => Some(0),
            (B, Some(i)) => Some(i + 1),
            _ => None,
        };
        out.push(emitted);
    }
    Ok((MxNormalForm(Word(out)), weight))
}

pub fn mx_normal_form(w: &Word, x: &dyn MembershipOracle) -> Result<MxNormalForm> {
    mx_normal_form_traced(w, x).map(|(nf, _)| nf)
}

pub fn mx_word_problem(u: &Word, v: &Word, x: &dyn MembershipOracle) -> Result<bool> {
    Ok(mx_normal_form(u, x)? == mx_normal_form(v, x)?)
}

/// Normal forms of `u·s` for the generators s, in generator order: four of
/// them when `u` ends in `a b^i` (since `uc` reduces onto `ud` or `ue`), five otherwise.
pub fn mx_successors(u: &MxNormalForm) -> Vec<MxNormalForm> {
    let skip_c = trailing_ab(u.0.symbols()).is_some();
    (A..=E)
        .filter(|&g| !(skip_c && g == C))
        .map(|g| MxNormalForm(u.0.push(g)))
        .collect()
}

pub fn mx_ball(x: &dyn MembershipOracle, radius: usize) -> Result<CayleyBall> {
    mx_ball_with_budget(x, radius, DEFAULT_VERTEX_BUDGET)
}

/// Layered successor closure. Vertex ids depend only on the normal forms,
/// not on X; X only decides where each `c`-edge lands.
pub fn mx_ball_with_budget(x: &dyn MembershipOracle, radius: usize, budget: usize) -> Result<CayleyBall> {
    let mut vertices = vec![Vertex {
        id: 0,
        repr: Word::empty(),
        len: 0,
    }];
    let mut index: HashMap<Word, VertexId> = HashMap::from([(Word::empty(), 0)]);
    let mut next = 0;
    while next < vertices.len() {
        let v = vertices[next].clone();
        next += 1;
        if v.len == radius {
            continue;
        }
        for s in mx_successors(&MxNormalForm(v.repr.clone())) {
            if vertices.len() >= budget {
                return Err(Error::BudgetExceeded { what: "vertex", budget });
            }
            let id = vertices.len();
            index.insert(s.0.clone(), id);
            vertices.push(Vertex {
                id,
                repr: s.0,
                len: v.len + 1,
            });
        }
    }
    let mut edges = Vec::new();
    for v in vertices.iter().filter(|v| v.len < radius) {
        for g in A..=E {
            let target = match (g, trailing_ab(v.repr.symbols())) {
                (C, Some(i)) => v.repr.push(closing(x, i)),
                _ => v.repr.push(g),
            };
            edges.push(Edge {
                src: v.id,
                label: g,
                dst: index[&target],
            });
        }
    }
    CayleyBall::from_parts(radius, mx_alphabet(), vertices, edges, true, true, Vec::new())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryReport {
    /// The identity on normal forms is an isomorphism of the unlabelled digraphs.
    pub pass: bool,
    /// First vertex whose out-neighbour sets disagree, if any.
    pub counterexample: Option<VertexId>,
    pub labels_differ: bool,
}

pub fn mx_isometry_check(x: &dyn MembershipOracle, y: &dyn MembershipOracle, radius: usize) -> Result<IsometryReport> {
    let bx = mx_ball(x, radius)?;
    let by = mx_ball(y, radius)?;
    let counterexample = if bx.vertices() != by.vertices() {
        Some(
            bx.vertices()
                .iter()
                .zip(by.vertices())
                .position(|(a, b)| a != b)
                .unwrap_or(bx.len().min(by.len())),
        )
    } else {
        (0..bx.len()).find(|&v| targets(&bx, v) != targets(&by, v))
    };
    Ok(IsometryReport {
        pass: counterexample.is_none(),
        counterexample,
        labels_differ: bx.edges() != by.edges(),
    })
}

fn targets(b: &CayleyBall, v: VertexId) -> Vec<VertexId> {
    let mut t: Vec<VertexId> = b.out_edges(v).iter().map(|&e| b.edge(e).dst).collect();
    t.sort_unstable();
    t.dedup();
    t
}
