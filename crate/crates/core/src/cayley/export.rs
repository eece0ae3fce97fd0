//! JSON and DOT renderings of balls.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Alphabet;

use super::{CayleyBall, Edge, Vertex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: VertexId,
    pub repr: String,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: VertexId,
    pub label: String,
    pub dst: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallJson {
    pub radius: usize,
    pub certified: bool,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub frontier: Vec<VertexId>,
}

impl BallJson {
    pub fn from_ball(b: &CayleyBall) -> Self {
        BallJson {
            radius: b.radius(),
            certified: b.is_certified(),
            vertices: b
                .vertices()
                .iter()
                .map(|v| VertexJson {
                    id: v.id,
                    repr: b.alphabet().render_tokens(&v.repr),
                    len: v.len,
                })
                .collect(),
            edges: b
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    src: e.src,
                    label: b.alphabet().name(e.label).to_string(),
                    dst: e.dst,
                })
                .collect(),
            frontier: b.frontier().to_vec(),
        }
    }
}

pub fn ball_to_json(b: &CayleyBall) -> String {
    serde_json::to_string(&BallJson::from_ball(b)).expect("ball serializes")
}

/// Rebuilds a ball from its JSON form over a known alphabet. The result is
/// never graded: the JSON schema does not carry that certificate.
pub fn ball_from_json(text: &str, alphabet: &Alphabet) -> Result<CayleyBall> {
    let j: BallJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let vertices = j
        .vertices
        .iter()
        .map(|v| {
            Ok(Vertex {
                id: v.id,
                repr: alphabet.parse_word(&v.repr)?,
                len: v.len,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = j
        .edges
        .iter()
        .map(|e| {
            Ok(Edge {
                src: e.src,
                label: alphabet
                    .index(&e.label)
                    .ok_or_else(|| Error::UndeclaredGenerator(e.label.clone()))?,
                dst: e.dst,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CayleyBall::from_parts(j.radius, alphabet.clone(), vertices, edges, j.certified, false, Vec::new())
}

pub fn ball_to_dot(b: &CayleyBall) -> String {
    let mut s = String::from("digraph ball {\n");
    for v in b.vertices() {
        let style = if b.is_frontier(v.id) { ", style=dashed" } else { "" };
        s.push_str(&format!("  {} [label=\"{}\"{}];\n", v.id, b.render(v.id), style));
    }
    for e in b.edges() {
        s.push_str(&format!(
            "  {} -> {} [label=\"{}\"];\n",
            e.src,
            e.dst,
            b.alphabet().name(e.label)
        ));
    }
    s.push_str("}\n");
    s
}
