//! Strongly connected components (Green's R-classes) and Schützenberger graphs.

use crate::error::Result;

use super::{CayleyBall, Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted vertex ids.
    pub vertices: Vec<VertexId>,
    /// The component may be cut short by the ball boundary.
    pub approximate: bool,
}

/// Iterative Tarjan. Components come out sorted by smallest member.
pub fn strongly_connected_components(b: &CayleyBall) -> Vec<Component> {
    let n = b.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    let mut comps: Vec<Vec<VertexId>> = Vec::new();
    let mut counter = 0;

    // (vertex, position in its out-edge list)
    let mut call: Vec<(VertexId, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let (v, pos) = *top;
            let outs = b.out_edges(v);
            if pos < outs.len() {
                top.1 += 1;
                let w = b.edge(outs[pos]).dst;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }

    comps.sort_by_key(|c| c[0]);
    comps
        .into_iter()
        .map(|vertices| {
            let approximate = !b.is_graded()
                && vertices.iter().any(|&v| {
                    b.is_frontier(v) || b.out_edges(v).iter().any(|&e| b.is_frontier(b.edge(e).dst))
                });
            Component { vertices, approximate }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubDigraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub approximate: bool,
}

/// The induced labelled subgraph on the strongly connected component of `h`.
pub fn schutzenberger_graph(b: &CayleyBall, h: VertexId) -> Result<SubDigraph> {
    b.vertex(h)?;
    let comp = strongly_connected_components(b)
        .into_iter()
        .find(|c| c.vertices.binary_search(&h).is_ok())
        .expect("every vertex lies in a component");
    let edges = b
        .edges()
        .iter()
        .filter(|e| comp.vertices.binary_search(&e.src).is_ok() && comp.vertices.binary_search(&e.dst).is_ok())
        .copied()
        .collect();
    Ok(SubDigraph {
        vertices: comp.vertices,
        edges,
        approximate: comp.approximate,
    })
}
